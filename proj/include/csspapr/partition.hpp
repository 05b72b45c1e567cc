#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "csspapr/spectral.hpp"

namespace csspapr {

enum class PartitionKind { interleaved, adjacent, random };

std::string to_string(PartitionKind kind);
PartitionKind partition_kind_from_string(const std::string& s);

// Assignment of n subcarriers to v_count disjoint, equally sized subblocks.
// Subblock indices are 1-based.
struct PartitionPattern {
    int n = 0;
    int v_count = 0;
    std::vector<int> assignment;
    PartitionKind kind = PartitionKind::random;
};

// subcarrier k -> subblock (k mod V) + 1
PartitionPattern interleaved_pattern(int n, int v_count);

// subcarrier k -> subblock floor(k / (N/V)) + 1
PartitionPattern adjacent_pattern(int n, int v_count);

// Balanced seeded shuffle: exactly N/V subcarriers per subblock.
PartitionPattern random_pattern(int n, int v_count, std::uint64_t seed);

// Random-kind pattern for V=2 whose first subblock is a maximal-length LFSR
// sequence of length n-1 padded with one trailing zero. n = 2^k, 2 <= k <= 10.
PartitionPattern msequence_pattern(int n);

// Maximal-length binary sequence of period 2^degree - 1, degree in [2, 10].
std::vector<int> lfsr_msequence(int degree);

// X_v(k) = X(k) when assignment(k) == v, else 0; returns V length-N vectors.
std::vector<CSeq> split(const CSeq& symbols, const PartitionPattern& p);

// "k,v" CSV, one line per subcarrier, for audit and replay.
void write_pattern_csv(const PartitionPattern& p, std::ostream& os);
PartitionPattern read_pattern_csv(std::istream& is);

}  // namespace csspapr
