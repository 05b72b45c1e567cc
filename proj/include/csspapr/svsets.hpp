#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "csspapr/css.hpp"
#include "csspapr/partition.hpp"

namespace csspapr {

// One coincidence found by a criterion check: within the SV-set pair (i, j),
// subblocks v and w produced the same relative distance. Indices 1-based.
struct CriterionViolation {
    int set_i = 0;
    int set_j = 0;
    int subblock_v = 0;
    int subblock_w = 0;
    int distance = 0;
};

struct CriterionReport {
    bool satisfied = true;
    std::vector<CriterionViolation> violations;
};

// How well a collection spreads the mutual differences of its relative
// distances around the circle; both fields grow toward n/2 as the spread
// improves, and larger is better.
struct Criterion3Score {
    int min_circular_gap = 0;
    double mean_circular_gap = 0.0;
};

// Lexicographic (min, then mean); true when a scores worse than b.
bool score_less(const Criterion3Score& a, const Criterion3Score& b);

// r_v = (a_v - b_v) mod modulus for every subblock v.
std::vector<int> relative_distances(const SvSet& a, const SvSet& b, int modulus);

// For every set pair (i < j), the V relative distances mod n must be
// pairwise distinct.
CriterionReport check_criterion1(const SvCollection& c);

// Same check with modulus n / v_count.
CriterionReport check_criterion2(const SvCollection& c);

// Requires check_criterion1 to pass (throws std::invalid_argument otherwise).
// For every pair (i < j) and every subblock pair v < w, takes the circular
// magnitude d = min(delta, n - delta) of delta = (r_v - r_w) mod n; reports
// the minimum and the mean of all d.
Criterion3Score criterion3_score(const SvCollection& c);

// Random-restart search for a collection passing the criterion that matches
// the partition kind (random/adjacent -> distinct mod n, interleaved ->
// distinct mod n/V). The first set is always all-zeros. For adjacent
// partitions the best-scoring valid proposal out of `iterations` wins;
// otherwise the first valid proposal is returned. Deterministic given seed.
// Throws std::runtime_error when no proposal is valid within `iterations`.
SvCollection search_sv_collection(int n, int v_count, int u_count,
                                  PartitionKind partition_kind, std::uint64_t seed,
                                  long iterations);

// File format: header "n=<N>,v=<V>", then one comma-separated SV set per line.
SvCollection read_sv_collection(std::istream& is);
void write_sv_collection(const SvCollection& c, std::ostream& os);

}  // namespace csspapr
