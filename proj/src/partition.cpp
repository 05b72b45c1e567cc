#include "csspapr/partition.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "csspapr/modem.hpp"

namespace csspapr {

std::string to_string(PartitionKind kind) {
    switch (kind) {
        case PartitionKind::interleaved: return "interleaved";
        case PartitionKind::adjacent: return "adjacent";
        case PartitionKind::random: return "random";
    }
    return "?";
}

PartitionKind partition_kind_from_string(const std::string& s) {
    if (s == "interleaved") return PartitionKind::interleaved;
    if (s == "adjacent") return PartitionKind::adjacent;
    if (s == "random") return PartitionKind::random;
    throw std::invalid_argument("unknown partition kind: " + s);
}

namespace {

void check_dimensions(int n, int v_count) {
    if (n < 1 || v_count < 1 || !is_power_of_two(static_cast<std::size_t>(n)) ||
        !is_power_of_two(static_cast<std::size_t>(v_count)) || v_count > n) {
        throw std::invalid_argument(
            "partition dimensions must be powers of two with v_count <= n");
    }
}

}  // namespace

PartitionPattern interleaved_pattern(int n, int v_count) {
    check_dimensions(n, v_count);
    PartitionPattern p{n, v_count, std::vector<int>(static_cast<std::size_t>(n)),
                       PartitionKind::interleaved};
    for (int k = 0; k < n; ++k) p.assignment[k] = k % v_count + 1;
    return p;
}

PartitionPattern adjacent_pattern(int n, int v_count) {
    check_dimensions(n, v_count);
    PartitionPattern p{n, v_count, std::vector<int>(static_cast<std::size_t>(n)),
                       PartitionKind::adjacent};
    const int width = n / v_count;
    for (int k = 0; k < n; ++k) p.assignment[k] = k / width + 1;
    return p;
}

PartitionPattern random_pattern(int n, int v_count, std::uint64_t seed) {
    check_dimensions(n, v_count);
    PartitionPattern p{n, v_count, std::vector<int>(static_cast<std::size_t>(n)),
                       PartitionKind::random};
    const int per_block = n / v_count;
    for (int k = 0; k < n; ++k) p.assignment[k] = k / per_block + 1;
    Rng rng(seed);
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i + 1)));
        std::swap(p.assignment[i], p.assignment[j]);
    }
    return p;
}

std::vector<int> lfsr_msequence(int degree) {
    if (degree < 2 || degree > 10) {
        throw std::invalid_argument("lfsr_msequence: degree must be in [2, 10]");
    }
    // Recurrence tap distances per degree; s[k] = XOR of s[k - d] over taps.
    static const std::vector<std::vector<int>> kTaps = {
        {1, 2}, {1, 3}, {1, 4}, {3, 5}, {1, 6}, {1, 7}, {4, 5, 6, 8}, {4, 9}, {3, 10},
    };
    static const std::vector<std::vector<int>> kSeeds = {
        {1, 0}, {1, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 1, 0},
        {1, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0, 0},
        {1, 0, 0, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    };
    const auto& taps = kTaps[static_cast<std::size_t>(degree - 2)];
    std::vector<int> s = kSeeds[static_cast<std::size_t>(degree - 2)];
    const int period = (1 << degree) - 1;
    s.reserve(static_cast<std::size_t>(period));
    for (int k = degree; k < period; ++k) {
        int fb = 0;
        for (int d : taps) fb ^= s[static_cast<std::size_t>(k - d)];
        s.push_back(fb);
    }
    return s;
}

PartitionPattern msequence_pattern(int n) {
    check_dimensions(n, 2);
    int degree = 0;
    while ((1 << degree) < n) ++degree;
    const std::vector<int> seq = lfsr_msequence(degree);
    PartitionPattern p{n, 2, std::vector<int>(static_cast<std::size_t>(n)),
                       PartitionKind::random};
    for (int k = 0; k < n - 1; ++k) p.assignment[k] = seq[k] ? 1 : 2;
    p.assignment[static_cast<std::size_t>(n - 1)] = 2;  // pad bit
    return p;
}

std::vector<CSeq> split(const CSeq& symbols, const PartitionPattern& p) {
    if (static_cast<int>(symbols.size()) != p.n) {
        throw std::invalid_argument("split: sequence length does not match pattern");
    }
    std::vector<CSeq> blocks(static_cast<std::size_t>(p.v_count),
                             CSeq(symbols.size(), cplx{0.0, 0.0}));
    for (int k = 0; k < p.n; ++k) {
        blocks[static_cast<std::size_t>(p.assignment[k] - 1)][k] = symbols[k];
    }
    return blocks;
}

void write_pattern_csv(const PartitionPattern& p, std::ostream& os) {
    for (int k = 0; k < p.n; ++k) {
        os << k << ',' << p.assignment[k] << '\n';
    }
}

PartitionPattern read_pattern_csv(std::istream& is) {
    PartitionPattern p;
    std::string line;
    int expect_k = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int k = 0, v = 0;
        char comma = 0;
        if (!(ls >> k >> comma >> v) || comma != ',' || k != expect_k || v < 1) {
            throw std::runtime_error("pattern CSV: bad line: " + line);
        }
        p.assignment.push_back(v);
        p.v_count = std::max(p.v_count, v);
        ++expect_k;
    }
    p.n = static_cast<int>(p.assignment.size());
    check_dimensions(p.n, p.v_count);
    const int per_block = p.n / p.v_count;
    std::vector<int> sizes(static_cast<std::size_t>(p.v_count), 0);
    for (int v : p.assignment) ++sizes[static_cast<std::size_t>(v - 1)];
    for (int s : sizes) {
        if (s != per_block) throw std::runtime_error("pattern CSV: unbalanced subblocks");
    }
    // recover the kind so closed-form comparisons pick the right formula
    p.kind = PartitionKind::random;
    if (p.assignment == interleaved_pattern(p.n, p.v_count).assignment) {
        p.kind = PartitionKind::interleaved;
    } else if (p.assignment == adjacent_pattern(p.n, p.v_count).assignment) {
        p.kind = PartitionKind::adjacent;
    }
    return p;
}

}  // namespace csspapr
