#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "csspapr/modem.hpp"
#include "csspapr/partition.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace csspapr;

namespace {

std::vector<int> owners_of(const PartitionPattern& p, int v) {
    std::vector<int> owned;
    for (int k = 0; k < p.n; ++k) {
        if (p.assignment[static_cast<std::size_t>(k)] == v) owned.push_back(k);
    }
    return owned;
}

void check_balance(const PartitionPattern& p) {
    std::vector<int> sizes(static_cast<std::size_t>(p.v_count), 0);
    for (int v : p.assignment) {
        REQUIRE(v >= 1);
        REQUIRE(v <= p.v_count);
        ++sizes[static_cast<std::size_t>(v - 1)];
    }
    for (int s : sizes) CHECK(s == p.n / p.v_count);
}

}  // namespace

TEST_SUITE("partition") {

TEST_CASE("interleaved assignment follows k mod V") {
    PartitionPattern p = interleaved_pattern(8, 2);
    CHECK(owners_of(p, 1) == std::vector<int>{0, 2, 4, 6});
    CHECK(owners_of(p, 2) == std::vector<int>{1, 3, 5, 7});

    PartitionPattern tiny = interleaved_pattern(4, 4);
    for (int v = 1; v <= 4; ++v) CHECK(owners_of(tiny, v).size() == 1);

    PartitionPattern big = interleaved_pattern(128, 4);
    std::vector<int> expect;
    for (int k = 0; k < 128; k += 4) expect.push_back(k);
    CHECK(owners_of(big, 1) == expect);
}

TEST_CASE("adjacent assignment fills contiguous blocks") {
    PartitionPattern p = adjacent_pattern(8, 2);
    CHECK(owners_of(p, 1) == std::vector<int>{0, 1, 2, 3});

    PartitionPattern mid = adjacent_pattern(32, 2);
    for (int k = 0; k < 16; ++k) CHECK(mid.assignment[k] == 1);
    for (int k = 16; k < 32; ++k) CHECK(mid.assignment[k] == 2);

    PartitionPattern big = adjacent_pattern(128, 4);
    std::vector<int> expect;
    for (int k = 64; k < 96; ++k) expect.push_back(k);
    CHECK(owners_of(big, 3) == expect);
}

TEST_CASE("random patterns are balanced and seed-deterministic") {
    PartitionPattern a = random_pattern(64, 4, 9);
    PartitionPattern b = random_pattern(64, 4, 9);
    CHECK(a.assignment == b.assignment);

    bool any_differs = false;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        PartitionPattern p = random_pattern(64, 4, seed);
        check_balance(p);
        if (p.assignment != a.assignment) any_differs = true;
    }
    CHECK(any_differs);
}

TEST_CASE("all three kinds are balanced across sizes") {
    for (int n : {4, 16, 128, 512}) {
        for (int v = 1; v <= n && v <= 16; v *= 2) {
            check_balance(interleaved_pattern(n, v));
            check_balance(adjacent_pattern(n, v));
            check_balance(random_pattern(n, v, 3));
        }
    }
}

TEST_CASE("dimension validation rejects bad shapes") {
    CHECK_THROWS_AS(interleaved_pattern(12, 2), std::invalid_argument);
    CHECK_THROWS_AS(adjacent_pattern(16, 3), std::invalid_argument);
    CHECK_THROWS_AS(random_pattern(8, 16, 1), std::invalid_argument);
    CHECK_THROWS_AS(interleaved_pattern(0, 1), std::invalid_argument);
}

TEST_CASE("length-31 LFSR sequence padded to 32 matches the reference bits") {
    const std::vector<int> expect = {1, 0, 0, 1, 0, 1, 1, 0, 0, 1, 1,
                                     1, 1, 1, 0, 0, 0, 1, 1, 0, 1, 1,
                                     1, 0, 1, 0, 1, 0, 0, 0, 0, 0};
    PartitionPattern p = msequence_pattern(32);
    REQUIRE(p.n == 32);
    REQUIRE(p.v_count == 2);
    for (int k = 0; k < 32; ++k) {
        CHECK(p.assignment[static_cast<std::size_t>(k)] ==
              (expect[static_cast<std::size_t>(k)] ? 1 : 2));
    }
    check_balance(p);
}

TEST_CASE("maximal-length sequences have full period and near-balance") {
    for (int degree = 2; degree <= 10; ++degree) {
        std::vector<int> s = lfsr_msequence(degree);
        int period = (1 << degree) - 1;
        REQUIRE(static_cast<int>(s.size()) == period);
        int ones = 0;
        for (int bit : s) ones += bit;
        CHECK(ones == (1 << (degree - 1)));
        // every cyclic degree-wide window is distinct and nonzero
        std::set<std::vector<int>> windows;
        for (int start = 0; start < period; ++start) {
            std::vector<int> w(static_cast<std::size_t>(degree));
            bool nonzero = false;
            for (int i = 0; i < degree; ++i) {
                w[static_cast<std::size_t>(i)] =
                    s[static_cast<std::size_t>((start + i) % period)];
                nonzero = nonzero || w[static_cast<std::size_t>(i)] != 0;
            }
            CHECK(nonzero);
            windows.insert(w);
        }
        CHECK(static_cast<int>(windows.size()) == period);
    }
    CHECK_THROWS_AS(lfsr_msequence(1), std::invalid_argument);
    CHECK_THROWS_AS(lfsr_msequence(11), std::invalid_argument);
}

TEST_CASE("split zeroes non-members and reconstructs the input") {
    Rng rng(21);
    for (int rep = 0; rep < 100; ++rep) {
        CSeq symbols = oracle::random_complex(rng, 32);
        PartitionPattern p = random_pattern(32, 4, rng.next());
        std::vector<CSeq> blocks = split(symbols, p);
        REQUIRE(blocks.size() == 4);
        CSeq sum(symbols.size(), cplx(0.0, 0.0));
        for (const CSeq& b : blocks) {
            int zeros = 0;
            for (const auto& z : b) {
                if (z == cplx(0.0, 0.0)) ++zeros;
            }
            CHECK(zeros >= 32 - 32 / 4);
            for (std::size_t i = 0; i < b.size(); ++i) sum[i] += b[i];
        }
        CHECK(sum == symbols);
    }
}

TEST_CASE("degenerate split with one subblock is the identity") {
    Rng rng(33);
    CSeq symbols = oracle::random_complex(rng, 16);
    std::vector<CSeq> blocks = split(symbols, interleaved_pattern(16, 1));
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0] == symbols);
}

TEST_CASE("interleaved split of all-ones alternates") {
    CSeq ones(8, cplx(1.0, 0.0));
    std::vector<CSeq> blocks = split(ones, interleaved_pattern(8, 2));
    CSeq expect = {{1, 0}, {0, 0}, {1, 0}, {0, 0}, {1, 0}, {0, 0}, {1, 0}, {0, 0}};
    CHECK(blocks[0] == expect);
}

TEST_CASE("split rejects mismatched lengths") {
    CSeq symbols(8, cplx(1.0, 0.0));
    CHECK_THROWS_AS(split(symbols, interleaved_pattern(16, 2)),
                    std::invalid_argument);
}

TEST_CASE("pattern CSV round trip preserves assignment and kind") {
    for (const PartitionPattern& p :
         {interleaved_pattern(16, 4), adjacent_pattern(16, 4),
          random_pattern(16, 4, 77)}) {
        std::stringstream ss;
        write_pattern_csv(p, ss);
        PartitionPattern back = read_pattern_csv(ss);
        CHECK(back.assignment == p.assignment);
        CHECK(back.n == p.n);
        CHECK(back.v_count == p.v_count);
        CHECK(back.kind == p.kind);
    }
}

TEST_CASE("pattern CSV rejects gaps, imbalance, and junk") {
    std::istringstream gap("0,1\n2,2\n");
    CHECK_THROWS_AS(read_pattern_csv(gap), std::runtime_error);
    std::istringstream unbalanced("0,1\n1,1\n2,1\n3,2\n");
    CHECK_THROWS_AS(read_pattern_csv(unbalanced), std::runtime_error);
    std::istringstream junk("0,1\nnope\n");
    CHECK_THROWS_AS(read_pattern_csv(junk), std::runtime_error);
}

TEST_CASE("partition kind strings round trip") {
    for (PartitionKind kind : {PartitionKind::interleaved,
                               PartitionKind::adjacent, PartitionKind::random}) {
        CHECK(partition_kind_from_string(to_string(kind)) == kind);
    }
    CHECK_THROWS_AS(partition_kind_from_string("diagonal"),
                    std::invalid_argument);
}

}  // TEST_SUITE
