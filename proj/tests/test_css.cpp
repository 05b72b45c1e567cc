#include <cmath>
#include <stdexcept>

#include "csspapr/css.hpp"
#include "csspapr/modem.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace csspapr;

namespace {

constexpr double kTol = 1e-9;

SvCollection collection_128_4() {
    SvCollection c;
    c.n = 128;
    c.v_count = 4;
    c.sets = {SvSet{{0, 0, 0, 0}}, SvSet{{0, 8, 16, 24}},
              SvSet{{0, 16, 32, 48}}, SvSet{{0, 24, 48, 72}}};
    return c;
}

SvCollection random_collection(Rng& rng, int n, int v_count, int u_count) {
    SvCollection c;
    c.n = n;
    c.v_count = v_count;
    c.sets.push_back(zero_sv_set(v_count));
    for (int u = 1; u < u_count; ++u) {
        SvSet s;
        for (int v = 0; v < v_count; ++v) {
            s.shifts.push_back(
                static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
        }
        c.sets.push_back(s);
    }
    return c;
}

}  // namespace

TEST_SUITE("css") {

TEST_CASE("subblock signals sum to the plain transform") {
    Rng rng(3);
    for (int rep = 0; rep < 50; ++rep) {
        CSeq symbols = oracle::random_complex(rng, 32);
        PartitionPattern p = random_pattern(32, 4, rng.next());
        std::vector<CSeq> blocks = subblock_signals(symbols, p);
        CSeq sum(symbols.size(), cplx(0.0, 0.0));
        for (const CSeq& b : blocks) {
            for (std::size_t i = 0; i < b.size(); ++i) sum[i] += b[i];
        }
        CHECK(oracle::max_abs_diff(sum, idft(symbols)) < kTol);
    }
}

TEST_CASE("single subblock is the plain transform") {
    Rng rng(4);
    CSeq symbols = oracle::random_complex(rng, 16);
    std::vector<CSeq> blocks =
        subblock_signals(symbols, interleaved_pattern(16, 1));
    REQUIRE(blocks.size() == 1);
    CHECK(oracle::max_abs_diff(blocks[0], idft(symbols)) < kTol);
}

TEST_CASE("per-subblock Parseval holds for any pattern") {
    Rng rng(5);
    for (int rep = 0; rep < 30; ++rep) {
        CSeq symbols = oracle::random_complex(rng, 16);
        PartitionPattern p = random_pattern(16, 4, rng.next());
        std::vector<CSeq> freq = split(symbols, p);
        std::vector<CSeq> time = subblock_signals(symbols, p);
        for (std::size_t v = 0; v < 4; ++v) {
            CHECK(std::fabs(energy(time[v]) - energy(freq[v])) < kTol);
        }
    }
}

TEST_CASE("zero shifts reproduce the combined signal") {
    Rng rng(6);
    CSeq symbols = oracle::random_complex(rng, 64);
    PartitionPattern p = adjacent_pattern(64, 4);
    std::vector<CSeq> blocks = subblock_signals(symbols, p);
    CSeq candidate = make_candidate(blocks, zero_sv_set(4));
    CSeq manual(64, cplx(0.0, 0.0));
    for (const CSeq& b : blocks) {
        for (std::size_t i = 0; i < b.size(); ++i) manual[i] += b[i];
    }
    CHECK(candidate == manual);
    CHECK(oracle::max_abs_diff(candidate, idft(symbols)) < kTol);
}

TEST_CASE("adding a common shift rotates the whole candidate, exactly") {
    Rng rng(8);
    for (int rep = 0; rep < 100; ++rep) {
        CSeq symbols = oracle::random_complex(rng, 16);
        PartitionPattern p = random_pattern(16, 2, rng.next());
        std::vector<CSeq> blocks = subblock_signals(symbols, p);
        int t0 = static_cast<int>(rng.below(16));
        int t1 = static_cast<int>(rng.below(16));
        int c = static_cast<int>(rng.below(16));
        CSeq base = make_candidate(blocks, SvSet{{t0, t1}});
        CSeq moved =
            make_candidate(blocks, SvSet{{(t0 + c) % 16, (t1 + c) % 16}});
        CHECK(moved == cyclic_shift_left(base, c));
    }
}

TEST_CASE("every candidate keeps the original energy") {
    Rng rng(9);
    for (int rep = 0; rep < 100; ++rep) {
        CSeq symbols = oracle::random_complex(rng, 64);
        PartitionPattern p = random_pattern(64, 4, rng.next());
        std::vector<CSeq> blocks = subblock_signals(symbols, p);
        double reference = energy(make_candidate(blocks, zero_sv_set(4)));
        SvSet tau;
        for (int v = 0; v < 4; ++v) {
            tau.shifts.push_back(static_cast<int>(rng.below(64)));
        }
        CHECK(std::fabs(energy(make_candidate(blocks, tau)) - reference) < kTol);
    }
}

TEST_CASE("selection with the identity-only collection changes nothing") {
    Rng rng(10);
    CSeq symbols = random_symbol_sequence(rng.next(), 128);
    PartitionPattern p = random_pattern(128, 4, 1);
    SvCollection c;
    c.n = 128;
    c.v_count = 4;
    c.sets = {zero_sv_set(4)};
    CandidateResult r = select_min_papr(symbols, p, c);
    CSeq original = idft(symbols);
    CHECK(r.index == 1);
    CHECK(r.papr_db ==
          doctest::Approx(papr_db(original, mean_power(original))).epsilon(1e-12));
}

TEST_CASE("selected PAPR never exceeds the unshifted candidate's") {
    Rng rng(12);
    SvCollection c = collection_128_4();
    PartitionPattern p = random_pattern(128, 4, 2);
    for (int rep = 0; rep < 50; ++rep) {
        CSeq symbols = random_symbol_sequence(rng.next(), 128);
        std::vector<CSeq> blocks = subblock_signals(symbols, p);
        CSeq original = make_candidate(blocks, zero_sv_set(4));
        double ref = mean_power(original);
        CandidateResult r = select_min_papr_over(blocks, c, ref);
        CHECK(r.papr_db <= papr_db(original, ref));
    }
}

TEST_CASE("selection matches the exhaustive oracle with tie-breaking") {
    Rng rng(14);
    for (int rep = 0; rep < 100; ++rep) {
        CSeq symbols = random_symbol_sequence(rng.next(), 8);
        PartitionPattern p = interleaved_pattern(8, 2);
        SvCollection c = random_collection(rng, 8, 2, 4);
        std::vector<CSeq> blocks = subblock_signals(symbols, p);
        CSeq original = make_candidate(blocks, zero_sv_set(2));
        double ref = mean_power(original);
        CandidateResult fast = select_min_papr_over(blocks, c, ref);
        CHECK(fast.index == oracle::select_min_papr_naive(blocks, c, ref));
        CHECK(fast.papr_db == doctest::Approx(papr_db(fast.signal, ref)));
    }
}

TEST_CASE("selection validates dimensions") {
    CSeq symbols = random_symbol_sequence(1, 64);
    SvCollection c = collection_128_4();
    CHECK_THROWS_AS(select_min_papr(symbols, random_pattern(64, 4, 1), c),
                    std::invalid_argument);
    SvCollection bad = c;
    bad.sets[1].shifts[2] = 128;
    CHECK_THROWS_AS(
        select_min_papr(random_symbol_sequence(1, 128),
                        random_pattern(128, 4, 1), bad),
        std::invalid_argument);
    bad = c;
    bad.sets[1].shifts.pop_back();
    CHECK_THROWS_AS(validate_collection(bad), std::invalid_argument);
    CHECK_THROWS_AS(validate_collection(SvCollection{}), std::invalid_argument);
}

TEST_CASE("shifts preserve subblock spectra up to a linear phase") {
    Rng rng(15);
    CSeq symbols = oracle::random_complex(rng, 32);
    PartitionPattern p = interleaved_pattern(32, 4);
    std::vector<CSeq> blocks = subblock_signals(symbols, p);
    SvSet tau{{3, 11, 20, 27}};
    CSeq spectrum = dft(make_candidate(blocks, tau));
    for (int k = 0; k < 32; ++k) {
        int v = p.assignment[static_cast<std::size_t>(k)];
        double angle = 2.0 * oracle::kPi * static_cast<double>(k) *
                       tau.shifts[static_cast<std::size_t>(v - 1)] / 32.0;
        cplx expected =
            symbols[static_cast<std::size_t>(k)] * std::polar(1.0, angle);
        CHECK(std::abs(spectrum[static_cast<std::size_t>(k)] - expected) < kTol);
    }
}

TEST_CASE("side information bit count") {
    CHECK(side_info_bits(4) == 2);
    CHECK(side_info_bits(1) == 0);
    CHECK(side_info_bits(5) == 3);
    CHECK(side_info_bits(2) == 1);
    CHECK_THROWS_AS(side_info_bits(0), std::invalid_argument);
}

TEST_CASE("rotation baseline: identity, global phase, energy") {
    Rng rng(16);
    CSeq symbols = oracle::random_complex(rng, 64);
    PartitionPattern p = adjacent_pattern(64, 4);
    std::vector<CSeq> blocks = subblock_signals(symbols, p);
    CSeq original = make_candidate(blocks, zero_sv_set(4));
    double ref = mean_power(original);

    CSeq same = pts_candidate(blocks, std::vector<cplx>(4, cplx(1.0, 0.0)));
    CHECK(same == original);

    CSeq negated = pts_candidate(blocks, std::vector<cplx>(4, cplx(-1.0, 0.0)));
    for (std::size_t i = 0; i < negated.size(); ++i) {
        CHECK(std::abs(negated[i] + original[i]) < kTol);
    }
    CHECK(papr_db(negated, ref) == doctest::Approx(papr_db(original, ref)));

    static const cplx alphabet[4] = {
        {1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}};
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<cplx> rot;
        for (int v = 0; v < 4; ++v) rot.push_back(alphabet[rng.below(4)]);
        CHECK(std::fabs(energy(pts_candidate(blocks, rot)) - energy(original)) <
              kTol);
    }
    CHECK_THROWS_AS(pts_candidate(blocks, std::vector<cplx>(3, cplx(1.0, 0.0))),
                    std::invalid_argument);
}

TEST_CASE("oversampled candidates scale shifts by the factor") {
    Rng rng(18);
    CSeq symbols = oracle::random_complex(rng, 16);
    PartitionPattern p = interleaved_pattern(16, 2);
    std::vector<CSeq> dense_blocks = subblock_signals(symbols, p, 4);
    REQUIRE(dense_blocks[0].size() == 64);
    // A candidate built at rate L then viewed at the Nyquist instants must
    // match the candidate built at rate 1: tau symbol-rate steps = L*tau
    // dense samples.
    std::vector<CSeq> base_blocks = subblock_signals(symbols, p);
    SvSet tau{{5, 12}};
    CSeq dense = make_candidate(dense_blocks, tau, 4);
    CSeq base = make_candidate(base_blocks, tau, 1);
    for (std::size_t i = 0; i < base.size(); ++i) {
        CHECK(std::abs(dense[4 * i] * 2.0 - base[i]) < kTol);
    }
}

}  // TEST_SUITE
