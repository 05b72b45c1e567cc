#pragma once

#include <cstdint>

#include "csspapr/spectral.hpp"

namespace csspapr {

// splitmix64 mixing step (Steele/Lea/Flood). Bijective on 64-bit words, so
// derived seed streams never collide for a fixed master seed.
std::uint64_t splitmix64(std::uint64_t z);

// Injective per-stream seed derivation: fixed master -> distinct streams.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t stream);

// Small deterministic generator used everywhere randomness is needed.
// Platform-independent by construction; never shared between workers.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return splitmix64(state_);
    }

    // Unbiased integer in [0, bound) via rejection.
    std::uint64_t below(std::uint64_t bound);

  private:
    std::uint64_t state_;
};

// Gray-mapped 16-QAM, average constellation power 1. The first two bits of
// the group select the in-phase level, the last two the quadrature level
// (per axis: 00 -> -3, 01 -> -1, 11 -> +1, 10 -> +3, scaled by 1/sqrt(10)).
cplx map_16qam(unsigned bits);

// n independent uniform 16-QAM symbols; identical (seed, n) gives an
// identical sequence on every platform.
CSeq random_symbol_sequence(std::uint64_t seed, std::size_t n);

}  // namespace csspapr
