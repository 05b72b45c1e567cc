#include "csspapr/modem.hpp"

#include <cmath>
#include <stdexcept>

namespace csspapr {

std::uint64_t splitmix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t stream) {
    return splitmix64(splitmix64(master_seed) ^ (stream * 0x9e3779b97f4a7c15ULL + 1ULL));
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("Rng::below: bound must be positive");
    }
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

namespace {

// per-axis Gray levels indexed by the 2-bit pair: 00 01 10 11
constexpr double kGrayLevel[4] = {-3.0, -1.0, +3.0, +1.0};

const double kQamScale = 1.0 / std::sqrt(10.0);

}  // namespace

cplx map_16qam(unsigned bits) {
    const unsigned group = bits & 0xFu;
    const double re = kGrayLevel[(group >> 2) & 0x3u] * kQamScale;
    const double im = kGrayLevel[group & 0x3u] * kQamScale;
    return {re, im};
}

CSeq random_symbol_sequence(std::uint64_t seed, std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("random_symbol_sequence: n must be >= 1");
    }
    Rng rng(seed);
    CSeq out(n);
    for (auto& z : out) {
        z = map_16qam(static_cast<unsigned>(rng.next() & 0xFu));
    }
    return out;
}

}  // namespace csspapr
