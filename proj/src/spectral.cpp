#include "csspapr/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace csspapr {

bool is_power_of_two(std::size_t n) {
    return n > 0 && (n & (n - 1)) == 0;
}

namespace {

// In-place iterative radix-2 transform with unitary 1/sqrt(N) scaling.
// sign = +1 gives the inverse (synthesis) transform, -1 the forward one.
void fft_radix2(CSeq& a, int sign) {
    const std::size_t n = a.size();
    if (!is_power_of_two(n)) {
        throw std::invalid_argument("transform length must be a power of two");
    }
    if (n == 1) return;

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    std::vector<cplx> twiddle(n / 2);
    const double base = sign * 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t k = 0; k < n / 2; ++k) {
        twiddle[k] = std::polar(1.0, base * static_cast<double>(k));
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t block = 0; block < n; block += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cplx t = twiddle[k * stride] * a[block + k + len / 2];
                const cplx u = a[block + k];
                a[block + k] = u + t;
                a[block + k + len / 2] = u - t;
            }
        }
    }

    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (auto& z : a) z *= scale;
}

}  // namespace

CSeq idft(const CSeq& spectrum) {
    CSeq out = spectrum;
    fft_radix2(out, +1);
    return out;
}

CSeq dft(const CSeq& signal) {
    CSeq out = signal;
    fft_radix2(out, -1);
    return out;
}

CSeq cyclic_shift_left(const CSeq& x, long tau) {
    const long n = static_cast<long>(x.size());
    if (n == 0) return {};
    const long t = ((tau % n) + n) % n;
    CSeq out(x.size());
    for (long i = 0; i < n; ++i) {
        out[i] = x[(i + t) % n];
    }
    return out;
}

double mean_power(const CSeq& x) {
    if (x.empty()) {
        throw std::invalid_argument("mean_power of empty sequence");
    }
    return energy(x) / static_cast<double>(x.size());
}

double energy(const CSeq& x) {
    double acc = 0.0;
    for (const auto& z : x) acc += std::norm(z);
    return acc;
}

double papr_db(const CSeq& x, double reference_power) {
    if (reference_power <= 0.0) {
        throw std::domain_error("papr_db: reference power must be positive");
    }
    double peak = 0.0;
    for (const auto& z : x) peak = std::max(peak, std::norm(z));
    if (peak <= 0.0) {
        throw std::domain_error("papr_db: all-zero sequence");
    }
    return 10.0 * std::log10(peak / reference_power);
}

CSeq oversample_spectrum(const CSeq& spectrum, int factor) {
    if (factor < 1) {
        throw std::invalid_argument("oversampling factor must be >= 1");
    }
    if (!is_power_of_two(spectrum.size())) {
        throw std::invalid_argument("spectrum length must be a power of two");
    }
    if (factor == 1) return spectrum;
    const std::size_t n = spectrum.size();
    CSeq out(n * static_cast<std::size_t>(factor), cplx{0.0, 0.0});
    const std::size_t half = n / 2;
    for (std::size_t k = 0; k < half; ++k) out[k] = spectrum[k];
    for (std::size_t k = half; k < n; ++k) out[out.size() - n + k] = spectrum[k];
    return out;
}

}  // namespace csspapr
