#include "csspapr/acf.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace csspapr {

PowerSpectrum power_spectrum(const PartitionPattern& p, int v) {
    if (v < 1 || v > p.v_count) {
        throw std::invalid_argument("power_spectrum: subblock index out of range");
    }
    PowerSpectrum s;
    s.values.resize(static_cast<std::size_t>(p.n));
    for (int k = 0; k < p.n; ++k) {
        s.values[k] = p.assignment[k] == v ? 1.0 : 0.0;
    }
    return s;
}

AcfMagnitude acf_numeric(const PowerSpectrum& s) {
    CSeq spectrum(s.values.size());
    for (std::size_t k = 0; k < s.values.size(); ++k) {
        spectrum[k] = cplx{s.values[k], 0.0};
    }
    const CSeq r = idft(spectrum);
    AcfMagnitude acf;
    acf.values.resize(r.size());
    for (std::size_t m = 0; m < r.size(); ++m) acf.values[m] = std::abs(r[m]);
    return acf;
}

namespace {

int normalize_lag(int n, int m) {
    return ((m % n) + n) % n;
}

void check_acf_dims(int n, int v_count) {
    if (n < 1 || v_count < 1 || v_count > n ||
        !is_power_of_two(static_cast<std::size_t>(n)) ||
        !is_power_of_two(static_cast<std::size_t>(v_count))) {
        throw std::invalid_argument("acf closed form: bad (n, v_count)");
    }
}

}  // namespace

double acf_interleaved_closed(int n, int v_count, int m) {
    check_acf_dims(n, v_count);
    const int lag = normalize_lag(n, m);
    if (lag % (n / v_count) == 0) {
        return std::sqrt(static_cast<double>(n)) / v_count;
    }
    return 0.0;
}

double acf_adjacent_closed(int n, int v_count, int m) {
    check_acf_dims(n, v_count);
    const int lag = normalize_lag(n, m);
    if (lag == 0) {
        return std::sqrt(static_cast<double>(n)) / v_count;
    }
    const double denom =
        std::sqrt(static_cast<double>(n)) * std::sin(lag * std::numbers::pi / n);
    if (std::abs(denom) < 1e-12) {
        // unreachable for lag in [1, n-1]; the limiting value is sqrt(n)/V
        return std::sqrt(static_cast<double>(n)) / v_count;
    }
    return std::abs(std::sin(lag * std::numbers::pi / v_count) / denom);
}

double acf_compare(const PartitionPattern& p, int v) {
    const AcfMagnitude numeric = acf_numeric(power_spectrum(p, v));
    double worst = 0.0;
    switch (p.kind) {
        case PartitionKind::interleaved:
            for (int m = 0; m < p.n; ++m) {
                worst = std::max(
                    worst, std::abs(numeric.values[m] - acf_interleaved_closed(p.n, p.v_count, m)));
            }
            break;
        case PartitionKind::adjacent:
            for (int m = 0; m < p.n; ++m) {
                worst = std::max(
                    worst, std::abs(numeric.values[m] - acf_adjacent_closed(p.n, p.v_count, m)));
            }
            break;
        case PartitionKind::random:
            for (int m = 1; m < p.n; ++m) {
                worst = std::max(worst, numeric.values[m]);
            }
            break;
    }
    return worst;
}

}  // namespace csspapr
