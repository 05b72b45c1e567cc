#pragma once

#include <complex>
#include <vector>

namespace csspapr {

using cplx = std::complex<double>;

// Length-N vector of complex samples. Holds both frequency-domain symbol
// sequences and time-domain signal sequences; N must be a power of two.
using CSeq = std::vector<cplx>;

bool is_power_of_two(std::size_t n);

// Unitary inverse DFT: x(n) = (1/sqrt(N)) sum_k X(k) exp(+j 2 pi k n / N).
// Throws std::invalid_argument unless the length is a power of two.
CSeq idft(const CSeq& spectrum);

// Unitary forward DFT, the exact inverse of idft().
CSeq dft(const CSeq& signal);

// y(n) = x((n + tau) mod N). tau is normalized mod N, negatives included.
CSeq cyclic_shift_left(const CSeq& x, long tau);

// (1/N) sum |x(n)|^2
double mean_power(const CSeq& x);

// sum |x(n)|^2
double energy(const CSeq& x);

// 10 log10(max |x(n)|^2 / reference_power).
// Throws std::domain_error if reference_power <= 0 or the signal is all zero.
double papr_db(const CSeq& x, double reference_power);

// Frequency-domain zero padding to factor*N samples (zeros inserted between
// the positive- and negative-frequency halves). factor == 1 returns a copy.
CSeq oversample_spectrum(const CSeq& spectrum, int factor);

}  // namespace csspapr
