#pragma once

#include <vector>

#include "csspapr/partition.hpp"

namespace csspapr {

// Binary per-subcarrier power vector of one subblock: exactly N/V ones, and
// the elementwise sum over all subblocks is the all-ones vector.
struct PowerSpectrum {
    std::vector<double> values;
};

// |R(m)| for lags m in [0, N). Symmetric (values[m] == values[N-m]) and
// values[0] == sqrt(N)/V for every balanced spectrum.
struct AcfMagnitude {
    std::vector<double> values;
};

PowerSpectrum power_spectrum(const PartitionPattern& p, int v);

// |idft(S_v)| with the unitary transform.
AcfMagnitude acf_numeric(const PowerSpectrum& s);

// Interleaved subblocks: impulse train, sqrt(N)/V wherever m = 0 mod N/V.
double acf_interleaved_closed(int n, int v_count, int m);

// Adjacent subblocks: sqrt(N)/V at m = 0, |sin(m pi/V)| / (sqrt(N) sin(m pi/N))
// elsewhere.
double acf_adjacent_closed(int n, int v_count, int m);

// Interleaved/adjacent patterns: max |numeric - closed form| over all lags.
// Random patterns have no closed form; returns the sidelobe level instead
// (max of the numeric ACF over m != 0).
double acf_compare(const PartitionPattern& p, int v);

}  // namespace csspapr
