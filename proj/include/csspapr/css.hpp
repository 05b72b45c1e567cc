#pragma once

#include <vector>

#include "csspapr/partition.hpp"
#include "csspapr/spectral.hpp"

namespace csspapr {

// One shift-value set: one leftward cyclic shift per subblock, each in [0, N).
struct SvSet {
    std::vector<int> shifts;
};

// U shift-value sets for an (n, v_count) configuration. By convention the
// first set is all-zeros, so the unshifted signal is always a candidate.
struct SvCollection {
    std::vector<SvSet> sets;
    int n = 0;
    int v_count = 0;

    int u_count() const { return static_cast<int>(sets.size()); }
};

struct CandidateResult {
    int index = 0;  // 1-based candidate index
    double papr_db = 0.0;
    CSeq signal;
};

// Identity collection plus helpers used by the harness and the search.
SvSet zero_sv_set(int v_count);

void validate_collection(const SvCollection& c);

// Time-domain subblock signals x_v = idft(X_v). With oversampling each
// subblock spectrum is zero padded to factor*N before the transform.
std::vector<CSeq> subblock_signals(const CSeq& symbols, const PartitionPattern& p,
                                   int oversample = 1);

// x^u(n) = sum_v x_v((n + tau_v) mod N): shift-and-add candidate synthesis.
// Shift values are expressed in symbol-rate samples; with oversampling the
// applied shift is oversample * tau_v.
CSeq make_candidate(const std::vector<CSeq>& x_subblocks, const SvSet& tau,
                    int oversample = 1);

// Evaluates every candidate in the collection against the shared reference
// power (the mean power of the all-zeros candidate) and returns the one with
// the lowest PAPR; ties break toward the lowest candidate index.
CandidateResult select_min_papr(const CSeq& symbols, const PartitionPattern& p,
                                const SvCollection& collection, int oversample = 1);

// Same selection over precomputed subblock signals; reference_power must be
// the mean power of the unshifted combined signal.
CandidateResult select_min_papr_over(const std::vector<CSeq>& x_subblocks,
                                     const SvCollection& collection,
                                     double reference_power, int oversample = 1);

// ceil(log2(u_count)) bits identify the transmitted candidate.
int side_info_bits(int u_count);

// Rotate-and-add baseline: sum_v rotations[v] * x_v.
CSeq pts_candidate(const std::vector<CSeq>& x_subblocks,
                   const std::vector<cplx>& rotations);

}  // namespace csspapr
