#include "csspapr/css.hpp"

#include <stdexcept>

namespace csspapr {

SvSet zero_sv_set(int v_count) {
    return SvSet{std::vector<int>(static_cast<std::size_t>(v_count), 0)};
}

void validate_collection(const SvCollection& c) {
    if (c.sets.empty()) {
        throw std::invalid_argument("SV collection must hold at least one set");
    }
    if (c.n < 1 || c.v_count < 1) {
        throw std::invalid_argument("SV collection has no dimensions");
    }
    for (const auto& set : c.sets) {
        if (static_cast<int>(set.shifts.size()) != c.v_count) {
            throw std::invalid_argument("SV set length does not match v_count");
        }
        for (int tau : set.shifts) {
            if (tau < 0 || tau >= c.n) {
                throw std::invalid_argument("shift value out of [0, n)");
            }
        }
    }
}

std::vector<CSeq> subblock_signals(const CSeq& symbols, const PartitionPattern& p,
                                   int oversample) {
    std::vector<CSeq> xs;
    xs.reserve(static_cast<std::size_t>(p.v_count));
    for (auto& block : split(symbols, p)) {
        xs.push_back(idft(oversample_spectrum(block, oversample)));
    }
    return xs;
}

CSeq make_candidate(const std::vector<CSeq>& x_subblocks, const SvSet& tau,
                    int oversample) {
    if (x_subblocks.empty() || tau.shifts.size() != x_subblocks.size()) {
        throw std::invalid_argument("make_candidate: shift count != subblock count");
    }
    const std::size_t n = x_subblocks.front().size();
    CSeq out(n, cplx{0.0, 0.0});
    for (std::size_t v = 0; v < x_subblocks.size(); ++v) {
        const CSeq& xv = x_subblocks[v];
        if (xv.size() != n) {
            throw std::invalid_argument("make_candidate: ragged subblock lengths");
        }
        const std::size_t shift =
            (static_cast<std::size_t>(tau.shifts[v]) * static_cast<std::size_t>(oversample)) % n;
        for (std::size_t i = 0; i < n; ++i) {
            out[i] += xv[(i + shift) % n];
        }
    }
    return out;
}

CandidateResult select_min_papr_over(const std::vector<CSeq>& x_subblocks,
                                     const SvCollection& collection,
                                     double reference_power, int oversample) {
    validate_collection(collection);
    if (static_cast<int>(x_subblocks.size()) != collection.v_count) {
        throw std::invalid_argument("select_min_papr: subblock count mismatch");
    }
    CandidateResult best;
    for (int u = 0; u < collection.u_count(); ++u) {
        CSeq candidate = make_candidate(x_subblocks, collection.sets[u], oversample);
        const double papr = papr_db(candidate, reference_power);
        if (u == 0 || papr < best.papr_db) {
            best.index = u + 1;
            best.papr_db = papr;
            best.signal = std::move(candidate);
        }
    }
    return best;
}

CandidateResult select_min_papr(const CSeq& symbols, const PartitionPattern& p,
                                const SvCollection& collection, int oversample) {
    validate_collection(collection);
    if (p.n != collection.n || p.v_count != collection.v_count) {
        throw std::invalid_argument("select_min_papr: pattern/collection mismatch");
    }
    const auto xs = subblock_signals(symbols, p, oversample);
    const CSeq unshifted = make_candidate(xs, zero_sv_set(collection.v_count), oversample);
    return select_min_papr_over(xs, collection, mean_power(unshifted), oversample);
}

int side_info_bits(int u_count) {
    if (u_count < 1) {
        throw std::invalid_argument("side_info_bits: u_count must be >= 1");
    }
    int bits = 0;
    while ((1LL << bits) < u_count) ++bits;
    return bits;
}

CSeq pts_candidate(const std::vector<CSeq>& x_subblocks,
                   const std::vector<cplx>& rotations) {
    if (x_subblocks.empty() || rotations.size() != x_subblocks.size()) {
        throw std::invalid_argument("pts_candidate: rotation count != subblock count");
    }
    const std::size_t n = x_subblocks.front().size();
    CSeq out(n, cplx{0.0, 0.0});
    for (std::size_t v = 0; v < x_subblocks.size(); ++v) {
        if (x_subblocks[v].size() != n) {
            throw std::invalid_argument("pts_candidate: ragged subblock lengths");
        }
        for (std::size_t i = 0; i < n; ++i) {
            out[i] += rotations[v] * x_subblocks[v][i];
        }
    }
    return out;
}

}  // namespace csspapr
