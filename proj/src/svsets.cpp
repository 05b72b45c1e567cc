#include "csspapr/svsets.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "csspapr/modem.hpp"

namespace csspapr {

bool score_less(const Criterion3Score& a, const Criterion3Score& b) {
    if (a.min_circular_gap != b.min_circular_gap) {
        return a.min_circular_gap < b.min_circular_gap;
    }
    return a.mean_circular_gap < b.mean_circular_gap;
}

std::vector<int> relative_distances(const SvSet& a, const SvSet& b, int modulus) {
    if (a.shifts.size() != b.shifts.size()) {
        throw std::invalid_argument("relative_distances: SV set lengths differ");
    }
    if (modulus < 1) {
        throw std::invalid_argument("relative_distances: modulus must be positive");
    }
    std::vector<int> r(a.shifts.size());
    for (std::size_t v = 0; v < r.size(); ++v) {
        r[v] = ((a.shifts[v] - b.shifts[v]) % modulus + modulus) % modulus;
    }
    return r;
}

namespace {

CriterionReport check_distinct_distances(const SvCollection& c, int modulus) {
    validate_collection(c);
    CriterionReport report;
    const int u = c.u_count();
    for (int i = 0; i < u; ++i) {
        for (int j = i + 1; j < u; ++j) {
            const auto r = relative_distances(c.sets[i], c.sets[j], modulus);
            for (std::size_t v = 0; v + 1 < r.size(); ++v) {
                for (std::size_t w = v + 1; w < r.size(); ++w) {
                    if (r[v] == r[w]) {
                        report.violations.push_back(
                            {i + 1, j + 1, static_cast<int>(v) + 1,
                             static_cast<int>(w) + 1, r[v]});
                    }
                }
            }
        }
    }
    report.satisfied = report.violations.empty();
    return report;
}

}  // namespace

CriterionReport check_criterion1(const SvCollection& c) {
    return check_distinct_distances(c, c.n);
}

CriterionReport check_criterion2(const SvCollection& c) {
    return check_distinct_distances(c, c.n / c.v_count);
}

Criterion3Score criterion3_score(const SvCollection& c) {
    if (!check_criterion1(c).satisfied) {
        throw std::invalid_argument(
            "criterion3_score: relative distances coincide, score undefined");
    }
    const int n = c.n;
    const int u = c.u_count();
    long long sum = 0;
    long count = 0;
    int min_gap = n;
    for (int i = 0; i < u; ++i) {
        for (int j = i + 1; j < u; ++j) {
            const auto r = relative_distances(c.sets[i], c.sets[j], n);
            for (std::size_t v = 0; v + 1 < r.size(); ++v) {
                for (std::size_t w = v + 1; w < r.size(); ++w) {
                    const int delta = ((r[v] - r[w]) % n + n) % n;
                    const int d = std::min(delta, n - delta);
                    min_gap = std::min(min_gap, d);
                    sum += d;
                    ++count;
                }
            }
        }
    }
    Criterion3Score score;
    if (count > 0) {
        score.min_circular_gap = min_gap;
        score.mean_circular_gap = static_cast<double>(sum) / static_cast<double>(count);
    }
    return score;
}

SvCollection search_sv_collection(int n, int v_count, int u_count,
                                  PartitionKind partition_kind, std::uint64_t seed,
                                  long iterations) {
    if (n < 1 || v_count < 1 || u_count < 1 || iterations < 1) {
        throw std::invalid_argument("search_sv_collection: bad dimensions");
    }
    Rng rng(seed);
    const bool optimize = partition_kind == PartitionKind::adjacent;

    SvCollection best;
    Criterion3Score best_score;
    bool have_best = false;
    long attempts = 0;

    for (long it = 0; it < iterations; ++it) {
        ++attempts;
        SvCollection proposal;
        proposal.n = n;
        proposal.v_count = v_count;
        proposal.sets.push_back(zero_sv_set(v_count));
        for (int u = 1; u < u_count; ++u) {
            SvSet set;
            set.shifts.resize(static_cast<std::size_t>(v_count));
            for (auto& tau : set.shifts) {
                tau = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            }
            proposal.sets.push_back(std::move(set));
        }

        const CriterionReport verdict = partition_kind == PartitionKind::interleaved
                                            ? check_criterion2(proposal)
                                            : check_criterion1(proposal);
        if (!verdict.satisfied) continue;

        if (!optimize) return proposal;

        const Criterion3Score score = criterion3_score(proposal);
        if (!have_best || score_less(best_score, score)) {
            best = std::move(proposal);
            best_score = score;
            have_best = true;
        }
    }

    if (!have_best) {
        throw std::runtime_error("search_sv_collection: no valid proposal in " +
                                 std::to_string(attempts) + " attempts");
    }
    return best;
}

SvCollection read_sv_collection(std::istream& is) {
    SvCollection c;
    std::string line;
    if (!std::getline(is, line)) {
        throw std::runtime_error("SV-set file: missing header");
    }
    {
        std::istringstream hs(line);
        char n_ch = 0, eq1 = 0, comma = 0, v_ch = 0, eq2 = 0;
        if (!(hs >> n_ch >> eq1 >> c.n >> comma >> v_ch >> eq2 >> c.v_count) ||
            n_ch != 'n' || eq1 != '=' || comma != ',' || v_ch != 'v' || eq2 != '=') {
            throw std::runtime_error("SV-set file: header must be n=<N>,v=<V>");
        }
    }
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        SvSet set;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) {
            std::size_t pos = 0;
            int tau = std::stoi(field, &pos);
            while (pos < field.size() && std::isspace(static_cast<unsigned char>(field[pos]))) ++pos;
            if (pos != field.size()) {
                throw std::runtime_error("SV-set file: bad shift value: " + field);
            }
            set.shifts.push_back(tau);
        }
        c.sets.push_back(std::move(set));
    }
    validate_collection(c);
    return c;
}

void write_sv_collection(const SvCollection& c, std::ostream& os) {
    os << "n=" << c.n << ",v=" << c.v_count << '\n';
    for (const auto& set : c.sets) {
        for (std::size_t v = 0; v < set.shifts.size(); ++v) {
            if (v > 0) os << ',';
            os << set.shifts[v];
        }
        os << '\n';
    }
}

}  // namespace csspapr
