#include "csspapr/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "csspapr/modem.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace csspapr {

const char* const kVersion = "0.1.0";

namespace {

// Seed stream reserved for the rotation-vector draw. Trial streams are the
// trial indices themselves, so anything with the top bit set is collision
// free.
constexpr std::uint64_t kRotationStream = 0x8000000000000001ULL;

long long checked_ll(const std::string& value, const std::string& key) {
    std::size_t pos = 0;
    long long out = 0;
    try {
        out = std::stoll(value, &pos);
    } catch (const std::exception&) {
        throw std::runtime_error("config: bad integer for " + key + ": " + value);
    }
    if (pos != value.size())
        throw std::runtime_error("config: bad integer for " + key + ": " + value);
    return out;
}

std::uint64_t checked_u64(const std::string& value, const std::string& key) {
    std::size_t pos = 0;
    std::uint64_t out = 0;
    try {
        out = std::stoull(value, &pos);
    } catch (const std::exception&) {
        throw std::runtime_error("config: bad seed for " + key + ": " + value);
    }
    if (pos != value.size() || value.find('-') != std::string::npos)
        throw std::runtime_error("config: bad seed for " + key + ": " + value);
    return out;
}

double checked_double(const std::string& value, const std::string& key) {
    std::size_t pos = 0;
    double out = 0.0;
    try {
        out = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw std::runtime_error("config: bad number for " + key + ": " + value);
    }
    if (pos != value.size())
        throw std::runtime_error("config: bad number for " + key + ": " + value);
    return out;
}

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<double> make_grid(const SimConfig& cfg) {
    long points =
        std::lround((cfg.grid_max_db - cfg.grid_min_db) / cfg.grid_step_db) + 1;
    std::vector<double> grid(static_cast<std::size_t>(points));
    for (long i = 0; i < points; ++i)
        grid[static_cast<std::size_t>(i)] = cfg.grid_min_db + cfg.grid_step_db * i;
    return grid;
}

struct TrialOutcome {
    TrialPapr papr;
    double energy_dev = 0.0;
};

TrialOutcome run_trial_impl(const ExperimentContext& ctx, long trial_index,
                            bool check_energy) {
    const SimConfig& cfg = ctx.cfg;
    std::uint64_t seed =
        derive_seed(cfg.master_seed, static_cast<std::uint64_t>(trial_index));
    CSeq symbols = random_symbol_sequence(seed, static_cast<std::size_t>(cfg.n));
    std::vector<CSeq> blocks =
        subblock_signals(symbols, ctx.pattern, cfg.oversample);

    CSeq original = make_candidate(blocks, zero_sv_set(cfg.v_count), cfg.oversample);
    double ref = mean_power(original);

    TrialOutcome out;
    out.papr.original_db = papr_db(original, ref);

    switch (cfg.scheme) {
        case Scheme::css: {
            CandidateResult best =
                select_min_papr_over(blocks, cfg.sv_collection, ref, cfg.oversample);
            out.papr.selected_db = best.papr_db;
            if (check_energy) {
                for (const SvSet& tau : cfg.sv_collection.sets) {
                    CSeq cand = make_candidate(blocks, tau, cfg.oversample);
                    double dev = std::fabs(mean_power(cand) - ref) / ref;
                    out.energy_dev = std::max(out.energy_dev, dev);
                }
            }
            break;
        }
        case Scheme::pts: {
            double best = out.papr.original_db;
            for (const auto& rot : ctx.pts_rotations) {
                CSeq cand = pts_candidate(blocks, rot);
                best = std::min(best, papr_db(cand, ref));
                if (check_energy) {
                    double dev = std::fabs(mean_power(cand) - ref) / ref;
                    out.energy_dev = std::max(out.energy_dev, dev);
                }
            }
            out.papr.selected_db = best;
            break;
        }
        case Scheme::none:
            out.papr.selected_db = out.papr.original_db;
            break;
    }
    return out;
}

// Shared by the serial and the OpenMP loop so both count identically.
void accumulate_trial(const ExperimentContext& ctx, const std::vector<double>& grid,
                      long trial_index, std::vector<long long>& exceed_original,
                      std::vector<long long>& exceed_selected, double& max_dev) {
    bool check_energy = trial_index % 100 == 0;
    TrialOutcome t = run_trial_impl(ctx, trial_index, check_energy);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (t.papr.original_db > grid[i]) ++exceed_original[i];
        if (t.papr.selected_db > grid[i]) ++exceed_selected[i];
    }
    max_dev = std::max(max_dev, t.energy_dev);
}

CcdfTable finish_table(const SimConfig& cfg, std::vector<double> grid,
                       const std::vector<long long>& exceed_original,
                       const std::vector<long long>& exceed_selected,
                       double max_dev) {
    CcdfTable table;
    table.thresholds_db = std::move(grid);
    table.trials = cfg.trials;
    table.energy_check_max_dev = max_dev;
    table.prob_original.resize(table.thresholds_db.size());
    table.prob_selected.resize(table.thresholds_db.size());
    for (std::size_t i = 0; i < table.thresholds_db.size(); ++i) {
        table.prob_original[i] =
            static_cast<double>(exceed_original[i]) / static_cast<double>(cfg.trials);
        table.prob_selected[i] =
            static_cast<double>(exceed_selected[i]) / static_cast<double>(cfg.trials);
    }
    if (static_cast<double>(cfg.trials) * 1e-3 < 100.0)
        table.warnings.push_back(
            "fewer than 100 expected exceedances at the 1e-3 tail; "
            "increase trials for a stable tail estimate");
    return table;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

}  // namespace

std::string to_string(Scheme s) {
    switch (s) {
        case Scheme::css: return "css";
        case Scheme::pts: return "pts";
        case Scheme::none: return "none";
    }
    throw std::logic_error("unreachable scheme");
}

Scheme scheme_from_string(const std::string& s) {
    if (s == "css") return Scheme::css;
    if (s == "pts") return Scheme::pts;
    if (s == "none") return Scheme::none;
    throw std::invalid_argument("unknown scheme: " + s +
                                " (expected css, pts, or none)");
}

void validate_config(const SimConfig& cfg) {
    if (cfg.n < 2 || !is_power_of_two(static_cast<std::size_t>(cfg.n)))
        throw std::invalid_argument("n must be a power of two, at least 2");
    if (cfg.v_count < 1 ||
        !is_power_of_two(static_cast<std::size_t>(cfg.v_count)) ||
        cfg.v_count > cfg.n)
        throw std::invalid_argument("v_count must be a power of two dividing n");
    if (cfg.u_count < 1)
        throw std::invalid_argument("u_count must be at least 1");
    if (cfg.trials < 1)
        throw std::invalid_argument("trials must be at least 1");
    if (cfg.oversample < 1 ||
        !is_power_of_two(static_cast<std::size_t>(cfg.oversample)))
        throw std::invalid_argument("oversample must be a power of two, at least 1");
    if (!(cfg.grid_step_db > 0.0))
        throw std::invalid_argument("grid_step_db must be positive");
    if (cfg.grid_max_db < cfg.grid_min_db)
        throw std::invalid_argument("grid_max_db must not be below grid_min_db");
    if (cfg.scheme == Scheme::css) {
        if (cfg.sv_collection.sets.empty())
            throw std::invalid_argument("scheme css requires an sv_collection");
        if (cfg.sv_collection.n != cfg.n ||
            cfg.sv_collection.v_count != cfg.v_count)
            throw std::invalid_argument(
                "sv_collection dimensions do not match n/v_count");
        if (cfg.sv_collection.u_count() != cfg.u_count)
            throw std::invalid_argument(
                "sv_collection holds " +
                std::to_string(cfg.sv_collection.u_count()) +
                " sets but u_count is " + std::to_string(cfg.u_count));
        validate_collection(cfg.sv_collection);
    }
}

ExperimentContext::ExperimentContext(SimConfig config) : cfg(std::move(config)) {
    validate_config(cfg);
    switch (cfg.partition_kind) {
        case PartitionKind::interleaved:
            pattern = interleaved_pattern(cfg.n, cfg.v_count);
            break;
        case PartitionKind::adjacent:
            pattern = adjacent_pattern(cfg.n, cfg.v_count);
            break;
        case PartitionKind::random:
            pattern = random_pattern(cfg.n, cfg.v_count, cfg.partition_seed);
            break;
    }
    if (cfg.scheme == Scheme::pts) {
        // First vector is all-ones so the plain signal stays a candidate; the
        // rest anchor the first subblock and draw the others from {1,-1,j,-j}.
        static const cplx kAlphabet[4] = {
            {1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}};
        Rng rng(derive_seed(cfg.master_seed, kRotationStream));
        pts_rotations.assign(static_cast<std::size_t>(cfg.u_count),
                             std::vector<cplx>(static_cast<std::size_t>(cfg.v_count),
                                               cplx(1.0, 0.0)));
        for (int u = 1; u < cfg.u_count; ++u)
            for (int v = 1; v < cfg.v_count; ++v)
                pts_rotations[static_cast<std::size_t>(u)]
                             [static_cast<std::size_t>(v)] =
                                 kAlphabet[rng.below(4)];
    }
}

TrialPapr run_trial(const ExperimentContext& ctx, long trial_index) {
    return run_trial_impl(ctx, trial_index, false).papr;
}

TrialPapr run_trial(const SimConfig& cfg, long trial_index) {
    ExperimentContext ctx(cfg);
    return run_trial_impl(ctx, trial_index, false).papr;
}

CcdfTable run_experiment_serial(const SimConfig& cfg) {
    ExperimentContext ctx(cfg);
    std::vector<double> grid = make_grid(cfg);
    std::vector<long long> exceed_original(grid.size(), 0);
    std::vector<long long> exceed_selected(grid.size(), 0);
    double max_dev = 0.0;
    for (long t = 0; t < cfg.trials; ++t)
        accumulate_trial(ctx, grid, t, exceed_original, exceed_selected, max_dev);
    return finish_table(cfg, std::move(grid), exceed_original, exceed_selected,
                        max_dev);
}

CcdfTable run_experiment(const SimConfig& cfg, int workers) {
    ExperimentContext ctx(cfg);
    std::vector<double> grid = make_grid(cfg);
    std::vector<long long> exceed_original(grid.size(), 0);
    std::vector<long long> exceed_selected(grid.size(), 0);
    double max_dev = 0.0;
#ifdef _OPENMP
    int n_threads = workers > 0 ? workers : omp_get_max_threads();
    // Per-worker integer tallies merged by addition: the totals cannot depend
    // on how the trials were divided, so any worker count produces the same
    // table as the serial reference.
#pragma omp parallel num_threads(n_threads)
    {
        std::vector<long long> local_original(grid.size(), 0);
        std::vector<long long> local_selected(grid.size(), 0);
        double local_dev = 0.0;
#pragma omp for schedule(static) nowait
        for (long t = 0; t < cfg.trials; ++t)
            accumulate_trial(ctx, grid, t, local_original, local_selected,
                             local_dev);
#pragma omp critical
        {
            for (std::size_t i = 0; i < grid.size(); ++i) {
                exceed_original[i] += local_original[i];
                exceed_selected[i] += local_selected[i];
            }
            max_dev = std::max(max_dev, local_dev);
        }
    }
#else
    (void)workers;
    for (long t = 0; t < cfg.trials; ++t)
        accumulate_trial(ctx, grid, t, exceed_original, exceed_selected, max_dev);
#endif
    return finish_table(cfg, std::move(grid), exceed_original, exceed_selected,
                        max_dev);
}

double interpolate_papr_at(const CcdfTable& table, double probability,
                           CcdfColumn column) {
    if (!(probability > 0.0) || probability > 1.0)
        throw std::invalid_argument("probability must lie in (0, 1]");
    const std::vector<double>& col = column == CcdfColumn::original
                                         ? table.prob_original
                                         : table.prob_selected;
    if (col.empty()) throw std::out_of_range("empty ccdf table");
    if (probability > col.front())
        throw std::out_of_range("probability above the start of the curve");
    std::size_t i = 0;
    while (i < col.size() && col[i] > probability) ++i;
    if (i == col.size())
        throw std::out_of_range("curve never reaches the requested probability");
    if (col[i] == probability || i == 0) return table.thresholds_db[i];
    // Crossing inside bin (i-1, i]. With a zero count on the right edge the
    // log-linear model breaks down; the right edge is the grid-resolution
    // answer.
    if (col[i] <= 0.0) return table.thresholds_db[i];
    double lo = std::log10(col[i - 1]);
    double hi = std::log10(col[i]);
    double frac = (lo - std::log10(probability)) / (lo - hi);
    return table.thresholds_db[i - 1] +
           frac * (table.thresholds_db[i] - table.thresholds_db[i - 1]);
}

std::string ccdf_csv(const CcdfTable& table, const SimConfig& cfg) {
    std::ostringstream os;
    os << "# csspapr_version=" << kVersion << "\n";
    os << "# n=" << cfg.n << "\n";
    os << "# v_count=" << cfg.v_count << "\n";
    os << "# u_count=" << cfg.u_count << "\n";
    os << "# partition=" << to_string(cfg.partition_kind) << "\n";
    os << "# partition_seed=" << cfg.partition_seed << "\n";
    os << "# scheme=" << to_string(cfg.scheme) << "\n";
    if (cfg.scheme == Scheme::css) {
        os << "# sv_collection=";
        for (std::size_t u = 0; u < cfg.sv_collection.sets.size(); ++u) {
            if (u > 0) os << ';';
            const std::vector<int>& shifts = cfg.sv_collection.sets[u].shifts;
            for (std::size_t v = 0; v < shifts.size(); ++v) {
                if (v > 0) os << ',';
                os << shifts[v];
            }
        }
        os << "\n";
    }
    os << "# trials=" << table.trials << "\n";
    os << "# master_seed=" << cfg.master_seed << "\n";
    os << "# oversample=" << cfg.oversample << "\n";
    os << "# grid_min_db=" << format_double(cfg.grid_min_db) << "\n";
    os << "# grid_max_db=" << format_double(cfg.grid_max_db) << "\n";
    os << "# grid_step_db=" << format_double(cfg.grid_step_db) << "\n";
    os << "# energy_check_max_dev=" << format_double(table.energy_check_max_dev)
       << "\n";
    for (const std::string& w : table.warnings) os << "# warning=" << w << "\n";
    os << "threshold_db,ccdf_original,ccdf_selected,trials\n";
    char line[160];
    for (std::size_t i = 0; i < table.thresholds_db.size(); ++i) {
        std::snprintf(line, sizeof(line), "%.3f,%.10g,%.10g,%ld\n",
                      table.thresholds_db[i], table.prob_original[i],
                      table.prob_selected[i], table.trials);
        os << line;
    }
    return os.str();
}

SimConfig load_config_file(std::istream& is, const std::string& dir_hint) {
    SimConfig cfg;
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trimmed(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": expected key=value");
        std::string key = trimmed(line.substr(0, eq));
        std::string value = trimmed(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": empty key or value");
        if (key == "n") {
            cfg.n = static_cast<int>(checked_ll(value, key));
        } else if (key == "v_count") {
            cfg.v_count = static_cast<int>(checked_ll(value, key));
        } else if (key == "u_count") {
            cfg.u_count = static_cast<int>(checked_ll(value, key));
        } else if (key == "partition") {
            cfg.partition_kind = partition_kind_from_string(value);
        } else if (key == "partition_seed") {
            cfg.partition_seed = checked_u64(value, key);
        } else if (key == "sv_collection") {
            std::string path = value;
            if (!dir_hint.empty() && path.front() != '/')
                path = dir_hint + "/" + path;
            std::ifstream f(path);
            if (!f)
                throw std::runtime_error("config: cannot open sv_collection file: " +
                                         path);
            cfg.sv_collection = read_sv_collection(f);
        } else if (key == "trials") {
            cfg.trials = static_cast<long>(checked_ll(value, key));
        } else if (key == "master_seed") {
            cfg.master_seed = checked_u64(value, key);
        } else if (key == "oversample") {
            cfg.oversample = static_cast<int>(checked_ll(value, key));
        } else if (key == "scheme") {
            cfg.scheme = scheme_from_string(value);
        } else if (key == "grid_min_db") {
            cfg.grid_min_db = checked_double(value, key);
        } else if (key == "grid_max_db") {
            cfg.grid_max_db = checked_double(value, key);
        } else if (key == "grid_step_db") {
            cfg.grid_step_db = checked_double(value, key);
        } else {
            throw std::runtime_error("config: unknown key: " + key);
        }
    }
    return cfg;
}

}  // namespace csspapr
