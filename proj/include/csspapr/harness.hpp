#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "csspapr/css.hpp"
#include "csspapr/partition.hpp"
#include "csspapr/svsets.hpp"

namespace csspapr {

enum class Scheme { css, pts, none };

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& s);

// Full description of one Monte Carlo experiment. Everything any output byte
// depends on lives here; worker count deliberately does not.
struct SimConfig {
    int n = 128;
    int v_count = 4;
    int u_count = 4;
    PartitionKind partition_kind = PartitionKind::random;
    std::uint64_t partition_seed = 1;
    SvCollection sv_collection;  // required for scheme css
    long trials = 100000;
    std::uint64_t master_seed = 1;
    int oversample = 1;
    Scheme scheme = Scheme::css;
    double grid_min_db = 4.0;
    double grid_max_db = 13.0;
    double grid_step_db = 0.1;
};

void validate_config(const SimConfig& cfg);

// Empirical exceedance probabilities over a threshold grid, for the
// unreduced signal and the selected candidate.
struct CcdfTable {
    std::vector<double> thresholds_db;
    std::vector<double> prob_original;
    std::vector<double> prob_selected;
    long trials = 0;
    double energy_check_max_dev = 0.0;
    std::vector<std::string> warnings;
};

enum class CcdfColumn { original, selected };

struct TrialPapr {
    double original_db = 0.0;
    double selected_db = 0.0;
};

// Precomputed per-experiment state: the partition is drawn once per
// experiment from partition_seed, never per trial.
struct ExperimentContext {
    SimConfig cfg;
    PartitionPattern pattern;
    std::vector<std::vector<cplx>> pts_rotations;

    explicit ExperimentContext(SimConfig config);
};

// One trial: a fresh 16-QAM symbol sequence from the derived trial seed,
// candidate generation, and both PAPR figures against the shared reference.
TrialPapr run_trial(const ExperimentContext& ctx, long trial_index);
TrialPapr run_trial(const SimConfig& cfg, long trial_index);

// Serial reference implementation of the experiment loop.
CcdfTable run_experiment_serial(const SimConfig& cfg);

// OpenMP trial loop. workers == 0 uses the runtime default thread count;
// results are byte-identical for every worker count, including the serial
// reference (integer exceedance counting commutes).
CcdfTable run_experiment(const SimConfig& cfg, int workers = 0);

// Threshold where the chosen CCDF column crosses `probability`, by
// log-linear interpolation on the grid. Throws std::out_of_range when the
// probability was not bracketed by the observed curve.
double interpolate_papr_at(const CcdfTable& table, double probability,
                           CcdfColumn column);

// CSV with a #-prefixed metadata block (config echo, seeds, version).
std::string ccdf_csv(const CcdfTable& table, const SimConfig& cfg);

// Flat key=value config file; '#' starts a comment. sv_collection names the
// path of an SV-set file. Unknown keys are rejected.
SimConfig load_config_file(std::istream& is, const std::string& dir_hint = "");

extern const char* const kVersion;

}  // namespace csspapr
