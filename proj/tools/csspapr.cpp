// Command-line front end: Monte Carlo CCDF experiments, ACF comparison
// tables, and shift-value-set checking/searching.
//
// Exit codes: 0 success / criterion pass, 1 criterion fail or unsuccessful
// search, 2 configuration error (bad flags, unreadable files, inconsistent
// dimensions).

#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "csspapr/acf.hpp"
#include "csspapr/css.hpp"
#include "csspapr/harness.hpp"
#include "csspapr/partition.hpp"
#include "csspapr/svsets.hpp"

namespace {

using namespace csspapr;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

std::string dirname_of(const std::string& path) {
    std::size_t slash = path.find_last_of('/');
    if (slash == std::string::npos) return "";
    return path.substr(0, slash);
}

SvCollection load_collection_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open sv-set file: " + path);
    return read_sv_collection(f);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << text;
    if (!f) throw std::runtime_error("failed writing output file: " + path);
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
    std::string config_path;
    std::string out_path;
    int workers = 0;
    // Same-named overrides for every config key; presence tracked via CLI11.
    int n = 0;
    int v_count = 0;
    int u_count = 0;
    std::string partition;
    std::uint64_t partition_seed = 0;
    std::string sv_collection;
    long trials = 0;
    std::uint64_t master_seed = 0;
    int oversample = 0;
    std::string scheme;
    double grid_min_db = 0.0;
    double grid_max_db = 0.0;
    double grid_step_db = 0.0;
};

int run_simulate(const SimulateArgs& a, const CLI::App& sub) {
    SimConfig cfg;
    if (!a.config_path.empty()) {
        std::ifstream f(a.config_path);
        if (!f) {
            std::cerr << "error: cannot open config file: " << a.config_path
                      << "\n";
            return kExitConfig;
        }
        cfg = load_config_file(f, dirname_of(a.config_path));
    }
    if (sub.count("--n")) cfg.n = a.n;
    if (sub.count("--v_count")) cfg.v_count = a.v_count;
    if (sub.count("--u_count")) cfg.u_count = a.u_count;
    if (sub.count("--partition"))
        cfg.partition_kind = partition_kind_from_string(a.partition);
    if (sub.count("--partition_seed")) cfg.partition_seed = a.partition_seed;
    if (sub.count("--sv_collection"))
        cfg.sv_collection = load_collection_file(a.sv_collection);
    if (sub.count("--trials")) cfg.trials = a.trials;
    if (sub.count("--master_seed")) cfg.master_seed = a.master_seed;
    if (sub.count("--oversample")) cfg.oversample = a.oversample;
    if (sub.count("--scheme")) cfg.scheme = scheme_from_string(a.scheme);
    if (sub.count("--grid_min_db")) cfg.grid_min_db = a.grid_min_db;
    if (sub.count("--grid_max_db")) cfg.grid_max_db = a.grid_max_db;
    if (sub.count("--grid_step_db")) cfg.grid_step_db = a.grid_step_db;

    validate_config(cfg);
    CcdfTable table = run_experiment(cfg, a.workers);
    write_text_file(a.out_path, ccdf_csv(table, cfg));
    std::cout << "wrote " << a.out_path << " (scheme=" << to_string(cfg.scheme)
              << ", trials=" << table.trials << ")\n";
    for (const std::string& w : table.warnings)
        std::cerr << "warning: " << w << "\n";
    return kExitPass;
}

// --------------------------------------------------------------------- acf

int run_acf(int n, int v_count, const std::string& partition,
            std::uint64_t seed, int subblock, const std::string& out_path) {
    PartitionPattern p;
    bool has_closed_form = true;
    if (partition == "interleaved") {
        p = interleaved_pattern(n, v_count);
    } else if (partition == "adjacent") {
        p = adjacent_pattern(n, v_count);
    } else if (partition == "random") {
        p = random_pattern(n, v_count, seed);
        has_closed_form = false;
    } else if (partition == "msequence") {
        if (v_count != 2)
            throw std::invalid_argument("msequence partition requires --v 2");
        p = msequence_pattern(n);
        has_closed_form = false;
    } else {
        throw std::invalid_argument(
            "unknown partition: " + partition +
            " (expected interleaved, adjacent, random, or msequence)");
    }

    PowerSpectrum s = power_spectrum(p, subblock);
    AcfMagnitude numeric = acf_numeric(s);

    std::ostringstream os;
    os << "# csspapr_version=" << kVersion << "\n";
    os << "# n=" << n << "\n";
    os << "# v_count=" << v_count << "\n";
    os << "# partition=" << partition << "\n";
    if (partition == "random") os << "# seed=" << seed << "\n";
    os << "# subblock=" << subblock << "\n";
    os << "m,numeric,closed_form,deviation\n";
    double max_dev = 0.0;
    char line[128];
    for (int m = 0; m < n; ++m) {
        double closed;
        if (partition == "interleaved") {
            closed = acf_interleaved_closed(n, v_count, m);
        } else if (partition == "adjacent") {
            closed = acf_adjacent_closed(n, v_count, m);
        } else {
            // No closed form: compare against the ideal impulse, so the
            // deviation column reads directly as the sidelobe profile.
            closed = m == 0 ? std::sqrt(static_cast<double>(n)) / v_count : 0.0;
        }
        double num = numeric.values[static_cast<std::size_t>(m)];
        double dev = std::fabs(num - closed);
        if (m != 0 || has_closed_form) max_dev = std::max(max_dev, dev);
        std::snprintf(line, sizeof(line), "%d,%.12g,%.12g,%.12g\n", m, num,
                      closed, dev);
        os << line;
    }
    write_text_file(out_path, os.str());
    std::cout << "wrote " << out_path << " ("
              << (has_closed_form ? "max closed-form deviation "
                                  : "max sidelobe level ")
              << max_dev << ")\n";
    return kExitPass;
}

// ------------------------------------------------------------ check-svsets

void print_violations(const CriterionReport& r) {
    for (const CriterionViolation& v : r.violations)
        std::cout << "  sets (" << v.set_i << "," << v.set_j << "): subblocks "
                  << v.subblock_v << " and " << v.subblock_w
                  << " share distance " << v.distance << "\n";
}

int run_check(const std::string& path, int n_expect, int v_expect,
              int criterion, bool criterion_given) {
    SvCollection c = load_collection_file(path);
    if (n_expect > 0 && c.n != n_expect)
        throw std::invalid_argument("file declares n=" + std::to_string(c.n) +
                                    " but --n is " + std::to_string(n_expect));
    if (v_expect > 0 && c.v_count != v_expect)
        throw std::invalid_argument("file declares v=" +
                                    std::to_string(c.v_count) + " but --v is " +
                                    std::to_string(v_expect));

    CriterionReport r1 = check_criterion1(c);
    CriterionReport r2 = check_criterion2(c);

    std::cout << "file: " << path << "\n";
    std::cout << "n=" << c.n << ", v=" << c.v_count << ", u=" << c.u_count()
              << "\n";
    std::cout << "criterion 1: " << (r1.satisfied ? "pass" : "fail") << "\n";
    print_violations(r1);
    std::cout << "criterion 2: " << (r2.satisfied ? "pass" : "fail") << "\n";
    print_violations(r2);
    if (r1.satisfied) {
        Criterion3Score score = criterion3_score(c);
        std::cout << "criterion 3: min_circular_gap=" << score.min_circular_gap
                  << ", mean_circular_gap=" << score.mean_circular_gap << "\n";
    } else {
        std::cout << "criterion 3: not defined (criterion 1 fails)\n";
    }

    if (!criterion_given) return kExitPass;
    bool pass = false;
    switch (criterion) {
        case 1: pass = r1.satisfied; break;
        case 2: pass = r2.satisfied; break;
        // The score itself has no pass threshold; computability (criterion 1)
        // is the gate.
        case 3: pass = r1.satisfied; break;
        default:
            throw std::invalid_argument("criterion must be 1, 2, or 3");
    }
    return pass ? kExitPass : kExitFail;
}

// ----------------------------------------------------------- search-svsets

int run_search(int n, int v_count, int u_count, const std::string& partition,
               std::uint64_t seed, long iterations, const std::string& out_path) {
    PartitionKind kind = partition_kind_from_string(partition);
    SvCollection c;
    try {
        c = search_sv_collection(n, v_count, u_count, kind, seed, iterations);
    } catch (const std::runtime_error& e) {
        std::cerr << "search failed: " << e.what() << "\n";
        return kExitFail;
    }
    std::ostringstream os;
    write_sv_collection(c, os);
    write_text_file(out_path, os.str());
    std::cout << "wrote " << out_path << " (u=" << c.u_count() << ")\n";
    if (check_criterion1(c).satisfied) {
        Criterion3Score score = criterion3_score(c);
        std::cout << "criterion 3: min_circular_gap=" << score.min_circular_gap
                  << ", mean_circular_gap=" << score.mean_circular_gap << "\n";
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic shifted sequences PAPR toolkit"};
    app.require_subcommand(1);

    // simulate ------------------------------------------------------------
    SimulateArgs sim;
    CLI::App* simulate =
        app.add_subcommand("simulate", "run a Monte Carlo CCDF experiment");
    simulate->add_option("--config", sim.config_path,
                         "flat key=value config file");
    simulate->add_option("--out", sim.out_path, "output CSV path")->required();
    simulate->add_option("--workers", sim.workers,
                         "worker threads (0 = runtime default)");
    simulate->add_option("--n", sim.n, "subcarrier count");
    simulate->add_option("--v_count", sim.v_count, "subblock count");
    simulate->add_option("--u_count", sim.u_count, "candidate count");
    simulate->add_option("--partition", sim.partition,
                         "interleaved|adjacent|random");
    simulate->add_option("--partition_seed", sim.partition_seed,
                         "seed for the random partition");
    simulate->add_option("--sv_collection", sim.sv_collection,
                         "shift-value set file");
    simulate->add_option("--trials", sim.trials, "Monte Carlo trials");
    simulate->add_option("--master_seed", sim.master_seed, "experiment seed");
    simulate->add_option("--oversample", sim.oversample,
                         "oversampling factor (power of two)");
    simulate->add_option("--scheme", sim.scheme, "css|pts|none");
    simulate->add_option("--grid_min_db", sim.grid_min_db,
                         "lowest threshold (dB)");
    simulate->add_option("--grid_max_db", sim.grid_max_db,
                         "highest threshold (dB)");
    simulate->add_option("--grid_step_db", sim.grid_step_db,
                         "threshold step (dB)");

    // acf -----------------------------------------------------------------
    int acf_n = 0, acf_v = 0, acf_subblock = 1;
    std::uint64_t acf_seed = 1;
    std::string acf_partition, acf_out;
    CLI::App* acf = app.add_subcommand(
        "acf", "compare numeric subblock ACF against the closed form");
    acf->add_option("--n", acf_n, "subcarrier count")->required();
    acf->add_option("--v", acf_v, "subblock count")->required();
    acf->add_option("--partition", acf_partition,
                    "interleaved|adjacent|random|msequence")
        ->required();
    acf->add_option("--seed", acf_seed, "seed for the random partition");
    acf->add_option("--subblock", acf_subblock, "subblock to analyze (1-based)");
    acf->add_option("--out", acf_out, "output CSV path")->required();

    // check-svsets ----------------------------------------------------------
    std::string check_file;
    int check_n = 0, check_v = 0, check_criterion = 0;
    CLI::App* check = app.add_subcommand(
        "check-svsets", "verify criteria for a shift-value set file");
    check->add_option("--file", check_file, "shift-value set file")->required();
    check->add_option("--n", check_n, "expected subcarrier count");
    check->add_option("--v", check_v, "expected subblock count");
    CLI::Option* crit_opt = check->add_option(
        "--criterion", check_criterion, "criterion to gate the exit code on");

    // search-svsets ---------------------------------------------------------
    int search_n = 0, search_v = 0, search_u = 0;
    std::uint64_t search_seed = 1;
    long search_iterations = 10000;
    std::string search_partition, search_out;
    CLI::App* search = app.add_subcommand(
        "search-svsets", "randomized search for a valid shift-value collection");
    search->add_option("--n", search_n, "subcarrier count")->required();
    search->add_option("--v", search_v, "subblock count")->required();
    search->add_option("--u", search_u, "sets to find")->required();
    search->add_option("--partition", search_partition,
                       "interleaved|adjacent|random")
        ->required();
    search->add_option("--seed", search_seed, "search seed");
    search->add_option("--iterations", search_iterations, "proposal budget");
    search->add_option("--out", search_out, "output sv-set file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (simulate->parsed()) return run_simulate(sim, *simulate);
        if (acf->parsed())
            return run_acf(acf_n, acf_v, acf_partition, acf_seed, acf_subblock,
                           acf_out);
        if (check->parsed())
            return run_check(check_file, check_n, check_v, check_criterion,
                             crit_opt->count() > 0);
        if (search->parsed())
            return run_search(search_n, search_v, search_u, search_partition,
                              search_seed, search_iterations, search_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
