// Benchmark: serial reference experiment loop vs the OpenMP kernel at
// several worker counts. Also asserts the determinism contract — every
// configuration must produce a byte-identical CSV.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "csspapr/harness.hpp"
#include "csspapr/svsets.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace csspapr;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    long trials = 20000;
    if (argc > 1) trials = std::stol(argv[1]);

    SimConfig cfg;
    cfg.n = 128;
    cfg.v_count = 4;
    cfg.u_count = 4;
    cfg.partition_kind = PartitionKind::random;
    cfg.partition_seed = 1;
    cfg.trials = trials;
    cfg.master_seed = 1;
    cfg.sv_collection.n = cfg.n;
    cfg.sv_collection.v_count = cfg.v_count;
    cfg.sv_collection.sets = {SvSet{{0, 0, 0, 0}},
                              SvSet{{0, 8, 16, 24}},
                              SvSet{{0, 16, 32, 48}},
                              SvSet{{0, 24, 48, 72}}};

#ifdef _OPENMP
    std::cout << "openmp: enabled, max threads " << omp_get_max_threads()
              << "\n";
#else
    std::cout << "openmp: disabled (serial fallback in run_experiment)\n";
#endif
    std::cout << "trials: " << trials << "\n\n";

    auto t0 = std::chrono::steady_clock::now();
    CcdfTable serial_table = run_experiment_serial(cfg);
    double serial_s = seconds_since(t0);
    std::string reference_csv = ccdf_csv(serial_table, cfg);
    std::cout << "serial reference: " << serial_s << " s\n";

    bool all_identical = true;
    for (int workers : {1, 2, 4, 0}) {
        t0 = std::chrono::steady_clock::now();
        CcdfTable table = run_experiment(cfg, workers);
        double dt = seconds_since(t0);
        bool identical = ccdf_csv(table, cfg) == reference_csv;
        all_identical = all_identical && identical;
        std::cout << "openmp workers=" << workers
                  << (workers == 0 ? " (default)" : "") << ": " << dt
                  << " s, speedup " << serial_s / dt << "x, csv "
                  << (identical ? "identical" : "DIFFERS") << "\n";
    }

    if (!all_identical) {
        std::cout << "\nFAIL: worker count changed the output\n";
        return 1;
    }
    std::cout << "\nall worker counts byte-identical to the serial reference\n";
    return 0;
}
