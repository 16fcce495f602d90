#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mwc/graph.hpp"

namespace mwc {

// One completed run. Times are CPU seconds quantized to microseconds so the
// CSV and JSON emissions carry identical values.
struct RunResult {
    std::string instance;
    std::uint64_t seed = 0;
    Weight best_weight = 0;
    double time_to_best = 0.0;
    double elapsed = 0.0;
    std::uint64_t steps = 0;
    std::uint64_t restarts = 0;
    bool success = false;  // best weight reached the target, when one was given
};

// NewSQ = -(solution quality) + (solution time)/1000.
inline double new_sq(Weight best_weight, double time_to_best) {
    return -static_cast<double>(best_weight) + time_to_best / 1000.0;
}

// Penalized runtime: time to target for successful runs, 10x cutoff otherwise.
inline double par10(const RunResult& r, double cutoff) {
    return r.success ? r.time_to_best : 10.0 * cutoff;
}

struct BatchStats {
    int suc_count = 0;
    double t_avg = 0.0;  // mean time-to-best over all runs
    double success_rate = 0.0;
    double avg_par10_run = 0.0;       // mean of per-run PAR10 over every run
    double avg_par10_instance = 0.0;  // mean over instances of per-instance mean PAR10
    std::vector<double> par10_per_run;
    std::vector<double> new_sq_per_run;
};

BatchStats compute_stats(const std::vector<RunResult>& runs, double cutoff);

// CSV columns: instance,seed,best_weight,time_to_best,elapsed,steps,restarts,success
std::string runs_to_csv(const std::vector<RunResult>& runs);
std::string batch_to_json(const std::vector<RunResult>& runs, const BatchStats& stats, double cutoff);

}  // namespace mwc
