#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mwc/config.hpp"
#include "mwc/param_space.hpp"
#include "mwc/search.hpp"
#include "mwc/stats.hpp"

namespace mwc {

enum class WeightMode { Explicit, ForceDefault };

struct BatchUnit {
    std::string path;
    std::optional<Weight> target;
};

struct BatchOptions {
    Configuration config;
    std::uint64_t seed_begin = 1;
    std::uint64_t seed_end = 1;  // inclusive
    double cutoff = 1.0;
    std::optional<std::uint64_t> step_budget;
    int jobs = 1;
    bool wall_clock = false;
    WeightMode weights = WeightMode::Explicit;
    bool stop_at_target = true;  // early exit once a run reaches its target
};

struct BatchOutcome {
    std::vector<RunResult> runs;  // fixed (instance, seed) order regardless of jobs
    BatchStats stats;
    std::vector<std::string> errors;  // per-unit diagnostics (unit skipped)
};

// One solve per (instance, seed), up to `jobs` concurrently over a shared
// immutable graph cache. Unreadable instances are skipped with a diagnostic.
BatchOutcome run_batch(const std::vector<BatchUnit>& units, const BatchOptions& options);

// Instance list file: one unit per line, `path [target-weight]`, # comments.
std::vector<BatchUnit> read_instance_list(const std::string& path);

struct ConfigureOptions {
    int budget = 10;  // sampled configurations
    double cutoff = 1.0;
    std::optional<std::uint64_t> step_budget;
    std::uint64_t seed = 1;
    int jobs = 1;
    WeightMode weights = WeightMode::Explicit;
};

struct ConfigureOutcome {
    Configuration best;
    double best_mean_new_sq = 0.0;
    std::vector<double> sample_scores;  // mean NewSQ per sampled configuration
};

// Plain random search over the configuration space: samples `budget` valid
// configurations, evaluates mean NewSQ over the training set (one run per
// instance), returns the argmin; ties go to the earliest sample.
ConfigureOutcome random_search_configure(const ParamSpace& space,
                                         const std::vector<BatchUnit>& training,
                                         const ConfigureOptions& options);

}  // namespace mwc
