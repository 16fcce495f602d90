#include "mwc/batch.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

namespace mwc {

namespace {

double quantize_us(double seconds) { return std::round(seconds * 1e6) / 1e6; }

struct LoadedInstance {
    std::string path;
    std::optional<Weight> target;
    VertexWeightedGraph graph;
    bool ok = false;
    std::string error;
};

std::vector<LoadedInstance> load_instances(const std::vector<BatchUnit>& units, WeightMode mode) {
    std::vector<LoadedInstance> loaded;
    loaded.reserve(units.size());
    for (const auto& u : units) {
        LoadedInstance li;
        li.path = u.path;
        li.target = u.target;
        try {
            li.graph = parse_dimacs_file(u.path);
            if (mode == WeightMode::ForceDefault) li.graph = with_default_weights(li.graph);
            li.ok = true;
        } catch (const std::exception& e) {
            li.error = u.path + ": " + e.what();
        }
        loaded.push_back(std::move(li));
    }
    return loaded;
}

}  // namespace

BatchOutcome run_batch(const std::vector<BatchUnit>& units, const BatchOptions& options) {
    BatchOutcome out;
    auto loaded = load_instances(units, options.weights);
    for (const auto& li : loaded)
        if (!li.ok) out.errors.push_back(li.error);

    struct Task {
        const LoadedInstance* instance;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (const auto& li : loaded) {
        if (!li.ok) continue;
        for (std::uint64_t s = options.seed_begin; s <= options.seed_end; ++s)
            tasks.push_back({&li, s});
    }

    std::vector<RunResult> results(tasks.size());
    std::vector<std::string> task_errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& t = tasks[i];
            SolveLimits limits;
            limits.cutoff_seconds = options.cutoff;
            limits.step_budget = options.step_budget;
            limits.wall_clock = options.wall_clock;
            if (options.stop_at_target && t.instance->target) limits.target = *t.instance->target;
            RunResult r;
            r.instance = t.instance->path;
            r.seed = t.seed;
            try {
                Searcher searcher(t.instance->graph, options.config, t.seed);
                SolveOutcome so = searcher.solve(limits);
                r.best_weight = so.best_weight;
                r.time_to_best = quantize_us(so.time_to_best);
                r.elapsed = quantize_us(so.elapsed);
                r.steps = so.steps;
                r.restarts = so.restarts;
                r.success = t.instance->target && so.best_weight >= *t.instance->target;
            } catch (const std::exception& e) {
                task_errors[i] = t.instance->path + " seed " + std::to_string(t.seed) + ": " + e.what();
            }
            results[i] = std::move(r);
        }
    };

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1 || tasks.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        const int count = std::min<std::size_t>(jobs, tasks.size());
        pool.reserve(count);
        for (int i = 0; i < count; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // Failed runs are dropped from the records; their diagnostics survive.
    std::vector<RunResult> kept;
    kept.reserve(results.size());
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (!task_errors[i].empty()) {
            out.errors.push_back(task_errors[i]);
            continue;
        }
        kept.push_back(std::move(results[i]));
    }
    out.runs = std::move(kept);
    out.stats = compute_stats(out.runs, options.cutoff);
    return out;
}

std::vector<BatchUnit> read_instance_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance list: " + path);
    std::vector<BatchUnit> units;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::string p;
        if (!(ss >> p) || p[0] == '#') continue;
        BatchUnit u;
        u.path = p;
        Weight target;
        if (ss >> target) u.target = target;
        units.push_back(std::move(u));
    }
    return units;
}

ConfigureOutcome random_search_configure(const ParamSpace& space,
                                         const std::vector<BatchUnit>& training,
                                         const ConfigureOptions& options) {
    if (training.empty()) throw std::invalid_argument("empty training set");

    Rng sample_rng(options.seed);
    ConfigureOutcome out;
    bool have_best = false;

    for (int i = 0; i < options.budget; ++i) {
        const Configuration candidate = sample_configuration(space, sample_rng);

        BatchOptions bo;
        bo.config = candidate;
        // One run per training instance, same seed for every candidate.
        bo.seed_begin = bo.seed_end = options.seed;
        bo.cutoff = options.cutoff;
        bo.step_budget = options.step_budget;
        bo.jobs = options.jobs;
        bo.weights = options.weights;
        bo.stop_at_target = false;  // NewSQ wants full-cutoff quality
        BatchOutcome bres = run_batch(training, bo);
        if (!bres.errors.empty()) throw std::runtime_error(bres.errors.front());

        double sum = 0.0;
        for (const auto& r : bres.runs) sum += new_sq(r.best_weight, r.time_to_best);
        const double mean = sum / static_cast<double>(bres.runs.size());
        out.sample_scores.push_back(mean);
        if (!have_best || mean < out.best_mean_new_sq) {
            have_best = true;
            out.best = candidate;
            out.best_mean_new_sq = mean;
        }
    }
    return out;
}

}  // namespace mwc
