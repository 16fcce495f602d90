#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mwc/clique_state.hpp"
#include "mwc/config.hpp"
#include "mwc/graph.hpp"
#include "mwc/prohibition.hpp"
#include "mwc/rng.hpp"

namespace mwc {

struct SolveLimits {
    double cutoff_seconds = 1.0;
    // When set, replaces the time cutoff; elapsed/time-to-best are reported as
    // zero so per-run records are reproducible byte for byte.
    std::optional<std::uint64_t> step_budget;
    // Early exit once the best weight reaches this target.
    std::optional<Weight> target;
    bool wall_clock = false;  // default is per-run CPU time
};

struct SolveOutcome {
    Weight best_weight = 0;
    std::vector<Vertex> best_clique;  // sorted, 0-based
    double time_to_best = 0.0;
    double elapsed = 0.0;
    std::uint64_t steps = 0;
    std::uint64_t restarts = 0;
};

// One solver run: construction, random walk and intensification driven by a
// Configuration, with pluggable prohibition. Owns all mutable state; many
// Searchers may share one immutable graph. Callers validate the configuration
// (the harness rejects invalid ones before any run starts).
class Searcher {
public:
    Searcher(const VertexWeightedGraph& g, const Configuration& cfg, std::uint64_t seed);

    SolveOutcome solve(const SolveLimits& limits);

    // Step-level entry points used by the tests.
    void begin_run();  // fresh clique, prohibition and ages
    void construct_initial();
    // False when the step degenerated to a no-op (drop branch on an empty clique).
    bool random_walk_step();
    void intensification_step();

    const CliqueState& clique() const { return clique_; }
    const ProhibitionState& prohibition() const { return prohibition_; }
    // Direct state access for tests and custom drivers.
    CliqueState& clique_mut() { return clique_; }
    ProhibitionState& prohibition_mut() { return prohibition_; }
    const Configuration& config() const { return cfg_; }
    Weight best_weight() const { return best_weight_; }
    const std::vector<Vertex>& best_clique() const { return best_clique_; }
    std::uint64_t total_steps() const { return finished_steps_ + clique_.step(); }

private:
    // Argmax with configurable tie handling; ties resolve uniformly at random,
    // or to the largest age first (rule 1) with a uniform fallback.
    struct Picker {
        Picker(int rule, Rng& rng) : rule_(rule), rng_(&rng) {}
        void offer(Vertex v, Weight score, Step candidate_age);
        bool empty() const { return !has_; }
        Vertex chosen() const { return chosen_; }
        Weight score() const { return score_; }

    private:
        int rule_;
        Rng* rng_;
        bool has_ = false;
        Vertex chosen_ = -1;
        Weight score_ = 0;
        Step age_ = 0;
        std::uint64_t tie_count_ = 0;
    };

    void apply_add(Vertex v);
    void apply_drop(Vertex v);
    void apply_swap(Vertex entering);
    void note_best();
    Vertex pick_drop_vertex();
    Vertex weight_based_drop();

    const VertexWeightedGraph* g_;
    Configuration cfg_;
    Rng rng_;
    CliqueState clique_;
    ProhibitionState prohibition_;

    Weight best_weight_ = 0;
    std::vector<Vertex> best_clique_;
    double best_time_ = 0.0;
    std::uint64_t finished_steps_ = 0;  // steps of completed (restarted) runs
    std::uint64_t restarts_ = 0;
    const struct RunTimer* timer_ = nullptr;  // active only inside solve()
};

}  // namespace mwc
