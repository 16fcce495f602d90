#include "mwc/search.hpp"

#include <algorithm>
#include <cassert>
#include <ctime>

namespace mwc {

// Per-run clock: thread CPU time by default (each run owns one thread), wall
// clock when asked.
struct RunTimer {
    explicit RunTimer(bool wall) : wall_(wall) { start_ = now(); }
    double seconds() const { return now() - start_; }

private:
    double now() const {
        timespec ts;
        clock_gettime(wall_ ? CLOCK_MONOTONIC : CLOCK_THREAD_CPUTIME_ID, &ts);
        return static_cast<double>(ts.tv_sec) + static_cast<double>(ts.tv_nsec) * 1e-9;
    }
    bool wall_;
    double start_;
};

void Searcher::Picker::offer(Vertex v, Weight score, Step candidate_age) {
    if (!has_ || score > score_) {
        has_ = true;
        chosen_ = v;
        score_ = score;
        age_ = candidate_age;
        tie_count_ = 1;
        return;
    }
    if (score < score_) return;
    if (rule_ == 1) {
        if (candidate_age > age_) {
            chosen_ = v;
            age_ = candidate_age;
            tie_count_ = 1;
            return;
        }
        if (candidate_age < age_) return;
    }
    // Uniform among ties (rule 0) and among equal-age ties (rule 1).
    ++tie_count_;
    if (rng_->below(tie_count_) == 0) {
        chosen_ = v;
        age_ = candidate_age;
    }
}

Searcher::Searcher(const VertexWeightedGraph& g, const Configuration& cfg, std::uint64_t seed)
    : g_(&g),
      cfg_(cfg),
      rng_(seed),
      clique_(g),
      prohibition_(g.vertex_count(), static_cast<ProhibitionMode>(cfg.tabu_type),
                   cfg.tabu_tenure) {}

void Searcher::begin_run() {
    finished_steps_ += clique_.step();
    clique_.reset();
    prohibition_.reset();
}

void Searcher::note_best() {
    if (clique_.weight() > best_weight_) {
        best_weight_ = clique_.weight();
        auto m = clique_.members();
        best_clique_.assign(m.begin(), m.end());
        std::sort(best_clique_.begin(), best_clique_.end());
        if (timer_) best_time_ = timer_->seconds();
    }
}

void Searcher::apply_add(Vertex v) {
    clique_.add(v);
    prohibition_.on_add(v, g_->neighbors(v), clique_.step());
    note_best();
}

void Searcher::apply_drop(Vertex v) {
    clique_.drop(v);
    prohibition_.on_drop(v, clique_.step());
    note_best();
}

void Searcher::apply_swap(Vertex entering) {
    const Vertex leaving = clique_.swap_partner(entering);
    const int swap_count_before = static_cast<int>(clique_.swap_entries().size());
    clique_.swap(entering, leaving);
    prohibition_.on_swap_out(leaving, swap_count_before, clique_.step(), rng_);
    note_best();
}

void Searcher::construct_initial() {
    assert(clique_.size() == 0);
    const int n = g_->vertex_count();
    if (n == 0) return;

    if (cfg_.init_construction != 0) {
        // Greedy modes start from a uniformly random seed vertex.
        apply_add(static_cast<Vertex>(rng_.below(n)));
    }
    while (true) {
        auto cands = clique_.addable();
        if (cands.empty()) break;
        Vertex v = -1;
        switch (cfg_.init_construction) {
            case 0:
                v = cands[rng_.below(cands.size())];
                break;
            case 1: {
                Picker pick(0, rng_);
                for (Vertex u : cands) pick.offer(u, g_->weight(u), 0);
                v = pick.chosen();
                break;
            }
            case 2: {
                Picker pick(0, rng_);
                for (Vertex u : cands) pick.offer(u, g_->degree(u), 0);
                v = pick.chosen();
                break;
            }
        }
        apply_add(v);
    }
}

bool Searcher::random_walk_step() {
    // Unconstrained: prohibition is never consulted here, only notified.
    const std::uint64_t prob = rng_.below(100);
    auto adds = clique_.addable();
    if (prob < 33 && !adds.empty()) {
        apply_add(adds[rng_.below(adds.size())]);
        return true;
    }
    auto swaps = clique_.swap_entries();
    if (prob < 67 && !swaps.empty()) {
        apply_swap(swaps[rng_.below(swaps.size())]);
        return true;
    }
    auto members = clique_.members();
    if (!members.empty()) {
        apply_drop(members[rng_.below(members.size())]);
        return true;
    }
    return false;  // drop branch with an empty clique
}

Vertex Searcher::weight_based_drop() {
    Picker pick(cfg_.breaking_ties, rng_);
    for (Vertex v : clique_.members()) pick.offer(v, clique_.drop_gain(v), clique_.age(v));
    return pick.chosen();
}

Vertex Searcher::pick_drop_vertex() {
    auto members = clique_.members();
    switch (cfg_.drop_vertex) {
        case 0:
            return members[rng_.below(members.size())];
        case 1:
            if (rng_.real01() < cfg_.randomdrop_prob) return members[rng_.below(members.size())];
            return weight_based_drop();
        default:
            return weight_based_drop();
    }
}

void Searcher::intensification_step() {
    const Step now = clique_.step();

    Picker add_pick(cfg_.breaking_ties, rng_);
    for (Vertex v : clique_.addable())
        if (!prohibition_.is_forbidden(v, now)) add_pick.offer(v, clique_.add_gain(v), clique_.age(v));

    Picker swap_pick(cfg_.breaking_ties, rng_);
    auto swaps = clique_.swap_entries();
    if (cfg_.perform_BMS) {
        if (!swaps.empty()) {
            for (int k = 0; k < cfg_.bms_num; ++k) {
                const Vertex u = swaps[rng_.below(swaps.size())];
                if (!prohibition_.is_forbidden(u, now))
                    swap_pick.offer(u, clique_.swap_gain(u), clique_.age(u));
            }
        }
    } else {
        for (Vertex u : swaps)
            if (!prohibition_.is_forbidden(u, now)) swap_pick.offer(u, clique_.swap_gain(u), clique_.age(u));
    }

    if (!add_pick.empty()) {
        if (swap_pick.empty() || add_pick.score() > swap_pick.score())
            apply_add(add_pick.chosen());
        else
            apply_swap(swap_pick.chosen());
        return;
    }

    if (clique_.size() == 0) {
        // Every vertex is forbidden: one unconstrained add keeps the search alive.
        auto all = clique_.addable();
        if (!all.empty()) apply_add(all[rng_.below(all.size())]);
        return;
    }

    Weight best_drop_gain = 0;
    bool first = true;
    for (Vertex v : clique_.members()) {
        const Weight gain = clique_.drop_gain(v);
        if (first || gain > best_drop_gain) best_drop_gain = gain;
        first = false;
    }
    if (swap_pick.empty() || best_drop_gain > swap_pick.score())
        apply_drop(pick_drop_vertex());
    else
        apply_swap(swap_pick.chosen());
}

SolveOutcome Searcher::solve(const SolveLimits& limits) {
    const RunTimer timer(limits.wall_clock);
    timer_ = &timer;
    best_weight_ = 0;
    best_clique_.clear();
    best_time_ = 0.0;
    finished_steps_ = 0;
    restarts_ = 0;

    if (g_->vertex_count() == 0) {
        timer_ = nullptr;
        return SolveOutcome{};
    }

    std::uint64_t check_tick = 0;
    auto finished = [&] {
        if (limits.target && best_weight_ >= *limits.target) return true;
        if (limits.step_budget) return total_steps() >= *limits.step_budget;
        // Amortize the clock read over iterations.
        if ((check_tick++ & 63) != 0) return false;
        return timer.seconds() >= limits.cutoff_seconds;
    };

    while (!finished()) {
        begin_run();
        construct_initial();
        while (!finished()) {
            if (cfg_.perform_randomwalk && cfg_.randomwalk_prob > 0 &&
                rng_.real01() < cfg_.randomwalk_prob) {
                random_walk_step();
                continue;
            }
            const Weight before = clique_.weight();
            intensification_step();
            // The live clique can never be ahead of the recorded best.
            assert(clique_.weight() <= best_weight_);
            if (before >= clique_.weight() && cfg_.perform_restart && cfg_.restart_prob > 0 &&
                rng_.real01() < cfg_.restart_prob) {
                ++restarts_;
                break;
            }
        }
    }

    SolveOutcome out;
    out.best_weight = best_weight_;
    out.best_clique = best_clique_;
    out.steps = total_steps();
    out.restarts = restarts_;
    if (limits.step_budget) {
        out.time_to_best = 0.0;
        out.elapsed = 0.0;
    } else {
        out.time_to_best = best_time_;
        out.elapsed = timer.seconds();
    }
    timer_ = nullptr;
    return out;
}

}  // namespace mwc
