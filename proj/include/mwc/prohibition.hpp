#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mwc/clique_state.hpp"
#include "mwc/rng.hpp"

namespace mwc {

// tabu_type codes: 0 = configuration checking, 1 = tenure, 2 = tenure with
// the neighbor lift on add.
enum class ProhibitionMode : int { Scc = 0, Tabu = 1, TabuCC = 2 };

// Per-vertex "may not (re-)enter the clique" status. Forbidden status only
// ever constrains entering; members are always free to leave, so drop/swap-out
// selection never consults this state.
//
// Step convention: `now` is the move counter value after the most recently
// applied move. A vertex is tenure-forbidden while now < tabu_until, so a drop
// at step s with tenure T blocks the selections of moves s+1 .. s+T.
class ProhibitionState {
public:
    ProhibitionState(int n, ProhibitionMode mode, int base_tenure);

    void reset();

    bool is_forbidden(Vertex v, Step now) const {
        if (mode_ == ProhibitionMode::Scc) return conf_allowed_[v] == 0;
        return now < tabu_until_[v];
    }

    // Add of v just applied at step `now`.
    void on_add(Vertex v, std::span<const Vertex> neighbors, Step now);
    // Drop of v just applied at step `now`.
    void on_drop(Vertex v, Step now);
    // Swap that removed v just applied at step `now`; swap_count_before is
    // |V_swap| measured before the move (the tenure formula's set size).
    void on_swap_out(Vertex v, int swap_count_before, Step now, Rng& rng);

    ProhibitionMode mode() const { return mode_; }
    int base_tenure() const { return base_tenure_; }

    // State inspection for tests.
    Step tabu_until(Vertex v) const { return tabu_until_[v]; }
    bool conf_allowed(Vertex v) const { return conf_allowed_[v] != 0; }
    const std::vector<Step>& tabu_until_raw() const { return tabu_until_; }
    const std::vector<char>& conf_allowed_raw() const { return conf_allowed_; }

private:
    ProhibitionMode mode_;
    int base_tenure_;
    std::vector<Step> tabu_until_;
    std::vector<char> conf_allowed_;
};

}  // namespace mwc
