#include "mwc/prohibition.hpp"

#include <algorithm>

namespace mwc {

ProhibitionState::ProhibitionState(int n, ProhibitionMode mode, int base_tenure)
    : mode_(mode), base_tenure_(base_tenure), tabu_until_(n, 0), conf_allowed_(n, 1) {}

void ProhibitionState::reset() {
    std::fill(tabu_until_.begin(), tabu_until_.end(), Step{0});
    std::fill(conf_allowed_.begin(), conf_allowed_.end(), char{1});
}

void ProhibitionState::on_add(Vertex v, std::span<const Vertex> neighbors, Step now) {
    switch (mode_) {
        case ProhibitionMode::Scc:
            for (Vertex u : neighbors) conf_allowed_[u] = 1;
            break;
        case ProhibitionMode::Tabu:
            break;
        case ProhibitionMode::TabuCC:
            // Lift: any pending tenure on a neighbor expires immediately.
            for (Vertex u : neighbors) tabu_until_[u] = now;
            break;
    }
    (void)v;
}

void ProhibitionState::on_drop(Vertex v, Step now) {
    if (mode_ == ProhibitionMode::Scc)
        conf_allowed_[v] = 0;
    else
        tabu_until_[v] = now + static_cast<Step>(base_tenure_);
}

void ProhibitionState::on_swap_out(Vertex v, int swap_count_before, Step now, Rng& rng) {
    if (mode_ == ProhibitionMode::Scc) {
        conf_allowed_[v] = 0;
    } else {
        const Step jitter = rng.below(static_cast<std::uint64_t>(std::max(swap_count_before, 0)));
        tabu_until_[v] = now + jitter + static_cast<Step>(base_tenure_);
    }
}

}  // namespace mwc
