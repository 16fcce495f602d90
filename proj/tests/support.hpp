#pragma once

// Shared helpers for the test suites: small fixture graphs, random graphs, and
// brute-force oracles kept independent of the incremental solver structures.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "mwc/clique_state.hpp"
#include "mwc/graph.hpp"
#include "mwc/rng.hpp"

namespace mwc::test {

inline VertexWeightedGraph make_graph(int n, std::vector<std::pair<Vertex, Vertex>> edges_1based,
                                      std::vector<Weight> weights) {
    for (auto& [u, v] : edges_1based) {
        --u;
        --v;
    }
    return VertexWeightedGraph::build(n, edges_1based, std::move(weights));
}

// Triangle on vertices 1,2,3 with weights (2,3,4).
inline VertexWeightedGraph triangle() {
    return make_graph(3, {{1, 2}, {1, 3}, {2, 3}}, {2, 3, 4});
}

// Path 1-2-3, unit weights.
inline VertexWeightedGraph path3() {
    return make_graph(3, {{1, 2}, {2, 3}}, {1, 1, 1});
}

// K4 minus the edge (3,4), weights (1,1,5,9).
inline VertexWeightedGraph k4_minus_edge() {
    return make_graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}, {1, 1, 5, 9});
}

// Star: center 1, leaves 2..4.
inline VertexWeightedGraph star4(std::vector<Weight> weights = {1, 9, 9, 9}) {
    return make_graph(4, {{1, 2}, {1, 3}, {1, 4}}, std::move(weights));
}

// G(n, p) with the (i mod 200)+1 weight rule.
inline VertexWeightedGraph random_graph(int n, double p, Rng& rng) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.real01() < p) edges.emplace_back(u, v);
    std::vector<Weight> weights(n);
    for (Vertex v = 0; v < n; ++v) weights[v] = default_weight(v);
    return VertexWeightedGraph::build(n, edges, std::move(weights));
}

// From-scratch recomputation of the candidate sets: the oracle the incremental
// CliqueState is checked against.
struct BruteSets {
    std::vector<Vertex> members;              // sorted
    std::vector<Vertex> addable;              // sorted
    std::vector<std::pair<Vertex, Vertex>> swap_pairs;  // (entering, leaving), sorted
    Weight weight = 0;
};

inline BruteSets brute_sets(const VertexWeightedGraph& g, const std::vector<Vertex>& clique) {
    BruteSets out;
    out.members = clique;
    std::sort(out.members.begin(), out.members.end());
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : clique) {
        in[v] = 1;
        out.weight += g.weight(v);
    }
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (in[u]) continue;
        std::vector<Vertex> missing;
        for (Vertex v : out.members)
            if (!g.adjacent(u, v)) missing.push_back(v);
        if (missing.empty())
            out.addable.push_back(u);
        else if (missing.size() == 1)
            out.swap_pairs.emplace_back(u, missing.front());
    }
    return out;
}

// Exhaustive clique enumeration (no weight pruning); independent of the
// branch-and-bound oracle it cross-checks.
inline void enumerate_cliques(const VertexWeightedGraph& g, std::vector<Vertex>& current,
                              Weight weight, Vertex next, Weight& best,
                              std::vector<Vertex>& best_clique) {
    if (weight > best) {
        best = weight;
        best_clique = current;
    }
    for (Vertex v = next; v < g.vertex_count(); ++v) {
        bool ok = true;
        for (Vertex u : current) ok = ok && g.adjacent(u, v);
        if (!ok) continue;
        current.push_back(v);
        enumerate_cliques(g, current, weight + g.weight(v), v + 1, best, best_clique);
        current.pop_back();
    }
}

inline Weight brute_max_weight_clique(const VertexWeightedGraph& g,
                                      std::vector<Vertex>* clique_out = nullptr) {
    Weight best = 0;
    std::vector<Vertex> current, best_clique;
    enumerate_cliques(g, current, 0, 0, best, best_clique);
    if (clique_out) *clique_out = best_clique;
    return best;
}

inline bool is_clique(const VertexWeightedGraph& g, const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j])) return false;
    return true;
}

// A uniformly random legal move applied to the state; returns false when the
// graph admits no move (empty graph). Used to drive long random traces.
enum class MoveKind { Add, Drop, Swap };
struct TraceMove {
    MoveKind kind;
    Vertex v;        // added, dropped, or entering vertex
    Vertex partner;  // leaving vertex for swaps
};

inline std::optional<TraceMove> random_legal_move(CliqueState& state, Rng& rng) {
    const auto adds = state.addable();
    const auto swaps = state.swap_entries();
    const auto members = state.members();
    const std::size_t total = adds.size() + swaps.size() + members.size();
    if (total == 0) return std::nullopt;
    std::size_t k = rng.below(total);
    if (k < adds.size()) {
        const Vertex v = adds[k];
        state.add(v);
        return TraceMove{MoveKind::Add, v, -1};
    }
    k -= adds.size();
    if (k < swaps.size()) {
        const Vertex v = swaps[k];
        const Vertex partner = state.swap_partner(v);
        state.swap(v, partner);
        return TraceMove{MoveKind::Swap, v, partner};
    }
    k -= swaps.size();
    const Vertex v = members[k];
    state.drop(v);
    return TraceMove{MoveKind::Drop, v, -1};
}

}  // namespace mwc::test
