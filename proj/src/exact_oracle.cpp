#include "mwc/exact_oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mwc {

namespace {

struct Bnb {
    const VertexWeightedGraph* g;
    std::vector<std::uint64_t> adj;
    Weight best = 0;
    std::uint64_t best_set = 0;

    void expand(std::uint64_t current, Weight weight, std::uint64_t cand, Weight cand_weight) {
        if (weight > best) {
            best = weight;
            best_set = current;
        }
        while (cand) {
            if (weight + cand_weight <= best) return;  // remaining candidates cannot win
            const int v = std::countr_zero(cand);
            const std::uint64_t bit = std::uint64_t{1} << v;
            cand ^= bit;
            cand_weight -= g->weight(v);

            std::uint64_t next = cand & adj[v];
            Weight next_weight = 0;
            for (std::uint64_t s = next; s;) {
                const int u = std::countr_zero(s);
                s &= s - 1;
                next_weight += g->weight(u);
            }
            expand(current | bit, weight + g->weight(v), next, next_weight);
        }
    }
};

}  // namespace

OracleResult exact_oracle(const VertexWeightedGraph& g) {
    const int n = g.vertex_count();
    if (n > 64) throw std::invalid_argument("instance too large for the exact oracle (n > 64)");

    Bnb bnb;
    bnb.g = &g;
    bnb.adj.assign(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : g.neighbors(v)) bnb.adj[v] |= std::uint64_t{1} << u;

    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    Weight total = 0;
    for (Vertex v = 0; v < n; ++v) total += g.weight(v);
    bnb.expand(0, 0, all, total);

    OracleResult out;
    out.weight = bnb.best;
    for (int v = 0; v < n; ++v)
        if (bnb.best_set >> v & 1) out.clique.push_back(v);
    return out;
}

}  // namespace mwc
