#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace mwc {

using Vertex = std::int32_t;
using Weight = std::int64_t;

// Immutable undirected graph with positive integer vertex weights.
// Vertices are 0-based internally, 1-based in the DIMACS text format.
// Safe to share across concurrent solver runs once built.
class VertexWeightedGraph {
public:
    VertexWeightedGraph() = default;

    // Self-loops and duplicate edges are dropped; the edge count is recomputed
    // from the deduplicated set. Weights of size n, entries >= 1.
    static VertexWeightedGraph build(int n,
                                     const std::vector<std::pair<Vertex, Vertex>>& edges,
                                     std::vector<Weight> weights,
                                     std::vector<bool> explicit_weight = {});

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }

    // O(1) expected edge query; bit-matrix on small dense graphs, hash set otherwise.
    bool adjacent(Vertex u, Vertex v) const {
        if (u == v) return false;
        if (use_matrix_)
            return (matrix_[static_cast<std::size_t>(u) * row_words_ + (static_cast<std::size_t>(v) >> 6)] >>
                    (v & 63)) & 1u;
        return edge_set_.contains(edge_key(u, v));
    }

    Weight weight(Vertex v) const { return weights_[v]; }
    bool has_explicit_weight(Vertex v) const { return explicit_weight_[v]; }

    double density() const {
        if (n_ < 2) return 0.0;
        return 2.0 * static_cast<double>(m_) / (static_cast<double>(n_) * (n_ - 1));
    }

    // Equality on structure and weights (weight provenance flags excluded).
    bool operator==(const VertexWeightedGraph& other) const;

private:
    friend VertexWeightedGraph apply_default_weights(VertexWeightedGraph g);
    friend VertexWeightedGraph with_default_weights(const VertexWeightedGraph& g);

    std::uint64_t edge_key(Vertex u, Vertex v) const {
        auto a = static_cast<std::uint64_t>(u < v ? u : v);
        auto b = static_cast<std::uint64_t>(u < v ? v : u);
        return a * static_cast<std::uint64_t>(n_) + b;
    }

    int n_ = 0;
    long long m_ = 0;
    std::vector<Weight> weights_;
    std::vector<bool> explicit_weight_;
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adj_;
    bool use_matrix_ = false;
    std::size_t row_words_ = 0;
    std::vector<std::uint64_t> matrix_;
    std::unordered_set<std::uint64_t> edge_set_;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line_no) : std::runtime_error(msg), line(line_no) {}
    int line;
};

// The (i mod 200) + 1 rule, i being the 1-based vertex id.
inline Weight default_weight(Vertex zero_based) {
    return static_cast<Weight>((zero_based + 1) % 200) + 1;
}

// DIMACS ascii clique format: `c` comments, one `p edge <n> <m>` header
// (`p col` accepted as alias), `e <u> <v>` edges, optional `v <u> <w>` weights.
// Vertices without a `v` line get the default weight rule.
VertexWeightedGraph parse_dimacs(std::string_view text);
VertexWeightedGraph parse_dimacs_file(const std::string& path);

// Fills the default rule into vertices lacking an explicit weight. Idempotent;
// never touches explicitly weighted vertices.
VertexWeightedGraph apply_default_weights(VertexWeightedGraph g);

// Copy with every weight forced to the default rule (harness --weights default).
VertexWeightedGraph with_default_weights(const VertexWeightedGraph& g);

// Same grammar as the parser; emits `v` lines for all non-default weights.
std::string serialize_dimacs(const VertexWeightedGraph& g);

}  // namespace mwc
