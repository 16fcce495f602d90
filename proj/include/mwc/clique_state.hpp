#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mwc/graph.hpp"

namespace mwc {

using Step = std::uint64_t;

// Current clique plus incrementally maintained candidate sets, so every move
// costs O(degree) of the moved vertex.
//
// Non-members live in buckets keyed by their member-adjacency count; the
// addable set is bucket[|C|] and the swap-entry set is bucket[|C|-1]. For a
// swap entry u the single missing member is recovered from id sums: the sum of
// all member ids minus the sum of member ids adjacent to u.
//
// Owned by exactly one solver run; distinct runs share only the graph.
class CliqueState {
public:
    explicit CliqueState(const VertexWeightedGraph& g);

    void reset();

    // Moves. Preconditions are programming errors, asserted in debug builds:
    // add needs v in the addable set, drop needs membership, swap needs
    // (entering, leaving) to be a current swap pair. A swap is one step.
    void add(Vertex v);
    void drop(Vertex v);
    void swap(Vertex entering, Vertex leaving);

    std::span<const Vertex> members() const { return clique_; }
    std::span<const Vertex> addable() const { return buckets_[clique_.size()]; }
    std::span<const Vertex> swap_entries() const {
        if (clique_.empty()) return {};
        return buckets_[clique_.size() - 1];
    }
    // The unique member not adjacent to swap entry u.
    Vertex swap_partner(Vertex u) const;

    bool contains(Vertex v) const { return in_clique_[v] != 0; }
    int size() const { return static_cast<int>(clique_.size()); }
    Weight weight() const { return weight_; }
    Step step() const { return step_; }
    Step age(Vertex v) const { return step_ - last_change_[v]; }

    // Move gains: adding v, swapping `entering` for its partner, dropping v.
    Weight add_gain(Vertex v) const { return g_->weight(v); }
    Weight swap_gain(Vertex entering) const {
        return g_->weight(entering) - g_->weight(swap_partner(entering));
    }
    Weight drop_gain(Vertex v) const { return -g_->weight(v); }

    const VertexWeightedGraph& graph() const { return *g_; }

private:
    void raw_add(Vertex v);
    void raw_drop(Vertex v);
    void bucket_erase(Vertex v, int level);
    void bucket_insert(Vertex v, int level);

    const VertexWeightedGraph* g_;
    std::vector<Vertex> clique_;
    std::vector<int> clique_pos_;
    std::vector<char> in_clique_;
    std::vector<int> conn_;                       // |N(u) ∩ C| for every u
    std::vector<std::int64_t> member_adj_sum_;    // Σ ids of members adjacent to u
    std::int64_t member_id_sum_ = 0;
    std::vector<std::vector<Vertex>> buckets_;    // non-members keyed by conn
    std::vector<int> bucket_pos_;
    std::vector<Step> last_change_;
    Step step_ = 0;
    Weight weight_ = 0;
};

}  // namespace mwc
