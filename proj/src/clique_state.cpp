#include "mwc/clique_state.hpp"

#include <cassert>
#include <stdexcept>

namespace mwc {

CliqueState::CliqueState(const VertexWeightedGraph& g) : g_(&g) {
    const int n = g.vertex_count();
    clique_pos_.assign(n, -1);
    in_clique_.assign(n, 0);
    conn_.assign(n, 0);
    member_adj_sum_.assign(n, 0);
    buckets_.assign(n + 1, {});
    bucket_pos_.assign(n, -1);
    last_change_.assign(n, 0);
    buckets_[0].reserve(n);
    for (Vertex v = 0; v < n; ++v) {
        buckets_[0].push_back(v);
        bucket_pos_[v] = v;
    }
}

void CliqueState::reset() {
    const int n = g_->vertex_count();
    clique_.clear();
    std::fill(clique_pos_.begin(), clique_pos_.end(), -1);
    std::fill(in_clique_.begin(), in_clique_.end(), 0);
    std::fill(conn_.begin(), conn_.end(), 0);
    std::fill(member_adj_sum_.begin(), member_adj_sum_.end(), 0);
    member_id_sum_ = 0;
    for (auto& b : buckets_) b.clear();
    for (Vertex v = 0; v < n; ++v) {
        buckets_[0].push_back(v);
        bucket_pos_[v] = v;
    }
    std::fill(last_change_.begin(), last_change_.end(), 0);
    step_ = 0;
    weight_ = 0;
}

Vertex CliqueState::swap_partner(Vertex u) const {
    assert(!contains(u) && conn_[u] == size() - 1);
    return static_cast<Vertex>(member_id_sum_ - member_adj_sum_[u]);
}

void CliqueState::bucket_erase(Vertex v, int level) {
    auto& b = buckets_[level];
    const int pos = bucket_pos_[v];
    assert(pos >= 0 && b[pos] == v);
    b[pos] = b.back();
    bucket_pos_[b.back()] = pos;
    b.pop_back();
    bucket_pos_[v] = -1;
}

void CliqueState::bucket_insert(Vertex v, int level) {
    auto& b = buckets_[level];
    bucket_pos_[v] = static_cast<int>(b.size());
    b.push_back(v);
}

void CliqueState::raw_add(Vertex v) {
    bucket_erase(v, conn_[v]);
    in_clique_[v] = 1;
    clique_pos_[v] = static_cast<int>(clique_.size());
    clique_.push_back(v);
    Weight nw;
    if (__builtin_add_overflow(weight_, g_->weight(v), &nw))
        throw std::overflow_error("clique weight overflow");
    weight_ = nw;
    member_id_sum_ += v;
    for (Vertex u : g_->neighbors(v)) {
        ++conn_[u];
        member_adj_sum_[u] += v;
        if (!in_clique_[u]) {
            bucket_erase(u, conn_[u] - 1);
            bucket_insert(u, conn_[u]);
        }
    }
}

void CliqueState::raw_drop(Vertex v) {
    const int pos = clique_pos_[v];
    clique_[pos] = clique_.back();
    clique_pos_[clique_.back()] = pos;
    clique_.pop_back();
    clique_pos_[v] = -1;
    in_clique_[v] = 0;
    weight_ -= g_->weight(v);
    member_id_sum_ -= v;
    for (Vertex u : g_->neighbors(v)) {
        --conn_[u];
        member_adj_sum_[u] -= v;
        if (!in_clique_[u]) {
            bucket_erase(u, conn_[u] + 1);
            bucket_insert(u, conn_[u]);
        }
    }
    // v was adjacent to every remaining member, so it lands in the addable bucket.
    bucket_insert(v, conn_[v]);
}

void CliqueState::add(Vertex v) {
    assert(!contains(v) && conn_[v] == size());
    raw_add(v);
    ++step_;
    last_change_[v] = step_;
}

void CliqueState::drop(Vertex v) {
    assert(contains(v));
    raw_drop(v);
    ++step_;
    last_change_[v] = step_;
}

void CliqueState::swap(Vertex entering, Vertex leaving) {
    assert(!contains(entering) && conn_[entering] == size() - 1 && swap_partner(entering) == leaving);
    raw_drop(leaving);
    raw_add(entering);
    ++step_;
    last_change_[entering] = step_;
    last_change_[leaving] = step_;
}

}  // namespace mwc
