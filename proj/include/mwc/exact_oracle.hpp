#pragma once

#include <vector>

#include "mwc/graph.hpp"

namespace mwc {

struct OracleResult {
    Weight weight = 0;
    std::vector<Vertex> clique;  // sorted, 0-based
};

// Exact maximum vertex weight clique by branch and bound over 64-bit candidate
// masks, pruning on the sum of remaining candidate weights. Independent of the
// local search path; intended for verification on small instances.
// Throws std::invalid_argument when the instance exceeds 64 vertices.
OracleResult exact_oracle(const VertexWeightedGraph& g);

}  // namespace mwc
