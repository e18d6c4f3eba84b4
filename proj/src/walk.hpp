#pragma once

#include <vector>

#include "hypergrid/tree.hpp"

namespace hypergrid::detail {

struct WalkNode {
    NodeStatus status = NodeStatus::W;
    NodeType type = NodeType::W2;
    Digit sig = 1;
};

struct WalkResult {
    std::vector<int> path;
    WalkNode node;
    bool father_is_prefix = true;
};

// Walks the digits of c keeping the branches to the prefix read so far (l)
// and to its successor (r).  Works for every p >= 7 and both kinds.
WalkResult milestone_walk(const TilingParams& params, TreeKind kind, const Coordinate& c, bool want_path);

}  // namespace hypergrid::detail
