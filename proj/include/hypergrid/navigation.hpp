#pragma once

#include <string>
#include <vector>

#include "hypergrid/tree.hpp"

namespace hypergrid {

// 1-based child indices from the root; the empty path is the root itself
struct Path {
    std::vector<int> steps;

    friend bool operator==(const Path&, const Path&) = default;
};

enum class RefTag : std::uint8_t { Same, PrevTree, NextTree };

struct NeighborRef {
    RefTag tag = RefTag::Same;
    Natural node = 0;

    friend bool operator==(const NeighborRef&, const NeighborRef&) = default;
};

// entries[0] holds neighbour 1 (the father), up to neighbour p or p-2
struct NeighborList {
    std::vector<NeighborRef> entries;

    int size() const { return static_cast<int>(entries.size()); }
    const NeighborRef& at(int index) const { return entries.at(index - 1); }

    friend bool operator==(const NeighborList&, const NeighborList&) = default;
};

std::string to_string(RefTag tag);

Path path_preferred(const TilingParams& params, const Coordinate& c);
Path path_leftmost(const TilingParams& params, const Coordinate& c);
Path path_preferred_p7(const Coordinate& c);
Path path_leftmost_p7(const Coordinate& c);
// picks the p = 7 variant when p is 7
Path path(const TilingParams& params, TreeKind kind, const Coordinate& c);

NodeId follow(const GeneratedTree& tree, const Path& path);

NeighborList neighbors(const TilingParams& params, TreeKind kind, const Coordinate& c);

}  // namespace hypergrid
