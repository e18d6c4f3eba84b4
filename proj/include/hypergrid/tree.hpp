#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hypergrid/numeration.hpp"

namespace hypergrid {

enum class TreeKind { PreferredSon, LeftmostSon };
enum class NodeStatus : std::uint8_t { B, W };
// W1/W2/Bnode for the leftmost son tree, Wbeta/Wl/Wr/Bnode for the preferred son tree
enum class NodeType : std::uint8_t { W1, W2, Bnode, Wbeta, Wl, Wr };

using NodeId = std::uint64_t;

std::string to_string(TreeKind kind);
std::string to_string(NodeStatus status);
std::string to_string(NodeType type);

struct GeneratedTree {
    TilingParams params;
    TreeKind kind = TreeKind::LeftmostSon;
    int depth = 0;
    // arrays indexed by node number, slot 0 is node 0 (father of the root)
    std::vector<NodeId> parent;
    std::vector<NodeId> first_child;
    std::vector<std::uint32_t> child_count;
    std::vector<std::uint32_t> b_child_index;  // 1-based position of the B-son
    std::vector<NodeStatus> status;
    std::vector<NodeType> type;
    std::vector<std::uint16_t> level;
    std::vector<NodeId> level_offsets;  // first node of each level, then U_depth + 1

    NodeId size() const { return level_offsets.back() - 1; }
    NodeId level_begin(int n) const { return level_offsets[n]; }
    NodeId level_end(int n) const { return level_offsets[n + 1]; }
    NodeId level_size(int n) const { return level_end(n) - level_begin(n); }
    bool has_children(NodeId n) const { return child_count[n] != 0; }
    NodeId child(NodeId n, std::uint32_t pos) const { return first_child[n] + pos - 1; }
    std::vector<NodeId> children(NodeId n) const;
};

inline constexpr NodeId default_node_budget = 10'000'000;

GeneratedTree generate(const TilingParams& params, TreeKind kind, int depth,
                       NodeId node_budget = default_node_budget);

int node_level(const TilingParams& params, const Natural& n);

// father in the preferred son tree, by the prefix rule on the signature
Coordinate father(const TilingParams& params, const Coordinate& c);
Coordinate father(const TilingParams& params, TreeKind kind, const Coordinate& c);
Coordinate preferred_son(const TilingParams& params, const Coordinate& c);
std::pair<NodeStatus, NodeType> classify(const TilingParams& params, TreeKind kind, const Coordinate& c);
std::vector<Coordinate> sons_preferred(const TilingParams& params, const Coordinate& c);
std::vector<Coordinate> sons_leftmost(const TilingParams& params, const Coordinate& c);
std::vector<Coordinate> sons(const TilingParams& params, TreeKind kind, const Coordinate& c);

void dump_json(const GeneratedTree& tree, std::ostream& out);
void dump_dot(const GeneratedTree& tree, std::ostream& out);

}  // namespace hypergrid
