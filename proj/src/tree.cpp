#include "hypergrid/tree.hpp"

#include <limits>
#include <ostream>

#include "json.hpp"

#include "detail.hpp"
#include "walk.hpp"

namespace hypergrid {

std::string to_string(TreeKind kind) { return kind == TreeKind::PreferredSon ? "preferred" : "leftmost"; }

std::string to_string(NodeStatus status) { return status == NodeStatus::B ? "B" : "W"; }

std::string to_string(NodeType type) {
    switch (type) {
        case NodeType::W1: return "W1";
        case NodeType::W2: return "W2";
        case NodeType::Bnode: return "B";
        case NodeType::Wbeta: return "Wbeta";
        case NodeType::Wl: return "Wl";
        case NodeType::Wr: return "Wr";
    }
    return "?";
}

std::vector<NodeId> GeneratedTree::children(NodeId n) const {
    std::vector<NodeId> out(child_count[n]);
    for (std::uint32_t i = 0; i < child_count[n]; ++i) out[i] = first_child[n] + i;
    return out;
}

namespace {

NodeId to_node_id(const Natural& n, const char* what) {
    if (n > std::numeric_limits<NodeId>::max() / 4) throw ResourceLimit(std::string(what) + " does not fit a node index");
    return n.convert_to<NodeId>();
}

// number of [n]0, by greedy division over a 64-bit table
NodeId shifted(const std::vector<NodeId>& u, NodeId n) {
    std::size_t i = 0;
    while (u[i] <= n) ++i;
    NodeId out = 0;
    for (std::size_t j = i; j-- > 0;) {
        out += (n / u[j]) * u[j + 1];
        n %= u[j];
    }
    return out;
}

}  // namespace

GeneratedTree generate(const TilingParams& params, TreeKind kind, int depth, NodeId node_budget) {
    if (depth < 0) throw InvalidParameter("depth must be non-negative");
    const auto table = detail::u_table(params.p, depth + 2);
    Natural total = 0;
    for (int n = 0; n <= depth; ++n) total += (*table)[n];
    if (total > node_budget)
        throw ResourceLimit("tree of depth " + std::to_string(depth) + " has " + total.str() + " nodes, budget is " +
                            std::to_string(node_budget));
    const NodeId count = to_node_id(total, "tree size");
    std::vector<NodeId> u;
    for (int n = 0; n <= depth + 2; ++n) u.push_back(to_node_id((*table)[n], "level size"));

    GeneratedTree t;
    t.params = params;
    t.kind = kind;
    t.depth = depth;
    t.parent.assign(count + 1, 0);
    t.first_child.assign(count + 1, 0);
    t.child_count.assign(count + 1, 0);
    t.b_child_index.assign(count + 1, 0);
    t.status.assign(count + 1, NodeStatus::W);
    t.type.assign(count + 1, NodeType::W2);
    t.level.assign(count + 1, 0);
    t.level_offsets.push_back(1);
    t.type[1] = kind == TreeKind::PreferredSon ? NodeType::Wr : NodeType::W2;

    const bool preferred = kind == TreeKind::PreferredSon;
    NodeId next = 2;
    for (int lv = 0; lv < depth; ++lv) {
        t.level_offsets.push_back(next);
        for (NodeId n = t.level_offsets[lv]; n < t.level_offsets[lv + 1]; ++n) {
            const std::uint32_t sons = t.status[n] == NodeStatus::W ? params.p - 4 : params.p - 5;
            const std::uint32_t bpos = preferred ? sons - 1 : 1;
            const NodeId sigma = preferred ? 0 : shifted(u, n);
            t.first_child[n] = next;
            t.child_count[n] = sons;
            t.b_child_index[n] = bpos;
            for (std::uint32_t pos = 1; pos <= sons; ++pos, ++next) {
                t.parent[next] = n;
                t.level[next] = static_cast<std::uint16_t>(lv + 1);
                if (pos == bpos) {
                    t.status[next] = NodeStatus::B;
                    t.type[next] = NodeType::Bnode;
                } else if (preferred) {
                    t.type[next] = pos == sons ? NodeType::Wr : (pos == 1 ? NodeType::Wbeta : NodeType::Wl);
                } else {
                    const bool second = next == sigma || (t.type[n] == NodeType::W2 && pos == sons);
                    t.type[next] = second ? NodeType::W2 : NodeType::W1;
                }
            }
        }
    }
    t.level_offsets.push_back(next);
    return t;
}

int node_level(const TilingParams& params, const Natural& n) {
    if (n <= 0) throw InvalidCoordinate("node 0 has no level");
    int level = 0;
    Natural U = 1;
    while (U < n) {
        ++level;
        U += u_term(params.p, level);
    }
    return level;
}

Coordinate father(const TilingParams& params, const Coordinate& c) {
    require_canonical(params, c);
    if (c.empty()) throw Underflow("node 0 has no father");
    Coordinate prefix = c.prefix();
    if (c.signature() <= 1) return prefix;
    return increment(params, prefix);
}

Coordinate father(const TilingParams& params, TreeKind kind, const Coordinate& c) {
    if (kind == TreeKind::PreferredSon) return father(params, c);
    require_canonical(params, c);
    if (c.empty()) throw Underflow("node 0 has no father");
    const auto walk = detail::milestone_walk(params, kind, c, false);
    Coordinate prefix = c.prefix();
    if (walk.father_is_prefix) return prefix;
    return increment(params, prefix);
}

Coordinate preferred_son(const TilingParams& params, const Coordinate& c) {
    require_canonical(params, c);
    if (c.empty()) throw InvalidCoordinate("node 0 has no preferred son");
    return c.appended(0);
}

std::pair<NodeStatus, NodeType> classify(const TilingParams& params, TreeKind kind, const Coordinate& c) {
    require_canonical(params, c);
    if (c.empty()) throw InvalidCoordinate("node 0 has no status");
    if (kind == TreeKind::PreferredSon) {
        switch (c.signature()) {
            case 0: return {NodeStatus::B, NodeType::Bnode};
            case 1: return {NodeStatus::W, NodeType::Wr};
            case 2: return {NodeStatus::W, NodeType::Wbeta};
            default: return {NodeStatus::W, NodeType::Wl};
        }
    }
    const auto walk = detail::milestone_walk(params, kind, c, false);
    return {walk.node.status, walk.node.type};
}

std::vector<Coordinate> sons_preferred(const TilingParams& params, const Coordinate& c) {
    require_canonical(params, c);
    if (c.empty()) throw InvalidCoordinate("node 0 is not in the tree");
    std::vector<Coordinate> out;
    const Coordinate before = decrement(params, c);
    const Digit last = c.signature() != 0 ? params.b1() : params.b2();
    for (Digit d = 2; d <= last; ++d) out.push_back(before.appended(d));
    out.push_back(c.appended(0));
    out.push_back(c.appended(1));
    return out;
}

std::vector<Coordinate> sons_leftmost(const TilingParams& params, const Coordinate& c) {
    const auto [status, type] = classify(params, TreeKind::LeftmostSon, c);
    std::vector<Coordinate> out;
    const Coordinate before = decrement(params, c);
    const Digit sig = c.signature();
    const Digit first = (type == NodeType::W1 || sig == 0) ? 1 : 2;
    const Digit last = sig != 0 ? params.b1() : params.b2();
    for (Digit d = first; d <= last; ++d) out.push_back(before.appended(d));
    out.push_back(c.appended(0));
    if (type == NodeType::W2) out.push_back(c.appended(1));
    return out;
}

std::vector<Coordinate> sons(const TilingParams& params, TreeKind kind, const Coordinate& c) {
    return kind == TreeKind::PreferredSon ? sons_preferred(params, c) : sons_leftmost(params, c);
}

void dump_json(const GeneratedTree& tree, std::ostream& out) {
    for (NodeId n = 1; n <= tree.size(); ++n) {
        nlohmann::json rec;
        rec["num"] = n;
        rec["coord"] = encode(tree.params, Natural(n)).digits;
        rec["level"] = tree.level[n];
        rec["status"] = to_string(tree.status[n]);
        rec["type"] = to_string(tree.type[n]);
        rec["parent"] = tree.parent[n];
        rec["children"] = tree.children(n);
        out << rec.dump() << '\n';
    }
}

void dump_dot(const GeneratedTree& tree, std::ostream& out) {
    out << "digraph tree {\n";
    for (NodeId n = 1; n <= tree.size(); ++n) {
        out << "  n" << n << " [label=\"" << n << "\\n" << to_text(tree.params, encode(tree.params, Natural(n)))
            << "\"" << (tree.status[n] == NodeStatus::B ? ", style=filled, fillcolor=gray40, fontcolor=white" : "")
            << "];\n";
        if (tree.parent[n]) out << "  n" << tree.parent[n] << " -> n" << n << ";\n";
    }
    out << "}\n";
}

}  // namespace hypergrid
