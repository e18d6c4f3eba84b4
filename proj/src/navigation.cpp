#include "hypergrid/navigation.hpp"

#include <algorithm>

#include "walk.hpp"

namespace hypergrid {

std::string to_string(RefTag tag) {
    switch (tag) {
        case RefTag::Same: return "same";
        case RefTag::PrevTree: return "prev";
        case RefTag::NextTree: return "next";
    }
    return "?";
}

namespace {

void require_node(const TilingParams& params, const Coordinate& c) {
    require_canonical(params, c);
    if (c.empty()) throw InvalidCoordinate("node 0 is not in the tree");
}

Path to_path(std::vector<int> steps) { return Path{std::move(steps)}; }

const TilingParams& heptagrid() {
    static const TilingParams params = make_params(7);
    return params;
}

// Copies b into a on positions i..t, then moves t down to i.
void actualize(std::vector<int>& a, const std::vector<int>& b, int i, int& t) {
    if (i > t) return;
    for (int j = i; j <= t; ++j) a[j] = b[j];
    t = i;
}

Path read_out(const std::vector<int>& l, int k) {
    Path out;
    for (int i = k; i >= 0; --i) {
        if (i == k && l[i] == 0) continue;
        out.steps.push_back(l[i]);
    }
    return out;
}

}  // namespace

Path path_preferred(const TilingParams& params, const Coordinate& c) {
    if (params.p == 7) throw Unsupported("p = 7 merges the digits 1 and b2, use path_preferred_p7");
    require_node(params, c);
    return to_path(detail::milestone_walk(params, TreeKind::PreferredSon, c, true).path);
}

Path path_leftmost(const TilingParams& params, const Coordinate& c) {
    if (params.p == 7) throw Unsupported("p = 7 merges the digits 1 and b2, use path_leftmost_p7");
    require_node(params, c);
    return to_path(detail::milestone_walk(params, TreeKind::LeftmostSon, c, true).path);
}

Path path_preferred_p7(const Coordinate& c) {
    require_node(heptagrid(), c);
    const int k = static_cast<int>(c.size()) - 1;
    auto a = [&](int i) { return c.digits[k - i]; };
    std::vector<int> l(k + 1, 0), r(k + 1, 0);
    int prev = k;
    bool white = true;
    for (int i = k; i >= 0; --i) {
        if (a(i) == 0) {
            actualize(r, l, i + 1, prev);
            l[i] = white ? 2 : 1;
            r[i] = white ? 3 : 2;
            white = false;
        } else if (a(i) == 1) {
            if (i == k) {
                l[k] = 0;
                r[k] = 1;
            } else {
                r[i] = 1;
                l[i] = white ? 3 : 2;
            }
            white = true;
        } else {
            if (i < k) actualize(l, r, i + 1, prev);
            l[i] = 1;
            r[i] = 2;
            white = true;
        }
    }
    return read_out(l, k);
}

Path path_leftmost_p7(const Coordinate& c) {
    require_node(heptagrid(), c);
    enum class S { B, W0, W1 };
    const int k = static_cast<int>(c.size()) - 1;
    auto a = [&](int i) { return c.digits[k - i]; };
    std::vector<int> l(k + 1, 0), r(k + 1, 0);
    int prev = k;
    S sl = S::W1;
    for (int i = k; i >= 0; --i) {
        if (a(i) == 0) {
            if (sl != S::B) {
                actualize(r, l, i + 1, prev);
                r[i] = 3;
            } else {
                r[i] = 1;
            }
            l[i] = 2;
            sl = S::W0;
        } else if (a(i) == 1) {
            if (i == k) {
                // the root: no step, its successor is its first son
                l[k] = 0;
                r[k] = 1;
                sl = S::W1;
            } else if (sl != S::B) {
                l[i] = 3;
                r[i] = 1;
                sl = S::W1;
            } else {
                actualize(l, r, i + 1, prev);
                l[i] = 1;
                r[i] = 2;
                sl = S::B;
            }
        } else {
            actualize(l, r, i + 1, prev);
            l[i] = 1;
            r[i] = 2;
            sl = S::B;
        }
    }
    return read_out(l, k);
}

Path path(const TilingParams& params, TreeKind kind, const Coordinate& c) {
    if (params.p == 7) return kind == TreeKind::PreferredSon ? path_preferred_p7(c) : path_leftmost_p7(c);
    return kind == TreeKind::PreferredSon ? path_preferred(params, c) : path_leftmost(params, c);
}

NodeId follow(const GeneratedTree& tree, const Path& path) {
    NodeId n = 1;
    for (int s : path.steps) {
        if (!tree.has_children(n)) throw OutOfRange("path is deeper than the tree");
        if (s < 1 || static_cast<std::uint32_t>(s) > tree.child_count[n])
            throw OutOfRange("step " + std::to_string(s) + " out of range at node " + std::to_string(n));
        n = tree.child(n, static_cast<std::uint32_t>(s));
    }
    return n;
}

namespace {

enum class SlotKind { Father, FatherMinus, FatherPlus, Left, Right, Sigma };

struct Slot {
    SlotKind kind;
    int offset = 0;
};

void sigma_run(std::vector<Slot>& out, int from, int to) {
    for (int o = from; o <= to; ++o) out.push_back({SlotKind::Sigma, o});
}

// Slot layout of the {p,3} neighbour list, starting from the father and
// turning counter-clockwise.
std::vector<Slot> layout(const TilingParams& params, TreeKind kind, const Coordinate& c) {
    const int p = params.p;
    std::vector<Slot> s{{SlotKind::Father}};
    if (kind == TreeKind::LeftmostSon) {
        const auto type = classify(params, kind, c).second;
        if (type == NodeType::Bnode) {
            s.push_back({SlotKind::FatherMinus});
            s.push_back({SlotKind::Left});
            sigma_run(s, -(p - 6), 1);
        } else if (type == NodeType::W1) {
            s.push_back({SlotKind::Left});
            sigma_run(s, -(p - 5), 1);
        } else {
            s.push_back({SlotKind::Left});
            sigma_run(s, -(p - 6), 2);
        }
        s.push_back({SlotKind::Right});
        return s;
    }

    const auto type = classify(params, kind, c).second;
    bool father_after = false;
    switch (type) {
        case NodeType::Bnode:
            s.push_back({SlotKind::Left});
            sigma_run(s, -(p - 6), 2);
            break;
        case NodeType::Wl:
            s.push_back({SlotKind::Left});
            sigma_run(s, -(p - 5), 1);
            break;
        case NodeType::Wbeta:
            if (classify(params, TreeKind::LeftmostSon, c).first == NodeStatus::B) {
                s.push_back({SlotKind::FatherMinus});
                s.push_back({SlotKind::Left});
                sigma_run(s, -(p - 6), 1);
            } else {
                s.push_back({SlotKind::Left});
                sigma_run(s, -(p - 5), 1);
            }
            break;
        default: {
            const Coordinate f = c.prefix();
            const bool second = f.empty() || classify(params, TreeKind::LeftmostSon, f).second == NodeType::W2;
            s.push_back({SlotKind::Left});
            if (second) {
                sigma_run(s, -(p - 6), 2);
            } else {
                sigma_run(s, -(p - 6), 1);
                father_after = true;
            }
            break;
        }
    }
    s.push_back({SlotKind::Right});
    if (father_after) s.push_back({SlotKind::FatherPlus});
    return s;
}

bool all_ones(const Coordinate& c) {
    return std::all_of(c.digits.begin(), c.digits.end(), [](Digit d) { return d == 1; });
}

bool leftmost_branch(const Coordinate& c) {
    if (c.signature() != 2) return false;
    return std::all_of(c.digits.begin(), c.digits.end() - 1, [](Digit d) { return d == 1; });
}

}  // namespace

NeighborList neighbors(const TilingParams& params, TreeKind kind, const Coordinate& c) {
    require_node(params, c);
    const Natural nu = decode(params, c);
    const Natural sigma = decode(params, c.appended(0));
    const Natural f = decode(params, father(params, kind, c));
    const bool root = nu == 1;
    const bool on_left = leftmost_branch(c);
    const bool on_right = all_ones(c);

    NeighborList out;
    for (const Slot& slot : layout(params, kind, c)) {
        const bool horizontal = slot.kind == SlotKind::Left || slot.kind == SlotKind::Right;
        if (horizontal && params.grid == Grid::Pminus2_4) continue;
        NeighborRef ref;
        switch (slot.kind) {
            case SlotKind::Father: ref.node = f; break;
            case SlotKind::FatherMinus:
                ref.node = f - 1;
                if (on_left) ref = {RefTag::PrevTree, nu - 1};
                break;
            case SlotKind::FatherPlus: ref.node = f + 1; break;
            case SlotKind::Left:
                ref.node = nu - 1;
                if (root) {
                    ref = {RefTag::PrevTree, 1};
                } else if (on_left) {
                    const Coordinate before = decrement(params, c);
                    ref = {RefTag::PrevTree, decode(params, before.appended(0)) + 1};
                }
                break;
            case SlotKind::Right:
                ref.node = nu + 1;
                if (on_right) ref = {RefTag::NextTree, f + 1};
                break;
            case SlotKind::Sigma:
                ref.node = sigma + slot.offset;
                if (on_right && slot.offset == 2) ref = {RefTag::NextTree, nu + 1};
                break;
        }
        out.entries.push_back(std::move(ref));
    }
    return out;
}

}  // namespace hypergrid
