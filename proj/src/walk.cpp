#include "walk.hpp"

#include <stdexcept>

namespace hypergrid::detail {

namespace {

// Sons of x read as digit strings: [x-1]start .. [x-1]last, [x]0 and, when
// has_one, [x]1.
struct Row {
    int start;
    int last;
    bool has_one;
    int before_zero() const { return last - start + 1; }
};

Row row_of(const TilingParams& params, TreeKind kind, const WalkNode& x) {
    const int last = x.sig != 0 ? params.b1() : params.b2();
    if (kind == TreeKind::PreferredSon) return {2, last, true};
    const int start = (x.type == NodeType::W1 || x.sig == 0) ? 1 : 2;
    return {start, last, x.type == NodeType::W2};
}

enum class Source { L, R };

struct Located {
    Source source;
    int pos;
    WalkNode node;
};

WalkNode preferred_node(Digit d) {
    if (d == 0) return {NodeStatus::B, NodeType::Bnode, 0};
    if (d == 1) return {NodeStatus::W, NodeType::Wr, 1};
    if (d == 2) return {NodeStatus::W, NodeType::Wbeta, 2};
    return {NodeStatus::W, NodeType::Wl, d};
}

class Walker {
public:
    Walker(const TilingParams& params, TreeKind kind) : params_(params), kind_(kind) {}

    Located block_son(const WalkNode& x, Source src, Digit d) const {
        const Row row = row_of(params_, kind_, x);
        if (d < row.start || d > row.last) throw std::logic_error("milestone walk left its slice");
        const int pos = d - row.start + 1;
        if (kind_ == TreeKind::PreferredSon) return {src, pos, preferred_node(d)};
        if (pos == 1) return {src, pos, {NodeStatus::B, NodeType::Bnode, d}};
        return {src, pos, {NodeStatus::W, NodeType::W1, d}};
    }

    Located zero_son(const WalkNode& x, Source src) const {
        const Row row = row_of(params_, kind_, x);
        if (kind_ == TreeKind::PreferredSon) return {src, row.before_zero() + 1, preferred_node(0)};
        return {src, row.before_zero() + 1, {NodeStatus::W, NodeType::W2, 0}};
    }

    Located one_son(const WalkNode& x, Source src) const {
        const Row row = row_of(params_, kind_, x);
        if (kind_ == TreeKind::PreferredSon) return {src, row.before_zero() + 2, preferred_node(1)};
        return {src, row.before_zero() + 2, {NodeStatus::W, NodeType::W2, 1}};
    }

    // [pi]d where l is pi and r is pi+1
    Located locate(const WalkNode& l, const WalkNode& r, Digit d) const {
        if (d == 0) return zero_son(l, Source::L);
        if (d == 1 && row_of(params_, kind_, l).has_one) return one_son(l, Source::L);
        return block_son(r, Source::R, d);
    }

private:
    const TilingParams& params_;
    TreeKind kind_;
};

}  // namespace

WalkResult milestone_walk(const TilingParams& params, TreeKind kind, const Coordinate& c, bool want_path) {
    if (c.empty()) throw InvalidCoordinate("node 0 has no branch");
    const Walker walker(params, kind);
    const CoordinateAutomaton automaton(params);

    const WalkNode root{NodeStatus::W, kind == TreeKind::PreferredSon ? NodeType::Wr : NodeType::W2, 1};
    std::vector<int> lpath, rpath;
    std::size_t sync = 0;
    WalkNode l = root, r = root;
    bool father_is_prefix = true;
    AutomatonState state = automaton.start();

    auto apply = [&](const Located& nl, const Located& nr) {
        if (nl.source == Source::L && nr.source == Source::L) {
            rpath.resize(lpath.size());
            for (std::size_t j = sync; j < lpath.size(); ++j) rpath[j] = lpath[j];
            sync = lpath.size();
        } else if (nl.source == Source::R && nr.source == Source::R) {
            lpath.resize(rpath.size());
            for (std::size_t j = sync; j < rpath.size(); ++j) lpath[j] = rpath[j];
            sync = rpath.size();
        } else if (nl.source == Source::R) {
            throw std::logic_error("milestones crossed");
        }
        if (want_path) {
            lpath.push_back(nl.pos);
            rpath.push_back(nr.pos);
        }
        l = nl.node;
        r = nr.node;
        father_is_prefix = nl.source == Source::L;
    };

    for (std::size_t i = 0; i < c.size(); ++i) {
        const Digit d = c.digits[i];
        const Digit e = d + 1;
        const bool next_valid = e <= params.b1() && automaton.step(state, e) != AutomatonState::Dead;
        if (i == 0) {
            // the prefix is node 0 and its successor is the root
            if (d == 1) {
                const Located two = walker.block_son(root, Source::R, 2);
                if (want_path) rpath.push_back(two.pos);
                l = root;
                r = two.node;
            } else {
                const Located nl = walker.block_son(root, Source::R, d);
                const Located nr = next_valid ? walker.block_son(root, Source::R, e) : walker.zero_son(root, Source::R);
                apply(nl, nr);
            }
        } else {
            const Located nl = walker.locate(l, r, d);
            const Located nr = next_valid ? walker.locate(l, r, e) : walker.zero_son(r, Source::R);
            apply(nl, nr);
        }
        state = automaton.step(state, d);
    }

    WalkResult result;
    result.node = l;
    result.father_is_prefix = father_is_prefix;
    if (want_path) result.path = std::move(lpath);
    return result;
}

}  // namespace hypergrid::detail
