#include "hypergrid/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace hypergrid {

namespace {

constexpr std::size_t kStoredMismatches = 50;

const std::vector<NodeId>& reference_u(int p) {
    static std::mutex mutex;
    static std::map<int, std::vector<NodeId>> cache;
    std::lock_guard lock(mutex);
    auto& u = cache[p];
    if (u.empty()) {
        u.push_back(1);
        u.push_back(static_cast<NodeId>(p - 4));
        const NodeId limit = std::numeric_limits<NodeId>::max() / static_cast<NodeId>(p);
        while (u.back() < limit) u.push_back(static_cast<NodeId>(p - 4) * u.back() - u[u.size() - 2]);
    }
    return u;
}

std::string join(const std::vector<Digit>& digits) {
    std::string s;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(digits[i]);
    }
    return s.empty() ? "-" : s;
}

std::string show(const Coordinate& c) { return join(c.digits); }

std::string show(const std::vector<NodeId>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

std::string show(const Path& path) {
    std::vector<NodeId> v(path.steps.begin(), path.steps.end());
    return show(v);
}

std::string show(const GraphRef& r) {
    return (r.tag == RefTag::Same ? "" : to_string(r.tag) + ":") + std::to_string(r.node);
}

std::string show(const NeighborRef& r) {
    return (r.tag == RefTag::Same ? "" : to_string(r.tag) + ":") + r.node.str();
}

template <class Seq>
std::string show_list(const Seq& seq) {
    std::string s = "[";
    bool first = true;
    for (const auto& r : seq) {
        s += (first ? "" : ",") + show(r);
        first = false;
    }
    return s + "]";
}

std::string describe(const TilingParams& params) {
    return "p=" + std::to_string(params.p) + " grid=" + (params.grid == Grid::P3 ? "{p,3}" : "{p-2,4}");
}

std::string describe(const TilingParams& params, TreeKind kind, int depth) {
    return describe(params) + " tree=" + to_string(kind) + " depth=" + std::to_string(depth);
}

// Splits [first, last] across workers; partial reports merge in range order.
template <class Fn>
VerificationReport sharded(NodeId first, NodeId last, int jobs, const Fn& fn) {
    VerificationReport total;
    if (last < first) return total;
    const NodeId count = last - first + 1;
    const NodeId workers = std::clamp<NodeId>(jobs < 1 ? 1 : static_cast<NodeId>(jobs), 1, count);
    std::vector<VerificationReport> parts(workers);
    auto range = [&](NodeId w) {
        const NodeId lo = first + count * w / workers;
        const NodeId hi = first + count * (w + 1) / workers;
        for (NodeId n = lo; n < hi; ++n) fn(n, parts[w]);
    };
    if (workers == 1) {
        range(0);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (NodeId w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    range(w);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    for (auto& part : parts) total.merge(std::move(part));
    return total;
}

template <class Fn>
void guarded(VerificationReport& report, const std::string& what, const std::string& node, const Fn& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        report.fail({what, node, "no error", e.what()});
    }
}

}  // namespace

std::vector<Digit> reference_encode(int p, NodeId n) {
    const auto& u = reference_u(p);
    std::vector<Digit> digits;
    std::size_t i = 0;
    while (i < u.size() && u[i] <= n) ++i;
    for (std::size_t j = i; j-- > 0;) {
        digits.push_back(static_cast<Digit>(n / u[j]));
        n %= u[j];
    }
    return digits;
}

NodeId reference_decode(int p, const std::vector<Digit>& digits) {
    const auto& u = reference_u(p);
    NodeId n = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) n += static_cast<NodeId>(digits[i]) * u[digits.size() - 1 - i];
    return n;
}

void VerificationReport::fail(Mismatch m) {
    ++mismatch_count;
    if (mismatches.size() < kStoredMismatches) mismatches.push_back(std::move(m));
}

void VerificationReport::merge(VerificationReport other) {
    if (suite.empty()) suite = other.suite;
    if (parameters.empty()) parameters = other.parameters;
    checked += other.checked;
    mismatch_count += other.mismatch_count;
    for (auto& m : other.mismatches)
        if (mismatches.size() < kStoredMismatches) mismatches.push_back(std::move(m));
}

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["parameters"] = parameters;
    j["checked"] = checked;
    j["passed"] = passed();
    j["mismatch_count"] = mismatch_count;
    j["mismatches"] = nlohmann::json::array();
    for (const auto& m : mismatches)
        j["mismatches"].push_back({{"what", m.what}, {"node", m.node}, {"expected", m.expected}, {"actual", m.actual}});
    return j.dump();
}

CodecUnderTest CodecUnderTest::library() {
    CodecUnderTest c;
    c.encode = [](const TilingParams& p, const Natural& n) { return hypergrid::encode(p, n); };
    c.decode = [](const TilingParams& p, const Coordinate& x) { return hypergrid::decode(p, x); };
    c.increment = [](const TilingParams& p, const Coordinate& x) { return hypergrid::increment(p, x); };
    c.decrement = [](const TilingParams& p, const Coordinate& x) { return hypergrid::decrement(p, x); };
    c.is_canonical = [](const TilingParams& p, const Coordinate& x) { return hypergrid::is_canonical(p, x); };
    return c;
}

VerificationReport check_codec(const TilingParams& params, NodeId n_max, int jobs) {
    return check_codec(params, n_max, CodecUnderTest::library(), jobs);
}

VerificationReport check_codec(const TilingParams& params, NodeId n_max, const CodecUnderTest& codec, int jobs) {
    const int p = params.p;
    const auto& u = reference_u(p);
    auto report = sharded(0, n_max, jobs, [&](NodeId n, VerificationReport& r) {
        const std::string node = std::to_string(n);
        const Coordinate ref(reference_encode(p, n));
        const Coordinate next(reference_encode(p, n + 1));
        guarded(r, "codec", node, [&] {
            ++r.checked;
            const Coordinate got = codec.encode(params, Natural(n));
            if (got != ref) r.fail({"encode", node, show(ref), show(got)});
            std::size_t k = 0;
            while (u[k + 1] <= n) ++k;
            if (n > 0 && got.size() != k + 1) r.fail({"length law", node, std::to_string(k + 1), std::to_string(got.size())});
            const Natural back = codec.decode(params, ref);
            if (back != n) r.fail({"decode", node, node, back.str()});
            if (!codec.is_canonical(params, ref)) r.fail({"is_canonical", node, "true", "false"});
            const Coordinate inc = codec.increment(params, ref);
            if (inc != next) r.fail({"increment", node, show(next), show(inc)});
            const Coordinate dec = codec.decrement(params, next);
            if (dec != ref) r.fail({"decrement", std::to_string(n + 1), show(ref), show(dec)});
        });
    });
    report.suite = "codec";
    report.parameters = describe(params) + " N=" + std::to_string(n_max);

    // first and last node of each level
    NodeId U = 1;
    for (std::size_t n = 1; U + u[n] <= n_max; ++n) {
        const NodeId first = U + 1;
        U += u[n];
        std::vector<Digit> ones(n + 1, 1), first_form(n, 1);
        first_form.back() = 2;
        ++report.checked;
        const Coordinate last_c = codec.encode(params, Natural(U));
        const Coordinate first_c = codec.encode(params, Natural(first));
        if (last_c.digits != ones) report.fail({"last node of level", std::to_string(U), join(ones), show(last_c)});
        if (first_c.digits != first_form)
            report.fail({"first node of level", std::to_string(first), join(first_form), show(first_c)});
    }
    return report;
}

VerificationReport check_language(const TilingParams& params, int max_length, int count_up_to) {
    VerificationReport report;
    report.suite = "language";
    report.parameters = describe(params) + " length<=" + std::to_string(max_length);
    const int p = params.p;
    const int base = params.b1() + 1;
    const CoordinateAutomaton automaton(params);
    const CoordinateAutomaton with_empty(params, true);

    ++report.checked;
    if (automaton.accepts(std::vector<Digit>{})) report.fail({"empty string", "-", "reject", "accept"});
    if (!with_empty.accepts(std::vector<Digit>{})) report.fail({"empty string with flag", "-", "accept", "reject"});

    for (int len = 1; len <= max_length; ++len) {
        std::vector<Digit> s(len, 0);
        while (true) {
            ++report.checked;
            const bool a = automaton.accepts(s);
            const bool c = is_canonical(params, Coordinate(s));
            const bool g = reference_encode(p, reference_decode(p, s)) == s;
            if (a != g || c != g)
                report.fail({"language", join(s), std::string("greedy=") + (g ? "1" : "0"),
                             std::string("automaton=") + (a ? "1" : "0") + " canonical=" + (c ? "1" : "0")});
            int i = len - 1;
            while (i >= 0 && s[i] == base - 1) s[i--] = 0;
            if (i < 0) break;
            ++s[i];
        }
    }

    // accepted strings of length <= m, counted through the automaton
    std::vector<NodeId> live(4, 0);
    live[static_cast<int>(AutomatonState::Start)] = 1;
    NodeId accepted = 0;
    const auto& u = reference_u(p);
    for (int m = 1; m <= count_up_to; ++m) {
        std::vector<NodeId> next(4, 0);
        for (int st = 0; st < 4; ++st) {
            if (!live[st]) continue;
            for (Digit d = 0; d < base; ++d)
                next[static_cast<int>(automaton.step(static_cast<AutomatonState>(st), d))] += live[st];
        }
        live = next;
        for (int st = 0; st < 4; ++st)
            if (automaton.accepting(static_cast<AutomatonState>(st))) accepted += live[st];
        ++report.checked;
        if (accepted != u[m] - 1)
            report.fail({"counting law", "m=" + std::to_string(m), std::to_string(u[m] - 1), std::to_string(accepted)});
    }
    return report;
}

namespace {

// son signature row expected for a node of the given status/type
std::vector<Digit> expected_row(const TilingParams& params, TreeKind kind, NodeStatus status, NodeType type, Digit sig) {
    std::vector<Digit> row;
    auto run = [&](Digit a, Digit b) {
        for (Digit d = a; d <= b; ++d) row.push_back(d);
    };
    if (kind == TreeKind::PreferredSon) {
        run(2, status == NodeStatus::W ? params.b1() : params.b2());
        row.push_back(0);
        row.push_back(1);
        return row;
    }
    switch (type) {
        case NodeType::W1:
            run(1, params.b1());
            row.push_back(0);
            break;
        case NodeType::W2:
            if (sig == 0)
                run(1, params.b2());
            else
                run(2, params.b1());
            row.push_back(0);
            row.push_back(1);
            break;
        default:
            run(2, params.b1());
            row.push_back(0);
            break;
    }
    return row;
}

}  // namespace

VerificationReport check_tree(const TilingParams& params, TreeKind kind, int depth) {
    VerificationReport report;
    report.suite = "tree";
    report.parameters = describe(params, kind, depth);
    const int p = params.p;
    const GeneratedTree tree = generate(params, kind, depth);
    const auto& u = reference_u(p);

    NodeId U = 0;
    for (int lv = 0; lv <= depth; ++lv) {
        ++report.checked;
        const std::string where = "level " + std::to_string(lv);
        U += u[lv];
        if (tree.level_size(lv) != u[lv]) report.fail({"level size", where, std::to_string(u[lv]), std::to_string(tree.level_size(lv))});
        if (tree.level_end(lv) - 1 != U) report.fail({"cumulative size", where, std::to_string(U), std::to_string(tree.level_end(lv) - 1)});
        NodeId bcount = 0;
        for (NodeId n = tree.level_begin(lv); n < tree.level_end(lv); ++n) bcount += tree.status[n] == NodeStatus::B;
        const NodeId expect_b = lv == 0 ? 0 : u[lv - 1];
        if (bcount != expect_b) report.fail({"B count", where, std::to_string(expect_b), std::to_string(bcount)});
    }
    if (tree.status[1] != NodeStatus::W) report.fail({"root status", "1", "W", to_string(tree.status[1])});

    for (NodeId n = 1; n <= tree.size(); ++n) {
        const std::string node = std::to_string(n);
        const Coordinate c(reference_encode(p, n));
        ++report.checked;
        guarded(report, "tree", node, [&] {
            const auto [status, type] = classify(params, kind, c);
            if (status != tree.status[n] || type != tree.type[n])
                report.fail({"classify", node, to_string(tree.status[n]) + "/" + to_string(tree.type[n]),
                             to_string(status) + "/" + to_string(type)});
            if (n > 1) {
                const Coordinate f = father(params, kind, c);
                const Coordinate expect(reference_encode(p, tree.parent[n]));
                if (f != expect) report.fail({"father", node, show(expect), show(f)});
            }
            if (kind == TreeKind::PreferredSon && (c.signature() == 0) != (tree.status[n] == NodeStatus::B))
                report.fail({"B iff signature 0", node, to_string(tree.status[n]), "signature " + std::to_string(c.signature())});
            if (!tree.has_children(n)) return;

            const auto kids = tree.children(n);
            const std::uint32_t want = tree.status[n] == NodeStatus::W ? p - 4 : p - 5;
            if (kids.size() != want) report.fail({"son count", node, std::to_string(want), std::to_string(kids.size())});
            if (std::count_if(kids.begin(), kids.end(), [&](NodeId k) { return tree.status[k] == NodeStatus::B; }) != 1)
                report.fail({"one B-son", node, "1", "other"});

            std::vector<Digit> row;
            for (NodeId k : kids) row.push_back(reference_encode(p, k).back());
            const auto expect_row = expected_row(params, kind, tree.status[n], tree.type[n], c.signature());
            if (row != expect_row) report.fail({"son signatures", node, join(expect_row), join(row)});

            std::vector<NodeId> got;
            for (const Coordinate& s : sons(params, kind, c)) got.push_back(reference_decode(p, s.digits));
            if (got != kids) report.fail({"sons", node, show(kids), show(got)});

            const NodeId sigma = reference_decode(p, c.appended(0).digits);
            if (std::find(kids.begin(), kids.end(), sigma) == kids.end())
                report.fail({"preferred son is a son", node, std::to_string(sigma), show(kids)});
            else if (kind == TreeKind::LeftmostSon && tree.type[sigma] != NodeType::W2)
                report.fail({"preferred son type", node, "W2", to_string(tree.type[sigma])});
        });
    }

    if (kind == TreeKind::PreferredSon) {
        // u_1, u_2, ... are B-nodes, each the B-son of the previous one
        for (int lv = 1; lv < depth; ++lv) {
            ++report.checked;
            const NodeId a = u[lv], b = u[lv + 1];
            if (tree.status[a] != NodeStatus::B) report.fail({"main B-line", std::to_string(a), "B", "W"});
            if (tree.parent[b] != a || tree.status[b] != NodeStatus::B)
                report.fail({"main B-line", std::to_string(b), "B-son of " + std::to_string(a), std::to_string(tree.parent[b])});
        }
    }
    return report;
}

VerificationReport check_paths(const TilingParams& params, TreeKind kind, int depth, int jobs) {
    const int p = params.p;
    const GeneratedTree tree = generate(params, kind, depth);
    auto report = sharded(1, tree.size(), jobs, [&](NodeId n, VerificationReport& r) {
        const std::string node = std::to_string(n);
        ++r.checked;
        guarded(r, "path", node, [&] {
            const Coordinate c(reference_encode(p, n));
            const Path pa = path(params, kind, c);
            if (pa.steps.size() != tree.level[n])
                r.fail({"path length", node, std::to_string(tree.level[n]), show(pa)});
            const NodeId reached = follow(tree, pa);
            if (reached != n) r.fail({"follow(path)", node, node, std::to_string(reached) + " via " + show(pa)});
        });
    });
    report.suite = "paths";
    report.parameters = describe(params, kind, depth);

    auto ancestors = [](const GeneratedTree& t, NodeId n) {
        std::vector<NodeId> a;
        for (; n; n = t.parent[n]) a.push_back(n);
        std::reverse(a.begin(), a.end());
        return a;
    };
    // consecutive nodes of a level have branches at distance at most one
    for (int lv = 1; lv <= depth; ++lv)
        for (NodeId n = tree.level_begin(lv); n + 1 < tree.level_end(lv); ++n) {
            ++report.checked;
            const auto a = ancestors(tree, n), b = ancestors(tree, n + 1);
            for (std::size_t i = 0; i < a.size(); ++i)
                if (b[i] < a[i] || b[i] > a[i] + 1) {
                    report.fail({"distance one", std::to_string(n), show(a), show(b)});
                    break;
                }
        }
    if (kind == TreeKind::LeftmostSon) {
        const GeneratedTree other = generate(params, TreeKind::PreferredSon, depth);
        for (NodeId n = 1; n <= tree.size(); ++n) {
            ++report.checked;
            const auto l = ancestors(tree, n), q = ancestors(other, n);
            for (std::size_t i = 0; i < l.size(); ++i)
                if (q[i] > l[i]) {
                    report.fail({"leftmost branch dominance", std::to_string(n), "preferred " + show(q) + " <= leftmost",
                                 show(l)});
                    break;
                }
        }
    }
    return report;
}

DualGraph build_dual_graph(const TilingParams& params, TreeKind kind, int depth, NodeId node_budget) {
    if (depth < 2) throw InvalidParameter("dual graph needs depth >= 2");
    using Gid = std::uint32_t;
    const GeneratedTree t = generate(params, TreeKind::LeftmostSon, depth, node_budget);
    const NodeId N = t.size();
    if (3 * (N + 1) >= std::numeric_limits<Gid>::max()) throw ResourceLimit("dual graph too large");
    const NodeId stride = N + 1;
    auto gid = [&](int copy, NodeId n) -> Gid { return n == 0 ? 0 : static_cast<Gid>(copy * stride + n); };
    auto copy_of = [&](Gid g) { return static_cast<int>(g / stride); };
    auto node_of = [&](Gid g) -> NodeId { return g % stride; };

    std::vector<std::vector<Gid>> adj(3 * stride);
    auto link = [&](Gid a, Gid b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    };
    const bool horizontal = params.grid == Grid::P3;
    for (int copy = 0; copy < 3; ++copy) {
        for (NodeId n = 1; n <= N; ++n) link(gid(copy, t.parent[n]), gid(copy, n));
        for (int lv = 0; lv <= depth; ++lv) {
            const NodeId first = t.level_begin(lv), last = t.level_end(lv) - 1;
            if (horizontal) {
                for (NodeId n = first; n < last; ++n) link(gid(copy, n), gid(copy, n + 1));
                if (copy < 2) link(gid(copy, last), gid(copy + 1, first));
            }
            if (lv == depth) continue;
            // each tile also meets the first son of the tile to its right
            for (NodeId n = first; n <= last; ++n) {
                if (n < last)
                    link(gid(copy, n), gid(copy, t.first_child[n + 1]));
                else if (copy < 2)
                    link(gid(copy, n), gid(copy + 1, t.first_child[first]));
            }
        }
    }

    auto level_of = [&](Gid g) { return g == 0 ? -1 : static_cast<int>(t.level[node_of(g)]); };
    auto position = [&](Gid g) -> NodeId {
        if (g == 0) return 0;
        const NodeId n = node_of(g);
        const int lv = t.level[n];
        return static_cast<NodeId>(copy_of(g)) * t.level_size(lv) + (n - t.level_begin(lv));
    };
    auto adjacent = [&](Gid a, Gid b) { return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end(); };

    std::optional<GeneratedTree> preferred;
    if (kind == TreeKind::PreferredSon) preferred = generate(params, TreeKind::PreferredSon, depth, node_budget);

    DualGraph g;
    g.params = params;
    g.kind = kind;
    g.depth = depth;
    g.adjacency.resize(N + 1);
    auto anomaly = [&](std::string s) {
        if (g.anomalies.size() < kStoredMismatches) g.anomalies.push_back(std::move(s));
    };

    for (NodeId n = 1; n < t.level_end(depth - 1); ++n) {
        const Gid x = gid(1, n);
        const int lv = t.level[n];
        const NodeId px = position(x);
        std::vector<Gid> up, left, down, right;
        for (Gid y : adj[x]) {
            const int ly = level_of(y);
            if (ly < lv)
                up.push_back(y);
            else if (ly > lv)
                down.push_back(y);
            else
                (position(y) < px ? left : right).push_back(y);
        }
        auto by_pos = [&](Gid a, Gid b) { return position(a) < position(b); };
        std::sort(up.begin(), up.end(), [&](Gid a, Gid b) { return by_pos(b, a); });
        std::sort(down.begin(), down.end(), by_pos);
        std::vector<Gid> ring = up;
        ring.insert(ring.end(), left.begin(), left.end());
        ring.insert(ring.end(), down.begin(), down.end());
        ring.insert(ring.end(), right.begin(), right.end());

        const NodeId f = preferred ? preferred->parent[n] : t.parent[n];
        const auto at = std::find(ring.begin(), ring.end(), gid(1, f));
        if (at == ring.end())
            anomaly("node " + std::to_string(n) + ": father " + std::to_string(f) + " is not a neighbour");
        else
            std::rotate(ring.begin(), at, ring.end());

        if (static_cast<int>(ring.size()) != params.degree())
            anomaly("node " + std::to_string(n) + ": degree " + std::to_string(ring.size()));
        for (std::size_t i = 0; i < ring.size(); ++i) {
            const Gid a = ring[i], b = ring[(i + 1) % ring.size()];
            if (a == 0 || b == 0) continue;
            if (horizontal && !adjacent(a, b))
                anomaly("node " + std::to_string(n) + ": neighbours " + std::to_string(a) + " and " +
                        std::to_string(b) + " do not meet");
            if (!horizontal && adjacent(a, b))
                anomaly("node " + std::to_string(n) + ": triangle in a {p-2,4} graph");
        }

        auto& list = g.adjacency[n];
        for (Gid y : ring) {
            const int cp = y == 0 ? 1 : copy_of(y);
            list.push_back({cp == 0 ? RefTag::PrevTree : (cp == 2 ? RefTag::NextTree : RefTag::Same), node_of(y)});
        }
    }
    if (preferred)
        for (NodeId n = 1; n <= N; ++n)
            if (!adjacent(gid(1, preferred->parent[n]), gid(1, n)))
                anomaly("preferred edge " + std::to_string(preferred->parent[n]) + "-" + std::to_string(n) +
                        " is not a tile contact");
    return g;
}

VerificationReport check_neighbors(const TilingParams& params, TreeKind kind, int depth, int jobs) {
    const int p = params.p;
    const DualGraph graph = build_dual_graph(params, kind, depth);
    const NodeId last = graph.adjacency.size() - 1;
    std::vector<NeighborList> computed(last + 1);

    auto report = sharded(1, last, jobs, [&](NodeId n, VerificationReport& r) {
        if (!graph.complete(n)) return;
        const std::string node = std::to_string(n);
        ++r.checked;
        guarded(r, "neighbors", node, [&] {
            const Coordinate c(reference_encode(p, n));
            computed[n] = neighbors(params, kind, c);
            const auto& got = computed[n].entries;
            const auto& want = graph.adjacency[n];
            if (static_cast<int>(got.size()) != params.degree())
                r.fail({"degree", node, std::to_string(params.degree()), std::to_string(got.size())});
            bool same = got.size() == want.size();
            for (std::size_t i = 0; same && i < got.size(); ++i)
                same = got[i].tag == want[i].tag && got[i].node == want[i].node;
            if (!same) r.fail({"neighbour slots", node, show_list(want), show_list(got)});

            if (params.grid == Grid::Pminus2_4) {
                const TilingParams full{params.p, Grid::P3};
                const int lv = node_level(params, Natural(n));
                std::vector<NeighborRef> kept;
                for (const auto& e : neighbors(full, kind, c).entries) {
                    const bool flat = !(e.tag == RefTag::Same && e.node == 0) && node_level(params, e.node) == lv;
                    if (!flat) kept.push_back(e);
                }
                if (kept != got) r.fail({"{p-2,4} inside {p,3}", node, show_list(kept), show_list(got)});
            }
        });
    });
    report.suite = "neighbors";
    report.parameters = describe(params, kind, depth);
    for (const auto& a : graph.anomalies) report.fail({"oracle", "-", "consistent dual graph", a});

    for (NodeId n = 1; n <= last; ++n) {
        if (!graph.complete(n) || computed[n].entries.empty()) continue;
        for (const auto& e : computed[n].entries) {
            if (e.tag != RefTag::Same || e.node == 0) continue;
            const NodeId m = e.node.convert_to<NodeId>();
            if (m > last || !graph.complete(m) || computed[m].entries.empty()) continue;
            ++report.checked;
            const auto& back = computed[m].entries;
            if (std::none_of(back.begin(), back.end(), [&](const NeighborRef& b) { return b.tag == RefTag::Same && b.node == n; }))
                report.fail({"symmetry", std::to_string(n), std::to_string(m) + " lists " + std::to_string(n), show_list(back)});
        }
    }
    return report;
}

VerificationReport check_identities(const TilingParams& params, int nmax, int kmax) {
    VerificationReport report;
    report.suite = "identities";
    report.parameters = describe(params) + " n<=" + std::to_string(nmax) + " k<=" + std::to_string(kmax);
    const auto ids = verify_identities(params, nmax, kmax);
    for (const auto& r : ids.results) {
        report.checked += r.checked;
        if (!r.passed) report.fail({r.name, r.counterexample.value_or("?"), "holds", "fails"});
    }
    return report;
}

}  // namespace hypergrid
