#include <algorithm>
#include <sstream>

#include "doctest.h"

#include "hypergrid/tree.hpp"

using namespace hypergrid;

namespace {

std::vector<Natural> decoded(const TilingParams& params, const std::vector<Coordinate>& cs) {
    std::vector<Natural> out;
    for (const auto& c : cs) out.push_back(decode(params, c));
    return out;
}

std::vector<Natural> range(int a, int b) {
    std::vector<Natural> out;
    for (int i = a; i <= b; ++i) out.push_back(i);
    return out;
}

}  // namespace

TEST_CASE("generated level sizes") {
    for (auto kind : {TreeKind::PreferredSon, TreeKind::LeftmostSon}) {
        const auto t9 = generate(make_params(9), kind, 2);
        CHECK(t9.level_size(0) == 1);
        CHECK(t9.level_size(1) == 5);
        CHECK(t9.level_size(2) == 24);
        CHECK(t9.size() == 30);
        const auto t7 = generate(make_params(7), kind, 3);
        CHECK(t7.level_size(1) == 3);
        CHECK(t7.level_size(2) == 8);
        CHECK(t7.level_size(3) == 21);
        CHECK(t7.status[1] == NodeStatus::W);
        CHECK(t7.parent[1] == 0);
    }
}

TEST_CASE("generated tree shape") {
    const auto pref = generate(make_params(9), TreeKind::PreferredSon, 2);
    CHECK(pref.children(1) == std::vector<NodeId>{2, 3, 4, 5, 6});
    CHECK(pref.status[5] == NodeStatus::B);
    CHECK(pref.children(5) == std::vector<NodeId>{22, 23, 24, 25});
    const auto left = generate(make_params(9), TreeKind::LeftmostSon, 2);
    CHECK(left.status[2] == NodeStatus::B);
    CHECK(left.children(2) == std::vector<NodeId>{7, 8, 9, 10});
    CHECK(left.children(3) == std::vector<NodeId>{11, 12, 13, 14, 15});
    CHECK(left.type[5] == NodeType::W2);
    CHECK(left.type[3] == NodeType::W1);
}

TEST_CASE("node budget") {
    CHECK_THROWS_AS(generate(make_params(12), TreeKind::LeftmostSon, 9, 1000), ResourceLimit);
    CHECK_THROWS_AS(generate(make_params(12), TreeKind::LeftmostSon, -1), InvalidParameter);
}

TEST_CASE("node level") {
    const auto p9 = make_params(9);
    CHECK(node_level(p9, 1) == 0);
    CHECK(node_level(p9, 30) == 2);
    CHECK(node_level(p9, 31) == 3);
    CHECK_THROWS(node_level(p9, 0));
}

TEST_CASE("father") {
    const auto p9 = make_params(9);
    CHECK(father(p9, Coordinate{1, 1}) == Coordinate{1});
    CHECK(father(p9, Coordinate{1, 2}) == Coordinate{2});
    CHECK(father(p9, Coordinate{2, 0}) == Coordinate{2});
    CHECK(father(p9, Coordinate{1}).empty());
    CHECK_THROWS_AS(father(p9, Coordinate{}), Underflow);
    // node 11 hangs from 3 in the leftmost tree and from 2 in the preferred one
    CHECK(father(p9, TreeKind::LeftmostSon, Coordinate{2, 1}) == Coordinate{3});
    CHECK(father(p9, TreeKind::PreferredSon, Coordinate{2, 1}) == Coordinate{2});
}

TEST_CASE("preferred son") {
    CHECK(preferred_son(make_params(9), Coordinate{1}) == Coordinate{1, 0});
    CHECK(decode(make_params(9), preferred_son(make_params(9), Coordinate{3})) == 15);
    CHECK(decode(make_params(7), preferred_son(make_params(7), Coordinate{2})) == 6);
}

TEST_CASE("classify") {
    for (int p : {7, 9, 12}) {
        const auto params = make_params(p);
        CHECK(classify(params, TreeKind::PreferredSon, Coordinate{1, 0}) ==
              std::pair{NodeStatus::B, NodeType::Bnode});
        CHECK(classify(params, TreeKind::LeftmostSon, Coordinate{1, 0}) == std::pair{NodeStatus::W, NodeType::W2});
    }
    CHECK(classify(make_params(7), TreeKind::LeftmostSon, Coordinate{2}) == std::pair{NodeStatus::B, NodeType::Bnode});
    CHECK(classify(make_params(9), TreeKind::LeftmostSon, Coordinate{3}).second == NodeType::W1);
    CHECK(classify(make_params(9), TreeKind::PreferredSon, Coordinate{1, 1}).second == NodeType::Wr);
    CHECK(classify(make_params(9), TreeKind::PreferredSon, Coordinate{1, 2}).second == NodeType::Wbeta);
    CHECK(classify(make_params(9), TreeKind::PreferredSon, Coordinate{1, 3}).second == NodeType::Wl);
}

TEST_CASE("sons in the preferred tree") {
    const auto p9 = make_params(9);
    const std::vector<Coordinate> s12{{1, 1, 2}, {1, 1, 3}, {1, 1, 4}, {1, 2, 0}, {1, 2, 1}};
    CHECK(sons_preferred(p9, Coordinate{1, 2}) == s12);
    CHECK(decoded(p9, s12) == range(31, 35));
    const std::vector<Coordinate> s20{{1, 4, 2}, {1, 4, 3}, {2, 0, 0}, {2, 0, 1}};
    CHECK(sons_preferred(p9, Coordinate{2, 0}) == s20);
    CHECK(decoded(p9, s20) == range(46, 49));
    const std::vector<Coordinate> root{{2}, {3}, {4}, {1, 0}, {1, 1}};
    CHECK(sons_preferred(p9, Coordinate{1}) == root);
}

TEST_CASE("sons in the leftmost tree") {
    const auto p9 = make_params(9);
    CHECK(decoded(p9, sons_leftmost(p9, Coordinate{3})) == range(11, 15));
    CHECK(decoded(p9, sons_leftmost(p9, Coordinate{1})) == range(2, 6));
    const auto p7 = make_params(7);
    CHECK(decoded(p7, sons_leftmost(p7, Coordinate{2})) == range(5, 6));
    CHECK(decoded(p9, sons(p9, TreeKind::LeftmostSon, Coordinate{2})) == range(7, 10));
}

TEST_CASE("p = 7 son signatures") {
    const auto p7 = make_params(7);
    const auto t = generate(p7, TreeKind::PreferredSon, 4);
    for (NodeId n = 1; n < t.level_begin(4); ++n) {
        std::vector<Digit> row;
        for (auto k : t.children(n)) row.push_back(encode(p7, k).signature());
        CHECK(row == (t.status[n] == NodeStatus::B ? std::vector<Digit>{0, 1} : std::vector<Digit>{2, 0, 1}));
    }
}

TEST_CASE("dumps") {
    const auto t = generate(make_params(7), TreeKind::LeftmostSon, 1);
    std::ostringstream js;
    dump_json(t, js);
    const std::string text = js.str();
    CHECK(text.find("\"num\":1") != std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') == 4);
    std::ostringstream dot;
    dump_dot(t, dot);
    CHECK(dot.str().rfind("digraph", 0) == 0);
    CHECK(dot.str().find("n1 -> n2;") != std::string::npos);
}
