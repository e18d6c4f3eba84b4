#include "doctest.h"

#include "hypergrid/navigation.hpp"

using namespace hypergrid;

namespace {

std::vector<Natural> nodes(const NeighborList& list) {
    std::vector<Natural> out;
    for (const auto& e : list.entries) out.push_back(e.node);
    return out;
}

std::vector<Natural> N(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("general paths") {
    const auto p9 = make_params(9);
    CHECK(path_preferred(p9, Coordinate{1}).steps.empty());
    CHECK(path_preferred(p9, Coordinate{2, 0}).steps == std::vector<int>{1, 4});
    CHECK(path_preferred(p9, Coordinate{1, 1}).steps == std::vector<int>{5});
    CHECK(path_leftmost(p9, Coordinate{1}).steps.empty());
    CHECK(path_leftmost(p9, Coordinate{1, 0}).steps == std::vector<int>{4});
    CHECK(path_leftmost(p9, Coordinate{2, 0}).steps == std::vector<int>{1, 4});
    CHECK_THROWS_AS(path_preferred(make_params(7), Coordinate{1}), Unsupported);
    CHECK_THROWS_AS(path_leftmost(make_params(7), Coordinate{1}), Unsupported);
    CHECK_THROWS_AS(path_leftmost(p9, Coordinate{4, 4}), InvalidCoordinate);
}

TEST_CASE("p = 7 paths") {
    CHECK(path_preferred_p7(Coordinate{1}).steps.empty());
    CHECK(path_preferred_p7(Coordinate{1, 0}).steps == std::vector<int>{2});
    CHECK(path_preferred_p7(Coordinate{2, 1, 1}).steps == std::vector<int>{1, 3, 3});
    CHECK(path_leftmost_p7(Coordinate{1}).steps.empty());
    CHECK(path_leftmost_p7(Coordinate{1, 0}).steps == std::vector<int>{2});
    CHECK(path_leftmost_p7(Coordinate{2}).steps == std::vector<int>{1});
    CHECK_THROWS_AS(path_leftmost_p7(Coordinate{3}), InvalidCoordinate);
    CHECK(path(make_params(7), TreeKind::LeftmostSon, Coordinate{1, 0}).steps == std::vector<int>{2});
}

TEST_CASE("p = 7 paths reach their node") {
    const auto p7 = make_params(7);
    for (auto kind : {TreeKind::PreferredSon, TreeKind::LeftmostSon}) {
        const auto t = generate(p7, kind, 6);
        for (NodeId n = 1; n <= t.size(); ++n) {
            const auto c = encode(p7, n);
            INFO(n);
            REQUIRE(follow(t, path(p7, kind, c)) == n);
        }
    }
}

TEST_CASE("follow") {
    const auto p9 = make_params(9);
    const auto left = generate(p9, TreeKind::LeftmostSon, 3);
    const auto pref = generate(p9, TreeKind::PreferredSon, 3);
    CHECK(follow(left, Path{}) == 1);
    CHECK(follow(left, Path{{1, 4}}) == 10);
    CHECK(follow(pref, Path{{5}}) == 6);
    CHECK_THROWS_AS(follow(left, Path{{6}}), OutOfRange);
    CHECK_THROWS_AS(follow(left, Path{{1, 1, 1, 1}}), OutOfRange);
}

TEST_CASE("neighbours in the heptagrid and pentagrid") {
    const auto n73 = neighbors(make_params(7), TreeKind::LeftmostSon, Coordinate{1, 0});
    CHECK(nodes(n73) == N({1, 2, 7, 8, 9, 10, 4}));
    const auto n54 = neighbors(make_params(7, Grid::Pminus2_4), TreeKind::LeftmostSon, Coordinate{1, 0});
    CHECK(nodes(n54) == N({1, 7, 8, 9, 10}));
    CHECK(n54.at(1).node == 1);
}

TEST_CASE("neighbours for p = 9") {
    const auto p9 = make_params(9);
    const auto n = neighbors(p9, TreeKind::LeftmostSon, Coordinate{3});
    CHECK(nodes(n) == N({1, 2, 11, 12, 13, 14, 15, 16, 4}));
    CHECK(n.size() == 9);
    const auto n4 = neighbors(make_params(9, Grid::Pminus2_4), TreeKind::LeftmostSon, Coordinate{3});
    CHECK(nodes(n4) == N({1, 11, 12, 13, 14, 15, 16}));
    // Wr node below a B-node: the father's successor closes the list
    CHECK(nodes(neighbors(p9, TreeKind::PreferredSon, Coordinate{2, 1})) == N({2, 10, 50, 51, 52, 53, 54, 12, 3}));
}

TEST_CASE("root and boundary entries") {
    for (auto grid : {Grid::P3, Grid::Pminus2_4}) {
        const auto params = make_params(9, grid);
        for (auto kind : {TreeKind::PreferredSon, TreeKind::LeftmostSon}) {
            const auto n = neighbors(params, kind, Coordinate{1});
            CHECK(n.at(1).node == 0);
            CHECK(n.at(1).tag == RefTag::Same);
            CHECK(n.size() == params.degree());
        }
    }
    const auto root = neighbors(make_params(9), TreeKind::LeftmostSon, Coordinate{1});
    CHECK(root.at(2) == NeighborRef{RefTag::PrevTree, 1});
    CHECK(root.at(9) == NeighborRef{RefTag::NextTree, 1});
    CHECK(root.at(8) == NeighborRef{RefTag::NextTree, 2});
    CHECK_THROWS_AS(neighbors(make_params(9), TreeKind::LeftmostSon, Coordinate{}), InvalidCoordinate);
    CHECK(to_string(RefTag::PrevTree) == "prev");
}
