#include "doctest.h"

#include "hypergrid/oracle.hpp"

#include "json.hpp"

using namespace hypergrid;

namespace {

std::vector<NodeId> same_nodes(const std::vector<GraphRef>& list) {
    std::vector<NodeId> out;
    for (const auto& r : list) out.push_back(r.node);
    return out;
}

}  // namespace

TEST_CASE("reference codec") {
    CHECK(reference_encode(9, 23) == std::vector<Digit>{4, 3});
    CHECK(reference_encode(7, 21) == std::vector<Digit>{1, 0, 0, 0});
    CHECK(reference_decode(9, {2, 0, 0}) == 48);
    CHECK(reference_encode(9, 0).empty());
}

TEST_CASE("dual graph") {
    const auto g = build_dual_graph(make_params(9), TreeKind::LeftmostSon, 3);
    CHECK(g.anomalies.empty());
    REQUIRE(g.complete(3));
    CHECK(same_nodes(g.adjacency[3]) == std::vector<NodeId>{1, 2, 11, 12, 13, 14, 15, 16, 4});
    CHECK(g.adjacency[1].front() == GraphRef{RefTag::Same, 0});
    CHECK_FALSE(g.complete(40));

    const auto g4 = build_dual_graph(make_params(9, Grid::Pminus2_4), TreeKind::LeftmostSon, 3);
    CHECK(same_nodes(g4.adjacency[3]) == std::vector<NodeId>{1, 11, 12, 13, 14, 15, 16});

    const auto gp = build_dual_graph(make_params(9), TreeKind::PreferredSon, 4);
    // the single printed Wr shape would end with 55 and 12
    CHECK(same_nodes(gp.adjacency[11]) == std::vector<NodeId>{2, 10, 50, 51, 52, 53, 54, 12, 3});
    CHECK_THROWS_AS(build_dual_graph(make_params(12), TreeKind::LeftmostSon, 9, 1000), ResourceLimit);
}

TEST_CASE("suites pass on the library") {
    for (int p : {7, 8, 9}) {
        const auto params = make_params(p);
        CHECK(check_codec(params, 2000, 2).passed());
        CHECK(check_language(params, 4, 6).passed());
        CHECK(check_identities(params, 20, 20).passed());
        for (auto kind : {TreeKind::PreferredSon, TreeKind::LeftmostSon}) {
            CHECK(check_tree(params, kind, 4).passed());
            CHECK(check_paths(params, kind, 4).passed());
            CHECK(check_neighbors(params, kind, 4).passed());
            CHECK(check_neighbors(make_params(p, Grid::Pminus2_4), kind, 4).passed());
        }
    }
    CHECK(check_neighbors(make_params(10, Grid::Pminus2_4), TreeKind::PreferredSon, 5).passed());
}

TEST_CASE("codec mutation is caught") {
    const auto params = make_params(9);
    auto broken = CodecUnderTest::library();
    broken.encode = [](const TilingParams& p, const Natural& n) {
        auto c = encode(p, n);
        if (n == 77) c = encode(p, n + 1);
        return c;
    };
    const auto r = check_codec(params, 1000, broken);
    CHECK_FALSE(r.passed());
    CHECK(r.mismatch_count > 0);
    CHECK_FALSE(r.mismatches.empty());

    auto lazy = CodecUnderTest::library();
    lazy.increment = [](const TilingParams& p, const Coordinate& c) {
        if (c.empty()) return increment(p, c);
        auto d = c;
        d.digits.back() += 1;
        return d;
    };
    CHECK_FALSE(check_codec(params, 1000, lazy).passed());
}

TEST_CASE("reports") {
    VerificationReport a{"codec", "p=9", 3, 0, {}};
    VerificationReport b{"codec", "p=9", 2, 0, {}};
    b.fail({"decode", "5", "5", "6"});
    a.merge(b);
    CHECK(a.checked == 5);
    CHECK(a.mismatch_count == 1);
    CHECK_FALSE(a.passed());
    const auto j = nlohmann::json::parse(a.to_json());
    CHECK(j["suite"] == "codec");
    CHECK(j["mismatches"].size() == 1);
}

TEST_CASE("reports do not depend on the worker count") {
    const auto params = make_params(8);
    const auto a = check_paths(params, TreeKind::LeftmostSon, 5, 1);
    const auto b = check_paths(params, TreeKind::LeftmostSon, 5, 4);
    CHECK(a.to_json() == b.to_json());
    const auto c = check_neighbors(params, TreeKind::PreferredSon, 4, 1);
    const auto d = check_neighbors(params, TreeKind::PreferredSon, 4, 3);
    CHECK(c.to_json() == d.to_json());
}
