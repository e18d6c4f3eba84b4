#include "doctest.h"

#include "hypergrid/numeration.hpp"

using namespace hypergrid;

namespace {

Coordinate C(std::initializer_list<Digit> d) { return Coordinate(d); }

// u by the plain recurrence, independent of the library tables
std::vector<long long> u_ref(int p, int n) {
    std::vector<long long> u{1, p - 4};
    while (static_cast<int>(u.size()) <= n) u.push_back((p - 4) * u.back() - u[u.size() - 2]);
    u.resize(n + 1);
    return u;
}

}  // namespace

TEST_CASE("parameters") {
    CHECK_THROWS_AS(make_params(6), InvalidParameter);
    const auto p = make_params(9, Grid::Pminus2_4);
    CHECK(p.b1() == 4);
    CHECK(p.b2() == 3);
    CHECK(p.degree() == 7);
    CHECK(make_params(9).degree() == 9);
}

TEST_CASE("sequences") {
    const auto t7 = build_sequences(make_params(7), 5);
    const std::vector<Natural> u7{1, 3, 8, 21, 55, 144};
    CHECK(t7.u == u7);

    const auto t9 = build_sequences(make_params(9), 3);
    CHECK(t9.u == std::vector<Natural>{1, 5, 24, 115});
    CHECK(t9.U == std::vector<Natural>{1, 6, 30, 145});

    for (int p : {7, 8, 10, 13}) {
        const auto ref = u_ref(p, 12);
        const auto t = build_sequences(make_params(p), 12);
        CHECK(t.u[1] == p - 4);
        long long cum = 0;
        for (int n = 0; n <= 12; ++n) {
            cum += ref[n];
            CHECK(t.u[n] == ref[n]);
            CHECK(t.U[n] == cum);
            CHECK(u_term(p, n) == ref[n]);
            CHECK(t.v(n) + t.w(n) == t.u[n]);
        }
    }
}

TEST_CASE("sequences grow beyond 64 bits") {
    const auto t = build_sequences(make_params(12), 40);
    CHECK(t.u[40] > Natural(1) << 100);
    CHECK(t.u[40] == 8 * t.u[39] - t.u[38]);
}

TEST_CASE("encode") {
    const auto p7 = make_params(7);
    const auto p9 = make_params(9);
    CHECK(encode(p9, 1) == C({1}));
    CHECK(encode(p9, 23) == C({4, 3}));
    CHECK(encode(p9, 30) == C({1, 1, 1}));
    CHECK(encode(p7, 21) == C({1, 0, 0, 0}));
    CHECK(encode(p9, 0).empty());
}

TEST_CASE("decode") {
    const auto p7 = make_params(7);
    const auto p9 = make_params(9);
    CHECK(decode(p9, C({1})) == 1);
    CHECK(decode(p9, C({2, 0, 0})) == 48);
    CHECK(decode(p7, C({2, 1, 1})) == 20);
    CHECK(decode(p9, Coordinate{}) == 0);
}

TEST_CASE("increment") {
    const auto p7 = make_params(7);
    const auto p9 = make_params(9);
    CHECK(increment(p9, C({1})) == C({2}));
    CHECK(increment(p9, C({4, 3})) == C({1, 0, 0}));
    CHECK(increment(p7, C({2, 1, 1})) == C({1, 0, 0, 0}));
    CHECK(increment(p9, C({3, 4})) == C({4, 0}));
    CHECK(increment(p9, Coordinate{}) == C({1}));
    CHECK_THROWS_AS(increment(p9, C({4, 4})), InvalidCoordinate);
}

TEST_CASE("decrement") {
    const auto p7 = make_params(7);
    const auto p9 = make_params(9);
    CHECK(decrement(p9, C({2})) == C({1}));
    CHECK(decrement(p9, C({1, 0, 0})) == C({4, 3}));
    CHECK(decrement(p7, C({1, 0, 0})) == C({2, 1}));
    CHECK(decrement(p9, C({1})).empty());
    CHECK_THROWS_AS(decrement(p9, Coordinate{}), Underflow);
}

TEST_CASE("canonical form") {
    const auto p7 = make_params(7);
    const auto p9 = make_params(9);
    CHECK_FALSE(is_canonical(p9, C({4, 4})));
    CHECK_FALSE(is_canonical(p9, C({4, 3, 4})));
    CHECK(is_canonical(p9, C({4, 3, 0})));
    CHECK(decode(p9, C({4, 3, 0})) == 111);
    CHECK_FALSE(is_canonical(p9, C({0, 1})));
    CHECK_FALSE(is_canonical(p9, C({5})));
    CHECK_FALSE(is_canonical(p7, C({2, 1, 1, 2})));
    CHECK_THROWS_AS(require_canonical(p9, C({5})), InvalidDigit);
    CHECK_THROWS_AS(require_canonical(p9, C({4, 4})), InvalidCoordinate);
}

TEST_CASE("automaton transitions") {
    const auto a = build_automaton(make_params(9));
    using S = AutomatonState;
    CHECK(a.step(S::Start, 0) == S::Dead);
    CHECK(a.step(S::Start, 4) == S::Run);
    CHECK(a.step(S::Start, 2) == S::Plain);
    CHECK(a.step(S::Plain, 4) == S::Run);
    CHECK(a.step(S::Plain, 0) == S::Plain);
    CHECK(a.step(S::Run, 3) == S::Run);
    CHECK(a.step(S::Run, 4) == S::Dead);
    CHECK(a.step(S::Run, 2) == S::Plain);
    CHECK(a.accepts(C({1, 0, 0})));
    CHECK_FALSE(a.accepts(C({0, 1})));
    CHECK_FALSE(a.accepts(std::vector<Digit>{}));
    CHECK(build_automaton(make_params(9), true).accepts(std::vector<Digit>{}));
    CHECK_FALSE(build_automaton(make_params(7)).accepts(C({2, 1, 1, 2})));
    CHECK(a.alphabet_size() == 5);
}

TEST_CASE("text forms") {
    const auto p9 = make_params(9);
    CHECK(to_text(p9, C({4, 3, 0})) == "430");
    CHECK(to_text(p9, Coordinate{}) == "-");
    CHECK(parse_coordinate("430") == C({4, 3, 0}));
    CHECK(parse_coordinate("4.3.0") == C({4, 3, 0}));
    CHECK(parse_coordinate("-").empty());
    CHECK(parse_coordinate("1a") == C({1, 10}));
    const auto p50 = make_params(50);
    CHECK(to_text(p50, C({1, 44})) == "1.44");
    CHECK(parse_canonical(p50, "1.44") == C({1, 44}));
    CHECK_THROWS_AS(parse_coordinate("1?2"), InvalidCoordinate);
    CHECK_THROWS_AS(parse_canonical(p9, "44"), InvalidCoordinate);
    CHECK(parse_natural("123456789012345678901234567890") == Natural("123456789012345678901234567890"));
    CHECK_THROWS(parse_natural("12x"));
}

TEST_CASE("round trip with big numbers") {
    const auto p = make_params(11);
    const Natural big = Natural(1) << 200;
    const auto c = encode(p, big);
    CHECK(decode(p, c) == big);
    CHECK(decode(p, increment(p, c)) == big + 1);
    CHECK(decode(p, decrement(p, c)) == big - 1);
}

TEST_CASE("identities") {
    for (int p : {7, 8, 9, 12}) {
        const auto report = verify_identities(make_params(p), 20, 20);
        for (const auto& r : report.results) {
            INFO(p << " " << r.name << " " << r.counterexample.value_or(""));
            CHECK(r.passed);
            CHECK(r.checked > 0);
        }
    }
}
