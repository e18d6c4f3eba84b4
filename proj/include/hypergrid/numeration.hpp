#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hypergrid/errors.hpp"

namespace hypergrid {

using Natural = boost::multiprecision::cpp_int;
using Digit = int;

enum class Grid { P3, Pminus2_4 };

struct TilingParams {
    int p = 7;
    Grid grid = Grid::P3;

    int b() const { return p - 4; }
    int b1() const { return p - 5; }
    int b2() const { return p - 6; }
    // number of neighbours of a tile
    int degree() const { return grid == Grid::P3 ? p : p - 2; }
};

// throws InvalidParameter unless p >= 7
TilingParams make_params(int p, Grid grid = Grid::P3);

// Digits are stored most significant first.  The empty coordinate is node 0.
struct Coordinate {
    std::vector<Digit> digits;

    Coordinate() = default;
    Coordinate(std::initializer_list<Digit> d) : digits(d) {}
    explicit Coordinate(std::vector<Digit> d) : digits(std::move(d)) {}

    bool empty() const { return digits.empty(); }
    std::size_t size() const { return digits.size(); }
    Digit signature() const { return digits.back(); }
    Coordinate prefix() const;
    Coordinate appended(Digit d) const;

    friend bool operator==(const Coordinate&, const Coordinate&) = default;
};

struct SequenceTable {
    int p = 7;
    std::vector<Natural> u;
    std::vector<Natural> U;
    std::vector<Natural> y;  // level sizes of a tree rooted at a B-node
    std::vector<Natural> Y;

    int nmax() const { return static_cast<int>(u.size()) - 1; }
    // B-nodes on level n of the W-rooted tree
    Natural v(int n) const { return n == 0 ? Natural(0) : u[n - 1]; }
    Natural w(int n) const { return u[n] - v(n); }
};

SequenceTable build_sequences(const TilingParams& params, int nmax);

// u_n for the given p; cached, thread safe
Natural u_term(int p, int n);

Coordinate encode(const TilingParams& params, const Natural& n);
Natural decode(const TilingParams& params, const Coordinate& c);
Coordinate increment(const TilingParams& params, const Coordinate& c);
Coordinate decrement(const TilingParams& params, const Coordinate& c);
bool is_canonical(const TilingParams& params, const Coordinate& c);
// throws InvalidCoordinate (or InvalidDigit) when c is not canonical
void require_canonical(const TilingParams& params, const Coordinate& c);

enum class AutomatonState : std::uint8_t { Start, Plain, Run, Dead };

class CoordinateAutomaton {
public:
    CoordinateAutomaton(const TilingParams& params, bool accept_empty = false);

    AutomatonState start() const { return AutomatonState::Start; }
    AutomatonState step(AutomatonState s, Digit d) const;
    bool accepting(AutomatonState s) const;
    AutomatonState run(const std::vector<Digit>& digits) const;
    bool accepts(const std::vector<Digit>& digits) const;
    bool accepts(const Coordinate& c) const { return accepts(c.digits); }
    int alphabet_size() const { return b1_ + 1; }

private:
    int b1_;
    int b2_;
    bool accept_empty_;
    std::vector<std::array<AutomatonState, 4>> table_;  // table_[digit][state]
};

CoordinateAutomaton build_automaton(const TilingParams& params, bool accept_empty = false);

struct IdentityResult {
    std::string name;
    bool passed = true;
    long checked = 0;
    std::optional<std::string> counterexample;
};

struct IdentityReport {
    int p = 7;
    std::vector<IdentityResult> results;
    bool passed() const;
};

IdentityReport verify_identities(const TilingParams& params, int nmax, int kmax);

// base-36 for p <= 41, dotted decimal above; "-" stands for node 0
std::string to_text(const TilingParams& params, const Coordinate& c);
// accepts both forms; digits are not range checked here
Coordinate parse_coordinate(std::string_view text);
// parse, then check canonical form for params
Coordinate parse_canonical(const TilingParams& params, std::string_view text);

std::string to_string(const Natural& n);
Natural parse_natural(std::string_view text);

}  // namespace hypergrid
