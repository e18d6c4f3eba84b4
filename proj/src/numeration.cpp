#include "hypergrid/numeration.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "detail.hpp"

namespace hypergrid {

TilingParams make_params(int p, Grid grid) {
    if (p < 7) throw InvalidParameter("p must be at least 7, got " + std::to_string(p));
    return TilingParams{p, grid};
}

Coordinate Coordinate::prefix() const {
    if (digits.empty()) throw Underflow("prefix of the empty coordinate");
    return Coordinate(std::vector<Digit>(digits.begin(), digits.end() - 1));
}

Coordinate Coordinate::appended(Digit d) const {
    Coordinate r = *this;
    r.digits.push_back(d);
    return r;
}

namespace detail {

std::shared_ptr<const std::vector<Natural>> u_table(int p, int n) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const std::vector<Natural>>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[p];
    if (slot && static_cast<int>(slot->size()) > n) return slot;
    int want = std::max(n + 1, slot ? static_cast<int>(slot->size()) * 2 : 64);
    auto fresh = std::make_shared<std::vector<Natural>>();
    fresh->reserve(want);
    fresh->push_back(1);
    fresh->push_back(p - 4);
    while (static_cast<int>(fresh->size()) < want) {
        const auto k = fresh->size();
        fresh->push_back(Natural(p - 4) * (*fresh)[k - 1] - (*fresh)[k - 2]);
    }
    slot = std::move(fresh);
    return slot;
}

}  // namespace detail

Natural u_term(int p, int n) { return (*detail::u_table(p, n))[n]; }

SequenceTable build_sequences(const TilingParams& params, int nmax) {
    if (nmax < 0) throw InvalidParameter("nmax must be non-negative");
    SequenceTable t;
    t.p = params.p;
    auto table = detail::u_table(params.p, nmax);
    t.u.assign(table->begin(), table->begin() + nmax + 1);
    t.U.resize(nmax + 1);
    t.U[0] = t.u[0];
    for (int n = 1; n <= nmax; ++n) t.U[n] = t.U[n - 1] + t.u[n];

    // B-rooted tree, level split into B and W nodes
    Natural bn = 1, wn = 0;
    for (int n = 0; n <= nmax; ++n) {
        t.y.push_back(bn + wn);
        t.Y.push_back(n == 0 ? t.y[0] : t.Y[n - 1] + t.y[n]);
        Natural nb = bn + wn;
        Natural nw = Natural(params.p - 6) * bn + Natural(params.p - 5) * wn;
        bn = std::move(nb);
        wn = std::move(nw);
    }
    return t;
}

Coordinate encode(const TilingParams& params, const Natural& n) {
    if (n < 0) throw InvalidParameter("negative node number");
    Coordinate c;
    if (n == 0) return c;
    int i = 0;
    auto table = detail::u_table(params.p, 64);
    while ((*table)[i] <= n) {
        ++i;
        if (i >= static_cast<int>(table->size())) table = detail::u_table(params.p, i);
    }
    Natural rest = n;
    c.digits.reserve(i);
    for (int j = i - 1; j >= 0; --j) {
        Natural q, r;
        boost::multiprecision::divide_qr(rest, (*table)[j], q, r);
        c.digits.push_back(q.convert_to<int>());
        rest = std::move(r);
    }
    return c;
}

Natural decode(const TilingParams& params, const Coordinate& c) {
    const int len = static_cast<int>(c.size());
    auto table = detail::u_table(params.p, std::max(len, 1));
    Natural n = 0;
    for (int i = 0; i < len; ++i) {
        const Digit d = c.digits[i];
        if (d < 0 || d > params.b1())
            throw InvalidDigit("digit " + std::to_string(d) + " out of range 0.." + std::to_string(params.b1()));
        if (d) n += (*table)[len - 1 - i] * d;
    }
    return n;
}

bool is_canonical(const TilingParams& params, const Coordinate& c) {
    const auto& a = c.digits;
    if (a.empty()) return true;
    if (a.front() == 0) return false;
    const int b1 = params.b1(), b2 = params.b2();
    for (Digit d : a)
        if (d < 0 || d > b1) return false;
    std::size_t i = 0;
    while (i < a.size()) {
        if (a[i] != b1) {
            ++i;
            continue;
        }
        std::size_t j = i + 1;
        while (j < a.size() && a[j] == b2) ++j;
        if (j < a.size() && a[j] == b1) return false;
        i = j;
    }
    return true;
}

void require_canonical(const TilingParams& params, const Coordinate& c) {
    for (Digit d : c.digits)
        if (d < 0 || d > params.b1())
            throw InvalidDigit("digit " + std::to_string(d) + " out of range 0.." + std::to_string(params.b1()));
    if (!is_canonical(params, c))
        throw InvalidCoordinate("coordinate " + to_text(params, c) + " is not canonical");
}

Coordinate increment(const TilingParams& params, const Coordinate& c) {
    require_canonical(params, c);
    const CoordinateAutomaton automaton(params);
    const auto& a = c.digits;
    std::vector<AutomatonState> state(a.size() + 1);
    state[0] = automaton.start();
    for (std::size_t i = 0; i < a.size(); ++i) state[i + 1] = automaton.step(state[i], a[i]);

    Coordinate r = c;
    for (int pos = static_cast<int>(a.size()) - 1; pos >= 0; --pos) {
        const Digit d = a[pos] + 1;
        if (d <= params.b1() && automaton.step(state[pos], d) != AutomatonState::Dead) {
            r.digits[pos] = d;
            return r;
        }
        r.digits[pos] = 0;
    }
    r.digits.insert(r.digits.begin(), 1);
    return r;
}

Coordinate decrement(const TilingParams& params, const Coordinate& c) {
    if (c.empty()) throw Underflow("decrement of node 0");
    require_canonical(params, c);
    const CoordinateAutomaton automaton(params);
    Coordinate r = c;
    auto& a = r.digits;
    std::size_t j = a.size() - 1;
    while (a[j] == 0) --j;
    --a[j];
    std::size_t fill = j + 1;
    if (j == 0 && a[0] == 0) {
        a.erase(a.begin());
        fill = 0;
    }
    AutomatonState s = automaton.start();
    for (std::size_t i = 0; i < fill; ++i) s = automaton.step(s, a[i]);
    for (std::size_t i = fill; i < a.size(); ++i) {
        Digit d = params.b1();
        if (automaton.step(s, d) == AutomatonState::Dead) d = params.b2();
        a[i] = d;
        s = automaton.step(s, d);
    }
    return r;
}

CoordinateAutomaton::CoordinateAutomaton(const TilingParams& params, bool accept_empty)
    : b1_(params.b1()), b2_(params.b2()), accept_empty_(accept_empty), table_(params.b1() + 1) {
    using S = AutomatonState;
    for (Digit d = 0; d <= b1_; ++d) {
        auto& row = table_[d];
        row[static_cast<int>(S::Start)] = d == 0 ? S::Dead : (d == b1_ ? S::Run : S::Plain);
        row[static_cast<int>(S::Plain)] = d == b1_ ? S::Run : S::Plain;
        row[static_cast<int>(S::Run)] = d == b2_ ? S::Run : (d == b1_ ? S::Dead : S::Plain);
        row[static_cast<int>(S::Dead)] = S::Dead;
    }
}

AutomatonState CoordinateAutomaton::step(AutomatonState s, Digit d) const {
    if (d < 0 || d > b1_) return AutomatonState::Dead;
    return table_[d][static_cast<int>(s)];
}

bool CoordinateAutomaton::accepting(AutomatonState s) const {
    return s == AutomatonState::Plain || s == AutomatonState::Run || (accept_empty_ && s == AutomatonState::Start);
}

AutomatonState CoordinateAutomaton::run(const std::vector<Digit>& digits) const {
    AutomatonState s = start();
    for (Digit d : digits) {
        s = step(s, d);
        if (s == AutomatonState::Dead) break;
    }
    return s;
}

bool CoordinateAutomaton::accepts(const std::vector<Digit>& digits) const { return accepting(run(digits)); }

CoordinateAutomaton build_automaton(const TilingParams& params, bool accept_empty) {
    return CoordinateAutomaton(params, accept_empty);
}

std::string to_text(const TilingParams& params, const Coordinate& c) {
    if (c.empty()) return "-";
    std::string s;
    if (params.p <= 41) {
        for (Digit d : c.digits) {
            if (d < 0 || d >= 36) throw InvalidDigit("digit " + std::to_string(d) + " has no base-36 form");
            s.push_back(static_cast<char>(d < 10 ? '0' + d : 'a' + d - 10));
        }
        return s;
    }
    for (std::size_t i = 0; i < c.digits.size(); ++i) {
        if (i) s.push_back('.');
        s += std::to_string(c.digits[i]);
    }
    return s;
}

Coordinate parse_coordinate(std::string_view text) {
    Coordinate c;
    if (text == "-") return c;
    if (text.empty()) throw InvalidCoordinate("empty coordinate text");
    if (text.find('.') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('.', start);
            if (end == std::string_view::npos) end = text.size();
            auto part = text.substr(start, end - start);
            if (part.empty() || part.size() > 9 ||
                !std::all_of(part.begin(), part.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
                throw InvalidCoordinate("malformed dotted coordinate '" + std::string(text) + "'");
            c.digits.push_back(std::stoi(std::string(part)));
            start = end + 1;
        }
        return c;
    }
    for (char ch : text) {
        if (ch >= '0' && ch <= '9')
            c.digits.push_back(ch - '0');
        else if (ch >= 'a' && ch <= 'z')
            c.digits.push_back(ch - 'a' + 10);
        else if (ch >= 'A' && ch <= 'Z')
            c.digits.push_back(ch - 'A' + 10);
        else
            throw InvalidCoordinate("malformed coordinate '" + std::string(text) + "'");
    }
    return c;
}

Coordinate parse_canonical(const TilingParams& params, std::string_view text) {
    Coordinate c = parse_coordinate(text);
    require_canonical(params, c);
    return c;
}

std::string to_string(const Natural& n) { return n.str(); }

Natural parse_natural(std::string_view text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
        throw InvalidParameter("not a natural number: '" + std::string(text) + "'");
    return Natural(std::string(text));
}

bool IdentityReport::passed() const {
    return std::all_of(results.begin(), results.end(), [](const IdentityResult& r) { return r.passed; });
}

namespace {

class IdentityCheck {
public:
    explicit IdentityCheck(std::string name) { result_.name = std::move(name); }

    void expect(bool ok, const std::string& where) {
        ++result_.checked;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.counterexample = where;
        }
    }

    IdentityResult done() { return std::move(result_); }

private:
    IdentityResult result_;
};

std::string at(int n) { return "n=" + std::to_string(n); }
std::string at(int n, int k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }

}  // namespace

IdentityReport verify_identities(const TilingParams& params, int nmax, int kmax) {
    if (nmax < 1 || kmax < 1) throw InvalidParameter("nmax and kmax must be at least 1");
    const int p = params.p;
    const SequenceTable t = build_sequences(params, nmax + kmax + 2);
    const auto& u = t.u;
    const auto& U = t.U;
    auto um1 = [&](int n) { return n == 0 ? Natural(0) : u[n - 1]; };
    const Natural c5 = p - 5, c6 = p - 6, c7 = p - 7, c4 = p - 4;

    IdentityReport report;
    report.p = p;

    {
        IdentityCheck c("level split v+w=u");
        Natural vn = 0, wn = 1;
        for (int n = 0; n <= nmax; ++n) {
            c.expect(vn + wn == u[n] && vn == t.v(n) && wn == t.w(n), at(n));
            Natural nv = vn + wn;
            Natural nw = c6 * vn + c5 * wn;
            vn = std::move(nv);
            wn = std::move(nw);
        }
        report.results.push_back(c.done());
    }
    {
        IdentityCheck c("value of b1 b2^k b1");
        for (int n = 0; n <= nmax; ++n)
            for (int k = 1; k <= kmax; ++k) {
                Natural lhs = c5 * u[n + k] + c5 * u[n];
                for (int i = 1; i <= k - 1; ++i) lhs += c6 * u[n + i];
                c.expect(lhs == u[n + k + 1] + um1(n), at(n, k));
            }
        report.results.push_back(c.done());
    }
    {
        IdentityCheck c("u_{n+1}-1 = [b1 b2^n]");
        for (int n = 0; n <= nmax; ++n) {
            Natural lhs = c5 * u[n];
            for (int i = 0; i <= n - 1; ++i) lhs += c6 * u[i];
            c.expect(lhs == u[n + 1] - 1, at(n));
        }
        report.results.push_back(c.done());
    }
    {
        IdentityCheck c("u_{n+1} = [b1 b2^(n-1) b1]");
        for (int n = 1; n <= nmax; ++n) {
            Natural lhs = c5 * u[n] + c5 * u[0];
            for (int i = 1; i <= n - 1; ++i) lhs += c6 * u[i];
            c.expect(lhs == u[n + 1], at(n));
        }
        report.results.push_back(c.done());
    }
    {
        IdentityCheck c("[b1 b2^k] < u_{n+k+1}");
        for (int n = 0; n <= nmax; ++n)
            for (int k = 1; k <= kmax; ++k) {
                Natural lhs = c5 * u[n + k];
                for (int i = 1; i <= k - 1; ++i) lhs += c6 * u[n + i];
                c.expect(lhs < u[n + k + 1], at(n, k));
            }
        report.results.push_back(c.done());
    }
    {
        IdentityCheck c("increasing");
        for (int n = 0; n <= nmax; ++n) c.expect(u[n] < u[n + 1] && U[n] < U[n + 1], at(n));
        report.results.push_back(c.done());
    }
    {
        IdentityCheck c("growth bounds");
        for (int n = 0; n <= nmax; ++n) {
            const bool upper = n == 0 ? u[1] <= c4 * u[0] : u[n + 1] < c4 * u[n];
            c.expect(c5 * u[n] < u[n + 1] && upper, at(n));
        }
        report.results.push_back(c.done());
    }
    {
        IdentityCheck c("U_n bounds");
        for (int n = 0; n <= nmax; ++n) {
            const bool upper = n == 0 ? u[1] <= U[0] + c5 * u[0] : u[n + 1] < U[n] + c5 * u[n];
            c.expect(U[n] + c6 * u[n] < u[n + 1] && upper, at(n));
        }
        report.results.push_back(c.done());
    }
    {
        IdentityCheck c("u_{n+1} < U_{n+1}-u_n");
        for (int n = 1; n <= nmax; ++n) c.expect(u[n + 1] < U[n + 1] - u[n], at(n));
        report.results.push_back(c.done());
    }
    {
        IdentityCheck c("B-rooted tree sizes");
        for (int n = 0; n <= nmax; ++n) {
            bool ok = t.Y[n + 1] == t.Y[n] + t.y[n + 1];
            ok = ok && u[n + 1] == c5 * u[n] + t.y[n];
            ok = ok && t.y[n + 1] == u[n + 1] - u[n];
            ok = ok && t.Y[n + 1] == U[n + 1] - U[n];
            ok = ok && t.y[n] < t.y[n + 1] && t.Y[n] < t.Y[n + 1];
            c.expect(ok, at(n));
        }
        report.results.push_back(c.done());
    }
    {
        IdentityCheck c("u_{n+1} from U_n");
        for (int n = 0; n <= nmax; ++n) {
            Natural rhs = U[n] + 1 + c6 * u[n];
            for (int k = 0; k <= n - 1; ++k) rhs += c7 * u[k];
            c.expect(u[n + 1] == rhs, at(n));
        }
        report.results.push_back(c.done());
    }
    {
        IdentityCheck c("u_{n+1} from U_{n+1}");
        for (int n = 0; n <= nmax; ++n) {
            Natural s = 0;
            for (int k = 0; k <= n; ++k) s += u[k];
            c.expect(u[n + 1] == U[n + 1] - s, at(n));
        }
        report.results.push_back(c.done());
    }
    if (p == 7) {
        {
            IdentityCheck c("p=7: u_{n+1} = U_n+u_n+1");
            for (int n = 0; n <= nmax; ++n) c.expect(u[n + 1] == U[n] + u[n] + 1, at(n));
            report.results.push_back(c.done());
        }
        {
            IdentityCheck c("p=7: u_{n+1}-1 = [2 1^n]");
            for (int n = 0; n <= nmax; ++n) {
                Natural lhs = 2 * u[n];
                for (int i = 0; i <= n - 1; ++i) lhs += u[i];
                c.expect(lhs == u[n + 1] - 1, at(n));
            }
            report.results.push_back(c.done());
        }
        {
            IdentityCheck c("p=7: u_{n+2} = 3u_{n+1}-u_n");
            for (int n = 0; n <= nmax; ++n) c.expect(u[n + 2] - 3 * u[n + 1] + u[n] == 0, at(n));
            report.results.push_back(c.done());
        }
    }
    return report;
}

}  // namespace hypergrid
