#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hypergrid/oracle.hpp"

using namespace hypergrid;
using nlohmann::json;

namespace {

struct Config {
    int p = 7;
    std::string grid = "p3";
    std::string tree = "leftmost";
    std::string format = "text";
    int depth = -1;
    std::string suite = "all";
    int jobs = 1;
    NodeId codec_max = 10'000;
    std::string arg;
};

struct Output {
    json doc = json::object();
    std::vector<std::string> lines;

    void line(const std::string& key, const std::string& text, json value) {
        lines.push_back(key.empty() ? text : key + ": " + text);
        if (!key.empty()) doc[key] = std::move(value);
    }
};

TilingParams params_of(const Config& cfg) {
    return make_params(cfg.p, cfg.grid == "pm24" ? Grid::Pminus2_4 : Grid::P3);
}

TreeKind kind_of(const Config& cfg) {
    return cfg.tree == "preferred" ? TreeKind::PreferredSon : TreeKind::LeftmostSon;
}

std::string join_naturals(const std::vector<Natural>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + x.str();
    return s;
}

json naturals(const std::vector<Natural>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

json node_json(const TilingParams& params, const Coordinate& c) {
    return {{"num", decode(params, c).str()}, {"coord", to_text(params, c)}};
}

std::string node_text(const TilingParams& params, const Coordinate& c) {
    return decode(params, c).str() + " " + to_text(params, c);
}

void print(const Config& cfg, const Output& out) {
    if (cfg.format == "json") {
        std::cout << out.doc.dump() << '\n';
        return;
    }
    for (const auto& l : out.lines) std::cout << l << '\n';
}

int cmd_seq(const Config& cfg) {
    const int n = std::stoi(cfg.arg);
    if (n < 0) throw InvalidParameter("n must be non-negative");
    const auto table = build_sequences(params_of(cfg), n);
    Output out;
    out.line("u", join_naturals(table.u), naturals(table.u));
    out.line("U", join_naturals(table.U), naturals(table.U));
    print(cfg, out);
    return 0;
}

int cmd_encode(const Config& cfg) {
    const auto params = params_of(cfg);
    const auto c = encode(params, parse_natural(cfg.arg));
    Output out;
    out.line("", to_text(params, c), {});
    out.doc = {{"num", cfg.arg}, {"coord", to_text(params, c)}, {"digits", c.digits}};
    print(cfg, out);
    return 0;
}

int cmd_decode(const Config& cfg) {
    const auto params = params_of(cfg);
    const auto c = parse_canonical(params, cfg.arg);
    Output out;
    out.line("", decode(params, c).str(), {});
    out.doc = node_json(params, c);
    print(cfg, out);
    return 0;
}

int cmd_step(const Config& cfg, bool up) {
    const auto params = params_of(cfg);
    const auto c = parse_canonical(params, cfg.arg);
    const auto d = up ? increment(params, c) : decrement(params, c);
    Output out;
    out.line("", to_text(params, d), {});
    out.doc = node_json(params, d);
    print(cfg, out);
    return 0;
}

int cmd_valid(const Config& cfg) {
    const auto params = params_of(cfg);
    const bool ok = is_canonical(params, parse_coordinate(cfg.arg));
    Output out;
    out.line("", ok ? "valid" : "invalid", {});
    out.doc = {{"coord", cfg.arg}, {"valid", ok}};
    print(cfg, out);
    return ok ? 0 : 2;
}

int cmd_info(const Config& cfg) {
    const auto params = params_of(cfg);
    const auto kind = kind_of(cfg);
    const auto c = parse_canonical(params, cfg.arg);
    if (c.empty()) throw InvalidCoordinate("node 0 is not in the tree");
    const auto [status, type] = classify(params, kind, c);
    const auto f = father(params, kind, c);
    const auto s = preferred_son(params, c);
    Output out;
    out.line("node", node_text(params, c), node_json(params, c));
    out.line("level", std::to_string(node_level(params, decode(params, c))), node_level(params, decode(params, c)));
    out.line("status", to_string(status), to_string(status));
    out.line("type", to_string(type), to_string(type));
    out.line("father", node_text(params, f), node_json(params, f));
    out.line("preferred son", node_text(params, s), node_json(params, s));
    print(cfg, out);
    return 0;
}

int cmd_sons(const Config& cfg) {
    const auto params = params_of(cfg);
    const auto c = parse_canonical(params, cfg.arg);
    Output out;
    json list = json::array();
    for (const auto& s : sons(params, kind_of(cfg), c)) {
        out.lines.push_back(node_text(params, s));
        list.push_back(node_json(params, s));
    }
    out.doc = {{"node", node_json(params, c)}, {"sons", list}};
    print(cfg, out);
    return 0;
}

int cmd_path(const Config& cfg) {
    const auto params = params_of(cfg);
    const auto c = parse_canonical(params, cfg.arg);
    const auto p = path(params, kind_of(cfg), c);
    std::string text;
    for (int s : p.steps) text += (text.empty() ? "" : " ") + std::to_string(s);
    Output out;
    out.lines.push_back(text);
    out.doc = {{"node", node_json(params, c)}, {"path", p.steps}};
    print(cfg, out);
    return 0;
}

int cmd_neighbors(const Config& cfg) {
    const auto params = params_of(cfg);
    const auto c = parse_canonical(params, cfg.arg);
    const auto list = neighbors(params, kind_of(cfg), c);
    Output out;
    json arr = json::array();
    for (int i = 1; i <= list.size(); ++i) {
        const auto& r = list.at(i);
        std::string text = std::to_string(i) + " " + r.node.str();
        if (r.tag != RefTag::Same) text += " (" + to_string(r.tag) + ")";
        out.lines.push_back(text);
        arr.push_back({{"index", i}, {"num", r.node.str()}, {"tree", to_string(r.tag)}});
    }
    out.doc = {{"node", node_json(params, c)}, {"neighbors", arr}};
    print(cfg, out);
    return 0;
}

int cmd_tree(const Config& cfg) {
    const auto tree = generate(params_of(cfg), kind_of(cfg), cfg.depth < 0 ? 3 : cfg.depth);
    if (cfg.format == "dot") {
        dump_dot(tree, std::cout);
    } else {
        dump_json(tree, std::cout);
    }
    return 0;
}

std::vector<VerificationReport> run_suites(const TilingParams& params, const std::vector<TreeKind>& kinds, int depth,
                                          const Config& cfg, bool with_numeration) {
    std::vector<VerificationReport> out;
    const auto want = [&](const char* s) { return cfg.suite == "all" || cfg.suite == s; };
    if (with_numeration) {
        if (want("codec")) out.push_back(check_codec(params, cfg.codec_max, cfg.jobs));
        if (want("language")) out.push_back(check_language(params));
        if (want("identities")) out.push_back(check_identities(params, 20, 20));
    }
    for (auto kind : kinds) {
        if (params.grid == Grid::P3) {
            if (want("tree")) out.push_back(check_tree(params, kind, depth));
            if (want("paths")) out.push_back(check_paths(params, kind, depth, cfg.jobs));
        }
        if (want("neighbors")) out.push_back(check_neighbors(params, kind, depth, cfg.jobs));
    }
    return out;
}

int cmd_verify(const Config& cfg, bool p_given, bool tree_given, bool grid_given) {
    std::vector<int> ps = p_given ? std::vector<int>{cfg.p} : std::vector<int>{7, 8, 9, 12};
    std::vector<TreeKind> kinds =
        tree_given ? std::vector<TreeKind>{kind_of(cfg)} : std::vector<TreeKind>{TreeKind::PreferredSon, TreeKind::LeftmostSon};
    std::vector<Grid> grids = grid_given ? std::vector<Grid>{params_of(cfg).grid} : std::vector<Grid>{Grid::P3, Grid::Pminus2_4};

    std::vector<VerificationReport> reports;
    for (int p : ps) {
        const int depth = cfg.depth >= 0 ? cfg.depth : (p <= 8 ? 8 : 6);
        bool first = true;
        for (auto grid : grids) {
            auto more = run_suites(make_params(p, grid), kinds, depth, cfg, first);
            reports.insert(reports.end(), more.begin(), more.end());
            first = false;
        }
    }

    long mismatches = 0;
    json arr = json::array();
    for (const auto& r : reports) {
        mismatches += r.mismatch_count;
        if (cfg.format == "json") {
            arr.push_back(json::parse(r.to_json()));
            continue;
        }
        std::cout << (r.passed() ? "PASS " : "FAIL ") << r.suite << " " << r.parameters << " checked=" << r.checked
                  << " mismatches=" << r.mismatch_count << '\n';
        for (const auto& m : r.mismatches)
            std::cout << "  " << m.what << " at " << m.node << ": expected " << m.expected << ", got " << m.actual << '\n';
    }
    if (cfg.format == "json") std::cout << json{{"reports", arr}, {"mismatches", mismatches}}.dump() << '\n';
    return mismatches == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    Config cfg;
    CLI::App app{"Coordinates, trees and neighbours in the tilings {p,3} and {p-2,4}"};
    app.require_subcommand(1);
    app.fallthrough();

    auto* p_opt = app.add_option("--p", cfg.p, "number of sides, p >= 7")->envname("HYPERGRID_P");
    auto* grid_opt = app.add_option("--grid", cfg.grid, "p3 for {p,3}, pm24 for {p-2,4}")
                         ->envname("HYPERGRID_GRID")
                         ->check(CLI::IsMember({"p3", "pm24"}));
    auto* tree_opt = app.add_option("--tree", cfg.tree, "preferred or leftmost")
                         ->envname("HYPERGRID_TREE")
                         ->check(CLI::IsMember({"preferred", "leftmost"}));
    app.add_option("--format", cfg.format, "text or json (tree also takes dot)")
        ->envname("HYPERGRID_FORMAT")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--depth", cfg.depth, "tree depth")->envname("HYPERGRID_DEPTH");
    app.add_option("--suite", cfg.suite, "verify suite")
        ->envname("HYPERGRID_SUITE")
        ->check(CLI::IsMember({"all", "codec", "language", "identities", "tree", "paths", "neighbors"}));
    app.add_option("--jobs", cfg.jobs, "worker threads for verify")->envname("HYPERGRID_JOBS")->check(CLI::PositiveNumber);
    app.add_option("--codec-max", cfg.codec_max, "largest n for the codec suite")->envname("HYPERGRID_CODEC_MAX");

    struct Sub {
        const char* name;
        const char* help;
        const char* arg;
    };
    const std::vector<Sub> subs = {
        {"seq", "print u_0..u_n and U_0..U_n", "n"},
        {"encode", "coordinate of a node number", "n"},
        {"decode", "node number of a coordinate", "c"},
        {"incr", "coordinate of the next node", "c"},
        {"decr", "coordinate of the previous node", "c"},
        {"valid", "check canonical form", "c"},
        {"info", "level, status, type, father and preferred son", "c"},
        {"sons", "son coordinates", "c"},
        {"path", "branch from the root", "c"},
        {"neighbors", "indexed neighbour list", "c"},
        {"tree", "dump the tree as JSON lines or DOT", nullptr},
        {"verify", "run the oracle suites", nullptr},
    };
    for (const auto& s : subs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        if (s.arg) sub->add_option(s.arg, cfg.arg, s.arg)->required();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    const std::string name = app.get_subcommands().front()->get_name();
    if (cfg.format == "dot" && name != "tree") {
        std::cerr << "error: --format dot only applies to tree\n";
        return 2;
    }

    try {
        if (name == "seq") return cmd_seq(cfg);
        if (name == "encode") return cmd_encode(cfg);
        if (name == "decode") return cmd_decode(cfg);
        if (name == "incr") return cmd_step(cfg, true);
        if (name == "decr") return cmd_step(cfg, false);
        if (name == "valid") return cmd_valid(cfg);
        if (name == "info") return cmd_info(cfg);
        if (name == "sons") return cmd_sons(cfg);
        if (name == "path") return cmd_path(cfg);
        if (name == "neighbors") return cmd_neighbors(cfg);
        if (name == "tree") return cmd_tree(cfg);
        return cmd_verify(cfg, p_opt->count() > 0, tree_opt->count() > 0, grid_opt->count() > 0);
    } catch (const InvalidCoordinate& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ResourceLimit& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const InvalidParameter& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
