#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hypergrid/navigation.hpp"

namespace hypergrid {

struct GraphRef {
    RefTag tag = RefTag::Same;
    NodeId node = 0;

    friend bool operator==(const GraphRef&, const GraphRef&) = default;
};

// Tile adjacency restored from three consecutive sector trees.  Lists are
// stored for the middle copy only, counter-clockwise, starting at the father.
struct DualGraph {
    TilingParams params;
    TreeKind kind = TreeKind::LeftmostSon;
    int depth = 0;
    std::vector<std::vector<GraphRef>> adjacency;  // by node number, empty when incomplete
    std::vector<std::string> anomalies;

    bool complete(NodeId n) const { return n < adjacency.size() && !adjacency[n].empty(); }
};

DualGraph build_dual_graph(const TilingParams& params, TreeKind kind, int depth,
                           NodeId node_budget = default_node_budget);

struct Mismatch {
    std::string what;
    std::string node;
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    std::string suite;
    std::string parameters;
    long checked = 0;
    long mismatch_count = 0;
    std::vector<Mismatch> mismatches;  // first few only

    bool passed() const { return mismatch_count == 0; }
    void fail(Mismatch m);
    void merge(VerificationReport other);
    std::string to_json() const;
};

// Operations under test; the defaults are the library functions.
struct CodecUnderTest {
    std::function<Coordinate(const TilingParams&, const Natural&)> encode;
    std::function<Natural(const TilingParams&, const Coordinate&)> decode;
    std::function<Coordinate(const TilingParams&, const Coordinate&)> increment;
    std::function<Coordinate(const TilingParams&, const Coordinate&)> decrement;
    std::function<bool(const TilingParams&, const Coordinate&)> is_canonical;

    static CodecUnderTest library();
};

VerificationReport check_codec(const TilingParams& params, NodeId n_max, int jobs = 1);
VerificationReport check_codec(const TilingParams& params, NodeId n_max, const CodecUnderTest& codec, int jobs = 1);
VerificationReport check_language(const TilingParams& params, int max_length = 4, int count_up_to = 6);
VerificationReport check_tree(const TilingParams& params, TreeKind kind, int depth);
VerificationReport check_paths(const TilingParams& params, TreeKind kind, int depth, int jobs = 1);
VerificationReport check_neighbors(const TilingParams& params, TreeKind kind, int depth, int jobs = 1);
VerificationReport check_identities(const TilingParams& params, int nmax, int kmax);

// greedy coordinate of n over 64-bit arithmetic, kept apart from the library codec
std::vector<Digit> reference_encode(int p, NodeId n);
NodeId reference_decode(int p, const std::vector<Digit>& digits);

}  // namespace hypergrid
