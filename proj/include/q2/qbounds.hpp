#pragma once

#include <optional>
#include <string>
#include <vector>

#include "q2/graph.hpp"

namespace q2 {

enum class BoundRule {
    UniquePath,
    Independence,
    CommonNeighbors,
    NotTwoConnected,
    EdgeCount,
    Trivial,
};

std::string bound_rule_name(BoundRule r);
std::optional<BoundRule> bound_rule_from_name(const std::string& s);

struct BoundWitness {
    std::vector<int> vertices;  // pair / independent set / cut vertex
    int distance = -1;          // unique-path
    int edges = -1;             // edge-count
    int bound = -1;             // edge-count
    bool boundary = false;      // edge-count equality with no extremal match

    bool operator==(const BoundWitness&) const = default;
};

struct BoundReport {
    BoundRule rule;
    int lower_bound = 1;
    BoundWitness witness;

    bool operator==(const BoundReport&) const = default;
};

// q(G) >= 1 + max distance over pairs joined by a unique shortest path.
BoundReport unique_path_bound(const Graph& g);

// alpha(G) > floor(n/2) rules out q = 2; alpha computed exactly.
BoundReport independence_bound(const Graph& g);

// Independent family {u_1..u_k} where each member shares a neighbor with
// another but the union of pairwise common neighborhoods has < k vertices.
BoundReport common_neighbors_bound(const Graph& g, int max_set_size);

// Cut vertex rules out q = 2 for connected graphs on >= 3 vertices.
BoundReport two_connectivity_check(const Graph& g);

// Number of shortest x-y paths, saturated at 2; *dist receives d(x,y).
int shortest_path_count(const Graph& g, int x, int y, int* dist);

// Exact maximum independent set (branch and bound with a greedy clique-cover
// upper bound). witness, when given, receives one maximum set.
int max_independent_set(const Graph& g, std::vector<int>* witness = nullptr);

struct ExtremalTag {
    enum Kind { DoubleCandle, SingleCandle, Cube } kind;
    int k = 0;  // candle parameter; unused for Cube

    std::string str() const;
    bool operator==(const ExtremalTag&) const = default;
};

struct EdgeBoundResult {
    bool excluded = false;
    bool boundary = false;  // |E| equals the parity bound
    std::optional<ExtremalTag> tag;
    int edges = 0;
    int bound = 0;
};

// |E| >= 2n-4 (n even) / 2n-3 (n odd) for q = 2; at equality the graph must
// be Q3 or a candle, anything else is excluded.
EdgeBoundResult edge_bound_check(const Graph& g);

struct CandleId {
    bool double_ended;
    int k;
};

std::optional<CandleId> is_candle(const Graph& g);

struct SieveVerdict {
    bool excluded = false;
    std::vector<BoundReport> reports;  // every firing rule
    std::optional<ExtremalTag> extremal_tag;
};

// Conjunction of the necessary conditions above plus the p(2,<=4) pattern
// condition; never asserts q = 2. Lemma 1.5's quantifier has no known
// sufficient family size, so max_set_size caps completeness, not soundness.
SieveVerdict q2_sieve(const Graph& g);

}  // namespace q2
