#pragma once

#include <optional>
#include <vector>

#include "q2/exact.hpp"
#include "q2/graph.hpp"
#include "q2/verify.hpp"

namespace q2 {

// Support overlap != 1. Zero means exactly zero: inputs here are patterns or
// exact matrices, never tolerance-thresholded floats.
bool comb_orth_vectors(const std::vector<double>& x, const std::vector<double>& y);
bool comb_orth_vectors(const std::vector<Root2>& x, const std::vector<Root2>& y);

// All row pairs and all column pairs combinatorially orthogonal.
bool is_comb_orth_matrix(const FloatMatrix& a);
bool is_comb_orth_matrix(const ExactMatrix& a);

// Lemma: S(G) contains a combinatorially orthogonal matrix iff A(G)+I is one.
bool pattern_allows_comb_orth(const Graph& g);

bool has_two_path(const Graph& g);

// allow_triangles=true tests p(2,<=4): every 2-path lies in a C_3 or C_4;
// false tests p(2,4): every 2-path lies in a C_4 (a second common neighbor is
// required even for adjacent endpoints). Throws PropertyVacuous without a
// 2-path.
bool p2_cycle_property(const Graph& g, bool allow_triangles);

// |N(x) cap N(y)| != 1 for all distinct pairs.
bool quadrangular_check(const Graph& g);

// x with N(x) = {u,v}, N(u) = N(v), deg(u) >= 3.
std::vector<int> condensable_vertices(const Graph& g);

struct CondensationStep {
    Graph before;
    int removed;  // condensable vertex of `before`
};

struct CondensationTrace {
    std::vector<CondensationStep> steps;
    Graph terminal;
};

enum class CondenseStatus { Found, Absent, Budget };

struct CondenseResult {
    CondenseStatus status = CondenseStatus::Absent;
    std::optional<CondensationTrace> trace;
    long nodes_explored = 0;
};

// DFS over removal orders of condensable vertices, memoized on canonical
// forms; Absent is proven only by exhausting the choice tree, Budget means
// max_nodes expansions were hit first.
CondenseResult condense_to(const Graph& g, const Graph& target, long max_nodes = 100000);

bool replay_condensation(const CondensationTrace& t, const Graph& g, const Graph& target);

struct Section4Report {
    struct Item {
        bool hypothesis = false;
        bool bound = false;
    };
    Item p2le4_edges_2n4;        // p(2,<=4)           => |E| >= 2n-4
    Item nonbip_quad_edges_2n1;  // non-bip quadrangular => |E| >= 2n-1
    Item comborth_edges_3n2;     // comb-orth pattern  => |E| >= (3/2)n-2
    int edges = 0;
};

Section4Report section4_bounds_check(const Graph& g);

}  // namespace q2
