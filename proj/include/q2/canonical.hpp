#pragma once

#include <optional>
#include <string>
#include <vector>

#include "q2/graph.hpp"

namespace q2 {

// Ordering p (p[position] = vertex) whose column-major upper-triangle
// bitstring is lexicographically minimal over all orderings; the bit order is
// the graph6 bit order, so canonical_graph6 is the minimum graph6 string of
// any relabeling.
std::vector<int> canonical_ordering(const Graph& g);
Graph canonical_form(const Graph& g);
std::string canonical_graph6(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

// Mapping m with b.adjacent(m[u], m[v]) == a.adjacent(u, v) for all u,v.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

// Injective (here bijective: equal orders required) m with every pattern edge
// mapped to a host edge; host may have extra edges.
std::optional<std::vector<int>> find_spanning_embedding(const Graph& host, const Graph& pattern);
bool contains_spanning(const Graph& host, const Graph& pattern);

}  // namespace q2
