#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "q2/errors.hpp"

namespace q2 {

// Vertex count is capped so one adjacency row fits a machine word.
inline constexpr int kMaxVertices = 64;

inline std::uint64_t full_mask(int n) {
    return n >= 64 ? ~0ULL : ((1ULL << n) - 1);
}

// Simple undirected graph on vertices 0..n-1, one adjacency bitmask per vertex.
// Values are treated as immutable once built; add_edge/remove_edge are
// construction-time helpers.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
        if (n < 0 || n > kMaxVertices)
            throw InvalidParameter("vertex count must be in 0..64, got " + std::to_string(n));
    }

    int order() const { return n_; }

    int size() const {
        int deg_sum = 0;
        for (auto row : adj_) deg_sum += __builtin_popcountll(row);
        return deg_sum / 2;
    }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[u] >> v) & 1;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InvalidParameter("self-loops are not allowed");
        adj_[u] |= 1ULL << v;
        adj_[v] |= 1ULL << u;
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        adj_[u] &= ~(1ULL << v);
        adj_[v] &= ~(1ULL << u);
    }

    std::uint64_t neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    std::uint64_t closed_neighborhood(int v) const { return neighbors(v) | (1ULL << v); }

    int degree(int v) const { return __builtin_popcountll(neighbors(v)); }

    int min_degree() const {
        int d = n_ > 0 ? degree(0) : 0;
        for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if ((adj_[u] >> v) & 1) out.emplace_back(u, v);
        return out;
    }

    // Sorted ascending.
    std::vector<int> degree_sequence() const;

    bool connected() const;
    bool is_bipartite() const;

    // Vertex i of *this becomes vertex perm[i] of the result.
    Graph permuted(std::span<const int> perm) const;

    // Induced subgraph on the set bits of vertex_mask, vertices renumbered in
    // ascending order of their old labels.
    Graph induced(std::uint64_t vertex_mask) const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw InvalidParameter("vertex " + std::to_string(v) + " out of range 0.." +
                                   std::to_string(n_ - 1));
    }

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

// --- generators ---------------------------------------------------------

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int m, int n);
Graph cube_q3();

// Double-ended candle on 2k vertices (k >= 2). Vertex 0 is the paper's left
// end; internal index = figure label - 1, so the twin pairs are
// {1,2}, {3,4}, ..., {2k-3,2k-2} and vertex 2k-1 is the right end.
Graph double_candle(int k);

// Single-ended candle on 2k+1 vertices (k >= 1); equals
// duplicate(double_candle(k), 2k-1, joined=true) for k >= 2, K_3 for k = 1.
Graph single_candle(int k);

// Adds a twin u of v: N(u) = N(v) (joined=false) or N(u) = N[v] (joined=true).
// The new vertex gets index g.order().
Graph duplicate(const Graph& g, int v, bool joined);
Graph duplicate_sequence(const Graph& g, std::span<const int> vertices, bool joined);

// Figure graphs by name. Accepted names: P_n, C_n, K_n, K_{m,n} (also Pn, Cn,
// Kn, Km,n), Q3, G3_plus_edge, G4_plus_edge, G3_1..G3_4, S1, S2, S3.
// Adjacency lists are transcribed in docs/named_graphs.md.
Graph named_graph(const std::string& name);

// --- distance partition --------------------------------------------------

struct DistancePartition {
    int root = 0;
    std::vector<std::vector<int>> levels;  // levels[i] = N_i(root), ascending
    std::vector<int> predecessor_counts;   // per vertex: neighbors one level closer
    int eccentricity() const { return static_cast<int>(levels.size()) - 1; }
    std::vector<int> distance_sequence() const {
        std::vector<int> d;
        d.reserve(levels.size());
        for (const auto& lv : levels) d.push_back(static_cast<int>(lv.size()));
        return d;
    }
};

DistancePartition distance_partition(const Graph& g, int v);

}  // namespace q2
