#include "q2/graph.hpp"

#include <algorithm>
#include <cctype>

namespace q2 {

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int v = __builtin_ctzll(f);
            f &= f - 1;
            next |= adj_[v];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == full_mask(n_);
}

bool Graph::is_bipartite() const {
    std::vector<int> color(n_, -1);
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            std::uint64_t nb = adj_[u];
            while (nb) {
                int v = __builtin_ctzll(nb);
                nb &= nb - 1;
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Graph Graph::permuted(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw InvalidParameter("permutation length does not match vertex count");
    Graph h(n_);
    for (int u = 0; u < n_; ++u) {
        std::uint64_t nb = adj_[u];
        while (nb) {
            int v = __builtin_ctzll(nb);
            nb &= nb - 1;
            if (u < v) h.add_edge(perm[u], perm[v]);
        }
    }
    return h;
}

Graph Graph::induced(std::uint64_t vertex_mask) const {
    std::vector<int> keep;
    for (int v = 0; v < n_; ++v)
        if ((vertex_mask >> v) & 1) keep.push_back(v);
    Graph h(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (adjacent(keep[i], keep[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

// --- generators ---------------------------------------------------------

Graph path_graph(int n) {
    if (n < 1) throw InvalidParameter("path needs n >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw InvalidParameter("cycle needs n >= 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    if (n < 1) throw InvalidParameter("complete graph needs n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw InvalidParameter("complete bipartite needs m,n >= 1");
    Graph g(m + n);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) g.add_edge(u, m + v);
    return g;
}

Graph cube_q3() {
    Graph g(8);
    for (int u = 0; u < 8; ++u)
        for (int b = 0; b < 3; ++b) {
            int v = u ^ (1 << b);
            if (u < v) g.add_edge(u, v);
        }
    return g;
}

Graph double_candle(int k) {
    if (k < 2) throw InvalidParameter("double candle needs k >= 2");
    // Blown-up path: blocks {0}, {1,2}, {3,4}, ..., {2k-3,2k-2}, {2k-1};
    // consecutive blocks completely joined, no edges inside a block.
    Graph g(2 * k);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    for (int i = 1; i <= k - 2; ++i)
        for (int a : {2 * i - 1, 2 * i})
            for (int b : {2 * i + 1, 2 * i + 2}) g.add_edge(a, b);
    g.add_edge(2 * k - 3, 2 * k - 1);
    g.add_edge(2 * k - 2, 2 * k - 1);
    return g;
}

Graph single_candle(int k) {
    if (k < 1) throw InvalidParameter("single candle needs k >= 1");
    if (k == 1) return complete_graph(3);
    return duplicate(double_candle(k), 2 * k - 1, /*joined=*/true);
}

Graph duplicate(const Graph& g, int v, bool joined) {
    if (v < 0 || v >= g.order()) throw InvalidParameter("duplicate: vertex out of range");
    if (g.order() + 1 > kMaxVertices) throw InvalidParameter("duplicate: vertex cap exceeded");
    int n = g.order();
    Graph h(n + 1);
    for (auto [a, b] : g.edges()) h.add_edge(a, b);
    std::uint64_t nb = joined ? g.closed_neighborhood(v) : g.neighbors(v);
    while (nb) {
        int u = __builtin_ctzll(nb);
        nb &= nb - 1;
        h.add_edge(n, u);
    }
    return h;
}

Graph duplicate_sequence(const Graph& g, std::span<const int> vertices, bool joined) {
    Graph h = g;
    for (int v : vertices) h = duplicate(h, v, joined);
    return h;
}

namespace {

Graph hexagon_plus(std::initializer_list<std::pair<int, int>> extra) {
    Graph g = cycle_graph(6);
    for (auto [a, b] : extra) g.add_edge(a, b);
    return g;
}

Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
}

bool parse_int(const std::string& s, std::size_t& pos, int& out) {
    if (pos < s.size() && s[pos] == '_') ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) return false;
    out = std::stoi(s.substr(start, pos - start));
    return true;
}

}  // namespace

Graph named_graph(const std::string& name) {
    if (name == "Q3") return cube_q3();
    // G_3 = double_candle(3) on figure labels; extra edges below are 0-indexed.
    if (name == "G3_plus_edge") {
        Graph g = double_candle(3);
        g.add_edge(1, 2);
        return g;
    }
    if (name == "G4_plus_edge") {
        Graph g = double_candle(4);
        g.add_edge(3, 4);
        return g;
    }
    // Hexagon drawings of the 6-vertex figures: C_6 plus chords {1,4},{2,5},
    // then the variant edge(s).
    if (name == "G3_1") return hexagon_plus({{1, 4}, {2, 5}, {1, 5}});
    if (name == "G3_2") return hexagon_plus({{1, 4}, {2, 5}, {1, 3}});
    if (name == "G3_3") return hexagon_plus({{1, 4}, {2, 5}, {0, 3}});
    if (name == "G3_4") return hexagon_plus({{1, 4}, {2, 5}, {1, 5}, {2, 4}});
    if (name == "S1")
        return from_edges(6, {{0, 1}, {0, 2}, {0, 5}, {1, 2}, {1, 4}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    if (name == "S2")
        return from_edges(6, {{0, 2}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
    if (name == "S3")
        return from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});

    if (!name.empty() && (name[0] == 'P' || name[0] == 'C' || name[0] == 'K')) {
        std::size_t pos = 1;
        if (name[0] == 'K' && (name.find('{') != std::string::npos || name.find(',') != std::string::npos)) {
            // K_{m,n} or Km,n
            std::string body = name.substr(1);
            std::erase(body, '{');
            std::erase(body, '}');
            std::size_t p = 0;
            int m = 0, n = 0;
            if (parse_int(body, p, m) && p < body.size() && body[p] == ',' &&
                (++p, parse_int(body, p, n)) && p == body.size())
                return complete_bipartite(m, n);
        } else {
            int n = 0;
            if (parse_int(name, pos, n) && pos == name.size()) {
                switch (name[0]) {
                    case 'P': return path_graph(n);
                    case 'C': return cycle_graph(n);
                    case 'K': return complete_graph(n);
                }
            }
        }
    }
    throw InvalidParameter("unknown graph name: " + name);
}

DistancePartition distance_partition(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw InvalidParameter("distance_partition: vertex out of range");
    if (!g.connected()) throw NotConnected("distance_partition requires a connected graph");
    DistancePartition dp;
    dp.root = v;
    dp.predecessor_counts.assign(g.order(), 0);
    std::vector<int> dist(g.order(), -1);
    dist[v] = 0;
    dp.levels.push_back({v});
    while (true) {
        std::vector<int> next;
        int d = static_cast<int>(dp.levels.size());
        for (int u = 0; u < g.order(); ++u) {
            if (dist[u] != -1) continue;
            for (int w : dp.levels.back()) {
                if (g.adjacent(u, w)) {
                    next.push_back(u);
                    dist[u] = d;
                    break;
                }
            }
        }
        if (next.empty()) break;
        for (int u : next) {
            int c = 0;
            for (int w : dp.levels.back())
                if (g.adjacent(u, w)) ++c;
            dp.predecessor_counts[u] = c;
        }
        dp.levels.push_back(std::move(next));
    }
    return dp;
}

}  // namespace q2
