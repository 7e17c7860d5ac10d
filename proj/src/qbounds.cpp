#include "q2/qbounds.hpp"

#include <algorithm>

#include "q2/canonical.hpp"
#include "q2/comborth.hpp"

namespace q2 {

std::string bound_rule_name(BoundRule r) {
    switch (r) {
        case BoundRule::UniquePath: return "unique-path";
        case BoundRule::Independence: return "independence";
        case BoundRule::CommonNeighbors: return "common-neighbors";
        case BoundRule::NotTwoConnected: return "not-2-connected";
        case BoundRule::EdgeCount: return "edge-count";
        case BoundRule::Trivial: return "trivial";
    }
    return "?";
}

std::optional<BoundRule> bound_rule_from_name(const std::string& s) {
    for (BoundRule r : {BoundRule::UniquePath, BoundRule::Independence, BoundRule::CommonNeighbors,
                        BoundRule::NotTwoConnected, BoundRule::EdgeCount, BoundRule::Trivial})
        if (bound_rule_name(r) == s) return r;
    return std::nullopt;
}

std::string ExtremalTag::str() const {
    switch (kind) {
        case DoubleCandle: return "double-candle(" + std::to_string(k) + ")";
        case SingleCandle: return "single-candle(" + std::to_string(k) + ")";
        case Cube: return "Q3";
    }
    return "?";
}

int shortest_path_count(const Graph& g, int x, int y, int* dist) {
    // BFS-DAG counting, saturated at 2: only the "exactly one" predicate matters.
    std::vector<int> d(g.order(), -1), cnt(g.order(), 0);
    d[x] = 0;
    cnt[x] = 1;
    std::vector<int> frontier{x};
    while (!frontier.empty() && d[y] == -1) {
        std::vector<int> next;
        for (int u : frontier) {
            std::uint64_t nb = g.neighbors(u);
            while (nb) {
                int v = __builtin_ctzll(nb);
                nb &= nb - 1;
                if (d[v] == -1) {
                    d[v] = d[u] + 1;
                    next.push_back(v);
                }
                if (d[v] == d[u] + 1) cnt[v] = std::min(2, cnt[v] + cnt[u]);
            }
        }
        frontier = std::move(next);
    }
    if (dist) *dist = d[y];
    return d[y] == -1 ? 0 : cnt[y];
}

BoundReport unique_path_bound(const Graph& g) {
    if (!g.connected()) throw NotConnected("unique_path_bound requires a connected graph");
    BoundReport best{BoundRule::UniquePath, 1, {}};
    for (int x = 0; x < g.order(); ++x)
        for (int y = x + 1; y < g.order(); ++y) {
            int d = -1;
            if (shortest_path_count(g, x, y, &d) == 1 && 1 + d > best.lower_bound) {
                best.lower_bound = 1 + d;
                best.witness.vertices = {x, y};
                best.witness.distance = d;
            }
        }
    return best;
}

namespace {

struct MisSearch {
    const Graph& g;
    int best = 0;
    std::uint64_t best_set = 0;

    explicit MisSearch(const Graph& graph) : g(graph) {}

    // Greedy clique cover of G[cand]: number of cliques bounds alpha(G[cand]).
    int clique_cover_bound(std::uint64_t cand) const {
        int cliques = 0;
        std::vector<std::uint64_t> members;  //  per clique: vertex mask
        std::uint64_t c = cand;
        while (c) {
            int v = __builtin_ctzll(c);
            c &= c - 1;
            bool placed = false;
            for (auto& m : members) {
                if ((m & ~g.neighbors(v)) == 0) {  // v adjacent to every member
                    m |= 1ULL << v;
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                members.push_back(1ULL << v);
                ++cliques;
            }
        }
        return cliques;
    }

    void rec(std::uint64_t cand, std::uint64_t chosen, int size) {
        if (size > best) {
            best = size;
            best_set = chosen;
        }
        if (!cand) return;
        if (size + clique_cover_bound(cand) <= best) return;
        // Pivot on the highest-degree candidate.
        int pivot = -1, pd = -1;
        std::uint64_t c = cand;
        while (c) {
            int v = __builtin_ctzll(c);
            c &= c - 1;
            int dv = __builtin_popcountll(g.neighbors(v) & cand);
            if (dv > pd) {
                pd = dv;
                pivot = v;
            }
        }
        rec(cand & ~g.closed_neighborhood(pivot), chosen | (1ULL << pivot), size + 1);
        rec(cand & ~(1ULL << pivot), chosen, size);
    }
};

}  // namespace

int max_independent_set(const Graph& g, std::vector<int>* witness) {
    MisSearch s(g);
    s.rec(full_mask(g.order()), 0, 0);
    if (witness) {
        witness->clear();
        std::uint64_t m = s.best_set;
        while (m) {
            witness->push_back(__builtin_ctzll(m));
            m &= m - 1;
        }
    }
    return s.best;
}

BoundReport independence_bound(const Graph& g) {
    if (!g.connected()) throw NotConnected("independence_bound requires a connected graph");
    std::vector<int> set;
    int alpha = max_independent_set(g, &set);
    BoundReport r{BoundRule::Independence, 1, {}};
    r.witness.vertices = set;
    if (alpha > g.order() / 2) r.lower_bound = 3;
    return r;
}

BoundReport common_neighbors_bound(const Graph& g, int max_set_size) {
    if (max_set_size < 2) throw InvalidParameter("common_neighbors_bound: maxSetSize >= 2");
    if (!g.connected()) throw NotConnected("common_neighbors_bound requires a connected graph");
    BoundReport r{BoundRule::CommonNeighbors, 1, {}};
    if (g.order() < 3) return r;

    std::vector<int> members;
    // DFS over independent sets in ascending vertex order.
    auto test = [&](const std::vector<int>& set) -> bool {
        int k = static_cast<int>(set.size());
        std::uint64_t uni = 0;
        for (int i = 0; i < k; ++i) {
            std::uint64_t with_any = 0;
            for (int j = 0; j < k; ++j) {
                if (i == j) continue;
                with_any |= g.neighbors(set[i]) & g.neighbors(set[j]);
            }
            if (with_any == 0) return false;  // member i shares no neighbor
            uni |= with_any;
        }
        return __builtin_popcountll(uni) < k;
    };
    bool found = false;
    auto rec = [&](auto&& self, int next) -> void {
        if (found) return;
        if (static_cast<int>(members.size()) >= 2 && test(members)) {
            r.lower_bound = 3;
            r.witness.vertices = members;
            found = true;
            return;
        }
        if (static_cast<int>(members.size()) == max_set_size) return;
        for (int v = next; v < g.order(); ++v) {
            bool indep = true;
            for (int u : members)
                if (g.adjacent(u, v)) {
                    indep = false;
                    break;
                }
            if (!indep) continue;
            members.push_back(v);
            self(self, v + 1);
            members.pop_back();
            if (found) return;
        }
    };
    rec(rec, 0);
    return r;
}

BoundReport two_connectivity_check(const Graph& g) {
    if (!g.connected()) throw NotConnected("two_connectivity_check requires a connected graph");
    BoundReport r{BoundRule::NotTwoConnected, 1, {}};
    if (g.order() < 3) return r;
    for (int v = 0; v < g.order(); ++v) {
        Graph h = g.induced(full_mask(g.order()) & ~(1ULL << v));
        if (!h.connected()) {
            r.lower_bound = 3;
            r.witness.vertices = {v};
            return r;
        }
    }
    return r;
}

std::optional<CandleId> is_candle(const Graph& g) {
    int n = g.order();
    if (n == 3 && g.size() == 3) return CandleId{false, 1};
    if (n >= 4 && n % 2 == 0) {
        int k = n / 2;
        Graph c = double_candle(k);
        if (g.size() == c.size() && is_isomorphic(g, c)) return CandleId{true, k};
    }
    if (n >= 5 && n % 2 == 1) {
        int k = (n - 1) / 2;
        Graph c = single_candle(k);
        if (g.size() == c.size() && is_isomorphic(g, c)) return CandleId{false, k};
    }
    return std::nullopt;
}

EdgeBoundResult edge_bound_check(const Graph& g) {
    if (!g.connected()) throw NotConnected("edge_bound_check requires a connected graph");
    EdgeBoundResult r;
    int n = g.order();
    r.edges = g.size();
    if (n < 3) return r;  // K_2 and below carry no edge constraint
    r.bound = (n % 2 == 0) ? 2 * n - 4 : 2 * n - 3;
    if (r.edges < r.bound) {
        r.excluded = true;
        return r;
    }
    if (r.edges == r.bound) {
        r.boundary = true;
        if (auto c = is_candle(g)) {
            r.tag = ExtremalTag{c->double_ended ? ExtremalTag::DoubleCandle : ExtremalTag::SingleCandle,
                                c->k};
        } else if (n == 8 && is_isomorphic(g, cube_q3())) {
            r.tag = ExtremalTag{ExtremalTag::Cube, 0};
        } else {
            r.excluded = true;
        }
    }
    return r;
}

SieveVerdict q2_sieve(const Graph& g) {
    if (!g.connected()) throw NotConnected("q2_sieve requires a connected graph");
    SieveVerdict v;
    int n = g.order();

    if (n == 1) {
        BoundReport r{BoundRule::Trivial, 1, {}};
        v.reports.push_back(r);
        v.excluded = true;
        return v;
    }

    EdgeBoundResult eb = edge_bound_check(g);
    v.extremal_tag = eb.tag;
    if (eb.excluded) {
        BoundReport r{BoundRule::EdgeCount, 3, {}};
        r.witness.edges = eb.edges;
        r.witness.bound = eb.bound;
        r.witness.boundary = eb.boundary;
        v.reports.push_back(r);
    }

    if (BoundReport r = unique_path_bound(g); r.lower_bound >= 3) v.reports.push_back(r);
    if (n >= 3) {
        if (BoundReport r = two_connectivity_check(g); r.lower_bound >= 3) v.reports.push_back(r);
        if (BoundReport r = independence_bound(g); r.lower_bound >= 3) v.reports.push_back(r);
        int cap = n <= 10 ? n : 4;
        if (BoundReport r = common_neighbors_bound(g, cap); r.lower_bound >= 3) v.reports.push_back(r);
        // p(2,<=4) necessary condition; a violation is a unique shortest 2-path.
        if (has_two_path(g) && !pattern_allows_comb_orth(g)) {
            bool already = false;
            for (const auto& r : v.reports) already |= r.rule == BoundRule::UniquePath;
            if (!already) {
                for (int x = 0; x < n && !already; ++x)
                    for (int y = x + 1; y < n && !already; ++y) {
                        if (g.adjacent(x, y)) continue;
                        if (__builtin_popcountll(g.neighbors(x) & g.neighbors(y)) == 1) {
                            BoundReport r{BoundRule::UniquePath, 3, {}};
                            r.witness.vertices = {x, y};
                            r.witness.distance = 2;
                            v.reports.push_back(r);
                            already = true;
                        }
                    }
            }
        }
    }

    v.excluded = !v.reports.empty();
    return v;
}

}  // namespace q2
