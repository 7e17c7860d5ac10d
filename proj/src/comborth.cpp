#include "q2/comborth.hpp"

#include <set>
#include <string>

#include "q2/canonical.hpp"
#include "q2/graph6.hpp"

namespace q2 {

namespace {

template <typename V, typename NonZero>
bool overlap_ok(const V& x, const V& y, NonZero nz) {
    if (x.size() != y.size()) throw InvalidParameter("comb_orth_vectors: length mismatch");
    int overlap = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (nz(x[i]) && nz(y[i])) ++overlap;
    return overlap != 1;
}

template <typename GetRow, typename GetCol>
bool comb_orth_all(int n, GetRow row, GetCol col) {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!comb_orth_vectors(row(i), row(j))) return false;
            if (!comb_orth_vectors(col(i), col(j))) return false;
        }
    return true;
}

}  // namespace

bool comb_orth_vectors(const std::vector<double>& x, const std::vector<double>& y) {
    return overlap_ok(x, y, [](double v) { return v != 0.0; });
}

bool comb_orth_vectors(const std::vector<Root2>& x, const std::vector<Root2>& y) {
    return overlap_ok(x, y, [](const Root2& v) { return !v.is_zero(); });
}

bool is_comb_orth_matrix(const FloatMatrix& a) {
    if (a.rows() != a.cols()) throw InvalidParameter("is_comb_orth_matrix: square input required");
    int n = static_cast<int>(a.rows());
    auto row = [&](int i) {
        std::vector<double> v(n);
        for (int j = 0; j < n; ++j) v[j] = a(i, j);
        return v;
    };
    auto col = [&](int j) {
        std::vector<double> v(n);
        for (int i = 0; i < n; ++i) v[i] = a(i, j);
        return v;
    };
    return comb_orth_all(n, row, col);
}

bool is_comb_orth_matrix(const ExactMatrix& a) {
    int n = a.dim();
    auto row = [&](int i) {
        std::vector<Root2> v(n);
        for (int j = 0; j < n; ++j) v[j] = a.at(i, j);
        return v;
    };
    auto col = [&](int j) {
        std::vector<Root2> v(n);
        for (int i = 0; i < n; ++i) v[i] = a.at(i, j);
        return v;
    };
    return comb_orth_all(n, row, col);
}

bool pattern_allows_comb_orth(const Graph& g) {
    ExactMatrix b(g.order());
    for (int i = 0; i < g.order(); ++i) {
        b.set(i, i, 1);
        for (int j = i + 1; j < g.order(); ++j)
            if (g.adjacent(i, j)) b.set(i, j, 1);
    }
    return is_comb_orth_matrix(b);
}

bool has_two_path(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) >= 2) return true;
    return false;
}

bool p2_cycle_property(const Graph& g, bool allow_triangles) {
    if (!has_two_path(g))
        throw PropertyVacuous("p(2,s) needs a path of length 2");
    for (int u = 0; u < g.order(); ++u) {
        std::uint64_t nb = g.neighbors(u);
        for (int x = 0; x < g.order(); ++x) {
            if (!((nb >> x) & 1)) continue;
            for (int y = x + 1; y < g.order(); ++y) {
                if (!((nb >> y) & 1)) continue;
                if (allow_triangles && g.adjacent(x, y)) continue;
                // Need a common neighbor besides u to close a C_4.
                if (__builtin_popcountll(g.neighbors(x) & g.neighbors(y)) < 2) return false;
            }
        }
    }
    return true;
}

bool quadrangular_check(const Graph& g) {
    for (int x = 0; x < g.order(); ++x)
        for (int y = x + 1; y < g.order(); ++y)
            if (__builtin_popcountll(g.neighbors(x) & g.neighbors(y)) == 1) return false;
    return true;
}

std::vector<int> condensable_vertices(const Graph& g) {
    std::vector<int> out;
    for (int x = 0; x < g.order(); ++x) {
        if (g.degree(x) != 2) continue;
        std::uint64_t nb = g.neighbors(x);
        int u = __builtin_ctzll(nb);
        int v = __builtin_ctzll(nb & (nb - 1));
        if (g.neighbors(u) == g.neighbors(v) && g.degree(u) >= 3) out.push_back(x);
    }
    return out;
}

namespace {

struct CondenseSearch {
    const Graph& target;
    long budget;
    long nodes = 0;
    bool out_of_budget = false;
    std::set<std::string> dead;  // canonical forms proven not to reach target
    std::vector<CondensationStep> steps;

    bool rec(const Graph& g) {
        if (g.order() == target.order()) return is_isomorphic(g, target);
        if (g.order() < target.order()) return false;
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        std::string key = canonical_graph6(g);
        if (dead.count(key)) return false;
        for (int x : condensable_vertices(g)) {
            Graph h = g.induced(full_mask(g.order()) & ~(1ULL << x));
            steps.push_back({g, x});
            if (rec(h)) return true;
            steps.pop_back();
            if (out_of_budget) return false;
        }
        dead.insert(std::move(key));
        return false;
    }
};

}  // namespace

CondenseResult condense_to(const Graph& g, const Graph& target, long max_nodes) {
    CondenseResult res;
    CondenseSearch s{target, max_nodes};
    if (s.rec(g)) {
        CondensationTrace t;
        t.steps = std::move(s.steps);
        t.terminal = t.steps.empty() ? g : t.steps.back().before.induced(
                                               full_mask(t.steps.back().before.order()) &
                                               ~(1ULL << t.steps.back().removed));
        res.status = CondenseStatus::Found;
        res.trace = std::move(t);
    } else {
        res.status = s.out_of_budget ? CondenseStatus::Budget : CondenseStatus::Absent;
    }
    res.nodes_explored = s.nodes;
    return res;
}

bool replay_condensation(const CondensationTrace& t, const Graph& g, const Graph& target) {
    Graph cur = g;
    for (const auto& step : t.steps) {
        if (!(step.before == cur)) return false;
        auto cv = condensable_vertices(cur);
        if (std::find(cv.begin(), cv.end(), step.removed) == cv.end()) return false;
        cur = cur.induced(full_mask(cur.order()) & ~(1ULL << step.removed));
    }
    return cur == t.terminal && is_isomorphic(cur, target);
}

Section4Report section4_bounds_check(const Graph& g) {
    if (!g.connected()) throw NotConnected("section4_bounds_check requires a connected graph");
    Section4Report r;
    int n = g.order();
    r.edges = g.size();

    bool p2le4 = has_two_path(g) && p2_cycle_property(g, /*allow_triangles=*/true);
    r.p2le4_edges_2n4 = {p2le4, r.edges >= 2 * n - 4};

    bool quad = quadrangular_check(g);
    bool is_k1 = n == 1;
    bool is_k4 = n == 4 && r.edges == 6;
    bool nonbip_quad = quad && !g.is_bipartite() && !is_k1 && !is_k4;
    r.nonbip_quad_edges_2n1 = {nonbip_quad, r.edges >= 2 * n - 1};

    bool comborth = pattern_allows_comb_orth(g);
    r.comborth_edges_3n2 = {comborth, 2 * r.edges >= 3 * n - 4};
    return r;
}

}  // namespace q2
