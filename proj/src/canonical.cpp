#include "q2/canonical.hpp"

#include <algorithm>
#include <cstdint>

#include "q2/graph6.hpp"

namespace q2 {

namespace {

// Lexicographic compare of the trailing segment cur[from..len) against
// best[from..len); earlier bits are known equal.
int cmp_from(const std::vector<std::uint8_t>& cur, const std::vector<std::uint8_t>& best,
             std::size_t from, std::size_t len) {
    for (std::size_t i = from; i < len; ++i) {
        if (cur[i] != best[i]) return cur[i] < best[i] ? -1 : 1;
    }
    return 0;
}

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<int> cur, best;
    std::vector<std::uint8_t> cur_bits, best_bits;
    std::uint64_t used = 0;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {
        cur.reserve(n);
        cur_bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    }

    // Branch-and-bound over orderings; best is always the current minimum, so
    // every node compares its full prefix against it (the sizes here make the
    // O(len) compare cheap).
    void rec() {
        int j = static_cast<int>(cur.size());
        if (j == n) {
            if (best.empty() || cmp_from(cur_bits, best_bits, 0, cur_bits.size()) < 0) {
                best = cur;
                best_bits = cur_bits;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            std::size_t base = cur_bits.size();
            for (int p = 0; p < j; ++p)
                cur_bits.push_back(static_cast<std::uint8_t>(g.adjacent(cur[p], v)));
            if (best.empty() || cmp_from(cur_bits, best_bits, 0, cur_bits.size()) <= 0) {
                cur.push_back(v);
                used |= 1ULL << v;
                rec();
                used &= ~(1ULL << v);
                cur.pop_back();
            }
            cur_bits.resize(base);
        }
    }
};

}  // namespace

std::vector<int> canonical_ordering(const Graph& g) {
    if (g.order() == 0) return {};
    CanonSearch s(g);
    s.rec();
    return s.best;
}

Graph canonical_form(const Graph& g) {
    std::vector<int> order = canonical_ordering(g);
    // order[position] = old vertex; permuted() wants old vertex -> new label.
    std::vector<int> perm(g.order());
    for (int pos = 0; pos < g.order(); ++pos) perm[order[pos]] = pos;
    return g.permuted(perm);
}

std::string canonical_graph6(const Graph& g) { return graph6_encode(canonical_form(g)); }

namespace {

// Backtracking vertex mapper shared by isomorphism and spanning embedding.
// exact = pattern non-edges must map to host non-edges too.
std::optional<std::vector<int>> match(const Graph& host, const Graph& pattern, bool exact) {
    int n = pattern.order();
    if (host.order() != n) return std::nullopt;
    // Map high-degree pattern vertices first.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
    std::vector<int> map(n, -1);
    std::uint64_t used = 0;

    auto rec = [&](auto&& self, int idx) -> bool {
        if (idx == n) return true;
        int u = order[idx];
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            if (exact ? (host.degree(v) != pattern.degree(u))
                      : (host.degree(v) < pattern.degree(u)))
                continue;
            bool ok = true;
            for (int k = 0; k < idx && ok; ++k) {
                int w = order[k];
                bool pe = pattern.adjacent(u, w);
                bool he = host.adjacent(v, map[w]);
                if (pe && !he) ok = false;
                if (exact && !pe && he) ok = false;
            }
            if (!ok) continue;
            map[u] = v;
            used |= 1ULL << v;
            if (self(self, idx + 1)) return true;
            used &= ~(1ULL << v);
            map[u] = -1;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return map;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
    if (a.degree_sequence() != b.degree_sequence()) return std::nullopt;
    return match(b, a, /*exact=*/true);
}

bool is_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

std::optional<std::vector<int>> find_spanning_embedding(const Graph& host, const Graph& pattern) {
    if (host.order() != pattern.order() || host.size() < pattern.size()) return std::nullopt;
    return match(host, pattern, /*exact=*/false);
}

bool contains_spanning(const Graph& host, const Graph& pattern) {
    return find_spanning_embedding(host, pattern).has_value();
}

}  // namespace q2
