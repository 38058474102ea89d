#ifndef MATCHMINOR_BIGRAPH_HPP
#define MATCHMINOR_BIGRAPH_HPP

// Bipartite graphs, matchings, extendability and bicontraction.
// Vertex ids are 0-based: V1 = [0, n1), V2 = [n1, n1 + n2).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace mm {

using VertexSet = std::vector<int>;

// An edge with a in V1 and b in V2.
struct Edge {
    int a = -1;
    int b = -1;
    auto operator<=>(const Edge&) const = default;
};

using Matching = std::vector<Edge>;

inline void normalize(Matching& m) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
}

class BipartiteGraph {
   public:
    BipartiteGraph() = default;

    BipartiteGraph(int n1, int n2, std::vector<Edge> edges) : n1_(n1), n2_(n2), edges_(std::move(edges)) {
        if (n1 < 0 || n2 < 0) throw std::invalid_argument("negative colour class size");
        for (auto& e : edges_) {
            if (e.a > e.b) std::swap(e.a, e.b);
            if (e.a < 0 || e.a >= n1 || e.b < n1 || e.b >= n1 + n2)
                throw std::invalid_argument("edge does not join V1 to V2");
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw std::invalid_argument("parallel edge");
        adj_.assign(n(), {});
        for (const auto& e : edges_) {
            adj_[e.a].push_back(e.b);
            adj_[e.b].push_back(e.a);
        }
        for (auto& l : adj_) std::sort(l.begin(), l.end());
    }

    int n1() const { return n1_; }
    int n2() const { return n2_; }
    int n() const { return n1_ + n2_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& adj(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool in_v1(int v) const { return v < n1_; }
    int colour(int v) const { return v < n1_ ? 1 : 2; }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= n() || v >= n()) return false;
        const auto& l = adj_[u];
        return std::binary_search(l.begin(), l.end(), v);
    }
    static Edge make_edge(const BipartiteGraph& g, int u, int v) {
        return g.in_v1(u) ? Edge{u, v} : Edge{v, u};
    }
    Edge edge(int u, int v) const { return make_edge(*this, u, v); }
    int edge_index(const Edge& e) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e) return -1;
        return static_cast<int>(it - edges_.begin());
    }

   private:
    int n1_ = 0;
    int n2_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Incidence mask helpers for vertex subsets given as sorted id lists.
inline std::vector<char> to_mask(int n, const VertexSet& x) {
    std::vector<char> m(n, 0);
    for (int v : x) {
        if (v < 0 || v >= n) throw std::invalid_argument("vertex id out of range");
        m[v] = 1;
    }
    return m;
}

inline VertexSet complement(int n, const VertexSet& x) {
    auto m = to_mask(n, x);
    VertexSet out;
    for (int v = 0; v < n; ++v)
        if (!m[v]) out.push_back(v);
    return out;
}

inline bool is_matching(const BipartiteGraph& g, const Matching& f) {
    std::vector<char> used(g.n(), 0);
    for (const auto& e : f) {
        if (!g.has_edge(e.a, e.b)) return false;
        if (used[e.a] || used[e.b]) return false;
        used[e.a] = used[e.b] = 1;
    }
    return true;
}

inline bool is_perfect_matching(const BipartiteGraph& g, const Matching& f) {
    return is_matching(g, f) && 2 * static_cast<int>(f.size()) == g.n();
}

inline VertexSet matched_vertices(const Matching& f) {
    VertexSet v;
    for (const auto& e : f) {
        v.push_back(e.a);
        v.push_back(e.b);
    }
    std::sort(v.begin(), v.end());
    return v;
}

// mate[v] for a matching, -1 where exposed.
inline std::vector<int> mate_of(int n, const Matching& f) {
    std::vector<int> mate(n, -1);
    for (const auto& e : f) {
        mate[e.a] = e.b;
        mate[e.b] = e.a;
    }
    return mate;
}

namespace detail {

// Hopcroft-Karp on the subgraph avoiding removed vertices. Returns the mate array.
inline std::vector<int> hopcroft_karp(const BipartiteGraph& g, const std::vector<char>& removed, int& size) {
    const int n = g.n();
    const int inf = 1 << 29;
    std::vector<int> mate(n, -1), dist(g.n1(), inf);
    auto alive = [&](int v) { return removed.empty() || !removed[v]; };
    size = 0;
    while (true) {
        std::queue<int> q;
        for (int a = 0; a < g.n1(); ++a) {
            if (alive(a) && mate[a] < 0) {
                dist[a] = 0;
                q.push(a);
            } else {
                dist[a] = inf;
            }
        }
        bool found = false;
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            for (int b : g.adj(a)) {
                if (!alive(b)) continue;
                int a2 = mate[b];
                if (a2 < 0) {
                    found = true;
                } else if (dist[a2] == inf) {
                    dist[a2] = dist[a] + 1;
                    q.push(a2);
                }
            }
        }
        if (!found) break;
        std::vector<size_t> it(g.n1(), 0);
        auto dfs = [&](auto&& self, int a) -> bool {
            for (size_t& i = it[a]; i < g.adj(a).size(); ++i) {
                int b = g.adj(a)[i];
                if (!alive(b)) continue;
                int a2 = mate[b];
                if (a2 < 0 || (dist[a2] == dist[a] + 1 && self(self, a2))) {
                    mate[a] = b;
                    mate[b] = a;
                    return true;
                }
            }
            dist[a] = inf;
            return false;
        };
        for (int a = 0; a < g.n1(); ++a)
            if (alive(a) && mate[a] < 0 && dfs(dfs, a)) ++size;
    }
    return mate;
}

inline int alive_count(const BipartiteGraph& g, const std::vector<char>& removed, int colour) {
    int c = 0;
    int lo = colour == 1 ? 0 : g.n1(), hi = colour == 1 ? g.n1() : g.n();
    for (int v = lo; v < hi; ++v)
        if (removed.empty() || !removed[v]) ++c;
    return c;
}

inline bool has_pm_avoiding(const BipartiteGraph& g, const std::vector<char>& removed) {
    int c1 = alive_count(g, removed, 1), c2 = alive_count(g, removed, 2);
    if (c1 != c2) return false;
    int size = 0;
    hopcroft_karp(g, removed, size);
    return size == c1;
}

}  // namespace detail

inline int maximum_matching_size(const BipartiteGraph& g) {
    int size = 0;
    detail::hopcroft_karp(g, {}, size);
    return size;
}

inline std::optional<Matching> perfect_matching(const BipartiteGraph& g, const std::vector<char>& removed = {}) {
    if (!detail::has_pm_avoiding(g, removed)) return std::nullopt;
    int size = 0;
    auto mate = detail::hopcroft_karp(g, removed, size);
    Matching m;
    for (int a = 0; a < g.n1(); ++a)
        if (mate[a] >= 0) m.push_back({a, mate[a]});
    return m;
}

inline bool has_perfect_matching(const BipartiteGraph& g) { return detail::has_pm_avoiding(g, {}); }

inline bool is_conformal(const BipartiteGraph& g, const VertexSet& x) {
    return detail::has_pm_avoiding(g, to_mask(g.n(), x));
}

inline bool is_extendable(const BipartiteGraph& g, const Matching& f) {
    if (!is_matching(g, f)) throw Error(Errc::InvalidMatching, "F is not a matching of the graph");
    return detail::has_pm_avoiding(g, to_mask(g.n(), matched_vertices(f)));
}

inline constexpr int kDefaultOracleLimit = 24;

// All perfect matchings in lexicographic order of their sorted edge lists.
inline std::vector<Matching> enumerate_perfect_matchings(const BipartiteGraph& g, long long cap = 1'000'000,
                                                         int limit = kDefaultOracleLimit) {
    if (g.n() > limit) throw Error(Errc::OracleLimitExceeded, "graph exceeds enumeration limit");
    std::vector<Matching> out;
    if (g.n1() != g.n2()) return out;
    std::vector<char> removed(g.n(), 0);
    Matching cur;
    auto rec = [&](auto&& self, int a) -> void {
        if (a == g.n1()) {
            if (static_cast<long long>(out.size()) >= cap)
                throw Error(Errc::OracleLimitExceeded, "perfect matching count exceeds cap");
            out.push_back(cur);
            return;
        }
        removed[a] = 1;
        for (int b : g.adj(a)) {
            if (removed[b]) continue;
            removed[b] = 1;
            if (detail::has_pm_avoiding(g, removed)) {
                cur.push_back({a, b});
                self(self, a + 1);
                cur.pop_back();
            }
            removed[b] = 0;
        }
        removed[a] = 0;
    };
    if (has_perfect_matching(g)) rec(rec, 0);
    return out;
}

inline std::vector<Edge> admissible_edges(const BipartiteGraph& g) {
    std::vector<Edge> out;
    if (!has_perfect_matching(g)) return out;
    std::vector<char> removed(g.n(), 0);
    for (const auto& e : g.edges()) {
        removed[e.a] = removed[e.b] = 1;
        if (detail::has_pm_avoiding(g, removed)) out.push_back(e);
        removed[e.a] = removed[e.b] = 0;
    }
    return out;
}

inline bool is_connected(const BipartiteGraph& g) {
    if (g.n() == 0) return true;
    std::vector<char> seen(g.n(), 0);
    std::vector<int> st{0};
    seen[0] = 1;
    int cnt = 1;
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int w : g.adj(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                st.push_back(w);
            }
    }
    return cnt == g.n();
}

inline bool is_matching_covered(const BipartiteGraph& g) {
    if (g.n() == 0 || !is_connected(g)) return false;
    return static_cast<int>(admissible_edges(g).size()) == g.m() && has_perfect_matching(g);
}

// Subgraph induced on the kept vertices. old_to_new maps removed vertices to -1.
struct Induced {
    BipartiteGraph graph;
    std::vector<int> old_to_new;
    std::vector<int> new_to_old;
};

inline Induced induced_subgraph(const BipartiteGraph& g, const std::vector<char>& keep) {
    Induced r;
    r.old_to_new.assign(g.n(), -1);
    int n1 = 0, n2 = 0;
    for (int v = 0; v < g.n1(); ++v)
        if (keep[v]) {
            r.old_to_new[v] = n1++;
            r.new_to_old.push_back(v);
        }
    for (int v = g.n1(); v < g.n(); ++v)
        if (keep[v]) {
            r.old_to_new[v] = n1 + n2++;
            r.new_to_old.push_back(v);
        }
    std::vector<Edge> es;
    for (const auto& e : g.edges())
        if (keep[e.a] && keep[e.b]) es.push_back({r.old_to_new[e.a], r.old_to_new[e.b]});
    r.graph = BipartiteGraph(n1, n2, std::move(es));
    return r;
}

inline BipartiteGraph with_edges(const BipartiteGraph& g, const std::vector<Edge>& extra) {
    auto es = g.edges();
    for (const auto& e : extra)
        if (!g.has_edge(e.a, e.b)) es.push_back(e);
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return BipartiteGraph(g.n1(), g.n2(), std::move(es));
}

inline BipartiteGraph without_edges(const BipartiteGraph& g, const std::vector<Edge>& drop) {
    std::vector<Edge> es;
    for (const auto& e : g.edges())
        if (std::find(drop.begin(), drop.end(), e) == drop.end()) es.push_back(e);
    return BipartiteGraph(g.n1(), g.n2(), std::move(es));
}

struct Bicontraction {
    BipartiteGraph graph;
    std::vector<int> remap;  // old id -> new id; v maps to -1, both neighbours to the merged vertex
    int merged = -1;
};

inline Bicontraction bicontract(const BipartiteGraph& g, int v) {
    if (v < 0 || v >= g.n() || g.degree(v) != 2) throw Error(Errc::DegreeNotTwo, "bicontraction needs degree two");
    int v1 = g.adj(v)[0], v2 = g.adj(v)[1];
    Bicontraction r;
    r.remap.assign(g.n(), -1);
    bool nb_in_v1 = g.in_v1(v1);
    int n1 = 0, n2 = 0;
    for (int x = 0; x < g.n1(); ++x)
        if (x != v && x != v1 && x != v2) r.remap[x] = n1++;
    if (nb_in_v1) r.merged = n1++;
    for (int x = g.n1(); x < g.n(); ++x)
        if (x != v && x != v1 && x != v2) r.remap[x] = n1 + n2++;
    if (!nb_in_v1) r.merged = n1 + n2++;
    r.remap[v1] = r.remap[v2] = r.merged;
    std::vector<Edge> es;
    for (const auto& e : g.edges()) {
        if (e.a == v || e.b == v) continue;
        int x = r.remap[e.a], y = r.remap[e.b];
        es.push_back(x < y ? Edge{x, y} : Edge{y, x});
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    r.graph = BipartiteGraph(n1, n2, std::move(es));
    return r;
}

// Random graph with edge probability p; with planted_pm the diagonal
// {i, n1 + i} is always present, so a perfect matching exists.
inline BipartiteGraph random_bigraph(int n1, int n2, double p, std::mt19937_64& rng, bool planted_pm = false) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> es;
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v)
            if ((planted_pm && u == v) || coin(rng)) es.push_back({u, n1 + v});
    return BipartiteGraph(n1, n2, es);
}

}  // namespace mm

#endif
