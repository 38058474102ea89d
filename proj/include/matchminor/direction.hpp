#ifndef MATCHMINOR_DIRECTION_HPP
#define MATCHMINOR_DIRECTION_HPP

// M-directions, splits and extendability via strong connectivity.

#include <algorithm>
#include <vector>

#include "bigraph.hpp"
#include "graph.hpp"

namespace mm {

struct MDirection {
    Digraph digraph;
    std::vector<Edge> tag;        // tag[i] = matching edge represented by vertex i
    std::vector<int> vertex_of;   // vertex_of[v] = digraph vertex containing bipartite vertex v
};

// Vertex i of the digraph is the i-th edge of M in sorted order. Arc (e,f) iff
// the V1 end of e is adjacent to the V2 end of f.
inline MDirection m_direction(const BipartiteGraph& b, Matching m) {
    normalize(m);
    if (!is_perfect_matching(b, m)) throw Error(Errc::NotPerfect, "M must be a perfect matching");
    MDirection r;
    r.tag = m;
    r.vertex_of.assign(b.n(), -1);
    for (int i = 0; i < static_cast<int>(m.size()); ++i) r.vertex_of[m[i].a] = r.vertex_of[m[i].b] = i;
    std::vector<Arc> arcs;
    for (const auto& g : b.edges()) {
        int e = r.vertex_of[g.a], f = r.vertex_of[g.b];
        if (e != f) arcs.push_back({e, f});
    }
    r.digraph = Digraph(static_cast<int>(m.size()), std::move(arcs));
    return r;
}

struct Split {
    BipartiteGraph graph;
    Matching matching;  // edge {i, n+i} for every digraph vertex i
};

inline Split split(const Digraph& d) {
    const int n = d.n();
    std::vector<Edge> es;
    Matching m;
    for (int i = 0; i < n; ++i) {
        es.push_back({i, n + i});
        m.push_back({i, n + i});
    }
    for (auto [u, v] : d.arcs()) es.push_back({u, n + v});
    return {BipartiteGraph(n, n, std::move(es)), std::move(m)};
}

namespace detail {

// Maximum number of internally disjoint s->t paths avoiding the direct arc s->t,
// capped at cap. Unit vertex capacities via split vertices.
inline int disjoint_paths(const Digraph& d, int s, int t, int cap) {
    const int n = d.n();
    // node 2v = in, 2v+1 = out
    struct E {
        int to, cap;
    };
    std::vector<E> es;
    std::vector<std::vector<int>> g(2 * n);
    auto add = [&](int u, int v, int c) {
        g[u].push_back(static_cast<int>(es.size()));
        es.push_back({v, c});
        g[v].push_back(static_cast<int>(es.size()));
        es.push_back({u, 0});
    };
    for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? cap : 1);
    for (auto [u, v] : d.arcs()) {
        if (u == s && v == t) continue;
        add(2 * u + 1, 2 * v, 1);
    }
    int flow = 0;
    int src = 2 * s + 1, snk = 2 * t;
    while (flow < cap) {
        std::vector<int> pe(2 * n, -1);
        std::vector<char> seen(2 * n, 0);
        std::vector<int> q{src};
        seen[src] = 1;
        for (size_t h = 0; h < q.size() && !seen[snk]; ++h) {
            int u = q[h];
            for (int id : g[u])
                if (es[id].cap > 0 && !seen[es[id].to]) {
                    seen[es[id].to] = 1;
                    pe[es[id].to] = id;
                    q.push_back(es[id].to);
                }
        }
        if (!seen[snk]) break;
        for (int v = snk; v != src; v = es[pe[v] ^ 1].to) {
            es[pe[v]].cap -= 1;
            es[pe[v] ^ 1].cap += 1;
        }
        ++flow;
    }
    return flow;
}

}  // namespace detail

// Strong k-connectivity: more than k vertices and, by Menger, k internally
// disjoint paths between every non-adjacent ordered pair.
inline bool is_strongly_k_connected(const Digraph& d, int k) {
    if (d.n() <= k) return false;
    for (int s = 0; s < d.n(); ++s)
        for (int t = 0; t < d.n(); ++t) {
            if (s == t || d.has_arc(s, t)) continue;
            if (detail::disjoint_paths(d, s, t, k) < k) return false;
        }
    return true;
}

inline bool is_k_extendable(const BipartiteGraph& b, const Matching& m, int k) {
    if (b.n() < 2 * k + 2 || !is_connected(b)) throw Error(Errc::TooSmall, "need a connected graph on at least 2k+2 vertices");
    return is_strongly_k_connected(m_direction(b, m).digraph, k);
}

// Brute force: every matching of size k extends to a perfect matching.
inline bool is_k_extendable_bruteforce(const BipartiteGraph& b, int k) {
    std::vector<Edge> cur;
    const auto& es = b.edges();
    auto rec = [&](auto&& self, size_t from) -> bool {
        if (static_cast<int>(cur.size()) == k) return is_extendable(b, cur);
        for (size_t i = from; i < es.size(); ++i) {
            bool clash = false;
            for (const auto& e : cur)
                if (e.a == es[i].a || e.b == es[i].b) clash = true;
            if (clash) continue;
            cur.push_back(es[i]);
            bool ok = self(self, i + 1);
            cur.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    return rec(rec, 0);
}

}  // namespace mm

#endif
