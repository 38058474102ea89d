#ifndef MATCHMINOR_GRAPH_HPP
#define MATCHMINOR_GRAPH_HPP

// Plain undirected graphs and simple digraphs.

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bigraph.hpp"

namespace mm {

class Graph {
   public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
        for (auto [u, v] : edges) {
            if (u == v) throw std::invalid_argument("loop");
            if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("vertex id out of range");
            edges_.push_back({std::min(u, v), std::max(u, v)});
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        adj_.assign(n, {});
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& l : adj_) std::sort(l.begin(), l.end());
    }
    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& adj(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const {
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

   private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

inline Graph to_graph(const BipartiteGraph& b) {
    std::vector<std::pair<int, int>> es;
    for (const auto& e : b.edges()) es.push_back({e.a, e.b});
    return Graph(b.n(), std::move(es));
}

using Arc = std::pair<int, int>;

class Digraph {
   public:
    Digraph() = default;
    Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
        for (auto [u, v] : arcs_) {
            if (u == v) throw std::invalid_argument("loop");
            if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("vertex id out of range");
        }
        std::sort(arcs_.begin(), arcs_.end());
        if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end())
            throw std::invalid_argument("parallel arc");
        out_.assign(n, {});
        in_.assign(n, {});
        for (auto [u, v] : arcs_) {
            out_[u].push_back(v);
            in_[v].push_back(u);
        }
        for (auto& l : in_) std::sort(l.begin(), l.end());
    }
    // Builds a digraph dropping loops and duplicate arcs.
    static Digraph simplified(int n, std::vector<Arc> arcs) {
        std::vector<Arc> keep;
        for (auto a : arcs)
            if (a.first != a.second) keep.push_back(a);
        std::sort(keep.begin(), keep.end());
        keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
        return Digraph(n, std::move(keep));
    }
    int n() const { return n_; }
    int m() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<int>& out(int v) const { return out_[v]; }
    const std::vector<int>& in(int v) const { return in_[v]; }
    bool has_arc(int u, int v) const { return std::binary_search(out_[u].begin(), out_[u].end(), v); }

   private:
    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_, in_;
};

// Strongly connected components of the subdigraph induced by alive vertices.
// comp[v] = -1 for dead vertices; components are numbered in reverse topological order.
inline int strong_components(const Digraph& d, const std::vector<char>& alive, std::vector<int>& comp) {
    const int n = d.n();
    comp.assign(n, -1);
    std::vector<int> idx(n, -1), low(n, 0), st;
    std::vector<char> on(n, 0);
    int counter = 0, ncomp = 0;
    auto ok = [&](int v) { return alive.empty() || alive[v]; };
    // iterative Tarjan
    std::vector<std::pair<int, size_t>> call;
    for (int s = 0; s < n; ++s) {
        if (!ok(s) || idx[s] >= 0) continue;
        call.push_back({s, 0});
        idx[s] = low[s] = counter++;
        st.push_back(s);
        on[s] = 1;
        while (!call.empty()) {
            auto& [v, i] = call.back();
            if (i < d.out(v).size()) {
                int w = d.out(v)[i++];
                if (!ok(w)) continue;
                if (idx[w] < 0) {
                    idx[w] = low[w] = counter++;
                    st.push_back(w);
                    on[w] = 1;
                    call.push_back({w, 0});
                } else if (on[w]) {
                    low[v] = std::min(low[v], idx[w]);
                }
            } else {
                int vv = v;
                if (low[vv] == idx[vv]) {
                    while (true) {
                        int w = st.back();
                        st.pop_back();
                        on[w] = 0;
                        comp[w] = ncomp;
                        if (w == vv) break;
                    }
                    ++ncomp;
                }
                call.pop_back();
                if (!call.empty()) {
                    int p = call.back().first;
                    low[p] = std::min(low[p], low[vv]);
                }
            }
        }
    }
    return ncomp;
}

inline bool is_strongly_connected(const Digraph& d) {
    if (d.n() == 0) return true;
    std::vector<int> comp;
    return strong_components(d, {}, comp) == 1;
}

inline bool is_acyclic(const Digraph& d) {
    std::vector<int> comp;
    return strong_components(d, {}, comp) == d.n();
}

// Vertices reachable from the sources inside alive vertices.
inline std::vector<char> reachable(const Digraph& d, const std::vector<int>& sources, const std::vector<char>& alive,
                                   bool reverse = false) {
    std::vector<char> seen(d.n(), 0);
    std::vector<int> st;
    for (int s : sources)
        if ((alive.empty() || alive[s]) && !seen[s]) {
            seen[s] = 1;
            st.push_back(s);
        }
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int w : reverse ? d.in(v) : d.out(v))
            if ((alive.empty() || alive[w]) && !seen[w]) {
                seen[w] = 1;
                st.push_back(w);
            }
    }
    return seen;
}

inline Digraph biorientation(const Graph& g) {
    std::vector<Arc> arcs;
    for (auto [u, v] : g.edges()) {
        arcs.push_back({u, v});
        arcs.push_back({v, u});
    }
    return Digraph(g.n(), std::move(arcs));
}

inline Digraph induced_subdigraph(const Digraph& d, const std::vector<char>& keep, std::vector<int>* old_to_new = nullptr) {
    std::vector<int> map(d.n(), -1);
    int k = 0;
    for (int v = 0; v < d.n(); ++v)
        if (keep[v]) map[v] = k++;
    std::vector<Arc> arcs;
    for (auto [u, v] : d.arcs())
        if (keep[u] && keep[v]) arcs.push_back({map[u], map[v]});
    if (old_to_new) *old_to_new = map;
    return Digraph(k, std::move(arcs));
}

inline Digraph random_digraph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && coin(rng)) arcs.push_back({u, v});
    return Digraph(n, arcs);
}

}  // namespace mm

#endif
