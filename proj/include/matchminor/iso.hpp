#ifndef MATCHMINOR_ISO_HPP
#define MATCHMINOR_ISO_HPP

// Canonical labelling of small vertex-coloured, arc-labelled digraphs by
// colour refinement plus individualisation with automorphism pruning.

#include <algorithm>
#include <map>
#include <vector>

#include "bigraph.hpp"
#include "graph.hpp"

namespace mm {

struct LabelledDigraph {
    int n = 0;
    std::vector<int> colour;            // vertex colours
    std::vector<std::vector<int>> lab;  // lab[u][v] != 0 iff arc u->v, value is its label

    explicit LabelledDigraph(int n_ = 0) : n(n_), colour(n_, 0), lab(n_, std::vector<int>(n_, 0)) {}
};

namespace detail {

using Cells = std::vector<std::vector<int>>;

inline Cells refine(const LabelledDigraph& g, Cells cells) {
    std::vector<int> cell_of(g.n);
    while (true) {
        for (size_t c = 0; c < cells.size(); ++c)
            for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
        Cells next;
        bool split = false;
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::vector<std::pair<std::vector<int>, int>> sig;
            for (int v : cell) {
                std::vector<int> s;
                for (int w = 0; w < g.n; ++w) {
                    if (g.lab[v][w]) s.push_back(cell_of[w] * 64 + g.lab[v][w]);
                    if (g.lab[w][v]) s.push_back(-(cell_of[w] * 64 + g.lab[w][v]) - 1);
                }
                std::sort(s.begin(), s.end());
                sig.push_back({std::move(s), v});
            }
            std::sort(sig.begin(), sig.end());
            size_t i = 0;
            while (i < sig.size()) {
                size_t j = i;
                std::vector<int> part;
                while (j < sig.size() && sig[j].first == sig[i].first) part.push_back(sig[j++].second);
                if (i != 0 || j != sig.size()) split = true;
                next.push_back(std::move(part));
                i = j;
            }
        }
        cells = std::move(next);
        if (!split) return cells;
    }
}

inline std::vector<int> certificate(const LabelledDigraph& g, const std::vector<int>& order) {
    std::vector<int> cert;
    cert.reserve(g.n + g.n * g.n);
    for (int v : order) cert.push_back(g.colour[v]);
    for (int u : order)
        for (int v : order) cert.push_back(g.lab[u][v]);
    return cert;
}

}  // namespace detail

struct CanonicalForm {
    std::vector<int> cert;   // comparable certificate
    std::vector<int> order;  // order[i] = vertex placed at canonical position i
};

inline CanonicalForm canonical_form(const LabelledDigraph& g) {
    using detail::Cells;
    std::map<int, std::vector<int>> by_colour;
    for (int v = 0; v < g.n; ++v) by_colour[g.colour[v]].push_back(v);
    Cells init;
    for (auto& [c, vs] : by_colour) init.push_back(vs);
    CanonicalForm best;
    bool have = false;
    std::vector<std::vector<int>> autos;  // automorphisms as vertex maps
    std::vector<int> prefix;

    auto leaf_order = [](const Cells& cells) {
        std::vector<int> o;
        for (const auto& c : cells) o.push_back(c[0]);
        return o;
    };
    auto rec = [&](auto&& self, Cells cells) -> void {
        cells = detail::refine(g, std::move(cells));
        size_t target = cells.size();
        for (size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                target = i;
                break;
            }
        if (target == cells.size()) {
            auto order = leaf_order(cells);
            auto cert = detail::certificate(g, order);
            if (!have || cert < best.cert) {
                best.cert = std::move(cert);
                best.order = std::move(order);
                have = true;
            } else if (cert == best.cert) {
                std::vector<int> a(g.n);
                for (int i = 0; i < g.n; ++i) a[best.order[i]] = order[i];
                autos.push_back(std::move(a));
            }
            return;
        }
        std::vector<int> tried;
        for (int v : cells[target]) {
            bool skip = false;
            for (const auto& a : autos) {
                bool fixes = true;
                for (int p : prefix)
                    if (a[p] != p) {
                        fixes = false;
                        break;
                    }
                if (!fixes) continue;
                for (int t : tried)
                    if (a[t] == v) {
                        skip = true;
                        break;
                    }
                if (skip) break;
            }
            if (skip) continue;
            tried.push_back(v);
            Cells next;
            for (size_t i = 0; i < cells.size(); ++i) {
                if (i == target) {
                    next.push_back({v});
                    std::vector<int> rest;
                    for (int w : cells[i])
                        if (w != v) rest.push_back(w);
                    next.push_back(rest);
                } else {
                    next.push_back(cells[i]);
                }
            }
            prefix.push_back(v);
            self(self, std::move(next));
            prefix.pop_back();
        }
    };
    if (g.n == 0) return best;
    rec(rec, init);
    return best;
}

inline LabelledDigraph labelled(const BipartiteGraph& b, const Matching* m = nullptr) {
    LabelledDigraph g(b.n());
    for (int v = 0; v < b.n(); ++v) g.colour[v] = b.colour(v);
    for (const auto& e : b.edges()) g.lab[e.a][e.b] = g.lab[e.b][e.a] = 1;
    if (m)
        for (const auto& e : *m) g.lab[e.a][e.b] = g.lab[e.b][e.a] = 2;
    return g;
}

inline LabelledDigraph labelled(const Digraph& d) {
    LabelledDigraph g(d.n());
    for (auto [u, v] : d.arcs()) g.lab[u][v] = 1;
    return g;
}

inline LabelledDigraph labelled(const Graph& h) {
    LabelledDigraph g(h.n());
    for (auto [u, v] : h.edges()) g.lab[u][v] = g.lab[v][u] = 1;
    return g;
}

inline bool isomorphic(const LabelledDigraph& a, const LabelledDigraph& b) {
    if (a.n != b.n) return false;
    return canonical_form(a).cert == canonical_form(b).cert;
}

// Colour-preserving isomorphism of bipartite graphs, optionally respecting matchings.
inline bool isomorphic(const BipartiteGraph& a, const Matching* ma, const BipartiteGraph& b, const Matching* mb) {
    return isomorphic(labelled(a, ma), labelled(b, mb));
}

inline bool isomorphic(const Digraph& a, const Digraph& b) { return isomorphic(labelled(a), labelled(b)); }

}  // namespace mm

#endif
