#ifndef MATCHMINOR_DECOMP_HPP
#define MATCHMINOR_DECOMP_HPP

// Leaf-tree decompositions (perfect matching width, cycle width), directed
// tree-decompositions, the cops and robber game and the conversion from a
// prepared directed decomposition to a nice perfect matching decomposition.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <stdexcept>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "bigraph.hpp"
#include "direction.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "porosity.hpp"

namespace mm {

// Cubic tree with a bijection from its leaves onto the vertices of a graph.
// A rooted decomposition may have a root of degree two, which stands for the
// subdivision of the tree edge joining its two neighbours.
struct PMDecomposition {
    std::vector<std::vector<int>> adj;
    std::vector<int> vertex;  // vertex[t] for leaves, -1 for internal nodes
    int root = -1;

    int size() const { return static_cast<int>(adj.size()); }
    int add_node(int v = -1) {
        adj.emplace_back();
        vertex.push_back(v);
        return size() - 1;
    }
    void link(int s, int t) {
        adj[s].push_back(t);
        adj[t].push_back(s);
    }
};

using CycleDecomposition = PMDecomposition;

// Empty string when dec is a valid decomposition for a graph on n vertices.
inline std::string leaf_tree_problem(const PMDecomposition& dec, int n) {
    const int t = dec.size();
    if (static_cast<int>(dec.vertex.size()) != t) return "vertex map size mismatch";
    if (n == 0) return t == 0 ? "" : "decomposition of the empty graph must be empty";
    if (t == 0) return "empty tree";
    long long deg_sum = 0;
    for (int s = 0; s < t; ++s) {
        for (int u : dec.adj[s]) {
            if (u < 0 || u >= t || u == s) return "bad tree edge";
            if (std::count(dec.adj[u].begin(), dec.adj[u].end(), s) != 1) return "tree adjacency not symmetric";
        }
        deg_sum += static_cast<long long>(dec.adj[s].size());
    }
    if (deg_sum != 2LL * (t - 1)) return "not a tree";
    std::vector<char> seen(t, 0);
    std::vector<int> st{0};
    seen[0] = 1;
    int cnt = 1;
    while (!st.empty()) {
        int s = st.back();
        st.pop_back();
        for (int u : dec.adj[s])
            if (!seen[u]) {
                seen[u] = 1;
                ++cnt;
                st.push_back(u);
            }
    }
    if (cnt != t) return "tree is disconnected";
    std::vector<int> hit(n, 0);
    for (int s = 0; s < t; ++s) {
        int d = static_cast<int>(dec.adj[s].size());
        if (dec.vertex[s] >= 0) {
            if (dec.vertex[s] >= n) return "leaf mapped to unknown vertex";
            if (d > 1) return "mapped node is not a leaf";
            ++hit[dec.vertex[s]];
        } else if (!(d == 3 || (d == 2 && s == dec.root))) {
            return "internal node of degree " + std::to_string(d);
        }
    }
    for (int v = 0; v < n; ++v)
        if (hit[v] != 1) return "leaf map is not a bijection";
    return "";
}

inline void require_leaf_tree(const PMDecomposition& dec, int n) {
    auto p = leaf_tree_problem(dec, n);
    if (!p.empty()) throw Error(Errc::InvalidDecomposition, p);
}

// Rooted view: parent pointers and a preorder of the nodes.
struct RootedTree {
    int root = -1;
    std::vector<int> parent;
    std::vector<std::vector<int>> children;
    std::vector<int> order;  // preorder
};

inline RootedTree rooted(const PMDecomposition& dec) {
    RootedTree r;
    const int t = dec.size();
    r.root = dec.root >= 0 ? dec.root : 0;
    r.parent.assign(t, -1);
    r.children.assign(t, {});
    if (t == 0) return r;
    std::vector<int> st{r.root};
    std::vector<char> seen(t, 0);
    seen[r.root] = 1;
    while (!st.empty()) {
        int s = st.back();
        st.pop_back();
        r.order.push_back(s);
        for (int u : dec.adj[s])
            if (!seen[u]) {
                seen[u] = 1;
                r.parent[u] = s;
                r.children[s].push_back(u);
                st.push_back(u);
            }
    }
    return r;
}

// Caterpillar over the vertices in the given order, rooted at its spine end.
inline PMDecomposition caterpillar(const std::vector<int>& order) {
    PMDecomposition dec;
    if (order.empty()) return dec;
    if (order.size() == 1) {
        dec.root = dec.add_node(order[0]);
        return dec;
    }
    int spine = dec.add_node();
    dec.root = spine;
    dec.link(spine, dec.add_node(order[0]));
    for (std::size_t i = 1; i + 1 < order.size(); ++i) {
        int next = dec.add_node();
        dec.link(spine, next);
        dec.link(next, dec.add_node(order[i]));
        spine = next;
    }
    dec.link(spine, dec.add_node(order.back()));
    return dec;
}

// Graph vertices below every node of the rooted view.
inline std::vector<VertexSet> subtree_vertices(const PMDecomposition& dec, const RootedTree& r) {
    std::vector<VertexSet> below(dec.size());
    for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
        int s = *it;
        if (dec.vertex[s] >= 0) below[s].push_back(dec.vertex[s]);
        for (int c : r.children[s]) below[s].insert(below[s].end(), below[c].begin(), below[c].end());
        std::sort(below[s].begin(), below[s].end());
    }
    return below;
}

// One shore per tree edge (the side away from the root).
inline std::vector<VertexSet> edge_shores(const PMDecomposition& dec) {
    auto r = rooted(dec);
    auto below = subtree_vertices(dec, r);
    std::vector<VertexSet> out;
    for (int s : r.order)
        if (r.parent[s] >= 0) out.push_back(below[s]);
    return out;
}

inline int pmd_width(const BipartiteGraph& b, const PMDecomposition& dec) {
    require_leaf_tree(dec, b.n());
    if (!has_perfect_matching(b)) throw Error(Errc::NoPerfectMatching, "graph has no perfect matching");
    int w = 0;
    for (const auto& x : edge_shores(dec)) w = std::max(w, matching_porosity(b, x));
    return w;
}

inline int cycd_width(const Digraph& d, const CycleDecomposition& dec) {
    require_leaf_tree(dec, d.n());
    int w = 0;
    for (const auto& x : edge_shores(dec)) w = std::max(w, cycle_porosity(d, x));
    return w / 2;
}

namespace detail {

// Optimal leaf tree for a symmetric cut function f over subsets of [0,n).
inline std::pair<int, PMDecomposition> optimal_leaf_tree(int n, const std::vector<int>& f) {
    PMDecomposition dec;
    if (n == 0) return {0, dec};
    if (n == 1) {
        dec.add_node(0);
        return {0, dec};
    }
    const uint32_t full = (1u << n) - 1;
    std::vector<int> g(full + 1, 0);
    std::vector<uint32_t> split(full + 1, 0);
    std::vector<uint32_t> by_size(full);
    std::iota(by_size.begin(), by_size.end(), 1u);
    std::stable_sort(by_size.begin(), by_size.end(),
                     [](uint32_t a, uint32_t b) { return std::popcount(a) < std::popcount(b); });
    for (uint32_t s : by_size) {
        if (std::popcount(s) == 1) {
            g[s] = f[s];
            continue;
        }
        uint32_t low = s & (~s + 1);
        int best = 1 << 30;
        for (uint32_t a = (s - 1) & s; a; a = (a - 1) & s) {
            if (!(a & low)) continue;
            int v = std::max(g[a], g[s ^ a]);
            if (v < best) {
                best = v;
                split[s] = a;
            }
        }
        g[s] = std::max(best, f[s]);
    }
    int best = 1 << 30;
    uint32_t top = 0;
    for (uint32_t a = (full - 1) & full; a; a = (a - 1) & full) {
        if (!(a & 1u)) continue;
        int v = std::max(g[a], g[full ^ a]);
        if (v < best) {
            best = v;
            top = a;
        }
    }
    auto build = [&](auto&& self, uint32_t s) -> int {
        if (std::popcount(s) == 1) return dec.add_node(std::countr_zero(s));
        int x = self(self, split[s]);
        int y = self(self, s ^ split[s]);
        int t = dec.add_node();
        dec.link(t, x);
        dec.link(t, y);
        return t;
    };
    int x = build(build, top);
    int y = build(build, full ^ top);
    dec.link(x, y);
    return {best, dec};
}

inline VertexSet mask_to_set(uint32_t s) {
    VertexSet out;
    for (int v = 0; s; ++v, s >>= 1)
        if (s & 1u) out.push_back(v);
    return out;
}

}  // namespace detail

inline constexpr int kWidthOracleLimit = 10;

struct WidthResult {
    int width = 0;
    PMDecomposition dec;
};

// Exact perfect matching width by dynamic programming over vertex subsets.
inline WidthResult pmw_exact_small(const BipartiteGraph& b, int limit = kWidthOracleLimit) {
    if (b.n() > limit) throw Error(Errc::OracleLimitExceeded, "graph exceeds exact pmw limit");
    auto pms = enumerate_perfect_matchings(b);
    if (pms.empty()) throw Error(Errc::NoPerfectMatching, "graph has no perfect matching");
    const int n = b.n();
    std::vector<int> f(std::size_t{1} << n, 0);
    for (uint32_t s = 1; s < (1u << n); ++s)
        for (const auto& m : pms) {
            int c = 0;
            for (const auto& e : m) c += ((s >> e.a) & 1u) != ((s >> e.b) & 1u);
            f[s] = std::max(f[s], c);
        }
    auto [w, dec] = detail::optimal_leaf_tree(n, f);
    return {w, std::move(dec)};
}

// Exact cycle width, same subset DP with cycle porosity.
inline WidthResult cycw_exact_small(const Digraph& d, int limit = kWidthOracleLimit) {
    if (d.n() > limit) throw Error(Errc::OracleLimitExceeded, "digraph exceeds exact cycle width limit");
    const int n = d.n();
    std::vector<int> f(std::size_t{1} << n, 0);
    for (uint32_t s = 1; s + 1 < (1u << n); ++s) f[s] = cycle_porosity(d, detail::mask_to_set(s));
    auto [w, dec] = detail::optimal_leaf_tree(n, f);
    return {w / 2, std::move(dec)};
}

// ---------------------------------------------------------------------------
// Directed tree-decompositions

struct DirectedTreeDecomposition {
    std::vector<int> parent;         // parent[root] = -1
    std::vector<VertexSet> bag;      // beta
    std::vector<VertexSet> guard;    // guard[t] = gamma(parent(t), t); empty at the root
    int root = 0;

    int size() const { return static_cast<int>(parent.size()); }
    int add_node(int p, VertexSet b, VertexSet g) {
        parent.push_back(p);
        std::sort(b.begin(), b.end());
        std::sort(g.begin(), g.end());
        bag.push_back(std::move(b));
        guard.push_back(std::move(g));
        return size() - 1;
    }
    std::vector<std::vector<int>> children() const {
        std::vector<std::vector<int>> ch(size());
        for (int t = 0; t < size(); ++t)
            if (parent[t] >= 0) ch[parent[t]].push_back(t);
        return ch;
    }
};

struct DtdCheck {
    bool valid = false;
    int width = -1;
    std::string reason;
};

namespace detail {

// Preorder of the arborescence, empty if parent pointers do not form one rooted at dec.root.
inline std::vector<int> dtd_preorder(const DirectedTreeDecomposition& dec) {
    const int t = dec.size();
    if (t == 0 || dec.root < 0 || dec.root >= t || dec.parent[dec.root] != -1) return {};
    auto ch = dec.children();
    std::vector<int> order, st{dec.root};
    while (!st.empty()) {
        int s = st.back();
        st.pop_back();
        order.push_back(s);
        for (int c : ch[s]) st.push_back(c);
    }
    if (static_cast<int>(order.size()) != t) return {};
    return order;
}

inline std::vector<VertexSet> dtd_subtree_bags(const DirectedTreeDecomposition& dec, const std::vector<int>& order) {
    std::vector<VertexSet> below(dec.size());
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int s = *it;
        below[s].insert(below[s].end(), dec.bag[s].begin(), dec.bag[s].end());
        if (dec.parent[s] >= 0) {
            auto& p = below[dec.parent[s]];
            p.insert(p.end(), below[s].begin(), below[s].end());
        }
    }
    for (auto& b : below) std::sort(b.begin(), b.end());
    return below;
}

// Does guard strongly guard z: no vertex outside z is both reachable from
// z - guard and able to reach z - guard in D - guard.
inline bool strongly_guards(const Digraph& d, const VertexSet& z, const VertexSet& guard) {
    std::vector<char> alive(d.n(), 1);
    for (int v : guard) alive[v] = 0;
    VertexSet src;
    for (int v : z)
        if (alive[v]) src.push_back(v);
    auto fw = reachable(d, src, alive, false);
    auto bw = reachable(d, src, alive, true);
    auto in = to_mask(d.n(), z);
    for (int v = 0; v < d.n(); ++v)
        if (!in[v] && fw[v] && bw[v]) return false;
    return true;
}

}  // namespace detail

// Checks the directed tree-decomposition axioms. With proto set, empty bags are allowed.
inline DtdCheck validate_dtd(const Digraph& d, const DirectedTreeDecomposition& dec, bool proto = false) {
    DtdCheck r;
    const int t = dec.size();
    if (static_cast<int>(dec.bag.size()) != t || static_cast<int>(dec.guard.size()) != t) {
        r.reason = "field size mismatch";
        return r;
    }
    if (d.n() == 0 && t == 0) {
        r.valid = true;
        r.width = 0;
        return r;
    }
    auto order = detail::dtd_preorder(dec);
    if (order.empty()) {
        r.reason = "parent pointers do not form an arborescence";
        return r;
    }
    std::vector<int> hit(d.n(), 0);
    for (int s = 0; s < t; ++s) {
        if (dec.bag[s].empty() && !proto) {
            r.reason = "empty bag";
            return r;
        }
        for (int v : dec.bag[s]) {
            if (v < 0 || v >= d.n()) {
                r.reason = "bag vertex out of range";
                return r;
            }
            ++hit[v];
        }
        for (int v : dec.guard[s])
            if (v < 0 || v >= d.n()) {
                r.reason = "guard vertex out of range";
                return r;
            }
    }
    for (int v = 0; v < d.n(); ++v)
        if (hit[v] != 1) {
            r.reason = "bags do not partition the vertex set";
            return r;
        }
    auto below = detail::dtd_subtree_bags(dec, order);
    for (int s = 0; s < t; ++s) {
        if (s == dec.root) continue;
        if (!detail::strongly_guards(d, below[s], dec.guard[s])) {
            r.reason = "guard of node " + std::to_string(s) + " does not strongly guard its subtree";
            return r;
        }
    }
    auto ch = dec.children();
    int w = 0;
    for (int s = 0; s < t; ++s) {
        std::vector<char> in(d.n(), 0);
        for (int v : dec.bag[s]) in[v] = 1;
        if (s != dec.root)
            for (int v : dec.guard[s]) in[v] = 1;
        for (int c : ch[s])
            for (int v : dec.guard[c]) in[v] = 1;
        w = std::max(w, static_cast<int>(std::count(in.begin(), in.end(), 1)));
    }
    r.valid = true;
    r.width = w - 1;
    return r;
}

// Every subtree below a tree arc is a strong component of D minus its guard,
// and the guard avoids it.
inline bool is_nice_dtd(const Digraph& d, const DirectedTreeDecomposition& dec) {
    auto order = detail::dtd_preorder(dec);
    if (order.empty()) return d.n() == 0;
    auto below = detail::dtd_subtree_bags(dec, order);
    for (int s = 0; s < dec.size(); ++s) {
        if (s == dec.root) continue;
        if (below[s].empty()) return false;
        auto in = to_mask(d.n(), below[s]);
        std::vector<char> alive(d.n(), 1);
        for (int v : dec.guard[s]) {
            if (in[v]) return false;
            alive[v] = 0;
        }
        std::vector<int> comp;
        strong_components(d, alive, comp);
        int c = comp[below[s][0]];
        for (int v = 0; v < d.n(); ++v)
            if ((comp[v] == c) != static_cast<bool>(in[v])) return false;
    }
    return true;
}

namespace detail {

// Digraph on at most 32 vertices with bitmask closures.
struct MaskDigraph {
    int n = 0;
    std::vector<uint32_t> out, in;

    explicit MaskDigraph(const Digraph& d) : n(d.n()), out(d.n(), 0), in(d.n(), 0) {
        for (auto [u, v] : d.arcs()) {
            out[u] |= 1u << v;
            in[v] |= 1u << u;
        }
    }
    uint32_t closure(uint32_t seed, uint32_t within, bool forward) const {
        uint32_t seen = seed & within, frontier = seen;
        const auto& nb = forward ? out : in;
        while (frontier) {
            uint32_t next = 0;
            for (uint32_t f = frontier; f; f &= f - 1) next |= nb[std::countr_zero(f)];
            next &= within & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen;
    }
    std::vector<uint32_t> components(uint32_t within) const {
        std::vector<uint32_t> out_c;
        for (uint32_t rest = within; rest;) {
            uint32_t v = rest & (~rest + 1);
            uint32_t c = closure(v, within, true) & closure(v, within, false);
            out_c.push_back(c);
            rest &= ~c;
        }
        return out_c;
    }
};

}  // namespace detail

inline constexpr int kDtwOracleLimit = 12;

// Minimum number of cops that catch the robber, by a fixed point over game
// positions (cop set, robber component).
inline int cop_number(const Digraph& d, int limit = kDtwOracleLimit) {
    if (d.n() > limit) throw Error(Errc::OracleLimitExceeded, "digraph exceeds cop game limit");
    const int n = d.n();
    if (n == 0) return 0;
    detail::MaskDigraph md(d);
    const uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::vector<std::vector<uint32_t>> comps(std::size_t{1} << n);
    for (uint32_t c = 0; c <= full; ++c) comps[c] = md.components(full & ~c);
    for (int k = 1; k <= n; ++k) {
        std::vector<uint32_t> pos;
        for (uint32_t c = 0; c <= full; ++c)
            if (std::popcount(c) <= k) pos.push_back(c);
        std::vector<std::vector<char>> win(std::size_t{1} << n);
        for (uint32_t c : pos) win[c].assign(comps[c].size(), 0);
        bool changed = true;
        while (changed) {
            changed = false;
            for (uint32_t c : pos)
                for (std::size_t ri = 0; ri < comps[c].size(); ++ri) {
                    if (win[c][ri]) continue;
                    uint32_t r = comps[c][ri];
                    for (uint32_t c2 : pos) {
                        uint32_t q = 0;
                        for (uint32_t x : comps[c & c2])
                            if (x & r) q = x;
                        bool ok = true;
                        for (std::size_t rj = 0; rj < comps[c2].size() && ok; ++rj) {
                            uint32_t r2 = comps[c2][rj];
                            if ((r2 & q) == r2 && !win[c2][rj]) ok = false;
                        }
                        if (ok) {
                            win[c][ri] = 1;
                            changed = true;
                            break;
                        }
                    }
                }
        }
        for (uint32_t c0 : pos) {
            bool all = true;
            for (std::size_t ri = 0; ri < comps[c0].size(); ++ri)
                if (!win[c0][ri]) all = false;
            if (all) return k;
        }
    }
    return n;
}

// Minimum-width decomposition among those produced by robber-monotone cop
// strategies: at a robber component R with relevant cops G, the cops add a
// set S of R; the new bag is S, and every strong component of R - S becomes a
// child guarded by the cops on closed walks through it.
inline DirectedTreeDecomposition dtd_exact_small(const Digraph& d, int limit = kDtwOracleLimit) {
    if (d.n() > limit) throw Error(Errc::OracleLimitExceeded, "digraph exceeds dtw oracle limit");
    DirectedTreeDecomposition dec;
    const int n = d.n();
    if (n == 0) return dec;
    detail::MaskDigraph md(d);
    const uint32_t full = (1u << n) - 1;
    struct Memo {
        int width;
        uint32_t bag;
    };
    std::unordered_map<uint64_t, Memo> memo;
    auto children_of = [&](uint32_t r, uint32_t g, uint32_t s) {
        std::vector<std::pair<uint32_t, uint32_t>> out;
        for (uint32_t c : md.components(r & ~s)) {
            uint32_t both = md.closure(c, full, true) & md.closure(c, full, false);
            out.push_back({c, (g | s) & both});
        }
        return out;
    };
    auto best = [&](auto&& self, uint32_t r, uint32_t g) -> int {
        uint64_t key = (static_cast<uint64_t>(r) << 32) | g;
        if (auto it = memo.find(key); it != memo.end()) return it->second.width;
        const int gs = std::popcount(g);
        int bw = std::popcount(r) + gs - 1;
        uint32_t bs = r;
        const int rs = std::popcount(r);
        for (int size = 1; size < rs && size + gs - 1 < bw; ++size)
            for (uint32_t s = r; s; s = (s - 1) & r) {
                if (std::popcount(s) != size || s == r) continue;
                int cur = size + gs - 1;
                for (auto [c, cg] : children_of(r, g, s)) {
                    cur = std::max(cur, self(self, c, cg));
                    if (cur >= bw) break;
                }
                if (cur < bw) {
                    bw = cur;
                    bs = s;
                }
            }
        memo[key] = {bw, bs};
        return bw;
    };
    best(best, full, 0);
    auto build = [&](auto&& self, int parent, uint32_t r, uint32_t g) -> void {
        best(best, r, g);
        uint32_t s = memo[(static_cast<uint64_t>(r) << 32) | g].bag;
        int t = dec.add_node(parent, detail::mask_to_set(s), detail::mask_to_set(g));
        for (auto [c, cg] : children_of(r, g, s)) self(self, t, c, cg);
    };
    build(build, -1, full, 0);
    dec.root = 0;
    return dec;
}

struct DtwResult {
    int cop_number = 0;
    DirectedTreeDecomposition dec;
    int width = 0;
};

inline DtwResult dtw_exact_small(const Digraph& d, int limit = kDtwOracleLimit) {
    DtwResult r;
    r.cop_number = cop_number(d, limit);
    r.dec = dtd_exact_small(d, limit);
    r.width = validate_dtd(d, r.dec).width;
    return r;
}

// ---------------------------------------------------------------------------
// Cops and robber along a cycle decomposition

struct CopRound {
    VertexSet cops;
    VertexSet robber;  // empty once caught
};

struct CopTranscript {
    std::vector<CopRound> rounds;
    bool captured = false;
    int max_cops = 0;
};

// Picks one of the offered robber components; options are never empty.
using RobberPolicy = std::function<std::size_t(const std::vector<VertexSet>&)>;

// Largest component, lowest vertex on ties.
inline std::size_t greedy_robber(const std::vector<VertexSet>& options) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < options.size(); ++i)
        if (options[i].size() > options[best].size() ||
            (options[i].size() == options[best].size() && options[i] < options[best]))
            best = i;
    return best;
}

// Plays the descending strategy: cops sit on hitting sets S_e of the tree edges
// around the node whose subtree still hosts the robber.
inline CopTranscript cops_play(const Digraph& d, const CycleDecomposition& dec,
                               const RobberPolicy& policy = greedy_robber) {
    require_leaf_tree(dec, d.n());
    CopTranscript tr;
    const int n = d.n();
    if (n == 0) {
        tr.captured = true;
        return tr;
    }
    const int t = dec.size();
    std::map<std::pair<int, int>, VertexSet> hs;
    // vertices at the leaves of the component of T - ab containing b
    auto shore_from = [&](int a, int b) {
        VertexSet out;
        std::vector<int> st{b};
        std::vector<char> seen(t, 0);
        seen[a] = seen[b] = 1;
        while (!st.empty()) {
            int s = st.back();
            st.pop_back();
            if (dec.vertex[s] >= 0) out.push_back(dec.vertex[s]);
            for (int u : dec.adj[s])
                if (!seen[u]) {
                    seen[u] = 1;
                    st.push_back(u);
                }
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    auto s_of = [&](int a, int b) -> VertexSet {
        auto key = std::minmax(a, b);
        auto it = hs.find(key);
        if (it == hs.end()) it = hs.emplace(key, directed_cycle_hitting_set(d, shore_from(a, b))).first;
        return it->second;
    };
    auto unite = [](std::initializer_list<VertexSet> parts) {
        VertexSet out;
        for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };
    auto comps_without = [&](const VertexSet& c) {
        std::vector<char> alive(n, 1);
        for (int v : c) alive[v] = 0;
        std::vector<int> comp;
        int k = strong_components(d, alive, comp);
        std::vector<VertexSet> out(k);
        for (int v = 0; v < n; ++v)
            if (comp[v] >= 0) out[comp[v]].push_back(v);
        return out;
    };
    VertexSet cops, robber;
    // one round; false once the robber is caught
    auto move = [&](const VertexSet& next) {
        // standing still gives the robber nothing new
        if (!tr.rounds.empty() && next == cops) return true;
        std::vector<VertexSet> options;
        if (tr.rounds.empty()) {
            options = comps_without(next);
        } else {
            VertexSet inter;
            std::set_intersection(cops.begin(), cops.end(), next.begin(), next.end(), std::back_inserter(inter));
            VertexSet q;
            for (auto& c : comps_without(inter))
                if (std::binary_search(c.begin(), c.end(), robber[0])) q = c;
            for (auto& c : comps_without(next))
                if (std::includes(q.begin(), q.end(), c.begin(), c.end())) options.push_back(c);
        }
        cops = next;
        tr.max_cops = std::max(tr.max_cops, static_cast<int>(cops.size()));
        if (options.empty()) {
            robber.clear();
            tr.rounds.push_back({cops, {}});
            tr.captured = true;
            return false;
        }
        robber = options[policy(options)];
        tr.rounds.push_back({cops, robber});
        return true;
    };
    auto hosts = [&](int a, int b) {
        auto x = shore_from(a, b);
        return std::includes(x.begin(), x.end(), robber.begin(), robber.end());
    };
    auto escaped = []() -> CopTranscript { throw std::logic_error("robber left the subtree she was confined to"); };

    int leaf = 0;
    while (dec.vertex[leaf] != 0) ++leaf;
    const int v = dec.vertex[leaf];
    if (!move({v})) return tr;
    int prev = leaf, cur = dec.adj[leaf][0];
    if (dec.vertex[cur] >= 0) {
        if (move(unite({{v}, {dec.vertex[cur]}}))) return escaped();
        return tr;
    }
    {
        VertexSet next{v};
        for (int o : dec.adj[cur])
            if (o != prev) next = unite({next, s_of(cur, o)});
        if (!move(next)) return tr;
        int r = -1;
        for (int o : dec.adj[cur])
            if (o != prev && hosts(cur, o)) r = o;
        if (r < 0) return escaped();
        if (!move(s_of(cur, r))) return tr;
        prev = cur;
        cur = r;
    }
    while (true) {
        if (dec.vertex[cur] >= 0) {
            if (move(unite({cops, {dec.vertex[cur]}}))) return escaped();
            return tr;
        }
        VertexSet next = s_of(prev, cur);
        for (int o : dec.adj[cur])
            if (o != prev) next = unite({next, s_of(cur, o)});
        if (!move(next)) return tr;
        int j = -1;
        for (int o : dec.adj[cur])
            if (o != prev && hosts(cur, o)) j = o;
        if (j < 0) return escaped();
        if (!move(s_of(cur, j))) return tr;
        prev = cur;
        cur = j;
    }
}


// ---------------------------------------------------------------------------
// Prepared proto-decompositions and nice perfect matching decompositions

namespace detail {

inline bool has_arc_between(const Digraph& d, const VertexSet& from, const VertexSet& to) {
    auto in = to_mask(d.n(), to);
    for (int u : from)
        for (int v : d.out(u))
            if (in[v]) return true;
    return false;
}

// D[z] is a strong component of D - guard and the guard avoids z.
inline bool is_guarded_component(const Digraph& d, const VertexSet& z, const VertexSet& guard) {
    if (z.empty()) return false;
    auto in = to_mask(d.n(), z);
    std::vector<char> alive(d.n(), 1);
    for (int v : guard) {
        if (in[v]) return false;
        alive[v] = 0;
    }
    std::vector<int> comp;
    strong_components(d, alive, comp);
    int c = comp[z[0]];
    for (int v = 0; v < d.n(); ++v)
        if ((comp[v] == c) != static_cast<bool>(in[v])) return false;
    return true;
}

// Children ordered so that no arc leads from a later subtree into an earlier one.
inline std::vector<int> order_children(const Digraph& d, std::vector<int> kids, const std::vector<VertexSet>& below) {
    std::sort(kids.begin(), kids.end(), [&](int x, int y) { return below[x] < below[y]; });
    const int k = static_cast<int>(kids.size());
    std::vector<std::vector<char>> arc(k, std::vector<char>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j) arc[i][j] = has_arc_between(d, below[kids[i]], below[kids[j]]);
    std::vector<int> out;
    std::vector<char> used(k, 0);
    for (int step = 0; step < k; ++step) {
        int pick = -1;
        for (int i = 0; i < k && pick < 0; ++i) {
            if (used[i]) continue;
            bool source = true;
            for (int j = 0; j < k; ++j)
                if (!used[j] && j != i && arc[j][i]) source = false;
            if (source) pick = i;
        }
        if (pick < 0) return {};
        used[pick] = 1;
        out.push_back(kids[pick]);
    }
    return out;
}

}  // namespace detail

// Splits every node with more than two children: the first child in arc order
// stays, the others move below a new empty-bag node guarded by gamma(d,t) and beta(t).
inline DirectedTreeDecomposition prepare_dtd(const Digraph& d, const DirectedTreeDecomposition& dec) {
    auto chk = validate_dtd(d, dec, true);
    if (!chk.valid) throw Error(Errc::InvalidDecomposition, chk.reason);
    if (!is_nice_dtd(d, dec)) throw Error(Errc::NotNice, "decomposition is not nice");
    DirectedTreeDecomposition out = dec;
    auto below = detail::dtd_subtree_bags(out, detail::dtd_preorder(out));
    for (int t = 0; t < out.size(); ++t) {
        auto kids = out.children()[t];
        if (kids.size() <= 2) continue;
        auto ord = detail::order_children(d, kids, below);
        if (ord.empty()) throw Error(Errc::NotNice, "children of a node cannot be ordered along the arcs");
        VertexSet g = t == out.root ? VertexSet{} : out.guard[t];
        g.insert(g.end(), out.bag[t].begin(), out.bag[t].end());
        int tp = out.add_node(t, {}, g);
        VertexSet sub;
        for (std::size_t i = 1; i < ord.size(); ++i) {
            out.parent[ord[i]] = tp;
            sub.insert(sub.end(), below[ord[i]].begin(), below[ord[i]].end());
        }
        std::sort(sub.begin(), sub.end());
        below.push_back(sub);
    }
    return out;
}

// Empty string when dec is a prepared proto-decomposition with at most two children per node.
inline std::string prepared_problem(const Digraph& d, const DirectedTreeDecomposition& dec) {
    auto chk = validate_dtd(d, dec, true);
    if (!chk.valid) return chk.reason;
    const int w = chk.width;
    auto below = detail::dtd_subtree_bags(dec, detail::dtd_preorder(dec));
    auto ch = dec.children();
    auto small = [&](int c) { return static_cast<int>(below[c].size()) <= w + 1; };
    auto strong = [&](int c) { return detail::is_guarded_component(d, below[c], dec.guard[c]); };
    for (int t = 0; t < dec.size(); ++t) {
        if (ch[t].size() > 2) return "node " + std::to_string(t) + " has more than two children";
        if (ch[t].size() == 1 && !strong(ch[t][0]) && !small(ch[t][0]))
            return "unique child of node " + std::to_string(t) + " is neither strong nor small";
        if (ch[t].size() == 2) {
            bool ok = false;
            for (int pass = 0; pass < 2 && !ok; ++pass) {
                int c1 = ch[t][pass], c2 = ch[t][1 - pass];
                if (small(c1) && (small(c2) || strong(c2))) ok = true;
                if (strong(c1) && !detail::has_arc_between(d, below[c2], below[c1])) ok = true;
            }
            if (!ok) return "children of node " + std::to_string(t) + " violate the prepared axioms";
        }
    }
    return "";
}

inline int max_bag_size(const DirectedTreeDecomposition& dec) {
    int w = 0;
    for (const auto& b : dec.bag) w = std::max(w, static_cast<int>(b.size()));
    return w;
}

// Builds the perfect matching decomposition of B + F from a prepared
// decomposition of its M-direction. A node with a non-empty bag gets a
// caterpillar over its bag: as the node itself at a leaf, as a new child when
// it has one child, and below a node subdividing its parent arc when it has
// two. Each digraph leaf finally splits into the ends of its matching edge.
inline PMDecomposition dtd_to_nice_pmd(const BipartiteGraph& b, const Matching& m, const std::vector<Edge>& f,
                                       const DirectedTreeDecomposition& dec) {
    auto md = m_direction(with_edges(b, f), m);
    const Digraph& d = md.digraph;
    auto p = prepared_problem(d, dec);
    if (!p.empty()) throw Error(Errc::NotPrepared, p);
    PMDecomposition out;
    if (d.n() == 0) return out;
    auto below = detail::dtd_subtree_bags(dec, detail::dtd_preorder(dec));
    auto ch = dec.children();
    auto pair_node = [&](int v) {
        int x = out.add_node();
        out.link(x, out.add_node(md.tag[v].a));
        out.link(x, out.add_node(md.tag[v].b));
        return x;
    };
    auto caterpillar = [&](const VertexSet& bag) {
        int x = pair_node(bag[0]);
        for (std::size_t i = 1; i < bag.size(); ++i) {
            int y = out.add_node();
            out.link(y, x);
            out.link(y, pair_node(bag[i]));
            x = y;
        }
        return x;
    };
    auto join = [&](int x, int y) {
        int z = out.add_node();
        out.link(z, x);
        out.link(z, y);
        return z;
    };
    auto build = [&](auto&& self, int t) -> int {
        std::vector<int> kids = ch[t];
        if (kids.size() == 2 && detail::has_arc_between(d, below[kids[1]], below[kids[0]])) std::swap(kids[0], kids[1]);
        int sub = dec.bag[t].empty() ? -1 : caterpillar(dec.bag[t]);
        if (kids.empty()) {
            if (sub < 0) throw Error(Errc::NotPrepared, "leaf with an empty bag");
            return sub;
        }
        std::vector<int> ids;
        for (int c : kids) ids.push_back(self(self, c));
        if (ids.size() == 1) return sub < 0 ? ids[0] : join(sub, ids[0]);
        int x = join(ids[0], ids[1]);
        return sub < 0 ? x : join(x, sub);
    };
    out.root = build(build, dec.root);
    return out;
}

// Empty string when the rooted decomposition satisfies the niceness axioms for
// width parameter w.
inline std::string nice_pmd_problem(const BipartiteGraph& b, const PMDecomposition& dec, int w) {
    auto p = leaf_tree_problem(dec, b.n());
    if (!p.empty()) return p;
    if (b.n() <= 2) return "";
    if (dec.root < 0) return "decomposition is not rooted";
    auto r = rooted(dec);
    auto below = subtree_vertices(dec, r);
    const int t = dec.size();
    auto leaf = [&](int s) { return r.children[s].empty(); };
    auto conformal = [&](int s) { return is_conformal(b, below[s]); };
    auto elementary = [&](int s) {
        return is_matching_covered(induced_subgraph(b, to_mask(b.n(), below[s])).graph);
    };
    // an edge with its V2 end in x and its V1 end in y
    auto edge_into = [&](int x, int y) {
        auto in_y = to_mask(b.n(), below[y]);
        for (int v : below[x])
            if (!b.in_v1(v))
                for (int u : b.adj(v))
                    if (in_y[u]) return true;
        return false;
    };
    auto join = [&](int s) {
        if (r.children[s].size() != 2) return false;
        int x = r.children[s][0], y = r.children[s][1];
        return (elementary(x) && !edge_into(x, y)) || (elementary(y) && !edge_into(y, x));
    };
    auto type1 = [&](int s) { return static_cast<int>(below[s].size()) <= 2 * w && conformal(s); };
    auto second = [&](int s) { return join(s) || (conformal(s) && elementary(s)); };
    auto type2 = [&](int s) {
        if (r.children[s].size() != 2) return false;
        int x = r.children[s][0], y = r.children[s][1];
        return (type1(x) && second(y)) || (type1(y) && second(x));
    };
    for (int s = 0; s < t; ++s) {
        if (s == r.root || leaf(s)) continue;
        bool basic = std::all_of(r.children[s].begin(), r.children[s].end(), leaf);
        if (!basic && !join(s) && !type1(s) && !type2(s))
            return "node " + std::to_string(s) + " is neither basic, join nor guard";
    }
    if (leaf(r.root)) return "";
    std::vector<int> sorted;
    for (int c : r.children[r.root]) {
        if (type1(c)) continue;
        if (!second(c)) return "root successor " + std::to_string(c) + " is neither a guard nor a join";
        sorted.push_back(c);
    }
    std::sort(sorted.begin(), sorted.end());
    do {
        bool ok = true;
        for (std::size_t i = 0; i < sorted.size() && ok; ++i)
            for (std::size_t j = i + 1; j < sorted.size() && ok; ++j)
                if (edge_into(sorted[i], sorted[j])) ok = false;
        if (ok) return "";
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return "root successors cannot be ordered";
}

struct PmdResult {
    PMDecomposition dec;
    int width = 0;
    Matching matching;
    DirectedTreeDecomposition dtd;  // prepared
    int dtd_width = 0;              // width of the decomposition before preparation
    int nice_w = 0;                 // width parameter for the niceness axioms
};

// Perfect matching decomposition via a directed tree-decomposition of an M-direction.
inline PmdResult compute_pmd(const BipartiteGraph& b, const DirectedTreeDecomposition* given = nullptr,
                             int limit = kDtwOracleLimit) {
    auto pm = perfect_matching(b);
    if (!pm) throw Error(Errc::NoPerfectMatching, "graph has no perfect matching");
    PmdResult r;
    r.matching = *pm;
    normalize(r.matching);
    if (b.n() == 0) return r;
    auto md = m_direction(b, r.matching);
    DirectedTreeDecomposition dtd;
    if (given) {
        auto chk = validate_dtd(md.digraph, *given);
        if (!chk.valid) throw Error(Errc::InvalidDecomposition, chk.reason);
        dtd = *given;
    } else {
        dtd = dtd_exact_small(md.digraph, limit);
    }
    r.dtd_width = validate_dtd(md.digraph, dtd).width;
    r.dtd = prepare_dtd(md.digraph, dtd);
    r.nice_w = std::max(1, max_bag_size(r.dtd));
    r.dec = dtd_to_nice_pmd(b, r.matching, {}, r.dtd);
    r.width = pmd_width(b, r.dec);
    return r;
}
}  // namespace mm

#endif
