#ifndef MATCHMINOR_MINORS_HPP
#define MATCHMINOR_MINORS_HPP

// Matching-minor models, containment oracles and the linkage-based check;
// butterfly minors, fundamental anti-chain membership and strong planarity.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "bigraph.hpp"
#include "decomp.hpp"
#include "direction.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "iso.hpp"
#include "linkage.hpp"
#include "porosity.hpp"

namespace mm {

struct MatchingMinorModel {
    std::vector<VertexSet> vertex_models;       // per H-vertex
    std::vector<std::vector<int>> edge_models;  // per H-edge in H.edges() order, a path of B
};

namespace detail {

// Spanning tree of B[s] in which every vertex not of colour c has degree two
// (so all leaves have colour c). Returns the tree edges.
inline std::optional<std::vector<Edge>> barycentric_tree(const BipartiteGraph& b, const VertexSet& s, int c) {
    VertexSet old_v, new_v;
    for (int v : s) (b.colour(v) == c ? old_v : new_v).push_back(v);
    if (old_v.size() != new_v.size() + 1) return std::nullopt;
    if (new_v.empty()) return std::vector<Edge>{};
    auto in_s = to_mask(b.n(), old_v);
    std::vector<std::vector<int>> opts(new_v.size());
    for (std::size_t i = 0; i < new_v.size(); ++i)
        for (int u : b.adj(new_v[i]))
            if (in_s[u]) opts[i].push_back(u);
    std::vector<int> order(new_v.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return opts[x].size() < opts[y].size(); });
    std::vector<int> comp(b.n(), -1);
    for (int v : old_v) comp[v] = v;
    std::vector<Edge> tree;
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == order.size()) return true;
        int w = new_v[order[i]];
        const auto& o = opts[order[i]];
        for (std::size_t x = 0; x < o.size(); ++x)
            for (std::size_t y = x + 1; y < o.size(); ++y) {
                int cx = comp[o[x]], cy = comp[o[y]];
                if (cx == cy) continue;
                auto saved = comp;
                for (int v : old_v)
                    if (comp[v] == cy) comp[v] = cx;
                tree.push_back(b.edge(w, o[x]));
                tree.push_back(b.edge(w, o[y]));
                if (rec(i + 1)) return true;
                tree.pop_back();
                tree.pop_back();
                comp = std::move(saved);
            }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return tree;
}

}  // namespace detail

// Empty string when mu is a valid model of H in B, otherwise the first
// violated condition.
inline std::string model_problem(const BipartiteGraph& b, const BipartiteGraph& h, const MatchingMinorModel& mu) {
    if (static_cast<int>(mu.vertex_models.size()) != h.n()) return "wrong number of vertex models";
    if (static_cast<int>(mu.edge_models.size()) != h.m()) return "wrong number of edge models";
    std::vector<int> owner(b.n(), -1);
    for (int u = 0; u < h.n(); ++u) {
        if (mu.vertex_models[u].empty()) return "empty vertex model";
        for (int v : mu.vertex_models[u]) {
            if (v < 0 || v >= b.n()) return "vertex model contains an unknown vertex";
            if (owner[v] >= 0) return "vertex models are not disjoint";
            owner[v] = u;
        }
    }
    std::vector<int> end_colour(h.n(), 0);
    std::vector<char> internal(b.n(), 0);
    for (int i = 0; i < h.m(); ++i) {
        const auto& p = mu.edge_models[i];
        if (p.size() < 2) return "edge model too short";
        if (p.size() % 2 != 0) return "edge model has even length";
        for (int v : p)
            if (v < 0 || v >= b.n()) return "edge model contains an unknown vertex";
        for (std::size_t j = 0; j + 1 < p.size(); ++j)
            if (!b.has_edge(p[j], p[j + 1])) return "edge model is not a path";
        auto u = h.edges()[i].a, w = h.edges()[i].b;
        int x = owner[p.front()], y = owner[p.back()];
        if (!((x == u && y == w) || (x == w && y == u))) return "edge model does not join its vertex models";
        for (std::size_t j = 1; j + 1 < p.size(); ++j) {
            if (owner[p[j]] >= 0) return "edge model passes through a vertex model";
            if (internal[p[j]]) return "edge models share an internal vertex";
            internal[p[j]] = 1;
        }
        for (int end : {p.front(), p.back()}) {
            int o = owner[end], c = b.colour(end);
            if (end_colour[o] != 0 && end_colour[o] != c) return "edge models end in both colours of a vertex model";
            end_colour[o] = c;
        }
    }
    std::vector<int> hdeg(h.n(), 0);
    for (const auto& e : h.edges()) ++hdeg[e.a], ++hdeg[e.b];
    for (int u = 0; u < h.n(); ++u) {
        const auto& s = mu.vertex_models[u];
        if (hdeg[u] == 1 && s.size() != 1) return "degree-one vertex with a non-trivial model";
        bool ok = false;
        for (int c : {1, 2})
            if ((end_colour[u] == 0 || end_colour[u] == c) && detail::barycentric_tree(b, s, c)) ok = true;
        if (!ok) return "vertex model has no barycentric spanning tree";
    }
    std::vector<char> removed(b.n(), 0);
    for (int v = 0; v < b.n(); ++v) removed[v] = owner[v] >= 0 || internal[v];
    if (!detail::has_pm_avoiding(b, removed)) return "complement of the model has no perfect matching";
    return "";
}

inline bool validate_model(const BipartiteGraph& b, const BipartiteGraph& h, const MatchingMinorModel& mu) {
    return model_problem(b, h, mu).empty();
}

// H-edges whose edge model starts and ends with an edge of M.
inline Matching residual_matching(const BipartiteGraph& b, const BipartiteGraph& h, const MatchingMinorModel& mu,
                                  const Matching& m) {
    auto why = model_problem(b, h, mu);
    if (!why.empty()) throw Error(Errc::ModelInvalid, why);
    std::vector<char> in_model(b.n(), 0);
    std::vector<int> owner(b.n(), -1);
    for (int u = 0; u < h.n(); ++u)
        for (int v : mu.vertex_models[u]) in_model[v] = 1, owner[v] = u;
    std::set<Edge> model_edges;
    for (const auto& e : b.edges())
        if (owner[e.a] >= 0 && owner[e.a] == owner[e.b]) model_edges.insert(e);
    for (const auto& p : mu.edge_models) {
        for (int v : p) in_model[v] = 1;
        for (std::size_t j = 0; j + 1 < p.size(); ++j) model_edges.insert(b.edge(p[j], p[j + 1]));
    }
    std::vector<int> cover(b.n(), 0);
    std::set<Edge> in_m;
    for (const auto& e : m)
        if (model_edges.count(e)) {
            ++cover[e.a], ++cover[e.b];
            in_m.insert(e);
        }
    for (int v = 0; v < b.n(); ++v)
        if (in_model[v] && cover[v] != 1) throw Error(Errc::InvalidMatching, "M is not a perfect matching of the model");
    Matching out;
    for (int i = 0; i < h.m(); ++i) {
        const auto& p = mu.edge_models[i];
        if (in_m.count(b.edge(p[0], p[1])) && in_m.count(b.edge(p[p.size() - 2], p.back())))
            out.push_back(h.edges()[i]);
    }
    if (!is_perfect_matching(h, out)) throw Error(Errc::ModelInvalid, "residual edges do not form a perfect matching");
    return out;
}

inline constexpr int kMinorOracleLimit = 14;

// Exhaustive matching-minor search with an isomorphism memo that can be
// reused across host graphs.
class MinorOracle {
   public:
    explicit MinorOracle(BipartiteGraph h, int limit = kMinorOracleLimit) : h_(std::move(h)), limit_(limit) {
        covered_ = h_.n() > 0 && is_matching_covered(h_);
        cert_ = cert(h_);
    }

    bool contains(const BipartiteGraph& b, MatchingMinorModel* witness = nullptr) {
        if (b.n() > limit_) throw Error(Errc::OracleLimitExceeded, "oracle handles at most 14 vertices");
        witness_ = witness;
        if (!has_perfect_matching(b)) return false;
        if (h_.n() == 0) {
            if (witness) *witness = {};
            return true;
        }
        State s;
        s.g = b;
        s.blob.resize(b.n());
        s.tree.resize(b.n());
        for (int v = 0; v < b.n(); ++v) s.blob[v] = {v};
        for (const auto& e : b.edges()) s.path.push_back({e.a, e.b});
        if (!covered_) return phase1(s);
        for (auto& c : normalize(s))
            if (phase1(c)) return true;
        return false;
    }

   private:
    struct State {
        BipartiteGraph g;
        std::vector<VertexSet> blob;               // host vertices per vertex
        std::vector<std::vector<Edge>> tree;       // host tree edges per vertex
        std::vector<std::vector<int>> path;        // host path per edge, from its V1 end
    };

    static std::vector<int> cert(const BipartiteGraph& g) {
        auto l = labelled(g);
        std::fill(l.colour.begin(), l.colour.end(), 0);
        return canonical_form(l).cert;
    }

    bool big_enough(const BipartiteGraph& g) const {
        if (g.n() < h_.n() || g.m() < h_.m()) return false;
        return !covered_ || g.m() - g.n() >= h_.m() - h_.n();
    }

    // Keeps the vertices in keep and the edges not in drop, relabelling.
    static State restrict(const State& s, const std::vector<char>& keep, const std::set<Edge>& drop) {
        auto ind = induced_subgraph(s.g, keep);
        State t;
        std::vector<std::pair<Edge, std::vector<int>>> es;
        for (int i = 0; i < s.g.m(); ++i) {
            const auto& e = s.g.edges()[i];
            if (!keep[e.a] || !keep[e.b] || drop.count(e)) continue;
            es.push_back({{ind.old_to_new[e.a], ind.old_to_new[e.b]}, s.path[i]});
        }
        std::sort(es.begin(), es.end());
        std::vector<Edge> edges;
        for (auto& [e, p] : es) {
            edges.push_back(e);
            t.path.push_back(std::move(p));
        }
        t.g = BipartiteGraph(ind.graph.n1(), ind.graph.n2(), std::move(edges));
        for (int v : ind.new_to_old) {
            t.blob.push_back(s.blob[v]);
            t.tree.push_back(s.tree[v]);
        }
        return t;
    }

    // Components of the admissible subgraph that are large enough.
    std::vector<State> normalize(const State& s) const {
        auto adm = admissible_edges(s.g);
        std::set<Edge> keep_e(adm.begin(), adm.end()), drop;
        for (const auto& e : s.g.edges())
            if (!keep_e.count(e)) drop.insert(e);
        std::vector<int> comp(s.g.n(), -1);
        int nc = 0;
        for (int v = 0; v < s.g.n(); ++v) {
            if (comp[v] >= 0) continue;
            std::vector<int> st{v};
            comp[v] = nc;
            while (!st.empty()) {
                int x = st.back();
                st.pop_back();
                for (int y : s.g.adj(x))
                    if (comp[y] < 0 && keep_e.count(s.g.edge(x, y))) {
                        comp[y] = nc;
                        st.push_back(y);
                    }
            }
            ++nc;
        }
        std::vector<State> out;
        for (int c = 0; c < nc; ++c) {
            std::vector<char> keep(s.g.n(), 0);
            for (int v = 0; v < s.g.n(); ++v) keep[v] = comp[v] == c;
            auto t = restrict(s, keep, drop);
            if (big_enough(t.g)) out.push_back(std::move(t));
        }
        return out;
    }

    bool matches_h(const State& s) {
        if (s.g.n() != h_.n() || s.g.m() != h_.m()) return false;
        auto ls = labelled(s.g);
        std::fill(ls.colour.begin(), ls.colour.end(), 0);
        auto cs = canonical_form(ls);
        if (cs.cert != cert_) return false;
        if (witness_) {
            auto lh = labelled(h_);
            std::fill(lh.colour.begin(), lh.colour.end(), 0);
            auto ch = canonical_form(lh);
            std::vector<int> phi(h_.n());
            for (int i = 0; i < h_.n(); ++i) phi[ch.order[i]] = cs.order[i];
            MatchingMinorModel mu;
            for (int u = 0; u < h_.n(); ++u) {
                auto blob = s.blob[phi[u]];
                std::sort(blob.begin(), blob.end());
                mu.vertex_models.push_back(blob);
            }
            for (const auto& e : h_.edges()) {
                Edge f = s.g.edge(phi[e.a], phi[e.b]);
                auto p = s.path[s.g.edge_index(f)];
                if (f.a != phi[e.a]) std::reverse(p.begin(), p.end());
                mu.edge_models.push_back(std::move(p));
            }
            *witness_ = std::move(mu);
        }
        return true;
    }

    static std::vector<int> tree_path(const std::vector<Edge>& tree, int from, int to) {
        if (from == to) return {from};
        std::map<int, std::vector<int>> adj;
        for (const auto& e : tree) {
            adj[e.a].push_back(e.b);
            adj[e.b].push_back(e.a);
        }
        std::map<int, int> prev{{from, from}};
        std::vector<int> q{from};
        for (std::size_t i = 0; i < q.size(); ++i)
            for (int y : adj[q[i]])
                if (!prev.count(y)) {
                    prev[y] = q[i];
                    q.push_back(y);
                }
        std::vector<int> p{to};
        while (p.back() != from) p.push_back(prev.at(p.back()));
        std::reverse(p.begin(), p.end());
        return p;
    }

    State contract(const State& s, int v) const {
        int x = s.g.adj(v)[0], y = s.g.adj(v)[1];
        auto oriented = [&](int from, int to) {
            auto p = s.path[s.g.edge_index(s.g.edge(from, to))];
            if (s.g.edge(from, to).a != from) std::reverse(p.begin(), p.end());
            return p;
        };
        auto px = oriented(x, v), py = oriented(v, y);
        auto mid = tree_path(s.tree[v], px.back(), py.front());
        std::vector<int> chain = px;
        chain.insert(chain.end(), mid.begin() + 1, mid.end());
        chain.insert(chain.end(), py.begin() + 1, py.end());
        std::vector<Edge> tree = s.tree[x];
        tree.insert(tree.end(), s.tree[y].begin(), s.tree[y].end());
        for (std::size_t j = 0; j + 1 < chain.size(); ++j)
            tree.push_back(chain[j] < chain[j + 1] ? Edge{chain[j], chain[j + 1]} : Edge{chain[j + 1], chain[j]});
        VertexSet blob = s.blob[x];
        blob.insert(blob.end(), s.blob[y].begin(), s.blob[y].end());
        for (std::size_t j = 1; j + 1 < chain.size(); ++j) blob.push_back(chain[j]);
        std::sort(blob.begin(), blob.end());
        blob.erase(std::unique(blob.begin(), blob.end()), blob.end());

        auto bc = bicontract(s.g, v);
        State t;
        t.g = bc.graph;
        t.blob.resize(t.g.n());
        t.tree.resize(t.g.n());
        for (int u = 0; u < s.g.n(); ++u)
            if (bc.remap[u] >= 0 && bc.remap[u] != bc.merged) {
                t.blob[bc.remap[u]] = s.blob[u];
                t.tree[bc.remap[u]] = s.tree[u];
            }
        t.blob[bc.merged] = std::move(blob);
        t.tree[bc.merged] = std::move(tree);
        t.path.assign(t.g.m(), {});
        std::vector<char> set(t.g.m(), 0);
        for (int i = 0; i < s.g.m(); ++i) {
            const auto& e = s.g.edges()[i];
            if (e.a == v || e.b == v) continue;
            int a = bc.remap[e.a], b2 = bc.remap[e.b];
            int id = t.g.edge_index(a < b2 ? Edge{a, b2} : Edge{b2, a});
            if (!set[id]) {
                set[id] = 1;
                t.path[id] = s.path[i];
            }
        }
        return t;
    }

    bool phase2(const State& s) {
        if (!big_enough(s.g)) return false;
        if (matches_h(s)) return true;
        if (s.g.n() == h_.n()) return false;
        auto c = cert(s.g);
        if (dead2_.count(c)) return false;
        for (int v = 0; v < s.g.n(); ++v)
            if (s.g.degree(v) == 2 && phase2(contract(s, v))) return true;
        dead2_.insert(c);
        return false;
    }

    bool phase1(const State& s) {
        if (!big_enough(s.g)) return false;
        auto c = cert(s.g);
        if (dead1_.count(c)) return false;
        if (!witness_ && alive_.count(c)) return true;
        bool found = phase2(s);
        for (int i = 0; i < s.g.m() && !found; ++i) {
            const auto& e = s.g.edges()[i];
            std::vector<char> all(s.g.n(), 1);
            auto t = restrict(s, all, {e});
            if (has_perfect_matching(t.g)) found = descend(t);
            if (found) break;
            all[e.a] = all[e.b] = 0;
            auto r = restrict(s, all, {});
            if (has_perfect_matching(r.g)) found = descend(r);
        }
        (found ? alive_ : dead1_).insert(c);
        return found;
    }

    bool descend(const State& t) {
        if (!covered_) return phase1(t);
        for (auto& c : normalize(t))
            if (phase1(c)) return true;
        return false;
    }

    BipartiteGraph h_;
    int limit_;
    bool covered_ = false;
    std::vector<int> cert_;
    MatchingMinorModel* witness_ = nullptr;
    std::set<std::vector<int>> dead1_, dead2_, alive_;
};

inline bool matching_minor_bruteforce(const BipartiteGraph& b, const BipartiteGraph& h,
                                      MatchingMinorModel* witness = nullptr) {
    MinorOracle o(h);
    return o.contains(b, witness);
}

namespace detail {

// Colour-preserving automorphisms of a small bipartite graph as vertex maps.
inline std::vector<std::vector<int>> automorphisms(const BipartiteGraph& h, int limit = 12) {
    std::vector<int> p(h.n());
    std::iota(p.begin(), p.end(), 0);
    if (h.n() > limit) return {p};
    std::vector<std::vector<int>> out;
    std::vector<int> a(p.begin(), p.begin() + h.n1()), b(p.begin() + h.n1(), p.end());
    std::sort(a.begin(), a.end());
    do {
        std::sort(b.begin(), b.end());
        do {
            std::vector<int> s(h.n());
            for (int i = 0; i < h.n1(); ++i) s[i] = a[i];
            for (int i = 0; i < h.n2(); ++i) s[h.n1() + i] = b[i];
            bool ok = true;
            for (const auto& e : h.edges())
                if (!h.has_edge(s[e.a], s[e.b])) {
                    ok = false;
                    break;
                }
            if (ok) out.push_back(std::move(s));
        } while (std::next_permutation(b.begin(), b.end()));
    } while (std::next_permutation(a.begin(), a.end()));
    return out;
}

inline BipartiteGraph swap_colours(const BipartiteGraph& h) {
    std::vector<Edge> es;
    auto f = [&](int v) { return v < h.n1() ? v + h.n2() : v - h.n1(); };
    for (const auto& e : h.edges()) es.push_back({f(e.b), f(e.a)});
    return BipartiteGraph(h.n2(), h.n1(), std::move(es));
}

// Role assignment for one M_H edge: a single host edge (contracted) or two
// disjoint host edges at its ends (split).
struct Role {
    bool split = false;
    Edge fu, fw;  // fu holds phi(u) (V1), fw holds phi(w) (V2); equal when contracted
    auto operator<=>(const Role&) const = default;
};

// Searches for single-vertex models of an H of maximum degree at most three
// inside a matching covered host c.
inline bool check_component(const BipartiteGraph& c, const BipartiteGraph& h, const PMDecomposition& dec,
                            MatchingMinorModel* witness) {
    auto autos = automorphisms(h);
    // perfect matchings of H up to automorphism
    std::vector<Matching> reps;
    {
        std::set<Matching> seen;
        for (auto m : enumerate_perfect_matchings(h)) {
            normalize(m);
            Matching best = m;
            for (const auto& s : autos) {
                Matching t;
                for (const auto& e : m) t.push_back({s[e.a], s[e.b]});
                normalize(t);
                best = std::min(best, t);
            }
            if (seen.insert(best).second) reps.push_back(best);
        }
    }
    std::vector<int> hdeg(h.n());
    for (int v = 0; v < h.n(); ++v) hdeg[v] = h.degree(v);
    for (const auto& mh : reps) {
        const int r = static_cast<int>(mh.size());
        std::vector<std::vector<int>> stab;  // automorphisms fixing M_H, acting on edge indices
        for (const auto& s : autos) {
            std::vector<int> act(r, -1);
            bool ok = true;
            for (int i = 0; i < r && ok; ++i) {
                Edge t{s[mh[i].a], s[mh[i].b]};
                auto it = std::find(mh.begin(), mh.end(), t);
                if (it == mh.end()) ok = false;
                else act[i] = static_cast<int>(it - mh.begin());
            }
            if (ok) stab.push_back(act);
        }
        std::vector<Edge> rest;
        for (const auto& e : h.edges())
            if (std::find(mh.begin(), mh.end(), e) == mh.end()) rest.push_back(e);
        std::vector<Role> roles(r);
        std::vector<char> used(c.n(), 0);
        Matching f;
        bool found = false;
        std::function<void(int)> rec = [&](int i) {
            if (found) return;
            if (i == r) {
                for (const auto& act : stab) {
                    std::vector<Role> img(r);
                    for (int j = 0; j < r; ++j) img[act[j]] = roles[j];
                    if (img < roles) return;
                }
                std::vector<int> phi(h.n());
                DappInstance inst;
                for (int j = 0; j < r; ++j) {
                    phi[mh[j].a] = roles[j].fu.a;
                    phi[mh[j].b] = roles[j].fw.b;
                }
                for (const auto& e : rest) inst.push_back({phi[e.a], phi[e.b]});
                for (int j = 0; j < r; ++j)
                    if (roles[j].split) inst.push_back({roles[j].fw.a, roles[j].fu.b});
                DappSolution sol;
                if (!dapp_solve_extending(c, inst, f, dec, witness ? &sol : nullptr)) return;
                found = true;
                if (witness) {
                    MatchingMinorModel mu;
                    for (int v = 0; v < h.n(); ++v) mu.vertex_models.push_back({phi[v]});
                    for (const auto& e : h.edges()) {
                        auto it = std::find(rest.begin(), rest.end(), e);
                        if (it != rest.end()) {
                            mu.edge_models.push_back(sol.paths[it - rest.begin()]);
                            continue;
                        }
                        int j = static_cast<int>(std::find(mh.begin(), mh.end(), e) - mh.begin());
                        if (!roles[j].split) {
                            mu.edge_models.push_back({phi[e.a], phi[e.b]});
                            continue;
                        }
                        // phi(u), then the path from y_u back to y_w reversed, then phi(w)
                        const auto& inner = sol.paths[rest.size() + std::count_if(roles.begin(), roles.begin() + j,
                                                                                  [](const Role& x) { return x.split; })];
                        std::vector<int> p{phi[e.a]};
                        p.insert(p.end(), inner.rbegin(), inner.rend());
                        p.push_back(phi[e.b]);
                        mu.edge_models.push_back(std::move(p));
                    }
                    *witness = std::move(mu);
                }
                return;
            }
            int u = mh[i].a, w = mh[i].b;
            auto try_role = [&](const Role& ro) {
                std::vector<Edge> add{ro.fu};
                if (ro.split) add.push_back(ro.fw);
                for (const auto& e : add) {
                    if (used[e.a] || used[e.b]) return;
                }
                if (ro.split && (ro.fu.a == ro.fw.a || ro.fu.b == ro.fw.b)) return;
                for (const auto& e : add) used[e.a] = used[e.b] = 1, f.push_back(e);
                roles[i] = ro;
                if (is_extendable(c, f)) rec(i + 1);
                for (std::size_t q = 0; q < add.size(); ++q) f.pop_back();
                for (const auto& e : add) used[e.a] = used[e.b] = 0;
            };
            for (const auto& e : c.edges()) {
                if (c.degree(e.a) < hdeg[u] || c.degree(e.b) < hdeg[w]) continue;
                try_role({false, e, e});
                if (found) return;
            }
            for (const auto& fu : c.edges()) {
                if (c.degree(fu.a) < hdeg[u]) continue;
                for (const auto& fw : c.edges()) {
                    if (c.degree(fw.b) < hdeg[w]) continue;
                    try_role({true, fu, fw});
                    if (found) return;
                }
            }
        };
        rec(0);
        if (found) return true;
    }
    return false;
}

}  // namespace detail

// Decides whether H is a matching minor of B. For H of maximum degree at most
// three the search guesses the matching-edge roles at the branch vertices and
// routes the remaining edges with the linkage dynamic program; otherwise it
// falls back to the exhaustive oracle.
inline bool matching_minor_check(const BipartiteGraph& b, const BipartiteGraph& h, const PMDecomposition& dec,
                                 MatchingMinorModel* witness = nullptr) {
    if (h.n() == 0) return has_perfect_matching(b);
    if (!is_matching_covered(h)) throw Error(Errc::NotMatchingCovered, "H must be matching covered");
    if (!has_perfect_matching(b)) return false;
    int maxdeg = 0;
    for (int v = 0; v < h.n(); ++v) maxdeg = std::max(maxdeg, h.degree(v));
    if (maxdeg > 3) return matching_minor_bruteforce(b, h, witness);
    auto adm = admissible_edges(b);
    std::set<Edge> adm_set(adm.begin(), adm.end());
    std::vector<int> comp(b.n(), -1);
    int nc = 0;
    for (int v = 0; v < b.n(); ++v) {
        if (comp[v] >= 0) continue;
        std::vector<int> st{v};
        comp[v] = nc;
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            for (int y : b.adj(x))
                if (comp[y] < 0 && adm_set.count(b.edge(x, y))) {
                    comp[y] = nc;
                    st.push_back(y);
                }
        }
        ++nc;
    }
    auto hs = detail::swap_colours(h);
    for (int ci = 0; ci < nc; ++ci) {
        std::vector<char> keep(b.n(), 0);
        for (int v = 0; v < b.n(); ++v) keep[v] = comp[v] == ci;
        auto ind = induced_subgraph(b, keep);
        std::vector<Edge> drop;
        for (const auto& e : ind.graph.edges())
            if (!adm_set.count({ind.new_to_old[e.a], ind.new_to_old[e.b]})) drop.push_back(e);
        auto c = without_edges(ind.graph, drop);
        if (c.n() < h.n() || c.m() < h.m()) continue;
        PMDecomposition cdec = (nc == 1 && drop.empty()) ? dec : compute_pmd(c).dec;
        const BipartiteGraph* orientations[] = {&h, &hs};
        for (const BipartiteGraph* hh : orientations) {
            MatchingMinorModel local;
            if (!detail::check_component(c, *hh, cdec, witness ? &local : nullptr)) continue;
            if (witness) {
                for (auto& s : local.vertex_models)
                    for (auto& v : s) v = ind.new_to_old[v];
                for (auto& p : local.edge_models)
                    for (auto& v : p) v = ind.new_to_old[v];
                if (hh == &hs) {
                    // translate back to the vertex and edge numbering of H
                    MatchingMinorModel back;
                    back.vertex_models.resize(h.n());
                    for (int v = 0; v < h.n(); ++v) {
                        int sv = v < h.n1() ? v + h.n2() : v - h.n1();
                        back.vertex_models[v] = local.vertex_models[sv];
                    }
                    for (const auto& e : h.edges()) {
                        Edge se{e.b - h.n1(), e.a + h.n2()};
                        back.edge_models.push_back(local.edge_models[hs.edge_index(se)]);
                    }
                    local = std::move(back);
                }
                *witness = std::move(local);
            }
            return true;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Butterfly minors.

inline Digraph butterfly_contract(const Digraph& d, Arc e) {
    auto [u, v] = e;
    if (u < 0 || v < 0 || u >= d.n() || v >= d.n() || !d.has_arc(u, v))
        throw Error(Errc::NotContractible, "arc does not exist");
    if (!(d.out(u).size() == 1 || d.in(v).size() == 1))
        throw Error(Errc::NotContractible, "arc is not butterfly contractible");
    auto id = [&](int x) {
        if (x == v) x = u;
        return x > v ? x - 1 : x;
    };
    std::vector<Arc> arcs;
    for (auto [a, b] : d.arcs()) arcs.push_back({id(a), id(b)});
    return Digraph::simplified(d.n() - 1, std::move(arcs));
}

inline Digraph delete_vertex(const Digraph& d, int v) {
    std::vector<Arc> arcs;
    for (auto [a, b] : d.arcs())
        if (a != v && b != v) arcs.push_back({a > v ? a - 1 : a, b > v ? b - 1 : b});
    return Digraph(d.n() - 1, std::move(arcs));
}

inline Digraph delete_arc(const Digraph& d, Arc e) {
    std::vector<Arc> arcs;
    for (auto a : d.arcs())
        if (a != e) arcs.push_back(a);
    return Digraph(d.n(), std::move(arcs));
}

// Every digraph one deletion or butterfly contraction away from d.
inline std::vector<Digraph> butterfly_children(const Digraph& d) {
    std::vector<Digraph> out;
    for (int v = 0; v < d.n(); ++v) out.push_back(delete_vertex(d, v));
    for (auto a : d.arcs()) {
        out.push_back(delete_arc(d, a));
        if (d.out(a.first).size() == 1 || d.in(a.second).size() == 1) out.push_back(butterfly_contract(d, a));
    }
    return out;
}

inline constexpr int kButterflyOracleLimit = 8;

inline bool butterfly_minor_bruteforce(const Digraph& d, const Digraph& h) {
    if (d.n() > kButterflyOracleLimit) throw Error(Errc::OracleLimitExceeded, "oracle handles at most 8 vertices");
    auto target = canonical_form(labelled(h)).cert;
    std::set<std::vector<int>> seen;
    std::function<bool(const Digraph&)> rec = [&](const Digraph& g) -> bool {
        if (g.n() < h.n() || g.m() < h.m()) return false;
        auto c = canonical_form(labelled(g)).cert;
        if (g.n() == h.n() && g.m() == h.m()) return c == target;
        if (!seen.insert(c).second) return false;
        for (const auto& x : butterfly_children(g))
            if (rec(x)) return true;
        return false;
    };
    return rec(d);
}

inline constexpr int kAntichainLimit = 7;

// J belongs to the fundamental anti-chain of D: Split(J) contains Split(D) as
// a matching minor and no proper butterfly minor of J does. Containment is
// inherited by butterfly minors, so one-step minors suffice.
inline bool antichain_member(const Digraph& j, const Digraph& d) {
    if (j.n() > kAntichainLimit || d.n() > kAntichainLimit)
        throw Error(Errc::OracleLimitExceeded, "anti-chain queries handle at most 7 vertices");
    auto sd = split(d).graph;
    MinorOracle oracle(sd);
    if (!oracle.contains(split(j).graph)) return false;
    for (const auto& x : butterfly_children(j))
        if (oracle.contains(split(x).graph)) return false;
    return true;
}

inline bool planarity_test(const Graph& g) {
    if (g.n() >= 3 && g.m() > 3 * g.n() - 6) return false;
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS> bg(g.n());
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

inline bool is_strongly_planar(const Digraph& d) { return planarity_test(to_graph(split(d).graph)); }

}  // namespace mm

#endif
