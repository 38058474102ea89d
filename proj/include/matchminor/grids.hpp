#ifndef MATCHMINOR_GRIDS_HPP
#define MATCHMINOR_GRIDS_HPP

// Cylindrical matching grids, their quadrangulations, explicit grid models,
// ear decompositions and the Erdős–Pósa gadget.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bigraph.hpp"
#include "direction.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "iso.hpp"
#include "minors.hpp"

namespace mm {

struct GridGraph {
    BipartiteGraph graph;
    Matching matching;
    std::vector<std::vector<int>> id;  // id[i][j] for ring i in [1,k], position j in [1,4k]
};

namespace detail {

inline std::vector<std::vector<int>> grid_ids(int k) {
    std::vector<std::vector<int>> id(k + 1, std::vector<int>(4 * k + 1, -1));
    int next = 0;
    for (int parity : {1, 0})
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= 4 * k; ++j)
                if (j % 2 == parity) id[i][j] = next++;
    return id;
}

// Position j modulo 4k into [1, 4k].
inline int wrap(int j, int len) { return ((j - 1) % len + len) % len + 1; }

}  // namespace detail

inline GridGraph cylindrical_grid(int k) {
    if (k < 1) throw Error(Errc::Usage, "order must be at least 1");
    GridGraph g;
    g.id = detail::grid_ids(k);
    const int len = 4 * k;
    auto v = [&](int i, int j) { return g.id[i][detail::wrap(j, len)]; };
    std::set<Edge> es;
    auto add = [&](int x, int y) { es.insert(x < y ? Edge{x, y} : Edge{y, x}); };
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= len; ++j) add(v(i, j), v(i, j + 1));
    for (int i = 1; i < k; ++i)
        for (int j = 1; j <= len; j += 4) add(v(i, j), v(i + 1, j + 1));
    for (int i = 2; i <= k; ++i)
        for (int j = 3; j <= len; j += 4) add(v(i, j), v(i - 1, j + 1));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= len; j += 2) g.matching.push_back({v(i, j), v(i, j + 1)});
    normalize(g.matching);
    g.graph = BipartiteGraph(2 * k * k, 2 * k * k, {es.begin(), es.end()});
    return g;
}

inline GridGraph quadrangulation(int k) {
    auto g = cylindrical_grid(k);
    auto es = g.graph.edges();
    const int len = 4 * k;
    for (int i = 1; i < k; ++i)
        for (int j = 2; j <= len; j += 2) {
            int x = g.id[i][j], y = g.id[i + 1][detail::wrap(j + 1, len)];
            es.push_back(x < y ? Edge{x, y} : Edge{y, x});
        }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    g.graph = BipartiteGraph(g.graph.n1(), g.graph.n2(), std::move(es));
    return g;
}

// r x c grid; (x, y) is row x, column y. Colour classes by parity of x + y.
inline BipartiteGraph square_grid(int r, int c, Matching* dominoes = nullptr,
                                  std::vector<std::vector<int>>* ids = nullptr) {
    if (r < 1 || c < 1 || (r * c) % 2 != 0) throw Error(Errc::OddVertexCount, "grid needs an even number of vertices");
    std::vector<std::vector<int>> id(r, std::vector<int>(c));
    int next = 0;
    for (int parity : {0, 1})
        for (int x = 0; x < r; ++x)
            for (int y = 0; y < c; ++y)
                if ((x + y) % 2 == parity) id[x][y] = next++;
    std::vector<Edge> es;
    auto add = [&](int p, int q) { es.push_back(p < q ? Edge{p, q} : Edge{q, p}); };
    for (int x = 0; x < r; ++x)
        for (int y = 0; y < c; ++y) {
            if (y + 1 < c) add(id[x][y], id[x][y + 1]);
            if (x + 1 < r) add(id[x][y], id[x + 1][y]);
        }
    if (dominoes) {
        dominoes->clear();
        for (int x = 0; x < r; ++x)
            for (int y = 0; y < c; ++y) {
                if (c % 2 == 0 && y % 2 == 0) {
                    int p = id[x][y], q = id[x][y + 1];
                    dominoes->push_back(p < q ? Edge{p, q} : Edge{q, p});
                } else if (c % 2 != 0 && x % 2 == 0) {
                    int p = id[x][y], q = id[x + 1][y];
                    dominoes->push_back(p < q ? Edge{p, q} : Edge{q, p});
                }
            }
        normalize(*dominoes);
    }
    if (ids) *ids = id;
    int n1 = (r * c) / 2;
    return BipartiteGraph(n1, r * c - n1, std::move(es));
}

namespace detail {

// Maps a model of h_named onto target through a colour-preserving (or, if
// needed, an arbitrary) isomorphism.
inline MatchingMinorModel transfer_model(const BipartiteGraph& h_named, const MatchingMinorModel& mu,
                                         const BipartiteGraph& target) {
    auto ln = labelled(h_named), lt = labelled(target);
    auto cn = canonical_form(ln), ct = canonical_form(lt);
    if (cn.cert != ct.cert) {
        std::fill(ln.colour.begin(), ln.colour.end(), 0);
        std::fill(lt.colour.begin(), lt.colour.end(), 0);
        cn = canonical_form(ln);
        ct = canonical_form(lt);
        if (cn.cert != ct.cert) throw std::logic_error("constructed model graph is not isomorphic to the target");
    }
    std::vector<int> to_named(target.n());
    for (int i = 0; i < target.n(); ++i) to_named[ct.order[i]] = cn.order[i];
    MatchingMinorModel out;
    for (int v = 0; v < target.n(); ++v) out.vertex_models.push_back(mu.vertex_models[to_named[v]]);
    for (const auto& e : target.edges()) {
        int a = to_named[e.a], b = to_named[e.b];
        int idx = h_named.edge_index(h_named.edge(a, b));
        auto p = mu.edge_models[idx];
        if (std::find(mu.vertex_models[a].begin(), mu.vertex_models[a].end(), p.front()) ==
            mu.vertex_models[a].end())
            std::reverse(p.begin(), p.end());
        out.edge_models.push_back(std::move(p));
    }
    return out;
}

// Collects named vertex models and edge paths, then builds the graph they span.
struct ModelBuilder {
    std::vector<VertexSet> vertices;
    std::vector<int> colour;  // 1 = V1, 2 = V2
    std::vector<std::pair<std::pair<int, int>, std::vector<int>>> edges;

    int add_vertex(VertexSet s, int c) {
        std::sort(s.begin(), s.end());
        vertices.push_back(std::move(s));
        colour.push_back(c);
        return static_cast<int>(vertices.size()) - 1;
    }
    void add_edge(int a, int b, std::vector<int> path) { edges.push_back({{a, b}, std::move(path)}); }

    std::pair<BipartiteGraph, MatchingMinorModel> build() const {
        const int n = static_cast<int>(vertices.size());
        std::vector<int> id(n);
        int n1 = 0;
        for (int v = 0; v < n; ++v)
            if (colour[v] == 1) id[v] = n1++;
        int n2 = 0;
        for (int v = 0; v < n; ++v)
            if (colour[v] == 2) id[v] = n1 + n2++;
        std::vector<Edge> es;
        for (const auto& [ab, p] : edges) {
            int x = id[ab.first], y = id[ab.second];
            es.push_back(x < y ? Edge{x, y} : Edge{y, x});
        }
        BipartiteGraph h(n1, n2, es);
        MatchingMinorModel mu;
        mu.vertex_models.resize(n);
        for (int v = 0; v < n; ++v) mu.vertex_models[id[v]] = vertices[v];
        mu.edge_models.resize(h.m());
        for (const auto& [ab, p] : edges) {
            int x = id[ab.first], y = id[ab.second];
            mu.edge_models[h.edge_index(x < y ? Edge{x, y} : Edge{y, x})] = p;
        }
        return {h, mu};
    }
};

}  // namespace detail

// Model of quadrangulation(k) in cylindrical_grid(3k).
inline MatchingMinorModel model_cgq_in_cg3k(int k) {
    if (k < 1) throw Error(Errc::Usage, "order must be at least 1");
    auto cg = cylindrical_grid(3 * k);
    const int len = 12 * k;
    auto v = [&](int i, int j) { return cg.id[i][detail::wrap(j, len)]; };
    detail::ModelBuilder mb;
    // per ring l and block j: a_down, b_up, a_up, b_down
    std::vector<std::vector<std::array<int, 4>>> node(k + 1, std::vector<std::array<int, 4>>(k + 1));
    for (int l = 1; l <= k; ++l) {
        int i = 3 * l - 1;
        for (int j = 1; j <= k; ++j) {
            int o = 12 * (j - 1);
            node[l][j][0] = mb.add_vertex({v(i, 1 + o), v(i, 2 + o), v(i, 3 + o), v(i - 1, 4 + o), v(i - 1, 3 + o)}, 1);
            node[l][j][1] = mb.add_vertex({v(i, 4 + o), v(i, 5 + o), v(i, 6 + o), v(i + 1, 3 + o), v(i + 1, 4 + o)}, 2);
            node[l][j][2] = mb.add_vertex({v(i, 7 + o), v(i, 8 + o), v(i, 9 + o), v(i + 1, 10 + o), v(i + 1, 9 + o)}, 1);
            node[l][j][3] =
                mb.add_vertex({v(i, 10 + o), v(i, 11 + o), v(i, 12 + o), v(i - 1, 9 + o), v(i - 1, 10 + o)}, 2);
        }
    }
    auto prev = [&](int j) { return j == 1 ? k : j - 1; };
    for (int l = 1; l <= k; ++l) {
        int i = 3 * l - 1;
        for (int j = 1; j <= k; ++j) {
            int o = 12 * (j - 1);
            const auto& nd = node[l][j];
            mb.add_edge(node[l][prev(j)][3], nd[0], {v(i, 12 * (j - 1)), v(i, 1 + o)});
            mb.add_edge(nd[0], nd[1], {v(i, 3 + o), v(i, 4 + o)});
            mb.add_edge(nd[1], nd[2], {v(i, 6 + o), v(i, 7 + o)});
            mb.add_edge(nd[2], nd[3], {v(i, 9 + o), v(i, 10 + o)});
            if (l == k) continue;
            const auto& up = node[l + 1][j];
            mb.add_edge(nd[1], up[0], {v(i + 1, 4 + o), v(i + 2, 3 + o)});
            mb.add_edge(nd[2], up[3], {v(i + 1, 9 + o), v(i + 2, 10 + o)});
            mb.add_edge(nd[1], up[2],
                        {v(i + 1, 4 + o), v(i + 1, 5 + o), v(i + 1, 6 + o), v(i + 1, 7 + o), v(i + 1, 8 + o),
                         v(i + 2, 7 + o), v(i + 2, 8 + o), v(i + 3, 7 + o)});
            int p = 12 * (j - 2);
            mb.add_edge(node[l][prev(j)][3], up[0],
                        {v(i, 12 + p), v(i + 1, 11 + p), v(i + 1, 12 + p), v(i + 2, 11 + p), v(i + 2, 12 + p),
                         v(i + 2, 13 + p), v(i + 2, 14 + p), v(i + 2, 15 + p)});
        }
    }
    auto [h, mu] = mb.build();
    return detail::transfer_model(h, mu, quadrangulation(k).graph);
}

// Model of the k x k grid (square_grid(k, k)) in quadrangulation(k).
struct SquareGridModel {
    MatchingMinorModel model;
    Matching switched;  // the canonical matching switched along every even ring
};

inline SquareGridModel square_grid_model(int k) {
    if (k < 4 || k % 2 != 0) throw Error(Errc::OddOrder, "order must be even and at least 4");
    auto q = quadrangulation(k);
    const int len = 4 * k;
    auto v = [&](int i, int j) { return q.id[i][detail::wrap(j, len)]; };
    std::set<Edge> es;
    auto add = [&](int x, int y) {
        Edge e = x < y ? Edge{x, y} : Edge{y, x};
        if (!q.graph.has_edge(e.a, e.b)) throw std::logic_error("piece uses a non-edge");
        es.insert(e);
    };
    auto ring = [&](int i, int from, int to) {
        for (int j = from; j < to; ++j) add(v(i, j), v(i, j + 1));
    };
    auto base = [&](int i, int j) {
        ring(i, j, j + 4);
        ring(i + 1, j + 1, j + 5);
        add(v(i, j), v(i + 1, j + 1));
        add(v(i, j + 3), v(i + 1, j + 4));
        add(v(i, j + 4), v(i + 1, j + 5));
    };
    auto width = [&](int i, int j) {
        ring(i, j, j + 4);
        ring(i + 1, j + 1, j + 5);
        ring(i + 2, j + 2, j + 6);
        add(v(i, j), v(i + 1, j + 1));
        add(v(i, j + 1), v(i + 1, j + 2));
        add(v(i, j + 4), v(i + 1, j + 5));
        add(v(i + 1, j + 1), v(i + 2, j + 2));
        add(v(i + 1, j + 4), v(i + 2, j + 5));
        add(v(i + 1, j + 5), v(i + 2, j + 6));
    };
    auto height = [&](int i, int j) {
        ring(i, j, j + 7);
        ring(i + 1, j + 1, j + 8);
        ring(i + 2, j + 4, j + 9);
        add(v(i, j), v(i + 1, j + 1));
        add(v(i, j + 3), v(i + 1, j + 4));
        add(v(i, j + 4), v(i + 1, j + 5));
        add(v(i, j + 7), v(i + 1, j + 8));
        add(v(i + 1, j + 3), v(i + 2, j + 4));
        add(v(i + 1, j + 4), v(i + 2, j + 5));
        add(v(i + 1, j + 7), v(i + 2, j + 8));
        add(v(i + 1, j + 8), v(i + 2, j + 9));
    };
    add(v(1, 1), v(1, 2));
    add(v(1, 2), v(2, 3));
    add(v(2, 3), v(2, 2));
    add(v(2, 2), v(1, 1));
    for (int z = 2; z <= k / 2; ++z) {
        base(1, 4 * z - 6);
        height(2 * (z - 1), 4 * z - 6);
        for (int i = 1; i <= z - 2; ++i) width(2 * i, 4 * (z + i) - 7);
        for (int j = 1; j <= z - 2; ++j) width(2 * z - 2, 4 * (z + j) - 3);
    }
    std::map<int, std::vector<int>> adj;
    for (const auto& e : es) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    // Bicontract every degree-2 vertex whose neighbours both branch and share
    // no other neighbour; corners fail the second test.
    std::map<int, int> parent;
    for (auto& [x, nb] : adj) parent[x] = x;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (auto& [x, nb] : adj) {
        if (nb.size() != 2 || adj[nb[0]].size() < 3 || adj[nb[1]].size() < 3) continue;
        if (find(nb[0]) != nb[0] || find(nb[1]) != nb[1]) continue;
        bool shared = false;
        for (int a : adj[nb[0]])
            if (a != x && std::find(adj[nb[1]].begin(), adj[nb[1]].end(), a) != adj[nb[1]].end()) shared = true;
        if (shared) continue;
        parent[nb[0]] = parent[nb[1]] = x;
    }
    std::map<int, VertexSet> group;
    std::map<int, int> out_deg;
    for (auto& [x, nb] : adj) {
        group[find(x)].push_back(x);
        for (int y : nb)
            if (find(y) != find(x)) ++out_deg[find(x)];
    }
    auto branch = [&](int x) { return out_deg[find(x)] >= 3; };
    std::map<int, int> node;
    detail::ModelBuilder mb;
    for (auto& [r, s] : group)
        if (out_deg[r] >= 3) node[r] = mb.add_vertex(s, q.graph.colour(s.size() == 1 ? s[0] : adj[r][0]));
    std::set<std::pair<int, int>> walked;
    for (auto& [x, nb] : adj) {
        if (!branch(x)) continue;
        for (int y : nb) {
            if (find(y) == find(x) || walked.count({x, y})) continue;
            std::vector<int> path{x, y};
            while (!branch(path.back())) {
                const auto& nx = adj[path.back()];
                if (nx.size() != 2) throw std::logic_error("grid model thread is not a path");
                path.push_back(nx[0] == path[path.size() - 2] ? nx[1] : nx[0]);
            }
            walked.insert({path.back(), path[path.size() - 2]});
            walked.insert({x, y});
            int a = node[find(x)], b = node[find(path.back())];
            if (path.size() % 2 == 0) {
                mb.add_edge(a, b, path);
            } else {
                int corner = mb.add_vertex({path[1]}, q.graph.colour(path[1]));
                mb.add_edge(a, corner, {path[0], path[1]});
                mb.add_edge(corner, b, std::vector<int>(path.begin() + 1, path.end()));
            }
        }
    }
    auto [h, mu] = mb.build();
    SquareGridModel out;
    out.model = detail::transfer_model(h, mu, square_grid(k, k));
    std::set<Edge> even_ring;
    for (int i = 2; i <= k; i += 2)
        for (int j = 1; j <= len; ++j) {
            int x = v(i, j), y = v(i, j + 1);
            even_ring.insert(x < y ? Edge{x, y} : Edge{y, x});
        }
    for (const auto& e : q.graph.edges()) {
        bool in_m = std::binary_search(q.matching.begin(), q.matching.end(), e);
        if (even_ring.count(e) ? !in_m : in_m) out.switched.push_back(e);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Ear decompositions.

struct EarStage {
    VertexSet vertices;
    std::vector<Edge> edges;
    std::vector<int> ear;  // path added at this stage
};

inline std::vector<EarStage> ear_decomposition(const BipartiteGraph& b) {
    if (!is_matching_covered(b)) throw Error(Errc::NotMatchingCovered, "graph must be matching covered");
    std::vector<EarStage> out;
    std::vector<char> in_v(b.n(), 0);
    std::set<Edge> cur;
    const Edge first = b.edges().front();
    in_v[first.a] = in_v[first.b] = 1;
    cur.insert(first);
    auto snapshot = [&](std::vector<int> ear) {
        EarStage s;
        for (int v = 0; v < b.n(); ++v)
            if (in_v[v]) s.vertices.push_back(v);
        s.edges.assign(cur.begin(), cur.end());
        s.ear = std::move(ear);
        out.push_back(std::move(s));
    };
    snapshot({first.a, first.b});
    auto acceptable = [&](const std::vector<int>& p) {
        std::vector<char> keep = in_v;
        for (int v : p) keep[v] = 1;
        VertexSet vs;
        for (int v = 0; v < b.n(); ++v)
            if (keep[v]) vs.push_back(v);
        if (!is_conformal(b, vs)) return false;
        auto ind = induced_subgraph(b, keep);
        std::set<Edge> want(cur);
        for (std::size_t j = 0; j + 1 < p.size(); ++j) want.insert(b.edge(p[j], p[j + 1]));
        std::vector<Edge> drop;
        for (const auto& e : ind.graph.edges())
            if (!want.count({ind.new_to_old[e.a], ind.new_to_old[e.b]})) drop.push_back(e);
        return is_matching_covered(without_edges(ind.graph, drop));
    };
    while (static_cast<int>(cur.size()) < b.m()) {
        std::vector<int> best;
        // ears of increasing odd length, lexicographically first
        for (int len = 1; len < b.n() && best.empty(); len += 2) {
            std::vector<int> path;
            std::vector<char> used(b.n(), 0);
            std::function<bool(int)> rec = [&](int x) -> bool {
                int steps = static_cast<int>(path.size()) - 1;
                for (int y : b.adj(x)) {
                    if (steps + 1 == len) {
                        if (!in_v[y]) continue;
                        if (len == 1 && (cur.count(b.edge(x, y)) || y < x)) continue;
                        if (len > 1 && y == path.front()) continue;
                        path.push_back(y);
                        if (acceptable(path)) {
                            best = path;
                            return true;
                        }
                        path.pop_back();
                    } else {
                        if (in_v[y] || used[y]) continue;
                        used[y] = 1;
                        path.push_back(y);
                        if (rec(y)) return true;
                        path.pop_back();
                        used[y] = 0;
                    }
                }
                return false;
            };
            for (int s = 0; s < b.n() && best.empty(); ++s) {
                if (!in_v[s]) continue;
                path = {s};
                rec(s);
            }
        }
        if (best.empty()) throw std::logic_error("no ear found");
        for (int v : best) in_v[v] = 1;
        for (std::size_t j = 0; j + 1 < best.size(); ++j) cur.insert(b.edge(best[j], best[j + 1]));
        snapshot(best);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Erdős–Pósa gadget: k copies of H hung off the outer ring of the cylindrical
// grid digraph of order k.

inline Digraph ep_gadget(const Digraph& h, Arc e, int k) {
    if (k < 1) throw Error(Errc::Usage, "order must be at least 1");
    if (!is_strongly_connected(h)) throw Error(Errc::NotStronglyConnected, "H must be strongly connected");
    if (!h.has_arc(e.first, e.second)) throw Error(Errc::Usage, "arc is not in H");
    auto cg = cylindrical_grid(k);
    auto md = m_direction(cg.graph, cg.matching);
    const int base = 2 * k * k;
    // w_j is the matching edge e_{2k+1-j} of the outer ring, e_m = v_{2m-1} v_{2m}
    auto w = [&](int j) {
        int m = 2 * k + 1 - j;
        return md.vertex_of[cg.id[1][2 * m - 1]];
    };
    std::vector<Arc> arcs = md.digraph.arcs();
    for (int i = 1; i <= k; ++i) {
        int off = base + (i - 1) * h.n();
        for (auto a : h.arcs())
            if (a != e) arcs.push_back({off + a.first, off + a.second});
        arcs.push_back({off + e.first, w(2 * i)});
        arcs.push_back({w(2 * i - 1), off + e.second});
    }
    return Digraph(base + k * h.n(), std::move(arcs));
}

}  // namespace mm

#endif
