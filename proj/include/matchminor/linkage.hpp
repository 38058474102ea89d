#ifndef MATCHMINOR_LINKAGE_HPP
#define MATCHMINOR_LINKAGE_HPP

// The bipartite k-disjoint alternating paths problem: an exhaustive oracle,
// W-completions, proxies and a dynamic program over leaf-tree decompositions.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bigraph.hpp"
#include "decomp.hpp"
#include "error.hpp"
#include "porosity.hpp"

namespace mm {

// Terminal pairs (s_i in V1, t_i in V2).
using DappInstance = std::vector<std::pair<int, int>>;

struct DappSolution {
    Matching matching;
    std::vector<std::vector<int>> paths;  // paths[i] runs from s_i to t_i
};

inline bool is_distinct(const DappInstance& inst) {
    for (std::size_t i = 0; i < inst.size(); ++i)
        for (std::size_t j = i + 1; j < inst.size(); ++j)
            if (inst[i].first == inst[j].first || inst[i].second == inst[j].second) return false;
    return true;
}

inline void check_instance(const BipartiteGraph& b, const DappInstance& inst) {
    for (auto [s, t] : inst)
        if (s < 0 || s >= b.n1() || t < b.n1() || t >= b.n())
            throw Error(Errc::Usage, "terminal pairs must join a V1 vertex to a V2 vertex");
}

inline VertexSet terminals(const DappInstance& inst) {
    VertexSet out;
    for (auto [s, t] : inst) {
        out.push_back(s);
        out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Independent check of a claimed solution.
inline bool validate_solution(const BipartiteGraph& b, const DappInstance& inst, const DappSolution& sol) {
    if (!is_perfect_matching(b, sol.matching) || sol.paths.size() != inst.size()) return false;
    auto mate = mate_of(b.n(), sol.matching);
    std::vector<int> internal_use(b.n(), 0), end_use(b.n(), 0);
    for (std::size_t i = 0; i < inst.size(); ++i) {
        const auto& p = sol.paths[i];
        if (p.size() < 2 || p.size() % 2 != 0) return false;
        if (p.front() != inst[i].first || p.back() != inst[i].second) return false;
        std::vector<int> seen(p);
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
        for (std::size_t j = 0; j + 1 < p.size(); ++j)
            if (!b.has_edge(p[j], p[j + 1])) return false;
        if (p.size() > 2) {
            // internal vertices matched along the path, ends not
            for (std::size_t j = 1; j + 1 < p.size(); ++j) {
                int partner = (j % 2 == 1) ? p[j + 1] : p[j - 1];
                if (mate[p[j]] != partner) return false;
            }
        }
        for (std::size_t j = 1; j + 1 < p.size(); ++j) ++internal_use[p[j]];
        ++end_use[p.front()];
        ++end_use[p.back()];
    }
    for (int v = 0; v < b.n(); ++v)
        if (internal_use[v] > 1 || (internal_use[v] == 1 && end_use[v] > 0)) return false;
    return true;
}

inline constexpr int kDappOracleLimit = 12;

// Exhaustive over perfect matchings (containing f) and path systems.
inline bool dapp_bruteforce(const BipartiteGraph& b, const DappInstance& inst, DappSolution* witness = nullptr,
                            const Matching& f = {}) {
    check_instance(b, inst);
    if (b.n() > kDappOracleLimit || inst.size() > 2)
        throw Error(Errc::OracleLimitExceeded, "oracle handles at most 12 vertices and 2 pairs");
    auto pms = enumerate_perfect_matchings(b);
    auto term = to_mask(b.n(), terminals(inst));
    for (const auto& m : pms) {
        bool ext = std::all_of(f.begin(), f.end(),
                               [&](const Edge& e) { return std::find(m.begin(), m.end(), e) != m.end(); });
        if (!ext) continue;
        auto mate = mate_of(b.n(), m);
        std::vector<char> used(b.n(), 0);  // internal vertices taken so far
        std::vector<std::vector<int>> paths(inst.size());
        std::function<bool(std::size_t)> pair_rec;
        // extends paths[i] (ending in a V1 vertex y) towards t_i
        std::function<bool(std::size_t, int)> walk = [&](std::size_t i, int y) -> bool {
            auto& cur = paths[i];
            int t = inst[i].second;
            for (int x : b.adj(y)) {
                if (x == mate[y]) continue;
                if (x == t) {
                    if (cur.size() == 1) continue;  // single edges handled separately
                    cur.push_back(t);
                    if (pair_rec(i + 1)) return true;
                    cur.pop_back();
                    continue;
                }
                int z = mate[x];
                if (term[x] || term[z] || used[x] || used[z]) continue;
                used[x] = used[z] = 1;
                cur.push_back(x);
                cur.push_back(z);
                if (walk(i, z)) return true;
                cur.pop_back();
                cur.pop_back();
                used[x] = used[z] = 0;
            }
            return false;
        };
        pair_rec = [&](std::size_t i) -> bool {
            if (i == inst.size()) return true;
            auto [s, t] = inst[i];
            if (b.has_edge(s, t)) {
                paths[i] = {s, t};
                if (pair_rec(i + 1)) return true;
            }
            paths[i] = {s};
            return walk(i, s);
        };
        if (pair_rec(0)) {
            if (witness) *witness = {m, paths};
            return true;
        }
    }
    return false;
}

// Chain following: virtual edges closing every chain of paths and
// W-edges into an alternating cycle.
inline std::vector<Edge> w_completion(const BipartiteGraph& b, const DappInstance& inst, const Matching& w) {
    check_instance(b, inst);
    if (!is_distinct(inst)) throw Error(Errc::InvalidW, "terminal pairs must be distinct");
    if (!is_matching(b, w) || !is_extendable(b, w)) throw Error(Errc::InvalidW, "W must be an extendable matching");
    auto mate = mate_of(b.n(), w);
    auto term = to_mask(b.n(), terminals(inst));
    for (int v : terminals(inst))
        if (mate[v] < 0) throw Error(Errc::InvalidW, "W must cover every terminal");
    for (const auto& e : w)
        if (!term[e.a] && !term[e.b]) throw Error(Errc::InvalidW, "every W-edge must cover a terminal");
    const int k = static_cast<int>(inst.size());
    std::vector<int> pair_of_s(b.n(), -1), pair_of_t(b.n(), -1);
    for (int i = 0; i < k; ++i) {
        pair_of_s[inst[i].first] = i;
        pair_of_t[inst[i].second] = i;
    }
    std::vector<Edge> f;
    std::vector<char> seen(k, 0);
    for (int start = 0; start < k; ++start) {
        if (seen[start]) continue;
        // walk backwards from s_start through W-edges ending in t's
        int i = start;
        seen[i] = 1;
        int x = -1;
        bool cycle = false;
        while (true) {
            int m = mate[inst[i].first];
            if (m == inst[i].second && i == start) {
                cycle = true;
                break;
            }
            int j = pair_of_t[m];
            if (j < 0) {
                x = m;
                break;
            }
            if (j == start) {
                cycle = true;
                break;
            }
            seen[j] = 1;
            i = j;
        }
        if (cycle) continue;
        // walk forwards from t_start through W-edges ending in s's
        i = start;
        int y = -1;
        while (true) {
            int m = mate[inst[i].second];
            int j = pair_of_s[m];
            if (j < 0) {
                y = m;
                break;
            }
            seen[j] = 1;
            i = j;
        }
        f.push_back({y, x});
    }
    std::sort(f.begin(), f.end());
    return f;
}

struct Proxy {
    DappInstance pairs;
    Matching w;                 // W'
    std::vector<Edge> s_edge;   // s_edge[i] = s'_i v_i
    std::vector<Edge> t_edge;   // t_edge[i] = u_i t'_i
};

// Calls fn on every (I, W)-proxy until fn returns false.
inline void for_each_proxy(const BipartiteGraph& b, const DappInstance& inst, const Matching& w,
                           const std::function<bool(const Proxy&)>& fn) {
    const int k = static_cast<int>(inst.size());
    auto wmask = to_mask(b.n(), matched_vertices(w));
    // options per pair end: (new terminal, its W'-partner adjacent to the old terminal)
    std::vector<std::vector<Edge>> s_opts(k), t_opts(k);
    for (int i = 0; i < k; ++i) {
        for (int v : b.adj(inst[i].first))
            for (int s2 : b.adj(v))
                if (!wmask[v] && !wmask[s2]) s_opts[i].push_back({s2, v});
        for (int u : b.adj(inst[i].second))
            for (int t2 : b.adj(u))
                if (!wmask[u] && !wmask[t2]) t_opts[i].push_back({u, t2});
    }
    std::vector<Edge> se(k), te(k);
    bool stop = false;
    std::function<void(int, bool)> rec = [&](int i, bool t_side) {
        if (stop) return;
        if (i == k) {
            Proxy p;
            for (int j = 0; j < k; ++j) {
                p.pairs.push_back({se[j].a, te[j].b});
                p.w.push_back(se[j]);
                p.w.push_back(te[j]);
            }
            p.s_edge = se;
            p.t_edge = te;
            if (!is_distinct(p.pairs)) return;
            normalize(p.w);
            if (!is_matching(b, p.w)) return;
            Matching all = w;
            all.insert(all.end(), p.w.begin(), p.w.end());
            if (!is_matching(b, all) || !is_extendable(b, all)) return;
            if (!fn(p)) stop = true;
            return;
        }
        if (!t_side) {
            for (const auto& e : s_opts[i]) {
                se[i] = e;
                rec(i, true);
            }
        } else {
            for (const auto& e : t_opts[i]) {
                te[i] = e;
                rec(i + 1, false);
            }
        }
    };
    rec(0, false);
}

inline std::vector<Proxy> make_proxies(const BipartiteGraph& b, const DappInstance& inst, const Matching& w) {
    std::vector<Proxy> out;
    for_each_proxy(b, inst, w, [&](const Proxy& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Itineraries. For a vertex set X the table lists every feasible boundary
// configuration: which cut edges are matching edges (U), which are path edges,
// how the path pieces inside X pair up the path edges and terminal slots, and
// which terminal pairs are already linked inside X.

struct LinkageContext {
    const BipartiteGraph* graph = nullptr;
    DappInstance pairs;          // pairs still to be routed (non-adjacent)
    std::vector<char> terminal;  // vertices that may not be internal to any path
    std::vector<char> forbidden;
    std::vector<int> forced;      // forced[v] = edge index of the forced matching edge, or -1
    std::vector<int> pair_class;  // identical pairs share a class
    std::vector<std::vector<int>> slots_at;
    std::vector<std::vector<int>> inc;  // incident edge indices per vertex, ascending
};

struct ItineraryEntry {
    uint64_t match = 0;        // cut edges in M
    uint64_t path = 0;         // cut edges on paths
    std::vector<int8_t> link;  // per cut position: partner position, 64 + slot, or -1
    uint32_t done = 0;         // pairs linked inside X
};

struct Itinerary {
    std::vector<char> in_x;
    std::vector<int> cut;  // edge indices, ascending
    std::vector<ItineraryEntry> entries;
    // back-pointers: (left, right) entry indices of the two merged tables, or
    // (-1, leaf choice index) for leaf entries
    std::vector<std::pair<int, int>> from;
    std::vector<std::vector<int>> leaf_choice;  // M-edge then path edges
    const Itinerary* left = nullptr;
    const Itinerary* right = nullptr;
};

namespace detail {

inline std::string entry_key(const ItineraryEntry& e) {
    std::string k(reinterpret_cast<const char*>(&e.match), 8);
    k.append(reinterpret_cast<const char*>(&e.path), 8);
    k.append(reinterpret_cast<const char*>(&e.done), 4);
    k.append(reinterpret_cast<const char*>(e.link.data()), e.link.size());
    return k;
}

}  // namespace detail

// pairs: already filtered to non-adjacent pairs; all_terminals: every vertex
// of the original instance.
inline LinkageContext make_context(const BipartiteGraph& b, const DappInstance& pairs, const VertexSet& all_terminals,
                                   const Matching& forced = {}, const VertexSet& forbidden = {}) {
    LinkageContext c;
    c.graph = &b;
    c.pairs = pairs;
    if (pairs.size() > 31) throw Error(Errc::Usage, "too many terminal pairs");
    c.terminal = to_mask(b.n(), all_terminals);
    c.forbidden = to_mask(b.n(), forbidden);
    c.forced.assign(b.n(), -1);
    for (const auto& e : forced) {
        int id = b.edge_index(e);
        if (id < 0) throw Error(Errc::NotExtendable, "forced edge is not an edge of the graph");
        c.forced[e.a] = c.forced[e.b] = id;
    }
    c.pair_class.resize(pairs.size());
    c.slots_at.assign(b.n(), {});
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        c.pair_class[i] = static_cast<int>(i);
        for (std::size_t j = 0; j < i; ++j)
            if (pairs[j] == pairs[i]) {
                c.pair_class[i] = c.pair_class[j];
                break;
            }
        c.slots_at[pairs[i].first].push_back(static_cast<int>(2 * i));
        c.slots_at[pairs[i].second].push_back(static_cast<int>(2 * i + 1));
    }
    c.inc.assign(b.n(), {});
    for (int id = 0; id < b.m(); ++id) {
        c.inc[b.edges()[id].a].push_back(id);
        c.inc[b.edges()[id].b].push_back(id);
    }
    return c;
}

inline Itinerary leaf_itinerary(const LinkageContext& c, int v) {
    Itinerary it;
    const auto& b = *c.graph;
    it.in_x.assign(b.n(), 0);
    it.in_x[v] = 1;
    it.cut = c.inc[v];
    const int d = static_cast<int>(it.cut.size());
    if (d > 64) throw Error(Errc::OracleLimitExceeded, "cut exceeds 64 edges");
    std::unordered_map<std::string, int> index;
    auto add = [&](ItineraryEntry e, std::vector<int> choice) {
        auto key = detail::entry_key(e);
        if (index.count(key)) return;
        index[key] = static_cast<int>(it.entries.size());
        it.entries.push_back(std::move(e));
        it.from.push_back({-1, static_cast<int>(it.leaf_choice.size())});
        it.leaf_choice.push_back(std::move(choice));
    };
    const auto& slots = c.slots_at[v];
    for (int pm = 0; pm < d; ++pm) {
        if (c.forced[v] >= 0 && it.cut[pm] != c.forced[v]) continue;
        ItineraryEntry base;
        base.match = uint64_t{1} << pm;
        base.link.assign(d, -1);
        if (c.terminal[v]) {
            // one path edge per slot, none of them the matching edge
            std::vector<int> pick;
            std::function<void(std::size_t)> rec = [&](std::size_t i) {
                if (i == slots.size()) {
                    ItineraryEntry e = base;
                    std::vector<int> choice{it.cut[pm]};
                    for (std::size_t j = 0; j < slots.size(); ++j) {
                        e.path |= uint64_t{1} << pick[j];
                        e.link[pick[j]] = static_cast<int8_t>(64 + slots[j]);
                        choice.push_back(it.cut[pick[j]]);
                    }
                    add(std::move(e), std::move(choice));
                    return;
                }
                for (int q = 0; q < d; ++q) {
                    if (q == pm || std::find(pick.begin(), pick.end(), q) != pick.end()) continue;
                    pick.push_back(q);
                    rec(i + 1);
                    pick.pop_back();
                }
            };
            rec(0);
        } else {
            add(base, {it.cut[pm]});
            if (c.forbidden[v]) continue;
            for (int q = 0; q < d; ++q) {
                if (q == pm) continue;
                ItineraryEntry e = base;
                e.path = (uint64_t{1} << pm) | (uint64_t{1} << q);
                e.link[pm] = static_cast<int8_t>(q);
                e.link[q] = static_cast<int8_t>(pm);
                add(std::move(e), {it.cut[pm], it.cut[pm], it.cut[q]});
            }
        }
    }
    return it;
}

// Merges the tables of two disjoint sets without checking any side condition.
inline Itinerary merge_tables(const LinkageContext& c, const Itinerary& x, const Itinerary& y) {
    const auto& b = *c.graph;
    Itinerary it;
    it.left = &x;
    it.right = &y;
    it.in_x.assign(b.n(), 0);
    for (int v = 0; v < b.n(); ++v) it.in_x[v] = x.in_x[v] || y.in_x[v];
    std::vector<int> common;
    {
        std::vector<int> all;
        std::set_union(x.cut.begin(), x.cut.end(), y.cut.begin(), y.cut.end(), std::back_inserter(all));
        std::set_intersection(x.cut.begin(), x.cut.end(), y.cut.begin(), y.cut.end(), std::back_inserter(common));
        for (int id : all)
            if (!std::binary_search(common.begin(), common.end(), id)) it.cut.push_back(id);
    }
    if (it.cut.size() > 64) throw Error(Errc::OracleLimitExceeded, "cut exceeds 64 edges");
    const int nx = static_cast<int>(x.cut.size()), ny = static_cast<int>(y.cut.size());
    const int nc = static_cast<int>(common.size());
    // position maps: >= 0 new cut position, or -(common index) - 1
    auto classify = [&](const std::vector<int>& cut) {
        std::vector<int> out(cut.size());
        for (std::size_t p = 0; p < cut.size(); ++p) {
            auto itc = std::lower_bound(common.begin(), common.end(), cut[p]);
            if (itc != common.end() && *itc == cut[p]) {
                out[p] = -static_cast<int>(itc - common.begin()) - 1;
            } else {
                out[p] = static_cast<int>(std::lower_bound(it.cut.begin(), it.cut.end(), cut[p]) - it.cut.begin());
            }
        }
        return out;
    };
    auto cx = classify(x.cut), cy = classify(y.cut);
    std::vector<int> common_x(nc), common_y(nc);
    for (int p = 0; p < nx; ++p)
        if (cx[p] < 0) common_x[-cx[p] - 1] = p;
    for (int p = 0; p < ny; ++p)
        if (cy[p] < 0) common_y[-cy[p] - 1] = p;
    auto projection = [&](const ItineraryEntry& e, const std::vector<int>& pos) {
        uint64_t m = 0, p = 0;
        for (int i = 0; i < nc; ++i) {
            if (e.match >> pos[i] & 1) m |= uint64_t{1} << i;
            if (e.path >> pos[i] & 1) p |= uint64_t{1} << i;
        }
        return std::pair<uint64_t, uint64_t>{m, p};
    };
    struct PairHash {
        std::size_t operator()(const std::pair<uint64_t, uint64_t>& p) const {
            return std::hash<uint64_t>()(p.first * 0x9e3779b97f4a7c15ULL ^ p.second);
        }
    };
    std::unordered_map<std::pair<uint64_t, uint64_t>, std::vector<int>, PairHash> by_proj;
    for (int j = 0; j < static_cast<int>(y.entries.size()); ++j) by_proj[projection(y.entries[j], common_y)].push_back(j);
    std::unordered_map<std::string, int> index;
    const int nslots = static_cast<int>(2 * c.pairs.size());
    std::vector<int> slot_x(nslots), slot_y(nslots);
    std::vector<char> common_seen(nc);
    for (int i = 0; i < static_cast<int>(x.entries.size()); ++i) {
        const auto& ex = x.entries[i];
        auto pr = projection(ex, common_x);
        auto found = by_proj.find(pr);
        if (found == by_proj.end()) continue;
        std::fill(slot_x.begin(), slot_x.end(), -1);
        for (int p = 0; p < nx; ++p)
            if (ex.link[p] >= 64) slot_x[ex.link[p] - 64] = p;
        for (int j : found->second) {
            const auto& ey = y.entries[j];
            if (ex.done & ey.done) continue;
            std::fill(slot_y.begin(), slot_y.end(), -1);
            for (int p = 0; p < ny; ++p)
                if (ey.link[p] >= 64) slot_y[ey.link[p] - 64] = p;
            ItineraryEntry out;
            out.link.assign(it.cut.size(), -1);
            out.done = ex.done | ey.done;
            for (int p = 0; p < nx; ++p)
                if (cx[p] >= 0) {
                    if (ex.match >> p & 1) out.match |= uint64_t{1} << cx[p];
                    if (ex.path >> p & 1) out.path |= uint64_t{1} << cx[p];
                }
            for (int p = 0; p < ny; ++p)
                if (cy[p] >= 0) {
                    if (ey.match >> p & 1) out.match |= uint64_t{1} << cy[p];
                    if (ey.path >> p & 1) out.path |= uint64_t{1} << cy[p];
                }
            std::fill(common_seen.begin(), common_seen.end(), 0);
            // follow a piece from an end given as (side, code) with code a
            // position of that side; returns the far end as an output code
            // (new position, or 64 + slot)
            auto follow = [&](int side, int code) {
                while (true) {
                    int partner = side == 0 ? ex.link[code] : ey.link[code];
                    if (partner >= 64) return partner;
                    int cls = side == 0 ? cx[partner] : cy[partner];
                    if (cls >= 0) return cls;
                    int k = -cls - 1;
                    common_seen[k] = 1;
                    side = 1 - side;
                    code = side == 0 ? common_x[k] : common_y[k];
                }
            };
            bool ok = true;
            auto close = [&](int a, int bb) {
                // both ends are slots
                int sa = a - 64, sb = bb - 64;
                if ((sa & 1) == (sb & 1)) return false;
                int s_slot = (sa & 1) ? sb : sa, t_slot = (sa & 1) ? sa : sb;
                if (c.pair_class[s_slot / 2] != c.pair_class[t_slot / 2]) return false;
                uint32_t bit = uint32_t{1} << (s_slot / 2);
                if (out.done & bit) return false;
                out.done |= bit;
                return true;
            };
            // ends: new positions of either side and open slots
            for (int side = 0; side < 2 && ok; ++side) {
                const auto& e = side == 0 ? ex : ey;
                const auto& cls = side == 0 ? cx : cy;
                int n = side == 0 ? nx : ny;
                for (int p = 0; p < n && ok; ++p) {
                    if (!(e.path >> p & 1)) continue;
                    if (cls[p] >= 0) {
                        out.link[cls[p]] = static_cast<int8_t>(follow(side, p));
                    } else if (e.link[p] >= 64) {
                        // slot entering through a common edge: start from the slot
                        int slot_end = e.link[p];
                        int k = -cls[p] - 1;
                        common_seen[k] = 1;
                        int far = follow(1 - side, side == 0 ? common_y[k] : common_x[k]);
                        if (far >= 64 && slot_end < far) ok = close(slot_end, far);
                    }
                }
            }
            if (!ok) continue;
            // an unvisited common path edge lies on a cycle
            for (int k = 0; k < nc && ok; ++k)
                if ((pr.second >> k & 1) && !common_seen[k]) ok = false;
            if (!ok) continue;
            auto key = detail::entry_key(out);
            auto ins = index.emplace(key, static_cast<int>(it.entries.size()));
            if (ins.second) {
                it.entries.push_back(std::move(out));
                it.from.push_back({i, j});
            }
        }
    }
    return it;
}

// Join condition: no edge from a V1 vertex of Y to a V2 vertex of X.
inline Itinerary merge_join(const LinkageContext& c, const Itinerary& fx, const Itinerary& fy) {
    const auto& b = *c.graph;
    for (int v = 0; v < b.n1(); ++v)
        if (fy.in_x[v])
            for (int u : b.adj(v))
                if (fx.in_x[u]) throw Error(Errc::JoinConditionViolated, "edge from V1 of Y into V2 of X");
    return merge_tables(c, fx, fy);
}

// Extends fx by a small set Y one vertex at a time. The returned tables own
// their intermediate steps through `keep`.
inline Itinerary merge_guard(const LinkageContext& c, const Itinerary& fx, const VertexSet& y, int w,
                             std::vector<std::unique_ptr<Itinerary>>& keep) {
    const auto& b = *c.graph;
    VertexSet x;
    for (int v = 0; v < b.n(); ++v)
        if (fx.in_x[v]) x.push_back(v);
    if (static_cast<int>(y.size()) > w) throw Error(Errc::BoundViolated, "|Y| exceeds w");
    if (!x.empty() && static_cast<int>(x.size()) < b.n() && matching_porosity(b, x) > w)
        throw Error(Errc::BoundViolated, "porosity of the cut around X exceeds w");
    const Itinerary* cur = &fx;
    for (int v : y) {
        if (fx.in_x[v]) throw Error(Errc::Usage, "Y must be disjoint from X");
        keep.push_back(std::make_unique<Itinerary>(leaf_itinerary(c, v)));
        const Itinerary* leaf = keep.back().get();
        keep.push_back(std::make_unique<Itinerary>(merge_tables(c, *cur, *leaf)));
        cur = keep.back().get();
    }
    return *cur;
}

inline bool itinerary_accepts(const LinkageContext& c, const Itinerary& f, int* entry = nullptr) {
    uint32_t all = c.pairs.empty() ? 0 : (c.pairs.size() == 32 ? ~uint32_t{0} : ((uint32_t{1} << c.pairs.size()) - 1));
    for (int i = 0; i < static_cast<int>(f.entries.size()); ++i) {
        const auto& e = f.entries[i];
        if (e.match == 0 && e.path == 0 && e.done == all) {
            if (entry) *entry = i;
            return true;
        }
    }
    return false;
}

namespace detail {

struct LinkageRun {
    std::vector<std::unique_ptr<Itinerary>> tables;
    const Itinerary* root = nullptr;
};

inline LinkageRun run_linkage_dp(const LinkageContext& c, const PMDecomposition& dec) {
    LinkageRun run;
    auto r = rooted(dec);
    std::vector<const Itinerary*> at(dec.size(), nullptr);
    for (auto s = r.order.rbegin(); s != r.order.rend(); ++s) {
        const Itinerary* cur = nullptr;
        if (dec.vertex[*s] >= 0) {
            run.tables.push_back(std::make_unique<Itinerary>(leaf_itinerary(c, dec.vertex[*s])));
            cur = run.tables.back().get();
        }
        for (int ch : r.children[*s]) {
            if (!cur) {
                cur = at[ch];
                continue;
            }
            run.tables.push_back(std::make_unique<Itinerary>(merge_tables(c, *cur, *at[ch])));
            cur = run.tables.back().get();
        }
        at[*s] = cur;
    }
    run.root = dec.size() ? at[r.root] : nullptr;
    return run;
}

inline void collect_choices(const Itinerary& f, int entry, std::vector<int>& match, std::vector<int>& path) {
    auto [l, rr] = f.from[entry];
    if (l < 0) {
        const auto& ch = f.leaf_choice[rr];
        match.push_back(ch[0]);
        path.insert(path.end(), ch.begin() + 1, ch.end());
        return;
    }
    collect_choices(*f.left, l, match, path);
    collect_choices(*f.right, rr, match, path);
}

}  // namespace detail

struct DappOptions {
    Matching forced;     // edges every solution matching must contain
    VertexSet forbidden; // vertices that may not be internal to a path
};

// Decides the instance with the itinerary dynamic program over dec. The choice
// of the terminals' matching edges (W) and of the first edges leaving each
// terminal (the proxies) is made inside the leaf tables.
inline bool dapp_solve_dp(const BipartiteGraph& b, const DappInstance& inst, const PMDecomposition& dec,
                          const DappOptions& opt, DappSolution* witness = nullptr) {
    check_instance(b, inst);
    require_leaf_tree(dec, b.n());
    if (b.n() == 0) {
        if (witness) *witness = {};
        return inst.empty();
    }
    if (b.n1() != b.n2()) return false;
    DappInstance rest;
    std::vector<int> rest_index;
    for (std::size_t i = 0; i < inst.size(); ++i)
        if (!b.has_edge(inst[i].first, inst[i].second)) {
            rest.push_back(inst[i]);
            rest_index.push_back(static_cast<int>(i));
        }
    auto c = make_context(b, rest, terminals(inst), opt.forced, opt.forbidden);
    auto run = detail::run_linkage_dp(c, dec);
    int entry = -1;
    if (!itinerary_accepts(c, *run.root, &entry)) return false;
    if (witness) {
        std::vector<int> match, path;
        detail::collect_choices(*run.root, entry, match, path);
        DappSolution sol;
        std::sort(match.begin(), match.end());
        match.erase(std::unique(match.begin(), match.end()), match.end());
        for (int id : match) sol.matching.push_back(b.edges()[id]);
        std::sort(path.begin(), path.end());
        path.erase(std::unique(path.begin(), path.end()), path.end());
        std::vector<std::vector<int>> inc(b.n());
        for (int id : path) {
            inc[b.edges()[id].a].push_back(id);
            inc[b.edges()[id].b].push_back(id);
        }
        std::vector<char> used(b.m(), 0), taken(rest.size(), 0);
        sol.paths.assign(inst.size(), {});
        for (auto [s, unused] : rest) {
            for (int first : inc[s]) {
                if (used[first]) continue;
                std::vector<int> p{s};
                int cur = s, id = first;
                while (id >= 0) {
                    used[id] = 1;
                    const auto& e = b.edges()[id];
                    cur = e.a == cur ? e.b : e.a;
                    p.push_back(cur);
                    id = -1;
                    if (!c.terminal[cur])
                        for (int nxt : inc[cur])
                            if (!used[nxt]) id = nxt;
                }
                for (std::size_t j = 0; j < rest.size(); ++j)
                    if (!taken[j] && rest[j] == std::pair<int, int>{s, cur}) {
                        taken[j] = 1;
                        sol.paths[rest_index[j]] = p;
                        break;
                    }
            }
        }
        for (std::size_t i = 0; i < inst.size(); ++i)
            if (b.has_edge(inst[i].first, inst[i].second)) sol.paths[i] = {inst[i].first, inst[i].second};
        *witness = std::move(sol);
    }
    return true;
}

inline bool dapp_solve(const BipartiteGraph& b, const DappInstance& inst, const PMDecomposition& dec,
                       DappSolution* witness = nullptr) {
    return dapp_solve_dp(b, inst, dec, {}, witness);
}

inline bool dapp_solve_extending(const BipartiteGraph& b, const DappInstance& inst, const Matching& f,
                                 const PMDecomposition& dec, DappSolution* witness = nullptr) {
    if (!is_matching(b, f) || !is_extendable(b, f)) throw Error(Errc::NotExtendable, "F is not extendable");
    DappOptions opt;
    opt.forced = f;
    return dapp_solve_dp(b, inst, dec, opt, witness);
}

// The explicit outer loops: every terminal matching W, every proxy, then the
// dynamic program on the distinct proxied instance.
inline bool dapp_solve_proxied(const BipartiteGraph& b, const DappInstance& inst, const PMDecomposition& dec) {
    check_instance(b, inst);
    if (!has_perfect_matching(b)) return false;
    DappInstance rest;
    for (auto pr : inst)
        if (!b.has_edge(pr.first, pr.second)) rest.push_back(pr);
    auto term = terminals(inst);
    Matching w;
    std::vector<char> covered(b.n(), 0);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        while (i < term.size() && covered[term[i]]) ++i;
        if (i == term.size()) {
            if (!is_extendable(b, w)) return false;
            bool found = false;
            for_each_proxy(b, rest, w, [&](const Proxy& p) {
                // the attachments of different pairs must not coincide
                for (std::size_t x = 0; x < rest.size(); ++x)
                    for (std::size_t y = 0; y < rest.size(); ++y)
                        if (x != y && p.s_edge[x] == p.t_edge[y]) return true;
                Matching forced = w;
                forced.insert(forced.end(), p.w.begin(), p.w.end());
                DappOptions opt;
                opt.forced = forced;
                opt.forbidden = matched_vertices(w);
                if (dapp_solve_dp(b, p.pairs, dec, opt)) {
                    found = true;
                    return false;
                }
                return true;
            });
            return found;
        }
        int v = term[i];
        for (int u : b.adj(v)) {
            if (covered[u]) continue;
            Edge e = b.edge(v, u);
            w.push_back(e);
            covered[v] = covered[u] = 1;
            bool ok = rec(i + 1);
            covered[v] = covered[u] = 0;
            w.pop_back();
            if (ok) return true;
        }
        return false;
    };
    return rec(0);
}

struct LimitedResult {
    bool limited = true;
    VertexSet counterexample;
};

// Checks that every Y inside X whose cut in B + F has matching porosity at
// most w meets L in at most k + w parts.
inline LimitedResult is_limited(const BipartiteGraph& b, const std::vector<Edge>& f, const std::vector<Edge>& l,
                                const VertexSet& x, int k, int w, uint64_t seed = 1) {
    auto bf = with_edges(b, f);
    auto parts = [&](const std::vector<char>& in_y) {
        std::vector<int> parent(b.n());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
        std::vector<char> on(b.n(), 0);
        for (const auto& e : l) {
            if (in_y[e.a]) on[e.a] = 1;
            if (in_y[e.b]) on[e.b] = 1;
            if (in_y[e.a] && in_y[e.b]) parent[find(e.a)] = find(e.b);
        }
        int cnt = 0;
        for (int v = 0; v < b.n(); ++v)
            if (on[v] && find(v) == v) ++cnt;
        return cnt;
    };
    LimitedResult res;
    auto test = [&](const VertexSet& y) {
        if (y.empty()) return true;
        auto in_y = to_mask(b.n(), y);
        int p = parts(in_y);
        if (p <= k + w) return true;
        if (matching_porosity(bf, y) > w) return true;
        res.limited = false;
        res.counterexample = y;
        return false;
    };
    const int nx = static_cast<int>(x.size());
    if (nx <= 10) {
        for (uint32_t mask = 1; mask < (uint32_t{1} << nx); ++mask) {
            VertexSet y;
            for (int i = 0; i < nx; ++i)
                if (mask >> i & 1) y.push_back(x[i]);
            std::sort(y.begin(), y.end());
            if (!test(y)) return res;
        }
    } else {
        std::mt19937_64 rng(seed);
        for (int rep = 0; rep < 4096; ++rep) {
            VertexSet y;
            for (int v : x)
                if (rng() & 1) y.push_back(v);
            std::sort(y.begin(), y.end());
            if (!test(y)) return res;
        }
    }
    return res;
}

}  // namespace mm

#endif
