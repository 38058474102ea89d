#ifndef MATCHMINOR_TESTS_ORACLES_HPP
#define MATCHMINOR_TESTS_ORACLES_HPP

// Independent exhaustive checks used by the tests. None of them calls into
// the library beyond the graph containers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "matchminor.hpp"

namespace oracle {

using namespace mm;

// Every M-alternating cycle of b as a sorted list of its edges. Each cycle is
// found from its lowest vertex, leaving along the matching edge.
inline std::vector<std::vector<Edge>> alternating_cycles(const BipartiteGraph& b, const Matching& m) {
    std::vector<int> mate(b.n(), -1);
    for (const auto& e : m) {
        mate[e.a] = e.b;
        mate[e.b] = e.a;
    }
    std::set<std::vector<Edge>> found;
    std::vector<char> on(b.n(), 0);
    std::vector<int> walk;
    std::function<void(int, int, bool)> dfs = [&](int start, int v, bool need_matching) {
        if (need_matching) {
            int u = mate[v];
            if (u < 0 || u < start) return;
            if (u == start) return;
            if (on[u]) return;
            on[u] = 1;
            walk.push_back(u);
            dfs(start, u, false);
            walk.pop_back();
            on[u] = 0;
            return;
        }
        for (int u : b.adj(v)) {
            if (u == mate[v] || u < start) continue;
            if (u == start && walk.size() >= 4) {
                std::vector<Edge> es;
                for (std::size_t i = 0; i < walk.size(); ++i) es.push_back(b.edge(walk[i], walk[(i + 1) % walk.size()]));
                std::sort(es.begin(), es.end());
                found.insert(es);
                continue;
            }
            if (on[u]) continue;
            on[u] = 1;
            walk.push_back(u);
            dfs(start, u, true);
            walk.pop_back();
            on[u] = 0;
        }
    };
    for (int s = 0; s < b.n(); ++s) {
        if (mate[s] < 0) continue;
        on[s] = 1;
        walk = {s};
        dfs(s, s, true);
        on[s] = 0;
    }
    return {found.begin(), found.end()};
}

// F contains M on the cut and meets every M-alternating cycle using a cut edge.
inline bool is_guard(const BipartiteGraph& b, const Matching& m, const VertexSet& x, const Matching& f) {
    std::vector<char> in(b.n(), 0);
    for (int v : x) in[v] = 1;
    std::set<Edge> fs(f.begin(), f.end());
    for (const auto& e : f)
        if (std::find(m.begin(), m.end(), e) == m.end()) return false;
    for (const auto& e : m)
        if (in[e.a] != in[e.b] && !fs.count(e)) return false;
    for (const auto& c : alternating_cycles(b, m)) {
        bool crosses = false, hit = false;
        for (const auto& e : c) {
            if (in[e.a] != in[e.b]) crosses = true;
            if (fs.count(e)) hit = true;
        }
        if (crosses && !hit) return false;
    }
    return true;
}

// Every directed cycle of d as its vertex sequence starting at the lowest vertex.
inline std::vector<std::vector<int>> directed_cycles(const Digraph& d) {
    std::vector<std::vector<int>> out;
    std::vector<char> on(d.n(), 0);
    std::vector<int> walk;
    std::function<void(int, int)> dfs = [&](int s, int v) {
        for (int u : d.out(v)) {
            if (u == s) {
                out.push_back(walk);
                continue;
            }
            if (u < s || on[u]) continue;
            on[u] = 1;
            walk.push_back(u);
            dfs(s, u);
            walk.pop_back();
            on[u] = 0;
        }
    };
    for (int s = 0; s < d.n(); ++s) {
        on[s] = 1;
        walk = {s};
        dfs(s, s);
        on[s] = 0;
    }
    return out;
}

// Largest number of arcs across the cut used by pairwise disjoint directed cycles.
inline int cycle_porosity(const Digraph& d, const VertexSet& x) {
    std::vector<char> in(d.n(), 0);
    for (int v : x) in[v] = 1;
    auto cycles = directed_cycles(d);
    std::vector<std::uint32_t> mask;
    std::vector<int> crossing;
    for (const auto& c : cycles) {
        std::uint32_t mk = 0;
        int cr = 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            mk |= 1u << c[i];
            if (in[c[i]] != in[c[(i + 1) % c.size()]]) ++cr;
        }
        mask.push_back(mk);
        crossing.push_back(cr);
    }
    int best = 0;
    std::function<void(std::size_t, std::uint32_t, int)> rec = [&](std::size_t i, std::uint32_t used, int val) {
        best = std::max(best, val);
        for (std::size_t j = i; j < cycles.size(); ++j)
            if (!(mask[j] & used) && crossing[j] > 0) rec(j + 1, used | mask[j], val + crossing[j]);
    };
    rec(0, 0, 0);
    return best;
}

// Domino tilings of an r x c board by a column-profile transfer matrix.
inline std::uint64_t domino_tilings(int r, int c) {
    std::vector<std::uint64_t> ways(std::size_t{1} << r, 0), next;
    ways[0] = 1;
    for (int col = 0; col < c; ++col) {
        next.assign(ways.size(), 0);
        for (std::uint32_t in = 0; in < ways.size(); ++in) {
            if (!ways[in]) continue;
            // fill the column; cells already covered by horizontal dominoes are in `in`
            std::function<void(int, std::uint32_t)> fill = [&](int row, std::uint32_t out) {
                if (row == r) {
                    next[out] += ways[in];
                    return;
                }
                if (in >> row & 1) return fill(row + 1, out);
                fill(row + 1, out | (1u << row));  // horizontal into the next column
                if (row + 1 < r && !(in >> (row + 1) & 1)) fill(row + 2, out);  // vertical
            };
            fill(0, 0);
        }
        ways.swap(next);
    }
    return ways[0];
}

// Number of perfect matchings by trying every permutation of V2.
inline std::uint64_t pm_by_permutations(const BipartiteGraph& b) {
    if (b.n1() != b.n2()) return 0;
    std::vector<int> p(b.n2());
    for (int i = 0; i < b.n2(); ++i) p[i] = b.n1() + i;
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (int i = 0; i < b.n1() && ok; ++i) ok = b.has_edge(i, p[i]);
        if (ok) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

}  // namespace oracle

#endif
