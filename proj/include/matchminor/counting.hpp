#ifndef MATCHMINOR_COUNTING_HPP
#define MATCHMINOR_COUNTING_HPP

// Counting perfect matchings: exhaustive oracles and the dynamic program over
// a leaf-tree decomposition.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bigraph.hpp"
#include "decomp.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace mm {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kCountOracleLimit = 22;

namespace detail {

inline std::uint64_t count_pm_mask(const std::vector<std::uint32_t>& nb, std::uint32_t left,
                                   std::unordered_map<std::uint32_t, std::uint64_t>& memo) {
    if (left == 0) return 1;
    auto it = memo.find(left);
    if (it != memo.end()) return it->second;
    const int v = std::countr_zero(left);
    std::uint32_t rest = left & ~(1u << v);
    std::uint64_t total = 0;
    for (std::uint32_t cand = nb[v] & rest; cand; cand &= cand - 1) {
        int u = std::countr_zero(cand);
        total += count_pm_mask(nb, rest & ~(1u << u), memo);
    }
    memo.emplace(left, total);
    return total;
}

}  // namespace detail

// Exhaustive count: match the lowest uncovered vertex in every possible way.
inline BigInt count_pm_bruteforce(const Graph& g) {
    if (g.n() > kCountOracleLimit) throw Error(Errc::OracleLimitExceeded, "counting oracle is limited to 22 vertices");
    if (g.n() % 2) return 0;
    std::vector<std::uint32_t> nb(g.n(), 0);
    for (auto [u, v] : g.edges()) {
        nb[u] |= 1u << v;
        nb[v] |= 1u << u;
    }
    std::unordered_map<std::uint32_t, std::uint64_t> memo;
    const std::uint32_t all = g.n() == 32 ? ~0u : (1u << g.n()) - 1;
    return BigInt(detail::count_pm_mask(nb, all, memo));
}

inline BigInt count_pm_bruteforce(const BipartiteGraph& b) { return count_pm_bruteforce(to_graph(b)); }

// Ryser's formula for the permanent of a 0/1 square matrix.
inline BigInt permanent(const std::vector<std::vector<int>>& a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    if (n > 24) throw Error(Errc::OracleLimitExceeded, "permanent is limited to 24 rows");
    BigInt total = 0;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        BigInt prod = 1;
        for (int i = 0; i < n && prod != 0; ++i) {
            long long row = 0;
            for (int j = 0; j < n; ++j)
                if (s >> j & 1) row += a[i][j];
            prod *= row;
        }
        if ((n - std::popcount(s)) % 2) total -= prod;
        else total += prod;
    }
    return total;
}

inline std::vector<std::vector<int>> biadjacency(const BipartiteGraph& b) {
    std::vector<std::vector<int>> a(b.n1(), std::vector<int>(b.n2(), 0));
    for (const auto& e : b.edges()) a[e.a][e.b - b.n1()] = 1;
    return a;
}

struct CountStats {
    long long operations = 0;  // table-entry pairs examined by the joins
    long long max_table = 0;
};

// Table for one subtree: boundary matchings F (edge indices, sorted) mapped to
// the number of perfect matchings of the subtree's vertices minus V(F).
// Only non-zero entries are kept.
using CountTable = std::map<std::vector<int>, BigInt>;

namespace detail {

inline CountTable count_leaf(const std::vector<std::vector<int>>& inc, int v) {
    CountTable t;
    for (int e : inc[v]) t[{e}] = 1;
    return t;
}

// Joins the tables of two disjoint vertex sets.
inline CountTable count_join(const Graph& g, const std::vector<char>& in_a, const std::vector<char>& in_b,
                             const CountTable& ta, const CountTable& tb, CountStats& st) {
    auto inner = [&](int e) {
        auto [u, v] = g.edges()[e];
        return (in_a[u] && in_b[v]) || (in_b[u] && in_a[v]);
    };
    struct Part {
        std::vector<int> rest;
        const BigInt* value;
    };
    std::map<std::vector<int>, std::vector<Part>> by_w;
    for (const auto& [f, val] : tb) {
        Part p{{}, &val};
        std::vector<int> w;
        for (int e : f) (inner(e) ? w : p.rest).push_back(e);
        by_w[w].push_back(std::move(p));
    }
    CountTable out;
    std::vector<char> used(g.n(), 0);
    for (const auto& [f, val] : ta) {
        std::vector<int> w, rest;
        for (int e : f) (inner(e) ? w : rest).push_back(e);
        auto it = by_w.find(w);
        if (it == by_w.end()) continue;
        for (int e : rest) used[g.edges()[e].first] = used[g.edges()[e].second] = 1;
        for (const auto& p : it->second) {
            ++st.operations;
            bool ok = true;
            for (int e : p.rest) {
                auto [u, v] = g.edges()[e];
                // an A-side endpoint shared by both sides would be covered twice
                if ((used[u] && !in_b[u]) || (used[v] && !in_b[v])) ok = false;
            }
            if (!ok) continue;
            std::vector<int> merged;
            std::merge(rest.begin(), rest.end(), p.rest.begin(), p.rest.end(), std::back_inserter(merged));
            out[merged] += val * *p.value;
        }
        for (int e : rest) used[g.edges()[e].first] = used[g.edges()[e].second] = 0;
    }
    st.max_table = std::max<long long>(st.max_table, static_cast<long long>(out.size()));
    return out;
}

}  // namespace detail

// Dynamic program over a leaf-tree decomposition of g (any graph).
inline BigInt count_pm_decomp(const Graph& g, const PMDecomposition& dec, CountStats* stats = nullptr) {
    require_leaf_tree(dec, g.n());
    CountStats local;
    CountStats& st = stats ? *stats : local;
    if (g.n() == 0) return 1;
    if (g.n() % 2) return 0;
    std::vector<std::vector<int>> inc(g.n());
    for (int e = 0; e < g.m(); ++e) {
        inc[g.edges()[e].first].push_back(e);
        inc[g.edges()[e].second].push_back(e);
    }
    auto r = rooted(dec);
    std::vector<CountTable> table(dec.size());
    std::vector<std::vector<char>> in(dec.size());
    for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
        int s = *it;
        auto kids = r.children[s];
        if (dec.vertex[s] >= 0) {
            // a leaf that roots the tree still has its neighbour below it
            in[s].assign(g.n(), 0);
            in[s][dec.vertex[s]] = 1;
            table[s] = detail::count_leaf(inc, dec.vertex[s]);
            kids.insert(kids.begin(), -1);
        } else {
            in[s] = in[kids[0]];
            table[s] = std::move(table[kids[0]]);
        }
        for (std::size_t i = 1; i < kids.size(); ++i) {
            table[s] = detail::count_join(g, in[s], in[kids[i]], table[s], table[kids[i]], st);
            for (int v = 0; v < g.n(); ++v) in[s][v] |= in[kids[i]][v];
            table[kids[i]].clear();
        }
    }
    auto it = table[r.root].find({});
    return it == table[r.root].end() ? BigInt(0) : it->second;
}

inline BigInt count_pm_decomp(const BipartiteGraph& b, const PMDecomposition& dec, CountStats* stats = nullptr) {
    return count_pm_decomp(to_graph(b), dec, stats);
}

// Computes a decomposition of bounded width and counts over it.
inline BigInt count_pm(const BipartiteGraph& b, const PMDecomposition* dec = nullptr, CountStats* stats = nullptr) {
    if (!has_perfect_matching(b)) return 0;
    if (dec) return count_pm_decomp(b, *dec, stats);
    return count_pm_decomp(b, compute_pmd(b).dec, stats);
}

}  // namespace mm

#endif
