#ifndef MATCHMINOR_TESTS_FIXTURES_HPP
#define MATCHMINOR_TESTS_FIXTURES_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "matchminor.hpp"

namespace fx {

using namespace mm;

// C_{2n}: a_i = i, b_i = n + i, edges a_i b_i and b_i a_{i+1}.
inline BipartiteGraph cycle(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) {
        es.push_back({i, n + i});
        if (n > 1) es.push_back({(i + 1) % n, n + i});
    }
    return BipartiteGraph(n, n, es);
}

inline Matching cycle_pm(int n) {
    Matching m;
    for (int i = 0; i < n; ++i) m.push_back({i, n + i});
    return m;
}

// Path a_1 b_1 a_2 b_2 ... a_n b_n.
inline BipartiteGraph path(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) {
        es.push_back({i, n + i});
        if (i + 1 < n) es.push_back({i + 1, n + i});
    }
    return BipartiteGraph(n, n, es);
}

inline BipartiteGraph complete(int n1, int n2) {
    std::vector<Edge> es;
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v) es.push_back({u, n1 + v});
    return BipartiteGraph(n1, n2, es);
}

inline BipartiteGraph k2() { return complete(1, 1); }
inline BipartiteGraph k33() { return complete(3, 3); }

inline BipartiteGraph two_c4() {
    return BipartiteGraph(4, 4, {{0, 4}, {0, 5}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 6}, {3, 7}});
}

inline Digraph dicycle(int n) {
    std::vector<Arc> a;
    for (int i = 0; i < n; ++i) a.push_back({i, (i + 1) % n});
    return Digraph(n, a);
}

inline Digraph bidirected_complete(int n) {
    std::vector<Arc> a;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) a.push_back({u, v});
    return Digraph(n, a);
}

inline Digraph bidirected_cycle(int n) {
    std::vector<Arc> a;
    for (int i = 0; i < n; ++i) {
        a.push_back({i, (i + 1) % n});
        a.push_back({(i + 1) % n, i});
    }
    return Digraph(n, a);
}

inline Digraph dipath(int n) {
    std::vector<Arc> a;
    for (int i = 0; i + 1 < n; ++i) a.push_back({i, i + 1});
    return Digraph(n, a);
}

inline Digraph transitive_tournament(int n) {
    std::vector<Arc> a;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) a.push_back({u, v});
    return Digraph(n, a);
}

// Every connected bipartite graph with a perfect matching on up to ten
// vertices, one per isomorphism class.
inline std::vector<BipartiteGraph> corpus(int max_n = 10) {
    std::ifstream in(MATCHMINOR_TEST_DATA "/corpus.txt");
    if (!in) throw std::runtime_error("corpus file missing");
    std::vector<BipartiteGraph> out;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        int n1 = 0, n2 = 0, a = 0, b = 0;
        ss >> n1 >> n2;
        std::vector<Edge> es;
        while (ss >> a >> b) es.push_back({a, b});
        if (n1 + n2 <= max_n) out.emplace_back(n1, n2, es);
    }
    return out;
}

}  // namespace fx

#endif
