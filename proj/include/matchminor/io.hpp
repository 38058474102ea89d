#ifndef MATCHMINOR_IO_HPP
#define MATCHMINOR_IO_HPP

// Text formats. Ids are 1-based on disk and 0-based in memory.
//   b <n1> <n2>   then   e <u> <v>   (u in 1..n1, v in n1+1..n1+n2)
//   d <n>         then   a <u> <v>
//   m             then   e <u> <v>
// Blank lines and lines starting with '#' are skipped.

#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bigraph.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace mm {

namespace detail {

struct LineReader {
    std::istream& in;
    int line_no = 0;

    // Next significant line split into tokens; false at end of input.
    bool next(std::vector<std::string>& tok) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream ss(line);
            tok.clear();
            std::string t;
            while (ss >> t) tok.push_back(t);
            if (tok.empty() || tok[0][0] == '#') continue;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": " + msg);
    }
    long long number(const std::string& s) const {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            fail("expected an integer, got '" + s + "'");
        }
        if (pos != s.size()) fail("expected an integer, got '" + s + "'");
        return v;
    }
};

inline BipartiteGraph read_bigraph_body(LineReader& r, const std::vector<std::string>& head) {
    if (head.size() != 3) r.fail("header must be 'b <n1> <n2>'");
    long long n1 = r.number(head[1]), n2 = r.number(head[2]);
    if (n1 < 0 || n2 < 0 || n1 + n2 > 1000000) r.fail("bad vertex counts");
    std::vector<Edge> es;
    std::set<std::pair<long long, long long>> seen;
    std::vector<std::string> tok;
    while (r.next(tok)) {
        if (tok[0] != "e" || tok.size() != 3) r.fail("expected 'e <u> <v>'");
        long long u = r.number(tok[1]), v = r.number(tok[2]);
        if (u < 1 || u > n1) r.fail("left id " + tok[1] + " out of range");
        if (v <= n1 || v > n1 + n2) r.fail("right id " + tok[2] + " out of range");
        if (!seen.insert({u, v}).second) r.fail("duplicate edge");
        es.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1)});
    }
    return BipartiteGraph(static_cast<int>(n1), static_cast<int>(n2), es);
}

inline Digraph read_digraph_body(LineReader& r, const std::vector<std::string>& head) {
    if (head.size() != 2) r.fail("header must be 'd <n>'");
    long long n = r.number(head[1]);
    if (n < 0 || n > 1000000) r.fail("bad vertex count");
    std::vector<Arc> arcs;
    std::set<std::pair<long long, long long>> seen;
    std::vector<std::string> tok;
    while (r.next(tok)) {
        if (tok[0] != "a" || tok.size() != 3) r.fail("expected 'a <u> <v>'");
        long long u = r.number(tok[1]), v = r.number(tok[2]);
        if (u < 1 || u > n || v < 1 || v > n) r.fail("arc endpoint out of range");
        if (u == v) r.fail("loop");
        if (!seen.insert({u, v}).second) r.fail("parallel arc");
        arcs.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1)});
    }
    return Digraph(static_cast<int>(n), arcs);
}

}  // namespace detail

using AnyGraph = std::variant<BipartiteGraph, Digraph>;

// Dispatches on the header letter.
inline AnyGraph read_graph(std::istream& in) {
    detail::LineReader r{in};
    std::vector<std::string> head;
    if (!r.next(head)) r.fail("empty input");
    if (head[0] == "b") return detail::read_bigraph_body(r, head);
    if (head[0] == "d") return detail::read_digraph_body(r, head);
    r.fail("unknown header '" + head[0] + "'");
}

inline BipartiteGraph read_bigraph(std::istream& in) {
    auto g = read_graph(in);
    if (!std::holds_alternative<BipartiteGraph>(g)) throw Error(Errc::ParseError, "line 1: expected a 'b' graph");
    return std::get<BipartiteGraph>(std::move(g));
}

inline Digraph read_digraph(std::istream& in) {
    auto g = read_graph(in);
    if (!std::holds_alternative<Digraph>(g)) throw Error(Errc::ParseError, "line 1: expected a 'd' digraph");
    return std::get<Digraph>(std::move(g));
}

// Matching edges must be edges of b.
inline Matching read_matching(std::istream& in, const BipartiteGraph& b) {
    detail::LineReader r{in};
    std::vector<std::string> tok;
    if (!r.next(tok) || tok.size() != 1 || tok[0] != "m") r.fail("header must be 'm'");
    Matching m;
    while (r.next(tok)) {
        if (tok[0] != "e" || tok.size() != 3) r.fail("expected 'e <u> <v>'");
        long long u = r.number(tok[1]), v = r.number(tok[2]);
        if (u > v) std::swap(u, v);
        if (u < 1 || v > b.n() || !b.has_edge(static_cast<int>(u - 1), static_cast<int>(v - 1)))
            r.fail("not an edge of the graph");
        m.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1)});
    }
    normalize(m);
    if (!is_matching(b, m)) throw Error(Errc::InvalidMatching, "edges share an endpoint");
    return m;
}

inline AnyGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

inline void write_bigraph(std::ostream& out, const BipartiteGraph& b) {
    out << "b " << b.n1() << ' ' << b.n2() << '\n';
    for (const auto& e : b.edges()) out << "e " << e.a + 1 << ' ' << e.b + 1 << '\n';
}

inline void write_digraph(std::ostream& out, const Digraph& d) {
    out << "d " << d.n() << '\n';
    for (auto [u, v] : d.arcs()) out << "a " << u + 1 << ' ' << v + 1 << '\n';
}

inline void write_matching(std::ostream& out, const Matching& m) {
    out << "m\n";
    for (const auto& e : m) out << "e " << e.a + 1 << ' ' << e.b + 1 << '\n';
}

}  // namespace mm

#endif
