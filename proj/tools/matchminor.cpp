// matchminor command-line front end.
// Exit codes: 0 success or "yes", 1 "no", 2 error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "matchminor.hpp"

using json = nlohmann::json;
using namespace mm;

namespace {

struct Globals {
    bool json_out = false;
    std::uint64_t seed = 1;
    int jobs = 1;
};

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw Error(Errc::Usage, "cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

void spill(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error(Errc::Usage, "cannot write " + path);
    out << text;
}

BipartiteGraph load_bigraph(const std::string& path) {
    std::istringstream in(slurp(path));
    return read_bigraph(in);
}

Digraph load_digraph(const std::string& path) {
    std::istringstream in(slurp(path));
    return read_digraph(in);
}

Matching load_matching(const std::string& path, const BipartiteGraph& b) {
    std::istringstream in(slurp(path));
    return read_matching(in, b);
}

std::string text_of(const BipartiteGraph& b) {
    std::ostringstream o;
    write_bigraph(o, b);
    return o.str();
}

std::string text_of(const Digraph& d) {
    std::ostringstream o;
    write_digraph(o, d);
    return o.str();
}

std::string text_of(const Matching& m) {
    std::ostringstream o;
    write_matching(o, m);
    return o.str();
}

json edges_json(const std::vector<Edge>& es) {
    json a = json::array();
    for (const auto& e : es) a.push_back({e.a + 1, e.b + 1});
    return a;
}

json ids_json(const VertexSet& s) {
    json a = json::array();
    for (int v : s) a.push_back(v + 1);
    return a;
}

json graph_json(const BipartiteGraph& b) {
    return {{"type", "b"}, {"n1", b.n1()}, {"n2", b.n2()}, {"edges", edges_json(b.edges())}};
}

json graph_json(const Digraph& d) {
    json a = json::array();
    for (auto [u, v] : d.arcs()) a.push_back({u + 1, v + 1});
    return {{"type", "d"}, {"n", d.n()}, {"arcs", a}};
}

json model_json(const BipartiteGraph& h, const MatchingMinorModel& mu) {
    json vm = json::object(), em = json::object();
    for (int v = 0; v < h.n(); ++v) vm[std::to_string(v + 1)] = ids_json(mu.vertex_models[v]);
    for (int i = 0; i < h.m(); ++i) {
        const auto& e = h.edges()[i];
        json p = json::array();
        for (int x : mu.edge_models[i]) p.push_back(x + 1);
        em[std::to_string(e.a + 1) + "-" + std::to_string(e.b + 1)] = p;
    }
    return {{"vertex_models", vm}, {"edge_models", em}};
}

json pmd_json(const PMDecomposition& dec) {
    json leaf = json::object();
    for (int t = 0; t < dec.size(); ++t)
        if (dec.vertex[t] >= 0) leaf[std::to_string(t)] = dec.vertex[t] + 1;
    return {{"tree", dec.adj}, {"leaf_map", leaf}, {"root", dec.root}};
}

PMDecomposition pmd_from_json(const json& j, int n) {
    PMDecomposition dec;
    try {
        dec.adj = j.at("tree").get<std::vector<std::vector<int>>>();
        dec.vertex.assign(dec.adj.size(), -1);
        for (auto& [k, v] : j.at("leaf_map").items()) {
            std::size_t t = std::stoul(k);
            if (t >= dec.vertex.size()) throw Error(Errc::InvalidDecomposition, "leaf id out of range");
            dec.vertex[t] = v.get<int>() - 1;
        }
        dec.root = j.value("root", -1);
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, std::string("decomposition JSON: ") + e.what());
    }
    require_leaf_tree(dec, n);
    return dec;
}

json dtd_json(const DirectedTreeDecomposition& dec) {
    json nodes = json::array();
    for (int t = 0; t < dec.size(); ++t)
        nodes.push_back({{"id", t}, {"parent", dec.parent[t]}, {"bag", ids_json(dec.bag[t])}, {"guard", ids_json(dec.guard[t])}});
    return {{"nodes", nodes}, {"root", dec.root}};
}

DirectedTreeDecomposition dtd_from_json(const json& j) {
    DirectedTreeDecomposition dec;
    try {
        const auto& nodes = j.at("nodes");
        dec.parent.assign(nodes.size(), -1);
        dec.bag.assign(nodes.size(), {});
        dec.guard.assign(nodes.size(), {});
        for (const auto& nd : nodes) {
            std::size_t t = nd.at("id").get<std::size_t>();
            if (t >= nodes.size()) throw Error(Errc::InvalidDecomposition, "node id out of range");
            dec.parent[t] = nd.at("parent").get<int>();
            for (int v : nd.at("bag").get<std::vector<int>>()) dec.bag[t].push_back(v - 1);
            for (int v : nd.value("guard", std::vector<int>{})) dec.guard[t].push_back(v - 1);
            std::sort(dec.bag[t].begin(), dec.bag[t].end());
            std::sort(dec.guard[t].begin(), dec.guard[t].end());
            if (dec.parent[t] < 0) dec.root = static_cast<int>(t);
        }
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, std::string("decomposition JSON: ") + e.what());
    }
    return dec;
}

VertexSet parse_ids(const std::string& s, int n) {
    VertexSet out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        int v = 0;
        try {
            v = std::stoi(tok);
        } catch (const std::exception&) {
            throw Error(Errc::Usage, "bad vertex id '" + tok + "'");
        }
        if (v < 1 || v > n) throw Error(Errc::Usage, "vertex id " + tok + " out of range");
        out.push_back(v - 1);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DappInstance parse_pairs(const std::string& s, const BipartiteGraph& b) {
    DappInstance inst;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) throw Error(Errc::Usage, "pair '" + tok + "' must be s:t");
        auto a = parse_ids(tok.substr(0, colon), b.n()), c = parse_ids(tok.substr(colon + 1), b.n());
        if (a.size() != 1 || c.size() != 1) throw Error(Errc::Usage, "pair '" + tok + "' must be s:t");
        inst.push_back({a[0], c[0]});
    }
    return inst;
}

// Decomposition for the dynamic programs: the pipeline when the exact
// directed treewidth search fits, otherwise a caterpillar.
PMDecomposition working_decomposition(const BipartiteGraph& b) {
    if (has_perfect_matching(b)) {
        try {
            return compute_pmd(b).dec;
        } catch (const Error& e) {
            if (e.code() != Errc::OracleLimitExceeded) throw;
        }
    }
    std::vector<int> order(b.n());
    for (int v = 0; v < b.n(); ++v) order[v] = v;
    return caterpillar(order);
}

// Result of a subcommand: text for humans, JSON for machines.
struct Report {
    int code = 0;
    std::string text;
    json j = json::object();
};

void emit(const Globals& g, const Report& r) {
    if (g.json_out) {
        json out = r.j;
        out["schema"] = 1;
        out["exit"] = r.code;
        std::cout << out.dump() << '\n';
    } else {
        std::cout << r.text;
    }
}

constexpr int kWidthCliLimit = 16;

std::string yes_no(bool b) { return b ? "yes\n" : "no\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Matching minors in bipartite graphs"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json_out, "emit a single JSON object");
    app.add_option("--seed", g.seed, "seed for randomized commands");
    app.add_option("--jobs", g.jobs, "worker count")->check(CLI::PositiveNumber);
    app.fallthrough();

    Report rep;
    std::function<void()> action;

    // gen ------------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate graphs")->require_subcommand(1);
    int gk = 0, gr = 0, gc = 0, gu = 0, gv = 0;
    std::string model_out, matching_out, hfile;
    auto* gen_cg = gen->add_subcommand("cg", "cylindrical matching grid CG_k");
    gen_cg->add_option("K", gk)->required()->check(CLI::PositiveNumber);
    gen_cg->add_option("--matching-out", matching_out, "write the canonical perfect matching");
    gen_cg->callback([&] {
        action = [&] {
            auto cg = cylindrical_grid(gk);
            if (!matching_out.empty()) spill(matching_out, text_of(cg.matching));
            rep.text = text_of(cg.graph);
            rep.j["graph"] = graph_json(cg.graph);
        };
    });
    auto* gen_cgq = gen->add_subcommand("cgq", "quadrangulated cylindrical grid");
    gen_cgq->add_option("K", gk)->required()->check(CLI::PositiveNumber);
    gen_cgq->add_option("--model", model_out, "write its model in CG_{3K} as JSON");
    gen_cgq->callback([&] {
        action = [&] {
            auto q = quadrangulation(gk);
            if (!model_out.empty()) spill(model_out, model_json(q.graph, model_cgq_in_cg3k(gk)).dump(1) + "\n");
            rep.text = text_of(q.graph);
            rep.j["graph"] = graph_json(q.graph);
        };
    });
    auto* gen_grid = gen->add_subcommand("grid", "R x C grid");
    gen_grid->add_option("R", gr)->required()->check(CLI::PositiveNumber);
    gen_grid->add_option("C", gc)->required()->check(CLI::PositiveNumber);
    gen_grid->add_option("--model", model_out, "write its model in the quadrangulated grid (R = C even)");
    gen_grid->callback([&] {
        action = [&] {
            auto sg = square_grid(gr, gc);
            if (!model_out.empty()) {
                if (gr != gc) throw Error(Errc::Usage, "--model needs a square grid");
                auto sm = square_grid_model(gr);
                json j = model_json(sg, sm.model);
                j["switched_matching"] = edges_json(sm.switched);
                spill(model_out, j.dump(1) + "\n");
            }
            rep.text = text_of(sg);
            rep.j["graph"] = graph_json(sg);
        };
    });
    auto* gen_ep = gen->add_subcommand("ep-gadget", "Erdos-Posa gadget D_{H,k}");
    gen_ep->add_option("HFILE", hfile)->required();
    gen_ep->add_option("U", gu)->required();
    gen_ep->add_option("V", gv)->required();
    gen_ep->add_option("K", gk)->required()->check(CLI::PositiveNumber);
    gen_ep->callback([&] {
        action = [&] {
            auto h = load_digraph(hfile);
            if (gu < 1 || gv < 1 || gu > h.n() || gv > h.n()) throw Error(Errc::Usage, "arc endpoint out of range");
            auto d = ep_gadget(h, {gu - 1, gv - 1}, gk);
            rep.text = text_of(d);
            rep.j["graph"] = graph_json(d);
        };
    });
    auto* gen_random = gen->add_subcommand("random", "random graph");
    int rn1 = 4, rn2 = -1;
    double rp = 0.5;
    bool rpm = false, rdig = false;
    gen_random->add_option("N", rn1, "left side size (vertex count for --digraph)")->required()->check(CLI::NonNegativeNumber);
    gen_random->add_option("--n2", rn2, "right side size (default N)");
    gen_random->add_option("-p,--p", rp, "edge probability")->check(CLI::Range(0.0, 1.0));
    gen_random->add_flag("--pm", rpm, "plant a perfect matching");
    gen_random->add_flag("--digraph", rdig, "random digraph instead");
    gen_random->callback([&] {
        action = [&] {
            std::mt19937_64 rng(g.seed);
            if (rdig) {
                auto d = random_digraph(rn1, rp, rng);
                rep.text = text_of(d);
                rep.j["graph"] = graph_json(d);
                return;
            }
            int n2 = rn2 < 0 ? rn1 : rn2;
            if (rpm && n2 != rn1) throw Error(Errc::Usage, "--pm needs equal sides");
            auto b = random_bigraph(rn1, n2, rp, rng, rpm);
            rep.text = text_of(b);
            rep.j["graph"] = graph_json(b);
        };
    });

    // pm ---------------------------------------------------------------------
    auto* pm = app.add_subcommand("pm", "perfect matchings")->require_subcommand(1);
    std::string bfile, decomp_file, dtd_file, out_file;
    bool oracle = false;
    auto* pm_count = pm->add_subcommand("count", "count perfect matchings");
    pm_count->add_option("BFILE", bfile)->required();
    pm_count->add_option("--decomp", decomp_file, "decomposition JSON");
    pm_count->add_flag("--oracle", oracle, "use the exhaustive oracle");
    pm_count->callback([&] {
        action = [&] {
            auto b = load_bigraph(bfile);
            BigInt c;
            CountStats st;
            if (oracle) {
                c = count_pm_bruteforce(b);
            } else if (!decomp_file.empty()) {
                auto dec = pmd_from_json(json::parse(slurp(decomp_file)), b.n());
                c = count_pm_decomp(b, dec, &st);
            } else {
                c = count_pm_decomp(b, working_decomposition(b), &st);
            }
            rep.text = c.str() + "\n";
            rep.j["count"] = c.str();
            rep.j["operations"] = st.operations;
        };
    });
    auto* pm_width = pm->add_subcommand("width", "perfect matching width");
    pm_width->add_option("BFILE", bfile)->required();
    pm_width->callback([&] {
        action = [&] {
            auto b = load_bigraph(bfile);
            if (!has_perfect_matching(b)) throw Error(Errc::NoPerfectMatching, "graph has no perfect matching");
            if (b.n() <= kWidthCliLimit) {
                auto ex = pmw_exact_small(b, kWidthCliLimit);
                rep.text = "pmw " + std::to_string(ex.width) + "\n";
                rep.j["pmw"] = ex.width;
                rep.j["exact"] = true;
                rep.j["decomposition"] = pmd_json(ex.dec);
            } else {
                // too large for the subset search: report the pipeline's upper bound
                auto r = compute_pmd(b);
                rep.text = "pmw <= " + std::to_string(r.width) + "\n";
                rep.j["pmw_upper"] = r.width;
                rep.j["exact"] = false;
                rep.j["decomposition"] = pmd_json(r.dec);
            }
        };
    });
    auto* pm_decomp = pm->add_subcommand("decomp", "decomposition via a directed tree-decomposition");
    pm_decomp->add_option("BFILE", bfile)->required();
    pm_decomp->add_option("--dtd", dtd_file, "directed tree-decomposition JSON of the M-direction");
    pm_decomp->add_option("--out", out_file, "write the decomposition JSON");
    pm_decomp->callback([&] {
        action = [&] {
            auto b = load_bigraph(bfile);
            PmdResult r;
            if (!dtd_file.empty()) {
                auto dtd = dtd_from_json(json::parse(slurp(dtd_file)));
                r = compute_pmd(b, &dtd);
            } else {
                r = compute_pmd(b);
            }
            json dj = pmd_json(r.dec);
            if (!out_file.empty()) spill(out_file, dj.dump(1) + "\n");
            rep.text = "width " + std::to_string(r.width) + "\ndtd_width " + std::to_string(r.dtd_width) + "\n";
            rep.j["width"] = r.width;
            rep.j["dtd_width"] = r.dtd_width;
            rep.j["matching"] = edges_json(r.matching);
            rep.j["decomposition"] = dj;
        };
    });

    // cut / guard ----------------------------------------------------------
    std::string shore, mfile;
    auto* cut = app.add_subcommand("cut", "cut parameters")->require_subcommand(1);
    auto* cut_por = cut->add_subcommand("porosity", "matching porosity of a cut");
    cut_por->add_option("BFILE", bfile)->required();
    cut_por->add_option("--shore", shore, "comma-separated vertex ids")->required();
    cut_por->callback([&] {
        action = [&] {
            auto b = load_bigraph(bfile);
            auto x = parse_ids(shore, b.n());
            auto m = max_porosity_matching(b, x);
            int k = count_in_cut(b, x, m);
            rep.text = std::to_string(k) + "\n";
            rep.j["porosity"] = k;
            rep.j["matching"] = edges_json(m);
        };
    });
    auto* guard = app.add_subcommand("guard", "guarding set for a cut");
    guard->add_option("BFILE", bfile)->required();
    guard->add_option("--shore", shore, "comma-separated vertex ids")->required();
    guard->add_option("--matching", mfile, "perfect matching file (default: maximum porosity)");
    guard->callback([&] {
        action = [&] {
            auto b = load_bigraph(bfile);
            auto x = parse_ids(shore, b.n());
            Matching m = mfile.empty() ? max_porosity_matching(b, x) : load_matching(mfile, b);
            int k = matching_porosity(b, x);
            auto gs = guarding_set(b, m, x);
            bool ok = verify_guard(b, m, x, gs.f);
            rep.code = ok ? 0 : 2;
            rep.text = text_of(gs.f);
            rep.j["guard"] = edges_json(gs.f);
            rep.j["porosity"] = k;
            rep.j["bound"] = 2 * k + k * k;
            rep.j["verified"] = ok;
        };
    });

    // dapp -------------------------------------------------------------------
    std::string pairs, witness_file;
    auto* dapp = app.add_subcommand("dapp", "k disjoint alternating paths");
    dapp->add_option("BFILE", bfile)->required();
    dapp->add_option("--pairs", pairs, "s1:t1,s2:t2 (s in V1, t in V2)")->required();
    dapp->add_option("--extend", mfile, "matching the solution must extend");
    dapp->add_option("--witness", witness_file, "write the witness JSON");
    dapp->add_flag("--oracle", oracle, "use the exhaustive oracle");
    dapp->callback([&] {
        action = [&] {
            auto b = load_bigraph(bfile);
            auto inst = parse_pairs(pairs, b);
            DappSolution sol;
            bool yes = false;
            if (oracle) {
                Matching f = mfile.empty() ? Matching{} : load_matching(mfile, b);
                yes = dapp_bruteforce(b, inst, &sol, f);
            } else if (!mfile.empty()) {
                yes = dapp_solve_extending(b, inst, load_matching(mfile, b), working_decomposition(b), &sol);
            } else {
                yes = dapp_solve(b, inst, working_decomposition(b), &sol);
            }
            rep.code = yes ? 0 : 1;
            rep.text = yes_no(yes);
            rep.j["answer"] = yes;
            if (yes) {
                json w = {{"schema", 1}, {"matching", edges_json(sol.matching)}, {"paths", json::array()}};
                for (const auto& p : sol.paths) w["paths"].push_back(ids_json(p));
                rep.j["witness"] = w;
                if (!witness_file.empty()) spill(witness_file, w.dump(1) + "\n");
            }
        };
    });

    // minors -----------------------------------------------------------------
    std::string hfile2, dfile;
    auto* minor = app.add_subcommand("minor", "matching minor containment");
    minor->add_option("BFILE", bfile)->required();
    minor->add_option("HFILE", hfile2)->required();
    minor->add_flag("--oracle", oracle, "use the exhaustive oracle");
    minor->add_option("--witness", witness_file, "write the model JSON");
    minor->callback([&] {
        action = [&] {
            auto b = load_bigraph(bfile);
            auto h = load_bigraph(hfile2);
            MatchingMinorModel mu;
            bool yes = oracle ? matching_minor_bruteforce(b, h, &mu) : matching_minor_check(b, h, working_decomposition(b), &mu);
            rep.code = yes ? 0 : 1;
            rep.text = yes_no(yes);
            rep.j["answer"] = yes;
            if (yes) {
                json mj = model_json(h, mu);
                rep.j["model"] = mj;
                if (!witness_file.empty()) spill(witness_file, mj.dump(1) + "\n");
            }
        };
    });
    auto* bminor = app.add_subcommand("bminor", "butterfly minor containment");
    bminor->add_option("DFILE", dfile)->required();
    bminor->add_option("HFILE", hfile2)->required();
    bminor->callback([&] {
        action = [&] {
            bool yes = butterfly_minor_bruteforce(load_digraph(dfile), load_digraph(hfile2));
            rep.code = yes ? 0 : 1;
            rep.text = yes_no(yes);
            rep.j["answer"] = yes;
        };
    });
    std::string jfile;
    auto* anti = app.add_subcommand("antichain", "membership in the fundamental anti-chain of D");
    anti->add_option("JFILE", jfile)->required();
    anti->add_option("DFILE", dfile)->required();
    anti->callback([&] {
        action = [&] {
            bool yes = antichain_member(load_digraph(jfile), load_digraph(dfile));
            rep.code = yes ? 0 : 1;
            rep.text = yes_no(yes);
            rep.j["answer"] = yes;
        };
    });
    auto* sp = app.add_subcommand("strongplanar", "strong planarity");
    sp->add_option("DFILE", dfile)->required();
    sp->callback([&] {
        action = [&] {
            bool yes = is_strongly_planar(load_digraph(dfile));
            rep.code = yes ? 0 : 1;
            rep.text = yes_no(yes);
            rep.j["answer"] = yes;
        };
    });

    // directed width -----------------------------------------------------------
    auto* dtw = app.add_subcommand("dtw", "exact directed treewidth certificate");
    dtw->add_option("DFILE", dfile)->required();
    dtw->add_option("--out", out_file, "write the decomposition JSON");
    dtw->callback([&] {
        action = [&] {
            auto r = dtw_exact_small(load_digraph(dfile));
            json dj = dtd_json(r.dec);
            if (!out_file.empty()) spill(out_file, dj.dump(1) + "\n");
            rep.text = "cop_number " + std::to_string(r.cop_number) + "\nwidth " + std::to_string(r.width) + "\n";
            rep.j["cop_number"] = r.cop_number;
            rep.j["width"] = r.width;
            rep.j["decomposition"] = dj;
        };
    });
    auto* cops = app.add_subcommand("cops", "cops and robber along a cycle decomposition");
    cops->add_option("DFILE", dfile)->required();
    cops->add_option("--decomp", decomp_file, "cycle decomposition JSON (default: optimal)");
    cops->callback([&] {
        action = [&] {
            auto d = load_digraph(dfile);
            CycleDecomposition dec;
            if (decomp_file.empty()) dec = cycw_exact_small(d).dec;
            else dec = pmd_from_json(json::parse(slurp(decomp_file)), d.n());
            int k = cycd_width(d, dec);
            auto tr = cops_play(d, dec);
            const int bound = 6 * k * k + 12 * k;
            rep.code = tr.captured && tr.max_cops <= bound ? 0 : 1;
            rep.text = std::string(tr.captured ? "captured" : "escaped") + " with " + std::to_string(tr.max_cops) +
                       " cops (bound " + std::to_string(bound) + ")\n";
            json rounds = json::array();
            for (const auto& r : tr.rounds) rounds.push_back({{"cops", ids_json(r.cops)}, {"robber", ids_json(r.robber)}});
            rep.j["captured"] = tr.captured;
            rep.j["max_cops"] = tr.max_cops;
            rep.j["cycle_width"] = k;
            rep.j["bound"] = bound;
            rep.j["rounds"] = rounds;
        };
    });

    // structure ------------------------------------------------------------------
    auto* dir = app.add_subcommand("direction", "M-direction of a bipartite graph");
    dir->add_option("BFILE", bfile)->required();
    dir->add_option("--matching", mfile, "perfect matching file (default: any)");
    dir->callback([&] {
        action = [&] {
            auto b = load_bigraph(bfile);
            Matching m;
            if (mfile.empty()) {
                auto pmm = perfect_matching(b);
                if (!pmm) throw Error(Errc::NoPerfectMatching, "graph has no perfect matching");
                m = *pmm;
            } else {
                m = load_matching(mfile, b);
            }
            auto md = m_direction(b, m);
            rep.text = text_of(md.digraph);
            rep.j["graph"] = graph_json(md.digraph);
            rep.j["tags"] = edges_json(md.tag);
        };
    });
    auto* spl = app.add_subcommand("split", "split of a digraph");
    spl->add_option("DFILE", dfile)->required();
    spl->add_option("--matching-out", matching_out, "write the split matching");
    spl->callback([&] {
        action = [&] {
            auto s = split(load_digraph(dfile));
            if (!matching_out.empty()) spill(matching_out, text_of(s.matching));
            rep.text = text_of(s.graph);
            rep.j["graph"] = graph_json(s.graph);
            rep.j["matching"] = edges_json(s.matching);
        };
    });
    int colour = 1;
    auto* dm = app.add_subcommand("dm", "elementary components and the Dulmage-Mendelsohn order");
    dm->add_option("BFILE", bfile)->required();
    dm->add_option("--colour", colour, "colour class for the order")->check(CLI::Range(1, 2));
    dm->callback([&] {
        action = [&] {
            auto s = dm_order(load_bigraph(bfile), colour);
            auto lin = linearize(s);
            std::ostringstream o;
            json comps = json::array(), rel = json::array();
            for (std::size_t k = 0; k < s.components.size(); ++k) {
                comps.push_back(ids_json(s.components[k]));
                o << "K" << k + 1 << ":";
                for (int v : s.components[k]) o << ' ' << v + 1;
                o << '\n';
                for (std::size_t l = 0; l < s.components.size(); ++l)
                    if (k != l && s.leq[k][l]) rel.push_back({k + 1, l + 1});
            }
            o << "order:";
            json order = json::array();
            for (int k : lin) {
                o << " K" << k + 1;
                order.push_back(k + 1);
            }
            o << '\n';
            rep.text = o.str();
            rep.j["components"] = comps;
            rep.j["leq"] = rel;
            rep.j["order"] = order;
        };
    });
    auto* ears = app.add_subcommand("ears", "ear decomposition of a matching covered graph");
    ears->add_option("BFILE", bfile)->required();
    ears->callback([&] {
        action = [&] {
            auto st = ear_decomposition(load_bigraph(bfile));
            std::ostringstream o;
            json a = json::array();
            for (const auto& s : st) {
                for (std::size_t i = 0; i < s.ear.size(); ++i) o << (i ? " " : "") << s.ear[i] + 1;
                o << '\n';
                a.push_back(ids_json(s.ear));
            }
            rep.text = o.str();
            rep.j["ears"] = a;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    try {
        if (!action) throw Error(Errc::Usage, "no command");
        action();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        if (g.json_out) std::cout << json{{"schema", 1}, {"exit", 2}, {"error", errc_name(e.code())}, {"message", e.what()}}.dump() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    emit(g, rep);
    return rep.code;
}
