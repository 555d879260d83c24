// SPDX-License-Identifier: Apache-2.0

// Property-based acceptance suite. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "lichor/bipartite.hpp"
#include "lichor/clique.hpp"
#include "lichor/errors.hpp"
#include "lichor/format.hpp"
#include "lichor/generate.hpp"
#include "lichor/invariants.hpp"
#include "lichor/solve.hpp"
#include "lichor/structure.hpp"
#include "lichor/transversal.hpp"
#include "lichor/verify.hpp"

using namespace lichor;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int id, const char* title, const Outcome& o) {
    std::printf("criterion %d %s: %s (%s)\n", id, title, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// Per-check evaluation and violation totals gathered across runs. Violations
// are also counted from InvariantErrors, whose log dies with the solve call.
struct Tally {
    InvariantLog log;
    std::map<Check, std::size_t> thrown;

    std::size_t violations(Check c) const {
        auto it = thrown.find(c);
        return log.violated(c) + (it == thrown.end() ? 0 : it->second);
    }
};

// ---------------------------------------------------------------- corpus

struct Case {
    Instance inst;
    std::size_t chi = 0;
    std::size_t blocks = 0;
};

std::vector<Case> main_corpus() {
    std::vector<Case> out;
    Rng rng(20240601);
    for (std::size_t i = 0; out.size() < 200; ++i) {
        GenParams p;
        p.seed = 1000 + i;
        p.block_count = (out.size() % 2 == 0) ? 2 + uniform(rng, 0, 2) : 1;
        p.max_multiplicity = 1 + uniform(rng, 0, 2);
        p.max_centers = 1 + uniform(rng, 0, 3);
        p.max_edges = 14;
        Multigraph g = gen_line_perfect(p);
        const std::size_t chi = chromatic_index(g);
        const std::size_t blocks = decompose_blocks(g).blocks.size();
        out.push_back({{std::move(g), ColorLists()}, chi, blocks});
    }
    return out;
}

// ---------------------------------------------------------------- criteria

Outcome criterion_formula() {
    const auto t0 = Clock::now();
    Rng rng(7);
    std::size_t graphs = 0, mismatches = 0;
    std::string first;
    for (std::uint64_t seed = 0; graphs < 600; ++seed) {
        GenParams p;
        p.seed = seed;
        p.block_count = 1 + uniform(rng, 0, 2);
        p.max_multiplicity = 1 + uniform(rng, 0, 2);
        p.max_centers = 1 + uniform(rng, 0, 3);
        p.max_edges = 8;
        const Multigraph g = gen_line_perfect(p);
        const std::size_t formula = chromatic_index(g);
        const std::size_t oracle = brute_force_chi(g);
        ++graphs;
        if (formula != oracle) {
            if (mismatches++ == 0) first = fmt("seed %llu: formula %zu oracle %zu",
                                              static_cast<unsigned long long>(seed), formula, oracle);
        }
    }
    const double secs = seconds_since(t0);
    Outcome o;
    o.pass = mismatches == 0 && secs < 60.0;
    o.detail = fmt("%zu graphs, %zu mismatches, %.2fs", graphs, mismatches, secs);
    if (!first.empty()) o.detail += "; first " + first;
    return o;
}

struct MainRun {
    Outcome coloring;
    Outcome determinism;
};

MainRun criterion_main(const std::vector<Case>& corpus, Tally& tally) {
    const auto t0 = Clock::now();
    Rng rng(99);
    std::size_t runs = 0, ok = 0, multi = 0, max_edges = 0;
    std::size_t det_checked = 0, det_diff = 0;
    std::string first;
    SolveOptions opts;
    opts.fallback = false;

    for (const auto& c : corpus) {
        if (c.blocks >= 2) ++multi;
        max_edges = std::max(max_edges, c.inst.graph.edge_count());
        for (int k = 0; k < 20; ++k) {
            Instance inst{c.inst.graph, k == 0 ? identical_lists(c.inst.graph, c.chi)
                                               : random_lists(c.inst.graph, c.chi, 2 * c.chi, rng)};
            ++runs;
            std::string why;
            try {
                const SolveReport r = solve(inst, opts);
                tally.log.merge(r.log);
                const auto v = verify_coloring(inst.graph, inst.graph.all_edges(), inst.lists,
                                               r.coloring);
                if (!v.ok) why = "verify: " + v.message;
                else if (!r.conforming) why = "non-conforming";
                else ++ok;
                if (k < 2) {
                    ++det_checked;
                    const SolveReport again = solve(inst, opts);
                    if (emit_report(again) != emit_report(r)) ++det_diff;
                }
            } catch (const InvariantError& e) {
                ++tally.thrown[e.check()];
                why = e.what();
            } catch (const std::exception& e) {
                why = e.what();
            }
            if (!why.empty() && first.empty()) first = emit_instance(inst) + " -> " + why;
        }
    }
    const double secs = seconds_since(t0);
    MainRun m;
    m.coloring.pass = ok == runs && runs >= 4000 && multi * 2 >= corpus.size() && max_edges <= 14 &&
                     secs < 300.0;
    m.coloring.detail = fmt("%zu graphs (%zu with >=2 blocks, <=%zu edges), %zu/%zu runs colored, "
                           "%.2fs",
                           corpus.size(), multi, max_edges, ok, runs, secs);
    if (!first.empty()) m.coloring.detail += "; first failure " + first;
    m.determinism.pass = det_checked > 0 && det_diff == 0;
    m.determinism.detail = fmt("%zu repeated solves, %zu differing reports", det_checked, det_diff);
    return m;
}

Outcome criterion_galvin(const Tally& tally) {
    Outcome o;
    const std::size_t ev = tally.log.evaluated(Check::GalvinOutdegree);
    const std::size_t bad = tally.violations(Check::GalvinOutdegree);
    o.pass = ev > 0 && bad == 0;
    o.detail = fmt("%zu out-degree checks, %zu violations", ev, bad);
    return o;
}

Outcome criterion_kernel() {
    const auto t0 = Clock::now();
    Rng rng(4242);
    std::size_t subsets = 0, failures_k = 0;
    for (std::uint64_t seed = 0; subsets < 1000; ++seed) {
        GenParams p;
        p.seed = 50000 + seed;
        p.block_count = 1;
        p.max_multiplicity = 1 + uniform(rng, 0, 2);
        p.weights = {1, 0, 0};
        p.max_edges = 16;
        const Multigraph g = gen_line_perfect(p);
        const EdgeSet block = g.all_edges();
        const auto bip = bipartition_of(g, block);
        if (!bip) return {false, "generator produced a non-bipartite block"};
        EdgeColoring c = konig_color(g, block, *bip);
        const auto verts = vertices_of(g, block);
        c = normalize_at(c, g, block, verts[uniform(rng, 0, verts.size() - 1)]);
        const LineOrientation d(g, block, *bip, c);
        for (int k = 0; k < 10; ++k) {
            std::vector<EdgeId> pick;
            for (EdgeId e : block)
                if (uniform(rng, 0, 3) != 0) pick.push_back(e);
            const EdgeSet active(std::move(pick));
            ++subsets;
            if (!verify_kernel(d, active, find_kernel(d, active))) ++failures_k;
        }
    }
    const double secs = seconds_since(t0);
    return {failures_k == 0 && secs < 30.0,
            fmt("%zu active subsets, %zu rejected kernels, %.2fs", subsets, failures_k, secs)};
}

// Random multigraph with lists pruned until no reducing set remains.
Instance transversal_instance(Rng& rng) {
    const std::size_t n = 2 + uniform(rng, 0, 3);
    const std::size_t m = 1 + uniform(rng, 0, 9);
    std::vector<Endpoints> ends;
    for (std::size_t i = 0; i < m; ++i) {
        VertexId u = static_cast<VertexId>(uniform(rng, 0, n - 1));
        VertexId v = static_cast<VertexId>(uniform(rng, 0, n - 2));
        if (v >= u) ++v;
        ends.push_back({u, v});
    }
    Multigraph g(n, std::move(ends));
    const std::size_t universe = 2 + uniform(rng, 0, 6);
    std::vector<std::vector<Color>> raw(m);
    for (auto& l : raw) {
        const std::size_t size = uniform(rng, 0, 4);
        for (std::size_t k = 0; k < size; ++k) l.push_back(1 + uniform(rng, 0, universe - 1));
    }
    ColorLists lists(std::move(raw));
    for (EdgeId e = 0; e < m; ++e)
        for (EdgeId q = e + 1; q < m; ++q)
            if (!line_adjacent(g, e, q))
                lists.remove_colors(EdgeSet{q}, lists[e]);
    return {std::move(g), std::move(lists)};
}

Outcome criterion_hall() {
    Rng rng(8080);
    std::size_t instances = 0, feasible = 0, disagree = 0, bad_violator = 0, bad_coloring = 0;
    while (instances < 1500) {
        const Instance inst = transversal_instance(rng);
        const EdgeSet all = inst.graph.all_edges();
        if (has_reducing_set(inst.graph, all, inst.lists)) return {false, "pruning left a reducing set"};
        ++instances;
        const SdrResult r = solve_sdr(inst.graph, all, inst.lists);
        const auto oracle = brute_force_list_color(inst.graph, all, inst.lists);
        if (oracle) ++feasible;
        if (std::holds_alternative<EdgeColoring>(r) != oracle.has_value()) ++disagree;
        if (const auto* c = std::get_if<EdgeColoring>(&r)) {
            if (!verify_coloring(inst.graph, all, inst.lists, *c).ok) ++bad_coloring;
        } else {
            const auto& h = std::get<HallViolator>(r);
            ColorSet direct;
            for (EdgeId e : h.edges) direct = color_union(direct, inst.lists[e]);
            if (!(h.edges.size() > direct.size()) || direct != h.colors) ++bad_violator;
        }
    }
    return {disagree == 0 && bad_violator == 0 && bad_coloring == 0,
            fmt("%zu instances (%zu feasible), %zu disagreements, %zu bad violators, %zu bad "
                "colorings",
                instances, feasible, disagree, bad_violator, bad_coloring)};
}

Outcome criterion_four_vertex(Tally& tally) {
    Rng rng(31337);
    std::size_t graphs = 0, runs = 0, ok = 0;
    std::string first;
    while (graphs < 300) {
        const std::size_t m = 1 + uniform(rng, 0, 6);
        std::vector<Endpoints> ends;
        for (std::size_t i = 0; i < m; ++i) {
            VertexId u = static_cast<VertexId>(uniform(rng, 0, 3));
            VertexId v = static_cast<VertexId>(uniform(rng, 0, 2));
            if (v >= u) ++v;
            ends.push_back({u, v});
        }
        const Multigraph g(4, std::move(ends));
        const std::size_t chi = chromatic_index(g);
        ++graphs;
        for (int k = 0; k < 20; ++k) {
            const ColorLists lists = random_lists(g, chi, 2 * chi, rng);
            const VertexId v = static_cast<VertexId>(uniform(rng, 0, 3));
            ++runs;
            std::string why;
            try {
                InvariantLog log;
                const Induction r = solve_k4(g, g.all_edges(), v, lists, log);
                tally.log.merge(log);
                const auto check = verify_coloring(g, g.all_edges(), lists, r.coloring);
                if (check.ok) ++ok;
                else why = check.message;
            } catch (const InvariantError& e) {
                ++tally.thrown[e.check()];
                why = e.what();
            } catch (const std::exception& e) {
                why = e.what();
            }
            if (!why.empty() && first.empty())
                first = emit_instance({g, lists}) + " v=" + std::to_string(v) + " -> " + why;
        }
    }
    Outcome o{ok == runs, fmt("%zu graphs, %zu/%zu runs colored", graphs, ok, runs)};
    if (!first.empty()) o.detail += "; first failure " + first;
    return o;
}

Outcome criterion_invariants(const Tally& tally) {
    const Check checks[] = {Check::Degab, Check::GreatExclusive, Check::SortedGreat,
                            Check::BigGreatMonotone, Check::WeakBounds, Check::SplittingPersist};
    Outcome o;
    for (Check c : checks) {
        const std::size_t bad = tally.violations(c);
        if (bad) o.pass = false;
        if (!o.detail.empty()) o.detail += ", ";
        o.detail += fmt("%s %zu/%zu", std::string(check_name(c)).c_str(), bad,
                        tally.log.evaluated(c));
    }
    o.detail = "violations/evaluations: " + o.detail;
    if (tally.log.evaluated(Check::Degab) == 0) {
        o.pass = false;
        o.detail += "; no reducing steps were exercised";
    }
    return o;
}

Outcome criterion_roundtrip(const std::vector<Case>& corpus) {
    std::vector<std::string> docs = {
        R"({"vertices":0,"edges":[],"lists":[]})",
        R"({"vertices":3,"edges":[],"lists":[]})",
        R"({"vertices":2,"edges":[[0,1]],"lists":[[1]]})",
        R"({"vertices":2,"edges":[[0,1],[1,0],[0,1]],"lists":[[1,2,3],[1,2,3],[1,2,3]]})",
        R"({"vertices":3,"edges":[[0,1],[1,2]],"lists":[[0,1,2,3,4,5,6,7,8,9,10,11,12],[18446744073709551615]]})",
        R"({"vertices":4,"edges":[[3,0]],"lists":[[]]})",
    };
    Rng rng(55);
    for (std::size_t i = 0; docs.size() < 50; ++i) {
        const Multigraph& g = corpus[i].inst.graph;
        const std::size_t chi = corpus[i].chi;
        const std::size_t size = chi + uniform(rng, 0, 3); // often oversized
        std::string text = emit_instance({g, random_lists(g, size, 3 * size, rng)});
        text.pop_back();
        docs.push_back(std::move(text));
    }
    std::size_t bad = 0;
    std::string first;
    for (const auto& d : docs) {
        try {
            const Instance inst = parse_instance(d);
            const std::string emitted = emit_instance(inst);
            const Instance back = parse_instance(emitted);
            if (emitted != d + "\n" || !(back == inst)) {
                if (bad++ == 0) first = d;
            }
        } catch (const std::exception& e) {
            if (bad++ == 0) first = d + ": " + e.what();
        }
    }
    Outcome o{bad == 0, fmt("%zu documents, %zu round-trip failures", docs.size(), bad)};
    if (!first.empty()) o.detail += "; first " + first;
    return o;
}

} // namespace

int main() {
    const auto t0 = Clock::now();
    const std::vector<Case> corpus = main_corpus();
    Tally tally;

    report(1, "chromatic index formula", criterion_formula());
    const MainRun main_run = criterion_main(corpus, tally);
    report(2, "list coloring with chi' colors", main_run.coloring);
    report(3, "orientation out-degree bounds", criterion_galvin(tally));
    report(4, "kernel correctness", criterion_kernel());
    report(5, "Hall equivalence", criterion_hall());
    report(6, "four-vertex multigraphs", criterion_four_vertex(tally));
    report(7, "induction invariants", criterion_invariants(tally));
    report(8, "determinism", main_run.determinism);
    report(9, "format round trip", criterion_roundtrip(corpus));

    std::printf("acceptance: %d failing criteria, %.2fs total\n", failures, seconds_since(t0));
    return failures == 0 ? 0 : 1;
}
