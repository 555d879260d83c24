// SPDX-License-Identifier: Apache-2.0

#include "lichor/solve.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <variant>

#include "lichor/bipartite.hpp"
#include "lichor/clique.hpp"
#include "lichor/errors.hpp"
#include "lichor/structure.hpp"
#include "lichor/verify.hpp"

namespace lichor {

ColorSet forbidden_at_cut(const EdgeColoring& partial, const Multigraph& g, VertexId v,
                          const EdgeSet& block) {
    std::vector<Color> used;
    for (EdgeId e : g.incident(v)) {
        if (e >= partial.size() || !partial.assigned(e)) continue;
        if (block.contains(e))
            throw InputError("edge " + std::to_string(e) + " of the block is already colored");
        used.push_back(*partial[e]);
    }
    return make_color_set(std::move(used));
}

namespace {

struct BlockOutcome {
    EdgeColoring coloring;
    std::size_t depth = 0;
};

std::size_t distinct_colors(const EdgeColoring& c, const EdgeSet& block) {
    std::set<Color> seen;
    for (EdgeId e : block) seen.insert(*c[e]);
    return seen.size();
}

BlockOutcome dispatch(const Multigraph& g, const EdgeSet& block, const BlockClass& cls,
                      std::optional<VertexId> entry, const ColorLists& lists, InvariantLog& log) {
    if (const auto* bip = std::get_if<BipartiteBlock>(&cls)) {
        const VertexId v = entry.value_or(vertices_of(g, block).front());
        auto c = solve_bipartite(g, block, v, lists, log);
        const std::size_t rounds = distinct_colors(c, block);
        (void)bip;
        return {std::move(c), rounds};
    }
    if (std::holds_alternative<FourVertexBlock>(cls)) {
        const VertexId v = entry.value_or(vertices_of(g, block).front());
        auto r = solve_k4(g, block, v, lists, log);
        return {std::move(r.coloring), r.depth};
    }
    const auto& k = std::get<K11nBlock>(cls);
    if (!entry || *entry == k.apex_a || *entry == k.apex_b) {
        const VertexId a = entry.value_or(k.apex_a);
        const VertexId b = (a == k.apex_a) ? k.apex_b : k.apex_a;
        auto r = solve_k11n_apex(g, block, a, b, k.centers, lists, log);
        return {std::move(r.coloring), r.depth};
    }
    auto r = solve_k11n_center(g, block, k.apex_a, k.apex_b, *entry, k.centers, lists, log);
    return {std::move(r.coloring), r.depth};
}

} // namespace

SolveReport solve(const Instance& inst, const SolveOptions& options) {
    const Multigraph& g = inst.graph;
    if (inst.lists.size() != g.edge_count())
        throw InputError("instance has " + std::to_string(inst.lists.size()) + " lists for " +
                         std::to_string(g.edge_count()) + " edges");

    const std::size_t chi = chromatic_index(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (inst.lists[e].size() < chi) throw ListTooSmall(e, inst.lists[e].size(), chi);

    SolveReport report;
    report.coloring = EdgeColoring(g.edge_count());
    const auto dec = decompose_blocks(g);
    if (dec.blocks.empty()) {
        if (options.root != 0) throw InputError("root block given for a graph without edges");
        return report;
    }
    if (options.root >= dec.blocks.size())
        throw InputError("root block " + std::to_string(options.root) + " out of range (" +
                         std::to_string(dec.blocks.size()) + " blocks)");

    std::vector<BlockTask> tasks;
    {
        const auto comps = block_components(dec);
        auto first = std::find_if(comps.begin(), comps.end(), [&](const auto& c) {
            return std::binary_search(c.begin(), c.end(), options.root);
        });
        auto append = [&](std::size_t root) {
            auto part = block_order(dec, root);
            tasks.insert(tasks.end(), part.begin(), part.end());
        };
        append(options.root);
        for (auto it = comps.begin(); it != comps.end(); ++it)
            if (it != first) append(it->front());
    }

    for (const auto& task : tasks) {
        const EdgeSet& block = task.edges;
        const BlockClass cls = classify_block(g, block);

        std::vector<VertexId> precolored;
        for (VertexId w : vertices_of(g, block)) {
            const auto inc = g.incident(w);
            if (std::any_of(inc.begin(), inc.end(),
                            [&](EdgeId e) { return report.coloring.assigned(e); }))
                precolored.push_back(w);
        }
        report.log.require(Check::SingleEntry,
                           precolored.empty() ||
                               (precolored.size() == 1 && task.entry == precolored.front()),
                           [&] {
                               return "block " + std::to_string(task.block) + " has " +
                                      std::to_string(precolored.size()) + " precolored vertices";
                           });

        ColorLists lists = inst.lists;
        ColorSet forbidden;
        if (task.entry) {
            const VertexId v = *task.entry;
            forbidden = forbidden_at_cut(report.coloring, g, v, block);
            const EdgeSet at_v = edges_at(g, block, v);
            lists.remove_colors(at_v, forbidden);
            const std::size_t need = degree(g, block, v);
            for (EdgeId e : at_v)
                report.log.require(Check::Demand, lists[e].size() >= need, [&] {
                    return "edge " + std::to_string(e) + " keeps " +
                           std::to_string(lists[e].size()) + " colors at cut vertex " +
                           std::to_string(v) + ", needs " + std::to_string(need);
                });
        }

        BlockOutcome outcome;
        try {
            outcome = dispatch(g, block, cls, task.entry, lists, report.log);
            const auto check = verify_coloring(g, block, lists, outcome.coloring);
            report.log.require(Check::Coloring, check.ok, [&] {
                return "block " + std::to_string(task.block) + ": " + check.message;
            });
        } catch (const InvariantError& err) {
            if (!options.fallback) throw;
            report.conforming = false;
            report.diagnostics.push_back("block " + std::to_string(task.block) + ": " +
                                         err.what());
            std::optional<EdgeColoring> rescue;
            try {
                rescue = brute_force_list_color(g, block, lists);
            } catch (const SizeCapExceeded&) {
                throw err;
            }
            if (!rescue) throw err;
            outcome = {std::move(*rescue), 0};
        }
        for (EdgeId e : block) report.coloring.assign(e, *outcome.coloring[e]);
        report.trace.push_back(
            {task.block, block_kind_name(cls), task.entry, forbidden.size(), outcome.depth});
    }
    return report;
}

} // namespace lichor
