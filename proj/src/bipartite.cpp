// SPDX-License-Identifier: Apache-2.0

#include "lichor/bipartite.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>

#include "lichor/errors.hpp"
#include "lichor/verify.hpp"

namespace lichor {

namespace {

std::size_t max_degree(const Multigraph& g, const EdgeSet& block) {
    std::size_t best = 0;
    for (VertexId v : vertices_of(g, block)) best = std::max(best, degree(g, block, v));
    return best;
}

} // namespace

EdgeColoring konig_color(const Multigraph& g, const EdgeSet& block, const Bipartition& bip) {
    for (EdgeId e : block) {
        const auto [u, v] = g.endpoints(e);
        if (bip.in_x(u) == bip.in_x(v) || (!bip.in_x(u) && !bip.in_y(u)) ||
            (!bip.in_x(v) && !bip.in_y(v)))
            throw InputError("edge " + std::to_string(e) + " does not cross the bipartition");
    }
    const std::size_t delta = max_degree(g, block);
    // at[v][c]: the edge of color c at v, colors 1..delta
    std::map<VertexId, std::vector<std::optional<EdgeId>>> at;
    for (VertexId v : vertices_of(g, block)) at[v].assign(delta + 1, std::nullopt);
    EdgeColoring c(g.edge_count());

    auto free_at = [&](VertexId v, Color k) { return !at[v][k].has_value(); };

    for (EdgeId e : block) {
        const auto [u, v] = g.endpoints(e);
        std::optional<Color> common;
        for (Color k = 1; k <= delta && !common; ++k)
            if (free_at(u, k) && free_at(v, k)) common = k;
        if (!common) {
            Color alpha = 0, beta = 0;
            for (Color k = 1; k <= delta; ++k)
                if (free_at(u, k)) {
                    alpha = k;
                    break;
                }
            for (Color k = 1; k <= delta; ++k)
                if (free_at(v, k)) {
                    beta = k;
                    break;
                }
            // Swap alpha/beta along the alternating path leaving v on alpha.
            std::vector<EdgeId> path;
            VertexId w = v;
            Color want = alpha;
            while (auto next = at[w][want]) {
                path.push_back(*next);
                w = g.other_end(*next, w);
                want = (want == alpha) ? beta : alpha;
            }
            for (EdgeId p : path) {
                const auto [x, y] = g.endpoints(p);
                at[x][*c[p]].reset();
                at[y][*c[p]].reset();
            }
            for (EdgeId p : path) {
                const Color flipped = (*c[p] == alpha) ? beta : alpha;
                c.assign(p, flipped);
                const auto [x, y] = g.endpoints(p);
                at[x][flipped] = p;
                at[y][flipped] = p;
            }
            common = alpha;
        }
        c.assign(e, *common);
        at[u][*common] = e;
        at[v][*common] = e;
    }
    return c;
}

EdgeColoring normalize_at(const EdgeColoring& c, const Multigraph& g, const EdgeSet& block,
                          VertexId v) {
    std::map<Color, Color> rename;
    Color next = 1;
    for (EdgeId e : edges_at(g, block, v)) rename.emplace(*c[e], next++);
    ColorSet rest;
    for (EdgeId e : block)
        if (!rename.count(*c[e])) rest.push_back(*c[e]);
    for (Color k : make_color_set(std::move(rest))) rename.emplace(k, next++);
    EdgeColoring out = c;
    for (EdgeId e : block) out.assign(e, rename.at(*c[e]));
    return out;
}

LineOrientation::LineOrientation(const Multigraph& g, const EdgeSet& block,
                                 const Bipartition& bip, const EdgeColoring& c)
    : g_(&g), block_(block), bip_(bip), coloring_(c), out_(block.size()) {
    for (EdgeId e : block_)
        if (!c.assigned(e)) throw InputError("edge " + std::to_string(e) + " is uncolored");
    for (VertexId w : vertices_of(g, block_)) {
        const bool x_side = bip_.in_x(w);
        const auto here = edges_at(g, block_, w);
        for (EdgeId e : here)
            for (EdgeId q : here) {
                if (e == q) continue;
                if (parallel(g, e, q)) {
                    out_[slot(e)].push_back(q);
                    continue;
                }
                if (*c[e] == *c[q])
                    throw InputError("coloring is not proper: edges " + std::to_string(e) +
                                     " and " + std::to_string(q) + " share color " +
                                     std::to_string(*c[e]));
                if (x_side ? (*c[e] < *c[q]) : (*c[e] > *c[q])) out_[slot(e)].push_back(q);
            }
    }
    for (auto& heads : out_) {
        std::sort(heads.begin(), heads.end());
        heads.erase(std::unique(heads.begin(), heads.end()), heads.end());
    }
}

std::size_t LineOrientation::slot(EdgeId e) const {
    const auto ids = block_.ids();
    auto it = std::lower_bound(ids.begin(), ids.end(), e);
    if (it == ids.end() || *it != e)
        throw InputError("edge " + std::to_string(e) + " is not in the oriented block");
    return static_cast<std::size_t>(it - ids.begin());
}

bool LineOrientation::arc(EdgeId from, EdgeId to) const {
    const auto& heads = out(from);
    return std::binary_search(heads.begin(), heads.end(), to);
}

const std::vector<EdgeId>& LineOrientation::out(EdgeId e) const { return out_[slot(e)]; }

std::size_t LineOrientation::out_degree(EdgeId e, const EdgeSet& within) const {
    const auto& heads = out(e);
    return static_cast<std::size_t>(
        std::count_if(heads.begin(), heads.end(), [&](EdgeId q) { return within.contains(q); }));
}

EdgeSet find_kernel(const LineOrientation& d, const EdgeSet& active) {
    const auto& g = d.graph();
    const auto& bip = d.sides();
    auto x_end = [&](EdgeId e) {
        const auto [u, v] = g.endpoints(e);
        return bip.in_x(u) ? u : v;
    };

    // Proposal order per X vertex: descending color.
    std::map<VertexId, std::vector<EdgeId>> prefs;
    for (EdgeId e : active) prefs[x_end(e)].push_back(e);
    for (auto& [x, list] : prefs)
        std::sort(list.begin(), list.end(),
                  [&](EdgeId p, EdgeId q) { return d.color(p) > d.color(q); });

    std::map<VertexId, std::size_t> next;
    std::map<VertexId, EdgeId> held; // Y vertex -> retained proposal
    std::deque<VertexId> free_x;
    for (const auto& [x, list] : prefs) free_x.push_back(x);

    while (!free_x.empty()) {
        const VertexId x = free_x.front();
        free_x.pop_front();
        auto& k = next[x];
        const auto& list = prefs[x];
        if (k == list.size()) continue;
        const EdgeId e = list[k++];
        const VertexId y = g.other_end(e, x);
        auto it = held.find(y);
        if (it == held.end()) {
            held.emplace(y, e);
        } else if (d.color(e) < d.color(it->second)) {
            free_x.push_back(x_end(it->second));
            it->second = e;
        } else {
            free_x.push_back(x);
        }
    }

    std::vector<EdgeId> kernel;
    for (const auto& [y, e] : held) kernel.push_back(e);
    return EdgeSet(std::move(kernel));
}

EdgeColoring kernel_color(const LineOrientation& d, const ColorLists& lists, InvariantLog& log) {
    EdgeSet uncolored = d.edges();
    ColorLists current = lists;
    EdgeColoring out(d.graph().edge_count());

    auto check_budget = [&] {
        for (EdgeId e : uncolored) {
            const std::size_t have = current[e].size();
            const std::size_t outdeg = d.out_degree(e, uncolored);
            log.require(Check::ListBudget, have > outdeg, [&] {
                return "edge " + std::to_string(e) + " has " + std::to_string(have) +
                       " colors but out-degree " + std::to_string(outdeg);
            });
        }
    };

    check_budget();
    while (!uncolored.empty()) {
        const ColorSet pool = current.union_over(uncolored);
        const Color c = pool.front(); // nonempty: every budget is at least one
        std::vector<EdgeId> holders;
        for (EdgeId e : uncolored)
            if (contains(current[e], c)) holders.push_back(e);
        const EdgeSet with_c(std::move(holders));
        const EdgeSet kernel = find_kernel(d, with_c);
        log.require(Check::Kernel, verify_kernel(d, with_c, kernel), [&] {
            return "deferred acceptance returned a non-kernel for color " + std::to_string(c);
        });
        for (EdgeId e : kernel) out.assign(e, c);
        uncolored = set_difference(uncolored, kernel);
        current.remove_color(uncolored, c);
        check_budget();
    }
    return out;
}

EdgeColoring solve_bipartite(const Multigraph& g, const EdgeSet& block, VertexId v,
                             const ColorLists& lists, InvariantLog& log) {
    auto bip = bipartition_of(g, block);
    if (!bip) throw InputError("solve_bipartite called on a block with an odd cycle");
    if (bip->in_y(v)) std::swap(bip->x, bip->y);
    if (!bip->in_x(v))
        throw InputError("vertex " + std::to_string(v) + " is not in the block");

    const std::size_t chi = max_degree(g, block);
    const std::size_t dv = degree(g, block, v);
    const EdgeSet at_v = edges_at(g, block, v);

    ColorLists trimmed = lists;
    for (EdgeId e : block) {
        const std::size_t need = at_v.contains(e) ? dv : chi;
        log.require(Check::Demand, lists[e].size() >= need, [&] {
            return "edge " + std::to_string(e) + " has " + std::to_string(lists[e].size()) +
                   " colors, bipartite demand is " + std::to_string(need);
        });
        trimmed.trim(e, need);
    }

    const EdgeColoring base = normalize_at(konig_color(g, block, *bip), g, block, v);
    const LineOrientation d(g, block, *bip, base);
    for (EdgeId e : block) {
        const std::size_t outdeg = d.out_degree(e);
        const std::size_t bound = at_v.contains(e) ? dv : chi;
        log.require(Check::GalvinOutdegree, outdeg < bound, [&] {
            return "edge " + std::to_string(e) + " has out-degree " + std::to_string(outdeg) +
                   ", bound " + std::to_string(bound);
        });
    }
    return kernel_color(d, trimmed, log);
}

} // namespace lichor
