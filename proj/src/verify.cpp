// SPDX-License-Identifier: Apache-2.0

#include "lichor/verify.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "lichor/bipartite.hpp"
#include "lichor/errors.hpp"

namespace lichor {

namespace {

// Edges ordered so each one is adjacent to as many earlier edges as possible,
// with the adjacency to earlier positions precomputed.
struct SearchOrder {
    std::vector<EdgeId> edges;
    std::vector<std::vector<std::size_t>> earlier_neighbors;
};

SearchOrder search_order(const Multigraph& g, const EdgeSet& active) {
    SearchOrder order;
    std::vector<EdgeId> left(active.begin(), active.end());
    while (!left.empty()) {
        std::size_t best = 0, best_score = 0;
        for (std::size_t i = 0; i < left.size(); ++i) {
            std::size_t score = 0;
            for (EdgeId p : order.edges)
                if (line_adjacent(g, left[i], p)) ++score;
            if (score > best_score) {
                best = i;
                best_score = score;
            }
        }
        order.edges.push_back(left[best]);
        left.erase(left.begin() + static_cast<std::ptrdiff_t>(best));
    }
    order.earlier_neighbors.resize(order.edges.size());
    for (std::size_t i = 0; i < order.edges.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (line_adjacent(g, order.edges[i], order.edges[j]))
                order.earlier_neighbors[i].push_back(j);
    return order;
}

void enforce_cap(std::size_t edges, std::size_t cap) {
    if (edges > cap)
        throw SizeCapExceeded("brute force refuses " + std::to_string(edges) +
                              " edges (cap " + std::to_string(cap) + ")");
}

} // namespace

std::optional<EdgeColoring> brute_force_list_color(const Multigraph& g, const EdgeSet& active,
                                                   const ColorLists& lists, std::size_t cap) {
    enforce_cap(active.size(), cap);
    const auto order = search_order(g, active);
    const std::size_t n = order.edges.size();
    std::vector<Color> chosen(n);
    std::vector<std::size_t> cursor(n, 0);

    std::size_t i = 0;
    while (true) {
        if (i == n) {
            EdgeColoring out(g.edge_count());
            for (std::size_t k = 0; k < n; ++k) out.assign(order.edges[k], chosen[k]);
            return out;
        }
        const auto& list = lists[order.edges[i]];
        bool placed = false;
        while (cursor[i] < list.size()) {
            const Color c = list[cursor[i]++];
            const auto& nb = order.earlier_neighbors[i];
            if (std::none_of(nb.begin(), nb.end(), [&](std::size_t j) { return chosen[j] == c; })) {
                chosen[i] = c;
                placed = true;
                break;
            }
        }
        if (placed) {
            ++i;
            continue;
        }
        cursor[i] = 0;
        if (i == 0) return std::nullopt;
        --i;
    }
}

std::size_t brute_force_chi(const Multigraph& g, std::size_t cap) {
    enforce_cap(g.edge_count(), cap);
    if (g.edge_count() == 0) return 0;
    const auto order = search_order(g, g.all_edges());
    const std::size_t n = order.edges.size();

    std::size_t k = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) k = std::max(k, degree(g, v));
    for (;; ++k) {
        // Colors 1..k; a new color may only be the next unused one.
        std::vector<Color> chosen(n, 0);
        std::vector<Color> high(n + 1, 0); // max color used among positions < i
        std::size_t i = 0;
        bool found = false;
        while (true) {
            if (i == n) {
                found = true;
                break;
            }
            const Color limit = std::min<Color>(k, high[i] + 1);
            bool placed = false;
            for (Color c = chosen[i] + 1; c <= limit; ++c) {
                const auto& nb = order.earlier_neighbors[i];
                if (std::none_of(nb.begin(), nb.end(),
                                 [&](std::size_t j) { return chosen[j] == c; })) {
                    chosen[i] = c;
                    high[i + 1] = std::max(high[i], c);
                    placed = true;
                    break;
                }
            }
            if (placed) {
                ++i;
                continue;
            }
            chosen[i] = 0;
            if (i == 0) break;
            --i;
        }
        if (found) return k;
    }
}

VerifyResult verify_coloring(const Multigraph& g, const EdgeSet& active, const ColorLists& lists,
                             const EdgeColoring& coloring) {
    for (EdgeId e : active) {
        if (e >= coloring.size() || !coloring.assigned(e))
            return {false, "edge " + std::to_string(e) + " is uncolored"};
        const Color c = *coloring[e];
        if (!contains(lists[e], c))
            return {false, "edge " + std::to_string(e) + " has color " + std::to_string(c) +
                               " outside its list"};
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::map<Color, EdgeId> seen;
        for (EdgeId e : g.incident(v)) {
            if (!active.contains(e)) continue;
            auto [it, fresh] = seen.emplace(*coloring[e], e);
            if (!fresh)
                return {false, "edges " + std::to_string(it->second) + " and " +
                                   std::to_string(e) + " meet at vertex " + std::to_string(v) +
                                   " with color " + std::to_string(*coloring[e])};
        }
    }
    return {};
}

bool verify_kernel(const LineOrientation& d, const EdgeSet& active, const EdgeSet& kernel) {
    const auto& g = d.graph();
    for (EdgeId k : kernel)
        if (!active.contains(k)) return false;
    const auto ids = kernel.ids();
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (line_adjacent(g, ids[i], ids[j])) return false;
    for (EdgeId e : active) {
        if (kernel.contains(e)) continue;
        const auto& heads = d.out(e);
        if (std::none_of(heads.begin(), heads.end(), [&](EdgeId q) { return kernel.contains(q); }))
            return false;
    }
    return true;
}

} // namespace lichor
