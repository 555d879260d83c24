// SPDX-License-Identifier: Apache-2.0

#include "lichor/transversal.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "lichor/errors.hpp"

namespace lichor {

std::vector<ReducingSet> find_reducing_sets(const Multigraph& g, const EdgeSet& active,
                                            const ColorLists& lists) {
    std::vector<ReducingSet> out;
    const auto ids = active.ids();
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            if (line_adjacent(g, ids[i], ids[j])) continue;
            for (Color c : color_intersection(lists[ids[i]], lists[ids[j]]))
                out.push_back({ids[i], ids[j], c});
        }
    return out;
}

bool has_reducing_set(const Multigraph& g, const EdgeSet& active, const ColorLists& lists) {
    const auto ids = active.ids();
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (!line_adjacent(g, ids[i], ids[j]) &&
                !color_intersection(lists[ids[i]], lists[ids[j]]).empty())
                return true;
    return false;
}

SdrResult distinct_representatives(const EdgeSet& active, const ColorLists& lists,
                                   std::size_t edge_count) {
    const auto ids = active.ids();
    std::map<Color, std::size_t> owner; // color -> index into ids
    std::vector<std::optional<Color>> chosen(ids.size());

    // Kuhn's augmenting path search from edge index `start`.
    auto augment = [&](std::size_t start, std::vector<bool>& edge_seen,
                       std::map<Color, bool>& color_seen) {
        struct Step {
            std::size_t edge;
            std::size_t next;
        };
        std::vector<Step> path{{start, 0}};
        std::vector<Color> via;
        edge_seen[start] = true;
        while (!path.empty()) {
            auto& top = path.back();
            const auto& list = lists[ids[top.edge]];
            if (top.next == list.size()) {
                path.pop_back();
                if (!via.empty()) via.pop_back();
                continue;
            }
            const Color c = list[top.next++];
            if (color_seen[c]) continue;
            color_seen[c] = true;
            auto it = owner.find(c);
            if (it == owner.end()) {
                via.push_back(c);
                for (std::size_t k = 0; k < path.size(); ++k) {
                    chosen[path[k].edge] = via[k];
                    owner[via[k]] = path[k].edge;
                }
                return true;
            }
            if (!edge_seen[it->second]) {
                edge_seen[it->second] = true;
                via.push_back(c);
                path.push_back({it->second, 0});
            }
        }
        return false;
    };

    for (std::size_t i = 0; i < ids.size(); ++i) {
        std::vector<bool> edge_seen(ids.size(), false);
        std::map<Color, bool> color_seen;
        if (augment(i, edge_seen, color_seen)) continue;
        // Alternating reachability from the unmatched edge is a Hall violator.
        std::vector<EdgeId> f;
        ColorSet colors;
        for (std::size_t k = 0; k < ids.size(); ++k)
            if (edge_seen[k]) f.push_back(ids[k]);
        for (const auto& [c, seen] : color_seen)
            if (seen) colors.push_back(c);
        return HallViolator{EdgeSet(std::move(f)), std::move(colors)};
    }

    EdgeColoring out(edge_count);
    for (std::size_t i = 0; i < ids.size(); ++i) out.assign(ids[i], *chosen[i]);
    return out;
}

SdrResult solve_sdr(const Multigraph& g, const EdgeSet& active, const ColorLists& lists) {
    if (has_reducing_set(g, active, lists))
        throw InputError("solve_sdr requires the transversal case (a reducing set exists)");
    return distinct_representatives(active, lists, g.edge_count());
}

} // namespace lichor
