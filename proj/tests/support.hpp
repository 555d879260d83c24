// SPDX-License-Identifier: Apache-2.0

#ifndef LICHOR_TEST_SUPPORT_HPP
#define LICHOR_TEST_SUPPORT_HPP

#include <functional>
#include <initializer_list>
#include <utility>
#include <vector>

#include "lichor/graph.hpp"
#include "lichor/lists.hpp"

namespace lichor::test {

inline Multigraph graph(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> es) {
    std::vector<Endpoints> ends;
    for (auto [u, v] : es) ends.push_back({u, v});
    return Multigraph(n, std::move(ends));
}

inline ColorLists lists(std::initializer_list<std::initializer_list<Color>> ls) {
    std::vector<std::vector<Color>> raw;
    for (auto l : ls) raw.emplace_back(l);
    return ColorLists(std::move(raw));
}

inline ColorLists uniform_lists(std::size_t m, std::initializer_list<Color> l) {
    return ColorLists(std::vector<std::vector<Color>>(m, std::vector<Color>(l)));
}

inline Multigraph triangle() { return graph(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline Multigraph k4() { return graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
inline Multigraph double_edge() { return graph(2, {{0, 1}, {0, 1}}); }
inline Multigraph c5() { return graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }

// Independent of the block classifier: true if the graph has a simple odd
// cycle of length >= 5, chords allowed. Exhaustive; meant for small graphs.
inline bool has_long_odd_cycle(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;

    std::vector<bool> used(n, false);
    std::function<bool(VertexId, VertexId, std::size_t)> extend =
        [&](VertexId start, VertexId last, std::size_t len) -> bool {
        if (len >= 5 && len % 2 == 1 && adj[last][start]) return true;
        for (VertexId w = start + 1; w < n; ++w) {
            if (used[w] || !adj[last][w]) continue;
            used[w] = true;
            const bool found = extend(start, w, len + 1);
            used[w] = false;
            if (found) return true;
        }
        return false;
    };
    for (VertexId s = 0; s < n; ++s) {
        used.assign(n, false);
        used[s] = true;
        if (extend(s, s, 1)) return true;
    }
    return false;
}

} // namespace lichor::test

#endif
