// SPDX-License-Identifier: Apache-2.0

#ifndef LICHOR_SOLVE_HPP
#define LICHOR_SOLVE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lichor/graph.hpp"
#include "lichor/invariants.hpp"
#include "lichor/lists.hpp"

namespace lichor {

struct Instance {
    Multigraph graph;
    ColorLists lists; // aligned with graph edge ids

    friend bool operator==(const Instance& x, const Instance& y) {
        return x.graph.vertex_count() == y.graph.vertex_count() &&
               std::equal(x.graph.edges().begin(), x.graph.edges().end(),
                          y.graph.edges().begin(), y.graph.edges().end()) &&
               x.lists == y.lists;
    }
};

struct BlockTrace {
    std::size_t block = 0;
    std::string kind; // "bipartite", "four_vertex", "k11n"
    std::optional<VertexId> entry;
    std::size_t forbidden = 0;
    std::size_t depth = 0;

    friend bool operator==(const BlockTrace&, const BlockTrace&) = default;
};

struct SolveReport {
    EdgeColoring coloring;
    std::vector<BlockTrace> trace;
    // False when some block needed the brute-force fallback.
    bool conforming = true;
    std::vector<std::string> diagnostics;
    // Not serialized.
    InvariantLog log;
};

// Colors already used on edges at v outside `block`. Throws InputError if an
// edge of `block` is already colored.
ColorSet forbidden_at_cut(const EdgeColoring& partial, const Multigraph& g, VertexId v,
                          const EdgeSet& block);

struct SolveOptions {
    // DFS root for the component containing it; other components start at
    // their lowest block.
    std::size_t root = 0;
    // Brute-force a block whose induction trips an invariant, and mark the
    // report non-conforming. Without it the InvariantError propagates.
    bool fallback = true;
};

// Colors every edge from its list. Throws NotLinePerfect, ListTooSmall
// (|A_e| < chi'), InputError, or InvariantError when the fallback is off or
// cannot help.
SolveReport solve(const Instance& inst, const SolveOptions& options = {});

} // namespace lichor

#endif
