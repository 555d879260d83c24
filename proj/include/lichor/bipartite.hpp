// SPDX-License-Identifier: Apache-2.0

#ifndef LICHOR_BIPARTITE_HPP
#define LICHOR_BIPARTITE_HPP

#include <cstddef>
#include <vector>

#include "lichor/graph.hpp"
#include "lichor/invariants.hpp"
#include "lichor/lists.hpp"
#include "lichor/structure.hpp"

namespace lichor {

// Proper coloring of a bipartite block with colors 1..max degree, built by
// alternating-path swaps. Throws InputError if the block has an odd cycle.
EdgeColoring konig_color(const Multigraph& g, const EdgeSet& block, const Bipartition& bip);

// Renames colors globally so that the edges at v, by ascending id, carry 1..d(v).
EdgeColoring normalize_at(const EdgeColoring& c, const Multigraph& g, const EdgeSet& block,
                          VertexId v);

// Orientation of the line graph of a bipartite block: at a shared vertex w,
// e -> q iff c(e) < c(q) when w is in X, c(e) > c(q) when w is in Y.
// Parallel edges point both ways.
class LineOrientation {
public:
    // Throws InputError if `c` is not proper on the block.
    LineOrientation(const Multigraph& g, const EdgeSet& block, const Bipartition& bip,
                    const EdgeColoring& c);

    const Multigraph& graph() const noexcept { return *g_; }
    const EdgeSet& edges() const noexcept { return block_; }
    const Bipartition& sides() const noexcept { return bip_; }
    Color color(EdgeId e) const { return *coloring_[e]; }

    bool arc(EdgeId from, EdgeId to) const;
    // Sorted heads of arcs out of e.
    const std::vector<EdgeId>& out(EdgeId e) const;
    std::size_t out_degree(EdgeId e) const { return out(e).size(); }
    // Out-degree counting only heads inside `within`.
    std::size_t out_degree(EdgeId e, const EdgeSet& within) const;

private:
    std::size_t slot(EdgeId e) const;

    const Multigraph* g_;
    EdgeSet block_;
    Bipartition bip_;
    EdgeColoring coloring_;
    std::vector<std::vector<EdgeId>> out_;
};

// X-side vertices propose their highest-colored active edges, Y-side vertices
// keep the lowest-colored proposal. The retained edges form a kernel.
EdgeSet find_kernel(const LineOrientation& d, const EdgeSet& active);

// Kernel-driven list coloring over d.edges(). Requires |A_e| > d_out(e);
// the list-budget and kernel checks are recorded in `log`.
EdgeColoring kernel_color(const LineOrientation& d, const ColorLists& lists, InvariantLog& log);

// f_v-list-coloring of a bipartite block: d(v) colors on E(v), chi'(block)
// elsewhere. Lists are trimmed to those sizes first.
EdgeColoring solve_bipartite(const Multigraph& g, const EdgeSet& block, VertexId v,
                             const ColorLists& lists, InvariantLog& log);

} // namespace lichor

#endif
