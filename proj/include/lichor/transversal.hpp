// SPDX-License-Identifier: Apache-2.0

#ifndef LICHOR_TRANSVERSAL_HPP
#define LICHOR_TRANSVERSAL_HPP

#include <optional>
#include <variant>
#include <vector>

#include "lichor/graph.hpp"
#include "lichor/lists.hpp"

namespace lichor {

// Two non-adjacent edges with a shared list color; e < q.
struct ReducingSet {
    EdgeId e;
    EdgeId q;
    Color c;

    friend bool operator==(const ReducingSet&, const ReducingSet&) = default;
};

// All reducing sets among active edges, ordered by (e, q, c).
std::vector<ReducingSet> find_reducing_sets(const Multigraph& g, const EdgeSet& active,
                                            const ColorLists& lists);

bool has_reducing_set(const Multigraph& g, const EdgeSet& active, const ColorLists& lists);

// Edge set F with |F| > |A_F|.
struct HallViolator {
    EdgeSet edges;
    ColorSet colors;
};

using SdrResult = std::variant<EdgeColoring, HallViolator>;

// Injective choice of one list color per active edge, or a Hall violator.
// Throws InputError if a reducing set exists.
SdrResult solve_sdr(const Multigraph& g, const EdgeSet& active, const ColorLists& lists);

// The matching step alone, with no transversal-case precondition.
SdrResult distinct_representatives(const EdgeSet& active, const ColorLists& lists,
                                   std::size_t edge_count);

} // namespace lichor

#endif
