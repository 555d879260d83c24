// SPDX-License-Identifier: Apache-2.0

#ifndef LICHOR_CLIQUE_HPP
#define LICHOR_CLIQUE_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "lichor/graph.hpp"
#include "lichor/invariants.hpp"
#include "lichor/lists.hpp"

namespace lichor {

// Required list size per active edge.
using DemandFunction = std::map<EdgeId, std::size_t>;

// Triangle counts for a graph on apexes a, b and independent centers.
struct TriangleProfile {
    VertexId apex_a = 0;
    VertexId apex_b = 0;
    std::size_t degree_a = 0;
    std::size_t degree_b = 0;
    // Centers by descending t, ties by ascending id.
    std::vector<VertexId> centers;
    std::map<VertexId, std::size_t> t_of;
    std::vector<VertexId> big;   // ascending
    std::vector<VertexId> great; // ascending

    std::size_t t(VertexId v) const { return t_of.at(v); }
    std::size_t apex_max() const { return degree_a > degree_b ? degree_a : degree_b; }
    bool is_big(VertexId v) const;
    bool is_great(VertexId v) const;
};

// `centers` lists every non-apex vertex, active edges or not. Throws
// InputError if an active edge misses both apexes.
TriangleProfile triangle_profile(const Multigraph& g, const EdgeSet& active, VertexId a,
                                 VertexId b, const std::vector<VertexId>& centers);
// Centers taken from the vertices of the active edges.
TriangleProfile triangle_profile(const Multigraph& g, const EdgeSet& active, VertexId a,
                                 VertexId b);

// Records the great/big exclusivity and sorted-great checks for `p`.
void check_profile(const TriangleProfile& p, InvariantLog& log);

// d(v) on E(v), chi'(active) elsewhere.
DemandFunction demand_four_vertex(const Multigraph& g, const EdgeSet& active, VertexId v);
// d(a) on E(a); max(d(a), d(b), t(v_i)) on E(b, v_i).
DemandFunction demand_apex(const Multigraph& g, const EdgeSet& active, VertexId a, VertexId b,
                           const std::vector<VertexId>& centers);
// d(v1) on E(v1); max(d(a), d(b), t(v1)) on E(a,b); max(d(a), d(b), t(v_i)) on E(v_i).
DemandFunction demand_center(const Multigraph& g, const EdgeSet& active, VertexId a, VertexId b,
                             VertexId v1, const std::vector<VertexId>& centers);

struct Induction {
    EdgeColoring coloring;
    std::size_t depth = 0; // reduction levels before the transversal base case
};

// List coloring of a multigraph on at most four vertices with demands
// demand_four_vertex(v). Reducing sets are consumed in (e, q, c) order.
Induction solve_k4(const Multigraph& g, const EdgeSet& active, VertexId v,
                   const ColorLists& lists, InvariantLog& log);

// List coloring with demands demand_apex. Reducing sets meeting the
// largest-triangle center are preferred.
Induction solve_k11n_apex(const Multigraph& g, const EdgeSet& active, VertexId a, VertexId b,
                          const std::vector<VertexId>& centers, const ColorLists& lists,
                          InvariantLog& log);

// Apexes a, b; v1 is the distinguished center; v2 the largest-triangle other
// center; `rest` the remaining centers.
struct CenterFrame {
    VertexId a;
    VertexId b;
    VertexId v1;
    VertexId v2;
    std::vector<VertexId> rest;
};

enum class SplittingClass { ASplitting, BSplitting, None };

const char* splitting_name(SplittingClass s);

// Requires c in A(v1) and A(v2); throws InputError otherwise.
SplittingClass classify_splitting(const Multigraph& g, const EdgeSet& active,
                                  const ColorLists& lists, const CenterFrame& frame, Color c);

// List coloring with demands demand_center, via the single-edge step,
// reducing pairs, double splitting steps, and finally weak_phase.
Induction solve_k11n_center(const Multigraph& g, const EdgeSet& active, VertexId a, VertexId b,
                            VertexId v1, const std::vector<VertexId>& centers,
                            const ColorLists& lists, InvariantLog& log);

struct WeakBounds {
    DemandFunction per_edge;
    // |A_s u A_r| >= pair_bound for r in pair_r = E(b,v1), s in pair_s = E(a,v2)
    std::size_t pair_bound = 0;
    EdgeSet pair_r;
    EdgeSet pair_s;
};

WeakBounds weak_bounds(const Multigraph& g, const EdgeSet& active, const CenterFrame& frame);

// Empty string when every bound holds, else the first failing bound.
std::string weak_bounds_violation(const WeakBounds& bounds, const ColorLists& lists);

// Reductions that keep the weak inequalities, then the transversal base case.
Induction weak_phase(const Multigraph& g, const EdgeSet& active, const CenterFrame& frame,
                     const ColorLists& lists, InvariantLog& log);

} // namespace lichor

#endif
