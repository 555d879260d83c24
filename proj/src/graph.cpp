// SPDX-License-Identifier: Apache-2.0

#include "lichor/graph.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "lichor/errors.hpp"

namespace lichor {

EdgeSet::EdgeSet(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool EdgeSet::contains(EdgeId e) const {
    return std::binary_search(ids_.begin(), ids_.end(), e);
}

void EdgeSet::insert(EdgeId e) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), e);
    if (it == ids_.end() || *it != e) ids_.insert(it, e);
}

void EdgeSet::erase(EdgeId e) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), e);
    if (it != ids_.end() && *it == e) ids_.erase(it);
}

EdgeSet set_union(const EdgeSet& x, const EdgeSet& y) {
    std::vector<EdgeId> out;
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return EdgeSet(std::move(out));
}

EdgeSet set_difference(const EdgeSet& x, const EdgeSet& y) {
    std::vector<EdgeId> out;
    std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return EdgeSet(std::move(out));
}

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Endpoints> edges)
    : edges_(std::move(edges)), incident_(vertex_count) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& [u, v] = edges_[i];
        if (u >= vertex_count || v >= vertex_count)
            throw InputError("edge " + std::to_string(i) + " references a vertex >= " +
                             std::to_string(vertex_count));
        if (u == v) throw InputError("edge " + std::to_string(i) + " is a loop");
        incident_[u].push_back(static_cast<EdgeId>(i));
        incident_[v].push_back(static_cast<EdgeId>(i));
    }
}

const Endpoints& Multigraph::endpoints(EdgeId e) const {
    if (e >= edges_.size()) throw InputError("edge id " + std::to_string(e) + " out of range");
    return edges_[e];
}

std::span<const EdgeId> Multigraph::incident(VertexId v) const {
    if (v >= incident_.size())
        throw InputError("vertex id " + std::to_string(v) + " out of range");
    return incident_[v];
}

EdgeSet Multigraph::all_edges() const {
    std::vector<EdgeId> ids(edges_.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<EdgeId>(i);
    return EdgeSet(std::move(ids));
}

bool Multigraph::touches(EdgeId e, VertexId v) const {
    const auto& ends = endpoints(e);
    return ends.u == v || ends.v == v;
}

VertexId Multigraph::other_end(EdgeId e, VertexId v) const {
    const auto& ends = endpoints(e);
    if (ends.u == v) return ends.v;
    if (ends.v == v) return ends.u;
    throw InputError("edge " + std::to_string(e) + " is not incident to vertex " +
                     std::to_string(v));
}

std::size_t degree(const Multigraph& g, VertexId v) { return g.incident(v).size(); }

std::size_t degree(const Multigraph& g, const EdgeSet& active, VertexId v) {
    const auto inc = g.incident(v);
    return static_cast<std::size_t>(
        std::count_if(inc.begin(), inc.end(), [&](EdgeId e) { return active.contains(e); }));
}

EdgeSet edges_at(const Multigraph& g, const EdgeSet& active, VertexId v) {
    std::vector<EdgeId> out;
    for (EdgeId e : g.incident(v))
        if (active.contains(e)) out.push_back(e);
    return EdgeSet(std::move(out));
}

EdgeSet edges_between(const Multigraph& g, VertexId a, VertexId b) {
    return edges_between(g, g.all_edges(), a, b);
}

EdgeSet edges_between(const Multigraph& g, const EdgeSet& active, VertexId a, VertexId b) {
    if (a == b) throw InputError("edges_between needs two distinct vertices");
    std::vector<EdgeId> out;
    for (EdgeId e : g.incident(a))
        if (g.touches(e, b) && active.contains(e)) out.push_back(e);
    (void)g.incident(b);
    return EdgeSet(std::move(out));
}

EdgeSet triangle_edges(const Multigraph& g, VertexId a, VertexId b, VertexId c) {
    return triangle_edges(g, g.all_edges(), a, b, c);
}

EdgeSet triangle_edges(const Multigraph& g, const EdgeSet& active, VertexId a, VertexId b,
                       VertexId c) {
    if (a == b || a == c || b == c)
        throw InputError("triangle_edges needs three distinct vertices");
    return set_union(set_union(edges_between(g, active, a, b), edges_between(g, active, a, c)),
                     edges_between(g, active, b, c));
}

bool line_adjacent(const Multigraph& g, EdgeId e, EdgeId q) {
    if (e == q) throw InputError("line_adjacent needs two distinct edges");
    const auto& x = g.endpoints(e);
    const auto& y = g.endpoints(q);
    return x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
}

bool parallel(const Multigraph& g, EdgeId e, EdgeId q) {
    const auto& x = g.endpoints(e);
    const auto& y = g.endpoints(q);
    return (x.u == y.u && x.v == y.v) || (x.u == y.v && x.v == y.u);
}

std::vector<VertexId> vertices_of(const Multigraph& g, const EdgeSet& edges) {
    std::vector<VertexId> out;
    for (EdgeId e : edges) {
        out.push_back(g.endpoints(e).u);
        out.push_back(g.endpoints(e).v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace lichor
