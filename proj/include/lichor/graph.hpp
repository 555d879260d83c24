// SPDX-License-Identifier: Apache-2.0

#ifndef LICHOR_GRAPH_HPP
#define LICHOR_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace lichor {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Endpoints {
    VertexId u;
    VertexId v;

    friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

// Sorted set of edge ids.
class EdgeSet {
public:
    using const_iterator = std::vector<EdgeId>::const_iterator;

    EdgeSet() = default;
    explicit EdgeSet(std::vector<EdgeId> ids);
    EdgeSet(std::initializer_list<EdgeId> ids) : EdgeSet(std::vector<EdgeId>(ids)) {}

    bool contains(EdgeId e) const;
    void insert(EdgeId e);
    void erase(EdgeId e);

    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }
    const_iterator begin() const noexcept { return ids_.begin(); }
    const_iterator end() const noexcept { return ids_.end(); }
    std::span<const EdgeId> ids() const noexcept { return ids_; }
    EdgeId front() const { return ids_.front(); }

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

private:
    std::vector<EdgeId> ids_;
};

EdgeSet set_union(const EdgeSet& x, const EdgeSet& y);
EdgeSet set_difference(const EdgeSet& x, const EdgeSet& y);

// Loopless multigraph with positional edge ids. Immutable after construction;
// sub-instances are expressed as EdgeSets over the same graph.
class Multigraph {
public:
    Multigraph() = default;
    // Throws InputError on loops or out-of-range endpoints.
    Multigraph(std::size_t vertex_count, std::vector<Endpoints> edges);

    std::size_t vertex_count() const noexcept { return incident_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Endpoints> edges() const noexcept { return edges_; }

    const Endpoints& endpoints(EdgeId e) const;
    std::span<const EdgeId> incident(VertexId v) const;
    EdgeSet all_edges() const;

    bool touches(EdgeId e, VertexId v) const;
    VertexId other_end(EdgeId e, VertexId v) const;

private:
    std::vector<Endpoints> edges_;
    std::vector<std::vector<EdgeId>> incident_;
};

std::size_t degree(const Multigraph& g, VertexId v);
std::size_t degree(const Multigraph& g, const EdgeSet& active, VertexId v);

EdgeSet edges_at(const Multigraph& g, const EdgeSet& active, VertexId v);

EdgeSet edges_between(const Multigraph& g, VertexId a, VertexId b);
EdgeSet edges_between(const Multigraph& g, const EdgeSet& active, VertexId a, VertexId b);

EdgeSet triangle_edges(const Multigraph& g, VertexId a, VertexId b, VertexId c);
EdgeSet triangle_edges(const Multigraph& g, const EdgeSet& active, VertexId a, VertexId b,
                       VertexId c);

// Parallel edges are adjacent.
bool line_adjacent(const Multigraph& g, EdgeId e, EdgeId q);

bool parallel(const Multigraph& g, EdgeId e, EdgeId q);

// Sorted vertices touched by the given edges.
std::vector<VertexId> vertices_of(const Multigraph& g, const EdgeSet& edges);

} // namespace lichor

#endif
