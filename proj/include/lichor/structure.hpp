// SPDX-License-Identifier: Apache-2.0

#ifndef LICHOR_STRUCTURE_HPP
#define LICHOR_STRUCTURE_HPP

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "lichor/graph.hpp"

namespace lichor {

struct BlockDecomposition {
    // Biconnected components, ordered by smallest edge id. Bridges are
    // single-edge blocks; a bundle of parallel edges forms one block.
    std::vector<EdgeSet> blocks;
    std::vector<VertexId> cut_vertices;
    // Block-cut tree: cut vertices of each block, and blocks at each vertex.
    std::vector<std::vector<VertexId>> block_cuts;
    std::vector<std::vector<std::size_t>> blocks_at;

    bool is_cut_vertex(VertexId v) const;
};

BlockDecomposition decompose_blocks(const Multigraph& g);

// Connected components as sets of block indices, each sorted ascending.
std::vector<std::vector<std::size_t>> block_components(const BlockDecomposition& dec);

struct BlockTask {
    std::size_t block;
    EdgeSet edges;
    // The cut vertex through which traversal entered; empty for the root.
    std::optional<VertexId> entry;
};

// DFS pre-order over the block-cut tree component containing `root`.
std::vector<BlockTask> block_order(const BlockDecomposition& dec, std::size_t root);

struct Bipartition {
    std::vector<VertexId> x;
    std::vector<VertexId> y;

    bool in_x(VertexId v) const;
    bool in_y(VertexId v) const;
};

struct BipartiteBlock {
    Bipartition sides;
};

struct FourVertexBlock {
    std::vector<VertexId> vertices;
};

// Apexes a, b with independent centers, each joined to both apexes.
struct K11nBlock {
    VertexId apex_a;
    VertexId apex_b;
    std::vector<VertexId> centers;
};

using BlockClass = std::variant<BipartiteBlock, FourVertexBlock, K11nBlock>;

const char* block_kind_name(const BlockClass& c);

// Two-coloring of the subgraph spanned by `edges`; empty if it has an odd cycle.
// The lowest vertex lands in X.
std::optional<Bipartition> bipartition_of(const Multigraph& g, const EdgeSet& edges);

// Throws NotLinePerfect when the block is none of the three shapes.
BlockClass classify_block(const Multigraph& g, const EdgeSet& block);

// max(max degree, max |E(a,b,c)|) over the active subgraph.
std::size_t clique_bound(const Multigraph& g, const EdgeSet& active);

// Chromatic index of a line perfect multigraph. Throws NotLinePerfect.
std::size_t chromatic_index(const Multigraph& g);

} // namespace lichor

#endif
