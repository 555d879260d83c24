// SPDX-License-Identifier: Apache-2.0

#ifndef LICHOR_GENERATE_HPP
#define LICHOR_GENERATE_HPP

#include <cstddef>
#include <cstdint>
#include <random>

#include "lichor/graph.hpp"
#include "lichor/lists.hpp"

namespace lichor {

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi], independent of the standard library's
// distribution implementations so output is identical across toolchains.
std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi);

struct BlockWeights {
    unsigned bipartite = 1;
    unsigned four_vertex = 1;
    unsigned k11n = 1;
};

struct GenParams {
    std::uint64_t seed = 0;
    std::size_t block_count = 1;
    std::size_t max_multiplicity = 1;
    std::size_t max_centers = 3;
    BlockWeights weights;
    std::size_t max_edges = 0; // 0: unbounded
};

// Random tree of blocks glued at single vertices. Each block is a bipartite
// multigraph, a four-vertex multigraph, or a K_{1,1,n}, so the result is line
// perfect. Vertex ids and edge order are shuffled. Throws InputError on
// invalid parameters or an unreachable edge bound.
Multigraph gen_line_perfect(const GenParams& params);

// `size` distinct colors per edge drawn from 1..universe.
ColorLists random_lists(const Multigraph& g, std::size_t size, std::size_t universe, Rng& rng);

// A_e = {1..k} for every edge.
ColorLists identical_lists(const Multigraph& g, std::size_t k);

} // namespace lichor

#endif
