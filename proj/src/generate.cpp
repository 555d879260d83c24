// SPDX-License-Identifier: Apache-2.0

#include "lichor/generate.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "lichor/errors.hpp"

namespace lichor {

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) return rng(); // full 64-bit range
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return lo + draw % span;
}

namespace {

struct LocalBlock {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    void add(std::size_t u, std::size_t v, std::size_t mult) {
        for (std::size_t i = 0; i < mult; ++i) edges.emplace_back(u, v);
    }
};

template <typename T>
void shuffle(std::vector<T>& xs, Rng& rng) {
    for (std::size_t i = xs.size(); i > 1; --i)
        std::swap(xs[i - 1], xs[uniform(rng, 0, i - 1)]);
}

LocalBlock bipartite_block(const GenParams& p, Rng& rng) {
    LocalBlock b;
    auto mult = [&] { return uniform(rng, 1, p.max_multiplicity); };
    if (uniform(rng, 0, 2) == 0) {
        b.vertex_count = 2;
        b.add(0, 1, mult());
        return b;
    }
    const std::size_t len = uniform(rng, 0, 1) == 0 ? 4 : 6;
    b.vertex_count = len;
    for (std::size_t i = 0; i < len; ++i) b.add(i, (i + 1) % len, mult());
    // chords between even (X) and odd (Y) positions
    for (std::size_t x = 0; x < len; x += 2)
        for (std::size_t y = 1; y < len; y += 2) {
            const bool on_cycle = (y == x + 1) || (x == 0 && y == len - 1) || (x == y + 1);
            if (!on_cycle && uniform(rng, 0, 9) < 3) b.add(x, y, mult());
        }
    return b;
}

LocalBlock four_vertex_block(const GenParams& p, Rng& rng) {
    LocalBlock b;
    b.vertex_count = 4;
    // Dropping one pair gives K_{1,1,2}; dropping more could break the shape.
    const std::size_t dropped = uniform(rng, 0, 2) == 0 ? uniform(rng, 0, 5) : 6;
    std::size_t pair = 0;
    for (std::size_t u = 0; u < 4; ++u)
        for (std::size_t v = u + 1; v < 4; ++v, ++pair)
            if (pair != dropped) b.add(u, v, uniform(rng, 1, p.max_multiplicity));
    return b;
}

LocalBlock k11n_block(const GenParams& p, Rng& rng) {
    LocalBlock b;
    const std::size_t n = uniform(rng, 1, p.max_centers);
    b.vertex_count = n + 2;
    b.add(0, 1, uniform(rng, 1, p.max_multiplicity));
    for (std::size_t c = 2; c < n + 2; ++c) {
        b.add(0, c, uniform(rng, 1, p.max_multiplicity));
        b.add(1, c, uniform(rng, 1, p.max_multiplicity));
    }
    return b;
}

LocalBlock draw_block(const GenParams& p, Rng& rng) {
    const auto& w = p.weights;
    const std::uint64_t total = std::uint64_t{w.bipartite} + w.four_vertex + w.k11n;
    const std::uint64_t pick = uniform(rng, 0, total - 1);
    if (pick < w.bipartite) return bipartite_block(p, rng);
    if (pick < std::uint64_t{w.bipartite} + w.four_vertex) return four_vertex_block(p, rng);
    return k11n_block(p, rng);
}

} // namespace

Multigraph gen_line_perfect(const GenParams& params) {
    if (params.block_count == 0 || params.max_multiplicity == 0 || params.max_centers == 0)
        throw InputError("generator counts must be positive");
    const auto& w = params.weights;
    if (std::uint64_t{w.bipartite} + w.four_vertex + w.k11n == 0)
        throw InputError("generator block weights are all zero");

    Rng rng(params.seed);
    constexpr std::size_t kAttempts = 10000;
    for (std::size_t attempt = 0; attempt < kAttempts; ++attempt) {
        std::size_t vertex_count = 0;
        std::vector<Endpoints> edges;
        for (std::size_t k = 0; k < params.block_count; ++k) {
            const LocalBlock block = draw_block(params, rng);
            std::vector<VertexId> to_global(block.vertex_count);
            std::size_t glued = block.vertex_count; // none for the first block
            VertexId anchor = 0;
            if (k > 0) {
                anchor = static_cast<VertexId>(uniform(rng, 0, vertex_count - 1));
                glued = uniform(rng, 0, block.vertex_count - 1);
            }
            for (std::size_t l = 0; l < block.vertex_count; ++l)
                to_global[l] = (l == glued) ? anchor : static_cast<VertexId>(vertex_count++);
            for (const auto& [u, v] : block.edges) edges.push_back({to_global[u], to_global[v]});
        }
        if (params.max_edges != 0 && edges.size() > params.max_edges) continue;

        std::vector<VertexId> relabel(vertex_count);
        std::iota(relabel.begin(), relabel.end(), VertexId{0});
        shuffle(relabel, rng);
        shuffle(edges, rng);
        for (auto& e : edges) {
            e = {relabel[e.u], relabel[e.v]};
            if (uniform(rng, 0, 1) == 1) std::swap(e.u, e.v);
        }
        return Multigraph(vertex_count, std::move(edges));
    }
    throw InputError("could not generate a graph within " + std::to_string(params.max_edges) +
                     " edges");
}

ColorLists random_lists(const Multigraph& g, std::size_t size, std::size_t universe, Rng& rng) {
    if (size > universe) throw InputError("list size exceeds the color universe");
    std::vector<std::vector<Color>> lists(g.edge_count());
    std::vector<Color> pool(universe);
    std::iota(pool.begin(), pool.end(), Color{1});
    for (auto& list : lists) {
        // partial Fisher-Yates
        for (std::size_t i = 0; i < size; ++i)
            std::swap(pool[i], pool[uniform(rng, i, universe - 1)]);
        list.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
    }
    return ColorLists(std::move(lists));
}

ColorLists identical_lists(const Multigraph& g, std::size_t k) {
    std::vector<Color> base(k);
    std::iota(base.begin(), base.end(), Color{1});
    return ColorLists(std::vector<std::vector<Color>>(g.edge_count(), base));
}

} // namespace lichor
