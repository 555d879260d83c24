// SPDX-License-Identifier: Apache-2.0

#include "lichor/structure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <utility>

#include "lichor/errors.hpp"

namespace lichor {

bool BlockDecomposition::is_cut_vertex(VertexId v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

BlockDecomposition decompose_blocks(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
    std::vector<std::size_t> disc(n, kUnseen), low(n, 0);
    std::vector<EdgeId> edge_stack;
    std::vector<EdgeSet> blocks;

    struct Frame {
        VertexId v;
        std::optional<EdgeId> via;
        std::size_t next = 0;
    };

    std::size_t clock = 0;
    for (VertexId root = 0; root < n; ++root) {
        if (disc[root] != kUnseen || g.incident(root).empty()) continue;
        std::vector<Frame> stack{{root, std::nullopt, 0}};
        disc[root] = low[root] = clock++;
        while (!stack.empty()) {
            Frame& top = stack.back();
            const auto inc = g.incident(top.v);
            if (top.next < inc.size()) {
                const EdgeId e = inc[top.next++];
                if (top.via && *top.via == e) continue;
                const VertexId w = g.other_end(e, top.v);
                if (disc[w] == kUnseen) {
                    edge_stack.push_back(e);
                    disc[w] = low[w] = clock++;
                    stack.push_back({w, e, 0});
                } else if (disc[w] < disc[top.v]) {
                    edge_stack.push_back(e);
                    low[top.v] = std::min(low[top.v], disc[w]);
                }
                continue;
            }
            const Frame done = top;
            stack.pop_back();
            if (stack.empty()) break;
            Frame& parent = stack.back();
            low[parent.v] = std::min(low[parent.v], low[done.v]);
            if (low[done.v] >= disc[parent.v]) {
                std::vector<EdgeId> ids;
                while (true) {
                    const EdgeId e = edge_stack.back();
                    edge_stack.pop_back();
                    ids.push_back(e);
                    if (e == *done.via) break;
                }
                blocks.emplace_back(std::move(ids));
            }
        }
    }

    std::sort(blocks.begin(), blocks.end(),
              [](const EdgeSet& x, const EdgeSet& y) { return x.front() < y.front(); });

    BlockDecomposition dec;
    dec.blocks = std::move(blocks);
    dec.blocks_at.assign(n, {});
    for (std::size_t b = 0; b < dec.blocks.size(); ++b)
        for (VertexId v : vertices_of(g, dec.blocks[b])) dec.blocks_at[v].push_back(b);
    for (VertexId v = 0; v < n; ++v)
        if (dec.blocks_at[v].size() > 1) dec.cut_vertices.push_back(v);
    dec.block_cuts.assign(dec.blocks.size(), {});
    for (VertexId v : dec.cut_vertices)
        for (std::size_t b : dec.blocks_at[v]) dec.block_cuts[b].push_back(v);
    return dec;
}

std::vector<std::vector<std::size_t>> block_components(const BlockDecomposition& dec) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(dec.blocks.size(), false);
    for (std::size_t start = 0; start < dec.blocks.size(); ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> comp;
        std::deque<std::size_t> queue{start};
        seen[start] = true;
        while (!queue.empty()) {
            const std::size_t b = queue.front();
            queue.pop_front();
            comp.push_back(b);
            for (VertexId c : dec.block_cuts[b])
                for (std::size_t other : dec.blocks_at[c])
                    if (!seen[other]) {
                        seen[other] = true;
                        queue.push_back(other);
                    }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<BlockTask> block_order(const BlockDecomposition& dec, std::size_t root) {
    if (root >= dec.blocks.size())
        throw InputError("root block " + std::to_string(root) + " out of range (" +
                         std::to_string(dec.blocks.size()) + " blocks)");
    std::vector<BlockTask> order;
    std::vector<bool> seen(dec.blocks.size(), false);
    std::vector<std::pair<std::size_t, std::optional<VertexId>>> stack{{root, std::nullopt}};
    seen[root] = true;
    while (!stack.empty()) {
        auto [b, entry] = stack.back();
        stack.pop_back();
        order.push_back({b, dec.blocks[b], entry});
        std::vector<std::pair<std::size_t, VertexId>> children;
        for (VertexId c : dec.block_cuts[b]) {
            if (entry && *entry == c) continue;
            for (std::size_t child : dec.blocks_at[c])
                if (!seen[child]) {
                    seen[child] = true;
                    children.emplace_back(child, c);
                }
        }
        for (auto it = children.rbegin(); it != children.rend(); ++it)
            stack.emplace_back(it->first, it->second);
    }
    return order;
}

bool Bipartition::in_x(VertexId v) const { return std::binary_search(x.begin(), x.end(), v); }
bool Bipartition::in_y(VertexId v) const { return std::binary_search(y.begin(), y.end(), v); }

const char* block_kind_name(const BlockClass& c) {
    switch (c.index()) {
    case 0: return "bipartite";
    case 1: return "four_vertex";
    default: return "k11n";
    }
}

std::optional<Bipartition> bipartition_of(const Multigraph& g, const EdgeSet& edges) {
    const auto verts = vertices_of(g, edges);
    std::map<VertexId, int> side;
    for (VertexId start : verts) {
        if (side.count(start)) continue;
        side[start] = 0;
        std::deque<VertexId> queue{start};
        while (!queue.empty()) {
            const VertexId u = queue.front();
            queue.pop_front();
            for (EdgeId e : g.incident(u)) {
                if (!edges.contains(e)) continue;
                const VertexId w = g.other_end(e, u);
                auto it = side.find(w);
                if (it == side.end()) {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                } else if (it->second == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition bip;
    for (const auto& [v, s] : side) (s == 0 ? bip.x : bip.y).push_back(v);
    return bip;
}

namespace {

std::optional<K11nBlock> find_apexes(const Multigraph& g, const EdgeSet& block,
                                     const std::vector<VertexId>& verts) {
    for (VertexId a : verts) {
        for (VertexId b : verts) {
            if (a == b || edges_between(g, block, a, b).empty()) continue;
            K11nBlock shape{a, b, {}};
            bool ok = true;
            for (VertexId v : verts) {
                if (v == a || v == b) continue;
                for (EdgeId e : g.incident(v)) {
                    if (!block.contains(e)) continue;
                    const VertexId w = g.other_end(e, v);
                    if (w != a && w != b) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;
                if (edges_between(g, block, v, a).empty() || edges_between(g, block, v, b).empty()) {
                    ok = false;
                    break;
                }
                shape.centers.push_back(v);
            }
            if (ok) return shape;
        }
    }
    return std::nullopt;
}

} // namespace

BlockClass classify_block(const Multigraph& g, const EdgeSet& block) {
    if (block.empty()) throw InputError("cannot classify an empty block");
    if (auto bip = bipartition_of(g, block)) return BipartiteBlock{std::move(*bip)};
    const auto verts = vertices_of(g, block);
    if (verts.size() == 4) return FourVertexBlock{verts};
    if (verts.size() >= 3) {
        if (auto shape = find_apexes(g, block, verts)) return *shape;
    }
    throw NotLinePerfect("block with edges starting at " + std::to_string(block.front()) +
                         " on " + std::to_string(verts.size()) +
                         " vertices is not bipartite, four-vertex, or K_{1,1,n}");
}

std::size_t clique_bound(const Multigraph& g, const EdgeSet& active) {
    std::map<std::pair<VertexId, VertexId>, std::size_t> mult;
    std::map<VertexId, std::vector<VertexId>> nbrs;
    std::size_t best = 0;
    for (EdgeId e : active) {
        auto [u, v] = g.endpoints(e);
        if (u > v) std::swap(u, v);
        if (mult[{u, v}]++ == 0) {
            nbrs[u].push_back(v);
            nbrs[v].push_back(u);
        }
    }
    for (const auto& [v, adj] : nbrs) best = std::max(best, degree(g, active, v));
    auto m = [&](VertexId x, VertexId y) {
        if (x > y) std::swap(x, y);
        auto it = mult.find({x, y});
        return it == mult.end() ? std::size_t{0} : it->second;
    };
    for (const auto& [key, uv] : mult) {
        const auto [u, v] = key;
        for (VertexId w : nbrs[u])
            if (w > v && m(v, w) > 0) best = std::max(best, uv + m(u, w) + m(v, w));
    }
    return best;
}

std::size_t chromatic_index(const Multigraph& g) {
    std::size_t best = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) best = std::max(best, degree(g, v));
    const auto dec = decompose_blocks(g);
    for (const auto& block : dec.blocks) {
        const auto cls = classify_block(g, block);
        if (const auto* four = std::get_if<FourVertexBlock>(&cls)) {
            const auto& w = four->vertices;
            for (std::size_t skip = 0; skip < 4; ++skip) {
                std::vector<VertexId> t;
                for (std::size_t i = 0; i < 4; ++i)
                    if (i != skip) t.push_back(w[i]);
                best = std::max(best, triangle_edges(g, block, t[0], t[1], t[2]).size());
            }
        } else if (const auto* k = std::get_if<K11nBlock>(&cls)) {
            for (VertexId c : k->centers)
                best = std::max(best, triangle_edges(g, block, k->apex_a, k->apex_b, c).size());
        }
    }
    return best;
}

} // namespace lichor
