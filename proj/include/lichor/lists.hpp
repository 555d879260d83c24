// SPDX-License-Identifier: Apache-2.0

#ifndef LICHOR_LISTS_HPP
#define LICHOR_LISTS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lichor/graph.hpp"

namespace lichor {

using Color = std::uint64_t;

// Sorted, duplicate-free.
using ColorSet = std::vector<Color>;

ColorSet make_color_set(std::vector<Color> colors);
bool contains(const ColorSet& s, Color c);
ColorSet color_union(const ColorSet& x, const ColorSet& y);
ColorSet color_intersection(const ColorSet& x, const ColorSet& y);
ColorSet color_difference(const ColorSet& x, const ColorSet& y);
bool is_subset(const ColorSet& x, const ColorSet& y);

// One color list per edge id of the associated graph.
class ColorLists {
public:
    ColorLists() = default;
    explicit ColorLists(std::size_t edge_count) : lists_(edge_count) {}
    // Each list is deduplicated and sorted.
    explicit ColorLists(std::vector<std::vector<Color>> lists);

    std::size_t size() const noexcept { return lists_.size(); }
    const ColorSet& operator[](EdgeId e) const { return lists_.at(e); }
    void set(EdgeId e, std::vector<Color> colors);

    // A_F
    ColorSet union_over(const EdgeSet& edges) const;
    void remove_color(const EdgeSet& edges, Color c);
    void remove_colors(const EdgeSet& edges, const ColorSet& colors);
    // Keeps the `size` smallest colors of A_e.
    void trim(EdgeId e, std::size_t size);

    friend bool operator==(const ColorLists&, const ColorLists&) = default;

private:
    std::vector<ColorSet> lists_;
};

// A(v) over active edges.
ColorSet colors_at(const Multigraph& g, const EdgeSet& active, const ColorLists& lists,
                   VertexId v);
// A(u,v) over active edges.
ColorSet colors_between(const Multigraph& g, const EdgeSet& active, const ColorLists& lists,
                        VertexId u, VertexId v);

// Partial map edge id -> color.
class EdgeColoring {
public:
    EdgeColoring() = default;
    explicit EdgeColoring(std::size_t edge_count) : colors_(edge_count) {}

    std::size_t size() const noexcept { return colors_.size(); }
    std::optional<Color> operator[](EdgeId e) const { return colors_.at(e); }
    bool assigned(EdgeId e) const { return colors_.at(e).has_value(); }
    void assign(EdgeId e, Color c) { colors_.at(e) = c; }
    void clear(EdgeId e) { colors_.at(e).reset(); }
    // Copies every assigned entry of `other` into this coloring.
    void merge(const EdgeColoring& other);
    bool total_on(const EdgeSet& edges) const;

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

private:
    std::vector<std::optional<Color>> colors_;
};

} // namespace lichor

#endif
