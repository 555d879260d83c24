// SPDX-License-Identifier: Apache-2.0

#include "lichor/lists.hpp"

#include <algorithm>
#include <iterator>

namespace lichor {

ColorSet make_color_set(std::vector<Color> colors) {
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    return colors;
}

bool contains(const ColorSet& s, Color c) { return std::binary_search(s.begin(), s.end(), c); }

ColorSet color_union(const ColorSet& x, const ColorSet& y) {
    ColorSet out;
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

ColorSet color_intersection(const ColorSet& x, const ColorSet& y) {
    ColorSet out;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

ColorSet color_difference(const ColorSet& x, const ColorSet& y) {
    ColorSet out;
    std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

bool is_subset(const ColorSet& x, const ColorSet& y) {
    return std::includes(y.begin(), y.end(), x.begin(), x.end());
}

ColorLists::ColorLists(std::vector<std::vector<Color>> lists) : lists_(lists.size()) {
    for (std::size_t i = 0; i < lists.size(); ++i) lists_[i] = make_color_set(std::move(lists[i]));
}

void ColorLists::set(EdgeId e, std::vector<Color> colors) {
    lists_.at(e) = make_color_set(std::move(colors));
}

ColorSet ColorLists::union_over(const EdgeSet& edges) const {
    ColorSet out;
    for (EdgeId e : edges) out = color_union(out, lists_.at(e));
    return out;
}

void ColorLists::remove_color(const EdgeSet& edges, Color c) {
    for (EdgeId e : edges) {
        auto& list = lists_.at(e);
        auto it = std::lower_bound(list.begin(), list.end(), c);
        if (it != list.end() && *it == c) list.erase(it);
    }
}

void ColorLists::remove_colors(const EdgeSet& edges, const ColorSet& colors) {
    for (EdgeId e : edges) lists_.at(e) = color_difference(lists_.at(e), colors);
}

void ColorLists::trim(EdgeId e, std::size_t size) {
    auto& list = lists_.at(e);
    if (list.size() > size) list.resize(size);
}

ColorSet colors_at(const Multigraph& g, const EdgeSet& active, const ColorLists& lists,
                   VertexId v) {
    return lists.union_over(edges_at(g, active, v));
}

ColorSet colors_between(const Multigraph& g, const EdgeSet& active, const ColorLists& lists,
                        VertexId u, VertexId v) {
    return lists.union_over(edges_between(g, active, u, v));
}

void EdgeColoring::merge(const EdgeColoring& other) {
    if (colors_.size() < other.colors_.size()) colors_.resize(other.colors_.size());
    for (std::size_t i = 0; i < other.colors_.size(); ++i)
        if (other.colors_[i]) colors_[i] = other.colors_[i];
}

bool EdgeColoring::total_on(const EdgeSet& edges) const {
    return std::all_of(edges.begin(), edges.end(),
                       [&](EdgeId e) { return e < colors_.size() && colors_[e].has_value(); });
}

} // namespace lichor
