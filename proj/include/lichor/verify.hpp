// SPDX-License-Identifier: Apache-2.0

#ifndef LICHOR_VERIFY_HPP
#define LICHOR_VERIFY_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "lichor/graph.hpp"
#include "lichor/lists.hpp"

namespace lichor {

class LineOrientation;

inline constexpr std::size_t kBruteForceEdgeCap = 14;

// Exhaustive backtracking over list choices. Returns nullopt iff no proper
// list coloring exists. Throws SizeCapExceeded above `cap` active edges.
std::optional<EdgeColoring> brute_force_list_color(const Multigraph& g, const EdgeSet& active,
                                                   const ColorLists& lists,
                                                   std::size_t cap = kBruteForceEdgeCap);

// Minimum k such that the graph has a proper edge coloring with colors 1..k.
std::size_t brute_force_chi(const Multigraph& g, std::size_t cap = kBruteForceEdgeCap);

struct VerifyResult {
    bool ok = true;
    std::string message; // first violation, empty when ok

    explicit operator bool() const noexcept { return ok; }
};

// Proper on the line graph, total on `active`, and every color from its list.
VerifyResult verify_coloring(const Multigraph& g, const EdgeSet& active, const ColorLists& lists,
                             const EdgeColoring& coloring);

// K is independent in the line graph and absorbs every other active edge.
bool verify_kernel(const LineOrientation& d, const EdgeSet& active, const EdgeSet& kernel);

} // namespace lichor

#endif
