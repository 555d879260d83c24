// SPDX-License-Identifier: Apache-2.0

#include "lichor/clique.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>

#include "lichor/errors.hpp"
#include "lichor/structure.hpp"
#include "lichor/transversal.hpp"

namespace lichor {

bool TriangleProfile::is_big(VertexId v) const {
    return std::binary_search(big.begin(), big.end(), v);
}

bool TriangleProfile::is_great(VertexId v) const {
    return std::binary_search(great.begin(), great.end(), v);
}

TriangleProfile triangle_profile(const Multigraph& g, const EdgeSet& active, VertexId a,
                                 VertexId b, const std::vector<VertexId>& centers) {
    if (a == b) throw InputError("apexes must differ");
    for (EdgeId e : active)
        if (!g.touches(e, a) && !g.touches(e, b))
            throw InputError("edge " + std::to_string(e) +
                             " joins two centers; centers must be independent");
    TriangleProfile p;
    p.apex_a = a;
    p.apex_b = b;
    p.degree_a = degree(g, active, a);
    p.degree_b = degree(g, active, b);
    const std::size_t ab = edges_between(g, active, a, b).size();
    for (VertexId v : centers) {
        if (v == a || v == b) throw InputError("an apex cannot also be a center");
        p.t_of[v] = ab + edges_between(g, active, a, v).size() +
                    edges_between(g, active, b, v).size();
    }
    p.centers = centers;
    std::sort(p.centers.begin(), p.centers.end(), [&](VertexId x, VertexId y) {
        return p.t_of[x] != p.t_of[y] ? p.t_of[x] > p.t_of[y] : x < y;
    });
    const std::size_t m = p.apex_max();
    for (const auto& [v, t] : p.t_of) {
        if (t >= m) p.big.push_back(v);
        if (t > m) p.great.push_back(v);
    }
    return p;
}

TriangleProfile triangle_profile(const Multigraph& g, const EdgeSet& active, VertexId a,
                                 VertexId b) {
    std::vector<VertexId> centers;
    for (VertexId v : vertices_of(g, active))
        if (v != a && v != b) centers.push_back(v);
    return triangle_profile(g, active, a, b, centers);
}

void check_profile(const TriangleProfile& p, InvariantLog& log) {
    log.require(Check::GreatExclusive, p.great.empty() || p.big.size() == 1, [&] {
        return "center " + std::to_string(p.great.front()) + " is great but " +
               std::to_string(p.big.size()) + " centers are big";
    });
    log.require(Check::SortedGreat,
                p.great.empty() || (p.great.size() == 1 && p.great.front() == p.centers.front()),
                [&] { return std::string("a great center is not first in t order"); });
}

DemandFunction demand_four_vertex(const Multigraph& g, const EdgeSet& active, VertexId v) {
    const std::size_t chi = clique_bound(g, active);
    const std::size_t dv = degree(g, active, v);
    DemandFunction f;
    for (EdgeId e : active) f[e] = g.touches(e, v) ? dv : chi;
    return f;
}

DemandFunction demand_apex(const Multigraph& g, const EdgeSet& active, VertexId a, VertexId b,
                           const std::vector<VertexId>& centers) {
    const auto p = triangle_profile(g, active, a, b, centers);
    DemandFunction f;
    for (EdgeId e : active) {
        if (g.touches(e, a)) {
            f[e] = p.degree_a;
        } else {
            const VertexId v = g.other_end(e, b);
            f[e] = std::max(p.apex_max(), p.t(v));
        }
    }
    return f;
}

DemandFunction demand_center(const Multigraph& g, const EdgeSet& active, VertexId a, VertexId b,
                             VertexId v1, const std::vector<VertexId>& centers) {
    const auto p = triangle_profile(g, active, a, b, centers);
    DemandFunction f;
    for (EdgeId e : active) {
        if (g.touches(e, v1)) {
            f[e] = degree(g, active, v1);
        } else if (g.touches(e, a) && g.touches(e, b)) {
            f[e] = std::max(p.apex_max(), p.t(v1));
        } else {
            const VertexId v = g.touches(e, a) ? g.other_end(e, a) : g.other_end(e, b);
            f[e] = std::max(p.apex_max(), p.t(v));
        }
    }
    return f;
}

const char* splitting_name(SplittingClass s) {
    switch (s) {
    case SplittingClass::ASplitting: return "a-splitting";
    case SplittingClass::BSplitting: return "b-splitting";
    case SplittingClass::None: return "none";
    }
    return "none";
}

namespace {

// Mutable state of one induction: the remaining graph, lists, and the colors
// fixed so far.
struct Level {
    const Multigraph* g;
    EdgeSet active;
    ColorLists lists;
    EdgeColoring out;
    std::size_t depth = 0;
};

Level start_level(const Multigraph& g, const EdgeSet& active, const ColorLists& lists,
                  const DemandFunction& f, InvariantLog& log, const char* who) {
    Level level{&g, active, lists, EdgeColoring(g.edge_count()), 0};
    for (const auto& [e, need] : f) {
        log.require(Check::Demand, lists[e].size() >= need, [&] {
            return std::string(who) + ": edge " + std::to_string(e) + " has " +
                   std::to_string(lists[e].size()) + " colors, demand " + std::to_string(need);
        });
        level.lists.trim(e, need);
    }
    return level;
}

std::string state_dump(const Level& level) {
    std::ostringstream os;
    os << "active edges:";
    for (EdgeId e : level.active) {
        const auto [u, v] = level.g->endpoints(e);
        os << ' ' << e << ":(" << u << ',' << v << "){";
        const auto& list = level.lists[e];
        for (std::size_t i = 0; i < list.size(); ++i) os << (i ? "," : "") << list[i];
        os << '}';
    }
    return os.str();
}

void check_demand(const Level& level, const DemandFunction& f, InvariantLog& log,
                  const char* who) {
    for (const auto& [e, need] : f) {
        const std::size_t have = level.lists[e].size();
        log.require(Check::Demand, have >= need, [&] {
            return std::string(who) + ": edge " + std::to_string(e) + " has " +
                   std::to_string(have) + " colors, demand " + std::to_string(need) + "; " +
                   state_dump(level);
        });
    }
}

void color_pair(Level& level, const ReducingSet& r) {
    level.out.assign(r.e, r.c);
    level.out.assign(r.q, r.c);
    level.active.erase(r.e);
    level.active.erase(r.q);
    level.lists.remove_color(level.active, r.c);
    ++level.depth;
}

void finish_transversal(Level& level, InvariantLog& log, const char* who) {
    auto result = solve_sdr(*level.g, level.active, level.lists);
    if (auto* violator = std::get_if<HallViolator>(&result)) {
        log.require(Check::Hall, false, [&] {
            return std::string(who) + ": base case has " + std::to_string(violator->edges.size()) +
                   " edges sharing " + std::to_string(violator->colors.size()) + " colors; " +
                   state_dump(level);
        });
    }
    log.require(Check::Hall, true);
    level.out.merge(std::get<EdgeColoring>(result));
    level.active = EdgeSet();
}

bool meets(const Multigraph& g, const ReducingSet& r, VertexId v) {
    return g.touches(r.e, v) || g.touches(r.q, v);
}

// One edge at x and the other at y.
bool straddles(const Multigraph& g, const ReducingSet& r, VertexId x, VertexId y) {
    return (g.touches(r.e, x) && g.touches(r.q, y)) || (g.touches(r.e, y) && g.touches(r.q, x));
}

bool touches_any(const Multigraph& g, EdgeId e, const std::vector<VertexId>& vs) {
    return std::any_of(vs.begin(), vs.end(), [&](VertexId v) { return g.touches(e, v); });
}

void check_degab(const TriangleProfile& before, const TriangleProfile& after, std::size_t drop,
                 InvariantLog& log) {
    log.require(Check::Degab,
                after.degree_a + drop == before.degree_a && after.degree_b + drop == before.degree_b,
                [&] {
                    return "apex degrees went from (" + std::to_string(before.degree_a) + "," +
                           std::to_string(before.degree_b) + ") to (" +
                           std::to_string(after.degree_a) + "," + std::to_string(after.degree_b) +
                           "), expected a drop of " + std::to_string(drop);
                });
}

// `single` adds the converse: great after a single step implies big before.
void check_monotone(const TriangleProfile& before, const TriangleProfile& after, bool single,
                    InvariantLog& log) {
    for (const auto& [v, t] : before.t_of) {
        (void)t;
        const bool ok = (!before.is_big(v) || after.is_big(v)) &&
                        (!before.is_great(v) || after.is_great(v)) &&
                        (!single || !after.is_great(v) || before.is_big(v));
        log.require(Check::BigGreatMonotone, ok, [&] {
            return "center " + std::to_string(v) + " changed big/great status against the step";
        });
    }
}

TriangleProfile profile_checked(const Level& level, VertexId a, VertexId b,
                                const std::vector<VertexId>& centers, InvariantLog& log) {
    auto p = triangle_profile(*level.g, level.active, a, b, centers);
    check_profile(p, log);
    return p;
}

// Reducing pair step with the degree and big/great checks.
void reduce_checked(Level& level, const ReducingSet& r, VertexId a, VertexId b,
                    const std::vector<VertexId>& centers, InvariantLog& log) {
    const auto before = profile_checked(level, a, b, centers, log);
    color_pair(level, r);
    const auto after = profile_checked(level, a, b, centers, log);
    check_degab(before, after, 1, log);
    check_monotone(before, after, true, log);
}

std::vector<VertexId> with_center(VertexId v1, const std::vector<VertexId>& centers) {
    std::vector<VertexId> all = centers;
    if (std::find(all.begin(), all.end(), v1) == all.end()) all.push_back(v1);
    std::sort(all.begin(), all.end());
    return all;
}

void run_weak_phase(Level& level, const CenterFrame& fr, InvariantLog& log) {
    const Multigraph& g = *level.g;
    std::vector<VertexId> centers{fr.v1, fr.v2};
    centers.insert(centers.end(), fr.rest.begin(), fr.rest.end());
    std::sort(centers.begin(), centers.end());

    while (true) {
        const auto prof = profile_checked(level, fr.a, fr.b, centers, log);
        const auto bounds = weak_bounds(g, level.active, fr);
        const std::string broken = weak_bounds_violation(bounds, level.lists);
        log.require(Check::WeakBounds, broken.empty(),
                    [&] { return broken + "; " + state_dump(level); });

        const auto rs = find_reducing_sets(g, level.active, level.lists);
        if (rs.empty()) {
            finish_transversal(level, log, "weak phase");
            return;
        }

        const ColorSet av1 = colors_at(g, level.active, level.lists, fr.v1);
        const ColorSet av2 = colors_at(g, level.active, level.lists, fr.v2);
        log.require(Check::SplittingPersist, prof.is_big(fr.v2), [&] {
            return "v2=" + std::to_string(fr.v2) + " is no longer big; " + state_dump(level);
        });
        for (const auto& r : rs) {
            if (!contains(av1, r.c) || !contains(av2, r.c)) continue;
            const bool ok =
                !straddles(g, r, fr.v1, fr.v2) &&
                classify_splitting(g, level.active, level.lists, fr, r.c) ==
                    SplittingClass::ASplitting;
            log.require(Check::SplittingPersist, ok, [&] {
                return "reducing color " + std::to_string(r.c) +
                       " in A(v1) and A(v2) is not a-splitting; " + state_dump(level);
            });
        }

        std::optional<ReducingSet> pick;
        for (const auto& r : rs) {
            if ((g.touches(r.e, fr.v1) && touches_any(g, r.q, fr.rest)) ||
                (g.touches(r.q, fr.v1) && touches_any(g, r.e, fr.rest))) {
                pick = r;
                break;
            }
        }
        if (pick) {
            const ColorSet bv2 = colors_between(g, level.active, level.lists, fr.b, fr.v2);
            log.require(Check::ReducingChoice, !contains(bv2, pick->c), [&] {
                return "color " + std::to_string(pick->c) + " chosen at v1 lies in A(b,v2)";
            });
        } else {
            for (const auto& r : rs)
                log.require(Check::ReducingChoice, !contains(av1, r.c), [&] {
                    return "reducing color " + std::to_string(r.c) +
                           " is in A(v1) but no pair joins v1 to another center; " +
                           state_dump(level);
                });
            for (const auto& r : rs) {
                if (contains(av2, r.c) && meets(g, r, fr.v2)) {
                    pick = r;
                    break;
                }
            }
            if (!pick) {
                pick = rs.front();
                log.require(Check::ReducingChoice,
                            !contains(av1, pick->c) && !contains(av2, pick->c), [&] {
                                return "fallback color " + std::to_string(pick->c) +
                                       " is in A(v1) or A(v2)";
                            });
            }
        }
        reduce_checked(level, *pick, fr.a, fr.b, centers, log);
    }
}

} // namespace

Induction solve_k4(const Multigraph& g, const EdgeSet& active, VertexId v,
                   const ColorLists& lists, InvariantLog& log) {
    auto verts = vertices_of(g, active);
    if (!std::binary_search(verts.begin(), verts.end(), v)) {
        verts.push_back(v);
        std::sort(verts.begin(), verts.end());
    }
    if (verts.size() > 4) throw InputError("solve_k4 needs a graph on at most four vertices");

    Level level = start_level(g, active, lists, demand_four_vertex(g, active, v), log, "k4");
    while (true) {
        check_demand(level, demand_four_vertex(g, level.active, v), log, "k4");
        const auto rs = find_reducing_sets(g, level.active, level.lists);
        if (rs.empty()) {
            finish_transversal(level, log, "k4");
            break;
        }
        const std::size_t chi_before = clique_bound(g, level.active);
        std::vector<std::size_t> deg_before;
        for (VertexId w : verts) deg_before.push_back(degree(g, level.active, w));
        color_pair(level, rs.front());
        const std::size_t chi_after = clique_bound(g, level.active);
        log.require(Check::ChiDrop, chi_after + 1 == chi_before, [&] {
            return "chi' went from " + std::to_string(chi_before) + " to " +
                   std::to_string(chi_after);
        });
        for (std::size_t i = 0; i < verts.size(); ++i) {
            const std::size_t now = degree(g, level.active, verts[i]);
            log.require(Check::Degab, now + 1 == deg_before[i], [&] {
                return "vertex " + std::to_string(verts[i]) + " lost " +
                       std::to_string(deg_before[i] - now) + " edges in one step";
            });
        }
    }
    return {std::move(level.out), level.depth};
}

Induction solve_k11n_apex(const Multigraph& g, const EdgeSet& active, VertexId a, VertexId b,
                          const std::vector<VertexId>& centers, const ColorLists& lists,
                          InvariantLog& log) {
    Level level =
        start_level(g, active, lists, demand_apex(g, active, a, b, centers), log, "k11n apex");
    while (true) {
        check_demand(level, demand_apex(g, level.active, a, b, centers), log, "k11n apex");
        const auto prof = profile_checked(level, a, b, centers, log);
        const auto rs = find_reducing_sets(g, level.active, level.lists);
        if (rs.empty()) {
            finish_transversal(level, log, "k11n apex");
            break;
        }
        const VertexId v1 = prof.centers.front(); // a reducing set implies a center
        auto it = std::find_if(rs.begin(), rs.end(),
                               [&](const ReducingSet& r) { return meets(g, r, v1); });
        const ReducingSet pick = (it != rs.end()) ? *it : rs.front();
        if (it == rs.end()) {
            const ColorSet av1 = colors_at(g, level.active, level.lists, v1);
            log.require(Check::ReducingChoice, !contains(av1, pick.c), [&] {
                return "color " + std::to_string(pick.c) + " is in A(v1) but no pair meets v1";
            });
        }
        reduce_checked(level, pick, a, b, centers, log);
    }
    return {std::move(level.out), level.depth};
}

SplittingClass classify_splitting(const Multigraph& g, const EdgeSet& active,
                                  const ColorLists& lists, const CenterFrame& frame, Color c) {
    const ColorSet av1 = colors_at(g, active, lists, frame.v1);
    const ColorSet av2 = colors_at(g, active, lists, frame.v2);
    if (!contains(av1, c) || !contains(av2, c))
        throw InputError("color " + std::to_string(c) + " is not in both A(v1) and A(v2)");

    auto in = [&](VertexId x, VertexId y) {
        return contains(colors_between(g, active, lists, x, y), c);
    };
    auto at_rest = [&](VertexId apex) {
        return std::any_of(frame.rest.begin(), frame.rest.end(),
                           [&](VertexId v) { return in(apex, v); });
    };
    if (!in(frame.b, frame.v1) && !in(frame.b, frame.v2) && in(frame.a, frame.v1) &&
        in(frame.a, frame.v2) && at_rest(frame.b))
        return SplittingClass::ASplitting;
    if (!in(frame.a, frame.v1) && !in(frame.a, frame.v2) && in(frame.b, frame.v1) &&
        in(frame.b, frame.v2) && at_rest(frame.a))
        return SplittingClass::BSplitting;
    return SplittingClass::None;
}

WeakBounds weak_bounds(const Multigraph& g, const EdgeSet& active, const CenterFrame& fr) {
    std::vector<VertexId> centers{fr.v1, fr.v2};
    centers.insert(centers.end(), fr.rest.begin(), fr.rest.end());
    const auto p = triangle_profile(g, active, fr.a, fr.b, centers);
    const std::size_t m = p.apex_max();
    const std::size_t d1 = degree(g, active, fr.v1);

    WeakBounds wb;
    for (EdgeId e : active) {
        std::size_t need;
        if (g.touches(e, fr.v1)) {
            need = d1;
        } else if (g.touches(e, fr.a) && g.touches(e, fr.b)) {
            need = std::max(m, p.t(fr.v1));
        } else if (g.touches(e, fr.v2)) {
            need = g.touches(e, fr.b) ? std::max(m, p.t(fr.v2)) : m;
        } else {
            const VertexId v = g.touches(e, fr.a) ? g.other_end(e, fr.a) : g.other_end(e, fr.b);
            need = std::max(m, p.t(v));
        }
        wb.per_edge[e] = need;
    }
    wb.pair_r = edges_between(g, active, fr.b, fr.v1);
    wb.pair_s = edges_between(g, active, fr.a, fr.v2);
    wb.pair_bound = p.t(fr.v2) + d1;
    return wb;
}

std::string weak_bounds_violation(const WeakBounds& bounds, const ColorLists& lists) {
    for (const auto& [e, need] : bounds.per_edge)
        if (lists[e].size() < need)
            return "weak bound: edge " + std::to_string(e) + " has " +
                   std::to_string(lists[e].size()) + " colors, needs " + std::to_string(need);
    for (EdgeId r : bounds.pair_r)
        for (EdgeId s : bounds.pair_s) {
            const std::size_t have = color_union(lists[r], lists[s]).size();
            if (have < bounds.pair_bound)
                return "weak pair bound: edges " + std::to_string(r) + " and " +
                       std::to_string(s) + " cover " + std::to_string(have) + " colors, need " +
                       std::to_string(bounds.pair_bound);
        }
    return {};
}

Induction weak_phase(const Multigraph& g, const EdgeSet& active, const CenterFrame& frame,
                     const ColorLists& lists, InvariantLog& log) {
    Level level{&g, active, lists, EdgeColoring(g.edge_count()), 0};
    run_weak_phase(level, frame, log);
    return {std::move(level.out), level.depth};
}

Induction solve_k11n_center(const Multigraph& g, const EdgeSet& active, VertexId a, VertexId b,
                            VertexId v1, const std::vector<VertexId>& centers,
                            const ColorLists& lists, InvariantLog& log) {
    const auto all = with_center(v1, centers);
    Level level = start_level(g, active, lists, demand_center(g, active, a, b, v1, all), log,
                              "k11n center");
    std::vector<VertexId> others;
    for (VertexId v : all)
        if (v != v1) others.push_back(v);

    while (true) {
        check_demand(level, demand_center(g, level.active, a, b, v1, all), log, "k11n center");
        const auto prof = profile_checked(level, a, b, all, log);

        // Single E(a,b) edge with a color unseen at v1.
        const ColorSet av1 = colors_at(g, level.active, level.lists, v1);
        const EdgeSet ab = edges_between(g, level.active, a, b);
        std::optional<std::pair<EdgeId, Color>> lone;
        for (EdgeId e : ab) {
            const ColorSet fresh = color_difference(level.lists[e], av1);
            if (!fresh.empty()) {
                lone = {e, fresh.front()};
                break;
            }
        }
        if (lone) {
            const auto [e, c] = *lone;
            level.out.assign(e, c);
            level.active.erase(e);
            level.lists.remove_color(level.active, c);
            ++level.depth;
            const auto after = profile_checked(level, a, b, all, log);
            check_degab(prof, after, 1, log);
            for (VertexId v : all)
                log.require(Check::Degab, after.t(v) + 1 == prof.t(v), [&] {
                    return "t(" + std::to_string(v) + ") did not drop with an E(a,b) edge";
                });
            check_monotone(prof, after, true, log);
            continue;
        }

        const auto rs = find_reducing_sets(g, level.active, level.lists);
        if (rs.empty()) {
            finish_transversal(level, log, "k11n center");
            break;
        }

        // v2: the other center with the largest triangle.
        std::optional<VertexId> v2;
        for (VertexId v : prof.centers)
            if (v != v1) {
                v2 = v;
                break;
            }

        if (!v2 || !prof.is_big(*v2)) {
            auto it = std::find_if(rs.begin(), rs.end(),
                                   [&](const ReducingSet& r) { return meets(g, r, v1); });
            const ReducingSet pick = (it != rs.end()) ? *it : rs.front();
            if (it == rs.end())
                log.require(Check::ReducingChoice, !contains(av1, pick.c), [&] {
                    return "color " + std::to_string(pick.c) + " is in A(v1) but no pair meets v1";
                });
            reduce_checked(level, pick, a, b, all, log);
            continue;
        }

        auto across = std::find_if(rs.begin(), rs.end(), [&](const ReducingSet& r) {
            return straddles(g, r, v1, *v2);
        });
        if (across != rs.end()) {
            reduce_checked(level, *across, a, b, all, log);
            continue;
        }

        CenterFrame frame{a, b, v1, *v2, {}};
        for (VertexId v : prof.centers)
            if (v != v1 && v != *v2) frame.rest.push_back(v);
        std::sort(frame.rest.begin(), frame.rest.end());

        const ColorSet av2 = colors_at(g, level.active, level.lists, *v2);
        std::optional<Color> a_split, b_split;
        for (const auto& r : rs) {
            if (!contains(av1, r.c) || !contains(av2, r.c)) continue;
            const auto kind = classify_splitting(g, level.active, level.lists, frame, r.c);
            log.require(Check::ReducingChoice, kind != SplittingClass::None, [&] {
                return "reducing color " + std::to_string(r.c) +
                       " in A(v1) and A(v2) is neither a- nor b-splitting; " + state_dump(level);
            });
            if (kind == SplittingClass::ASplitting && (!a_split || r.c < *a_split)) a_split = r.c;
            if (kind == SplittingClass::BSplitting && (!b_split || r.c < *b_split)) b_split = r.c;
        }

        if (a_split && b_split) {
            // c1 on E(a,v1) and E(b,v_i); c2 on E(b,v2) and E(a,v_j); i, j > 2.
            auto first_with = [&](Color c, VertexId x, const std::vector<VertexId>& ys) {
                std::optional<EdgeId> found;
                for (EdgeId e : level.active)
                    if (g.touches(e, x) && touches_any(g, e, ys) && contains(level.lists[e], c)) {
                        found = e;
                        break;
                    }
                return found;
            };
            const Color c1 = *a_split, c2 = *b_split;
            const auto e1 = first_with(c1, a, {v1});
            const auto q1 = first_with(c1, b, frame.rest);
            const auto e2 = first_with(c2, b, {*v2});
            const auto q2 = first_with(c2, a, frame.rest);
            log.require(Check::ReducingChoice, e1 && q1 && e2 && q2, [&] {
                return "splitting colors " + std::to_string(c1) + "/" + std::to_string(c2) +
                       " lack their edges; " + state_dump(level);
            });
            const std::vector<EdgeId> four{*e1, *q1, *e2, *q2};
            const bool distinct = EdgeSet(four).size() == 4;
            log.require(Check::ReducingChoice,
                        distinct && !line_adjacent(g, *e1, *q1) && !line_adjacent(g, *e2, *q2),
                        [&] { return std::string("double step edges overlap or touch"); });

            level.out.assign(*e1, c1);
            level.out.assign(*q1, c1);
            level.out.assign(*e2, c2);
            level.out.assign(*q2, c2);
            for (EdgeId e : four) level.active.erase(e);
            level.lists.remove_colors(level.active, make_color_set({c1, c2}));
            ++level.depth;
            const auto after = profile_checked(level, a, b, all, log);
            check_degab(prof, after, 2, log);
            check_monotone(prof, after, false, log);
            continue;
        }

        if (b_split) std::swap(frame.a, frame.b);
        run_weak_phase(level, frame, log);
        break;
    }
    return {std::move(level.out), level.depth};
}

} // namespace lichor
