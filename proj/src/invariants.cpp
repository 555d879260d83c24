// SPDX-License-Identifier: Apache-2.0

#include "lichor/invariants.hpp"

namespace lichor {

std::string_view check_name(Check c) {
    switch (c) {
    case Check::Degab: return "degab";
    case Check::GreatExclusive: return "great-exclusive";
    case Check::SortedGreat: return "sorted-great";
    case Check::BigGreatMonotone: return "big-great-monotone";
    case Check::Demand: return "demand";
    case Check::WeakBounds: return "weak-bounds";
    case Check::SplittingPersist: return "splitting-persist";
    case Check::ChiDrop: return "chi-drop";
    case Check::ReducingChoice: return "reducing-choice";
    case Check::GalvinOutdegree: return "galvin-outdegree";
    case Check::Kernel: return "kernel";
    case Check::ListBudget: return "list-budget";
    case Check::SingleEntry: return "single-entry";
    case Check::Hall: return "hall";
    case Check::Coloring: return "coloring";
    case Check::Count_: break;
    }
    return "unknown";
}

std::size_t InvariantLog::total_violations() const {
    std::size_t n = 0;
    for (auto v : violated_) n += v;
    return n;
}

void InvariantLog::merge(const InvariantLog& other) {
    for (std::size_t i = 0; i < kCheckCount; ++i) {
        evaluated_[i] += other.evaluated_[i];
        violated_[i] += other.violated_[i];
    }
}

} // namespace lichor
