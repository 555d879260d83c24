// SPDX-License-Identifier: Apache-2.0

#ifndef LICHOR_INVARIANTS_HPP
#define LICHOR_INVARIANTS_HPP

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "lichor/errors.hpp"

namespace lichor {

// Runtime checks that mirror the steps of the coloring proofs.
enum class Check : std::size_t {
    Degab,             // a reducing pair lowers d(a) and d(b) by exactly one each
    GreatExclusive,    // a great center excludes every other big center
    SortedGreat,       // with centers sorted by t, only the first may be great
    BigGreatMonotone,  // big/great survive a reducing step; great after implies big before
    Demand,            // |A_e| >= f(e) at every recursion level
    WeakBounds,        // weak inequalities, including the pair union bound
    SplittingPersist,  // weak-phase entry condition still holds
    ChiDrop,           // chi' falls by one per four-vertex reducing step
    ReducingChoice,    // class-specific facts about the chosen reducing color
    GalvinOutdegree,   // d_out(e) < chi'(block), and < d(v) on E(v)
    Kernel,            // deferred-acceptance output is a kernel
    ListBudget,        // |A_e| > d_out(e) throughout the kernel coloring loop
    SingleEntry,       // each block has at most one precolored vertex
    Hall,              // base case of an induction admits a transversal
    Coloring,          // block output is proper and list-respecting
    Count_
};

inline constexpr std::size_t kCheckCount = static_cast<std::size_t>(Check::Count_);

std::string_view check_name(Check c);

class InvariantError : public Error {
public:
    InvariantError(Check check, const std::string& what)
        : Error(std::string(check_name(check)) + ": " + what), check_(check) {}

    Check check() const noexcept { return check_; }

private:
    Check check_;
};

// Counts evaluations and failures per check. A failure throws InvariantError.
class InvariantLog {
public:
    template <typename Describe>
    void require(Check c, bool ok, Describe&& describe) {
        ++evaluated_[index(c)];
        if (!ok) {
            ++violated_[index(c)];
            throw InvariantError(c, std::forward<Describe>(describe)());
        }
    }

    void require(Check c, bool ok) {
        require(c, ok, [] { return std::string("violated"); });
    }

    std::size_t evaluated(Check c) const { return evaluated_[index(c)]; }
    std::size_t violated(Check c) const { return violated_[index(c)]; }
    std::size_t total_violations() const;

    void merge(const InvariantLog& other);

private:
    static std::size_t index(Check c) { return static_cast<std::size_t>(c); }

    std::array<std::size_t, kCheckCount> evaluated_{};
    std::array<std::size_t, kCheckCount> violated_{};
};

} // namespace lichor

#endif
