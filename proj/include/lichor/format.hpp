// SPDX-License-Identifier: Apache-2.0

#ifndef LICHOR_FORMAT_HPP
#define LICHOR_FORMAT_HPP

#include <string>
#include <string_view>

#include "lichor/solve.hpp"

namespace lichor {

// {"vertices": n, "edges": [[u,v],...], "lists": [[c,...],...]}
// Lists align with edges by position; duplicate colors collapse.
// Throws ParseError naming the line and field at fault.
Instance parse_instance(std::string_view text);
// Canonical single-line form with sorted lists, newline-terminated.
std::string emit_instance(const Instance& inst);

// {"colors": [...], "trace": [...], "conforming": b, "diagnostics": [...]}
std::string emit_report(const SolveReport& report);
SolveReport parse_report(std::string_view text);

} // namespace lichor

#endif
