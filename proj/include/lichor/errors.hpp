// SPDX-License-Identifier: Apache-2.0

#ifndef LICHOR_ERRORS_HPP
#define LICHOR_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lichor {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad arguments or a violated call contract.
class InputError : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    ParseError(std::size_t line, std::string field, const std::string& what)
        : InputError("line " + std::to_string(line) + (field.empty() ? "" : ", " + field) +
                     ": " + what),
          line_(line), field_(std::move(field)) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    std::size_t line_;
    std::string field_;
};

// A block matched none of the bipartite / four-vertex / K_{1,1,n} shapes.
class NotLinePerfect : public Error {
public:
    using Error::Error;
};

class ListTooSmall : public Error {
public:
    ListTooSmall(std::uint32_t edge, std::size_t have, std::size_t need)
        : Error("edge " + std::to_string(edge) + " has " + std::to_string(have) +
                " colors, needs at least " + std::to_string(need)),
          edge_(edge), have_(have), need_(need) {}

    std::uint32_t edge() const noexcept { return edge_; }
    std::size_t have() const noexcept { return have_; }
    std::size_t need() const noexcept { return need_; }

private:
    std::uint32_t edge_;
    std::size_t have_;
    std::size_t need_;
};

// Brute-force oracles refuse instances above their size cap.
class SizeCapExceeded : public Error {
public:
    using Error::Error;
};

} // namespace lichor

#endif
