#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eqm {

// Input could not be parsed. `offset` is the byte position of the first
// offending byte within the parsed text.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// An operation with an exponential path refused to run because the input is
// larger than the configured guard.
class guard_error : public std::runtime_error {
public:
    guard_error(const std::string& what, int size, int guard)
        : std::runtime_error(what + ": n=" + std::to_string(size) +
                             " exceeds guard " + std::to_string(guard)),
          size_(size), guard_(guard) {}

    int size() const { return size_; }
    int guard() const { return guard_; }

private:
    int size_;
    int guard_;
};

// Default ceiling for enumeration-backed oracles. Maximal matchings grow
// exponentially with n; callers raise this explicitly when they mean it.
inline constexpr int default_oracle_guard = 24;

// Ceiling for canonical forms and the built-in census. Canonization is a
// permutation search within degree-refinement cells; only sane for tiny n.
inline constexpr int canonical_guard = 10;

}  // namespace eqm
