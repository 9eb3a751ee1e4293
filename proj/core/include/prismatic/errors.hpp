#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace prismatic {

// Default node budget for exhaustive enumerations.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// Input that could not be parsed.  `offset` is the byte position of the first
// offending byte when it is known, npos otherwise.
struct ParseError : std::runtime_error {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    explicit ParseError(const std::string& what, std::size_t offset = npos)
        : std::runtime_error(offset == npos ? what : what + " (byte " + std::to_string(offset) + ")"),
          offset(offset) {}

    std::size_t offset;
};

// An enumeration or search ran past its node budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A caller-asserted precondition turned out to be false; `detail` describes
// the certificate (e.g. the odd hole that was found).
struct PreconditionViolation : std::runtime_error {
    explicit PreconditionViolation(const std::string& what, std::string detail = {})
        : std::runtime_error(what), detail(std::move(detail)) {}

    std::string detail;
};

}  // namespace prismatic
