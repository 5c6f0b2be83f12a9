#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ffd {

// Rank-space or work budget exceeded (CLI exit code 3).
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A lemma/theorem hypothesis or usage constraint does not hold (exit code 2).
class HypothesisError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An exact identity that must always hold was violated (exit code 1).
// Carries a serialized witness so the failing instance can be replayed.
class IdentityViolation : public std::runtime_error {
public:
    IdentityViolation(const std::string& what, std::string witness)
        : std::runtime_error(what), witness_(std::move(witness)) {}
    const std::string& witness() const { return witness_; }

private:
    std::string witness_;
};

// A floating-point result failed its rounding contract (exit code 1).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Maximum rank-space size q^d. Defaults to 10^7; the FFDISTLAB_BUDGET
// environment variable overrides it (read once per process).
std::uint64_t rank_space_budget();

} // namespace ffd
