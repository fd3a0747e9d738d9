#pragma once

#include <stdexcept>
#include <string>

namespace rcdb {

struct NotPositiveDefinite : std::runtime_error {
    explicit NotPositiveDefinite(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct DomainExceedsLinearRegion : std::domain_error {
    explicit DomainExceedsLinearRegion(const std::string& what) : std::domain_error(what) {}
};

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct InvalidTheta : std::invalid_argument {
    explicit InvalidTheta(const std::string& what) : std::invalid_argument(what) {}
};

struct BudgetViolation : std::logic_error {
    explicit BudgetViolation(const std::string& what) : std::logic_error(what) {}
};

struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct WrongLink : std::invalid_argument {
    explicit WrongLink(const std::string& what) : std::invalid_argument(what) {}
};

struct EmptyInput : std::invalid_argument {
    explicit EmptyInput(const std::string& what) : std::invalid_argument(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure inside an episode, annotated with the round it happened in.
struct EpisodeFailure : std::runtime_error {
    int round;
    EpisodeFailure(int round_, const std::string& what)
        : std::runtime_error("round " + std::to_string(round_) + ": " + what), round(round_) {}
};

}  // namespace rcdb
