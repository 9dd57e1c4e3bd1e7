#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace logbundle {

// Raised when an operation's mathematical precondition fails (degenerate
// configuration, hypothesis of a theorem not met, inconsistent data).  The
// CLI maps it to exit status 1 with a structured error record.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, const std::string& message,
                std::vector<std::size_t> indices = {})
        : std::runtime_error(message), kind_(std::move(kind)), indices_(std::move(indices)) {}

    const std::string& kind() const noexcept { return kind_; }
    // Offending indices (e.g. a dependent subset of points), possibly empty.
    const std::vector<std::size_t>& indices() const noexcept { return indices_; }

private:
    std::string kind_;
    std::vector<std::size_t> indices_;
};

// Malformed input text or document (exit status 2 in the CLI).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace logbundle
