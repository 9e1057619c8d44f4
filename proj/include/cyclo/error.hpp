#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cyclo {

// Domain-level failure with a stable machine-readable name ("NotDivisible",
// "BudgetExhausted", ...). The CLI maps these to exit code 1 and carries the
// name verbatim in its report.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& detail)
        : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

}  // namespace cyclo
