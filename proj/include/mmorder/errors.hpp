#pragma once

#include <stdexcept>
#include <string>

namespace mm {

// Bad or inconsistent input data: malformed rationals, metric axiom
// violations, marginal mismatches, failed preconditions.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// An exact search was asked to exceed its configured budget.
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// A constructive bound that is supposed to hold by theorem failed to
// verify. Raised instead of returning a report that silently lies.
class BoundViolation : public std::runtime_error {
public:
    explicit BoundViolation(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mm
