#pragma once

#include <stdexcept>
#include <string>

namespace mops {

// Inadmissible (a, b, c, d) or other bad user-facing parameters.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Pochhammer / hypergeometric poles.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Something that a theorem says cannot happen did happen.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, double best, double err)
        : std::runtime_error(what), best_(best), err_(err) {}
    double best_estimate() const noexcept { return best_; }
    double error_estimate() const noexcept { return err_; }

private:
    double best_;
    double err_;
};

}  // namespace mops
