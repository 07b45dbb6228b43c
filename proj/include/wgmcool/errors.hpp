#ifndef WGMCOOL_ERRORS_HPP
#define WGMCOOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wgmcool {

// Invalid physical input (non-finite, out of range, unsupported).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A series or iteration did not reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

// A searched-for feature (resonance, peak) does not exist in the input.
class NotFoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller-side misuse: bad configuration keys, missing values, budgets.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace wgmcool

#endif
