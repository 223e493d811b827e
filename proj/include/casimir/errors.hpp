#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace casimir {

/// Argument outside the domain of a formula. The message names the field.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A series or Matsubara sum did not reach its tolerance inside the allowed
/// number of terms. Carries what was accumulated so far.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double partial_sum, double tail_bound,
                     std::size_t terms)
        : std::runtime_error(what),
          partial_sum_(partial_sum),
          tail_bound_(tail_bound),
          terms_(terms) {}

    double partial_sum() const noexcept { return partial_sum_; }
    double tail_bound() const noexcept { return tail_bound_; }
    std::size_t terms() const noexcept { return terms_; }

private:
    double partial_sum_;
    double tail_bound_;
    std::size_t terms_;
};

/// Adaptive quadrature ran out of subintervals. [worst_lo, worst_hi] is the
/// subinterval with the largest remaining error estimate.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double worst_lo, double worst_hi, double abs_error)
        : std::runtime_error(what), worst_lo_(worst_lo), worst_hi_(worst_hi), abs_error_(abs_error) {}

    double worst_lo() const noexcept { return worst_lo_; }
    double worst_hi() const noexcept { return worst_hi_; }
    double abs_error() const noexcept { return abs_error_; }

private:
    double worst_lo_;
    double worst_hi_;
    double abs_error_;
};

/// Malformed input file. line() is 1-based; 0 when the problem is not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace casimir
