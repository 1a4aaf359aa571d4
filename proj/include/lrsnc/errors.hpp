#ifndef LRSNC_ERRORS_HPP
#define LRSNC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lrsnc {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An exhaustive routine was asked to run beyond its size guard.
class guard_exceeded : public error {
  public:
    using error::error;
};

/// Field parameters or moduli that do not describe a usable tower.
class invalid_field : public error {
  public:
    using error::error;
};

/// LRS parameters that break one or more code invariants.
class invalid_code : public error {
  public:
    using error::error;
};

/// The support constraint fails the zero-pattern condition.
class condition_violated : public error {
  public:
    condition_violated(const std::string& what, std::vector<std::size_t> witness)
        : error(what), witness_(std::move(witness)) {}

    /// Violating row subset, 0-based.
    const std::vector<std::size_t>& witness() const noexcept { return witness_; }

  private:
    std::vector<std::size_t> witness_;
};

/// Randomized synthesis ran out of attempts.
class synthesis_failed : public error {
  public:
    using error::error;
};

/// The network design problem has no solution.
class infeasible : public error {
  public:
    using error::error;
};

/// Malformed input file; carries the 1-based line number (0 if not line-bound).
class parse_error : public error {
  public:
    parse_error(const std::string& what, std::size_t line)
        : error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

}  // namespace lrsnc

#endif  // LRSNC_ERRORS_HPP
