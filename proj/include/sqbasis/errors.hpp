#ifndef SQBASIS_ERRORS_HPP
#define SQBASIS_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sqbasis {

/// An ordering table violates row-order compatibility at position `position`
/// of its global prefix.
class IncompatiblePrefixError : public std::runtime_error {
public:
  IncompatiblePrefixError(std::int64_t position, const std::string& what)
      : std::runtime_error(what), position_(position) {}
  std::int64_t position() const { return position_; }

private:
  std::int64_t position_;
};

/// A partial-sum ratio was requested with a denominator norm below the
/// degeneracy threshold.
class DegenerateDenominatorError : public std::runtime_error {
public:
  explicit DegenerateDenominatorError(double value)
      : std::runtime_error("denominator norm " + std::to_string(value) +
                           " is below the degeneracy threshold"),
        value_(value) {}
  double value() const { return value_; }

private:
  double value_;
};

/// Exact integer counting left the supported range (degree <= 16,
/// length <= 64); reported instead of wrapping.
class CountOverflowError : public std::runtime_error {
public:
  explicit CountOverflowError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace sqbasis

#endif  // SQBASIS_ERRORS_HPP
