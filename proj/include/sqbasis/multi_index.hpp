#ifndef SQBASIS_MULTI_INDEX_HPP
#define SQBASIS_MULTI_INDEX_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace sqbasis {

/// A finitely supported sequence of non-negative integer exponents,
/// stored sparsely as (position, exponent) pairs with positions >= 1
/// strictly increasing and exponents >= 1. The empty index is the
/// constant monomial (exponent 0 everywhere, convention 0^0 = 1).
class MultiIndex {
public:
  using Entry = std::pair<int, int>;  // (position, exponent)

  MultiIndex() = default;

  /// Builds from sparse entries; validates ordering and positivity.
  explicit MultiIndex(std::vector<Entry> entries);

  /// Builds from a dense exponent vector (exps[i] is the exponent of
  /// position i+1); zeros are dropped.
  static MultiIndex fromDense(const std::vector<int>& exps);

  /// Sum of all exponents.
  int modulus() const;

  /// Largest position with a nonzero exponent; 0 for the empty index.
  int length() const { return entries_.empty() ? 0 : entries_.back().first; }

  /// Exponent at a 1-based position (0 if absent).
  int exponent(int position) const;

  bool empty() const { return entries_.empty(); }

  /// Decrements the exponent at the last position. Requires modulus >= 1.
  MultiIndex underline() const;

  /// Increments the exponent at `position` (>= 1) by one.
  MultiIndex timesCoordinate(int position) const;

  const std::vector<Entry>& entries() const { return entries_; }

  std::vector<int> toDense(int minSize = 0) const;

  /// Monomial notation, e.g. "z1^2*z3" ("1" for the empty index).
  std::string toString() const;

  bool operator==(const MultiIndex&) const = default;

private:
  std::vector<Entry> entries_;
};

std::ostream& operator<<(std::ostream& os, const MultiIndex& m);

/// Square-order comparison of two indices of equal modulus, by the direct
/// definition: first by length, then by the highest position where the
/// exponents differ (smaller exponent there means smaller index).
/// Throws std::invalid_argument on a modulus mismatch.
std::strong_ordering compareDirect(const MultiIndex& a, const MultiIndex& b);

/// Square-order comparison by the recursive definition: first by length,
/// then by comparing underlines. Agrees with compareDirect; the test suite
/// checks the equivalence exhaustively rather than assuming it.
std::strong_ordering compareRecursive(const MultiIndex& a, const MultiIndex& b);

/// Strict total order over all multi-indices: graded by modulus, square
/// order within each degree class. Usable as a map/sort comparator.
struct GradedSquareLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// Exact binomial coefficient; throws CountOverflowError instead of wrapping.
std::int64_t binomial(int n, int k);

/// Number of degree-n indices with length exactly k: C(n+k-2, k-1) for
/// n, k >= 1.
std::int64_t countLengthExactly(int degree, int length);

/// Number of degree-n indices with length <= k: C(n+k-1, k-1) for n >= 1;
/// the degree-0 class has the single empty index.
std::int64_t countLengthAtMost(int degree, int length);

/// All indices with modulus `degree` and length <= maxLength, ascending in
/// square order. Result size is C(degree + maxLength - 1, maxLength - 1).
std::vector<MultiIndex> enumerateDegree(int degree, int maxLength);

/// 1-based position of m in the square order over all indices of its degree
/// (unbounded length). Supported for degree <= 16 and length <= 64.
std::int64_t rankOf(const MultiIndex& m);

/// Inverse of rankOf within a degree class.
MultiIndex unrank(int degree, std::int64_t rank);

}  // namespace sqbasis

#endif  // SQBASIS_MULTI_INDEX_HPP
