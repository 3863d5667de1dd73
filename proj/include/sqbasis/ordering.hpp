#ifndef SQBASIS_ORDERING_HPP
#define SQBASIS_ORDERING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "sqbasis/multi_index.hpp"

namespace sqbasis {

/// A bijection phi: N^2 -> N arranging a doubly indexed family (row n,
/// column m) into one sequence. Compatibility means each row keeps its
/// internal order: m < m' implies phi(n, m) < phi(n, m').
///
/// Two flavors: the canonical diagonal enumeration (defined everywhere,
/// compatible by construction) and explicit finite tables, whose
/// compatibility is certified only on the table's domain.
class CompatibleOrdering {
public:
  using RowCol = std::pair<int, int>;

  /// Pairs (n, m) enumerated by increasing n + m, ties by increasing n.
  /// Fixing n, larger m gives larger n + m, so the ordering is compatible.
  static CompatibleOrdering canonicalDiagonal();

  /// Entry k-1 of `table` is the pair (n, m) with phi(n, m) = k.
  /// Rejects repeated pairs; order violations surface via prefixDecompose.
  static CompatibleOrdering fromTable(std::vector<RowCol> table);

  /// Global position of (row, col), if defined on this ordering's domain.
  std::optional<std::int64_t> forward(int row, int col) const;

  /// The pair at global position k, if defined.
  std::optional<RowCol> inverse(std::int64_t k) const;

  /// Largest prefix 1..j on which inverse() is defined.
  std::int64_t domainSize() const;

  bool isCanonical() const { return canonical_; }

  const std::vector<RowCol>& table() const { return table_; }

private:
  CompatibleOrdering() = default;
  bool canonical_ = false;
  std::vector<RowCol> table_;              // empty for the canonical ordering
  std::map<RowCol, std::int64_t> lookup_;  // table inverse
};

/// Splitting of a global prefix {1..j} into per-row prefixes: row n
/// contributes its first counts[n] columns, and these images partition
/// {1..j} exactly.
struct PrefixDecomposition {
  std::int64_t prefixSize = 0;  // j
  std::map<int, std::int64_t> rowCounts;  // n -> k_n(j)

  std::set<int> rowSet() const;
  std::int64_t totalCount() const;
};

/// Computes the prefix decomposition of {1..j} by the incremental
/// procedure: walk k = 1..j and require that position k extends some row's
/// prefix by exactly one. Throws IncompatiblePrefixError at the first k
/// where a row column repeats or skips, and std::invalid_argument if the
/// ordering's inverse is undefined somewhere on 1..j.
PrefixDecomposition prefixDecompose(const CompatibleOrdering& ordering, std::int64_t j);

/// Outcome of comparing the decompositions at j and j + l.
struct GrowthReport {
  bool pass = false;
  PrefixDecomposition at;      // j
  PrefixDecomposition extended;  // j + l
  std::vector<int> newRows;    // rows in S_{j+l} \ S_j
  std::string message;
};

/// Checks that rows only get added and per-row counts only grow between
/// prefixes j and j + l. Propagates IncompatiblePrefixError.
GrowthReport verifyMonotoneGrowth(const CompatibleOrdering& ordering, std::int64_t j,
                                  std::int64_t l);

/// One entry of the global monomial sequence.
struct OrderedMonomial {
  int degree = 0;
  MultiIndex index;
  bool operator==(const OrderedMonomial&) const = default;
};

/// All monomials with degree <= maxDegree and length <= maxLength, in the
/// global order induced by `ordering`: the constant monomial first, then
/// row n >= 1 (the degree-n monomials in square order) interleaved at the
/// positions phi assigns, entries outside the truncation skipped.
std::vector<OrderedMonomial> globalMonomialOrder(const CompatibleOrdering& ordering,
                                                 int maxDegree, int maxLength);

}  // namespace sqbasis

#endif  // SQBASIS_ORDERING_HPP
