#include "sqbasis/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "sqbasis/errors.hpp"

namespace sqbasis {

namespace {

// Positions 1..(q-1)q/2 cover diagonals n+m <= q; diagonal q holds q-1 pairs.
std::int64_t diagonalStart(std::int64_t q) { return (q - 2) * (q - 1) / 2; }

}  // namespace

CompatibleOrdering CompatibleOrdering::canonicalDiagonal() {
  CompatibleOrdering ordering;
  ordering.canonical_ = true;
  return ordering;
}

CompatibleOrdering CompatibleOrdering::fromTable(std::vector<RowCol> table) {
  CompatibleOrdering ordering;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& [n, m] = table[i];
    if (n < 1 || m < 1)
      throw std::invalid_argument("ordering table entries must have row, column >= 1");
    auto [it, inserted] = ordering.lookup_.emplace(table[i], static_cast<std::int64_t>(i) + 1);
    if (!inserted)
      throw std::invalid_argument("ordering table repeats the pair (" + std::to_string(n) +
                                  ", " + std::to_string(m) + ")");
  }
  ordering.table_ = std::move(table);
  return ordering;
}

std::optional<std::int64_t> CompatibleOrdering::forward(int row, int col) const {
  if (row < 1 || col < 1) return std::nullopt;
  if (canonical_) {
    const std::int64_t q = static_cast<std::int64_t>(row) + col;
    return diagonalStart(q) + row;
  }
  auto it = lookup_.find({row, col});
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<CompatibleOrdering::RowCol> CompatibleOrdering::inverse(std::int64_t k) const {
  if (k < 1) return std::nullopt;
  if (canonical_) {
    // Find the diagonal q with diagonalStart(q) < k <= diagonalStart(q+1).
    std::int64_t q = static_cast<std::int64_t>((1.0 + std::sqrt(8.0 * static_cast<double>(k))) / 2.0);
    while (diagonalStart(q) >= k) --q;
    while (diagonalStart(q + 1) < k) ++q;
    const std::int64_t n = k - diagonalStart(q);
    return RowCol{static_cast<int>(n), static_cast<int>(q - n)};
  }
  if (k > static_cast<std::int64_t>(table_.size())) return std::nullopt;
  return table_[static_cast<std::size_t>(k) - 1];
}

std::int64_t CompatibleOrdering::domainSize() const {
  return canonical_ ? std::numeric_limits<std::int64_t>::max()
                    : static_cast<std::int64_t>(table_.size());
}

std::set<int> PrefixDecomposition::rowSet() const {
  std::set<int> rows;
  for (const auto& [n, count] : rowCounts) rows.insert(n);
  return rows;
}

std::int64_t PrefixDecomposition::totalCount() const {
  std::int64_t total = 0;
  for (const auto& [n, count] : rowCounts) total += count;
  return total;
}

PrefixDecomposition prefixDecompose(const CompatibleOrdering& ordering, std::int64_t j) {
  if (j < 1) throw std::invalid_argument("prefix size must be >= 1");
  if (j > ordering.domainSize())
    throw std::invalid_argument("ordering inverse is not defined up to " + std::to_string(j));
  PrefixDecomposition decomposition;
  decomposition.prefixSize = j;
  for (std::int64_t k = 1; k <= j; ++k) {
    const auto pair = ordering.inverse(k);
    if (!pair)
      throw std::invalid_argument("ordering inverse is undefined at position " +
                                  std::to_string(k));
    const auto& [n, m] = *pair;
    std::int64_t& count = decomposition.rowCounts[n];
    if (m != count + 1)
      throw IncompatiblePrefixError(
          k, "position " + std::to_string(k) + " maps to row " + std::to_string(n) +
                 ", column " + std::to_string(m) + " but the row prefix has " +
                 std::to_string(count) + " entries");
    ++count;
  }
  return decomposition;
}

GrowthReport verifyMonotoneGrowth(const CompatibleOrdering& ordering, std::int64_t j,
                                  std::int64_t l) {
  if (l < 1) throw std::invalid_argument("growth step l must be >= 1");
  GrowthReport report;
  report.at = prefixDecompose(ordering, j);
  report.extended = prefixDecompose(ordering, j + l);
  report.pass = true;
  for (const auto& [n, count] : report.at.rowCounts) {
    auto it = report.extended.rowCounts.find(n);
    if (it == report.extended.rowCounts.end()) {
      report.pass = false;
      report.message = "row " + std::to_string(n) + " disappeared from the larger prefix";
      return report;
    }
    if (it->second < count) {
      report.pass = false;
      report.message = "row " + std::to_string(n) + " prefix shrank from " +
                       std::to_string(count) + " to " + std::to_string(it->second);
      return report;
    }
  }
  for (const auto& [n, count] : report.extended.rowCounts) {
    if (!report.at.rowCounts.contains(n)) report.newRows.push_back(n);
  }
  if (report.at.totalCount() != j || report.extended.totalCount() != j + l) {
    report.pass = false;
    report.message = "prefix counts do not sum to the prefix size";
  }
  return report;
}

std::vector<OrderedMonomial> globalMonomialOrder(const CompatibleOrdering& ordering,
                                                 int maxDegree, int maxLength) {
  if (maxDegree < 0) throw std::invalid_argument("maxDegree must be >= 0");
  if (maxLength < 1) throw std::invalid_argument("maxLength must be >= 1");
  std::vector<OrderedMonomial> result;
  result.push_back({0, MultiIndex()});
  if (maxDegree == 0) return result;

  // Row n keeps only its first columnCap[n] columns: the square order lists
  // monomials by length, so the length <= maxLength entries are exactly a
  // rank prefix.
  std::vector<std::int64_t> columnCap(static_cast<std::size_t>(maxDegree) + 1, 0);
  for (int n = 1; n <= maxDegree; ++n) columnCap[n] = countLengthAtMost(n, maxLength);

  std::int64_t kMax = 0;
  if (ordering.isCanonical()) {
    for (int n = 1; n <= maxDegree; ++n)
      kMax = std::max(kMax, *ordering.forward(n, static_cast<int>(columnCap[n])));
  } else {
    kMax = ordering.domainSize();
  }

  for (std::int64_t k = 1; k <= kMax; ++k) {
    const auto pair = ordering.inverse(k);
    if (!pair) continue;
    const auto& [n, m] = *pair;
    if (n > maxDegree || m > columnCap[n]) continue;
    result.push_back({n, unrank(n, m)});
  }
  return result;
}

}  // namespace sqbasis
