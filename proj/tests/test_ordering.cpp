#include <doctest.h>

#include <vector>

#include "sqbasis/errors.hpp"
#include "sqbasis/ordering.hpp"
#include "sqbasis/rng.hpp"

using namespace sqbasis;

namespace {

std::vector<CompatibleOrdering::RowCol> canonicalTable(std::int64_t size) {
  const auto canonical = CompatibleOrdering::canonicalDiagonal();
  std::vector<CompatibleOrdering::RowCol> table;
  for (std::int64_t k = 1; k <= size; ++k) table.push_back(*canonical.inverse(k));
  return table;
}

// Direct check of the row-compatibility condition on an explicit table.
bool tableIsCompatible(const std::vector<CompatibleOrdering::RowCol>& table) {
  std::map<int, std::vector<std::pair<int, std::int64_t>>> rows;  // row -> (col, pos)
  for (std::size_t i = 0; i < table.size(); ++i)
    rows[table[i].first].emplace_back(table[i].second, static_cast<std::int64_t>(i) + 1);
  for (auto& [row, entries] : rows) {
    std::sort(entries.begin(), entries.end());
    // the table's columns must start at 1, be contiguous, and sit at
    // increasing global positions
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].first != static_cast<int>(i) + 1) return false;
      if (i > 0 && entries[i].second < entries[i - 1].second) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE_BEGIN("ordering");

TEST_CASE("canonical diagonal positions") {
  const auto canonical = CompatibleOrdering::canonicalDiagonal();
  CHECK(*canonical.forward(1, 1) == 1);
  CHECK(*canonical.forward(1, 2) == 2);
  CHECK(*canonical.forward(2, 1) == 3);
  CHECK(*canonical.inverse(6) == CompatibleOrdering::RowCol{3, 1});
  for (int row = 1; row <= 12; ++row)
    for (int col = 1; col <= 12; ++col)
      CHECK(*canonical.inverse(*canonical.forward(row, col)) ==
            CompatibleOrdering::RowCol{row, col});
  // fixing a row, larger columns land later
  for (int row = 1; row <= 6; ++row)
    for (int col = 1; col <= 20; ++col)
      CHECK(*canonical.forward(row, col) < *canonical.forward(row, col + 1));
}

TEST_CASE("prefix decomposition of the canonical ordering") {
  const auto canonical = CompatibleOrdering::canonicalDiagonal();
  const auto at1 = prefixDecompose(canonical, 1);
  CHECK(at1.rowCounts == std::map<int, std::int64_t>{{1, 1}});
  const auto at3 = prefixDecompose(canonical, 3);
  CHECK(at3.rowCounts == std::map<int, std::int64_t>{{1, 2}, {2, 1}});
  CHECK(at3.totalCount() == 3);

  // scratch recomputation agrees with single-step extension
  auto counts = prefixDecompose(canonical, 1).rowCounts;
  for (std::int64_t j = 2; j <= 200; ++j) {
    const auto& [row, col] = *canonical.inverse(j);
    ++counts[row];
    CHECK(prefixDecompose(canonical, j).rowCounts == counts);
  }
}

TEST_CASE("incompatible tables are rejected with a position") {
  // phi(1,2) = 3 and phi(1,3) = 2 violates the row order at position 2
  const auto swapped =
      CompatibleOrdering::fromTable({{1, 1}, {1, 3}, {1, 2}});
  CHECK_THROWS_AS(prefixDecompose(swapped, 3), IncompatiblePrefixError);
  try {
    prefixDecompose(swapped, 3);
  } catch (const IncompatiblePrefixError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(CompatibleOrdering::fromTable({{1, 1}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("transpositions are detected iff they break compatibility") {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    auto table = canonicalTable(60);
    const int a = rng.uniformInt(0, 58);
    const int b = rng.uniformInt(a + 1, 59);
    std::swap(table[static_cast<std::size_t>(a)], table[static_cast<std::size_t>(b)]);
    const bool compatible = tableIsCompatible(table);
    bool threw = false;
    std::int64_t at = 0;
    try {
      prefixDecompose(CompatibleOrdering::fromTable(table), 60);
    } catch (const IncompatiblePrefixError& e) {
      threw = true;
      at = e.position();
    }
    CHECK(threw == !compatible);
    if (threw) CHECK(at <= b + 1);  // at or before the larger swapped position
  }
}

TEST_CASE("monotone growth of prefix decompositions") {
  const auto canonical = CompatibleOrdering::canonicalDiagonal();
  const auto report = verifyMonotoneGrowth(canonical, 3, 3);
  CHECK(report.pass);
  CHECK(report.extended.rowSet() == std::set<int>{1, 2, 3});

  for (std::int64_t j : {5, 17, 100}) {
    for (std::int64_t l : {1, 9}) {
      const auto r = verifyMonotoneGrowth(canonical, j, l);
      CHECK(r.pass);
      for (const auto& [row, count] : r.at.rowCounts)
        CHECK(r.extended.rowCounts.at(row) >= count);
    }
  }

  // a corrupted table propagates the incompatibility
  auto corrupted = canonicalTable(30);
  std::swap(corrupted[4], corrupted[8]);
  REQUIRE_FALSE(tableIsCompatible(corrupted));
  CHECK_THROWS_AS(verifyMonotoneGrowth(CompatibleOrdering::fromTable(corrupted), 10, 20),
                  IncompatiblePrefixError);
}

TEST_CASE("global monomial order") {
  const auto canonical = CompatibleOrdering::canonicalDiagonal();
  const auto order = globalMonomialOrder(canonical, 2, 2);
  REQUIRE(order.size() == 1 + 2 + 3);
  CHECK(order[0].index.toString() == "1");
  CHECK(order[1].index.toString() == "z1");
  CHECK(order[2].index.toString() == "z2");
  CHECK(order[3].index.toString() == "z1^2");
  CHECK(order[4].index.toString() == "z1*z2");
  CHECK(order[5].index.toString() == "z2^2");

  // restricted to one degree, the global order is the square order
  for (int degree = 0; degree <= 3; ++degree) {
    std::vector<MultiIndex> filtered;
    for (const auto& entry : globalMonomialOrder(canonical, 3, 3))
      if (entry.degree == degree) filtered.push_back(entry.index);
    CHECK(filtered == enumerateDegree(degree, 3));
  }

  const auto constantOnly = globalMonomialOrder(canonical, 0, 4);
  REQUIRE(constantOnly.size() == 1);
  CHECK(constantOnly[0].degree == 0);
}

TEST_SUITE_END();
