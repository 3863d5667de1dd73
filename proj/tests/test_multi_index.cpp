#include <doctest.h>

#include <algorithm>
#include <functional>
#include <vector>

#include "sqbasis/errors.hpp"
#include "sqbasis/multi_index.hpp"

using namespace sqbasis;

namespace {

MultiIndex dense(std::vector<int> exps) { return MultiIndex::fromDense(exps); }

// Independent oracle: generate dense exponent vectors, sort by compareDirect.
std::vector<MultiIndex> generateSorted(int degree, int maxLength) {
  std::vector<MultiIndex> all;
  std::vector<int> exps(static_cast<std::size_t>(maxLength), 0);
  std::function<void(int, int)> place = [&](int pos, int remaining) {
    if (pos == maxLength) {
      if (remaining == 0) all.push_back(MultiIndex::fromDense(exps));
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      exps[static_cast<std::size_t>(pos)] = e;
      place(pos + 1, remaining - e);
    }
    exps[static_cast<std::size_t>(pos)] = 0;
  };
  place(0, degree);
  std::sort(all.begin(), all.end(), [](const MultiIndex& a, const MultiIndex& b) {
    return compareDirect(a, b) == std::strong_ordering::less;
  });
  return all;
}

}  // namespace

TEST_SUITE_BEGIN("multi_index");

TEST_CASE("modulus and length") {
  CHECK(MultiIndex().modulus() == 0);
  CHECK(MultiIndex().length() == 0);
  const MultiIndex m({{1, 2}, {3, 1}});  // z1^2 z3
  CHECK(m.modulus() == 3);
  CHECK(m.length() == 3);
  CHECK(MultiIndex({{2, 5}}).modulus() == 5);
  CHECK(MultiIndex({{7, 1}}).length() == 7);
  CHECK(m.exponent(1) == 2);
  CHECK(m.exponent(2) == 0);
  CHECK(m.exponent(3) == 1);
}

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(MultiIndex({{2, 1}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(MultiIndex({{3, 1}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(MultiIndex({{1, 0}}), std::invalid_argument);
  CHECK(dense({0, 0, 0}) == MultiIndex());
}

TEST_CASE("underline") {
  CHECK(MultiIndex({{1, 2}}).underline() == MultiIndex({{1, 1}}));
  CHECK(MultiIndex({{1, 1}, {3, 1}}).underline() == MultiIndex({{1, 1}}));
  CHECK(MultiIndex({{2, 1}, {3, 2}}).underline() == MultiIndex({{2, 1}, {3, 1}}));
  CHECK_THROWS_AS(MultiIndex().underline(), std::invalid_argument);

  // modulus drops by one and length never grows
  for (const auto& m : generateSorted(4, 5)) {
    const auto u = m.underline();
    CHECK(u.modulus() == m.modulus() - 1);
    CHECK(u.length() <= m.length());
  }
}

TEST_CASE("square order, direct definition") {
  CHECK(compareDirect(dense({1, 1}), dense({0, 2})) == std::strong_ordering::less);
  CHECK(compareDirect(dense({2, 1}), dense({1, 2})) == std::strong_ordering::less);
  const MultiIndex m({{2, 3}});
  CHECK(compareDirect(m, m) == std::strong_ordering::equal);
  CHECK(compareDirect(dense({0, 2}), dense({1, 1})) == std::strong_ordering::greater);
  CHECK_THROWS_AS(compareDirect(dense({1}), dense({2})), std::invalid_argument);
}

TEST_CASE("square order, recursive definition") {
  CHECK(compareRecursive(dense({1, 0, 1}), dense({0, 1, 1})) == std::strong_ordering::less);
  CHECK(compareRecursive(dense({0, 1, 1}), dense({0, 0, 2})) == std::strong_ordering::less);
  // degree-1 indices order by position
  CHECK(compareRecursive(MultiIndex({{2, 1}}), MultiIndex({{5, 1}})) ==
        std::strong_ordering::less);
  CHECK_THROWS_AS(compareRecursive(dense({1}), dense({2})), std::invalid_argument);
}

TEST_CASE("the two square-order definitions agree exhaustively") {
  for (int degree = 0; degree <= 4; ++degree) {
    const auto indices = generateSorted(degree, 5);
    for (const auto& a : indices)
      for (const auto& b : indices)
        CHECK(compareDirect(a, b) == compareRecursive(a, b));
  }
}

TEST_CASE("square order is a strict total order") {
  const auto indices = generateSorted(3, 5);
  for (const auto& a : indices) {
    for (const auto& b : indices) {
      const auto ab = compareDirect(a, b);
      const auto ba = compareDirect(b, a);
      // trichotomy + antisymmetry
      CHECK((ab == std::strong_ordering::equal) == (a == b));
      if (ab == std::strong_ordering::less) CHECK(ba == std::strong_ordering::greater);
      if (ab == std::strong_ordering::greater) CHECK(ba == std::strong_ordering::less);
    }
  }
  // transitivity via sort consistency: sorted output is strictly increasing
  for (std::size_t i = 0; i + 1 < indices.size(); ++i)
    CHECK(compareDirect(indices[i], indices[i + 1]) == std::strong_ordering::less);
}

TEST_CASE("enumerate") {
  const auto degree2 = enumerateDegree(2, 3);
  REQUIRE(degree2.size() == 6);
  CHECK(degree2[0].toString() == "z1^2");
  CHECK(degree2[1].toString() == "z1*z2");
  CHECK(degree2[2].toString() == "z2^2");
  CHECK(degree2[3].toString() == "z1*z3");
  CHECK(degree2[4].toString() == "z2*z3");
  CHECK(degree2[5].toString() == "z3^2");

  const auto degree1 = enumerateDegree(1, 4);
  REQUIRE(degree1.size() == 4);
  for (int j = 0; j < 4; ++j) CHECK(degree1[static_cast<std::size_t>(j)].length() == j + 1);

  const auto degree0 = enumerateDegree(0, 3);
  REQUIRE(degree0.size() == 1);
  CHECK(degree0[0].empty());

  CHECK(enumerateDegree(3, 4).size() == binomial(6, 3));
}

TEST_CASE("enumerate equals the brute-force oracle") {
  for (int degree = 0; degree <= 5; ++degree)
    for (int d = 1; d <= 5; ++d) CHECK(enumerateDegree(degree, d) == generateSorted(degree, d));
}

TEST_CASE("length is monotone along the square order") {
  for (int degree = 1; degree <= 4; ++degree) {
    const auto indices = enumerateDegree(degree, 6);
    for (std::size_t i = 0; i + 1 < indices.size(); ++i)
      CHECK(indices[i].length() <= indices[i + 1].length());
  }
}

TEST_CASE("rank worked examples") {
  CHECK(rankOf(dense({2})) == 1);      // z1^2
  CHECK(rankOf(dense({1, 1})) == 2);   // z1 z2
  CHECK(rankOf(dense({0, 2})) == 3);   // z2^2
  CHECK(unrank(2, 4) == dense({1, 0, 1}));
  CHECK(countLengthExactly(2, 2) == 2);
  CHECK(rankOf(MultiIndex()) == 1);
  CHECK(unrank(0, 1) == MultiIndex());
  CHECK_THROWS_AS(unrank(0, 2), std::invalid_argument);
}

TEST_CASE("rank and unrank are inverse bijections") {
  for (int degree = 0; degree <= 5; ++degree) {
    const auto block = countLengthAtMost(degree, 8);
    for (std::int64_t r = 1; r <= block; ++r) {
      const auto m = unrank(degree, r);
      CHECK(m.modulus() == degree);
      CHECK(rankOf(m) == r);
    }
  }
}

TEST_CASE("block counts") {
  // exactly-length-k block sizes sum to the length <= k prefix count
  for (int degree = 1; degree <= 6; ++degree) {
    std::int64_t total = 0;
    for (int k = 1; k <= 7; ++k) {
      total += countLengthExactly(degree, k);
      CHECK(total == countLengthAtMost(degree, k));
    }
  }
  CHECK(countLengthAtMost(0, 5) == 1);
  CHECK(countLengthExactly(0, 0) == 1);
  CHECK(countLengthExactly(3, 0) == 0);
}

TEST_CASE("counting overflow is reported, not wrapped") {
  CHECK_THROWS_AS(binomial(90, 45), CountOverflowError);
  CHECK_THROWS_AS(rankOf(MultiIndex({{1, 17}})), CountOverflowError);
  CHECK_THROWS_AS(rankOf(MultiIndex({{70, 3}})), CountOverflowError);
  CHECK_THROWS_AS(unrank(17, 1), CountOverflowError);
  // within the documented caps, large ranks still work
  CHECK(rankOf(unrank(16, 1000000)) == 1000000);
}

TEST_SUITE_END();
