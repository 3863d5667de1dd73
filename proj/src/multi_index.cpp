#include "sqbasis/multi_index.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "sqbasis/errors.hpp"

namespace sqbasis {

namespace {

constexpr int kMaxRankDegree = 16;
constexpr int kMaxRankLength = 64;

void requireRankable(int degree, int length) {
  if (degree > kMaxRankDegree || length > kMaxRankLength)
    throw CountOverflowError("rank/unrank supports degree <= 16 and length <= 64, got degree " +
                             std::to_string(degree) + ", length " + std::to_string(length));
}

}  // namespace

MultiIndex::MultiIndex(std::vector<Entry> entries) : entries_(std::move(entries)) {
  int prev = 0;
  for (const auto& [pos, exp] : entries_) {
    if (pos <= prev)
      throw std::invalid_argument("multi-index positions must be strictly increasing");
    if (exp < 1)
      throw std::invalid_argument("multi-index exponents must be >= 1");
    prev = pos;
  }
}

MultiIndex MultiIndex::fromDense(const std::vector<int>& exps) {
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0) throw std::invalid_argument("negative exponent");
    if (exps[i] > 0) entries.emplace_back(static_cast<int>(i) + 1, exps[i]);
  }
  return MultiIndex(std::move(entries));
}

int MultiIndex::modulus() const {
  int total = 0;
  for (const auto& [pos, exp] : entries_) total += exp;
  return total;
}

int MultiIndex::exponent(int position) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), position,
                             [](const Entry& e, int p) { return e.first < p; });
  return (it != entries_.end() && it->first == position) ? it->second : 0;
}

MultiIndex MultiIndex::underline() const {
  if (entries_.empty())
    throw std::invalid_argument("underline is undefined for the empty index");
  MultiIndex result = *this;
  if (result.entries_.back().second > 1)
    --result.entries_.back().second;
  else
    result.entries_.pop_back();
  return result;
}

MultiIndex MultiIndex::timesCoordinate(int position) const {
  if (position < 1) throw std::invalid_argument("coordinate position must be >= 1");
  MultiIndex result = *this;
  auto it = std::lower_bound(result.entries_.begin(), result.entries_.end(), position,
                             [](const Entry& e, int p) { return e.first < p; });
  if (it != result.entries_.end() && it->first == position)
    ++it->second;
  else
    result.entries_.insert(it, {position, 1});
  return result;
}

std::vector<int> MultiIndex::toDense(int minSize) const {
  std::vector<int> dense(std::max(minSize, length()), 0);
  for (const auto& [pos, exp] : entries_) dense[pos - 1] = exp;
  return dense;
}

std::string MultiIndex::toString() const {
  if (entries_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [pos, exp] : entries_) {
    if (!first) os << "*";
    os << "z" << pos;
    if (exp > 1) os << "^" << exp;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& m) {
  return os << m.toString();
}

std::strong_ordering compareDirect(const MultiIndex& a, const MultiIndex& b) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("square order compares indices of equal modulus only");
  if (a.length() != b.length())
    return a.length() <=> b.length();
  // Equal lengths: scan entries from the highest position down; the first
  // disagreement decides, the index with the smaller exponent there is smaller.
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  auto ia = ea.rbegin();
  auto ib = eb.rbegin();
  while (ia != ea.rend() && ib != eb.rend()) {
    if (ia->first != ib->first) {
      // Only one side has a nonzero exponent at the higher position.
      return ia->first > ib->first ? std::strong_ordering::greater
                                   : std::strong_ordering::less;
    }
    if (ia->second != ib->second) return ia->second <=> ib->second;
    ++ia;
    ++ib;
  }
  if (ia != ea.rend()) return std::strong_ordering::greater;
  if (ib != eb.rend()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::strong_ordering compareRecursive(const MultiIndex& a, const MultiIndex& b) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("square order compares indices of equal modulus only");
  if (a.length() != b.length())
    return a.length() <=> b.length();
  if (a == b) return std::strong_ordering::equal;
  return compareRecursive(a.underline(), b.underline());
}

bool GradedSquareLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  const int ma = a.modulus();
  const int mb = b.modulus();
  if (ma != mb) return ma < mb;
  return compareDirect(a, b) == std::strong_ordering::less;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    std::int64_t numerator = 0;
    if (__builtin_mul_overflow(result, static_cast<std::int64_t>(n - k + i), &numerator))
      throw CountOverflowError("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                               ") overflows 64-bit counting");
    result = numerator / i;  // exact: numerator is divisible by i at each step
  }
  return result;
}

std::int64_t countLengthExactly(int degree, int length) {
  if (degree < 0 || length < 0) throw std::invalid_argument("negative degree or length");
  if (degree == 0) return length == 0 ? 1 : 0;
  if (length == 0) return 0;
  return binomial(degree + length - 2, length - 1);
}

std::int64_t countLengthAtMost(int degree, int length) {
  if (degree < 0 || length < 0) throw std::invalid_argument("negative degree or length");
  if (degree == 0) return 1;
  if (length == 0) return 0;
  return binomial(degree + length - 1, length - 1);
}

std::vector<MultiIndex> enumerateDegree(int degree, int maxLength) {
  if (degree < 0) throw std::invalid_argument("degree must be >= 0");
  if (maxLength < 1) throw std::invalid_argument("maxLength must be >= 1");
  const std::int64_t count = countLengthAtMost(degree, maxLength);
  std::vector<MultiIndex> result;
  result.reserve(static_cast<std::size_t>(count));
  for (std::int64_t r = 1; r <= count; ++r) result.push_back(unrank(degree, r));
  return result;
}

std::int64_t rankOf(const MultiIndex& m) {
  const int degree = m.modulus();
  requireRankable(degree, m.length());
  if (degree == 0) return 1;
  // Blocks of smaller length precede m; within its block the order is the
  // degree-(n-1) square order of the underline.
  const std::int64_t before = countLengthAtMost(degree, m.length() - 1);
  return before + rankOf(m.underline());
}

MultiIndex unrank(int degree, std::int64_t rank) {
  if (degree < 0) throw std::invalid_argument("degree must be >= 0");
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  if (degree == 0) {
    if (rank != 1)
      throw std::invalid_argument("the degree-0 class has the single rank 1");
    return MultiIndex();
  }
  requireRankable(degree, 0);
  int length = 1;
  while (countLengthAtMost(degree, length) < rank) {
    ++length;
    if (length > kMaxRankLength)
      throw CountOverflowError("unrank(" + std::to_string(degree) + ", " +
                               std::to_string(rank) + ") exceeds the length-64 cap");
  }
  const std::int64_t withinBlock = rank - countLengthAtMost(degree, length - 1);
  return unrank(degree - 1, withinBlock).timesCoordinate(length);
}

}  // namespace sqbasis
