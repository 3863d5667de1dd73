#ifndef SQBASIS_POLYNOMIAL_HPP
#define SQBASIS_POLYNOMIAL_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sqbasis/multi_index.hpp"
#include "sqbasis/rational_complex.hpp"

namespace sqbasis {

/// Sparse homogeneous polynomial: a degree tag plus a term map from
/// multi-index to nonzero coefficient. Every stored index has modulus equal
/// to the degree. Terms iterate in square order, so rank-prefix operations
/// are prefix scans. The zero polynomial is an empty map with a degree tag.
///
/// Coefficient types: std::complex<double> for the numeric pipeline,
/// RationalComplex for exact structural checks.
template <typename C>
class BasicPolynomial {
public:
  using Coefficient = C;
  using TermMap = std::map<MultiIndex, C, GradedSquareLess>;

  explicit BasicPolynomial(int degree = 0) : degree_(degree) {
    if (degree < 0) throw std::invalid_argument("polynomial degree must be >= 0");
  }

  static BasicPolynomial fromTerms(int degree,
                                   std::vector<std::pair<MultiIndex, C>> terms) {
    BasicPolynomial p(degree);
    for (auto& [index, coeff] : terms) p.addTerm(index, coeff);
    return p;
  }

  static BasicPolynomial monomial(const MultiIndex& index, C coeff) {
    BasicPolynomial p(index.modulus());
    p.addTerm(index, coeff);
    return p;
  }

  /// Accumulates a coefficient; cancels to zero terms are removed.
  void addTerm(const MultiIndex& index, const C& coeff) {
    if (index.modulus() != degree_)
      throw std::invalid_argument("term modulus " + std::to_string(index.modulus()) +
                                  " does not match polynomial degree " +
                                  std::to_string(degree_));
    if (isZero(coeff)) return;
    auto [it, inserted] = terms_.emplace(index, coeff);
    if (!inserted) {
      it->second = it->second + coeff;
      if (isZero(it->second)) terms_.erase(it);
    }
  }

  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool isZeroPolynomial() const { return terms_.empty(); }
  std::size_t termCount() const { return terms_.size(); }

  C coefficient(const MultiIndex& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? C{} : it->second;
  }

  int maxTermLength() const {
    int result = 0;
    for (const auto& [index, coeff] : terms_) result = std::max(result, index.length());
    return result;
  }

  friend BasicPolynomial operator+(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.degree_ != b.degree_)
      throw std::invalid_argument("cannot add homogeneous polynomials of different degrees");
    BasicPolynomial result = a;
    for (const auto& [index, coeff] : b.terms_) result.addTerm(index, coeff);
    return result;
  }

  friend BasicPolynomial operator-(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.degree_ != b.degree_)
      throw std::invalid_argument("cannot subtract homogeneous polynomials of different degrees");
    BasicPolynomial result = a;
    for (const auto& [index, coeff] : b.terms_) result.addTerm(index, -coeff);
    return result;
  }

  bool operator==(const BasicPolynomial&) const = default;

private:
  int degree_;
  TermMap terms_;
};

using Polynomial = BasicPolynomial<std::complex<double>>;
using ExactPolynomial = BasicPolynomial<RationalComplex>;

inline Polynomial toDoublePolynomial(const ExactPolynomial& p) {
  Polynomial result(p.degree());
  for (const auto& [index, coeff] : p.terms()) result.addTerm(index, toComplexDouble(coeff));
  return result;
}

/// Evaluation at a finite point; coordinates beyond the vector are zero.
std::complex<double> evaluate(const Polynomial& p,
                              std::span<const std::complex<double>> point);

/// Restriction to the first `cut` coordinates: keeps terms of length <= cut.
/// This is the polynomial P(z_1, ..., z_cut, 0, 0, ...).
template <typename C>
BasicPolynomial<C> restrictToPrefix(const BasicPolynomial<C>& p, int cut) {
  BasicPolynomial<C> result(p.degree());
  for (const auto& [index, coeff] : p.terms())
    if (index.length() <= cut) result.addTerm(index, coeff);
  return result;
}

/// Groups terms by index length. Component k collects the terms with
/// l(m) = k; absent components are zero and omitted.
template <typename C>
std::map<int, BasicPolynomial<C>> lengthSplit(const BasicPolynomial<C>& p) {
  std::map<int, BasicPolynomial<C>> components;
  for (const auto& [index, coeff] : p.terms()) {
    auto [it, inserted] = components.try_emplace(index.length(), p.degree());
    it->second.addTerm(index, coeff);
  }
  return components;
}

/// The telescoping route to the same split: Q_k is the difference of the
/// restrictions to the first k and k-1 coordinates. Requires degree >= 1
/// (or the zero polynomial) and K at least the maximal term length.
template <typename C>
std::vector<BasicPolynomial<C>> telescopeSplit(const BasicPolynomial<C>& p, int K) {
  if (K < 1) throw std::invalid_argument("telescope cut count must be >= 1");
  if (p.degree() == 0 && !p.isZeroPolynomial())
    throw std::invalid_argument("telescoping applies to homogeneous degree >= 1");
  if (p.maxTermLength() > K)
    throw std::invalid_argument("telescope cut " + std::to_string(K) +
                                " is below the maximal term length " +
                                std::to_string(p.maxTermLength()));
  std::vector<BasicPolynomial<C>> components;
  components.reserve(static_cast<std::size_t>(K));
  BasicPolynomial<C> previous(p.degree());
  for (int k = 1; k <= K; ++k) {
    BasicPolynomial<C> current = restrictToPrefix(p, k);
    components.push_back(current - previous);
    previous = std::move(current);
  }
  return components;
}

/// Factors z_k out of a component whose indices all have length exactly k:
/// returns R with Q = R * z_k, realized by underlining every index.
template <typename C>
BasicPolynomial<C> reduceByLastVariable(const BasicPolynomial<C>& q, int k) {
  if (k < 1) throw std::invalid_argument("variable position must be >= 1");
  if (q.degree() < 1)
    throw std::invalid_argument("cannot reduce a degree-0 polynomial");
  BasicPolynomial<C> result(q.degree() - 1);
  for (const auto& [index, coeff] : q.terms()) {
    if (index.length() != k)
      throw std::invalid_argument("reduction requires every index to have length " +
                                  std::to_string(k) + ", found length " +
                                  std::to_string(index.length()));
    result.addTerm(index.underline(), coeff);
  }
  return result;
}

/// Multiplication by the coordinate monomial z_k; inverse of the reduction.
/// Requires every term length <= k, so all result indices have length k.
template <typename C>
BasicPolynomial<C> multiplyByCoordinate(const BasicPolynomial<C>& r, int k) {
  if (k < 1) throw std::invalid_argument("variable position must be >= 1");
  if (r.maxTermLength() > k)
    throw std::invalid_argument("coordinate multiplication by z_" + std::to_string(k) +
                                " requires term lengths <= " + std::to_string(k));
  BasicPolynomial<C> result(r.degree() + 1);
  for (const auto& [index, coeff] : r.terms())
    result.addTerm(index.timesCoordinate(k), coeff);
  return result;
}

/// Keeps the terms whose square-order rank is <= s (the rank-s partial sum
/// of the monomial expansion). Terms iterate in rank order, so this is a
/// prefix scan.
template <typename C>
BasicPolynomial<C> project(const BasicPolynomial<C>& p, std::int64_t s) {
  BasicPolynomial<C> result(p.degree());
  if (s <= 0) return result;
  for (const auto& [index, coeff] : p.terms()) {
    if (rankOf(index) > s) break;
    result.addTerm(index, coeff);
  }
  return result;
}

/// A finite Taylor expansion at the origin: parts[i] is the degree-i
/// homogeneous part.
struct TaylorSeries {
  std::vector<Polynomial> parts;

  TaylorSeries() = default;
  explicit TaylorSeries(std::vector<Polynomial> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (parts[i].degree() != static_cast<int>(i))
        throw std::invalid_argument("Taylor part " + std::to_string(i) +
                                    " has degree " + std::to_string(parts[i].degree()));
  }

  int maxDegree() const { return static_cast<int>(parts.size()) - 1; }
};

}  // namespace sqbasis

#endif  // SQBASIS_POLYNOMIAL_HPP
