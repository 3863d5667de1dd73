#include "sqbasis/sampling.hpp"

namespace sqbasis {

MultiIndex randomMultiIndex(Rng& rng, int degree, int maxLength) {
  std::vector<int> dense(static_cast<std::size_t>(maxLength), 0);
  for (int unit = 0; unit < degree; ++unit)
    ++dense[static_cast<std::size_t>(rng.uniformInt(0, maxLength - 1))];
  return MultiIndex::fromDense(dense);
}

Polynomial randomPolynomial(Rng& rng, int degree, int maxLength, int termCount) {
  Polynomial p(degree);
  for (int term = 0; term < termCount; ++term)
    p.addTerm(randomMultiIndex(rng, degree, maxLength), rng.complexInUnitSquare());
  return p;
}

ExactPolynomial randomExactPolynomial(Rng& rng, int degree, int maxLength, int termCount) {
  ExactPolynomial p(degree);
  for (int term = 0; term < termCount; ++term) {
    const Rational re(rng.uniformInt(-6, 6), rng.uniformInt(1, 4));
    const Rational im(rng.uniformInt(-6, 6), rng.uniformInt(1, 4));
    p.addTerm(randomMultiIndex(rng, degree, maxLength), RationalComplex(re, im));
  }
  return p;
}

std::vector<double> randomRadii(Rng& rng, int dimension, double lo, double hi) {
  std::vector<double> radii(static_cast<std::size_t>(dimension));
  for (double& r : radii) r = rng.uniform(lo, hi);
  return radii;
}

}  // namespace sqbasis
