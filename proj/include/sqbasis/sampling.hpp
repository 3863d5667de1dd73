#ifndef SQBASIS_SAMPLING_HPP
#define SQBASIS_SAMPLING_HPP

#include <vector>

#include "sqbasis/polynomial.hpp"
#include "sqbasis/rng.hpp"

namespace sqbasis {

/// Uniformly places `degree` exponent units on positions 1..maxLength.
MultiIndex randomMultiIndex(Rng& rng, int degree, int maxLength);

/// Random degree-n polynomial with up to `termCount` distinct monomials of
/// length <= maxLength and coefficients in the complex unit square.
Polynomial randomPolynomial(Rng& rng, int degree, int maxLength, int termCount);

/// Exact-coefficient variant with small rational real and imaginary parts.
ExactPolynomial randomExactPolynomial(Rng& rng, int degree, int maxLength, int termCount);

std::vector<double> randomRadii(Rng& rng, int dimension, double lo, double hi);

}  // namespace sqbasis

#endif  // SQBASIS_SAMPLING_HPP
