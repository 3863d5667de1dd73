#include "sqbasis/polynomial.hpp"

#include <cmath>

namespace sqbasis {

std::complex<double> evaluate(const Polynomial& p,
                              std::span<const std::complex<double>> point) {
  std::complex<double> sum = 0.0;
  for (const auto& [index, coeff] : p.terms()) {
    // Coordinates beyond the point are zero; any such factor kills the term.
    if (index.length() > static_cast<int>(point.size())) continue;
    std::complex<double> product = coeff;
    for (const auto& [pos, exp] : index.entries()) {
      std::complex<double> factor = point[static_cast<std::size_t>(pos) - 1];
      for (int e = 0; e < exp; ++e) product *= factor;
    }
    sum += product;
  }
  return sum;
}

}  // namespace sqbasis
