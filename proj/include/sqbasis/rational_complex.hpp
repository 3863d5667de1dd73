#ifndef SQBASIS_RATIONAL_COMPLEX_HPP
#define SQBASIS_RATIONAL_COMPLEX_HPP

#include <boost/rational.hpp>
#include <complex>
#include <cstdint>
#include <ostream>

namespace sqbasis {

using Rational = boost::rational<std::int64_t>;

/// Exact complex scalar for the structural identity checks; the floating
/// pipeline uses std::complex<double> instead.
struct RationalComplex {
  Rational re{0};
  Rational im{0};

  RationalComplex() = default;
  RationalComplex(Rational real, Rational imag = Rational(0))
      : re(std::move(real)), im(std::move(imag)) {}
  RationalComplex(std::int64_t real) : re(real) {}

  friend RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend RationalComplex operator-(const RationalComplex& a, const RationalComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  RationalComplex operator-() const { return {-re, -im}; }
  bool operator==(const RationalComplex&) const = default;
};

// Compare numerators: the heterogeneous rational-vs-int operator== in
// boost/rational.hpp self-recurses for mixed integer widths.
inline bool isZero(const RationalComplex& c) {
  return c.re.numerator() == 0 && c.im.numerator() == 0;
}
inline bool isZero(const std::complex<double>& c) { return c == std::complex<double>(0.0); }

inline std::complex<double> toComplexDouble(const RationalComplex& c) {
  return {boost::rational_cast<double>(c.re), boost::rational_cast<double>(c.im)};
}

inline std::ostream& operator<<(std::ostream& os, const RationalComplex& c) {
  return os << "(" << c.re << " + " << c.im << "i)";
}

}  // namespace sqbasis

#endif  // SQBASIS_RATIONAL_COMPLEX_HPP
