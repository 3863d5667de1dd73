#ifndef SQBASIS_SEMINORMS_HPP
#define SQBASIS_SEMINORMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sqbasis/norms.hpp"
#include "sqbasis/ordering.hpp"
#include "sqbasis/polynomial.hpp"

namespace sqbasis {

/// Truncated data for the weighted sup-seminorm family: the per-coordinate
/// radii beta_j, the per-degree enlargements alpha_n, and optional weight
/// scalars for the weighted variant.
struct SeminormParams {
  std::vector<double> beta;   // beta_j > 0, j = 1..d
  std::vector<double> alpha;  // alpha_n >= 0, n = 0..N
  std::optional<std::vector<double>> weights;

  void validate(int dimension, int maxDegree) const;
};

/// How the per-degree sups are evaluated: `coefficientSum` is the exact
/// triangle bound (additive, fast, exact seminorm axioms); `oracle` is the
/// phase-grid sup.
enum class SupMode { coefficientSum, oracle };

/// Per-degree sup of |P_n| over the polydisc with radii beta_j + alpha_n.
double degreeSup(const Polynomial& part, const SeminormParams& params, int dimension,
                 SupMode mode = SupMode::coefficientSum, int gridPointsPerDim = 32);

/// Seminorm sum_n sup{ |P_n(z)| : |z_j| <= beta_j + alpha_n, j <= d } of a
/// truncated Taylor series: degree-wise additive by construction.
double taylorSeminorm(const TaylorSeries& series, const SeminormParams& params,
                      int dimension, SupMode mode = SupMode::coefficientSum,
                      int gridPointsPerDim = 32);

/// Seminorm of uniform convergence over the radius-r polydisc truncation,
/// in the degree-wise additive form sum_n sup_{B_r} |P_n|.
double boundedSeminorm(const TaylorSeries& series, double radius, int dimension,
                       SupMode mode = SupMode::coefficientSum, int gridPointsPerDim = 32);

/// Base seminorm handle for the weighted family.
struct TaylorBase {
  SeminormParams params;
  int dimension = 1;
  SupMode mode = SupMode::coefficientSum;
  int gridPointsPerDim = 32;
};
struct BoundedBase {
  double radius = 1.0;
  int dimension = 1;
  SupMode mode = SupMode::coefficientSum;
  int gridPointsPerDim = 32;
};
using SeminormBase = std::variant<TaylorBase, BoundedBase>;

/// Weighted form sum_n |w_n| p(P_n) over a base seminorm handle; weights
/// must cover every degree of the series.
double weightedSeminorm(const TaylorSeries& series, const SeminormBase& base,
                        const std::vector<double>& weights);

/// Seminorm of the tail after removing the first `cut` monomials of the
/// global compatible order, for each requested cut.
struct TailEntry {
  std::int64_t cut = 0;
  double value = 0.0;
};

/// For each cut j, the seminorm of the series minus its first-j-monomials
/// partial sum, monomials taken in the order `order` (which must cover
/// every term of the series within its truncation).
std::vector<TailEntry> partialSumTails(const TaylorSeries& series,
                                       const std::vector<OrderedMonomial>& order,
                                       const SeminormParams& params, int dimension,
                                       const std::vector<std::int64_t>& cuts,
                                       SupMode mode = SupMode::coefficientSum,
                                       int gridPointsPerDim = 32);

/// Cuts at which each degree row of the truncated global order completes;
/// at these cuts the tail seminorms are provably non-increasing.
std::vector<std::int64_t> rowCompletionCuts(const std::vector<OrderedMonomial>& order);

}  // namespace sqbasis

#endif  // SQBASIS_SEMINORMS_HPP
