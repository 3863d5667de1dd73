#ifndef SQBASIS_NORMS_HPP
#define SQBASIS_NORMS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sqbasis/polynomial.hpp"

namespace sqbasis {

/// Finite truncation of a bounded polydisc: coordinate j (1-based) ranges
/// over |z_j| <= radii[j-1]; coordinates beyond the truncation are out of
/// range for any polynomial handed to the norm routines.
class Polydisc {
public:
  explicit Polydisc(std::vector<double> radii);

  static Polydisc unit(int dimension);

  int dimension() const { return static_cast<int>(radii_.size()); }
  double radius(int position) const { return radii_[static_cast<std::size_t>(position) - 1]; }
  const std::vector<double>& radii() const { return radii_; }

private:
  std::vector<double> radii_;
};

/// Certified interval for a polydisc sup-norm. The lower endpoint is a
/// value attained at an explicit boundary point, the upper endpoint a
/// triangle-inequality bound, so lower <= ||P||_A <= upper.
struct NormBracket {
  double lower = 0.0;
  double upper = 0.0;
  std::string method;
};

struct OptimizeBudget {
  int restarts = 32;
  int lineSearches = 200;  // per restart; one line search is one coordinate pass
};

struct NormConfig {
  OptimizeBudget budget;
  std::uint64_t seed = 0;
  int gridPointsPerDim = 64;
};

/// Coefficient-sum bound sum_m |a_m| lambda^m >= ||P||_A. Exact for a single
/// monomial and for polynomials with aligned (e.g. positive) coefficients.
/// Rejects terms that use coordinates beyond the polydisc dimension.
double upperBound(const Polynomial& p, const Polydisc& disc);

/// Certified lower bound: maximizes |P| over the distinguished boundary
/// {|z_j| = lambda_j} by multi-start coordinate phase search (first start at
/// phase zero, the rest seeded), each line search a coarse circle scan plus
/// golden-section refinement. Deterministic given the seed; non-decreasing
/// in the budget because larger budgets extend the evaluation sequence.
double lowerBoundOptimize(const Polynomial& p, const Polydisc& disc,
                          const OptimizeBudget& budget, std::uint64_t seed);

/// Brute-force oracle: maximum of |P| on the uniform phase grid with
/// `pointsPerDim` points per coordinate, followed by one local refinement
/// pass (coordinate polish around the best grid point). Enforces
/// dimension <= 5 and pointsPerDim >= 8; cost is pointsPerDim^dimension.
double oracleGrid(const Polynomial& p, const Polydisc& disc, int pointsPerDim);

/// Certified bracket [lowerBoundOptimize, upperBound].
NormBracket polydiscNorm(const Polynomial& p, const Polydisc& disc,
                         const NormConfig& config = {});

/// How the structural checks evaluate sup-norms.
enum class NormMode {
  auto_,    // oracle when the dimension allows it, brackets otherwise
  oracle,   // grid oracle
  bracket,  // optimize/coefficient-sum bracket
};

struct FddReport {
  double prefixValue = 0.0;  // ||sum_{k<=s} Q_k||
  double fullValue = 0.0;    // ||sum_{k<=t} Q_k||
  double slack = 0.0;        // fullValue - prefixValue
  bool usedOracle = false;
  bool pass = false;
};

/// Checks the monotone-decomposition inequality: the norm of the length
/// prefix sum_{k<=s} Q_k never exceeds the norm of sum_{k<=t} Q_k for
/// s < t, because the prefix is the full sum restricted to the first s
/// coordinates.
FddReport checkMonotoneFDD(const std::map<int, Polynomial>& components,
                           const Polydisc& disc, int s, int t,
                           NormMode mode = NormMode::auto_,
                           const NormConfig& config = {});

struct BoundaryIdentityReport {
  double componentNorm = 0.0;  // ||Q||
  double reducedNorm = 0.0;    // ||R||
  double radius = 0.0;         // lambda_k
  double residual = 0.0;       // relative
  bool pass = false;
};

/// Checks the distinguished-boundary identity ||Q||_A = lambda_k ||R||_A for
/// a component whose indices all have length k, with R the factored-out
/// polynomial Q / z_k.
BoundaryIdentityReport checkBoundaryIdentity(const Polynomial& q, int k,
                                             const Polydisc& disc,
                                             double tolerance = 1e-6,
                                             int gridPointsPerDim = 64);

}  // namespace sqbasis

#endif  // SQBASIS_NORMS_HPP
