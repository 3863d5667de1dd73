#include "sqbasis/constants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sqbasis/errors.hpp"
#include "sqbasis/parallel.hpp"
#include "sqbasis/rng.hpp"

namespace sqbasis {

namespace {

constexpr double kDenominatorFloor = 1e-12;
constexpr std::uint64_t kWitnessStream = 0x77697473;
constexpr int kDeskScaleCap = 70;

std::vector<std::complex<double>> normalizeSup(std::vector<std::complex<double>> coeffs) {
  double sup = 0.0;
  for (const auto& c : coeffs) sup = std::max(sup, std::abs(c));
  if (sup < 1e-12) {
    if (!coeffs.empty()) coeffs[0] = 1.0;
    return coeffs;
  }
  for (auto& c : coeffs) c /= sup;
  return coeffs;
}

Polynomial rankRangeSum(const std::vector<std::complex<double>>& coeffs, int degree,
                        std::int64_t first, std::int64_t last) {
  Polynomial sum(degree);
  for (std::int64_t m = first; m <= last; ++m)
    sum.addTerm(unrank(degree, m), coeffs[static_cast<std::size_t>(m) - 1]);
  return sum;
}

struct Witness {
  std::vector<std::complex<double>> coeffs;
  std::int64_t s = 1;
  std::int64_t t = 1;
  double ratio = -1.0;
};

double tryRatio(const std::vector<std::complex<double>>& coeffs, int degree,
                std::int64_t s, std::int64_t t, const Polydisc& disc,
                const NormEngine& engine) {
  try {
    return partialSumRatio(coeffs, degree, s, t, disc, engine);
  } catch (const DegenerateDenominatorError&) {
    return -1.0;
  }
}

ChainStep identityStep(std::string name, double lhs, double rhs, double tolerance) {
  ChainStep step;
  step.name = std::move(name);
  step.lhs = lhs;
  step.rhs = rhs;
  step.isIdentity = true;
  const double scale = std::max(lhs, rhs);
  step.residual = scale > 0.0 ? std::abs(lhs - rhs) / scale : 0.0;
  step.pass = step.residual <= tolerance;
  return step;
}

ChainStep inequalityStep(std::string name, double lhs, double rhs, double tolerance) {
  ChainStep step;
  step.name = std::move(name);
  step.lhs = lhs;
  step.rhs = rhs;
  step.isIdentity = false;
  step.residual = rhs - lhs;  // slack
  step.pass = lhs <= rhs * (1.0 + tolerance) + 1e-12;
  return step;
}

}  // namespace

double engineNorm(const Polynomial& p, const Polydisc& disc, const NormEngine& engine) {
  if (engine.kind == NormEngine::Kind::grid)
    return oracleGrid(p, disc, engine.gridPointsPerDim);
  return lowerBoundOptimize(p, disc, engine.budget, engine.seed);
}

NormEngine estimateEngine(int dimension, std::uint64_t seed) {
  return dimension <= 2 ? NormEngine::grid(32)
                        : NormEngine::optimize(OptimizeBudget{2, 60}, seed);
}

double partialSumRatio(const std::vector<std::complex<double>>& coeffs, int degree,
                       std::int64_t s, std::int64_t t, const Polydisc& disc,
                       const NormEngine& engine) {
  if (degree < 1) throw std::invalid_argument("partial sums need degree >= 1");
  if (s < 1 || s > t) throw std::invalid_argument("need 1 <= s <= t");
  if (t > static_cast<std::int64_t>(coeffs.size()))
    throw std::invalid_argument("coefficient list does not cover rank t");
  if (t > countLengthAtMost(degree, disc.dimension()))
    throw std::invalid_argument("rank " + std::to_string(t) +
                                " needs monomials beyond the polydisc dimension");
  const Polynomial full = rankRangeSum(coeffs, degree, 1, t);
  const double denominator = engineNorm(full, disc, engine);
  if (denominator < kDenominatorFloor) throw DegenerateDenominatorError(denominator);
  const Polynomial prefix = rankRangeSum(coeffs, degree, 1, s);
  return engineNorm(prefix, disc, engine) / denominator;
}

ConstantEstimate estimateBasisConstant(int degree, int dimension, const Polydisc& disc,
                                       const SearchBudget& budget, std::uint64_t seed) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  if (dimension < 1 || dimension > disc.dimension())
    throw std::invalid_argument("dimension must lie within the polydisc");
  const std::int64_t maxRank = countLengthAtMost(degree, dimension);
  if (maxRank > kDeskScaleCap)
    throw std::invalid_argument("monomial count " + std::to_string(maxRank) +
                                " exceeds the desk-scale cap of 70");

  const NormEngine engine = estimateEngine(dimension, seed);

  ConstantEstimate estimate;
  estimate.degree = degree;
  estimate.dimension = dimension;
  estimate.radii = disc.radii();
  estimate.paperCeiling = std::pow(3.0, degree);

  // Trial 0 is the canonical witness (1, 0, ..., 0): its ratio is exactly 1,
  // so the lower bound never starts below the trivial value.
  Witness best;
  best.coeffs.assign(static_cast<std::size_t>(maxRank), 0.0);
  best.coeffs[0] = 1.0;
  best.s = 1;
  best.t = maxRank;
  best.ratio = tryRatio(best.coeffs, degree, best.s, best.t, disc, engine);

  const int trials = std::max(budget.trials, 0);
  if (trials > 0 && maxRank >= 2) {
    constexpr int kChunk = 64;
    const int chunkCount = (trials + kChunk - 1) / kChunk;
    std::vector<Witness> chunkBest(static_cast<std::size_t>(chunkCount));
    parallelForChunks(chunkCount, [&](int chunk) {
      Witness local;
      for (int i = chunk * kChunk; i < std::min(trials, (chunk + 1) * kChunk); ++i) {
        Rng rng = Rng::forTrial(seed, kWitnessStream, static_cast<std::uint64_t>(i));
        const std::int64_t t = rng.uniformInt(2, static_cast<int>(maxRank));
        const std::int64_t s = rng.uniformInt(1, static_cast<int>(t) - 1);
        std::vector<std::complex<double>> coeffs(static_cast<std::size_t>(t));
        for (auto& c : coeffs) c = rng.complexInUnitSquare();
        coeffs = normalizeSup(std::move(coeffs));
        const double ratio = tryRatio(coeffs, degree, s, t, disc, engine);
        if (ratio > local.ratio) local = {std::move(coeffs), s, t, ratio};
      }
      chunkBest[static_cast<std::size_t>(chunk)] = std::move(local);
    });
    for (auto& candidate : chunkBest)
      if (candidate.ratio > best.ratio) best = std::move(candidate);
  }

  // Coordinate ascent on the best witness's coefficients, shrinking steps.
  for (int pass = 0; pass < budget.ascentPasses; ++pass) {
    const double step = 0.3 * std::pow(0.5, pass);
    for (std::size_t i = 0; i < best.coeffs.size(); ++i) {
      for (const auto delta : {std::complex<double>{step, 0.0}, {-step, 0.0},
                               {0.0, step}, {0.0, -step}}) {
        std::vector<std::complex<double>> candidate = best.coeffs;
        candidate[i] += delta;
        candidate = normalizeSup(std::move(candidate));
        const double ratio = tryRatio(candidate, degree, best.s, best.t, disc, engine);
        if (ratio > best.ratio) {
          best.coeffs = std::move(candidate);
          best.ratio = ratio;
        }
      }
    }
  }

  estimate.lowerBound = best.ratio;
  estimate.witnessCoeffs = best.coeffs;
  estimate.witnessS = best.s;
  estimate.witnessT = best.t;
  estimate.exceedsCeiling = best.ratio > estimate.paperCeiling + 1e-6;
  return estimate;
}

ChainReport replayTheorem2Chain(const std::vector<std::complex<double>>& coeffs,
                                int degree, std::int64_t s, std::int64_t t,
                                const Polydisc& disc, const NormEngine& engine,
                                double tolerance, double empiricalLowerDegreeConstant) {
  if (degree < 2) throw std::invalid_argument("the chain replays degrees >= 2");
  if (s < 1 || s > t) throw std::invalid_argument("need 1 <= s <= t");
  if (t > static_cast<std::int64_t>(coeffs.size()))
    throw std::invalid_argument("coefficient list does not cover rank t");
  if (t > countLengthAtMost(degree, disc.dimension()))
    throw std::invalid_argument("rank t needs monomials beyond the polydisc dimension");

  ChainReport report;
  report.degree = degree;
  report.s = s;
  report.t = t;

  // The grouping indices come from square-order ranks: prefix lengths reach
  // k+1 (the length at rank s+1, so every rank past s has length >= k+1),
  // m0 opens the length-(k+1) block, s* closes its overlap with 1..t.
  const int kPlus1 = (s < t) ? unrank(degree, s + 1).length() : unrank(degree, s).length();
  report.k = kPlus1 - 1;
  report.kStar = unrank(degree, t).length();
  report.m0 = countLengthAtMost(degree, kPlus1 - 1) + 1;
  report.sStar = std::min<std::int64_t>(t, countLengthAtMost(degree, kPlus1));

  const Polynomial prefix = rankRangeSum(coeffs, degree, 1, s);
  const Polynomial full = rankRangeSum(coeffs, degree, 1, t);
  const Polynomial lowPrefix =
      rankRangeSum(coeffs, degree, 1, std::min(s, report.m0 - 1));
  const Polynomial componentK1 =
      report.m0 <= s ? rankRangeSum(coeffs, degree, report.m0, s) : Polynomial(degree);
  const Polynomial componentK1Star = rankRangeSum(coeffs, degree, report.m0, report.sStar);
  const Polynomial tailStar = rankRangeSum(coeffs, degree, report.m0, t);

  // Factorizations: underlining the length-(k+1) block reproduces the
  // degree-(n) expansion with ranks shifted to start at 1. Exact, no norms.
  auto shiftedExpansion = [&](std::int64_t last) {
    Polynomial expansion(degree - 1);
    for (std::int64_t m = report.m0; m <= last; ++m)
      expansion.addTerm(unrank(degree - 1, m - report.m0 + 1),
                        coeffs[static_cast<std::size_t>(m) - 1]);
    return expansion;
  };
  const Polynomial reduced = componentK1.isZeroPolynomial()
                                 ? Polynomial(degree - 1)
                                 : reduceByLastVariable(componentK1, kPlus1);
  const Polynomial reducedStar = componentK1Star.isZeroPolynomial()
                                     ? Polynomial(degree - 1)
                                     : reduceByLastVariable(componentK1Star, kPlus1);
  report.factorizationExact =
      reduced == shiftedExpansion(s) && reducedStar == shiftedExpansion(report.sStar);

  const double nLowPrefix = engineNorm(lowPrefix, disc, engine);
  report.prefixNorm = engineNorm(prefix, disc, engine);
  report.fullNorm = engineNorm(full, disc, engine);
  const double nComponent = engineNorm(componentK1, disc, engine);
  const double nComponentStar = engineNorm(componentK1Star, disc, engine);
  const double nReduced = engineNorm(reduced, disc, engine);
  const double nReducedStar = engineNorm(reducedStar, disc, engine);
  const double nTailStar = engineNorm(tailStar, disc, engine);

  const double lambda = disc.radius(kPlus1);
  const double ceiling = std::pow(3.0, degree - 1);

  report.steps.push_back(inequalityStep("length-prefix vs full sum", nLowPrefix,
                                        report.fullNorm, tolerance));
  report.steps.push_back(
      identityStep("boundary factor of prefix component", nComponent, lambda * nReduced,
                   tolerance));
  report.steps.push_back(identityStep("boundary factor of extended component",
                                      nComponentStar, lambda * nReducedStar, tolerance));
  report.steps.push_back(inequalityStep("reduced prefix vs reduced extension",
                                        nReduced, ceiling * nReducedStar, tolerance));
  report.steps.push_back(inequalityStep("extended component vs tail sum",
                                        nComponentStar, nTailStar, tolerance));
  report.steps.push_back(inequalityStep("tail sum vs full plus length-prefix",
                                        nTailStar, report.fullNorm + nLowPrefix,
                                        tolerance));
  report.steps.push_back(inequalityStep("prefix component vs 2*3^n full",
                                        nComponent, 2.0 * ceiling * report.fullNorm,
                                        tolerance));
  report.steps.push_back(inequalityStep("partial sum vs (1+2*3^n) full",
                                        report.prefixNorm,
                                        (1.0 + 2.0 * ceiling) * report.fullNorm,
                                        tolerance));

  double lowDegreeConstant = empiricalLowerDegreeConstant;
  if (lowDegreeConstant <= 0.0) {
    try {
      lowDegreeConstant =
          estimateBasisConstant(degree - 1, disc.dimension(), disc,
                                SearchBudget{200, 1}, engine.seed)
              .lowerBound;
    } catch (const std::invalid_argument&) {
      lowDegreeConstant = 1.0;
    }
  }
  report.empiricalLowerDegreeConstant = lowDegreeConstant;
  report.finalWithEmpiricalConstant =
      report.prefixNorm <=
      (1.0 + 2.0 * lowDegreeConstant) * report.fullNorm * (1.0 + tolerance) + 1e-12;
  report.finalWithTailSum =
      report.prefixNorm <= (1.0 + 2.0 * ceiling) * nTailStar * (1.0 + tolerance) + 1e-12;

  report.pass = report.factorizationExact;
  for (const auto& step : report.steps) report.pass = report.pass && step.pass;
  return report;
}

GrowthCheckReport growthCheck(const std::vector<ConstantEstimate>& estimates,
                              const std::string& label, double tolerance) {
  if (estimates.empty()) throw std::invalid_argument("growth check needs estimates");
  GrowthCheckReport report;
  report.label = label;
  for (std::size_t i = 0; i < estimates.size(); ++i) {
    if (estimates[i].degree != static_cast<int>(i) + 1)
      throw std::invalid_argument("growth check expects consecutive degrees from 1");
    report.roots.push_back(
        std::pow(estimates[i].lowerBound, 1.0 / estimates[i].degree));
  }
  report.maxRoot = *std::max_element(report.roots.begin(), report.roots.end());
  report.pass = report.maxRoot <= report.ceiling + tolerance;
  return report;
}

}  // namespace sqbasis
