#include "sqbasis/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sqbasis/constants.hpp"
#include "sqbasis/errors.hpp"
#include "sqbasis/norms.hpp"
#include "sqbasis/ordering.hpp"
#include "sqbasis/polynomial.hpp"
#include "sqbasis/sampling.hpp"
#include "sqbasis/seminorms.hpp"

namespace sqbasis {

namespace {

using Clock = std::chrono::steady_clock;

std::string formatted(const char* fmt, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), fmt, value);
  return buffer;
}

/// Independent enumeration oracle: dense generation, then a sort under the
/// direct comparison. Deliberately avoids the rank/unrank machinery.
std::vector<MultiIndex> bruteForceDegree(int degree, int maxLength) {
  std::vector<MultiIndex> all;
  std::vector<int> dense(static_cast<std::size_t>(maxLength), 0);
  const std::function<void(int, int)> place = [&](int position, int remaining) {
    if (position == maxLength) {
      if (remaining == 0) all.push_back(MultiIndex::fromDense(dense));
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      dense[static_cast<std::size_t>(position)] = e;
      place(position + 1, remaining - e);
    }
    dense[static_cast<std::size_t>(position)] = 0;
  };
  place(0, degree);
  std::sort(all.begin(), all.end(), [](const MultiIndex& a, const MultiIndex& b) {
    return compareDirect(a, b) == std::strong_ordering::less;
  });
  return all;
}

CriterionResult squareOrderEquivalence(const VerifyOptions&) {
  CriterionResult result;
  result.id = 1;
  result.name = "square-order-equivalence";
  const auto start = Clock::now();
  std::int64_t pairs = 0;
  std::int64_t disagreements = 0;
  for (int degree = 0; degree <= 5; ++degree) {
    const auto indices = bruteForceDegree(degree, 7);
    for (const auto& a : indices) {
      for (const auto& b : indices) {
        ++pairs;
        if (compareDirect(a, b) != compareRecursive(a, b)) ++disagreements;
      }
    }
  }
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  result.pass = disagreements == 0 && result.seconds < 10.0;
  result.details = std::to_string(pairs) + " pairs, " + std::to_string(disagreements) +
                   " disagreements";
  return result;
}

CriterionResult enumerationOracle(const VerifyOptions&) {
  CriterionResult result;
  result.id = 2;
  result.name = "enumeration-oracle";
  const auto start = Clock::now();
  bool pass = true;
  std::string failure;

  for (int degree = 0; degree <= 5 && pass; ++degree) {
    for (int d = 1; d <= 6 && pass; ++d) {
      const auto expected = bruteForceDegree(degree, d);
      const auto produced = enumerateDegree(degree, d);
      if (produced != expected) {
        pass = false;
        failure = "enumerate(" + std::to_string(degree) + "," + std::to_string(d) +
                  ") differs from brute force";
        break;
      }
      for (std::size_t i = 0; i < produced.size(); ++i) {
        const auto rank = static_cast<std::int64_t>(i) + 1;
        if (rankOf(produced[i]) != rank || unrank(degree, rank) != produced[i]) {
          pass = false;
          failure = "rank/unrank bijection fails at degree " + std::to_string(degree) +
                    " rank " + std::to_string(rank);
          break;
        }
      }
    }
  }

  const std::vector<std::string> expectedDegree2 = {"z1^2", "z1*z2", "z2^2",
                                                    "z1*z3", "z2*z3", "z3^2"};
  const auto degree2 = enumerateDegree(2, 3);
  for (std::size_t i = 0; i < expectedDegree2.size() && pass; ++i) {
    if (degree2[i].toString() != expectedDegree2[i]) {
      pass = false;
      failure = "degree-2 order differs at position " + std::to_string(i + 1);
    }
  }

  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  result.pass = pass;
  result.details = pass ? "enumerate = brute force (n <= 5, d <= 6), bijection holds"
                        : failure;
  return result;
}

CriterionResult lemmaOnePrefixes(const VerifyOptions& options) {
  CriterionResult result;
  result.id = 3;
  result.name = "prefix-decomposition";
  const auto start = Clock::now();
  const std::int64_t j = options.quick ? 1000 : 10000;
  const auto canonical = CompatibleOrdering::canonicalDiagonal();
  bool pass = true;
  std::string failure;

  try {
    const auto decomposition = prefixDecompose(canonical, j);
    std::vector<char> covered(static_cast<std::size_t>(j) + 1, 0);
    std::int64_t coveredCount = 0;
    for (const auto& [row, count] : decomposition.rowCounts) {
      for (std::int64_t m = 1; m <= count; ++m) {
        const auto k = canonical.forward(row, static_cast<int>(m));
        if (!k || *k < 1 || *k > j || covered[static_cast<std::size_t>(*k)]) {
          pass = false;
          failure = "reconstruction misses or repeats a position";
          break;
        }
        covered[static_cast<std::size_t>(*k)] = 1;
        ++coveredCount;
      }
      if (!pass) break;
    }
    if (pass && coveredCount != j) {
      pass = false;
      failure = "reconstruction covers " + std::to_string(coveredCount) + " of " +
                std::to_string(j) + " positions";
    }
  } catch (const std::exception& e) {
    pass = false;
    failure = e.what();
  }

  // Negative control: an adjacent same-row transposition must be caught at
  // or before the larger swapped position.
  if (pass) {
    std::vector<CompatibleOrdering::RowCol> table;
    for (std::int64_t k = 1; k <= 50; ++k) table.push_back(*canonical.inverse(k));
    std::swap(table[0], table[1]);  // positions 1 and 2 both lie in row 1
    bool caught = false;
    try {
      prefixDecompose(CompatibleOrdering::fromTable(table), 50);
    } catch (const IncompatiblePrefixError& e) {
      caught = e.position() <= 2;
    }
    if (!caught) {
      pass = false;
      failure = "transposed table was not rejected";
    }
  }

  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  result.pass = pass && result.seconds < 5.0;
  result.details = pass ? "prefixes 1.." + std::to_string(j) +
                              " reconstruct exactly; transposition detected"
                        : failure;
  return result;
}

CriterionResult fddStructure(const VerifyOptions& options) {
  CriterionResult result;
  result.id = 4;
  result.name = "length-decomposition-structure";
  const auto start = Clock::now();
  const int instances = options.quick ? 40 : 200;
  bool pass = true;
  std::string failure;

  for (int trial = 0; trial < instances && pass; ++trial) {
    Rng rng = Rng::forTrial(options.seed, 0x6664, static_cast<std::uint64_t>(trial));
    const int degree = rng.uniformInt(1, 4);
    const int d = rng.uniformInt(1, 5);
    const auto p = randomExactPolynomial(rng, degree, d, rng.uniformInt(1, 8));

    const auto byLength = lengthSplit(p);
    const auto byTelescope = telescopeSplit(p, d);
    ExactPolynomial reconstructed(degree);
    for (int k = 1; k <= d; ++k) {
      const auto& component = byTelescope[static_cast<std::size_t>(k) - 1];
      reconstructed = reconstructed + component;
      const auto it = byLength.find(k);
      const ExactPolynomial expected = it == byLength.end() ? ExactPolynomial(degree)
                                                            : it->second;
      if (component != expected) {
        pass = false;
        failure = "telescope and length components differ at k = " + std::to_string(k);
      }
    }
    if (pass && reconstructed != p) {
      pass = false;
      failure = "components do not sum back to the polynomial";
    }
    if (pass) {
      for (const auto& [k, component] : byLength) {
        if (k == 0) continue;  // constant block has nothing to factor
        if (multiplyByCoordinate(reduceByLastVariable(component, k), k) != component) {
          pass = false;
          failure = "reduce/multiply round trip failed at k = " + std::to_string(k);
          break;
        }
      }
    }
  }

  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  result.pass = pass;
  result.details = pass ? std::to_string(instances) +
                              " random polynomials split identically (exact)"
                        : failure;
  return result;
}

CriterionResult monotoneFddSweep(const VerifyOptions& options) {
  CriterionResult result;
  result.id = 5;
  result.name = "monotone-decomposition-inequality";
  const auto start = Clock::now();
  const int instances = options.quick ? 20 : 100;
  bool pass = true;
  double worstSlack = 1e300;
  std::string failure;

  for (int trial = 0; trial < instances && pass; ++trial) {
    Rng rng = Rng::forTrial(options.seed, 0x657137, static_cast<std::uint64_t>(trial));
    const int degree = rng.uniformInt(1, 3);
    const int d = rng.uniformInt(2, 4);
    const Polydisc disc(randomRadii(rng, d, 0.2, 2.0));
    const auto p = randomPolynomial(rng, degree, d, rng.uniformInt(2, 8));
    const auto components = lengthSplit(p);
    const int t = d;
    const int s = rng.uniformInt(1, t - 1);
    const auto report = checkMonotoneFDD(components, disc, s, t, NormMode::oracle);
    worstSlack = std::min(worstSlack, report.slack);
    if (!report.pass) {
      pass = false;
      failure = "slack " + formatted("%.3e", report.slack) + " at trial " +
                std::to_string(trial);
    }
  }

  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  result.pass = pass;
  result.details = pass ? std::to_string(instances) + " instances, worst slack " +
                              formatted("%.3e", worstSlack)
                        : failure;
  return result;
}

CriterionResult boundaryIdentitySweep(const VerifyOptions& options) {
  CriterionResult result;
  result.id = 6;
  result.name = "distinguished-boundary-identity";
  const auto start = Clock::now();
  const int instances = options.quick ? 20 : 100;
  const int grid = options.quick ? 32 : 64;
  bool pass = true;
  double worstResidual = 0.0;
  std::string failure;

  for (int trial = 0; trial < instances && pass; ++trial) {
    Rng rng = Rng::forTrial(options.seed, 0x657138, static_cast<std::uint64_t>(trial));
    const int d = rng.uniformInt(2, 4);
    const int k = rng.uniformInt(1, d);
    const int degree = rng.uniformInt(1, 3);
    const Polydisc disc(randomRadii(rng, d, 0.2, 2.0));
    // A component of uniform length k: a random degree-(n-1) polynomial in
    // the first k variables, multiplied by z_k.
    const auto base = randomPolynomial(rng, degree - 1, k, rng.uniformInt(1, 6));
    if (base.isZeroPolynomial()) continue;
    const auto component = multiplyByCoordinate(base, k);
    const auto report = checkBoundaryIdentity(component, k, disc, 1e-6, grid);
    worstResidual = std::max(worstResidual, report.residual);
    if (!report.pass) {
      pass = false;
      failure = "residual " + formatted("%.3e", report.residual) + " at trial " +
                std::to_string(trial);
    }
  }

  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  result.pass = pass && result.seconds < 120.0;
  result.details = pass ? std::to_string(instances) + " instances, worst residual " +
                              formatted("%.3e", worstResidual)
                        : failure;
  return result;
}

CriterionResult degreeOneConstant(const VerifyOptions& options) {
  CriterionResult result;
  result.id = 7;
  result.name = "degree-one-basis-constant";
  const auto start = Clock::now();
  const SearchBudget budget{options.quick ? 200 : 2000, 2};
  const auto estimate =
      estimateBasisConstant(1, 5, Polydisc::unit(5), budget, options.seed);
  const double error = std::abs(estimate.lowerBound - 1.0);
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  result.pass = error <= 1e-9;
  result.details = "lower bound " + formatted("%.12f", estimate.lowerBound) +
                   ", |error| = " + formatted("%.3e", error);
  return result;
}

CriterionResult ceilingSweep(const VerifyOptions& options) {
  CriterionResult result;
  result.id = 8;
  result.name = "paper-ceiling-sampling";
  const auto start = Clock::now();
  const int trials = options.quick ? 500 : 10000;
  bool pass = true;
  std::string detail;
  std::string failure;

  for (int degree = 2; degree <= 3 && pass; ++degree) {
    const double ceiling = std::pow(3.0, degree);
    double maxFound = 0.0;
    for (int d = 2; d <= 4 && pass; ++d) {
      const auto estimate = estimateBasisConstant(
          degree, d, Polydisc::unit(d), SearchBudget{trials, 2},
          options.seed + static_cast<std::uint64_t>(16 * degree + d));
      maxFound = std::max(maxFound, estimate.lowerBound);
      if (estimate.lowerBound > ceiling + 1e-6) {
        pass = false;
        failure = "ratio " + formatted("%.6f", estimate.lowerBound) +
                  " exceeds ceiling " + formatted("%.1f", ceiling) + " at degree " +
                  std::to_string(degree) + ", dim " + std::to_string(d);
      }
    }
    if (pass)
      detail += (detail.empty() ? "" : "; ") + std::string("degree ") +
                std::to_string(degree) + ": max ratio " + formatted("%.6f", maxFound) +
                " vs ceiling " + formatted("%.0f", ceiling);
  }

  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  result.pass = pass;
  result.details = pass ? std::to_string(trials) + " witnesses per configuration; " + detail
                        : failure;
  return result;
}

CriterionResult chainReplaySweep(const VerifyOptions& options) {
  CriterionResult result;
  result.id = 9;
  result.name = "estimate-chain-replay";
  const auto start = Clock::now();
  const int perDegree = options.quick ? 10 : 50;
  bool pass = true;
  double worstResidual = 0.0;
  std::string failure;

  for (int degree = 2; degree <= 3 && pass; ++degree) {
    for (int trial = 0; trial < perDegree && pass; ++trial) {
      Rng rng = Rng::forTrial(options.seed, 0x636831 + static_cast<std::uint64_t>(degree),
                              static_cast<std::uint64_t>(trial));
      const int d = rng.uniformInt(2, 4);
      const Polydisc disc(randomRadii(rng, d, 0.2, 2.0));
      const auto maxRank =
          std::min<std::int64_t>(countLengthAtMost(degree, d), 12);
      const std::int64_t t = rng.uniformInt(2, static_cast<int>(maxRank));
      const std::int64_t s = rng.uniformInt(1, static_cast<int>(t) - 1);
      std::vector<std::complex<double>> coeffs(static_cast<std::size_t>(t));
      for (auto& c : coeffs) c = rng.complexInUnitSquare();

      const int grid = d <= 2 ? 64 : (d == 3 ? 32 : 16);
      const auto report = replayTheorem2Chain(coeffs, degree, s, t, disc,
                                              NormEngine::grid(grid), 1e-6, 1.0);
      for (const auto& step : report.steps)
        if (step.isIdentity) worstResidual = std::max(worstResidual, step.residual);
      if (!report.pass) {
        pass = false;
        for (const auto& step : report.steps)
          if (!step.pass) failure = "step '" + step.name + "' failed at degree " +
                                    std::to_string(degree) + " trial " +
                                    std::to_string(trial);
        if (!report.factorizationExact) failure = "factorization mismatch";
      }
    }
  }

  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  result.pass = pass;
  result.details = pass ? std::to_string(2 * perDegree) +
                              " replays, worst identity residual " +
                              formatted("%.3e", worstResidual)
                        : failure;
  return result;
}

CriterionResult seminormWorkedValues(const VerifyOptions&) {
  CriterionResult result;
  result.id = 10;
  result.name = "seminorm-worked-values";
  const auto start = Clock::now();
  bool pass = true;
  std::string failure;

  // Geometric series: P_n = (z_1 / 2)^n for n = 0..10.
  const int N = 10;
  std::vector<Polynomial> parts;
  for (int n = 0; n <= N; ++n) {
    Polynomial part(n);
    part.addTerm(n == 0 ? MultiIndex() : MultiIndex({{1, n}}), std::pow(0.5, n));
    parts.push_back(std::move(part));
  }
  const TaylorSeries series(std::move(parts));

  SeminormParams params;
  params.beta = {1.0};
  params.alpha.assign(static_cast<std::size_t>(N) + 1, 0.0);
  const double value = taylorSeminorm(series, params, 1);
  const double expected = 2.0 - std::pow(2.0, -N);
  if (std::abs(value - expected) > 1e-12) {
    pass = false;
    failure = "geometric seminorm " + formatted("%.15f", value) + " differs from " +
              formatted("%.15f", expected);
  }

  if (pass) {
    const auto order = globalMonomialOrder(CompatibleOrdering::canonicalDiagonal(), N, 1);
    const auto cuts = rowCompletionCuts(order);
    const auto tails = partialSumTails(series, order, params, 1, cuts);
    for (std::size_t i = 0; i + 1 < tails.size(); ++i) {
      if (tails[i + 1].value > tails[i].value + 1e-12) {
        pass = false;
        failure = "tail increased between cuts " + std::to_string(tails[i].cut) +
                  " and " + std::to_string(tails[i + 1].cut);
        break;
      }
    }
    // Tail after the full degree-(j-1) row: sum_{n >= j} 2^-n.
    for (std::size_t i = 0; pass && i < tails.size(); ++i) {
      const auto j = static_cast<int>(tails[i].cut);
      const double remainder = std::pow(2.0, 1 - j) - std::pow(2.0, -N);
      if (std::abs(tails[i].value - remainder) > 1e-12) {
        pass = false;
        failure = "tail at cut " + std::to_string(j) + " is " +
                  formatted("%.15f", tails[i].value) + ", expected " +
                  formatted("%.15f", remainder);
      }
    }
  }

  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  result.pass = pass;
  result.details = pass ? "geometric value exact to 1e-12; tails non-increasing"
                        : failure;
  return result;
}

CriterionResult reproducibility(const VerifyOptions& options) {
  CriterionResult result;
  result.id = 11;
  result.name = "verify-all-reproducibility";
  const auto start = Clock::now();

  if (options.cliPath.empty()) {
    result.pass = false;
    result.details = "no CLI path available for the double run";
    return result;
  }

  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "sqbasis-repro";
  fs::create_directories(dir);
  const auto runOnce = [&](int run) -> std::string {
    const fs::path out = dir / ("report" + std::to_string(run) + ".json");
    const fs::path log = dir / ("stdout" + std::to_string(run) + ".txt");
    const std::string command = "\"" + options.cliPath + "\" verify-all --seed 11 " +
                                "--scale quick --out \"" + out.string() + "\" > \"" +
                                log.string() + "\" 2>&1";
    if (std::system(command.c_str()) != 0) return "";
    std::ostringstream bytes;
    for (const auto& path : {out, log}) {
      std::ifstream in(path, std::ios::binary);
      bytes << in.rdbuf() << '\0';
    }
    return bytes.str();
  };

  const std::string first = runOnce(1);
  const std::string second = runOnce(2);
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  result.pass = !first.empty() && first == second;
  result.details = result.pass ? "two quick-scale runs are byte-identical"
                               : (first.empty() ? "child run failed"
                                                : "outputs differ between runs");
  return result;
}

}  // namespace

std::vector<CriterionResult> runVerificationSuite(
    const VerifyOptions& options,
    const std::function<void(const CriterionResult&)>& onResult) {
  std::vector<CriterionResult> results;
  const auto record = [&](CriterionResult result) {
    if (onResult) onResult(result);
    results.push_back(std::move(result));
  };

  record(squareOrderEquivalence(options));
  record(enumerationOracle(options));
  record(lemmaOnePrefixes(options));
  record(fddStructure(options));
  record(monotoneFddSweep(options));
  record(boundaryIdentitySweep(options));
  record(degreeOneConstant(options));
  record(ceilingSweep(options));
  record(chainReplaySweep(options));
  record(seminormWorkedValues(options));
  if (!options.quick) record(reproducibility(options));
  return results;
}

bool allPass(const std::vector<CriterionResult>& results) {
  for (const auto& result : results)
    if (!result.pass) return false;
  return true;
}

}  // namespace sqbasis
