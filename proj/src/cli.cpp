#include "sqbasis/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "sqbasis/constants.hpp"
#include "sqbasis/errors.hpp"
#include "sqbasis/json_io.hpp"
#include "sqbasis/norms.hpp"
#include "sqbasis/ordering.hpp"
#include "sqbasis/polynomial.hpp"
#include "sqbasis/seminorms.hpp"
#include "sqbasis/verify.hpp"

namespace sqbasis {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;

std::uint64_t defaultSeed() {
  if (const char* env = std::getenv("SQBASIS_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      // fall through to the built-in default
    }
  }
  return 7;
}

void emit(const json& payload, const std::string& outPath) {
  const std::string text = payload.dump(2) + "\n";
  if (outPath.empty())
    std::cout << text;
  else
    writeTextFile(outPath, text);
}

void emitText(const std::string& text, const std::string& outPath) {
  if (outPath.empty())
    std::cout << text;
  else
    writeTextFile(outPath, text);
}

Polydisc radiiFromSpec(const std::string& spec) {
  return Polydisc(doubleVectorFromJson(parseInlineOrFile(spec)));
}

std::vector<std::complex<double>> coeffsFromJson(const json& j) {
  std::vector<std::complex<double>> coeffs;
  for (const auto& entry : j) {
    if (entry.is_number())
      coeffs.emplace_back(entry.get<double>(), 0.0);
    else if (entry.is_array() && entry.size() == 2)
      coeffs.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    else
      throw std::invalid_argument("coefficients must be numbers or [re, im] pairs");
  }
  return coeffs;
}

std::vector<std::int64_t> parseCutList(const std::string& spec) {
  std::vector<std::int64_t> cuts;
  std::stringstream stream(spec);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (!token.empty()) cuts.push_back(std::stoll(token));
  }
  return cuts;
}

std::string csvNumber(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

/// Standalone sweep chart: estimates against the 3^n ceiling, log scale.
/// Plot emission is best-effort and never changes exit codes.
void writeSweepSvg(const std::string& path, const std::vector<ConstantEstimate>& rows) {
  if (rows.empty()) return;
  const double width = 640, height = 400, left = 60, bottom = 350, top = 30;
  double maxLog = 0.0;
  for (const auto& row : rows)
    maxLog = std::max(maxLog, std::log10(std::max(row.paperCeiling, row.lowerBound)));
  maxLog = std::max(maxLog * 1.1, 0.5);
  const int maxDegree = rows.back().degree;
  const auto x = [&](double degree) {
    return left + (width - left - 20) * (degree - 1) / std::max(1, maxDegree - 1);
  };
  const auto y = [&](double value) {
    return bottom - (bottom - top) * (std::log10(std::max(value, 1e-3)) / maxLog);
  };
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << width - 10
      << "\" y2=\"" << bottom << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << left << "\" y2=\""
      << top - 10 << "\" stroke=\"black\"/>\n";
  const auto polyline = [&](const char* color, bool ceiling, const char* dash) {
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\""
        << (dash ? std::string(" stroke-dasharray=\"") + dash + "\"" : "") << " points=\"";
    for (const auto& row : rows)
      svg << x(row.degree) << "," << y(ceiling ? row.paperCeiling : row.lowerBound) << " ";
    svg << "\"/>\n";
  };
  polyline("#d62728", true, "6,4");
  polyline("#1f77b4", false, nullptr);
  for (const auto& row : rows) {
    svg << "<circle cx=\"" << x(row.degree) << "\" cy=\"" << y(row.lowerBound)
        << "\" r=\"3\" fill=\"#1f77b4\"/>\n"
        << "<text x=\"" << x(row.degree) << "\" y=\"" << bottom + 18
        << "\" font-size=\"12\" text-anchor=\"middle\">" << row.degree << "</text>\n";
  }
  svg << "<text x=\"" << (left + width) / 2 << "\" y=\"" << bottom + 36
      << "\" font-size=\"13\" text-anchor=\"middle\">degree</text>\n"
      << "<text x=\"" << width - 140 << "\" y=\"" << top << "\" font-size=\"12\" "
      << "fill=\"#d62728\">3^n ceiling</text>\n"
      << "<text x=\"" << width - 140 << "\" y=\"" << top + 16 << "\" font-size=\"12\" "
      << "fill=\"#1f77b4\">estimated lower bound</text>\n</svg>\n";
  writeTextFile(path, svg.str());
}

SeminormParams seminormParamsFromFlags(const std::string& betaSpec,
                                       const std::string& alphaSpec, bool preset,
                                       int dimension, int maxDegree) {
  SeminormParams params;
  if (!betaSpec.empty())
    params.beta = doubleVectorFromJson(parseInlineOrFile(betaSpec));
  else if (preset)
    for (int j = 1; j <= dimension; ++j) params.beta.push_back(1.0 / j);
  else
    throw CLI::ValidationError("--beta", "required unless --preset is given");
  if (!alphaSpec.empty())
    params.alpha = doubleVectorFromJson(parseInlineOrFile(alphaSpec));
  else if (preset)
    for (int n = 0; n <= maxDegree; ++n) params.alpha.push_back(1.0 / (n + 1));
  else
    throw CLI::ValidationError("--alpha", "required unless --preset is given");
  return params;
}

}  // namespace

int runCli(const std::vector<std::string>& args, const std::string& programPath) {
  CLI::App app{"square-order monomial basis toolkit"};
  app.require_subcommand(1);

  std::uint64_t seed = defaultSeed();
  std::string outPath;

  // enumerate
  auto* enumerateCmd = app.add_subcommand("enumerate", "degree-n monomials in square order");
  int enumDegree = 2, enumDim = 3;
  enumerateCmd->add_option("--degree", enumDegree, "homogeneity degree")->required();
  enumerateCmd->add_option("--dim", enumDim, "maximal index length");
  enumerateCmd->add_option("--out", outPath, "write JSON here instead of stdout");

  // rank / unrank
  auto* rankCmd = app.add_subcommand("rank", "square-order rank of a multi-index");
  std::string rankIndexSpec;
  rankCmd->add_option("--index", rankIndexSpec, "multi-index JSON, e.g. [[1,2],[3,1]]")
      ->required();
  rankCmd->add_option("--out", outPath);

  auto* unrankCmd = app.add_subcommand("unrank", "multi-index at a square-order rank");
  int unrankDegree = 2;
  std::int64_t unrankRank = 1;
  unrankCmd->add_option("--degree", unrankDegree)->required();
  unrankCmd->add_option("--rank", unrankRank)->required();
  unrankCmd->add_option("--out", outPath);

  // ordering verify
  auto* orderingCmd = app.add_subcommand("ordering", "compatible-ordering utilities");
  auto* orderingVerify = orderingCmd->add_subcommand("verify", "certify a table prefix");
  std::string tablePath;
  std::int64_t upto = 0;
  orderingVerify->add_option("--table", tablePath, "table JSON file")->required();
  orderingVerify->add_option("--upto", upto, "prefix bound (default: whole table)");
  orderingVerify->add_option("--out", outPath);

  // norm
  auto* normCmd = app.add_subcommand("norm", "polydisc sup-norm bracket or oracle");
  std::string polyPath, radiiSpec, normMode = "bracket";
  int gridPoints = 64;
  OptimizeBudget normBudget;
  normCmd->add_option("--poly", polyPath, "polynomial JSON file")->required();
  normCmd->add_option("--radii", radiiSpec, "radii JSON, e.g. [1,1,0.5]")->required();
  normCmd->add_option("--mode", normMode)->check(CLI::IsMember({"bracket", "oracle"}));
  normCmd->add_option("--grid", gridPoints, "oracle points per dimension");
  normCmd->add_option("--restarts", normBudget.restarts);
  normCmd->add_option("--iterations", normBudget.lineSearches);
  normCmd->add_option("--seed", seed);
  normCmd->add_option("--out", outPath);

  // fdd
  auto* fddCmd = app.add_subcommand("fdd", "length decomposition and its checks");
  std::string fddPolyPath, fddRadiiSpec;
  fddCmd->add_option("--poly", fddPolyPath, "polynomial JSON file")->required();
  fddCmd->add_option("--radii", fddRadiiSpec, "radii JSON (default: unit)");
  fddCmd->add_option("--seed", seed);
  fddCmd->add_option("--out", outPath);

  // basis-constant
  auto* constantCmd = app.add_subcommand("basis-constant", "basis-constant lower bounds");
  int constantDegree = 0, constantDegreeMax = 0, constantDim = 3;
  std::string constantRadiiSpec, svgPath;
  SearchBudget searchBudget;
  constantCmd->add_option("--degree", constantDegree, "single degree to estimate");
  constantCmd->add_option("--degree-max", constantDegreeMax, "sweep degrees 1..N");
  constantCmd->add_option("--dim", constantDim)->required();
  constantCmd->add_option("--radii", constantRadiiSpec, "radii JSON (default: unit)");
  constantCmd->add_option("--budget", searchBudget.trials, "sampling trials");
  constantCmd->add_option("--ascent", searchBudget.ascentPasses);
  constantCmd->add_option("--seed", seed);
  constantCmd->add_option("--out", outPath, "CSV output path");
  constantCmd->add_option("--svg", svgPath, "optional sweep chart");

  // replay-chain
  auto* replayCmd = app.add_subcommand("replay-chain", "replay the inductive estimate chain");
  std::string chainCoeffsSpec, chainRadiiSpec;
  int chainDegree = 2;
  std::int64_t chainS = 1, chainT = 2;
  int chainGrid = 32;
  replayCmd->add_option("--poly-coeffs", chainCoeffsSpec, "coefficients JSON (inline or @file)")
      ->required();
  replayCmd->add_option("--degree", chainDegree, "degree n+1 of the expansion")->required();
  replayCmd->add_option("--s", chainS)->required();
  replayCmd->add_option("--t", chainT)->required();
  replayCmd->add_option("--radii", chainRadiiSpec, "radii JSON (default: unit of needed dim)");
  replayCmd->add_option("--grid", chainGrid, "oracle points per dimension");
  replayCmd->add_option("--seed", seed);
  replayCmd->add_option("--out", outPath);

  // seminorm
  auto* seminormCmd = app.add_subcommand("seminorm", "weighted sup-seminorm of a series");
  std::string seriesPath, betaSpec, alphaSpec, weightsSpec;
  bool oracleMode = false, usePreset = false;
  int seminormDim = 0;
  seminormCmd->add_option("--series", seriesPath, "Taylor series JSON file")->required();
  seminormCmd->add_option("--beta", betaSpec, "beta JSON (inline or @file)");
  seminormCmd->add_option("--alpha", alphaSpec, "alpha JSON (inline or @file)");
  seminormCmd->add_flag("--preset", usePreset,
                        "use the documented presets beta_j = 1/j, alpha_n = 1/(n+1)");
  seminormCmd->add_option("--dim", seminormDim, "dimension cap (default: series support)");
  seminormCmd->add_flag("--oracle", oracleMode, "grid-oracle sups instead of coefficient sums");
  seminormCmd->add_option("--weights", weightsSpec, "optional weight scalars JSON");
  seminormCmd->add_option("--out", outPath);

  // converge
  auto* convergeCmd = app.add_subcommand("converge", "partial-sum tail table");
  std::string convSeriesPath, convBetaSpec, convAlphaSpec, cutsSpec;
  bool convPreset = false, convOracle = false;
  int convDim = 0;
  convergeCmd->add_option("--series", convSeriesPath)->required();
  convergeCmd->add_option("--beta", convBetaSpec);
  convergeCmd->add_option("--alpha", convAlphaSpec);
  convergeCmd->add_flag("--preset", convPreset);
  convergeCmd->add_option("--dim", convDim);
  convergeCmd->add_flag("--oracle", convOracle);
  convergeCmd->add_option("--cuts", cutsSpec, "comma list (default: row-completion cuts)");
  convergeCmd->add_option("--out", outPath, "CSV output path");

  // verify-all
  auto* verifyCmd = app.add_subcommand("verify-all", "run the full property suite");
  std::string scale = "full";
  verifyCmd->add_option("--seed", seed);
  verifyCmd->add_option("--scale", scale)->check(CLI::IsMember({"quick", "full"}));
  verifyCmd->add_option("--out", outPath, "JSON report path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*enumerateCmd) {
      const auto monomials = enumerateDegree(enumDegree, enumDim);
      json rows = json::array();
      for (std::size_t i = 0; i < monomials.size(); ++i)
        rows.push_back({{"rank", i + 1},
                        {"index", toJson(monomials[i])},
                        {"monomial", monomials[i].toString()}});
      emit({{"config", {{"degree", enumDegree}, {"dim", enumDim}}},
            {"count", monomials.size()},
            {"monomials", std::move(rows)}},
           outPath);
      return kExitOk;
    }

    if (*rankCmd) {
      const auto index = multiIndexFromJson(parseInlineOrFile(rankIndexSpec));
      emit({{"config", {{"index", toJson(index)}}},
            {"degree", index.modulus()},
            {"rank", rankOf(index)}},
           outPath);
      return kExitOk;
    }

    if (*unrankCmd) {
      const auto index = unrank(unrankDegree, unrankRank);
      emit({{"config", {{"degree", unrankDegree}, {"rank", unrankRank}}},
            {"index", toJson(index)},
            {"monomial", index.toString()}},
           outPath);
      return kExitOk;
    }

    if (*orderingVerify) {
      const auto ordering = orderingFromJson(loadJsonFile(tablePath));
      const std::int64_t bound = upto > 0 ? upto : ordering.domainSize();
      json payload{{"config", {{"table", tablePath}, {"upto", bound}}}};
      try {
        const auto decomposition = prefixDecompose(ordering, bound);
        json rows = json::object();
        for (const auto& [n, count] : decomposition.rowCounts)
          rows[std::to_string(n)] = count;
        payload["compatible"] = true;
        payload["certifiedPrefix"] = bound;
        payload["rowCounts"] = std::move(rows);
        emit(payload, outPath);
        return kExitOk;
      } catch (const IncompatiblePrefixError& e) {
        payload["compatible"] = false;
        payload["violationAt"] = e.position();
        payload["message"] = e.what();
        emit(payload, outPath);
        return kExitPropertyFailure;
      }
    }

    if (*normCmd) {
      const auto poly = polynomialFromJson(loadJsonFile(polyPath));
      const auto disc = radiiFromSpec(radiiSpec);
      json payload{{"config",
                    {{"poly", polyPath},
                     {"radii", disc.radii()},
                     {"mode", normMode},
                     {"seed", seed},
                     {"grid", gridPoints},
                     {"restarts", normBudget.restarts},
                     {"iterations", normBudget.lineSearches}}}};
      if (normMode == "oracle") {
        const double value = oracleGrid(poly, disc, gridPoints);
        payload["lower"] = value;
        payload["upper"] = upperBound(poly, disc);
        payload["method"] = "grid";
      } else {
        const auto bracket = polydiscNorm(poly, disc, {normBudget, seed, gridPoints});
        payload["lower"] = bracket.lower;
        payload["upper"] = bracket.upper;
        payload["method"] = bracket.method;
      }
      emit(payload, outPath);
      return kExitOk;
    }

    if (*fddCmd) {
      const auto poly = polynomialFromJson(loadJsonFile(fddPolyPath));
      const int width = std::max(poly.maxTermLength(), 1);
      const auto disc = fddRadiiSpec.empty() ? Polydisc::unit(width)
                                             : radiiFromSpec(fddRadiiSpec);
      const auto doubleComponents = lengthSplit(poly);
      const auto telescoped = telescopeSplit(poly, width);
      bool telescopeMatches = true;
      for (int k = 1; k <= width; ++k) {
        const auto it = doubleComponents.find(k);
        const Polynomial expected =
            it == doubleComponents.end() ? Polynomial(poly.degree()) : it->second;
        telescopeMatches =
            telescopeMatches && telescoped[static_cast<std::size_t>(k) - 1] == expected;
      }
      json components = json::array();
      for (const auto& [k, component] : doubleComponents)
        components.push_back({{"length", k}, {"terms", component.termCount()}});
      bool monotoneOk = true;
      json monotone = json::array();
      for (int s = 1; s < width; ++s) {
        const auto report = checkMonotoneFDD(doubleComponents, disc, s, width,
                                             NormMode::auto_, {normBudget, seed, 32});
        monotoneOk = monotoneOk && report.pass;
        monotone.push_back({{"s", s},
                            {"t", width},
                            {"prefixNorm", report.prefixValue},
                            {"fullNorm", report.fullValue},
                            {"oracle", report.usedOracle},
                            {"pass", report.pass}});
      }
      emit({{"config", {{"poly", fddPolyPath}, {"radii", disc.radii()}, {"seed", seed}}},
            {"components", std::move(components)},
            {"telescopeMatchesLengthSplit", telescopeMatches},
            {"monotone", std::move(monotone)}},
           outPath);
      return telescopeMatches && monotoneOk ? kExitOk : kExitPropertyFailure;
    }

    if (*constantCmd) {
      if (constantDegree <= 0 && constantDegreeMax <= 0)
        throw CLI::ValidationError("basis-constant", "need --degree or --degree-max");
      const int firstDegree = constantDegreeMax > 0 ? 1 : constantDegree;
      const int lastDegree = constantDegreeMax > 0 ? constantDegreeMax : constantDegree;
      const auto disc = constantRadiiSpec.empty() ? Polydisc::unit(constantDim)
                                                  : radiiFromSpec(constantRadiiSpec);
      std::vector<ConstantEstimate> estimates;
      for (int degree = firstDegree; degree <= lastDegree; ++degree)
        estimates.push_back(
            estimateBasisConstant(degree, constantDim, disc, searchBudget, seed));

      std::ostringstream csv;
      csv << "# sqbasis basis-constant dim=" << constantDim << " trials="
          << searchBudget.trials << " ascent=" << searchBudget.ascentPasses
          << " seed=" << seed << "\n";
      csv << "degree,dim,lowerBound,ceiling,witness-rank-s,witness-rank-t\n";
      bool ceilingOk = true;
      for (const auto& estimate : estimates) {
        csv << estimate.degree << "," << estimate.dimension << ","
            << csvNumber(estimate.lowerBound) << "," << csvNumber(estimate.paperCeiling)
            << "," << estimate.witnessS << "," << estimate.witnessT << "\n";
        ceilingOk = ceilingOk && !estimate.exceedsCeiling;
      }
      emitText(csv.str(), outPath);
      if (!svgPath.empty()) {
        try {
          writeSweepSvg(svgPath, estimates);
        } catch (const std::exception& e) {
          std::cerr << "warning: sweep chart not written: " << e.what() << "\n";
        }
      }
      if (!ceilingOk)
        std::cerr << "a sampled ratio exceeded the proven ceiling; see the CSV\n";
      return ceilingOk ? kExitOk : kExitPropertyFailure;
    }

    if (*replayCmd) {
      const auto coeffs = coeffsFromJson(parseInlineOrFile(chainCoeffsSpec));
      int neededDim = 1;
      if (chainT >= 1) neededDim = unrank(chainDegree, chainT).length();
      const auto disc = chainRadiiSpec.empty() ? Polydisc::unit(std::max(neededDim, 1))
                                               : radiiFromSpec(chainRadiiSpec);
      const auto report = replayTheorem2Chain(coeffs, chainDegree, chainS, chainT, disc,
                                              NormEngine::grid(chainGrid));
      json steps = json::array();
      for (const auto& step : report.steps)
        steps.push_back({{"name", step.name},
                         {"lhs", step.lhs},
                         {"rhs", step.rhs},
                         {"identity", step.isIdentity},
                         {"residual", step.residual},
                         {"pass", step.pass}});
      emit({{"config",
             {{"degree", chainDegree},
              {"s", chainS},
              {"t", chainT},
              {"radii", disc.radii()},
              {"grid", chainGrid},
              {"seed", seed}}},
            {"k", report.k},
            {"kStar", report.kStar},
            {"m0", report.m0},
            {"sStar", report.sStar},
            {"prefixNorm", report.prefixNorm},
            {"fullNorm", report.fullNorm},
            {"factorizationExact", report.factorizationExact},
            {"steps", std::move(steps)},
            {"empiricalLowerDegreeConstant", report.empiricalLowerDegreeConstant},
            {"finalWithEmpiricalConstant", report.finalWithEmpiricalConstant},
            {"finalWithTailSum", report.finalWithTailSum},
            {"pass", report.pass}},
           outPath);
      return report.pass ? kExitOk : kExitPropertyFailure;
    }

    if (*seminormCmd) {
      const auto series = taylorSeriesFromJson(loadJsonFile(seriesPath));
      int dimension = seminormDim;
      if (dimension <= 0) {
        dimension = 1;
        for (const auto& part : series.parts)
          dimension = std::max(dimension, part.maxTermLength());
      }
      const auto params = seminormParamsFromFlags(betaSpec, alphaSpec, usePreset,
                                                  dimension, series.maxDegree());
      const SupMode mode = oracleMode ? SupMode::oracle : SupMode::coefficientSum;
      json payload{{"config",
                    {{"series", seriesPath},
                     {"beta", params.beta},
                     {"alpha", params.alpha},
                     {"dim", dimension},
                     {"mode", oracleMode ? "oracle" : "coefficient-sum"}}}};
      payload["value"] = taylorSeminorm(series, params, dimension, mode);
      if (!weightsSpec.empty()) {
        const auto weights = doubleVectorFromJson(parseInlineOrFile(weightsSpec));
        payload["weightedValue"] = weightedSeminorm(
            series, TaylorBase{params, dimension, mode, 32}, weights);
        payload["config"]["weights"] = weights;
      }
      emit(payload, outPath);
      return kExitOk;
    }

    if (*convergeCmd) {
      const auto series = taylorSeriesFromJson(loadJsonFile(convSeriesPath));
      int dimension = convDim;
      if (dimension <= 0) {
        dimension = 1;
        for (const auto& part : series.parts)
          dimension = std::max(dimension, part.maxTermLength());
      }
      const auto params = seminormParamsFromFlags(convBetaSpec, convAlphaSpec, convPreset,
                                                  dimension, series.maxDegree());
      const auto order = globalMonomialOrder(CompatibleOrdering::canonicalDiagonal(),
                                             series.maxDegree(), dimension);
      const auto cuts = cutsSpec.empty() ? rowCompletionCuts(order) : parseCutList(cutsSpec);
      const SupMode mode = convOracle ? SupMode::oracle : SupMode::coefficientSum;
      const auto tails = partialSumTails(series, order, params, dimension, cuts, mode);
      std::ostringstream csv;
      csv << "# sqbasis converge series=" << convSeriesPath << " dim=" << dimension
          << " mode=" << (convOracle ? "oracle" : "coefficient-sum") << "\n";
      csv << "cut,tailValue\n";
      for (const auto& tail : tails)
        csv << tail.cut << "," << csvNumber(tail.value) << "\n";
      emitText(csv.str(), outPath);
      return kExitOk;
    }

    if (*verifyCmd) {
      VerifyOptions options;
      options.seed = seed;
      options.quick = scale == "quick";
      options.cliPath = programPath;
      json criteria = json::array();
      const auto results = runVerificationSuite(options, [&](const CriterionResult& r) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << ": "
                  << r.details << "\n";
        criteria.push_back({{"id", r.id},
                            {"name", r.name},
                            {"pass", r.pass},
                            {"details", r.details}});
      });
      const bool pass = allPass(results);
      std::cout << (pass ? "all criteria passed" : "some criteria FAILED") << "\n";
      if (!outPath.empty())
        emit({{"config", {{"seed", seed}, {"scale", scale}}},
              {"criteria", std::move(criteria)},
              {"pass", pass}},
             outPath);
      return pass ? kExitOk : kExitPropertyFailure;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPropertyFailure;
  }

  return kExitUsage;
}

}  // namespace sqbasis
