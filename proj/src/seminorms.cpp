#include "sqbasis/seminorms.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sqbasis {

namespace {

double supOver(const Polynomial& part, const std::vector<double>& radii, SupMode mode,
               int gridPointsPerDim) {
  if (part.isZeroPolynomial()) return 0.0;
  const Polydisc disc(radii);
  if (mode == SupMode::coefficientSum) return upperBound(part, disc);
  return oracleGrid(part, disc, gridPointsPerDim);
}

std::vector<double> enlargedRadii(const SeminormParams& params, int dimension, int degree) {
  std::vector<double> radii(static_cast<std::size_t>(dimension));
  const double alpha = params.alpha[static_cast<std::size_t>(degree)];
  for (int j = 0; j < dimension; ++j)
    radii[static_cast<std::size_t>(j)] = params.beta[static_cast<std::size_t>(j)] + alpha;
  return radii;
}

}  // namespace

void SeminormParams::validate(int dimension, int maxDegree) const {
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  if (static_cast<int>(beta.size()) < dimension)
    throw std::invalid_argument("beta covers " + std::to_string(beta.size()) +
                                " coordinates, need " + std::to_string(dimension));
  if (static_cast<int>(alpha.size()) < maxDegree + 1)
    throw std::invalid_argument("alpha covers " + std::to_string(alpha.size()) +
                                " degrees, need " + std::to_string(maxDegree + 1));
  for (int j = 0; j < dimension; ++j)
    if (!(beta[static_cast<std::size_t>(j)] > 0.0))
      throw std::invalid_argument("beta entries must be positive");
  for (int n = 0; n <= maxDegree; ++n)
    if (alpha[static_cast<std::size_t>(n)] < 0.0)
      throw std::invalid_argument("alpha entries must be non-negative");
}

double degreeSup(const Polynomial& part, const SeminormParams& params, int dimension,
                 SupMode mode, int gridPointsPerDim) {
  if (part.maxTermLength() > dimension)
    throw std::invalid_argument("series term uses a coordinate beyond the dimension cap");
  return supOver(part, enlargedRadii(params, dimension, part.degree()), mode,
                 gridPointsPerDim);
}

double taylorSeminorm(const TaylorSeries& series, const SeminormParams& params,
                      int dimension, SupMode mode, int gridPointsPerDim) {
  params.validate(dimension, series.maxDegree());
  double sum = 0.0;
  for (const auto& part : series.parts)
    sum += degreeSup(part, params, dimension, mode, gridPointsPerDim);
  return sum;
}

double boundedSeminorm(const TaylorSeries& series, double radius, int dimension,
                       SupMode mode, int gridPointsPerDim) {
  if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
  SeminormParams params;
  params.beta.assign(static_cast<std::size_t>(dimension), radius);
  params.alpha.assign(static_cast<std::size_t>(series.maxDegree()) + 1, 0.0);
  return taylorSeminorm(series, params, dimension, mode, gridPointsPerDim);
}

double weightedSeminorm(const TaylorSeries& series, const SeminormBase& base,
                        const std::vector<double>& weights) {
  if (static_cast<int>(weights.size()) < static_cast<int>(series.parts.size()))
    throw std::invalid_argument("weights cover " + std::to_string(weights.size()) +
                                " degrees, need " + std::to_string(series.parts.size()));
  double sum = 0.0;
  for (std::size_t n = 0; n < series.parts.size(); ++n) {
    const double weight = std::abs(weights[n]);
    if (weight == 0.0) continue;
    double value = 0.0;
    if (const auto* taylor = std::get_if<TaylorBase>(&base)) {
      taylor->params.validate(taylor->dimension, series.maxDegree());
      value = degreeSup(series.parts[n], taylor->params, taylor->dimension, taylor->mode,
                        taylor->gridPointsPerDim);
    } else {
      const auto& bounded = std::get<BoundedBase>(base);
      SeminormParams params;
      params.beta.assign(static_cast<std::size_t>(bounded.dimension), bounded.radius);
      params.alpha.assign(static_cast<std::size_t>(series.maxDegree()) + 1, 0.0);
      value = degreeSup(series.parts[n], params, bounded.dimension, bounded.mode,
                        bounded.gridPointsPerDim);
    }
    sum += weight * value;
  }
  return sum;
}

std::vector<TailEntry> partialSumTails(const TaylorSeries& series,
                                       const std::vector<OrderedMonomial>& order,
                                       const SeminormParams& params, int dimension,
                                       const std::vector<std::int64_t>& cuts,
                                       SupMode mode, int gridPointsPerDim) {
  params.validate(dimension, series.maxDegree());

  // Every term of the series must appear in the truncated order, otherwise
  // tails would silently omit mass.
  std::map<std::pair<int, MultiIndex>, std::int64_t,
           decltype([](const auto& a, const auto& b) {
             if (a.first != b.first) return a.first < b.first;
             return GradedSquareLess{}(a.second, b.second);
           })>
      position;
  for (std::size_t i = 0; i < order.size(); ++i)
    position[{order[i].degree, order[i].index}] = static_cast<std::int64_t>(i) + 1;
  for (const auto& part : series.parts)
    for (const auto& [index, coeff] : part.terms())
      if (!position.contains({part.degree(), index}))
        throw std::invalid_argument("series term " + index.toString() +
                                    " lies outside the ordering truncation");

  std::vector<TailEntry> tails;
  tails.reserve(cuts.size());
  for (const std::int64_t cut : cuts) {
    TaylorSeries tail = series;
    for (auto& part : tail.parts) {
      Polynomial kept(part.degree());
      for (const auto& [index, coeff] : part.terms()) {
        const std::int64_t pos = position.at({part.degree(), index});
        if (pos > cut) kept.addTerm(index, coeff);
      }
      part = std::move(kept);
    }
    tails.push_back({cut, taylorSeminorm(tail, params, dimension, mode, gridPointsPerDim)});
  }
  return tails;
}

std::vector<std::int64_t> rowCompletionCuts(const std::vector<OrderedMonomial>& order) {
  std::map<int, std::int64_t> lastPosition;
  for (std::size_t i = 0; i < order.size(); ++i)
    lastPosition[order[i].degree] = static_cast<std::int64_t>(i) + 1;
  std::vector<std::int64_t> cuts;
  cuts.reserve(lastPosition.size());
  for (const auto& [degree, pos] : lastPosition) cuts.push_back(pos);
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

}  // namespace sqbasis
