#ifndef SQBASIS_JSON_IO_HPP
#define SQBASIS_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "sqbasis/ordering.hpp"
#include "sqbasis/polynomial.hpp"

namespace sqbasis {

// Wire formats:
//   MultiIndex:    [[position, exponent], ...], positions 1-based ascending
//   Polynomial:    {"degree": n, "terms": [{"index": [...], "re": x, "im": y}, ...]}
//   TaylorSeries:  {"parts": [polynomial, ...]}
//   OrderingTable: [[row, column], ...] with entry k-1 holding phi^{-1}(k)

nlohmann::json toJson(const MultiIndex& index);
MultiIndex multiIndexFromJson(const nlohmann::json& j);

nlohmann::json toJson(const Polynomial& p);
Polynomial polynomialFromJson(const nlohmann::json& j);

nlohmann::json toJson(const TaylorSeries& series);
TaylorSeries taylorSeriesFromJson(const nlohmann::json& j);

CompatibleOrdering orderingFromJson(const nlohmann::json& j);

nlohmann::json loadJsonFile(const std::string& path);
void writeTextFile(const std::string& path, const std::string& content);

/// Parses either inline JSON (e.g. "[1,1,0.5]") or, with a leading '@', a
/// path to a JSON file.
nlohmann::json parseInlineOrFile(const std::string& spec);

std::vector<double> doubleVectorFromJson(const nlohmann::json& j);

}  // namespace sqbasis

#endif  // SQBASIS_JSON_IO_HPP
