#include "sqbasis/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace sqbasis {

using nlohmann::json;

json toJson(const MultiIndex& index) {
  json entries = json::array();
  for (const auto& [pos, exp] : index.entries()) entries.push_back({pos, exp});
  return entries;
}

MultiIndex multiIndexFromJson(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("multi-index JSON must be an array of pairs");
  std::vector<MultiIndex::Entry> entries;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2)
      throw std::invalid_argument("multi-index entries must be [position, exponent] pairs");
    entries.emplace_back(entry[0].get<int>(), entry[1].get<int>());
  }
  return MultiIndex(std::move(entries));
}

json toJson(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [index, coeff] : p.terms())
    terms.push_back({{"index", toJson(index)}, {"re", coeff.real()}, {"im", coeff.imag()}});
  return {{"degree", p.degree()}, {"terms", std::move(terms)}};
}

Polynomial polynomialFromJson(const json& j) {
  if (!j.contains("degree")) throw std::invalid_argument("polynomial JSON needs a degree");
  Polynomial p(j.at("degree").get<int>());
  if (j.contains("terms")) {
    for (const auto& term : j.at("terms")) {
      const double re = term.value("re", 0.0);
      const double im = term.value("im", 0.0);
      p.addTerm(multiIndexFromJson(term.at("index")), {re, im});
    }
  }
  return p;
}

json toJson(const TaylorSeries& series) {
  json parts = json::array();
  for (const auto& part : series.parts) parts.push_back(toJson(part));
  return {{"parts", std::move(parts)}};
}

TaylorSeries taylorSeriesFromJson(const json& j) {
  if (!j.contains("parts")) throw std::invalid_argument("Taylor series JSON needs parts");
  std::vector<Polynomial> parts;
  for (const auto& part : j.at("parts")) parts.push_back(polynomialFromJson(part));
  return TaylorSeries(std::move(parts));
}

CompatibleOrdering orderingFromJson(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("ordering table JSON must be an array");
  std::vector<CompatibleOrdering::RowCol> table;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2)
      throw std::invalid_argument("ordering table entries must be [row, column] pairs");
    table.emplace_back(entry[0].get<int>(), entry[1].get<int>());
  }
  return CompatibleOrdering::fromTable(std::move(table));
}

json loadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void writeTextFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

json parseInlineOrFile(const std::string& spec) {
  if (!spec.empty() && spec.front() == '@') return loadJsonFile(spec.substr(1));
  return json::parse(spec);
}

std::vector<double> doubleVectorFromJson(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array of numbers");
  std::vector<double> values;
  for (const auto& v : j) values.push_back(v.get<double>());
  return values;
}

}  // namespace sqbasis
