#include "nmweyl/io.hpp"

#include <stdexcept>

namespace nmweyl {

json weight_json(const Weight& w) { return json(w.to_vector()); }

Weight weight_from_json(const json& j) {
  const std::vector<int> v = j.get<std::vector<int>>();
  return Weight(std::span<const int>(v));
}

namespace {
int reported_qmax(int qmax, int degree) { return qmax >= kExactQ ? std::max(degree, 0) : qmax; }
}  // namespace

json series_json(const QSeriesPoly& p) {
  json terms = json::array();
  for (const auto& [w, s] : p.terms())
    for (int k = 0; k <= s.degree(); ++k)
      if (s.coeff(k) != 0) terms.push_back({{"wt", weight_json(w)}, {"q", k}, {"c", s.coeff(k).str()}});
  return {{"qmax", reported_qmax(p.qmax(), p.max_qdegree())}, {"terms", terms}};
}

json series_json(const QSeries& s) {
  json terms = json::array();
  for (int k = 0; k <= s.degree(); ++k)
    if (s.coeff(k) != 0) terms.push_back({{"wt", json::array()}, {"q", k}, {"c", s.coeff(k).str()}});
  return {{"qmax", reported_qmax(s.qmax(), s.degree())}, {"terms", terms}};
}

QSeriesPoly series_from_json(const json& j) {
  const int qmax = j.at("qmax").get<int>();
  const json& terms = j.at("terms");
  if (terms.empty()) throw std::invalid_argument("series_from_json: cannot infer the rank of an empty series");
  QSeriesPoly p(static_cast<int>(terms.front().at("wt").size()), qmax);
  for (const json& t : terms)
    p.add_term(weight_from_json(t.at("wt")), t.at("q").get<int>(), Integer(t.at("c").get<std::string>()));
  return p;
}

json path_json(const AlcovePath& p) { return {{"J", p.J}, {"wt", weight_json(p.wt)}, {"qdeg", p.qdeg}}; }

json char_record_json(const CharRecord& r) {
  return {{"label", to_string(r.label)},
          {"wt", weight_json(r.weight)},
          {"char", series_json(r.character)},
          {"provenance", r.provenance}};
}

json report_json(const VerifyReport& r) {
  json params = {{"type", r.cartan}, {"box", r.box}, {"qmax", r.qmax}};
  if (r.weight) params["weight"] = weight_json(*r.weight);
  json checks = json::array();
  for (const Check& c : r.checks)
    checks.push_back({{"description", c.description}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  return {{"suite", r.suite}, {"params", params}, {"checks", checks}, {"notes", r.notes}, {"pass", r.pass()}};
}

}  // namespace nmweyl
