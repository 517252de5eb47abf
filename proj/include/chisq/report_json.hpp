#pragma once

#include <json.hpp>

#include "chisq/axioms.hpp"
#include "chisq/gof.hpp"
#include "chisq/reconstruction.hpp"

// JSON report layer used by the CLI and the round-trip tests. Every
// rational is serialized as a "p/q" string.

namespace chisq {

using nlohmann::json;

inline json rationals_to_json(const std::vector<Rational>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(format_rational(v));
  return arr;
}

inline std::vector<Rational> rationals_from_json(const json& arr) {
  std::vector<Rational> out;
  for (const auto& v : arr) out.push_back(parse_rational(v.get<std::string>()));
  return out;
}

inline json to_json(const Witness& w) {
  json j;
  j["axiom"] = w.axiom.name();
  j["pi"] = rationals_to_json(w.pi);
  if (!w.pi2.empty()) j["pi2"] = rationals_to_json(w.pi2);
  if (!w.x.empty()) j["x"] = w.x;
  if (!w.y.empty()) j["y"] = w.y;
  if (w.k != 0) j["k"] = w.k;
  if (w.k2 != 0) j["k2"] = w.k2;
  if (w.lambda != 0) j["lambda"] = w.lambda;
  if (w.j != 0) j["indices"] = {w.j, w.l, w.r, w.s};
  j["lhs"] = format_rational(w.lhs);
  j["rhs"] = format_rational(w.rhs);
  return j;
}

inline json to_json(const CheckReport& r) {
  json j;
  j["axiom"] = r.axiom.name();
  j["measure"] = r.measure;
  j["instances_tested"] = r.instances_tested;
  j["passed"] = r.passed;
  if (r.witness) j["witness"] = to_json(*r.witness);
  return j;
}

inline json to_json(const TestResult& r) {
  json j;
  j["statistic"] = format_rational(r.statistic);
  j["statistic_float"] = r.statistic_float;
  j["df"] = r.df;
  j["p_value"] = r.p_value;
  j["gamma"] = format_rational(r.gamma);
  return j;
}

inline TestResult test_result_from_json(const json& j) {
  TestResult r;
  r.statistic = parse_rational(j.at("statistic").get<std::string>());
  r.statistic_float = j.at("statistic_float").get<double>();
  r.df = j.at("df").get<int>();
  r.p_value = j.at("p_value").get<double>();
  r.gamma = parse_rational(j.at("gamma").get<std::string>());
  return r;
}

inline json to_json(const QuadraticForm& f) {
  json j;
  j["n"] = f.n;
  j["dropped"] = f.dropped;
  json diag = json::object();
  for (const auto& [i, rho] : f.diag) diag[std::to_string(i)] = format_rational(rho);
  j["diag"] = diag;
  json cross = json::object();
  for (const auto& [ij, rho] : f.cross) {
    cross[std::to_string(ij.first) + "," + std::to_string(ij.second)] =
        format_rational(rho);
  }
  j["cross"] = cross;
  json linear = json::object();
  for (const auto& [i, rho] : f.linear) linear[std::to_string(i)] = format_rational(rho);
  j["linear"] = linear;
  j["constant"] = format_rational(f.constant);
  return j;
}

inline json to_json(const IndependenceReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    json j;
    j["measure"] = row.measure;
    j["homogeneity_0"] = row.homogeneity0_passed ? "pass" : "fail";
    j["deviations_balancedness"] = row.deviations_balancedness_passed ? "pass" : "fail";
    j["inverse_effects"] = row.inverse_effects_passed ? "pass" : "fail";
    if (row.witness) j["witness"] = to_json(*row.witness);
    rows.push_back(std::move(j));
  }
  json j;
  j["rows"] = rows;
  j["as_expected"] = report.as_expected;
  return j;
}

}  // namespace chisq
