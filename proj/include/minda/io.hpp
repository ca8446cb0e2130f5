#ifndef MINDA_IO_HPP
#define MINDA_IO_HPP

// JSON for phi spec files and result records.
//
// Spec files take one of three shapes:
//   {"name": "q_b", "params": {"b": 0.5}}
//   {"B": [B1, B2, B3, B4]}
//   {"series": [1.0, c1, c2, ...]}
// A record emitted by the CLI ({"input": {...}, "result": ..., "meta": ...}) is
// also accepted; its "input" member is read as the spec.

#include <array>
#include <charconv>
#include <cmath>
#include <complex>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "minda/coefficients.hpp"
#include "minda/conditions.hpp"
#include "minda/phi.hpp"
#include "minda/schwarz.hpp"
#include "minda/verify.hpp"

namespace minda {

using json = nlohmann::json;

inline PhiSpec phi_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("spec: expected a JSON object");
  if (j.contains("input")) return phi_from_json(j.at("input"));

  // "B" next to "name" is informational (see phi_to_json).
  const bool has_name = j.contains("name");
  const int shapes = static_cast<int>(has_name) + static_cast<int>(j.contains("B") && !has_name) +
                     static_cast<int>(j.contains("series"));
  if (shapes != 1) {
    throw std::invalid_argument("spec: give exactly one of \"name\", \"B\" or \"series\"");
  }
  try {
    if (j.contains("name")) {
      FamilyParams params;
      if (j.contains("params")) {
        for (const auto& [k, v] : j.at("params").items()) params[k] = v.get<double>();
      }
      return registry_lookup(j.at("name").get<std::string>(), params);
    }
    if (j.contains("B")) {
      const auto b = j.at("B").get<std::vector<double>>();
      if (b.size() != 4) throw std::invalid_argument("spec: need four coefficients in \"B\"");
      return PhiSpec({b[0], b[1], b[2], b[3]});
    }
    return phi_from_series(j.at("series").get<std::vector<double>>());
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("spec: ") + e.what());
  }
}

inline PhiSpec phi_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("spec: cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("spec: " + path + ": " + e.what());
  }
  return phi_from_json(j);
}

/// Spec-file form of `phi`. Named classes also carry B, which the loader ignores.
inline json phi_to_json(const PhiSpec& phi) {
  json j;
  const auto& b = phi.B();
  if (phi.name() && phi.has_generator()) {
    j["name"] = *phi.name();
    j["params"] = json::object();
    for (const auto& [k, v] : phi.family_params()) j["params"][k] = v;
    j["B"] = std::vector<double>(b.begin(), b.end());
  } else if (phi.known_degree() > 4) {
    std::vector<double> s;
    const TruncatedSeries jet = phi.jet(phi.known_degree());
    for (const auto& c : jet.coeffs()) s.push_back(c.real());
    j["series"] = s;
  } else {
    j["B"] = std::vector<double>(b.begin(), b.end());
  }
  return j;
}

inline json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

inline json to_json(const ConditionRecord& r) {
  json j;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  // JSON has no infinities; a degenerate record is flagged instead.
  j["margin"] = std::isfinite(r.margin) ? json(r.margin) : json(nullptr);
  j["holds"] = r.holds;
  j["degenerate"] = r.degenerate;
  return j;
}

inline json to_json(const ConditionReport& rep) {
  json j;
  for (std::size_t i = 0; i < 4; ++i) j["C" + std::to_string(i + 1)] = to_json(rep.c[i]);
  j["all_hold"] = rep.all_hold;
  return j;
}

inline json to_json(const BoundResult& r) {
  json j;
  j["kind"] = std::string(to_string(r.class_kind));
  j["bound"] = r.bound ? json(*r.bound) : json(nullptr);
  j["status"] = r.status;
  j["conditions"] = to_json(r.conditions);
  j["extremal_coeffs"] = r.extremal_coeffs;
  return j;
}

inline json to_json(const SchurParams& p) {
  json a = json::array();
  for (const auto& z : p.zetas()) a.push_back(complex_to_json(z));
  return a;
}

inline json to_json(const SearchResult& r) {
  json j;
  j["best_value"] = r.best_value;
  j["best_params"] = to_json(r.best_params);
  j["evaluations"] = r.evaluations;
  j["converged"] = r.converged;
  return j;
}

inline json to_json(const MonteCarloReport& r) {
  json j;
  j["n_samples"] = r.n_samples;
  j["seed"] = r.seed;
  j["bound"] = r.bound;
  j["max_abs_a5"] = r.max_abs_a5;
  j["argmax_index"] = r.argmax_index;
  j["violations"] = r.violations;
  return j;
}

inline json to_json(const ThresholdResult& r) {
  json j;
  j["delta0"] = r.delta0;
  j["bracket"] = json::array({r.bracket.first, r.bracket.second});
  json samples = json::array();
  for (std::size_t i = 0; i < r.margin_samples.size(); ++i) {
    const auto& [d, m] = r.margin_samples[i];
    samples.push_back({{"delta", d},
                       {"min_margin", std::isfinite(m) ? json(m) : json(nullptr)},
                       {"all_hold", static_cast<bool>(r.all_hold_samples[i])}});
  }
  j["margin_samples"] = samples;
  return j;
}

inline json to_json(const ProofTrace& t) {
  auto num = [](double v) { return std::isfinite(v) ? json(v) : json(nullptr); };
  json j;
  j["xi"] = {num(t.xi1), num(t.xi2), num(t.xi3)};
  j["u"] = {num(t.u1), num(t.u2), num(t.u3)};
  j["gamma"] = {1.0, num(t.gamma1), num(t.gamma2), num(t.gamma3)};
  j["sigma"] = num(t.sigma);
  j["b"] = {num(t.b1), num(t.b2), num(t.b3), num(t.b4)};
  j["I"] = complex_to_json(t.I_value);
  j["A4"] = complex_to_json(t.A4_value);
  j["residual"] = num(t.residual);
  j["xi_in_disk"] = {t.xi_in_disk[0], t.xi_in_disk[1], t.xi_in_disk[2]};
  j["sigma_in_range"] = t.sigma_in_range;
  j["degenerate"] = t.degenerate;
  j["certified"] = t.certified();
  return j;
}

/// Fixed 17 significant digits with a period separator, independent of locale.
inline std::string format_g17(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  if (res.ec != std::errc{}) throw std::runtime_error("format_g17: conversion failed");
  return std::string(buf.data(), res.ptr);
}

}  // namespace minda

#endif  // MINDA_IO_HPP
