#ifndef MINDA_PHI_HPP
#define MINDA_PHI_HPP

// Ma-Minda target functions phi(z) = 1 + B1 z + B2 z^2 + ... and the named-class registry.

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "minda/series.hpp"

namespace minda {

using FamilyParams = std::map<std::string, double>;
using SeriesGenerator = std::function<TruncatedSeries(std::size_t order)>;

/// Tolerance for generator coefficients matching the stored B values.
inline constexpr double kGeneratorTol = 1e-12;

class PhiSpec {
public:
  static constexpr std::size_t kUnbounded = static_cast<std::size_t>(-1);

  /// From raw coefficients; no generator. Throws if B1 <= 0 or any B is not finite.
  explicit PhiSpec(std::array<double, 4> b, std::optional<std::string> name = std::nullopt)
      : name_(std::move(name)), b_(b) {
    validate();
  }

  /// From a generator; B is read off its jet.
  /// `known_degree` bounds the coefficients the generator really knows (a finite
  /// list padded with zeros); closed forms leave it unbounded.
  PhiSpec(std::string name, SeriesGenerator gen, FamilyParams params = {},
          std::size_t known_degree = kUnbounded)
      : name_(std::move(name)),
        generator_(std::move(gen)),
        params_(std::move(params)),
        known_degree_(known_degree) {
    const TruncatedSeries jet = generator_(4);
    if (jet.order() < 4) throw std::logic_error("PhiSpec: generator returned a short jet");
    if (std::abs(jet[0] - 1.0) > kGeneratorTol) {
      throw std::invalid_argument("PhiSpec: phi(0) must be 1");
    }
    for (std::size_t k = 0; k < 4; ++k) {
      if (std::abs(jet[k + 1].imag()) > kGeneratorTol) {
        throw std::invalid_argument("PhiSpec: coefficients must be real");
      }
      b_[k] = jet[k + 1].real();
    }
    validate();
  }

  [[nodiscard]] const std::optional<std::string>& name() const noexcept { return name_; }
  [[nodiscard]] const std::array<double, 4>& B() const noexcept { return b_; }
  [[nodiscard]] double B1() const noexcept { return b_[0]; }
  [[nodiscard]] double B2() const noexcept { return b_[1]; }
  [[nodiscard]] double B3() const noexcept { return b_[2]; }
  [[nodiscard]] double B4() const noexcept { return b_[3]; }
  /// True for closed-form phi whose jet is known to any order.
  [[nodiscard]] bool has_generator() const noexcept { return known_degree_ == kUnbounded; }
  [[nodiscard]] std::size_t known_degree() const noexcept { return known_degree_; }
  [[nodiscard]] const FamilyParams& family_params() const noexcept { return params_; }

  /// Jet of phi to `order`. Without a generator, coefficients past z^4 are zero.
  [[nodiscard]] TruncatedSeries jet(std::size_t order) const {
    if (generator_) return generator_(order).with_order(order);
    return TruncatedSeries({1.0, b_[0], b_[1], b_[2], b_[3]}, order);
  }

  /// Jet of phi with a guard that B-only specs are not asked for unknown coefficients.
  [[nodiscard]] TruncatedSeries jet_checked(std::size_t needed_degree, std::size_t order) const {
    if (needed_degree > known_degree_) {
      throw std::invalid_argument("PhiSpec: coefficient B" + std::to_string(needed_degree) +
                                  " requested but only B1..B" + std::to_string(known_degree_) +
                                  " are known");
    }
    return jet(order);
  }

private:
  void validate() const {
    for (double v : b_) {
      if (!std::isfinite(v)) throw std::invalid_argument("PhiSpec: coefficients must be finite");
    }
    if (!(b_[0] > 0.0)) throw std::invalid_argument("PhiSpec: B1 must be positive");
  }

  std::optional<std::string> name_;
  std::array<double, 4> b_{};
  SeriesGenerator generator_;
  FamilyParams params_;
  std::size_t known_degree_ = 4;
};

/// Phi from a finite jet {1, c1, c2, ...}; needs at least c1..c4.
inline PhiSpec phi_from_series(std::vector<double> coeffs) {
  if (coeffs.size() < 5) throw std::invalid_argument("series: need entries for z^0..z^4");
  if (coeffs[0] != 1.0) throw std::invalid_argument("series: constant term must be 1");
  const std::size_t known = coeffs.size() - 1;
  auto gen = [coeffs = std::move(coeffs)](std::size_t order) {
    TruncatedSeries s(order);
    for (std::size_t k = 0; k <= order && k < coeffs.size(); ++k) s[k] = coeffs[k];
    return s;
  };
  return PhiSpec("series", std::move(gen), {}, known);
}

namespace registry {

struct Entry {
  std::string name;
  std::string formula;
  /// Parameters the entry accepts via --param.
  std::vector<std::string> param_names;
  std::function<PhiSpec(const FamilyParams&)> make;
};

namespace detail {

inline double param_or(const FamilyParams& p, const std::string& key, double fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

inline TruncatedSeries one_plus_sin(std::size_t order) {
  TruncatedSeries s = TruncatedSeries::constant(1.0, order);
  double fact = 1.0;
  for (std::size_t k = 1; k <= order; ++k) {
    fact *= static_cast<double>(k);
    if (k % 2 == 1) s[k] = ((k / 2) % 2 == 0 ? 1.0 : -1.0) / fact;
  }
  return s;
}

inline TruncatedSeries sigmoid(std::size_t order) {
  // 2 / (1 + e^{-z})
  const TruncatedSeries e = exp_series(TruncatedSeries::monomial(1, order, -1.0));
  return TruncatedSeries::constant(2.0, order) / (TruncatedSeries::constant(1.0, order) + e);
}

inline TruncatedSeries sqrt_one_plus(double b, std::size_t order) {
  return pow_real(TruncatedSeries({1.0, b}, order), 0.5);
}

inline TruncatedSeries one_plus_z_exp(std::size_t order) {
  const auto z = TruncatedSeries::identity(order);
  return TruncatedSeries::constant(1.0, order) + z * exp_series(z);
}

inline TruncatedSeries rl(std::size_t order) {
  const double s2 = std::numbers::sqrt2;
  const TruncatedSeries ratio =
      TruncatedSeries({1.0, -1.0}, order) / TruncatedSeries({1.0, 2.0 * (s2 - 1.0)}, order);
  return TruncatedSeries::constant(s2, order) - (s2 - 1.0) * pow_real(ratio, 0.5);
}

inline TruncatedSeries order_alpha(double alpha, std::size_t order) {
  return TruncatedSeries({1.0, 1.0 - 2.0 * alpha}, order) / TruncatedSeries({1.0, -1.0}, order);
}

inline TruncatedSeries power_delta(double delta, std::size_t order) {
  const TruncatedSeries l = TruncatedSeries({1.0, 1.0}, order) / TruncatedSeries({1.0, -1.0}, order);
  return pow_real(l, delta);
}

}  // namespace detail

inline const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    std::vector<Entry> t;
    t.push_back({"sin", "1 + sin z", {}, [](const FamilyParams&) {
                   return PhiSpec("sin", detail::one_plus_sin);
                 }});
    t.push_back({"sigmoid-SG", "2 / (1 + e^{-z})", {}, [](const FamilyParams&) {
                   return PhiSpec("sigmoid-SG", detail::sigmoid);
                 }});
    t.push_back({"sokol-L", "sqrt(1 + z)", {}, [](const FamilyParams&) {
                   return PhiSpec("sokol-L",
                                  [](std::size_t n) { return detail::sqrt_one_plus(1.0, n); });
                 }});
    t.push_back({"q_b", "sqrt(1 + b z), b in (0, 1]", {"b"}, [](const FamilyParams& p) {
                   const double b = detail::param_or(p, "b", 1.0);
                   if (!(b > 0.0 && b <= 1.0)) throw std::invalid_argument("q_b: b must lie in (0, 1]");
                   return PhiSpec(
                       "q_b", [b](std::size_t n) { return detail::sqrt_one_plus(b, n); },
                       FamilyParams{{"b", b}});
                 }});
    t.push_back({"RL", "sqrt2 - (sqrt2 - 1) sqrt((1 - z) / (1 + 2 (sqrt2 - 1) z))", {},
                 [](const FamilyParams&) { return PhiSpec("RL", detail::rl); }});
    t.push_back({"rho", "1 + z e^z", {}, [](const FamilyParams&) {
                   return PhiSpec("rho", detail::one_plus_z_exp);
                 }});
    t.push_back({"order-alpha", "(1 + (1 - 2 alpha) z) / (1 - z), alpha in [0, 1)", {"alpha"},
                 [](const FamilyParams& p) {
                   const double a = detail::param_or(p, "alpha", 0.0);
                   if (!(a >= 0.0 && a < 1.0)) {
                     throw std::invalid_argument("order-alpha: alpha must lie in [0, 1)");
                   }
                   return PhiSpec(
                       "order-alpha", [a](std::size_t n) { return detail::order_alpha(a, n); },
                       FamilyParams{{"alpha", a}});
                 }});
    t.push_back({"power-delta", "((1 + z) / (1 - z))^delta, delta in (0, 1]", {"delta"},
                 [](const FamilyParams& p) {
                   const double d = detail::param_or(p, "delta", 0.25);
                   if (!(d > 0.0 && d <= 1.0)) {
                     throw std::invalid_argument("power-delta: delta must lie in (0, 1]");
                   }
                   return PhiSpec(
                       "power-delta", [d](std::size_t n) { return detail::power_delta(d, n); },
                       FamilyParams{{"delta", d}});
                 }});
    return t;
  }();
  return table;
}

}  // namespace registry

/// Named class lookup. Throws std::invalid_argument for unknown names, unknown
/// parameters and out-of-range values.
inline PhiSpec registry_lookup(const std::string& name, const FamilyParams& params = {}) {
  for (const auto& e : registry::entries()) {
    if (e.name != name) continue;
    for (const auto& [k, v] : params) {
      bool known = false;
      for (const auto& pn : e.param_names) known = known || pn == k;
      if (!known) throw std::invalid_argument(name + ": unknown parameter '" + k + "'");
    }
    return e.make(params);
  }
  throw std::invalid_argument("unknown class '" + name + "'");
}

}  // namespace minda

#endif  // MINDA_PHI_HPP
