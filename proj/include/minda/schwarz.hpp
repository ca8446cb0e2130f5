#ifndef MINDA_SCHWARZ_HPP
#define MINDA_SCHWARZ_HPP

// Schwarz functions from Schur parameters, and Caratheodory functions p = (1+w)/(1-w).
//
//   w(z) = z Psi_{-z1}( z Psi_{-z2}( ... z Psi_{-z_{k-1}}( z_k z ) ... ) )
//   Psi_a(w) = (w - a) / (1 - conj(a) w)
//
// A unimodular parameter z_j makes Psi_{-z_j} constant, so the nesting stops
// there and z_{j+1}.. are ignored.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "minda/series.hpp"

namespace minda {

/// Slack for |zeta| <= 1 and for deciding that a parameter sits on the circle.
inline constexpr double kUnitTol = 1e-12;

/// Psi_zeta(w) = (w - zeta) / (1 - conj(zeta) w), |zeta| < 1.
inline cplx mobius(cplx zeta, cplx w) {
  if (!(std::abs(zeta) < 1.0)) throw std::domain_error("mobius: |zeta| must be < 1");
  return (w - zeta) / (1.0 - std::conj(zeta) * w);
}

class SchurParams {
public:
  SchurParams() = default;

  explicit SchurParams(std::vector<cplx> zetas) : zetas_(std::move(zetas)) {
    for (const auto& z : zetas_) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(z) > 1.0 + kUnitTol) {
        throw std::invalid_argument("SchurParams: every parameter must lie in the closed unit disk");
      }
    }
  }

  SchurParams(std::initializer_list<cplx> zetas) : SchurParams(std::vector<cplx>(zetas)) {}

  [[nodiscard]] const std::vector<cplx>& zetas() const noexcept { return zetas_; }
  [[nodiscard]] std::size_t size() const noexcept { return zetas_.size(); }
  [[nodiscard]] cplx operator[](std::size_t i) const { return zetas_.at(i); }

  /// Number of parameters that actually shape w: up to and including the first unimodular one.
  [[nodiscard]] std::size_t effective_depth() const noexcept {
    for (std::size_t i = 0; i < zetas_.size(); ++i) {
      if (std::abs(zetas_[i]) >= 1.0 - kUnitTol) return i + 1;
    }
    return zetas_.size();
  }

  /// Build from polar pairs (radius, angle); radii are clamped to [0, 1].
  static SchurParams from_polar(const std::vector<std::pair<double, double>>& polar) {
    std::vector<cplx> z;
    z.reserve(polar.size());
    for (auto [r, t] : polar) z.push_back(std::polar(std::clamp(r, 0.0, 1.0), t));
    return SchurParams(std::move(z));
  }

private:
  std::vector<cplx> zetas_;
};

/// Jet of the Schwarz function generated by `params`.
inline TruncatedSeries schur_to_schwarz(const SchurParams& params, std::size_t order) {
  const std::size_t depth = params.effective_depth();
  if (depth == 0 || order == 0) return TruncatedSeries(order);

  // Innermost layer: z_depth * z (a unimodular z_depth lands here too).
  TruncatedSeries w = TruncatedSeries::monomial(1, order, params[depth - 1]);
  const auto one = TruncatedSeries::constant(1.0, order);
  for (std::size_t i = depth - 1; i-- > 0;) {
    const cplx a = params[i];
    // z * Psi_{-a}(w) = z (w + a) / (1 + conj(a) w)
    TruncatedSeries num = w;
    num[0] += a;
    TruncatedSeries den = one + w * std::conj(a);
    w = (num / den).shift_up();
  }
  return w;
}

/// Inverse Schur algorithm: peel up to `depth` parameters off w's jet.
///
/// Stops early (returning fewer parameters) when a recovered parameter is
/// unimodular or the jet runs out of coefficients.
inline SchurParams schwarz_to_schur(const TruncatedSeries& omega, std::size_t depth) {
  if (std::abs(omega[0]) > kEpsDiv) {
    throw std::domain_error("schwarz_to_schur: omega(0) must be 0");
  }
  std::vector<cplx> zetas;
  TruncatedSeries w = omega;
  while (zetas.size() < depth && w.order() >= 1) {
    TruncatedSeries g = w.shift_down();
    cplx zeta = g[0];
    if (std::abs(zeta) > 1.0) zeta /= std::abs(zeta);
    zetas.push_back(zeta);
    if (std::abs(zeta) >= 1.0 - kUnitTol || zetas.size() == depth) break;
    // w_next = Psi_zeta(g) = (g - zeta) / (1 - conj(zeta) g)
    TruncatedSeries num = g;
    num[0] -= zeta;
    TruncatedSeries den = TruncatedSeries::constant(1.0, g.order()) - g * std::conj(zeta);
    w = num / den;
    w[0] = 0.0;
  }
  return SchurParams(std::move(zetas));
}

/// p = (1 + w) / (1 - w); requires w(0) = 0, so p(0) = 1.
inline TruncatedSeries caratheodory_from_schwarz(const TruncatedSeries& omega) {
  if (std::abs(omega[0]) > kEpsDiv) {
    throw std::domain_error("caratheodory_from_schwarz: omega(0) must be 0");
  }
  const auto one = TruncatedSeries::constant(1.0, omega.order());
  return (one + omega) / (one - omega);
}

/// w = (p - 1) / (p + 1); requires p(0) = 1.
inline TruncatedSeries schwarz_from_caratheodory(const TruncatedSeries& p) {
  if (std::abs(p[0] - 1.0) > kEpsDiv) {
    throw std::domain_error("schwarz_from_caratheodory: p(0) must be 1");
  }
  const auto one = TruncatedSeries::constant(1.0, p.order());
  auto w = (p - one) / (p + one);
  w[0] = 0.0;
  return w;
}

struct CaratheodoryTriple {
  cplx p1{};
  cplx p2{};
  cplx p3{};
};

/// The first three coefficients of p in terms of the first three Schur parameters.
inline CaratheodoryTriple p_triple_closed_form(cplx z1, cplx z2, cplx z3) {
  if (std::abs(z1) > 1.0 + kUnitTol || std::abs(z2) > 1.0 + kUnitTol ||
      std::abs(z3) > 1.0 + kUnitTol) {
    throw std::invalid_argument("p_triple_closed_form: parameters must lie in the closed disk");
  }
  const double s1 = 1.0 - std::norm(z1);
  const double s2 = 1.0 - std::norm(z2);
  CaratheodoryTriple t;
  t.p1 = 2.0 * z1;
  t.p2 = 2.0 * z1 * z1 + 2.0 * s1 * z2;
  t.p3 = 2.0 * z1 * z1 * z1 + 4.0 * s1 * z1 * z2 - 2.0 * s1 * std::conj(z1) * z2 * z2 +
         2.0 * s1 * s2 * z3;
  return t;
}

/// min Re p(r e^{i theta}) over `samples` equispaced angles. A positive value
/// is a necessary (not sufficient) sign of Re p > 0 on the disk.
inline double herglotz_margin(const TruncatedSeries& p, double radius, std::size_t samples) {
  if (!(radius > 0.0 && radius < 1.0)) {
    throw std::domain_error("herglotz_margin: radius must lie in (0, 1)");
  }
  if (samples == 0) throw std::invalid_argument("herglotz_margin: need at least one sample");
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < samples; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
    m = std::min(m, eval(p, std::polar(radius, theta)).real());
  }
  return m;
}

/// F(z) = (1 + 2 sigma z + z^2) / (1 - z^2), a Caratheodory function for |sigma| < 1.
inline TruncatedSeries lemma_ml_series(double sigma, std::size_t order) {
  if (!(std::abs(sigma) < 1.0)) throw std::domain_error("lemma_ml_series: |sigma| must be < 1");
  const TruncatedSeries num({1.0, 2.0 * sigma, 1.0}, order);
  const TruncatedSeries den({1.0, 0.0, -1.0}, order);
  return num / den;
}

/// 1 + (1/2) sum p_n q_n z^n; stays Caratheodory when p and q are.
inline TruncatedSeries half_hadamard(const TruncatedSeries& p, const TruncatedSeries& q) {
  if (p.order() != q.order()) throw std::invalid_argument("half_hadamard: order mismatch");
  TruncatedSeries r = TruncatedSeries::constant(1.0, p.order());
  for (std::size_t n = 1; n <= p.order(); ++n) r[n] = 0.5 * p[n] * q[n];
  return r;
}

}  // namespace minda

#endif  // MINDA_SCHWARZ_HPP
