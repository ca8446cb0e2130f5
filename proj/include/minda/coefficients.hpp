#ifndef MINDA_COEFFICIENTS_HPP
#define MINDA_COEFFICIENTS_HPP

// Taylor coefficients of functions in S*(phi) and C(phi): the closed form of a5,
// coefficient extraction through subordination, the sharp bound and the
// extremal functions.

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "minda/conditions.hpp"
#include "minda/phi.hpp"
#include "minda/schwarz.hpp"
#include "minda/series.hpp"

namespace minda {

enum class ClassKind { starlike, convex };

inline std::string_view to_string(ClassKind k) {
  return k == ClassKind::starlike ? "starlike" : "convex";
}

inline ClassKind class_kind_from_string(std::string_view s) {
  if (s == "starlike") return ClassKind::starlike;
  if (s == "convex") return ClassKind::convex;
  throw std::invalid_argument("kind must be 'starlike' or 'convex'");
}

/// a5 = (B1/8) I for S*(phi) and (B1/40) I for C(phi).
inline cplx a5_closed_form(const PhiSpec& phi, cplx p1, cplx p2, cplx p3, cplx p4, ClassKind kind) {
  const cplx i = i_functional(i_coefficients(phi), p1, p2, p3, p4);
  return (kind == ClassKind::starlike ? phi.B1() / 8.0 : phi.B1() / 40.0) * i;
}

/// Solves zf'/f = phi(w) (starlike) or 1 + zf''/f' = phi(w) (convex) for
/// a2..a_{n_max}, given the Schwarz function w. Element k of the result is a_{k+2}.
///
/// With q = phi o w = 1 + sum Q_k z^k:
///   starlike: (n-1) a_n = sum_{k=1}^{n-1} Q_k a_{n-k}
///   convex:   n(n-1) a_n = sum_{k=1}^{n-1} Q_k (n-k) a_{n-k}
inline std::vector<cplx> coeffs_from_subordination(const PhiSpec& phi, const TruncatedSeries& omega,
                                                   ClassKind kind, std::size_t n_max) {
  if (std::abs(omega[0]) > kEpsDiv) {
    throw std::domain_error("coeffs_from_subordination: omega(0) must be 0");
  }
  if (n_max < 2) throw std::invalid_argument("coeffs_from_subordination: n_max must be >= 2");
  if (omega.order() + 1 < n_max) {
    throw std::invalid_argument("coeffs_from_subordination: omega order too small for n_max");
  }
  const std::size_t order = n_max - 1;
  const TruncatedSeries w = omega.with_order(order);
  const TruncatedSeries q = compose(phi.jet_checked(order, order), w);

  std::vector<cplx> a(n_max + 1, cplx{});
  a[1] = 1.0;
  for (std::size_t n = 2; n <= n_max; ++n) {
    cplx acc{};
    for (std::size_t k = 1; k < n; ++k) {
      const double weight = kind == ClassKind::starlike ? 1.0 : static_cast<double>(n - k);
      acc += q[k] * weight * a[n - k];
    }
    const double denom = kind == ClassKind::starlike ? static_cast<double>(n - 1)
                                                     : static_cast<double>(n * (n - 1));
    a[n] = acc / denom;
  }
  return {a.begin() + 2, a.end()};
}

/// a5 via coeffs_from_subordination on the Schwarz function built from `params`.
inline cplx a5_from_schur(const PhiSpec& phi, const SchurParams& params, ClassKind kind) {
  const TruncatedSeries w = schur_to_schwarz(params, 4);
  return coeffs_from_subordination(phi, w, kind, 5).back();
}

/// Jet of H with zH'/H = phi(z^4):  H = z exp( int_0^z (phi(t^4) - 1)/t dt ).
inline TruncatedSeries extremal_starlike(const PhiSpec& phi, std::size_t order = kDefaultOrder) {
  if (order < 9) throw std::invalid_argument("extremal_starlike: order must be >= 9");
  // z^{4k} of phi(z^4) feeds z^{4k+1} of H.
  const TruncatedSeries phi_jet = phi.jet_checked((order - 1) / 4, order);
  const TruncatedSeries z4 = TruncatedSeries::monomial(4, order);
  TruncatedSeries integrand = compose(phi_jet, z4);
  integrand[0] -= 1.0;
  // (phi(z^4) - 1)/z has order-1 coefficients; its antiderivative is back at `order`.
  const TruncatedSeries log_h_over_z = integrate_zero(integrand.shift_down());
  return exp_series(log_h_over_z).shift_up();
}

/// Jet of H with 1 + zH''/H' = phi(z^4), H(0) = 0, H'(0) = 1.
inline TruncatedSeries extremal_convex(const PhiSpec& phi, std::size_t order = kDefaultOrder) {
  if (order < 9) throw std::invalid_argument("extremal_convex: order must be >= 9");
  const TruncatedSeries phi_jet = phi.jet_checked((order - 1) / 4, order);
  const TruncatedSeries q = compose(phi_jet, TruncatedSeries::monomial(4, order));
  TruncatedSeries h(order);
  h[1] = 1.0;
  for (std::size_t n = 2; n <= order; ++n) {
    cplx acc{};
    for (std::size_t k = 1; k < n; ++k) acc += q[k] * static_cast<double>(n - k) * h[n - k];
    h[n] = acc / static_cast<double>(n * (n - 1));
  }
  return h;
}

struct BoundResult {
  ClassKind class_kind = ClassKind::starlike;
  /// B1/4 or B1/20; empty when C1-C4 do not all hold.
  std::optional<double> bound;
  ConditionReport conditions;
  /// a1..a9 of the extremal function; filled only with the bound.
  std::vector<double> extremal_coeffs;
  std::string status;
};

inline BoundResult sharp_bound(const PhiSpec& phi, ClassKind kind) {
  BoundResult r;
  r.class_kind = kind;
  r.conditions = check_conditions(phi);
  if (!r.conditions.all_hold) {
    r.status = "conditions not satisfied";
    return r;
  }
  r.bound = kind == ClassKind::starlike ? phi.B1() / 4.0 : phi.B1() / 20.0;
  const TruncatedSeries h =
      kind == ClassKind::starlike ? extremal_starlike(phi, 9) : extremal_convex(phi, 9);
  r.extremal_coeffs.reserve(9);
  for (std::size_t n = 1; n <= 9; ++n) r.extremal_coeffs.push_back(h[n].real());
  r.status = "ok";
  return r;
}

}  // namespace minda

#endif  // MINDA_COEFFICIENTS_HPP
