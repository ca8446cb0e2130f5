#ifndef MINDA_CONDITIONS_HPP
#define MINDA_CONDITIONS_HPP

// Coefficient conditions C1-C4 on phi, the I-coefficients of a5, and the
// auxiliary quantities (xi, u, gamma, sigma, b, A4) that certify |I| <= 2.

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "minda/phi.hpp"
#include "minda/series.hpp"

namespace minda {

/// Denominators smaller than this are treated as vanishing.
inline constexpr double kDegenerateTol = 1e-14;

struct ConditionRecord {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs, or -inf when degenerate
  bool holds = false;
  bool degenerate = false;
};

struct ConditionReport {
  std::array<ConditionRecord, 4> c{};  // C1..C4
  bool all_hold = false;

  [[nodiscard]] const ConditionRecord& operator[](std::size_t i) const { return c.at(i); }
  [[nodiscard]] double min_margin() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& r : c) m = std::min(m, r.margin);
    return m;
  }
};

namespace detail {

inline ConditionRecord strict_less(double lhs, double rhs) {
  ConditionRecord r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = rhs - lhs;
  r.holds = r.margin > 0.0;
  return r;
}

inline ConditionRecord degenerate_record(double lhs, double rhs) {
  ConditionRecord r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = -std::numeric_limits<double>::infinity();
  r.holds = false;
  r.degenerate = true;
  return r;
}

// Left-hand polynomial of C3; identical to the numerator of xi3.
inline double c3_lhs_poly(double B1, double B2, double B3, double B4) {
  const double B1_2 = B1 * B1, B1_3 = B1_2 * B1, B1_4 = B1_3 * B1, B1_5 = B1_4 * B1;
  const double B1_6 = B1_5 * B1, B1_7 = B1_6 * B1, B1_8 = B1_7 * B1;
  const double B2_2 = B2 * B2, B2_3 = B2_2 * B2, B2_4 = B2_3 * B2;
  return 30 * B1_7 - 9 * B1_8 - B1_6 * (66 * B2 - 5) - 648 * B2_3 + 324 * B2_4 +
         B1_5 * (170 * B2 - 126) - 648 * B2 * B3 * B3 +
         B1_3 * (-180 * B2 + 220 * B2_2 + 108 * B3 - 360 * B2 * B3) +
         B1 * (1296 * B2 * B3 - 720 * B2_2 * B3) + 648 * B2_2 * B4 +
         B1_4 * (108 + 10 * B2 - 175 * B2_2 + 90 * B3 + 162 * B4) +
         B1_2 * (-144 * B2_2 + 4 * B2_3 + 180 * B2 * B3 - 324 * B3 * B3 - 648 * B4 + 648 * B2 * B4);
}

// Right-hand polynomial of C3 (without the factor 8).
inline double c3_rhs_poly(double B1, double B2, double B3, double /*B4*/) {
  const double B1_2 = B1 * B1, B1_3 = B1_2 * B1, B1_4 = B1_3 * B1, B1_5 = B1_4 * B1;
  const double B1_6 = B1_5 * B1, B1_7 = B1_6 * B1;
  const double B2_2 = B2 * B2, B2_3 = B2_2 * B2;
  return 9 * B1_6 + 9 * B1_7 + B1_4 * (-27 + 32 * B2) + B1_5 * (-52 + 63 * B2) +
         162 * B2_2 * B3 + B1_3 * (81 - 189 * B2 + 164 * B2_2 + 9 * B3) +
         B1_2 * (18 * B2_2 - 9 * B2 * B3) + B1 * (-162 * B2_2 + 198 * B2_3 - 81 * B3 * B3);
}

// The ratio (4B1^2 + 6(B2 - B1)) / (3B1^2 + 6(B2 - B1)) split into parts.
struct Ratio {
  double num;
  double den;
};

inline Ratio sigma_squared_parts(double B1, double B2) {
  return {4 * B1 * B1 + 6 * (B2 - B1), 3 * B1 * B1 + 6 * (B2 - B1)};
}

}  // namespace detail

/// Evaluates C1-C4 with strict inequalities.
///
/// C1 is |B1^2 + 2B2| < 2B1, the form equivalent to |xi1| < 1. C4 reports
/// rho = (4B1^2 + 6(B2-B1)) / (3B1^2 + 6(B2-B1)) as lhs, 1 as rhs, and
/// min(rho, 1 - rho) as margin.
inline ConditionReport check_conditions(const PhiSpec& phi) {
  const double B1 = phi.B1(), B2 = phi.B2(), B3 = phi.B3(), B4 = phi.B4();
  ConditionReport rep;

  rep.c[0] = detail::strict_less(std::abs(B1 * B1 + 2 * B2), 2 * B1);

  {
    const double lhs = std::abs(B1 * B1 * B1 - B1 * B1 * B2 + 18 * B2 * B2 - 18 * B1 * B3);
    const double f1 = B1 * B1 + 2 * B1 + 2 * B2;
    const double f2 = 2 * B1 * B1 - 3 * B1 + 3 * B2;
    const double rhs = 3 * std::abs(f1 * f2);
    rep.c[1] = (std::abs(f1) < kDegenerateTol || std::abs(f2) < kDegenerateTol)
                   ? detail::degenerate_record(lhs, rhs)
                   : detail::strict_less(lhs, rhs);
  }

  {
    const double lhs = std::abs(detail::c3_lhs_poly(B1, B2, B3, B4));
    const double rhs_poly = detail::c3_rhs_poly(B1, B2, B3, B4);
    const double rhs = 8 * std::abs(rhs_poly);
    rep.c[2] = std::abs(rhs_poly) < kDegenerateTol ? detail::degenerate_record(lhs, rhs)
                                                   : detail::strict_less(lhs, rhs);
  }

  {
    const auto [num, den] = detail::sigma_squared_parts(B1, B2);
    if (std::abs(den) < kDegenerateTol) {
      rep.c[3] = detail::degenerate_record(std::numeric_limits<double>::quiet_NaN(), 1.0);
    } else {
      const double rho = num / den;
      ConditionRecord r;
      r.lhs = rho;
      r.rhs = 1.0;
      r.margin = std::min(rho, 1.0 - rho);
      r.holds = r.margin > 0.0;
      rep.c[3] = r;
    }
  }

  rep.all_hold = rep.c[0].holds && rep.c[1].holds && rep.c[2].holds && rep.c[3].holds;
  return rep;
}

struct ICoefficients {
  double I1 = 0.0;
  double I2 = 0.0;
  double I3 = 0.0;
  double I4 = 0.0;
};

inline ICoefficients i_coefficients(const PhiSpec& phi) {
  const double B1 = phi.B1(), B2 = phi.B2(), B3 = phi.B3(), B4 = phi.B4();
  const double B1_2 = B1 * B1, B1_3 = B1_2 * B1, B1_4 = B1_3 * B1;
  ICoefficients c;
  c.I1 = (B1_4 - 6 * B1_3 + 11 * B1_2 + 6 * B1_2 * B2 - 6 * B1 + 3 * B2 * B2 - 22 * B1 * B2 +
          18 * B2 - 18 * B3 + 8 * B1 * B3 + 6 * B4) /
         (48 * B1);
  c.I2 = (3 * B1_3 - 11 * B1_2 + 9 * B1 - 18 * B2 + 11 * B1 * B2 + 9 * B3) / (12 * B1);
  c.I3 = (2 * B1_2 - 3 * B1 + 3 * B2) / (3 * B1);
  c.I4 = (B1_2 - 2 * B1 + 2 * B2) / (4 * B1);
  return c;
}

/// The functional I = p4 + I1 p1^4 + I2 p1^2 p2 + I3 p1 p3 + I4 p2^2.
inline cplx i_functional(const ICoefficients& c, cplx p1, cplx p2, cplx p3, cplx p4) {
  return p4 + c.I1 * p1 * p1 * p1 * p1 + c.I2 * p1 * p1 * p2 + c.I3 * p1 * p3 + c.I4 * p2 * p2;
}

/// Real Schur parameters xi1..xi3 of the auxiliary Caratheodory function h.
/// NaN marks a vanishing denominator.
struct XiValues {
  double xi1 = 0.0;
  double xi2 = 0.0;
  double xi3 = 0.0;
};

inline XiValues xi_values(const PhiSpec& phi) {
  const double B1 = phi.B1(), B2 = phi.B2(), B3 = phi.B3(), B4 = phi.B4();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double B1_2 = B1 * B1, B1_3 = B1_2 * B1, B1_4 = B1_3 * B1, B1_5 = B1_4 * B1;
  const double B1_6 = B1_5 * B1, B1_7 = B1_6 * B1, B1_8 = B1_7 * B1;
  XiValues x;
  x.xi1 = -(B1_2 + 2 * B2) / (2 * B1);

  const double d2 = 3 * (B1_2 + 2 * B1 + 2 * B2) * (2 * B1_2 - 3 * B1 + 3 * B2);
  x.xi2 = std::abs(d2) < kDegenerateTol
              ? nan
              : (B1_3 - B1_2 * B2 + 18 * B2 * B2 - 18 * B1 * B3) / d2;

  const double num3 =
      -9 * B1_8 + 30 * B1_7 - B1_6 * (66 * B2 - 5) + 2 * B1_5 * (85 * B2 - 63) +
      4 * B1_3 * (5 * B2 * (11 * B2 - 18 * B3 - 9) + 27 * B3) +
      4 * B1_2 * (B2 * B2 * B2 - 36 * B2 * B2 - 81 * B3 * B3 + 45 * B2 * B3 + 162 * (B2 - 1) * B4) -
      144 * B1 * (5 * B2 - 9) * B2 * B3 + 324 * B2 * (-2 * B3 * B3 + B2 * ((B2 - 2) * B2 + 2 * B4)) +
      18 * B1_4 * (9 * B4 + 5 * B3 + 6) - 5 * B1_4 * B2 * (35 * B2 - 2);
  const double f1 = 3 * B1_4 + 2 * B1_3 + 18 * B2 * B2 + B1_2 * (10 * B2 - 9) - 9 * B1 * B3;
  const double f2 = B1 * (3 * B1_2 + B1 + 11 * B2 - 9) + 9 * B3;
  const double d3 = 8 * f1 * f2;
  x.xi3 = std::abs(d3) < kDegenerateTol ? nan : num3 / d3;
  return x;
}

struct ProofTrace {
  double xi1 = 0.0, xi2 = 0.0, xi3 = 0.0;
  double u1 = 0.0, u2 = 0.0, u3 = 0.0;
  double gamma1 = 0.0, gamma2 = 0.0, gamma3 = 0.0;
  double sigma = 0.0;  // NaN when sigma^2 is negative or undefined
  double b1 = 0.0, b2 = 2.0, b3 = 0.0, b4 = 2.0;
  cplx I_value{};
  cplx A4_value{};
  double residual = 0.0;

  std::array<bool, 3> xi_in_disk{};
  bool sigma_in_range = false;
  bool degenerate = false;

  [[nodiscard]] bool certified() const {
    return !degenerate && xi_in_disk[0] && xi_in_disk[1] && xi_in_disk[2] && sigma_in_range;
  }
};

/// Rebuilds the certificate I = A4 for given p1..p4.
///
/// h has real Schur parameters xi_i, q is (1 + 2 sigma z + z^2)/(1 - z^2), and
/// A4 is the z^4 coefficient of sum (-1)^{n+1} gamma_{n-1} G^n with
/// 1 + G = 1 + (1/2) sum b_n p_n z^n.
inline ProofTrace proof_trace(const PhiSpec& phi, cplx p1, cplx p2, cplx p3, cplx p4) {
  ProofTrace t;
  const XiValues x = xi_values(phi);
  t.xi1 = x.xi1;
  t.xi2 = x.xi2;
  t.xi3 = x.xi3;
  t.degenerate = std::isnan(x.xi2) || std::isnan(x.xi3);
  t.xi_in_disk = {std::abs(t.xi1) < 1.0, std::abs(t.xi2) < 1.0, std::abs(t.xi3) < 1.0};

  const double s1 = 1.0 - t.xi1 * t.xi1;
  const double s2 = 1.0 - t.xi2 * t.xi2;
  t.u1 = 2 * t.xi1;
  t.u2 = 2 * t.xi1 * t.xi1 + 2 * s1 * t.xi2;
  t.u3 = 2 * t.xi1 * t.xi1 * t.xi1 + 4 * s1 * t.xi1 * t.xi2 - 2 * s1 * t.xi1 * t.xi2 * t.xi2 +
         2 * s1 * s2 * t.xi3;

  t.gamma1 = 0.5 * (1 + 0.5 * t.u1);
  t.gamma2 = 0.25 * (1 + t.u1 + 0.5 * t.u2);
  t.gamma3 = 0.125 * (1 + 1.5 * t.u1 + 1.5 * t.u2 + 0.5 * t.u3);

  const auto [num, den] = detail::sigma_squared_parts(phi.B1(), phi.B2());
  const double rho = std::abs(den) < kDegenerateTol ? std::numeric_limits<double>::quiet_NaN()
                                                    : num / den;
  t.degenerate = t.degenerate || std::isnan(rho);
  t.sigma = rho >= 0.0 ? std::sqrt(rho) : std::numeric_limits<double>::quiet_NaN();
  t.sigma_in_range = t.sigma > 0.0 && t.sigma < 1.0;

  t.b1 = t.b3 = 2 * t.sigma;
  t.b2 = t.b4 = 2.0;

  t.I_value = i_functional(i_coefficients(phi), p1, p2, p3, p4);
  const double gamma0 = 1.0;
  t.A4_value = 0.5 * gamma0 * t.b4 * p4 - 0.25 * t.gamma1 * t.b2 * t.b2 * p2 * p2 -
               0.5 * t.gamma1 * t.b1 * t.b3 * p1 * p3 +
               0.375 * t.gamma2 * t.b1 * t.b1 * t.b2 * p1 * p1 * p2 -
               0.0625 * t.gamma3 * t.b1 * t.b1 * t.b1 * t.b1 * p1 * p1 * p1 * p1;
  t.residual = std::abs(t.I_value - t.A4_value);
  return t;
}

/// Closed forms of gamma1..gamma3 in terms of B, as displayed alongside the
/// u-chain. Used as an independent check of proof_trace.
inline std::array<double, 3> gamma_closed_form(const PhiSpec& phi) {
  const double B1 = phi.B1(), B2 = phi.B2(), B3 = phi.B3(), B4 = phi.B4();
  const double B1_2 = B1 * B1, B1_3 = B1_2 * B1, B1_4 = B1_3 * B1;
  const double k = 2 * B1_2 + 3 * B2 - 3 * B1;
  const double e = B1_2 + 2 * B2 - 2 * B1;
  const double g1 = 0.25 * (2 - B1 - 2 * B2 / B1);
  const double g2 = e * (3 * B1_3 - 11 * B1_2 + B1 * (11 * B2 + 9) + 9 * (B3 - 2 * B2)) / (24 * B1 * k);
  const double g3 = -(3 * e * e *
                      (B1_4 - 6 * B1_3 + B1_2 * (6 * B2 + 11) + B1 * (8 * B3 - 22 * B2 - 6) +
                       3 * (B2 * B2 + 6 * B2 - 6 * B3 + 2 * B4))) /
                    (64 * B1 * k * k);
  return {g1, g2, g3};
}

}  // namespace minda

#endif  // MINDA_CONDITIONS_HPP
