#ifndef MINDA_SERIES_HPP
#define MINDA_SERIES_HPP

// Truncated power series over complex<double>.
//
// A TruncatedSeries of order N holds the jet c0 + c1 z + ... + cN z^N. All
// binary operations require equal orders and truncate their result at N.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace minda {

using cplx = std::complex<double>;

/// Default truncation order; a9 of the extremal functions needs N >= 9.
inline constexpr std::size_t kDefaultOrder = 12;

/// Below this modulus a constant term is treated as zero.
inline constexpr double kEpsDiv = 1e-14;

class TruncatedSeries {
public:
  explicit TruncatedSeries(std::size_t order = kDefaultOrder)
      : coeffs_(order + 1, cplx{0.0, 0.0}) {}

  explicit TruncatedSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
      throw std::invalid_argument("TruncatedSeries: need at least one coefficient");
    }
  }

  /// Coefficients c0..ck followed by zeros up to `order`.
  TruncatedSeries(std::initializer_list<cplx> head, std::size_t order)
      : coeffs_(order + 1, cplx{0.0, 0.0}) {
    std::size_t k = 0;
    for (const auto& c : head) {
      if (k > order) break;
      coeffs_[k++] = c;
    }
  }

  static TruncatedSeries constant(cplx c, std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  /// c z^k, truncated (zero if k > order).
  static TruncatedSeries monomial(std::size_t k, std::size_t order, cplx c = 1.0) {
    TruncatedSeries s(order);
    if (k <= order) s.coeffs_[k] = c;
    return s;
  }

  static TruncatedSeries identity(std::size_t order) { return monomial(1, order); }

  [[nodiscard]] std::size_t order() const noexcept { return coeffs_.size() - 1; }
  [[nodiscard]] const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }

  [[nodiscard]] cplx operator[](std::size_t k) const { return coeffs_.at(k); }
  cplx& operator[](std::size_t k) { return coeffs_.at(k); }

  /// Same jet with the order changed; new high coefficients are zero.
  [[nodiscard]] TruncatedSeries with_order(std::size_t order) const {
    std::vector<cplx> c(order + 1, cplx{0.0, 0.0});
    for (std::size_t k = 0; k <= std::min(order, this->order()); ++k) c[k] = coeffs_[k];
    return TruncatedSeries(std::move(c));
  }

  /// Multiply by z, dropping the top coefficient.
  [[nodiscard]] TruncatedSeries shift_up() const {
    TruncatedSeries s(order());
    for (std::size_t k = order(); k >= 1; --k) s.coeffs_[k] = coeffs_[k - 1];
    return s;
  }

  /// Divide by z; the result has order N-1. Requires c0 == 0 (within kEpsDiv).
  [[nodiscard]] TruncatedSeries shift_down() const {
    if (std::abs(coeffs_[0]) > kEpsDiv) {
      throw std::domain_error("shift_down: constant term is not zero");
    }
    if (order() == 0) return TruncatedSeries(std::size_t{0});
    return TruncatedSeries(std::vector<cplx>(coeffs_.begin() + 1, coeffs_.end()));
  }

  [[nodiscard]] double max_abs_diff(const TruncatedSeries& other) const {
    check_same_order(other, "max_abs_diff");
    double m = 0.0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      m = std::max(m, std::abs(coeffs_[k] - other.coeffs_[k]));
    }
    return m;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& b) {
    check_same_order(b, "add");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += b.coeffs_[k];
    return *this;
  }

  TruncatedSeries& operator-=(const TruncatedSeries& b) {
    check_same_order(b, "sub");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= b.coeffs_[k];
    return *this;
  }

  TruncatedSeries& operator*=(cplx s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, cplx s) { return a *= s; }
  friend TruncatedSeries operator*(cplx s, TruncatedSeries a) { return a *= s; }
  friend TruncatedSeries operator-(TruncatedSeries a) { return a *= -1.0; }

  /// Cauchy product truncated at the common order.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_same_order(b, "mul");
    const std::size_t n = a.order();
    TruncatedSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) {
      if (a.coeffs_[i] == cplx{}) continue;
      for (std::size_t j = 0; i + j <= n; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }

  /// Series quotient q with b*q == a up to the common order.
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_same_order(b, "div");
    const cplx b0 = b.coeffs_[0];
    if (std::abs(b0) <= kEpsDiv) {
      throw std::domain_error("div: divisor has a vanishing constant term");
    }
    const std::size_t n = a.order();
    TruncatedSeries q(n);
    for (std::size_t k = 0; k <= n; ++k) {
      cplx acc = a.coeffs_[k];
      for (std::size_t j = 1; j <= k; ++j) acc -= b.coeffs_[j] * q.coeffs_[k - j];
      q.coeffs_[k] = acc / b0;
    }
    return q;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
  void check_same_order(const TruncatedSeries& b, const char* op) const {
    if (order() != b.order()) {
      throw std::invalid_argument(std::string(op) + ": order mismatch (" +
                                  std::to_string(order()) + " vs " +
                                  std::to_string(b.order()) + ")");
    }
  }

  std::vector<cplx> coeffs_;
};

inline TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
inline TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }
inline TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) { return a / b; }

/// Jet of outer(inner(z)) by Horner's scheme in the series ring.
inline TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (outer.order() != inner.order()) {
    throw std::invalid_argument("compose: order mismatch");
  }
  if (std::abs(inner[0]) > kEpsDiv) {
    throw std::domain_error("compose: inner series must vanish at 0");
  }
  const std::size_t n = outer.order();
  TruncatedSeries acc = TruncatedSeries::constant(outer[n], n);
  for (std::size_t k = n; k-- > 0;) {
    acc = acc * inner;
    acc[0] += outer[k];
  }
  return acc;
}

/// exp(a), from E' = a' E.
inline TruncatedSeries exp_series(const TruncatedSeries& a) {
  const std::size_t n = a.order();
  TruncatedSeries e(n);
  e[0] = std::exp(a[0]);
  for (std::size_t m = 1; m <= n; ++m) {
    cplx acc{};
    for (std::size_t k = 1; k <= m; ++k) acc += static_cast<double>(k) * a[k] * e[m - k];
    e[m] = acc / static_cast<double>(m);
  }
  return e;
}

namespace detail {
inline void require_positive_constant(const TruncatedSeries& a, const char* op) {
  const cplx a0 = a[0];
  if (!(a0.real() > kEpsDiv) || std::abs(a0.imag()) > kEpsDiv) {
    throw std::domain_error(std::string(op) + ": constant term must be real and positive");
  }
}
}  // namespace detail

/// Principal log(a); a0 must be real-positive. From a L' = a'.
inline TruncatedSeries log_series(const TruncatedSeries& a) {
  detail::require_positive_constant(a, "log_series");
  const std::size_t n = a.order();
  const double a0 = a[0].real();
  TruncatedSeries l(n);
  l[0] = std::log(a0);
  for (std::size_t m = 1; m <= n; ++m) {
    cplx acc = static_cast<double>(m) * a[m];
    for (std::size_t k = 1; k < m; ++k) acc -= static_cast<double>(k) * l[k] * a[m - k];
    l[m] = acc / (static_cast<double>(m) * a0);
  }
  return l;
}

/// a^t for real t, principal branch; a0 must be real-positive. From a P' = t a' P.
inline TruncatedSeries pow_real(const TruncatedSeries& a, double t) {
  detail::require_positive_constant(a, "pow_real");
  const std::size_t n = a.order();
  const double a0 = a[0].real();
  TruncatedSeries p(n);
  p[0] = std::pow(a0, t);
  for (std::size_t m = 1; m <= n; ++m) {
    cplx acc{};
    for (std::size_t k = 1; k <= m; ++k) {
      const double w = t * static_cast<double>(k) - static_cast<double>(m - k);
      acc += w * a[k] * p[m - k];
    }
    p[m] = acc / (static_cast<double>(m) * a0);
  }
  return p;
}

/// Termwise derivative; order drops by one (an order-0 series maps to 0).
inline TruncatedSeries derivative(const TruncatedSeries& a) {
  const std::size_t n = a.order();
  if (n == 0) return TruncatedSeries(std::size_t{0});
  TruncatedSeries d(n - 1);
  for (std::size_t k = 1; k <= n; ++k) d[k - 1] = static_cast<double>(k) * a[k];
  return d;
}

/// Antiderivative vanishing at 0; order grows by one.
inline TruncatedSeries integrate_zero(const TruncatedSeries& a) {
  const std::size_t n = a.order();
  TruncatedSeries r(n + 1);
  for (std::size_t k = 0; k <= n; ++k) r[k + 1] = a[k] / static_cast<double>(k + 1);
  return r;
}

/// Horner evaluation of the jet at z.
inline cplx eval(const TruncatedSeries& a, cplx z) {
  cplx acc{};
  for (std::size_t k = a.order() + 1; k-- > 0;) acc = acc * z + a[k];
  return acc;
}

}  // namespace minda

#endif  // MINDA_SERIES_HPP
