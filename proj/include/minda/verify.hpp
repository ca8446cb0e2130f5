#ifndef MINDA_VERIFY_HPP
#define MINDA_VERIFY_HPP

// Numerical checks of the a5 bounds: maximisation of |a5| over Schur-parametrised
// Schwarz functions, seeded Monte Carlo sampling and the delta threshold of the
// power family ((1+z)/(1-z))^delta.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "minda/coefficients.hpp"
#include "minda/conditions.hpp"
#include "minda/phi.hpp"
#include "minda/schwarz.hpp"

namespace minda {

inline constexpr double kViolationTol = 1e-9;
inline constexpr std::size_t kSchurDepth = 4;

/// SplitMix64; one instance per sample, keyed by (seed, index).
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static SplitMix64 for_sample(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mixer(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
    return SplitMix64(mixer.next() ^ index);
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
  std::uint64_t state_;
};

/// Worker count: `requested` if nonzero, else MINDA_THREADS, else hardware concurrency.
inline std::size_t worker_count(std::size_t requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("MINDA_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// ---------------------------------------------------------------------------
// Search

struct SearchResult {
  double best_value = 0.0;
  SchurParams best_params;
  std::size_t evaluations = 0;
  bool converged = false;
};

namespace detail {

using Point = std::array<double, 2 * kSchurDepth>;  // (r1, t1, ..., r4, t4)

inline SchurParams params_from_point(const Point& x) {
  std::vector<cplx> z(kSchurDepth);
  for (std::size_t i = 0; i < kSchurDepth; ++i) {
    z[i] = std::polar(std::clamp(x[2 * i], 0.0, 1.0), x[2 * i + 1]);
  }
  return SchurParams(std::move(z));
}

class Objective {
public:
  Objective(const PhiSpec& phi, ClassKind kind) : phi_(phi), kind_(kind) {}

  double operator()(const Point& x) {
    ++evaluations_;
    return std::abs(a5_from_schur(phi_, params_from_point(x), kind_));
  }

  [[nodiscard]] std::size_t evaluations() const { return evaluations_; }

private:
  const PhiSpec& phi_;
  ClassKind kind_;
  std::size_t evaluations_ = 0;
};

struct Scored {
  Point x;
  double value;
};

// Nelder-Mead maximisation with radii clamped to [0, 1]; returns the best vertex.
inline Scored nelder_mead_max(Objective& f, const Scored& start, std::size_t budget, SplitMix64& rng,
                              bool& converged) {
  constexpr std::size_t n = 2 * kSchurDepth;
  auto clampr = [](Point p) {
    for (std::size_t i = 0; i < kSchurDepth; ++i) p[2 * i] = std::clamp(p[2 * i], 0.0, 1.0);
    return p;
  };

  std::vector<Scored> simplex;
  simplex.reserve(n + 1);
  simplex.push_back(start);
  const std::size_t used0 = f.evaluations();
  for (std::size_t j = 0; j < n && f.evaluations() - used0 < budget; ++j) {
    Point p = start.x;
    const double step = (j % 2 == 0) ? 0.15 : 0.4;
    // Step inward for radii on the boundary so the simplex is not degenerate.
    const double dir = (j % 2 == 0 && p[j] > 0.5) ? -1.0 : 1.0;
    p[j] += dir * step * (0.75 + 0.5 * rng.uniform());
    p = clampr(p);
    simplex.push_back({p, f(p)});
  }
  if (simplex.size() < n + 1) {
    converged = false;
    return *std::max_element(simplex.begin(), simplex.end(),
                             [](const Scored& a, const Scored& b) { return a.value < b.value; });
  }

  auto by_value_desc = [](const Scored& a, const Scored& b) { return a.value > b.value; };
  converged = false;
  while (f.evaluations() - used0 < budget) {
    std::sort(simplex.begin(), simplex.end(), by_value_desc);
    if (simplex.front().value - simplex.back().value < 1e-15) {
      converged = true;
      break;
    }
    Point centroid{};
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i].x[k] / static_cast<double>(n);
    }
    const Scored& worst = simplex.back();
    auto along = [&](double t) {
      Point p;
      for (std::size_t k = 0; k < n; ++k) p[k] = centroid[k] + t * (worst.x[k] - centroid[k]);
      return clampr(p);
    };

    Point xr = along(-1.0);
    const double fr = f(xr);
    if (fr > simplex.front().value) {
      Point xe = along(-2.0);
      const double fe = f(xe);
      simplex.back() = fe > fr ? Scored{xe, fe} : Scored{xr, fr};
    } else if (fr > simplex[n - 1].value) {
      simplex.back() = {xr, fr};
    } else {
      const bool outside = fr > worst.value;
      Point xc = along(outside ? -0.5 : 0.5);
      const double fc = f(xc);
      if (fc > std::max(fr, worst.value)) {
        simplex.back() = {xc, fc};
      } else {
        for (std::size_t i = 1; i <= n && f.evaluations() - used0 < budget; ++i) {
          Point p;
          for (std::size_t k = 0; k < n; ++k) {
            p[k] = simplex[0].x[k] + 0.5 * (simplex[i].x[k] - simplex[0].x[k]);
          }
          p = clampr(p);
          simplex[i] = {p, f(p)};
        }
      }
    }
  }
  return *std::max_element(simplex.begin(), simplex.end(),
                           [](const Scored& a, const Scored& b) { return a.value < b.value; });
}

}  // namespace detail

/// Size of the coarse start grid (3 radii x 3 angles per parameter) plus the pinned start.
inline constexpr std::size_t kSearchGridSize = 6561 + 1;

/// Estimates sup |a5| over the depth-4 Schur family.
///
/// Evaluates the 3^8 coarse grid and the pinned start (0, 0, 0, 1), then refines
/// the best distinct starts with Nelder-Mead until the budget is spent.
inline SearchResult max_a5_search(const PhiSpec& phi, ClassKind kind, std::size_t budget,
                                  std::uint64_t seed) {
  if (budget < kSearchGridSize) {
    throw std::invalid_argument("max_a5_search: budget must be at least " +
                                std::to_string(kSearchGridSize));
  }
  detail::Objective f(phi, kind);
  constexpr std::array<double, 3> radii{0.0, 0.7, 1.0};
  constexpr std::array<double, 3> angles{0.0, 2.0 * std::numbers::pi / 3.0, 4.0 * std::numbers::pi / 3.0};

  std::vector<detail::Scored> scored;
  scored.reserve(kSearchGridSize);
  detail::Point pinned{0, 0, 0, 0, 0, 0, 1, 0};
  scored.push_back({pinned, f(pinned)});
  for (std::size_t code = 0; code < 6561; ++code) {
    detail::Point x{};
    std::size_t c = code;
    for (std::size_t k = 0; k < 2 * kSchurDepth; ++k) {
      const std::size_t digit = c % 3;
      c /= 3;
      x[k] = (k % 2 == 0) ? radii[digit] : angles[digit];
    }
    scored.push_back({x, f(x)});
  }

  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& a, const auto& b) { return a.value > b.value; });

  // Distinct starts by value; duplicates (zero radii with different angles) collapse.
  std::vector<detail::Scored> starts;
  for (const auto& s : scored) {
    bool dup = false;
    for (const auto& t : starts) dup = dup || std::abs(t.value - s.value) < 1e-12;
    if (!dup) starts.push_back(s);
    if (starts.size() == 4) break;
  }

  SplitMix64 rng = SplitMix64::for_sample(seed, 0);
  detail::Scored best = scored.front();
  bool best_converged = true;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    const std::size_t remaining = budget - f.evaluations();
    if (remaining == 0) break;
    const std::size_t share = remaining / (starts.size() - i);
    bool conv = false;
    const detail::Scored local = detail::nelder_mead_max(f, starts[i], share, rng, conv);
    if (local.value > best.value) {
      best = local;
      best_converged = conv;
    }
  }

  SearchResult r;
  r.best_value = best.value;
  r.best_params = detail::params_from_point(best.x);
  r.evaluations = f.evaluations();
  r.converged = best_converged;
  return r;
}

// ---------------------------------------------------------------------------
// Monte Carlo

struct MonteCarloReport {
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
  double bound = 0.0;
  double max_abs_a5 = 0.0;
  std::size_t argmax_index = 0;
  std::size_t violations = 0;
};

struct MonteCarloOptions {
  std::size_t threads = 0;  // 0: worker_count()
  /// Replace sample 0 by the extremal parameters (0, 0, 0, 1).
  bool force_extremal_first = false;
};

/// Sample `index` of the Monte Carlo stream. Radii are area-uniform, angles
/// uniform; every tenth sample (index % 10 == 9) puts zeta4 on the unit circle.
inline SchurParams monte_carlo_sample(std::uint64_t seed, std::size_t index) {
  SplitMix64 rng = SplitMix64::for_sample(seed, index);
  const bool boundary = index % 10 == 9;
  std::vector<cplx> z(kSchurDepth);
  for (std::size_t i = 0; i < kSchurDepth; ++i) {
    double r = std::sqrt(rng.uniform());
    const double t = 2.0 * std::numbers::pi * rng.uniform();
    if (boundary && i + 1 == kSchurDepth) r = 1.0;
    z[i] = std::polar(r, t);
  }
  return SchurParams(std::move(z));
}

/// Counts samples with |a5| > bound + kViolationTol. The bound is B1/4 or
/// B1/20 whether or not C1-C4 hold.
inline MonteCarloReport monte_carlo_check(const PhiSpec& phi, ClassKind kind, std::size_t n,
                                          std::uint64_t seed, MonteCarloOptions opts = {}) {
  if (n == 0) throw std::invalid_argument("monte_carlo_check: need at least one sample");
  const double bound = kind == ClassKind::starlike ? phi.B1() / 4.0 : phi.B1() / 20.0;
  const std::size_t workers = std::min(worker_count(opts.threads), n);

  struct Partial {
    double max_value = -1.0;
    std::size_t argmax = 0;
    std::size_t violations = 0;
  };
  std::vector<Partial> partials(workers);

  auto run = [&](std::size_t w) {
    const std::size_t lo = n * w / workers;
    const std::size_t hi = n * (w + 1) / workers;
    Partial& p = partials[w];
    for (std::size_t i = lo; i < hi; ++i) {
      const SchurParams params = (opts.force_extremal_first && i == 0)
                                     ? SchurParams{0.0, 0.0, 0.0, 1.0}
                                     : monte_carlo_sample(seed, i);
      const double v = std::abs(a5_from_schur(phi, params, kind));
      if (v > p.max_value) {
        p.max_value = v;
        p.argmax = i;
      }
      if (v > bound + kViolationTol) ++p.violations;
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  MonteCarloReport rep;
  rep.n_samples = n;
  rep.seed = seed;
  rep.bound = bound;
  rep.max_abs_a5 = -1.0;
  for (const auto& p : partials) {
    // Ties keep the lowest index, so the reduction is order independent.
    if (p.max_value > rep.max_abs_a5 ||
        (p.max_value == rep.max_abs_a5 && p.argmax < rep.argmax_index)) {
      rep.max_abs_a5 = p.max_value;
      rep.argmax_index = p.argmax;
    }
    rep.violations += p.violations;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Threshold of the power family

struct ThresholdResult {
  double delta0 = 0.0;
  std::pair<double, double> bracket{0.0, 0.0};
  /// (delta, min condition margin) on the scan grid.
  std::vector<std::pair<double, double>> margin_samples;
  /// all_hold on the scan grid, parallel to margin_samples.
  std::vector<bool> all_hold_samples;
};

inline constexpr double kThresholdScanStep = 1e-3;

/// C1-C4 on ((1+z)/(1-z))^delta, B read off the series jet.
inline ConditionReport power_family_conditions(double delta) {
  return check_conditions(registry_lookup("power-delta", {{"delta", delta}}));
}

/// Scans delta over (0, 1] in steps of 1e-3, then bisects the first change of
/// all_hold down to a bracket of width <= tol. delta0 is the bracket midpoint.
inline ThresholdResult delta_threshold(double tol) {
  if (!(tol > 0.0 && tol <= 1e-3)) throw std::invalid_argument("delta_threshold: tol must lie in (0, 1e-3]");
  ThresholdResult r;
  const std::size_t steps = static_cast<std::size_t>(std::llround(1.0 / kThresholdScanStep));
  std::optional<std::size_t> change;
  for (std::size_t k = 1; k <= steps; ++k) {
    const double d = static_cast<double>(k) * kThresholdScanStep;
    const ConditionReport rep = power_family_conditions(d);
    r.margin_samples.emplace_back(d, rep.min_margin());
    r.all_hold_samples.push_back(rep.all_hold);
    if (!change && k > 1 && rep.all_hold != r.all_hold_samples[k - 2]) change = k;
  }
  if (!change) throw std::runtime_error("delta_threshold: no transition of C1-C4 in (0, 1]");

  double lo = static_cast<double>(*change - 1) * kThresholdScanStep;
  double hi = static_cast<double>(*change) * kThresholdScanStep;
  const bool lo_state = r.all_hold_samples[*change - 2];
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (power_family_conditions(mid).all_hold == lo_state) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  r.bracket = {lo, hi};
  r.delta0 = 0.5 * (lo + hi);
  return r;
}

// ---------------------------------------------------------------------------
// Table of named classes

struct BoundTableRow {
  std::string name;
  FamilyParams params;
  double B1 = 0.0;
  bool conditions_pass = false;
  std::optional<double> starlike_bound;
  std::optional<double> convex_bound;
};

inline std::vector<BoundTableRow> bound_table() {
  const std::vector<std::pair<std::string, FamilyParams>> rows = {
      {"sin", {}},
      {"sigmoid-SG", {}},
      {"sokol-L", {}},
      {"q_b", {{"b", 0.5}}},
      {"q_b", {{"b", 1.0}}},
      {"RL", {}},
      {"rho", {}},
      {"order-alpha", {{"alpha", 0.0}}},
      {"order-alpha", {{"alpha", 0.5}}},
      {"power-delta", {{"delta", 0.2}}},
      {"power-delta", {{"delta", 0.35}}},
      {"power-delta", {{"delta", 0.5}}},
  };
  std::vector<BoundTableRow> out;
  out.reserve(rows.size());
  for (const auto& [name, params] : rows) {
    const PhiSpec phi = registry_lookup(name, params);
    BoundTableRow row;
    row.name = name;
    row.params = params;
    row.B1 = phi.B1();
    const BoundResult s = sharp_bound(phi, ClassKind::starlike);
    const BoundResult c = sharp_bound(phi, ClassKind::convex);
    row.conditions_pass = s.conditions.all_hold;
    row.starlike_bound = s.bound;
    row.convex_bound = c.bound;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace minda

#endif  // MINDA_VERIFY_HPP
