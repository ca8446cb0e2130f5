// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance               run every criterion
//   acceptance --criterion N run criterion N only
//
// Exit status is 0 only when every selected criterion passes.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "minda/minda.hpp"
#include "oracles.hpp"

namespace {

using minda::ClassKind;
using minda::cplx;
using minda::PhiSpec;
using minda::TruncatedSeries;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failed checks; the first few messages end up in the report line.
class Checker {
public:
  void require(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) msgs_ << (failures_ > 1 ? "; " : "") << what;
  }
  void note(const std::string& s) { notes_ << (notes_.tellp() > 0 ? ", " : "") << s; }
  [[nodiscard]] Outcome outcome() const {
    Outcome o;
    o.pass = failures_ == 0;
    o.detail = o.pass ? notes_.str() : std::to_string(failures_) + " failed check(s): " + msgs_.str();
    return o;
  }

private:
  int failures_ = 0;
  std::ostringstream msgs_;
  std::ostringstream notes_;
};

std::string num(double v, int prec = 10) {
  std::ostringstream os;
  os.precision(prec);
  os << v;
  return os.str();
}

struct NamedClass {
  std::string label;
  PhiSpec phi;
  std::function<cplx(cplx)> closed;
  double expected_starlike;
};

std::vector<NamedClass> named_classes() {
  const double s2 = std::numbers::sqrt2;
  return {
      {"sin", minda::registry_lookup("sin"), [](cplx z) { return 1.0 + std::sin(z); }, 0.25},
      {"SG", minda::registry_lookup("sigmoid-SG"), [](cplx z) { return 2.0 / (1.0 + std::exp(-z)); }, 0.125},
      {"sqrt(1+z)", minda::registry_lookup("sokol-L"), [](cplx z) { return std::sqrt(1.0 + z); }, 0.125},
      {"q_b(0.5)", minda::registry_lookup("q_b", {{"b", 0.5}}), [](cplx z) { return std::sqrt(1.0 + 0.5 * z); },
       0.0625},
      {"RL", minda::registry_lookup("RL"),
       [s2](cplx z) { return s2 - (s2 - 1.0) * std::sqrt((1.0 - z) / (1.0 + 2.0 * (s2 - 1.0) * z)); },
       (5.0 - 3.0 * s2) / 8.0},
  };
}

Outcome criterion1() {
  Checker ck;
  for (const auto& c : named_classes()) {
    const double b1_oracle = oracle::cauchy_coeffs(c.closed, 1)[1].real();
    ck.require(std::abs(c.phi.B1() - b1_oracle) <= 1e-12, c.label + ": B1 differs from contour value");
    const auto r = minda::sharp_bound(c.phi, ClassKind::starlike);
    ck.require(r.conditions.all_hold, c.label + ": C1-C4 fail");
    ck.require(r.bound.has_value() && std::abs(*r.bound - c.phi.B1() / 4.0) <= 1e-12,
               c.label + ": bound != B1/4");
    ck.require(r.bound.has_value() && std::abs(*r.bound - c.expected_starlike) <= 1e-12,
               c.label + ": bound != expected " + num(c.expected_starlike));
    if (r.bound) ck.note(c.label + " " + num(*r.bound));
  }
  return ck.outcome();
}

Outcome criterion2() {
  Checker ck;
  for (const auto& c : named_classes()) {
    const auto r = minda::sharp_bound(c.phi, ClassKind::convex);
    ck.require(r.conditions.all_hold, c.label + ": C1-C4 fail");
    ck.require(r.bound.has_value() && std::abs(*r.bound - c.phi.B1() / 20.0) <= 1e-12,
               c.label + ": bound != B1/20");
    const auto hc = minda::extremal_convex(c.phi, 9);
    const auto hs = minda::extremal_starlike(c.phi, 9);
    ck.require(std::abs(hc[5].real() - c.phi.B1() / 20.0) <= 1e-10, c.label + ": extremal a5 off");
    double worst = 0.0;
    for (std::size_t n = 1; n <= 9; ++n) worst = std::max(worst, std::abs(static_cast<double>(n) * hc[n] - hs[n]));
    ck.require(worst <= 1e-12, c.label + ": Alexander relation off by " + num(worst, 3));
    if (r.bound) ck.note(c.label + " " + num(*r.bound));
  }
  return ck.outcome();
}

Outcome criterion3() {
  Checker ck;
  const auto h = minda::extremal_starlike(minda::registry_lookup("sin"));
  const std::array<std::pair<std::size_t, double>, 5> want{{{2, 0.0}, {3, 0.0}, {4, 0.0}, {5, 0.25}, {9, 1.0 / 32.0}}};
  for (const auto& [n, v] : want) {
    ck.require(std::abs(h[n] - cplx(v)) <= 1e-12, "a" + std::to_string(n) + " = " + num(h[n].real(), 17));
  }
  ck.note("a5 " + num(h[5].real(), 17) + ", a9 " + num(h[9].real(), 17));
  return ck.outcome();
}

Outcome criterion4() {
  Checker ck;
  for (const auto& c : named_classes()) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = minda::max_a5_search(c.phi, ClassKind::starlike, 10000, 42);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double gap = std::abs(r.best_value - c.phi.B1() / 4.0);
    ck.require(gap <= 1e-6, c.label + ": |best - B1/4| = " + num(gap, 3));
    ck.require(secs < 30.0, c.label + ": took " + num(secs, 3) + " s");
    ck.note(c.label + " gap " + num(gap, 2));
  }
  return ck.outcome();
}

Outcome criterion5() {
  Checker ck;
  for (const auto& c : named_classes()) {
    for (auto kind : {ClassKind::starlike, ClassKind::convex}) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto r = minda::monte_carlo_check(c.phi, kind, 100000, 42);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      const std::string tag = c.label + "/" + std::string(minda::to_string(kind));
      ck.require(r.violations == 0, tag + ": " + std::to_string(r.violations) + " violations");
      ck.require(secs < 60.0, tag + ": took " + num(secs, 3) + " s");
    }
  }
  ck.note("10 runs of 1e5 samples, 0 violations");
  return ck.outcome();
}

Outcome criterion6() {
  Checker ck;
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = minda::delta_threshold(1e-4);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ck.require(std::abs(r.delta0 - 0.350162) <= 2e-4,
             "delta0 = " + num(r.delta0, 8) + ", expected 0.350162 +- 2e-4");
  ck.require(secs < 10.0, "took " + num(secs, 3) + " s");
  ck.note("delta0 " + num(r.delta0, 8));
  return ck.outcome();
}

Outcome criterion7() {
  Checker ck;
  std::mt19937_64 rng(7);
  double worst_res = 0.0, worst_i = 0.0;
  for (const auto& c : named_classes()) {
    for (int k = 0; k < 500; ++k) {
      // Every fifth jet has a unimodular last parameter.
      auto params = oracle::random_params(rng, 4, 1.0);
      if (k % 5 == 4) {
        auto z = params.zetas();
        z[3] = std::polar(1.0, std::arg(z[3]));
        params = minda::SchurParams(z);
      }
      const auto p = minda::caratheodory_from_schwarz(minda::schur_to_schwarz(params, 4));
      const auto t = minda::proof_trace(c.phi, p[1], p[2], p[3], p[4]);
      worst_res = std::max(worst_res, t.residual);
      worst_i = std::max(worst_i, std::abs(t.I_value));
      ck.require(t.certified(), c.label + ": certificate not valid");
    }
  }
  ck.require(worst_res < 1e-10, "max |I - A4| = " + num(worst_res, 3));
  ck.require(worst_i <= 2.0 + 1e-9, "max |I| = " + num(worst_i, 17));
  ck.note("max |I - A4| " + num(worst_res, 3) + ", max |I| " + num(worst_i, 12));
  return ck.outcome();
}

Outcome criterion8() {
  Checker ck;
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> b1(0.05, 2.0), bk(-1.5, 1.5);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const PhiSpec phi({b1(rng), bk(rng), bk(rng), bk(rng)});
    const auto params = oracle::random_params(rng, 4, 1.0);
    const auto p = minda::caratheodory_from_schwarz(minda::schur_to_schwarz(params, 4));
    for (auto kind : {ClassKind::starlike, ClassKind::convex}) {
      const cplx a = minda::a5_from_schur(phi, params, kind);
      const cplx b = minda::a5_closed_form(phi, p[1], p[2], p[3], p[4], kind);
      worst = std::max(worst, std::abs(a - b));
    }
  }
  ck.require(worst <= 1e-10, "a5 mismatch " + num(worst, 3));

  // 10^4-point grid over (B1, B2, B3, B4).
  std::size_t compared = 0, mismatches = 0;
  auto axis = [](std::size_t i, double lo, double hi) { return lo + (hi - lo) * (static_cast<double>(i) + 0.5) / 10.0; };
  for (std::size_t i1 = 0; i1 < 10; ++i1) {
    for (std::size_t i2 = 0; i2 < 10; ++i2) {
      for (std::size_t i3 = 0; i3 < 10; ++i3) {
        for (std::size_t i4 = 0; i4 < 10; ++i4) {
          const double B1 = axis(i1, 0.0, 2.0), B2 = axis(i2, -1.5, 1.5);
          const double B3 = axis(i3, -1.5, 1.5), B4 = axis(i4, -1.5, 1.5);
          const PhiSpec phi({B1, B2, B3, B4});
          const auto rep = minda::check_conditions(phi);
          const auto x = minda::xi_values(phi);
          auto cmp = [&](bool a, bool b) {
            ++compared;
            if (a != b) ++mismatches;
          };
          cmp(rep[0].holds, std::abs(x.xi1) < 1.0);
          const double d2 = 3 * (B1 * B1 + 2 * B1 + 2 * B2) * (2 * B1 * B1 - 3 * B1 + 3 * B2);
          if (std::abs(d2) > 1e-10) cmp(rep[1].holds, std::abs(x.xi2) < 1.0);
          if (std::abs(minda::detail::c3_rhs_poly(B1, B2, B3, B4)) > 1e-10) {
            cmp(rep[2].holds, std::abs(x.xi3) < 1.0);
          }
          const auto parts = minda::detail::sigma_squared_parts(B1, B2);
          if (std::abs(parts.den) > 1e-10) {
            const double rho = parts.num / parts.den;
            const double sigma = rho >= 0.0 ? std::sqrt(rho) : std::nan("");
            cmp(rep[3].holds, sigma > 0.0 && sigma < 1.0);
          }
        }
      }
    }
  }
  ck.require(mismatches == 0, std::to_string(mismatches) + " flag mismatches on the B-grid");
  ck.note("max a5 diff " + num(worst, 3) + ", " + std::to_string(compared) + " flag comparisons");
  return ck.outcome();
}

Outcome criterion9() {
  Checker ck;
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0), ang(0.0, 2.0 * std::numbers::pi);
  auto rand_series = [&](std::size_t n, bool zero_c0) {
    TruncatedSeries s(n);
    for (std::size_t k = 0; k <= n; ++k) s[k] = cplx(u(rng), u(rng));
    if (zero_c0) s[0] = 0.0;
    return s;
  };

  double ring = 0.0, divinv = 0.0, assoc = 0.0, explog = 0.0, powlaw = 0.0;
  for (int k = 0; k < 200; ++k) {
    const auto a = rand_series(12, false), b = rand_series(12, false), c = rand_series(12, false);
    ring = std::max({ring, (a * b).max_abs_diff(b * a), ((a * b) * c).max_abs_diff(a * (b * c)),
                     (a * (b + c)).max_abs_diff(a * b + a * c)});
    auto d = b;
    d[0] = std::polar(0.1 + 0.9 * std::abs(u(rng)), ang(rng));
    const auto quot = a / d;
    double qscale = 1.0;
    for (const auto& x : quot.coeffs()) qscale = std::max(qscale, std::abs(x));
    divinv = std::max(divinv, (d * quot).max_abs_diff(a) / qscale);
    const auto p = rand_series(12, true), q = rand_series(12, true);
    assoc = std::max(assoc, minda::compose(minda::compose(a, p), q).max_abs_diff(minda::compose(a, minda::compose(p, q))));
    explog = std::max(explog, minda::log_series(minda::exp_series(p)).max_abs_diff(p));
    auto e = a;
    e[0] = 0.5 + std::abs(u(rng));
    const double s = 2.0 * u(rng), t = 2.0 * u(rng);
    const auto lhs = minda::pow_real(e, s + t);
    double scale = 1.0;
    for (const auto& x : lhs.coeffs()) scale = std::max(scale, std::abs(x));
    powlaw = std::max(powlaw, lhs.max_abs_diff(minda::pow_real(e, s) * minda::pow_real(e, t)) / scale);
  }
  ck.require(ring < 1e-12, "ring laws " + num(ring, 3));
  ck.require(divinv < 1e-12, "division inverse (relative) " + num(divinv, 3));
  ck.require(assoc < 1e-10, "compose associativity " + num(assoc, 3));
  ck.require(explog < 1e-10, "exp/log inversion " + num(explog, 3));
  ck.require(powlaw < 1e-10, "pow exponent law " + num(powlaw, 3));

  double roundtrip = 0.0, triple = 0.0, max_mod = 0.0, hadamard = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 1000; ++k) {
    const auto z = oracle::random_params(rng, 3, 1.0);
    const auto p = minda::caratheodory_from_schwarz(minda::schur_to_schwarz(z, 3));
    const auto t = minda::p_triple_closed_form(z[0], z[1], z[2]);
    triple = std::max({triple, std::abs(t.p1 - p[1]), std::abs(t.p2 - p[2]), std::abs(t.p3 - p[3])});
  }
  for (int k = 0; k < 100; ++k) {
    const auto z = oracle::random_params(rng, 4, 0.95);
    const auto back = minda::schwarz_to_schur(minda::schur_to_schwarz(z, 4), 4);
    for (std::size_t i = 0; i < 4; ++i) {
      roundtrip = std::max(roundtrip, i < back.size() ? std::abs(back[i] - z[i]) : 1.0);
    }
  }
  for (int k = 0; k < 10; ++k) {
    const auto w = minda::schur_to_schwarz(oracle::random_params(rng, 4, 0.95), 2000);
    for (std::size_t j = 0; j < 720; ++j) {
      const double th = 2.0 * std::numbers::pi * static_cast<double>(j) / 720.0;
      max_mod = std::max(max_mod, std::abs(minda::eval(w, std::polar(0.99, th))));
    }
    const auto p = minda::caratheodory_from_schwarz(minda::schur_to_schwarz(oracle::random_params(rng, 4, 0.95), 1000));
    const auto q = minda::caratheodory_from_schwarz(minda::schur_to_schwarz(oracle::random_params(rng, 4, 0.95), 1000));
    hadamard = std::min(hadamard, minda::herglotz_margin(minda::half_hadamard(p, q), 0.95, 720));
  }
  double ml = std::numeric_limits<double>::infinity();
  for (double sigma : {-0.9, -0.5, 0.0, 0.5, 0.9}) {
    ml = std::min(ml, minda::herglotz_margin(minda::lemma_ml_series(sigma, 4000), 0.99, 720));
  }
  ck.require(roundtrip < 1e-9, "Schur round trip " + num(roundtrip, 3));
  ck.require(triple < 1e-12, "p-triple closed form " + num(triple, 3));
  ck.require(max_mod < 1.0, "max |w| on r = 0.99 is " + num(max_mod, 12));
  ck.require(ml > 0.0, "Herglotz margin of F " + num(ml, 3));
  ck.require(hadamard > -1e-9, "half-Hadamard margin " + num(hadamard, 3));

  ck.note("ring " + num(ring, 2) + ", compose " + num(assoc, 2) + ", round trip " + num(roundtrip, 2) +
          ", triple " + num(triple, 2) + ", max|w| " + num(max_mod, 6) + ", F margin " + num(ml, 3) +
          ", Hadamard margin " + num(hadamard, 3));
  return ck.outcome();
}

struct Criterion {
  int id;
  const char* title;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "starlike bounds for the named classes", criterion1},
    {2, "convex bounds, extremal a5, Alexander relation", criterion2},
    {3, "extremal function of the sine class", criterion3},
    {4, "sharpness by search", criterion4},
    {5, "Monte Carlo non-violation", criterion5},
    {6, "power-family threshold delta0", criterion6},
    {7, "I = A4 and |I| <= 2 on random jets", criterion7},
    {8, "closed form vs subordination, condition flags vs xi/sigma", criterion8},
    {9, "series and Schwarz property suites", criterion9},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc == 3 && std::string(argv[1]) == "--criterion") {
    only = std::atoi(argv[2]);
    if (only < 1 || only > 9) {
      std::fprintf(stderr, "acceptance: criterion must be 1..9\n");
      return 2;
    }
  } else if (argc != 1) {
    std::fprintf(stderr, "usage: acceptance [--criterion N]\n");
    return 2;
  }

  int failed = 0;
  for (const auto& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] criterion %d: %s (%.2f s) -- %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs,
                o.detail.c_str());
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
