// minda: command-line front end for the fifth-coefficient toolkit.
//
// Exit codes: 0 ok, 1 bad input, 2 C1-C4 not satisfied, 3 verification anomaly.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "minda/minda.hpp"

namespace {

using minda::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitConditions = 2;
constexpr int kExitAnomaly = 3;

struct RunConfig {
  std::string class_name;
  std::vector<std::string> params;
  std::string b_list;
  std::string spec_path;
  std::string kind = "starlike";
  std::size_t order = minda::kDefaultOrder;
  std::size_t samples = 0;
  std::size_t budget = 10000;
  std::uint64_t seed = 42;
  double tol = 1e-4;
  std::string output = "text";
  std::string out_path;
  std::string zeta;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_reals(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  ss.imbue(std::locale::classic());
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::istringstream is(item);
    is.imbue(std::locale::classic());
    double v = 0.0;
    if (!(is >> v) || !(is >> std::ws).eof()) throw InputError(what + ": cannot parse '" + item + "'");
    out.push_back(v);
  }
  return out;
}

minda::PhiSpec resolve_phi(const RunConfig& cfg) {
  const int sources = static_cast<int>(!cfg.class_name.empty()) + static_cast<int>(!cfg.b_list.empty()) +
                      static_cast<int>(!cfg.spec_path.empty());
  if (sources != 1) throw InputError("give exactly one of --class, --B, --spec");
  try {
    if (!cfg.class_name.empty()) {
      minda::FamilyParams params;
      for (const auto& kv : cfg.params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw InputError("--param expects k=v, got '" + kv + "'");
        const auto v = parse_reals(kv.substr(eq + 1), "--param");
        if (v.size() != 1) throw InputError("--param expects a single value");
        params[kv.substr(0, eq)] = v[0];
      }
      return minda::registry_lookup(cfg.class_name, params);
    }
    if (!cfg.b_list.empty()) {
      const auto b = parse_reals(cfg.b_list, "--B");
      if (b.size() != 4) throw InputError("need four coefficients for --B (B1,B2,B3,B4)");
      return minda::PhiSpec({b[0], b[1], b[2], b[3]});
    }
    return minda::phi_from_file(cfg.spec_path);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

minda::ClassKind resolve_kind(const RunConfig& cfg) {
  try {
    return minda::class_kind_from_string(cfg.kind);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

class Output {
public:
  explicit Output(const RunConfig& cfg) : cfg_(cfg) {}

  [[nodiscard]] bool json_mode() const { return cfg_.output == "json"; }
  [[nodiscard]] bool csv_mode() const { return cfg_.output == "csv"; }

  std::ostream& stream() { return buf_; }

  void emit_json(const json& input, const json& result) {
    json rec;
    rec["input"] = input;
    rec["result"] = result;
    rec["meta"] = {{"version", minda::kVersion}, {"seed", cfg_.seed}, {"order", cfg_.order}};
    buf_ << rec.dump(2) << '\n';
  }

  void flush() {
    if (cfg_.out_path.empty()) {
      std::cout << buf_.str();
      return;
    }
    std::ofstream f(cfg_.out_path);
    if (!f) throw InputError("cannot write '" + cfg_.out_path + "'");
    f << buf_.str();
  }

private:
  const RunConfig& cfg_;
  std::ostringstream buf_;
};

std::string g17(double v) { return minda::format_g17(v); }

std::string fixed(double v, int prec = 12) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(prec) << v;
  return os.str();
}

json phi_input(const minda::PhiSpec& phi, const RunConfig& cfg) {
  json in = minda::phi_to_json(phi);
  in["kind"] = cfg.kind;
  return in;
}

// --- subcommands -----------------------------------------------------------

int cmd_conditions(const RunConfig& cfg) {
  const auto phi = resolve_phi(cfg);
  const auto rep = minda::check_conditions(phi);
  Output out(cfg);
  if (out.json_mode()) {
    out.emit_json(minda::phi_to_json(phi), minda::to_json(rep));
  } else if (out.csv_mode()) {
    out.stream() << "condition,lhs,rhs,margin,holds\n";
    for (std::size_t i = 0; i < 4; ++i) {
      const auto& r = rep[i];
      out.stream() << 'C' << i + 1 << ',' << g17(r.lhs) << ',' << g17(r.rhs) << ',' << g17(r.margin)
                   << ',' << (r.holds ? "true" : "false") << '\n';
    }
  } else {
    for (std::size_t i = 0; i < 4; ++i) {
      const auto& r = rep[i];
      out.stream() << 'C' << i + 1 << "  lhs " << fixed(r.lhs) << "  rhs " << fixed(r.rhs) << "  margin "
                   << fixed(r.margin) << "  " << (r.holds ? "holds" : "FAILS")
                   << (r.degenerate ? " (degenerate)" : "") << '\n';
    }
    out.stream() << (rep.all_hold ? "all conditions hold\n" : "conditions not satisfied\n");
  }
  out.flush();
  return rep.all_hold ? kExitOk : kExitConditions;
}

int cmd_bound(const RunConfig& cfg) {
  const auto phi = resolve_phi(cfg);
  const auto kind = resolve_kind(cfg);
  const auto res = minda::sharp_bound(phi, kind);
  Output out(cfg);
  if (out.json_mode()) {
    out.emit_json(phi_input(phi, cfg), minda::to_json(res));
  } else if (out.csv_mode()) {
    out.stream() << "kind,B1,bound,all_hold\n"
                 << minda::to_string(kind) << ',' << g17(phi.B1()) << ','
                 << (res.bound ? g17(*res.bound) : std::string("")) << ','
                 << (res.conditions.all_hold ? "true" : "false") << '\n';
  } else if (res.bound) {
    out.stream() << "|a5| <= " << fixed(*res.bound) << "  (" << minda::to_string(kind) << ", B1 = "
                 << fixed(phi.B1()) << ")\n";
  } else {
    out.stream() << "no bound: " << res.status << '\n';
  }
  out.flush();
  return res.bound ? kExitOk : kExitConditions;
}

int cmd_extremal(const RunConfig& cfg) {
  const auto phi = resolve_phi(cfg);
  const auto kind = resolve_kind(cfg);
  minda::TruncatedSeries h;
  try {
    h = kind == minda::ClassKind::starlike ? minda::extremal_starlike(phi, cfg.order)
                                           : minda::extremal_convex(phi, cfg.order);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  std::vector<double> coeffs;
  for (const auto& c : h.coeffs()) coeffs.push_back(c.real());
  Output out(cfg);
  if (out.json_mode()) {
    out.emit_json(phi_input(phi, cfg), {{"coeffs", coeffs}});
  } else if (out.csv_mode()) {
    out.stream() << "n,a_n\n";
    for (std::size_t n = 1; n < coeffs.size(); ++n) out.stream() << n << ',' << g17(coeffs[n]) << '\n';
  } else {
    for (std::size_t n = 1; n < coeffs.size(); ++n) {
      out.stream() << "a" << n << " = " << fixed(coeffs[n]) << '\n';
    }
  }
  out.flush();
  return kExitOk;
}

minda::SchurParams resolve_zeta(const RunConfig& cfg) {
  if (cfg.zeta.empty()) return minda::SchurParams{0.0, 0.0, 0.0, 1.0};
  const auto v = parse_reals(cfg.zeta, "--zeta");
  if (v.size() % 2 != 0 || v.empty()) throw InputError("--zeta expects re,im pairs");
  std::vector<minda::cplx> z;
  for (std::size_t i = 0; i < v.size(); i += 2) z.emplace_back(v[i], v[i + 1]);
  try {
    return minda::SchurParams(std::move(z));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

int cmd_trace(const RunConfig& cfg) {
  const auto phi = resolve_phi(cfg);
  const auto params = resolve_zeta(cfg);
  const auto p = minda::caratheodory_from_schwarz(minda::schur_to_schwarz(params, 4));
  const auto t = minda::proof_trace(phi, p[1], p[2], p[3], p[4]);
  Output out(cfg);
  if (out.json_mode()) {
    json in = minda::phi_to_json(phi);
    in["zeta"] = minda::to_json(params);
    json res = minda::to_json(t);
    res["p"] = {minda::complex_to_json(p[1]), minda::complex_to_json(p[2]), minda::complex_to_json(p[3]),
                minda::complex_to_json(p[4])};
    out.emit_json(in, res);
  } else if (out.csv_mode()) {
    out.stream() << "quantity,value\n";
    const std::vector<std::pair<std::string, double>> rows = {
        {"xi1", t.xi1},       {"xi2", t.xi2},       {"xi3", t.xi3},       {"u1", t.u1},
        {"u2", t.u2},         {"u3", t.u3},         {"gamma1", t.gamma1}, {"gamma2", t.gamma2},
        {"gamma3", t.gamma3}, {"sigma", t.sigma},   {"b1", t.b1},         {"b2", t.b2},
        {"b3", t.b3},         {"b4", t.b4},         {"I_re", t.I_value.real()},
        {"I_im", t.I_value.imag()},                 {"A4_re", t.A4_value.real()},
        {"A4_im", t.A4_value.imag()},               {"residual", t.residual}};
    for (const auto& [k, v] : rows) out.stream() << k << ',' << g17(v) << '\n';
  } else {
    out.stream() << "xi    = " << fixed(t.xi1) << ", " << fixed(t.xi2) << ", " << fixed(t.xi3) << '\n'
                 << "u     = " << fixed(t.u1) << ", " << fixed(t.u2) << ", " << fixed(t.u3) << '\n'
                 << "gamma = 1, " << fixed(t.gamma1) << ", " << fixed(t.gamma2) << ", " << fixed(t.gamma3) << '\n'
                 << "sigma = " << fixed(t.sigma) << '\n'
                 << "b     = " << fixed(t.b1) << ", " << fixed(t.b2) << ", " << fixed(t.b3) << ", "
                 << fixed(t.b4) << '\n'
                 << "I     = " << fixed(t.I_value.real()) << " + " << fixed(t.I_value.imag()) << "i\n"
                 << "A4    = " << fixed(t.A4_value.real()) << " + " << fixed(t.A4_value.imag()) << "i\n"
                 << "|I - A4| = " << fixed(t.residual, 3) << '\n'
                 << (t.certified() ? "certificate valid\n" : "certificate invalid: conditions not satisfied\n");
  }
  out.flush();
  if (!t.certified()) return kExitConditions;
  return t.residual < 1e-10 ? kExitOk : kExitAnomaly;
}

int cmd_verify(const RunConfig& cfg) {
  const auto phi = resolve_phi(cfg);
  const auto kind = resolve_kind(cfg);
  const auto cond = minda::check_conditions(phi);
  const std::size_t samples = cfg.samples == 0 ? 100000 : cfg.samples;
  minda::SearchResult search;
  try {
    search = minda::max_a5_search(phi, kind, cfg.budget, cfg.seed);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const auto mc = minda::monte_carlo_check(phi, kind, samples, cfg.seed);
  const double bound = kind == minda::ClassKind::starlike ? phi.B1() / 4.0 : phi.B1() / 20.0;
  const bool anomaly = mc.violations > 0 || std::abs(search.best_value - bound) > 1e-5;

  Output out(cfg);
  if (out.json_mode()) {
    json res;
    res["bound"] = bound;
    res["conditions"] = minda::to_json(cond);
    res["search"] = minda::to_json(search);
    res["monte_carlo"] = minda::to_json(mc);
    res["anomaly"] = anomaly;
    out.emit_json(phi_input(phi, cfg), res);
  } else if (out.csv_mode()) {
    out.stream() << "bound,best_value,evaluations,mc_samples,mc_max,violations,all_hold\n"
                 << g17(bound) << ',' << g17(search.best_value) << ',' << search.evaluations << ','
                 << mc.n_samples << ',' << g17(mc.max_abs_a5) << ',' << mc.violations << ','
                 << (cond.all_hold ? "true" : "false") << '\n';
  } else {
    if (!cond.all_hold) out.stream() << "warning: conditions C1-C4 not satisfied\n";
    out.stream() << "bound            " << fixed(bound) << '\n'
                 << "search best      " << fixed(search.best_value) << "  (" << search.evaluations
                 << " evaluations)\n"
                 << "monte carlo max  " << fixed(mc.max_abs_a5) << "  (" << mc.n_samples << " samples, "
                 << mc.violations << " violations)\n";
  }
  out.flush();
  if (!cond.all_hold) return kExitConditions;
  return anomaly ? kExitAnomaly : kExitOk;
}

int cmd_threshold(const RunConfig& cfg) {
  minda::ThresholdResult r;
  try {
    r = minda::delta_threshold(cfg.tol);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  } catch (const std::runtime_error& e) {
    std::cerr << "minda: " << e.what() << '\n';
    return kExitAnomaly;
  }
  Output out(cfg);
  if (out.json_mode()) {
    out.emit_json({{"family", "power-delta"}, {"tol", cfg.tol}}, minda::to_json(r));
  } else if (out.csv_mode()) {
    out.stream() << "delta,min_margin,all_hold\n";
    for (std::size_t i = 0; i < r.margin_samples.size(); ++i) {
      out.stream() << g17(r.margin_samples[i].first) << ',' << g17(r.margin_samples[i].second) << ','
                   << (r.all_hold_samples[i] ? "true" : "false") << '\n';
    }
  } else {
    out.stream() << "delta0 = " << fixed(r.delta0, 8) << "  bracket [" << fixed(r.bracket.first, 10) << ", "
                 << fixed(r.bracket.second, 10) << "]\n";
  }
  out.flush();
  return kExitOk;
}

int cmd_classes(const RunConfig& cfg) {
  const auto rows = minda::bound_table();
  auto label = [](const minda::BoundTableRow& r) {
    std::string s = r.name;
    for (const auto& [k, v] : r.params) s += ", " + k + "=" + fixed(v, 6);
    return s;
  };
  Output out(cfg);
  if (out.json_mode()) {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"name", r.name},
                     {"params", r.params},
                     {"B1", r.B1},
                     {"conditions_pass", r.conditions_pass},
                     {"starlike_bound", r.starlike_bound ? json(*r.starlike_bound) : json(nullptr)},
                     {"convex_bound", r.convex_bound ? json(*r.convex_bound) : json(nullptr)}});
    }
    out.emit_json(json::object(), arr);
  } else if (out.csv_mode()) {
    out.stream() << "class,B1,conditions_pass,starlike_bound,convex_bound\n";
    for (const auto& r : rows) {
      out.stream() << '"' << label(r) << "\"," << g17(r.B1) << ',' << (r.conditions_pass ? "true" : "false")
                   << ',' << (r.starlike_bound ? g17(*r.starlike_bound) : "") << ','
                   << (r.convex_bound ? g17(*r.convex_bound) : "") << '\n';
    }
  } else {
    for (const auto& r : rows) {
      out.stream() << std::left << std::setw(24) << label(r) << " B1 " << std::setw(14) << fixed(r.B1, 10);
      if (r.conditions_pass) {
        out.stream() << " starlike " << std::setw(14) << fixed(*r.starlike_bound, 10) << " convex "
                     << fixed(*r.convex_bound, 10) << '\n';
      } else {
        out.stream() << " conditions fail\n";
      }
    }
  }
  out.flush();
  return kExitOk;
}

int cmd_boundary(const RunConfig& cfg) {
  const auto phi = resolve_phi(cfg);
  if (!phi.has_generator()) throw InputError("boundary needs a closed-form class (--class)");
  if (cfg.samples == 0) throw InputError("--samples must be positive");
  constexpr double kRadius = 1.0 - 1e-6;
  const auto jet = phi.jet(cfg.order);
  Output out(cfg);
  out.stream() << "theta,re,im\n";
  for (std::size_t k = 0; k < cfg.samples; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(cfg.samples);
    const auto w = minda::eval(jet, std::polar(kRadius, theta));
    out.stream() << g17(theta) << ',' << g17(w.real()) << ',' << g17(w.imag()) << '\n';
  }
  out.flush();
  return kExitOk;
}

void add_phi_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--class", cfg.class_name, "Named class (see `classes`)");
  sub->add_option("--param", cfg.params, "Family parameter k=v, e.g. b=0.5");
  sub->add_option("--B", cfg.b_list, "Coefficients B1,B2,B3,B4");
  sub->add_option("--spec", cfg.spec_path, "Phi spec JSON file");
}

void add_output_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--output", cfg.output, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out", cfg.out_path, "Write output to PATH");
  sub->add_option("--seed", cfg.seed, "Random seed");
  sub->add_option("--order", cfg.order, "Truncation order of series jets");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sharp fifth-coefficient bounds for Ma-Minda starlike and convex classes"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* conditions = app.add_subcommand("conditions", "Check C1-C4 on phi");
  add_phi_options(conditions, cfg);
  add_output_options(conditions, cfg);

  auto* bound = app.add_subcommand("bound", "Sharp bound on |a5|");
  add_phi_options(bound, cfg);
  add_output_options(bound, cfg);
  bound->add_option("--kind", cfg.kind, "starlike|convex");

  auto* extremal = app.add_subcommand("extremal", "Coefficients of the extremal function");
  add_phi_options(extremal, cfg);
  add_output_options(extremal, cfg);
  extremal->add_option("--kind", cfg.kind, "starlike|convex");

  auto* trace = app.add_subcommand("trace", "Certificate quantities xi, u, gamma, sigma, b, I, A4");
  add_phi_options(trace, cfg);
  add_output_options(trace, cfg);
  trace->add_option("--zeta", cfg.zeta, "Schur parameters as re,im pairs (default 0,0,0,0,0,0,1,0)");

  auto* verify = app.add_subcommand("verify", "Search and Monte Carlo check of the bound");
  add_phi_options(verify, cfg);
  add_output_options(verify, cfg);
  verify->add_option("--kind", cfg.kind, "starlike|convex");
  verify->add_option("--budget", cfg.budget, "Objective evaluations for the search");
  verify->add_option("--samples", cfg.samples, "Monte Carlo samples (default 100000)");

  auto* threshold = app.add_subcommand("threshold", "Largest delta for ((1+z)/(1-z))^delta under C1-C4");
  add_output_options(threshold, cfg);
  threshold->add_option("--tol", cfg.tol, "Bisection tolerance");

  auto* classes = app.add_subcommand("classes", "Bound table for the named classes");
  add_output_options(classes, cfg);

  auto* boundary = app.add_subcommand("boundary", "CSV of phi on |z| = 1 - 1e-6");
  add_phi_options(boundary, cfg);
  boundary->add_option("--samples", cfg.samples, "Number of angles")->required();
  boundary->add_option("--order", cfg.order, "Truncation order of the phi jet");
  boundary->add_option("--out", cfg.out_path, "Write output to PATH");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*conditions) return cmd_conditions(cfg);
    if (*bound) return cmd_bound(cfg);
    if (*extremal) return cmd_extremal(cfg);
    if (*trace) return cmd_trace(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*threshold) return cmd_threshold(cfg);
    if (*classes) return cmd_classes(cfg);
    if (*boundary) return cmd_boundary(cfg);
  } catch (const InputError& e) {
    std::cerr << "minda: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "minda: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
