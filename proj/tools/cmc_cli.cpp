// Command-line front end: profile tables, curvature grids, verification
// reports, isoperimetric and foliation samples, as CSV or JSON.
//
// Exit codes: 0 pass, 1 verification failure, 2 configuration error,
// 3 domain/signature error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cmc/cmc.hpp"

namespace {

using nlohmann::json;

// All cells preformatted to strings so one writer covers numeric tables and
// the verify report. Doubles use 17 significant digits, '.' separator, '\n'
// endings; output is byte-stable across runs.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct Table {
  std::vector<std::string> cols;
  std::vector<std::vector<std::string>> rows;
  // Printed after the table: stderr note for CSV, extra object for JSON.
  std::vector<std::pair<std::string, std::string>> footers;
};

void write_csv(const Table& t, std::ostream& os) {
  for (std::size_t i = 0; i < t.cols.size(); ++i) {
    os << (i ? "," : "") << t.cols[i];
  }
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << row[i];
    }
    os << '\n';
  }
  for (const auto& [k, v] : t.footers) std::cerr << k << " = " << v << '\n';
}

void write_json(const Table& t, std::ostream& os) {
  json arr = json::array();
  for (const auto& row : t.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < t.cols.size(); ++i) {
      // Numeric cells round-trip through the fixed formatting so both
      // formats show identical digits.
      char* end = nullptr;
      double v = std::strtod(row[i].c_str(), &end);
      if (end && *end == '\0' && end != row[i].c_str()) {
        obj[t.cols[i]] = v;
      } else {
        obj[t.cols[i]] = row[i];
      }
    }
    arr.push_back(obj);
  }
  if (!t.footers.empty()) {
    json obj = json::object();
    for (const auto& [k, v] : t.footers) obj[k] = std::strtod(v.c_str(), nullptr);
    arr.push_back(obj);
  }
  os << arr.dump(2) << '\n';
}

struct RunConfig {
  int m = 2;
  double c = 1.0;
  std::string signature = "riemannian";
  std::string branch = "plus";
  std::string family = "radial";
  std::string mode = "vary-d";
  double r_max = 3.0;
  int steps = 50;
  int grid = 16;
  double fd_step = 0.0;
  double tol = 0.0;
  std::string suite = "all";
  std::string format = "csv";
  std::string out;
};

cmc::Signature parse_signature(const std::string& s) {
  if (s == "riemannian") return cmc::Signature::riemannian;
  if (s == "lorentzian") return cmc::Signature::lorentzian;
  throw cmc::ParamError("unknown signature: " + s);
}

cmc::Branch parse_branch(const std::string& s) {
  if (s == "plus") return cmc::Branch::plus;
  if (s == "minus") return cmc::Branch::minus;
  throw cmc::ParamError("unknown branch: " + s);
}

cmc::ProfileParams make_params(const RunConfig& cfg) {
  cmc::Signature sig = parse_signature(cfg.signature);
  if (sig == cmc::Signature::riemannian && std::fabs(cfg.c) > cfg.m - 1.0) {
    throw cmc::ParamError(
        "riemannian signature requires c in the admissible range [1-m, m-1]; "
        "got c = " + std::to_string(cfg.c) + " with m = " +
        std::to_string(cfg.m));
  }
  return cmc::ProfileParams(cfg.m, cfg.c, sig, parse_branch(cfg.branch));
}

void emit(const Table& t, const RunConfig& cfg) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) throw cmc::ParamError("cannot open output path: " + cfg.out);
    os = &file;
  }
  if (cfg.format == "csv") {
    write_csv(t, *os);
  } else if (cfg.format == "json") {
    write_json(t, *os);
  } else {
    throw cmc::ParamError("unknown format: " + cfg.format);
  }
}

int cmd_profile(const RunConfig& cfg) {
  if (cfg.steps < 1 || cfg.r_max <= 0.0) {
    throw cmc::ParamError("profile: need steps >= 1 and r-max > 0");
  }
  cmc::ProfileParams p = make_params(cfg);
  Table t;
  t.cols = {"r", "I", "u", "w", "phi", "w_prime", "ode_residual"};
  for (int k = 0; k <= cfg.steps; ++k) {
    double r = cfg.r_max * k / cfg.steps;
    if (k == 0) {
      // Limits at the origin: every profile function vanishes and
      // w'(0) = c_eff/m from the series; the ODE holds identically.
      t.rows.push_back({fmt(0.0), fmt(0.0), fmt(0.0), fmt(0.0), fmt(0.0),
                        fmt(p.c_eff() / p.m), fmt(0.0)});
      continue;
    }
    cmc::RadialProfileEval e = cmc::evaluate_profile(p, r);
    t.rows.push_back({fmt(e.r), fmt(e.I), fmt(e.u), fmt(e.w), fmt(e.phi),
                      fmt(e.w_prime), fmt(cmc::ode_residual(p, r))});
  }
  emit(t, cfg);
  return 0;
}

int cmd_curvature(const RunConfig& cfg) {
  if (cfg.steps < 1 || cfg.r_max <= 0.0) {
    throw cmc::ParamError("curvature: need steps >= 1 and r-max > 0");
  }
  cmc::Signature sig = parse_signature(cfg.signature);
  cmc::GraphField f;
  double expected = 0.0;
  bool constant_family = true;
  if (cfg.family == "radial") {
    f = cmc::radial_field(make_params(cfg));
    expected = cfg.c;
  } else if (cfg.family == "slice") {
    f = cmc::slice_field(cfg.m, 0.0, cmc::Base::hyperbolic_ball, sig);
    expected = 0.0;
  } else if (cfg.family == "hyperboloid") {
    if (sig != cmc::Signature::lorentzian) {
      throw cmc::ParamError("hyperboloid family requires lorentzian signature");
    }
    // k = 1 cylinder factor; the scalar is m*c for every k.
    f = cmc::hyperboloid_field(1, cfg.m, cfg.c / cfg.m);
    expected = cfg.c;
  } else if (cfg.family == "exp-demo") {
    f = cmc::exp_demo_field();
    // Forcing the lorentzian signature makes e^x fail the spacelike
    // condition; kept as the documented exit-3 path.
    f.signature = sig;
    constant_family = false;
  } else {
    throw cmc::ParamError("unknown family: " + cfg.family);
  }

  Table t;
  t.cols = {"x1", "grad_norm", "b_eig", "b_grad",
            "mc_scalar", "h_norm", "hess_norm"};
  double max_dev = 0.0;
  for (int k = 1; k <= cfg.steps; ++k) {
    double s = cfg.r_max * k / cfg.steps;
    cmc::Vec x(f.m, 0.0);
    if (f.base == cmc::Base::hyperbolic_ball) {
      // Scan along the first axis at geodesic radius s.
      x[0] = cmc::ball_coordinate_radius(s);
    } else if (f.family == "exp_demo") {
      x[0] = -cfg.r_max + 2.0 * cfg.r_max * (k - 1.0) / (cfg.steps - 1.0);
    } else {
      x[0] = s;
    }
    cmc::CurvatureSample smp = cmc::curvature_sample(f, x, cfg.fd_step);
    t.rows.push_back({fmt(x[0]), fmt(smp.grad_norm), fmt(smp.b_eig),
                      fmt(smp.b_grad), fmt(smp.mc_scalar), fmt(smp.h_norm),
                      fmt(smp.hess_norm)});
    if (constant_family) {
      max_dev = std::max(max_dev, std::fabs(smp.mc_scalar - expected));
    }
  }
  if (constant_family) {
    t.footers.push_back({"max_deviation_from_c", fmt(max_dev)});
  }
  emit(t, cfg);
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  cmc::VerifyConfig vc;
  vc.tol_override = cfg.tol;
  std::vector<cmc::VerificationReport> reports =
      cmc::run_suites(cfg.suite, vc);
  Table t;
  t.cols = {"name", "pass", "max_residual", "tolerance", "samples",
            "c_div", "c_norm"};
  bool all_pass = true;
  for (const auto& r : reports) {
    all_pass = all_pass && r.pass;
    t.rows.push_back({r.name, r.pass ? "1" : "0", fmt(r.max_residual),
                      fmt(r.tolerance), std::to_string(r.samples),
                      fmt(r.c_div), fmt(r.c_norm)});
  }
  RunConfig out_cfg = cfg;
  if (out_cfg.format.empty()) out_cfg.format = "json";
  emit(t, out_cfg);
  return all_pass ? 0 : 1;
}

int cmd_isoperimetric(const RunConfig& cfg) {
  if (cfg.steps < 1 || cfg.r_max <= 0.0) {
    throw cmc::ParamError("isoperimetric: need steps >= 1 and r-max > 0");
  }
  cmc::ProfileParams p = make_params(cfg);
  Table t;
  t.cols = {"R", "lhs", "rhs", "ratio", "slack", "holds"};
  bool all_hold = true;
  for (int k = 1; k <= cfg.steps; ++k) {
    double R = cfg.r_max * k / cfg.steps;
    cmc::IsoperimetricReport rep =
        p.signature == cmc::Signature::riemannian
            ? cmc::ball_bound_check(cfg.m, cfg.c, R)
            : cmc::ball_saturation_check(cfg.m, cfg.c, R);
    all_hold = all_hold && rep.holds;
    t.rows.push_back({fmt(rep.R), fmt(rep.lhs), fmt(rep.rhs), fmt(rep.ratio),
                      fmt(rep.slack), rep.holds ? "1" : "0"});
  }
  emit(t, cfg);
  return all_hold ? 0 : 1;
}

int cmd_foliation(const RunConfig& cfg) {
  if (cfg.grid < 2 || cfg.r_max <= 0.0) {
    throw cmc::ParamError("foliation: need grid >= 2 and r-max > 0");
  }
  cmc::Signature sig = parse_signature(cfg.signature);
  std::vector<double> r_samples;
  cmc::FoliationReport rep;
  if (cfg.mode == "vary-d") {
    for (int k = 0; k < cfg.grid; ++k) {
      r_samples.push_back(cfg.r_max * k / (cfg.grid - 1.0));
    }
    rep = cmc::foliation_vary_d(make_params(cfg),
                                {-1.0, -0.5, 0.0, 0.5, 1.0}, r_samples);
  } else if (cfg.mode == "vary-c") {
    // Leaves all cross at r = 0, so the c-monotonicity claim (and the
    // sampling) starts at r = 0.1.
    double r_lo = 0.1;
    if (cfg.r_max <= r_lo) {
      throw cmc::ParamError("foliation vary-c: need r-max > 0.1");
    }
    for (int k = 0; k < cfg.grid; ++k) {
      r_samples.push_back(r_lo + (cfg.r_max - r_lo) * k / (cfg.grid - 1.0));
    }
    double c_hi = sig == cmc::Signature::riemannian
                      ? 0.9 * (cfg.m - 1.0)
                      : std::fabs(cfg.c);
    if (c_hi == 0.0) c_hi = 1.0;
    std::vector<double> c_grid;
    for (int k = 0; k < 5; ++k) c_grid.push_back(-c_hi + 2.0 * c_hi * k / 4.0);
    rep = cmc::foliation_vary_c(cfg.m, sig, c_grid, r_samples);
  } else {
    throw cmc::ParamError("unknown foliation mode: " + cfg.mode);
  }
  Table t;
  t.cols = {"c", "d", "x", "f"};
  for (const auto& s : rep.samples) {
    t.rows.push_back({fmt(s.c), fmt(s.d), fmt(s.r), fmt(s.value)});
  }
  emit(t, cfg);
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constant-mean-curvature graphs over the hyperbolic ball"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--m", cfg.m, "base dimension (>= 2)");
    sub->add_option("--c", cfg.c, "divergence-form constant c_div");
    sub->add_option("--signature", cfg.signature, "riemannian | lorentzian");
    sub->add_option("--branch", cfg.branch, "plus | minus");
    sub->add_option("--r-max", cfg.r_max, "largest geodesic radius");
    sub->add_option("--steps", cfg.steps, "number of grid intervals");
    sub->add_option("--grid", cfg.grid, "sample-grid resolution");
    sub->add_option("--fd-step", cfg.fd_step, "finite-difference step override");
    sub->add_option("--tol", cfg.tol, "tolerance override");
    sub->add_option("--format", cfg.format, "csv | json");
    sub->add_option("--out", cfg.out, "output path (default stdout)");
  };

  CLI::App* profile = app.add_subcommand("profile", "radial profile table");
  add_common(profile);
  CLI::App* curvature =
      app.add_subcommand("curvature", "mean-curvature samples for a family");
  add_common(curvature);
  curvature->add_option("--family", cfg.family,
                        "radial | hyperboloid | exp-demo | slice");
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify);
  verify->add_option("--suite", cfg.suite,
                     "ode | bounds | curvature | section2 | isoperimetric | "
                     "foliation | all");
  CLI::App* iso =
      app.add_subcommand("isoperimetric", "mean-curvature bound on balls");
  add_common(iso);
  CLI::App* fol = app.add_subcommand("foliation", "foliation leaf samples");
  add_common(fol);
  fol->add_option("--mode", cfg.mode, "vary-d | vary-c");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (profile->parsed()) return cmd_profile(cfg);
    if (curvature->parsed()) return cmd_curvature(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (iso->parsed()) return cmd_isoperimetric(cfg);
    if (fol->parsed()) return cmd_foliation(cfg);
  } catch (const cmc::ParamError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const cmc::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
