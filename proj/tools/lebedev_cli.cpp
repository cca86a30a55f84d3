// Command line front end: kernels, transforms, round trips, wedge grids and verification suites.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lebedev/bvp.hpp"
#include "lebedev/errors.hpp"
#include "lebedev/kernel.hpp"
#include "lebedev/registry.hpp"
#include "lebedev/transforms.hpp"
#include "lebedev/verify.hpp"

using namespace lebedev;
using Json = nlohmann::ordered_json;

namespace {

// nlohmann writes the shortest round-trip form; floats here are always %.17g
void emit(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += Json(it.key()).dump();
        out += ':';
        emit(it.value(), out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        emit(j[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
      } else {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out += buf;
      }
      break;
    }
    default:
      out += j.dump();
  }
}

void print(const Json& j) {
  std::string s;
  emit(j, s);
  std::cout << s << '\n';
}

Json cjson(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json rjson(const EvalResult& r) {
  Json j;
  j["value"] = cjson(r.value);
  j["err_estimate"] = r.err_estimate;
  j["nodes"] = r.nodes_used;
  j["T"] = r.truncation_T_used;
  j["route"] = r.route;
  return j;
}

// values without a quadrature error of their own carry a rounding-level estimate
EvalResult closed(Complex v, const std::string& route) {
  EvalResult r;
  r.value = v;
  r.err_estimate = 64.0 * std::numeric_limits<double>::epsilon() * std::abs(v);
  r.route = route;
  return r;
}

struct Common {
  double mu = 0.0;
  double mu_re = std::nan("");
  double mu_im = 0.0;
  double nu = std::nan("");
  std::string config;
  double rel_tol = std::nan(""), abs_tol = std::nan(""), truncation_T = std::nan("");
  long max_nodes = 0;
};

struct Diag {
  long nodes = 0;
  double T = 0.0;
  double err = 0.0;
  std::vector<std::string> warnings;
  void take(const EvalResult& r) {
    nodes += r.nodes_used;
    T = std::max(T, r.truncation_T_used);
    err = std::max(err, r.err_estimate);
    for (const auto& w : r.warnings) warnings.push_back(w);
  }
  Json json() const {
    Json j{{"nodes", nodes}, {"T", T}, {"err", err}};
    j["warnings"] = warnings;
    return j;
  }
};

Complex mu_of(const Common& c) { return Complex(std::isnan(c.mu_re) ? c.mu : c.mu_re, c.mu_im); }

TransformParams params_of(const Common& c) {
  const Complex mu = mu_of(c);
  if (!(mu.real() < 0.5)) throw PreconditionError("requires Re mu < 1/2");
  TransformParams p = std::isnan(c.nu) ? TransformParams::make(mu) : TransformParams::make(mu, c.nu);
  std::string path = c.config;
  if (path.empty())
    if (const char* env = std::getenv("LEBEDEV_CONFIG")) path = env;
  if (!path.empty())
    for (const auto& k : apply_config_file(path, p.quad))
      std::cerr << "config: ignored key " << k << '\n';
  if (!std::isnan(c.rel_tol)) p.quad.rel_tol = c.rel_tol;
  if (!std::isnan(c.abs_tol)) p.quad.abs_tol = c.abs_tol;
  if (!std::isnan(c.truncation_T)) p.quad.truncation_T = c.truncation_T;
  if (c.max_nodes > 0) p.quad.max_nodes = c.max_nodes;
  p.quad.validate();
  return p;
}

Json params_json(const TransformParams& p) {
  Json j;
  j["mu"] = cjson(p.mu);
  j["nu"] = p.nu;
  j["quad"] = Json{{"rel_tol", p.quad.rel_tol},
                   {"abs_tol", p.quad.abs_tol},
                   {"max_nodes", p.quad.max_nodes},
                   {"truncation_T", p.quad.truncation_T}};
  return j;
}

Json envelope(const std::string& cmd, const Json& params, const Json& results, const Diag& d) {
  for (const auto& w : d.warnings) std::cerr << "warning: " << w << '\n';
  Json j;
  j["command"] = cmd;
  j["params"] = params;
  j["results"] = results;
  j["diagnostics"] = d.json();
  return j;
}

KernelRoute route_of(const std::string& s) {
  if (s == "auto") return KernelRoute::Auto;
  if (s == "legendre") return KernelRoute::Legendre;
  if (s == "contour") return KernelRoute::Contour;
  throw PreconditionError("route must be auto, legendre or contour");
}

// spectral function by name, or forward:NAME for the forward image of a test function
SpectralFunction spectral_of(const std::string& name, const TransformParams& p) {
  if (name.rfind("forward:", 0) == 0)
    return forward_image(p, make_test_function(name.substr(8), p.mu));
  return make_spectral_function(name);
}

double aux_nu(Complex mu) { return 0.5 * (-0.25 + std::min(0.0, -mu.real())); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Index transforms with squared associated Legendre kernels"};
  app.require_subcommand(1);
  Common c;
  auto common = [&](CLI::App* s) {
    s->add_option("--mu", c.mu, "real order mu");
    s->add_option("--mu-re", c.mu_re, "real part of mu");
    s->add_option("--mu-im", c.mu_im, "imaginary part of mu");
    s->add_option("--nu", c.nu, "contour abscissa (default: middle of the kernel strip)");
    s->add_option("--config", c.config, "key=value tolerance file (fallback: LEBEDEV_CONFIG)");
    s->add_option("--rel-tol", c.rel_tol);
    s->add_option("--abs-tol", c.abs_tol);
    s->add_option("--max-nodes", c.max_nodes);
    s->add_option("--truncation-T", c.truncation_T);
  };

  double tau = 1.0, x = 1.0, beta = 0.7, tau_max = 0.0;
  std::vector<double> taus{1.0}, xs{1.0}, rs{1.0}, thetas{0.0};
  std::string route = "all", fname = "exp", gname = "gauss-even", Fname = "barnes-image:1,1.5";
  std::string kind = "phi", suite = "all", grid = "small", format = "json", kroute = "auto";
  bool exploratory = false, residual = false, boundary = false;

  auto* kern = app.add_subcommand("kernel", "evaluate Phi or S at one point");
  common(kern);
  kern->add_option("--tau", tau);
  kern->add_option("--x", x);
  kern->add_option("--kernel", kind)->check(CLI::IsMember({"phi", "s"}));
  kern->add_option("--route", route)
      ->check(CLI::IsMember({"direct", "mb", "fourier", "legendre", "contour", "all"}));
  kern->add_flag("--exploratory", exploratory, "allow the cosine route for x < 1");

  auto* fwd = app.add_subcommand("forward", "forward transform of a test function");
  common(fwd);
  fwd->add_option("--f", fname, "test function name");
  fwd->add_option("--tau", taus)->delimiter(',');
  fwd->add_option("--route", route)->check(CLI::IsMember({"direct", "mellin", "bessel", "all"}));

  auto* adj = app.add_subcommand("adjoint", "adjoint transform of a spectral function");
  common(adj);
  adj->add_option("--g", gname);
  adj->add_option("--x", xs)->delimiter(',');

  auto* ivf = app.add_subcommand("invert-forward", "inversion of the forward transform");
  common(ivf);
  ivf->add_option("--F", Fname, "spectral function, or forward:NAME");
  ivf->add_option("--x", xs)->delimiter(',');
  ivf->add_option("--route", kroute)->check(CLI::IsMember({"auto", "legendre", "contour"}));
  ivf->add_option("--tau-max", tau_max);

  auto* iva = app.add_subcommand("invert-adjoint", "inversion of the adjoint transform of g");
  common(iva);
  iva->add_option("--g", gname);
  iva->add_option("--x", xs)->delimiter(',');
  iva->add_option("--route", kroute)->check(CLI::IsMember({"auto", "legendre", "contour"}));

  auto* rt = app.add_subcommand("roundtrip", "transform followed by its inversion");
  common(rt);
  std::string rkind = "f";
  rt->add_option("--kind", rkind)->check(CLI::IsMember({"f", "g"}));
  rt->add_option("--f", fname);
  rt->add_option("--g", gname);
  rt->add_option("--x", xs)->delimiter(',');
  rt->add_option("--route", kroute)->check(CLI::IsMember({"auto", "legendre", "contour"}));

  auto* bvp = app.add_subcommand("bvp", "wedge solution grid (CSV) or boundary check (JSON)");
  common(bvp);
  bvp->add_option("--g", gname);
  bvp->add_option("--beta", beta);
  bvp->add_option("--r", rs)->delimiter(',');
  bvp->add_option("--theta", thetas)->delimiter(',');
  bvp->add_flag("--residual", residual, "add the polar PDE residual column");
  bvp->add_flag("--boundary", boundary, "report solve_wedge(r, 0) against the adjoint transform");

  auto* ver = app.add_subcommand("verify", "run verification suites");
  common(ver);
  ver->add_option("--suite", suite);
  ver->add_option("--grid", grid)->check(CLI::IsMember({"small", "full"}));
  ver->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::string cmd = app.get_subcommands().front()->get_name();
  try {
    const TransformParams p = params_of(c);
    Diag d;
    Json params = params_json(p);
    Json results = Json::array();

    if (cmd == "kernel") {
      params["tau"] = tau;
      params["x"] = x;
      params["kernel"] = kind;
      params["route"] = route;
      const KernelPoint k{tau, x};
      std::map<std::string, EvalResult> vals;
      if (kind == "phi") {
        if (route == "direct" || route == "all") vals["direct"] = closed(phi_direct(p, k), "direct");
        if (route == "mb" || route == "all") vals["mb"] = phi_mellin_barnes(p, k);
        if ((route == "fourier" || route == "all") && (x >= 1.0 || exploratory || route == "fourier"))
          vals["fourier"] = phi_fourier_cosine(p, k, exploratory);
        if (route == "all" && x < 1.0 && !exploratory)
          d.warnings.push_back("fourier route skipped for x < 1 (use --exploratory)");
      } else {
        if (route == "legendre" || route == "all") {
          std::vector<std::string> w;
          vals["legendre"] = closed(s_kernel(p, k, &w), "legendre");
          vals["legendre"].warnings = w;
        }
        if (route == "contour" || route == "all") {
          TransformParams ps = p;
          if (std::isnan(c.nu)) ps.nu = s_contour_nu(p);
          vals["contour"] = s_kernel_contour(ps, k);
        }
      }
      for (const auto& [name, r] : vals) {
        d.take(r);
        Json j = rjson(r);
        j["route"] = name;
        results.push_back(j);
      }
      if (vals.size() > 1) {
        Json deltas;
        for (auto a = vals.begin(); a != vals.end(); ++a)
          for (auto b = std::next(a); b != vals.end(); ++b)
            deltas[a->first + "-" + b->first] = std::abs(a->second.value - b->second.value);
        Json j;
        j["deltas"] = deltas;
        results.push_back(j);
      }
    } else if (cmd == "forward") {
      params["f"] = fname;
      params["tau"] = taus;
      params["route"] = route;
      const TestFunction f = make_test_function(fname, p.mu);
      const TransformParams pa = TransformParams::make(p.mu, aux_nu(p.mu));
      std::map<double, Complex> memo;
      auto phi = [&](double y) {
        auto it = memo.find(y);
        if (it != memo.end()) return it->second;
        return memo[y] = phi_aux(pa, f, y).value;
      };
      for (double t : taus) {
        Json row{{"tau", t}};
        if (route == "direct" || route == "all") {
          auto r = forward(p, f, t);
          d.take(r);
          row["direct"] = rjson(r);
        }
        if (route == "mellin" || route == "all") {
          auto r = forward_via_mellin(p, f, t);
          d.take(r);
          row["mellin"] = rjson(r);
        }
        if (route == "bessel" || route == "all") {
          auto r = forward_via_bessel(p, phi, t);
          d.take(r);
          row["bessel"] = rjson(r);
        }
        results.push_back(row);
      }
    } else if (cmd == "adjoint") {
      params["g"] = gname;
      params["x"] = xs;
      const SpectralFunction g = make_spectral_function(gname);
      for (double xv : xs) {
        auto r = adjoint(p, g, xv);
        d.take(r);
        Json row{{"x", xv}};
        row["result"] = rjson(r);
        results.push_back(row);
      }
    } else if (cmd == "invert-forward") {
      params["F"] = Fname;
      params["x"] = xs;
      params["route"] = kroute;
      InvertForwardOptions opt;
      opt.route = route_of(kroute);
      opt.tau_max = tau_max;
      const ForwardInverter inv(p, spectral_of(Fname, p), opt);
      const auto out = inv.evaluate(xs);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        d.take(out[i]);
        Json row{{"x", xs[i]}};
        row["result"] = rjson(out[i]);
        results.push_back(row);
      }
    } else if (cmd == "invert-adjoint") {
      params["g"] = gname;
      params["x"] = xs;
      params["route"] = kroute;
      InvertAdjointOptions opt;
      opt.route = route_of(kroute);
      const AdjointInverter inv(p, adjoint_image(p, make_spectral_function(gname)), opt);
      for (double xv : xs) {
        auto r = inv(xv);
        d.take(r);
        Json row{{"x", xv}};
        row["result"] = rjson(r);
        results.push_back(row);
      }
    } else if (cmd == "roundtrip") {
      params["kind"] = rkind;
      params["x"] = xs;
      params["route"] = kroute;
      std::vector<EvalResult> got;
      std::vector<Complex> want;
      if (rkind == "f") {
        params["f"] = fname;
        const TestFunction f = make_test_function(fname, p.mu);
        InvertForwardOptions opt;
        opt.route = route_of(kroute);
        got = ForwardInverter(p, forward_image(p, f), opt).evaluate(xs);
        for (double xv : xs) want.push_back(f.eval(xv));
      } else {
        params["g"] = gname;
        const SpectralFunction g = make_spectral_function(gname);
        InvertAdjointOptions opt;
        opt.route = route_of(kroute);
        const AdjointInverter inv(p, adjoint_image(p, g), opt);
        for (double xv : xs) {
          got.push_back(inv(xv));
          want.push_back(g.eval(xv));
        }
      }
      double num = 0.0, den = 0.0;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        d.take(got[i]);
        Json row{{"x", xs[i]}};
        row["original"] = cjson(want[i]);
        row["recovered"] = rjson(got[i]);
        row["rel_error"] = std::abs(got[i].value - want[i]) / std::max(std::abs(want[i]), 1e-300);
        results.push_back(row);
        num += std::norm(got[i].value - want[i]);
        den += std::norm(want[i]);
      }
      results.push_back(Json{{"rel_l2_error", den > 0.0 ? std::sqrt(num / den) : std::sqrt(num)}});
    } else if (cmd == "bvp") {
      const WedgeProblem prob{p.mu, beta, make_spectral_function(gname)};
      prob.validate();
      if (boundary) {
        params["g"] = gname;
        params["beta"] = beta;
        params["r"] = rs;
        const BoundaryReport rep = boundary_check(prob, rs);
        for (std::size_t i = 0; i < rep.r.size(); ++i) {
          Json row{{"r", rep.r[i]}};
          row["wedge"] = cjson(rep.wedge[i]);
          row["adjoint"] = cjson(rep.adjoint[i]);
          results.push_back(row);
        }
        results.push_back(Json{{"max_rel_dev", rep.max_rel_dev}});
        d.err = rep.max_rel_dev;
      } else {
        write_csv(field_grid(prob, rs, thetas, residual), std::cout);
        return 0;
      }
    } else if (cmd == "verify") {
      params["suite"] = suite;
      params["grid"] = grid;
      std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
      bool all = true;
      for (const auto& n : names) {
        const SuiteReport r = run_suite(n, grid, p.quad);
        all = all && r.pass();
        if (format == "table") {
          std::printf("== %s (%s) %s %.1fs\n", n.c_str(), grid.c_str(), r.pass() ? "PASS" : "FAIL",
                      r.seconds);
          for (const auto& row : r.rows)
            std::printf("  %-4s %-56s %.3e (tol %.1e)\n", row.pass ? "ok" : "FAIL", row.label.c_str(),
                        row.value, row.tol);
          continue;
        }
        Json sj{{"suite", n}, {"pass", r.pass()}};
        Json rows = Json::array();
        for (const auto& row : r.rows)
          rows.push_back(Json{{"label", row.label}, {"value", row.value}, {"tol", row.tol}, {"pass", row.pass}});
        sj["rows"] = rows;
        results.push_back(sj);
      }
      if (format == "json") print(envelope(cmd, params, results, d));
      return all ? 0 : 1;
    }
    print(envelope(cmd, params, results, d));
    return 0;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    print(Json{{"command", cmd}, {"error", Json{{"type", "usage"}, {"message", e.what()}}}});
    return 2;
  } catch (const NumericalFailure& e) {
    print(Json{{"command", cmd}, {"error", Json{{"type", "numerical"}, {"message", e.what()}}}});
    return 1;
  }
}
