#include "lebedev/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>

#include "lebedev/bvp.hpp"
#include "lebedev/errors.hpp"
#include "lebedev/kernel.hpp"
#include "lebedev/registry.hpp"
#include "lebedev/transforms.hpp"

namespace lebedev {

namespace {

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

void add(SuiteReport& r, std::string label, double value, double tol) {
  r.rows.push_back({std::move(label), value, tol, std::isfinite(value) && value <= tol});
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

const std::vector<Complex>& kernel_mus() {
  static const std::vector<Complex> m = {0.0, -0.3, -0.49, Complex(-0.5, 0.2)};
  return m;
}

TransformParams with_quad(TransformParams p, const QuadratureSpec& q) {
  p.quad = q;
  return p;
}

void suite_routes(SuiteReport& r, bool full, const QuadratureSpec& q) {
  const std::vector<double> taus = full ? std::vector<double>{0, 0.5, 1, 2, 5}
                                        : std::vector<double>{0, 1, 5};
  const std::vector<double> xs = full ? std::vector<double>{1, 1.5, 3, 10}
                                      : std::vector<double>{1, 3};
  for (Complex mu : kernel_mus()) {
    const TransformParams p = with_quad(TransformParams::make(mu), q);
    const double tol = mu.imag() == 0.0 ? 1e-8 : 1e-6;
    for (double t : taus)
      for (double x : xs) {
        const Complex d = phi_direct(p, {t, x});
        const Complex m = phi_mellin_barnes(p, {t, x}).value;
        const Complex c = phi_fourier_cosine(p, {t, x}).value;
        const double dev = std::max(std::abs(d - m), std::abs(d - c)) / (1.0 + std::abs(d));
        add(r, fmt("kernel mu=%g%+gi tau=%g x=%g", mu.real(), mu.imag(), t, x), dev, tol);
      }
  }
  // forward transform by direct quadrature, through the Mellin transform, and through phi
  const Complex mu = -0.3;
  const TransformParams p = with_quad(TransformParams::make(mu), q);
  const TransformParams pa = with_quad(TransformParams::make(mu, -0.1), q);
  const std::vector<double> ft = full ? std::vector<double>{0.5, 1, 2} : std::vector<double>{1};
  for (const char* name : {"exp", "exp-pow:0.3"}) {
    const TestFunction f = make_test_function(name, mu);
    std::map<double, Complex> memo;
    auto phi = [&](double x) {
      auto it = memo.find(x);
      if (it != memo.end()) return it->second;
      return memo[x] = phi_aux(pa, f, x).value;
    };
    for (double t : ft) {
      const Complex a = forward(p, f, t).value;
      const Complex b = forward_via_mellin(p, f, t).value;
      const Complex c = forward_via_bessel(p, phi, t).value;
      const double dev = std::max(std::abs(a - b), std::abs(a - c)) / std::max(std::abs(a), 1e-300);
      add(r, std::string("forward ") + name + fmt(" mu=-0.3 tau=%g", t), dev, 1e-6);
    }
  }
}

void suite_ode(SuiteReport& r, bool full, const QuadratureSpec& q) {
  const std::vector<double> taus = full ? std::vector<double>{0, 0.5, 1, 2, 5}
                                        : std::vector<double>{0, 1};
  const std::vector<double> xs = full ? std::vector<double>{1, 1.5, 3, 10}
                                      : std::vector<double>{1, 3};
  for (Complex mu : kernel_mus()) {
    if (!full && mu.imag() != 0.0) continue;
    const TransformParams p = with_quad(TransformParams::make(mu), q);
    for (double t : taus)
      for (double x : xs)
        add(r, fmt("mu=%g%+gi tau=%g x=%g", mu.real(), mu.imag(), t, x),
            ode_residual(p, {t, x}), 1e-7);
  }
}

void suite_pde(SuiteReport& r, bool full) {
  const std::vector<double> rs = full ? std::vector<double>{0.3, 1, 2, 3} : std::vector<double>{0.3, 3};
  const std::vector<double> ths = full ? std::vector<double>{0, 0.2, 0.4, 0.6}
                                       : std::vector<double>{0, 0.6};
  const std::vector<double> mus = full ? std::vector<double>{-0.5, -0.2} : std::vector<double>{-0.5};
  for (double mu : mus) {
    const WedgeProblem prob{mu, 0.7, make_spectral_function("gauss-even")};
    for (double rr : rs)
      for (double th : ths) {
        const PolarStack s = polar_stack(prob, rr, th);
        add(r, fmt("polar mu=%g r=%g theta=%g", mu, rr, th), pde_residual_polar_of(s, mu, rr), 1e-5);
        const double x = rr * std::cos(th), y = rr * std::sin(th);
        add(r, fmt("cartesian mu=%g x=%.4g y=%.4g", mu, x, y),
            pde_residual_cartesian_of(to_cartesian(s, x, y), mu, x, y), 1e-4);
      }
    add(r, fmt("boundary mu=%g", mu), boundary_check(prob, {0.5, 1, 2}).max_rel_dev, 1e-10);
  }
}

void suite_parseval(SuiteReport& r, const QuadratureSpec& q) {
  VerticalLineOptions sym;
  sym.conjugate_symmetric = true;
  for (double a : {0.0, 0.3}) {
    // f = e^{-x}, g = x^a e^{-x}: f*(s) g*(1 - s) = Gamma(s) Gamma(1 + a - s)
    const Complex lhs =
        integrate_half_line([a](double x) { return Complex(std::pow(x, a) * std::exp(-2.0 * x)); }, q)
            .value;
    const Complex rhs = integrate_vertical_line(
                            [a](Complex s) { return gamma(s) * gamma(1.0 + a - s); }, 0.5, q, sym)
                            .value;
    add(r, fmt("parseval e^{-x}, x^%g e^{-x}", a), rel(lhs, rhs), 1e-8);
  }
  const TestFunction e = make_test_function("exp"), h = make_test_function("one-over-1px");
  add(r, "mellin e^{-x} at s=2", rel(mellin_transform_numeric(e, 2.0, q), 1.0), 1e-8);
  add(r, "mellin e^{-x} at s=1/2", rel(mellin_transform_numeric(e, 0.5, q), kSqrtPi), 1e-8);
  add(r, "mellin 1/(1+x) at s=1/2", rel(mellin_transform_numeric(h, 0.5, q), kPi), 1e-8);
  add(r, "inverse Gamma at x=1",
      rel(mellin_invert_numeric([](Complex s) { return gamma(s); }, 0.5, 1.0, q, true), std::exp(-1.0)),
      1e-8);
  add(r, "inverse pi/sin at x=2",
      rel(mellin_invert_numeric([](Complex s) { return kPi / sin_pi(s); }, 0.5, 2.0, q, true), 1.0 / 3.0),
      1e-8);
  const TestFunction g = make_test_function("exp-pow:0.3");
  const Complex back = mellin_invert_numeric(
      [&](Complex s) { return mellin_transform_numeric(g, s, q); }, 0.5, 0.7, q, true);
  add(r, "round trip x^0.3 e^{-x} at x=0.7", rel(back, g.eval(0.7)), 1e-8);
}

void suite_bounds(SuiteReport& r, bool full, const QuadratureSpec& q) {
  const std::vector<double> taus = full ? std::vector<double>{0, 0.5, 1, 2, 3, 5, 7, 10}
                                        : std::vector<double>{0, 1, 5, 10};
  for (double mu : {0.0, -0.3}) {
    const TransformParams p = with_quad(TransformParams::make(mu), q);
    const double C = norm_constant(p);
    for (const char* name : {"exp", "smooth-bump"}) {
      const TestFunction f = make_test_function(name, mu);
      const double nf = weighted_norm(f, 1.0 - p.nu, 1.0, q);
      double worst = 0.0;
      for (double t : taus) worst = std::max(worst, std::abs(forward(p, f, t).value) / (C * nf));
      add(r, fmt("forward bound mu=%g ", mu) + name + " (ratio)", worst, 1.0);
    }
    const SpectralFunction g = make_spectral_function("gauss-even");
    const double l1 = 2.0 * integrate_gk([&](double t) { return Complex(std::abs(g.eval(t))); }, 0.0,
                                         g.tau_cut, 1e-12, 1e-15)
                                .value.real();
    double worst = 0.0;
    for (double x : {0.1, 1.0, 10.0})
      worst = std::max(worst, std::pow(x, p.nu) * std::abs(adjoint(p, g, x).value) / (C * l1));
    add(r, fmt("adjoint bound mu=%g gauss-even (ratio)", mu), worst, 1.0);
  }
}

void suite_roundtrip_f(SuiteReport& r, bool full, const QuadratureSpec& q) {
  const int n = full ? 20 : 5;
  std::vector<double> xs;
  for (int i = 0; i < n; ++i) xs.push_back(0.3 + 2.7 * i / (n - 1));
  for (double mu : {0.0, -0.3})
    for (const char* name : {"barnes:1,1.5", "barnes:2,2"}) {
      const TransformParams p = with_quad(TransformParams::make(mu), q);
      const TestFunction f = make_test_function(name, mu);
      const ForwardInverter inv(p, forward_image(p, f));
      const auto got = inv.evaluate(xs);
      double num = 0.0, den = 0.0;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        num += std::norm(got[i].value - f.eval(xs[i]));
        den += std::norm(f.eval(xs[i]));
      }
      add(r, fmt("mu=%g ", mu) + name + " (relative L2 on [0.3, 3])", std::sqrt(num / den), 1e-3);
    }
}

void suite_roundtrip_g(SuiteReport& r, bool full) {
  const SpectralFunction g = make_spectral_function("tau2-gauss");
  const std::vector<double> mus = full ? std::vector<double>{-0.3, 0.0} : std::vector<double>{-0.3};
  for (double mu : mus) {
    const TransformParams p = TransformParams::make(mu);
    const AdjointInverter inv(p, adjoint_image(p, g));
    for (double x : {0.5, 1.0, 2.0})
      add(r, fmt("mu=%g x=%g", mu, x), rel(inv(x).value, g.eval(x)), 1e-3);
  }
}

void suite_identity(SuiteReport& r, bool full, const QuadratureSpec& q) {
  const std::vector<double> mus = full ? std::vector<double>{-0.3, 0.0} : std::vector<double>{-0.3};
  for (double mu : mus)
    for (const char* name : {"gauss-even", "tau2-gauss"}) {
      const TransformParams p = with_quad(TransformParams::make(mu, -0.1), q);
      const SpectralFunction g = make_spectral_function(name);
      for (double y : {0.5, 1.0, 2.0}) {
        const auto [lhs, rhs] = adjoint_mellin_identity(p, g, y);
        add(r, fmt("mu=%g ", mu) + name + fmt(" y=%g", y), rel(lhs, rhs), 1e-7);
      }
    }
}

}  // namespace

bool SuiteReport::pass() const {
  for (const auto& row : rows)
    if (!row.pass) return false;
  return true;
}

std::vector<std::string> suite_names() {
  return {"ode", "pde", "routes", "parseval", "bounds", "roundtrip-f", "roundtrip-g", "identity-3-2"};
}

SuiteReport run_suite(const std::string& suite, const std::string& grid, const QuadratureSpec& quad) {
  if (grid != "small" && grid != "full") throw PreconditionError("grid must be small or full");
  const bool full = grid == "full";
  SuiteReport r;
  r.suite = suite;
  r.grid = grid;
  const auto t0 = std::chrono::steady_clock::now();
  if (suite == "ode") suite_ode(r, full, quad);
  else if (suite == "pde") suite_pde(r, full);
  else if (suite == "routes") suite_routes(r, full, quad);
  else if (suite == "parseval") suite_parseval(r, quad);
  else if (suite == "bounds") suite_bounds(r, full, quad);
  else if (suite == "roundtrip-f") suite_roundtrip_f(r, full, quad);
  else if (suite == "roundtrip-g") suite_roundtrip_g(r, full);
  else if (suite == "identity-3-2") suite_identity(r, full, quad);
  else throw PreconditionError("unknown suite: " + suite);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace lebedev
