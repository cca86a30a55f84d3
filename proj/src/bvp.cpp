#include "lebedev/bvp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "lebedev/errors.hpp"
#include "lebedev/transforms.hpp"

namespace lebedev {

namespace {

const Complex kI(0.0, 1.0);

// Truncated bivariate polynomial sum c[i][j] dx^i dy^j, i + j <= 3.
struct Jet {
  Complex c[4][4]{};

  Jet operator+(const Jet& o) const {
    Jet r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; i + j < 4; ++j) r.c[i][j] = c[i][j] + o.c[i][j];
    return r;
  }
  Jet operator*(const Jet& o) const {
    Jet r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; i + j < 4; ++j)
        for (int k = 0; i + j + k < 4; ++k)
          for (int l = 0; i + j + k + l < 4; ++l) r.c[i + k][j + l] += c[i][j] * o.c[k][l];
    return r;
  }
  Jet operator*(Complex s) const {
    Jet r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; i + j < 4; ++j) r.c[i][j] = c[i][j] * s;
    return r;
  }
  Jet re() const {
    Jet r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; i + j < 4; ++j) r.c[i][j] = c[i][j].real();
    return r;
  }
  Jet im() const {
    Jet r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; i + j < 4; ++j) r.c[i][j] = c[i][j].imag();
    return r;
  }
};

const TauRule& unit_rule() {
  static const TauRule r = composite_gauss_rule(0.0, 1.0, 1.0, 12);
  return r;
}

double max_abs(std::initializer_list<Complex> terms) {
  double m = 0.0;
  for (const Complex& t : terms) m = std::max(m, std::abs(t));
  return m;
}

}  // namespace

void WedgeProblem::validate() const {
  if (!(mu.real() < 0.0)) throw PreconditionError("wedge problem requires Re mu < 0");
  if (!(beta > 0.0 && beta < kPi)) throw PreconditionError("wedge opening beta must lie in (0, pi)");
  if (!g.integrable_with(beta))
    throw GrowthError("wedge problem: " + g.name + " is not declared integrable against e^{beta|tau|}");
}

EvalResult solve_wedge(const WedgeProblem& prob, double r, double theta) {
  prob.validate();
  if (!(r > 0.0)) throw PreconditionError("solve_wedge: r must be > 0");
  if (!(theta >= 0.0 && theta < prob.beta))
    throw PreconditionError("solve_wedge: theta must lie in [0, beta)");
  if (!prob.g.integrable_with(theta))
    throw GrowthError("solve_wedge: e^{theta tau} g(tau) is not integrable");
  EvalResult out;
  out.value = adjoint_fixed(prob.params(), prob.g, r, theta);
  out.route = "fixed-gauss";
  out.truncation_T_used = prob.g.tau_cut;
  return out;
}

PolarStack polar_stack(const WedgeProblem& prob, double r, double theta) {
  prob.validate();
  if (!(r > 0.0)) throw PreconditionError("polar_stack: r must be > 0");
  if (!(theta >= 0.0 && theta < prob.beta))
    throw PreconditionError("polar_stack: theta must lie in [0, beta)");
  const TransformParams p = prob.params();
  const TauRule& unit = unit_rule();
  const double cut = prob.g.tau_cut;
  const int panels = std::max(1, static_cast<int>(std::ceil(cut / 0.5)));
  const double len = cut / panels;
  PolarStack s;
  for (int k = 0; k < panels; ++k) {
    for (std::size_t j = 0; j < unit.nodes.size(); ++j) {
      const double t = (k + unit.nodes[j]) * len;
      const double w = unit.weights[j] * len;
      const Complex gp = std::exp(theta * t) * prob.g.eval(t);
      const Complex gm = std::exp(-theta * t) * prob.g.eval(-t);
      if (gp == 0.0 && gm == 0.0) continue;
      const PhiJet jet = phi_mb_jet(p, {t, r});
      // each theta derivative brings down a factor tau (or -tau on the mirrored half)
      Complex h[4];
      double tb = 1.0;
      for (int b = 0; b < 4; ++b) {
        h[b] = tb * (gp + (b % 2 ? -1.0 : 1.0) * gm);
        tb *= t;
      }
      for (int a = 0; a < 4; ++a)
        for (int b = 0; a + b < 4; ++b) s.d[a][b] += w * jet.d[a] * h[b];
    }
  }
  return s;
}

CartesianStack to_cartesian(const PolarStack& s, double x, double y) {
  const Complex z0(x, y);
  const double r0 = std::abs(z0);
  // q = dz / z0 with dz = dx + i dy
  Jet q;
  q.c[1][0] = 1.0 / z0;
  q.c[0][1] = kI / z0;
  const Jet q2 = q * q, q3 = q2 * q;
  const Jet dl = q + q2 * Complex(-0.5) + q3 * Complex(1.0 / 3.0);
  const Jet drho = dl.re(), dth = dl.im();
  const Jet drho2 = drho * drho;
  const Jet dr = (drho + drho2 * Complex(0.5) + drho2 * drho * Complex(1.0 / 6.0)) * Complex(r0);
  Jet pr[4], pt[4];
  pr[0].c[0][0] = pt[0].c[0][0] = 1.0;
  for (int k = 1; k < 4; ++k) {
    pr[k] = pr[k - 1] * dr;
    pt[k] = pt[k - 1] * dth;
  }
  static constexpr double fact[4] = {1.0, 1.0, 2.0, 6.0};
  Jet u;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; a + b < 4; ++b) u = u + pr[a] * pt[b] * (s.d[a][b] / (fact[a] * fact[b]));
  CartesianStack c;
  c.u = u.c[0][0];
  c.ux = u.c[1][0];
  c.uy = u.c[0][1];
  c.uxx = 2.0 * u.c[2][0];
  c.uxy = u.c[1][1];
  c.uyy = 2.0 * u.c[0][2];
  c.uxxx = 6.0 * u.c[3][0];
  c.uxxy = 2.0 * u.c[2][1];
  c.uxyy = 2.0 * u.c[1][2];
  c.uyyy = 6.0 * u.c[0][3];
  return c;
}

double pde_residual_polar_of(const PolarStack& s, Complex mu, double r, PdeForm form) {
  const auto& d = s.d;
  const double c2 = form == PdeForm::Corrected ? 3.0 * r * (r + 0.5) : 3.0 * (r + 0.5);
  const Complex t[6] = {r * r * (1.0 + r) * d[3][0],
                        d[1][2],
                        c2 * d[2][0],
                        -d[0][2] / (2.0 * r),
                        (r * (1.0 - mu * mu) + 0.25) * d[1][0],
                        -d[0][0] / (8.0 * r)};
  const double scale = max_abs({t[0], t[1], t[2], t[3], t[4], t[5]});
  if (scale == 0.0) return 0.0;
  return std::abs(t[0] + t[1] + t[2] + t[3] + t[4] + t[5]) / scale;
}

double pde_residual_polar(const WedgeProblem& prob, double r, double theta, PdeForm form) {
  return pde_residual_polar_of(polar_stack(prob, r, theta), prob.mu, r, form);
}

double pde_residual_cartesian_of(const CartesianStack& c, Complex mu, double x, double y,
                                 PdeForm form) {
  const double r = std::hypot(x, y);
  const double rr = r * (1.0 + r), x2 = x * x, y2 = y * y;
  Complex cxx, cyy, cxy;
  if (form == PdeForm::Corrected) {
    cxx = 3.0 * x2 + (x2 + 3.0 * y2) / (2.0 * r);
    cyy = 3.0 * y2 + (3.0 * x2 + y2) / (2.0 * r);
    cxy = 6.0 * x * y - 2.0 * x * y / r;
  } else {
    const double k = 3.0 / (2.0 * r) + 2.0;
    cxx = k * (y2 + x2 / r);
    cyy = k * (x2 + y2 / r);
    cxy = (3.0 + r) * x * y / (r * r);
  }
  const Complex t[9] = {x * (rr - y2) * c.uxxx,
                        y * (rr - x2) * c.uyyy,
                        x * (rr - x2 + 2.0 * y2) * c.uxyy,
                        y * (rr - y2 + 2.0 * x2) * c.uxxy,
                        cxx * c.uxx,
                        cyy * c.uyy,
                        cxy * c.uxy,
                        -(mu * mu - 1.0 + 1.0 / (4.0 * r)) * (x * c.ux + y * c.uy),
                        -c.u / (8.0 * r)};
  double scale = 0.0;
  Complex sum = 0.0;
  for (const Complex& v : t) {
    scale = std::max(scale, std::abs(v));
    sum += v;
  }
  if (scale == 0.0) return 0.0;
  return std::abs(sum) / scale;
}

double pde_residual_cartesian(const WedgeProblem& prob, double x, double y, PdeForm form) {
  if (x == 0.0 && y == 0.0) throw PreconditionError("pde_residual_cartesian: (x, y) must be nonzero");
  const double r = std::hypot(x, y), theta = std::atan2(y, x);
  return pde_residual_cartesian_of(to_cartesian(polar_stack(prob, r, theta), x, y), prob.mu, x, y,
                                   form);
}

BoundaryReport boundary_check(const WedgeProblem& prob, const std::vector<double>& r_grid) {
  BoundaryReport rep;
  if (r_grid.empty()) return rep;
  prob.validate();
  const TransformParams p = prob.params();
  for (double r : r_grid) {
    const Complex w = solve_wedge(prob, r, 0.0).value;
    const Complex a = adjoint(p, prob.g, r).value;
    rep.r.push_back(r);
    rep.wedge.push_back(w);
    rep.adjoint.push_back(a);
    const double den = std::max(std::abs(a), 1e-300);
    rep.max_rel_dev = std::max(rep.max_rel_dev, a == 0.0 && w == 0.0 ? 0.0 : std::abs(w - a) / den);
  }
  return rep;
}

FieldGrid field_grid(const WedgeProblem& prob, const std::vector<double>& rs,
                     const std::vector<double>& thetas, bool with_residual) {
  FieldGrid g;
  g.r_values = rs;
  g.theta_values = thetas;
  for (double r : rs) {
    std::vector<Complex> row;
    std::vector<double> res;
    for (double th : thetas) {
      if (with_residual) {
        const PolarStack s = polar_stack(prob, r, th);
        row.push_back(s.d[0][0]);
        res.push_back(pde_residual_polar_of(s, prob.mu, r));
      } else {
        row.push_back(solve_wedge(prob, r, th).value);
      }
    }
    g.u.push_back(std::move(row));
    if (with_residual) g.residual.push_back(std::move(res));
  }
  return g;
}

void write_csv(const FieldGrid& grid, std::ostream& os) {
  os << "r,theta,re_u,im_u,residual\n";
  char buf[160];
  for (std::size_t i = 0; i < grid.r_values.size(); ++i)
    for (std::size_t j = 0; j < grid.theta_values.size(); ++j) {
      const Complex u = grid.u[i][j];
      if (grid.residual.empty())
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,\n", grid.r_values[i],
                      grid.theta_values[j], u.real(), u.imag());
      else
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", grid.r_values[i],
                      grid.theta_values[j], u.real(), u.imag(), grid.residual[i][j]);
      os << buf;
    }
}

}  // namespace lebedev
