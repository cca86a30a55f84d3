#pragma once
// Reference evaluations used by the tests. Everything here is written from
// integral representations and does not call into the library.

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
inline constexpr double pi = 3.14159265358979323846;

struct Rule {
  std::vector<double> x, w;
};

// n-point Gauss-Legendre on [-1, 1] by Newton iteration on P_n.
inline Rule gauss(int n) {
  Rule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(pi * (i + 0.75) / (n + 0.5)), dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    r.x[i] = z;
    r.w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return r;
}

inline const Rule& gauss40() {
  static const Rule r = gauss(40);
  return r;
}

// Composite 40-point Gauss on [a, b] with `panels` equal pieces.
template <class F>
auto integrate(F f, double a, double b, int panels) -> decltype(f(a)) {
  const Rule& g = gauss40();
  decltype(f(a)) sum{};
  const double h = (b - a) / panels;
  for (int k = 0; k < panels; ++k) {
    const double c = a + (k + 0.5) * h;
    for (std::size_t j = 0; j < g.x.size(); ++j) sum += g.w[j] * 0.5 * h * f(c + 0.5 * h * g.x[j]);
  }
  return sum;
}

// Conical function P_{-1/2+i tau}(cosh a) from the Mehler-Dirichlet integral
// (sqrt 2/pi) int_0^a cos(tau t) / sqrt(cosh a - cosh t) dt, with t = a - u^2.
inline double conical_p(double tau, double X) {
  const double a = std::acosh(X);
  const double ua = std::sqrt(a);
  auto f = [&](double u) {
    const double v = u * u;
    const double d = 2.0 * std::sinh(a - 0.5 * v) * std::sinh(0.5 * v);
    if (u == 0.0) return 2.0 / std::sqrt(std::sinh(a));
    return 2.0 * u * std::cos(tau * (a - v)) / std::sqrt(d);
  };
  return std::sqrt(2.0) / pi * integrate(f, 0.0, ua, 8);
}

// Q_{-1/2+i tau}(cosh a) + Q_{-1/2-i tau}(cosh a) from the Heine integral
// 2 int_a^inf cos(tau t) / sqrt(2 cosh t - 2 cosh a) dt, with t = a + v^2.
inline double conical_q_sum(double tau, double X) {
  const double a = std::acosh(X);
  auto f = [&](double v) {
    const double s = v * v;
    const double d = 4.0 * std::sinh(a + 0.5 * s) * std::sinh(0.5 * s);
    if (v == 0.0) return 2.0 / std::sqrt(std::sinh(a));
    return 2.0 * v * std::cos(tau * (a + s)) / std::sqrt(d);
  };
  return 2.0 * integrate(f, 0.0, 10.0, 40);
}

// Gamma on the real axis via the standard library.
inline double gamma_real(double x) { return std::tgamma(x); }

// |Gamma(1/2 + i tau)|^2 = pi / cosh(pi tau)
inline double gamma_half_pair(double tau) { return pi / std::cosh(pi * tau); }

// Integral over (0, inf) of f split at 1 and mapped to log variables.
template <class F>
auto half_line(F f, double wmin = -40.0, double wmax = 40.0, int panels = 160)
    -> decltype(f(1.0)) {
  auto g = [&](double w) { return std::exp(w) * f(std::exp(w)); };
  return integrate(g, wmin, wmax, panels);
}

}  // namespace oracle
