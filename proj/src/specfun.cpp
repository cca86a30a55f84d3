#include "lebedev/specfun.hpp"

#include <cmath>
#include <limits>

#include "lebedev/errors.hpp"
#include "lebedev/quad.hpp"

namespace lebedev {

namespace {

constexpr long kMaxTerms = 1000000;

Complex series_2f1(Complex a, Complex b, Complex c, Complex z) {
  Complex sum = 1.0, term = 1.0;
  int small = 0;
  for (long n = 0; n < kMaxTerms; ++n) {
    const double dn = double(n);
    const Complex ratio = (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
    term *= ratio;
    sum += term;
    if (term == 0.0) return sum;
    if (std::abs(term) <= 1e-17 * std::abs(sum) && std::abs(ratio) < 1.0) {
      if (++small >= 2) return sum;
    } else {
      small = 0;
    }
  }
  throw NoConvergence("hyp2f1: series did not converge");
}

inline double dist_to_integer(Complex m) {
  return std::abs(m - Complex(std::round(m.real()), 0.0));
}

// acosh(x) from x - 1
inline double acosh_from_xm1(double xm1) {
  return std::log1p(xm1 + std::sqrt(xm1 * (xm1 + 2.0)));
}

}  // namespace

Complex hyp2f1(Complex a, Complex b, Complex c, Complex z) {
  if (near_nonpositive_integer(c)) throw ParameterPole("hyp2f1: c at a pole");
  if (z == 0.0) return 1.0;
  const double az = std::abs(z);
  if (az <= 0.5) return series_2f1(a, b, c, z);
  const Complex w = z / (z - 1.0);
  if (std::abs(w) < az && std::abs(w) < 1.0)
    return std::pow(1.0 - z, -a) * series_2f1(a, c - b, c, w);
  if (az < 1.0) return series_2f1(a, b, c, z);
  throw PreconditionError("hyp2f1: |z| >= 1 outside the supported region");
}

LegendreArgs::LegendreArgs(Complex mu_, Complex nu_, double x_)
    : LegendreArgs(mu_, nu_, x_, x_ - 1.0) {}

LegendreArgs::LegendreArgs(Complex mu_, Complex nu_, double x_, double xm1_)
    : mu(mu_), nu(nu_), x(x_), xm1(xm1_) {
  if (!(xm1 > 0.0) || !std::isfinite(x)) throw PreconditionError("Legendre: argument must exceed 1");
}

LegendreArgs LegendreArgs::kernel(Complex mu, Complex nu, double y) {
  if (!(y > 0.0)) throw PreconditionError("Legendre kernel: y must be > 0");
  const double X = std::sqrt(1.0 + 1.0 / y);
  const double xm1 = 1.0 / (y * (X + 1.0));
  return LegendreArgs(mu, nu, X, xm1);
}

LegendreArgs LegendreArgs::conical(Complex mu, double tau, double x) {
  return LegendreArgs(mu, Complex(-0.5, tau), x);
}

Complex legendre_p_near(const LegendreArgs& a) {
  const Complex mu = a.mu, nu = a.nu;
  if (near_nonpositive_integer(1.0 - mu)) throw ParameterPole("legendre_p: 1 - mu at a pole");
  const double xp1 = a.x + 1.0;
  const double w = a.xm1 / xp1;
  const Complex pref = std::exp(0.5 * mu * (std::log(xp1) - std::log(a.xm1)) +
                                nu * std::log(0.5 * xp1));
  return pref * rgamma(1.0 - mu) * hyp2f1(-nu, -mu - nu, 1.0 - mu, w);
}

Complex legendre_p_far(const LegendreArgs& a) {
  const Complex mu = a.mu, nu = a.nu;
  if (!(mu.real() < 0.5)) throw PreconditionError("legendre_p_far: requires Re mu < 1/2");
  const double xi = acosh_from_xm1(a.xm1);
  const double sh = std::sqrt(a.xm1 * (a.x + 1.0));
  const Complex k = nu + 0.5;
  const Complex ex = -mu - 0.5;
  // cosh(xi) - cosh(t) = 2 sinh((xi+t)/2) sinh((xi-t)/2)
  auto integrand = [&](double t, double dr) -> Complex {
    const double d = 2.0 * std::sinh(0.5 * (xi + t)) * std::sinh(0.5 * dr);
    return std::cosh(k * t) * std::exp(ex * std::log(d));
  };
  const double omega = std::abs(k.imag());
  Complex integral;
  const double rel = 1e-14;
  if (omega * xi <= 20.0) {
    auto r = tanh_sinh([&](double t, double, double dr) { return integrand(t, dr); }, 0.0, xi, rel);
    integral = r.value;
  } else {
    const double L = std::min(0.5 * xi, 2.0 * kPi / omega);
    QuadratureSpec q;
    q.rel_tol = rel;
    q.abs_tol = 1e-300;
    const double split = xi - L;
    auto r1 = integrate_oscillatory([&](double t) { return integrand(t, xi - t); }, 0.0, split,
                                    omega, q);
    auto r2 = tanh_sinh([&](double, double dl, double dr) { return integrand(split + dl, dr); },
                        split, xi, rel);
    integral = r1.value + r2.value;
  }
  const Complex pref = std::sqrt(2.0 / kPi) * std::exp(mu * std::log(sh)) * rgamma(0.5 - mu);
  return pref * integral;
}

Complex legendre_p(const LegendreArgs& a) {
  const double w = a.xm1 / (a.x + 1.0);
  const double osc = 2.0 * std::abs(a.nu + 0.5) * std::sqrt(w);
  const bool near_ok = a.x < 3.0 && osc <= 8.0;
  if (near_ok || !(a.mu.real() < 0.5)) return legendre_p_near(a);
  return legendre_p_far(a);
}

Complex legendre_q_series(const LegendreArgs& a) {
  const Complex mu = a.mu, nu = a.nu;
  if (near_nonpositive_integer(nu + mu + 1.0))
    throw PrefactorPole("legendre_q: Gamma(nu+mu+1) at a pole");
  if (near_nonpositive_integer(nu + 1.5)) throw ParameterPole("legendre_q: nu + 3/2 at a pole");
  const double x = a.x;
  const double lx2m1 = std::log(a.xm1) + std::log(x + 1.0);
  const Complex lpref = Complex(0.0, kPi) * mu + std::log(kSqrtPi) + ln_gamma(nu + mu + 1.0) -
                        ln_gamma(nu + 1.5) + 0.5 * mu * lx2m1 - (nu + 1.0) * std::log(2.0) -
                        (nu + mu + 1.0) * std::log(x);
  const Complex f =
      hyp2f1(0.5 * (nu + mu + 2.0), 0.5 * (nu + mu + 1.0), nu + 1.5, Complex(1.0 / (x * x), 0.0));
  return std::exp(lpref) * f;
}

Complex legendre_q_connection(const LegendreArgs& a) {
  const Complex m = a.mu, nu = a.nu;
  if (dist_to_integer(m) < 1e-8) throw ParameterPole("legendre_q_connection: integer order");
  if (near_nonpositive_integer(nu + m + 1.0))
    throw PrefactorPole("legendre_q: Gamma(nu+mu+1) at a pole");
  const Complex pp = legendre_p(a);
  const Complex pm = legendre_p(LegendreArgs(-m, nu, a.x, a.xm1));
  Complex ratio = 0.0;
  if (!near_nonpositive_integer(nu - m + 1.0))
    ratio = std::exp(ln_gamma(nu + m + 1.0) - ln_gamma(nu - m + 1.0));
  const Complex pref = kPi * std::exp(Complex(0.0, kPi) * m) / (2.0 * sin_pi(m));
  return pref * (pp - ratio * pm);
}

Complex legendre_q_integral(const LegendreArgs& a) {
  const Complex m = a.mu, nu = a.nu;
  if (!(m.real() < 0.5) || !((nu + m).real() > -1.0))
    throw PreconditionError("legendre_q_integral: requires Re mu < 1/2 and Re(nu+mu) > -1");
  const double xi = acosh_from_xm1(a.xm1);
  const double sh = std::sqrt(a.xm1 * (a.x + 1.0));
  const Complex k = nu + 0.5;
  const Complex ex = -m - 0.5;
  // t = xi + v; cosh t - cosh xi = 2 sinh(xi + v/2) sinh(v/2)
  auto integrand = [&](double v) -> Complex {
    const double sv = std::sinh(0.5 * v);
    if (sv == 0.0) return 0.0;
    // the product underflows for tiny xi and v, its logarithm does not
    const double ld = std::log(2.0 * std::sinh(xi + 0.5 * v)) + std::log(sv);
    return std::exp(-k * v + ex * ld);
  };
  const double L = 1.0;
  auto r1 = tanh_sinh([&](double, double dl, double) { return integrand(dl); }, 0.0, L, 1e-14);
  QuadratureSpec q;
  q.rel_tol = 1e-14;
  q.abs_tol = 1e-17 * std::max(std::abs(r1.value), 1e-300);
  q.max_nodes = 2000000;
  auto r2 = integrate_semi_infinite_osc(integrand, L, std::abs(k.imag()), q, 2.0);
  const Complex pref = std::exp(Complex(0.0, kPi) * m - k * xi) * std::sqrt(kPi / 2.0) *
                       std::exp(m * std::log(sh)) * rgamma(0.5 - m);
  return pref * (r1.value + r2.value);
}

Complex legendre_q(const LegendreArgs& a) {
  if (a.x >= 1.2) return legendre_q_series(a);
  if (dist_to_integer(a.mu) >= 0.05) return legendre_q_connection(a);
  if (a.mu.real() < 0.5 && (a.nu + a.mu).real() > -1.0) return legendre_q_integral(a);
  return legendre_q_series(a);
}

Complex bessel_i(Complex order, double x) {
  if (!(x > 0.0)) throw PreconditionError("bessel_i: x must be > 0");
  if (near_nonpositive_integer(order + 1.0)) return bessel_i(-order, x);
  const double h = 0.5 * x, h2 = h * h;
  Complex term = std::exp(order * std::log(h)) * rgamma(order + 1.0);
  Complex sum = term;
  for (long k = 0; k < 100000; ++k) {
    term *= h2 / ((k + 1.0) * (order + double(k) + 1.0));
    sum += term;
    if (double(k) > h && std::abs(term) <= 1e-17 * std::abs(sum)) return sum;
  }
  throw NoConvergence("bessel_i: series did not converge");
}

double bessel_k_imag_scaled(double tau, double x) {
  if (!(x > 0.0)) throw PreconditionError("bessel_k_imag: x must be > 0");
  const double tmax = std::asinh(50.0 / x) + 5.0;
  QuadratureSpec q;
  q.rel_tol = 1e-13;
  q.abs_tol = 1e-17;
  q.max_nodes = 400000;
  // e^{-x (cosh t - 1)} with cosh t - 1 = 2 sinh^2(t/2)
  auto f = [&](double t) {
    const double s = std::sinh(0.5 * t);
    return Complex(std::exp(-2.0 * x * s * s) * std::cos(tau * t), 0.0);
  };
  return integrate_oscillatory(f, 0.0, tmax, tau, q).value.real();
}

double bessel_k_imag(double tau, double x) { return std::exp(-x) * bessel_k_imag_scaled(tau, x); }

Complex bessel_ik_asymptotic(Complex a, Complex b, double x) {
  // I_a ~ e^x/sqrt(2 pi x) sum (-1)^k c_k(a)/x^k, K_b ~ sqrt(pi/(2x)) e^{-x} sum c_k(b)/x^k
  constexpr int N = 30;
  Complex ca[N], cb[N];
  ca[0] = cb[0] = 1.0;
  const Complex ma = 4.0 * a * a, mb = 4.0 * b * b;
  for (int k = 1; k < N; ++k) {
    const double o = (2.0 * k - 1.0) * (2.0 * k - 1.0);
    ca[k] = ca[k - 1] * (ma - o) / (8.0 * k);
    cb[k] = cb[k - 1] * (mb - o) / (8.0 * k);
  }
  Complex sum = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  double xp = 1.0;
  for (int k = 0; k < N; ++k) {
    Complex c = 0.0;
    for (int j = 0; j <= k; ++j) c += ((j % 2) ? -1.0 : 1.0) * ca[j] * cb[k - j];
    const Complex term = c / xp;
    xp *= x;
    const double at = std::abs(term);
    if (at == 0.0) continue;  // odd orders cancel when a = b
    if (at > prev) break;     // the asymptotic series starts to diverge
    sum += term;
    prev = at;
    if (prev < 1e-17 * std::abs(sum)) break;
  }
  return sum / (2.0 * x);
}

double bessel_kii_product(double tau, double z) {
  if (!(z > 0.0)) throw PreconditionError("bessel_kii_product: z must be > 0");
  const Complex nu(0.0, tau);
  if (z > 25.0) {
    // K (I_nu + I_-nu) = 2 I_nu K_nu + (2/pi) sin(nu pi) K_nu^2; the last term is O(e^{-2z})
    return 2.0 * bessel_ik_asymptotic(nu, nu, z).real();
  }
  const double ks = bessel_k_imag_scaled(tau, z);
  const double isum = 2.0 * bessel_i(nu, z).real();
  return ks * isum * std::exp(-z);
}

}  // namespace lebedev
