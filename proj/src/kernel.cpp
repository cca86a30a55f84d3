#include "lebedev/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "lebedev/errors.hpp"

namespace lebedev {

TransformParams TransformParams::make(Complex mu) {
  TransformParams p;
  p.mu = mu;
  p.nu = 0.5 * (-0.5 + std::min(-mu.real(), 1.0));
  return p;
}

TransformParams TransformParams::make(Complex mu, double nu) {
  TransformParams p;
  p.mu = mu;
  p.nu = nu;
  return p;
}

void TransformParams::require_order() const {
  if (!(mu.real() < 0.5)) throw PreconditionError("requires Re mu < 1/2");
}

void TransformParams::require_kernel_strip() const {
  require_order();
  if (!(nu > -0.5 && nu < -mu.real()))
    throw ContourError("contour abscissa nu must lie in (-1/2, -Re mu)");
}

Complex gamma_pair(Complex mu, double tau) {
  const Complex i(0.0, 1.0);
  return std::exp(ln_gamma(0.5 + i * tau - mu) + ln_gamma(0.5 - i * tau - mu));
}

Complex phi_direct(const TransformParams& p, const KernelPoint& k) {
  p.require_order();
  if (!(k.x > 0.0)) throw PreconditionError("phi_direct: x must be > 0");
  const Complex P = legendre_p(LegendreArgs::kernel(p.mu, Complex(-0.5, k.tau), k.x));
  return kSqrtPi * gamma_pair(p.mu, k.tau) * P * P;
}

namespace {

double kernel_T(const TransformParams& p, double tau) {
  return p.quad.truncation_T + std::abs(p.mu.imag()) + std::abs(tau);
}

Complex mb_log_integrand(Complex s, Complex mu, double tau) {
  const Complex i(0.0, 1.0);
  return ln_gamma(s + 0.5 + i * tau) + ln_gamma(s + 0.5 - i * tau) + ln_gamma(0.5 + s) +
         ln_gamma(-mu - s) - ln_gamma(1.0 + s) - ln_gamma(1.0 + s - mu);
}

}  // namespace

EvalResult phi_mellin_barnes(const TransformParams& p, const KernelPoint& k) {
  p.require_kernel_strip();
  if (!(k.x > 0.0)) throw PreconditionError("phi_mellin_barnes: x must be > 0");
  const double lx = std::log(k.x);
  VerticalLineOptions opt;
  opt.conjugate_symmetric = p.mu_is_real();
  opt.T = kernel_T(p, k.tau);
  auto r = integrate_vertical_line(
      [&](Complex s) { return std::exp(mb_log_integrand(s, p.mu, k.tau) - s * lx); }, p.nu,
      p.quad, opt);
  r.route = "mellin-barnes";
  return r;
}

PhiJet phi_mb_jet(const TransformParams& p, const KernelPoint& k) {
  p.require_kernel_strip();
  if (!(k.x > 0.0)) throw PreconditionError("phi_mb_jet: x must be > 0");
  const double x = k.x, lx = std::log(x);
  VerticalLineOptions opt;
  opt.conjugate_symmetric = p.mu_is_real();
  opt.T = kernel_T(p, k.tau) + 4.0;
  // d/dx x^{-s} = -s x^{-s-1}
  auto r = integrate_vertical_line_multi(
      [&](Complex s, std::span<Complex> out) {
        const Complex f = std::exp(mb_log_integrand(s, p.mu, k.tau) - s * lx);
        out[0] = f;
        out[1] = -s * f / x;
        out[2] = s * (s + 1.0) * f / (x * x);
        out[3] = -s * (s + 1.0) * (s + 2.0) * f / (x * x * x);
      },
      4, p.nu, p.quad, opt);
  PhiJet j;
  for (int i = 0; i < 4; ++i) {
    j.d[i] = r.values[i];
    j.err[i] = r.err[i];
  }
  return j;
}

double ode_residual_of(const Complex d[4], Complex mu, double tau, double x, OdeForm form) {
  const double c2 = form == OdeForm::Corrected ? 3.0 * x * x : 3.0 * x;
  const Complex t3 = 2.0 * x * x * x * (1.0 + x) * d[3];
  const Complex t2 = c2 * (1.0 + 2.0 * x) * d[2];
  const Complex t1 = x * (2.0 * x * (1.0 - mu * mu) + 2.0 * tau * tau + 0.5) * d[1];
  const Complex t0 = -(0.25 + tau * tau) * d[0];
  const double scale = std::max({std::abs(t3), std::abs(t2), std::abs(t1), std::abs(t0)});
  if (scale == 0.0) return 0.0;
  return std::abs(t3 + t2 + t1 + t0) / scale;
}

double ode_residual(const TransformParams& p, const KernelPoint& k, OdeForm form) {
  const PhiJet j = phi_mb_jet(p, k);
  return ode_residual_of(j.d, p.mu, k.tau, k.x, form);
}

EvalResult phi_fourier_cosine(const TransformParams& p, const KernelPoint& k, bool exploratory) {
  p.require_order();
  if (!(k.x > 0.0)) throw PreconditionError("phi_fourier_cosine: x must be > 0");
  if (k.x < 1.0 && !exploratory)
    throw PreconditionError("phi_fourier_cosine: the cosine representation is stated for x >= 1");
  const Complex lam = -0.5 - p.mu;
  const double x = k.x;
  auto f = [&](double u) -> Complex {
    const double zm1 = x * (std::cosh(u) + 1.0);  // 2x cosh^2(u/2)
    return std::cos(k.tau * u) * legendre_q_series(LegendreArgs(0.0, lam, zm1 + 1.0, zm1));
  };
  QuadratureSpec q = p.quad;
  q.rel_tol = std::max(q.rel_tol, 1e-13);
  EvalResult r = integrate_semi_infinite_osc(f, 0.0, k.tau, q, 2.0);
  r.value *= 2.0 * std::sqrt(x / kPi);
  r.err_estimate *= 2.0 * std::sqrt(x / kPi);
  r.route = "fourier-cosine";
  if (k.x < 1.0) r.warnings.push_back("exploratory: x < 1 lies outside the stated range");
  return r;
}

Complex legendre_pq_sum(Complex mu, double tau, double y) {
  const LegendreArgs base = LegendreArgs::kernel(mu, Complex(-0.5, tau), y);
  const Complex P = legendre_p(base);
  const Complex qp = legendre_q(LegendreArgs(-mu, Complex(-0.5, tau), base.x, base.xm1));
  // Hobson's Q carries e^{i mu pi}, so the pair is conjugate only for mu = 0
  const Complex qm = mu == Complex(0.0, 0.0)
                         ? std::conj(qp)
                         : legendre_q(LegendreArgs(-mu, Complex(-0.5, -tau), base.x, base.xm1));
  return P * (qp + qm);
}

Complex s_kernel(const TransformParams& p, const KernelPoint& k, std::vector<std::string>* warnings) {
  p.require_order();
  if (!(k.x > 0.0)) throw PreconditionError("s_kernel: x must be > 0");
  if (warnings && !p.mu_is_real())
    warnings->push_back("BranchWarning: principal branch of e^{i mu pi} used for complex mu");
  const Complex e = std::exp(Complex(0.0, kPi) * p.mu);
  return kSqrtPi * e / (k.x * k.x * std::cosh(kPi * k.tau)) * legendre_pq_sum(p.mu, k.tau, k.x);
}

double s_contour_nu(const TransformParams& p) {
  const double lo = std::max(-0.5, p.mu.real() - 0.5), hi = 0.0;
  if (!(lo < hi)) throw ContourError("S contour: empty strip for this mu");
  if (p.nu > lo && p.nu < hi) return p.nu;
  return 0.5 * (lo + hi);
}

namespace {

// Gamma(2-s)Gamma(2-s-mu)Gamma(s-3/2+i tau)Gamma(s-3/2-i tau) / (Gamma(s-1-mu)Gamma(3/2-s))
Complex log_psi0_integrand(Complex s, Complex mu, double tau) {
  const Complex i(0.0, 1.0);
  return ln_gamma(2.0 - s) + ln_gamma(2.0 - s - mu) + ln_gamma(s - 1.5 + i * tau) +
         ln_gamma(s - 1.5 - i * tau) - ln_gamma(s - 1.0 - mu) - ln_gamma(1.5 - s);
}

std::vector<Complex> contour_multi(const TransformParams& p, double tau,
                                   const std::vector<double>& xs, bool psi0) {
  p.require_order();
  const double g0 = 1.5 - s_contour_nu(p);
  std::vector<double> lx(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (!(xs[j] > 0.0)) throw PreconditionError("S contour: x must be > 0");
    lx[j] = std::log(xs[j]);
  }
  VerticalLineOptions opt;
  opt.conjugate_symmetric = p.mu_is_real();
  opt.T = kernel_T(p, tau);
  auto r = integrate_vertical_line_multi(
      [&](Complex s, std::span<Complex> out) {
        Complex l = log_psi0_integrand(s, p.mu, tau);
        // 1/Gamma(5/2-s) = 1/((3/2-s) Gamma(3/2-s))
        if (!psi0) l -= std::log(1.5 - s);
        for (std::size_t j = 0; j < lx.size(); ++j) out[j] = std::exp(l - s * lx[j]);
      },
      xs.size(), g0, p.quad, opt);
  return r.values;
}

}  // namespace

std::vector<Complex> s_kernel_contour_multi(const TransformParams& p, double tau,
                                            const std::vector<double>& xs) {
  return contour_multi(p, tau, xs, false);
}

std::vector<Complex> psi0_kernel_multi(const TransformParams& p, double x_index,
                                       const std::vector<double>& ys) {
  return contour_multi(p, x_index, ys, true);
}

EvalResult s_kernel_contour(const TransformParams& p, const KernelPoint& k) {
  p.require_order();
  const double g0 = 1.5 - p.nu;
  if (!(p.nu > -0.5 && p.nu < 0.0) || !(g0 < 2.0 - p.mu.real()))
    throw ContourError("s_kernel_contour: Re s = 3/2 - nu must lie in (3/2, min(2, 2 - Re mu))");
  if (!(k.x > 0.0)) throw PreconditionError("s_kernel_contour: x must be > 0");
  const Complex i(0.0, 1.0), mu = p.mu;
  const double lx = std::log(k.x), tau = k.tau;
  VerticalLineOptions opt;
  opt.conjugate_symmetric = p.mu_is_real();
  opt.T = kernel_T(p, tau);
  auto r = integrate_vertical_line(
      [&](Complex s) {
        return std::exp(ln_gamma(2.0 - s) + ln_gamma(2.0 - s - mu) + ln_gamma(s - 1.5 + i * tau) +
                        ln_gamma(s - 1.5 - i * tau) - ln_gamma(s - 1.0 - mu) -
                        ln_gamma(2.5 - s) - s * lx);
      },
      g0, p.quad, opt);
  r.route = "s-contour";
  return r;
}

Complex g_inverse_potential(const TransformParams& p, double x_index, double y) {
  return legendre_pq_sum(p.mu, x_index, y) / std::sqrt(y);
}

Complex g_inverse_kernel(const TransformParams& p, double x_index, double y) {
  p.require_order();
  if (!(y > 0.0)) throw PreconditionError("g_inverse_kernel: y must be > 0");
  double h = std::max(1e-5 * y, 1e-7);
  h = std::min(h, 0.1 * y);
  auto B = [&](double t) { return g_inverse_potential(p, x_index, t); };
  auto D = [&](double hh) { return (B(y + hh) - B(y - hh)) / (2.0 * hh); };
  const Complex d1 = D(h), d2 = D(0.5 * h), d4 = D(0.25 * h);
  const Complex r1 = (4.0 * d2 - d1) / 3.0, r2 = (4.0 * d4 - d2) / 3.0;
  const Complex rr = (16.0 * r2 - r1) / 15.0;
  return rr / std::sqrt(y);
}

double norm_constant(const TransformParams& p) {
  p.require_kernel_strip();
  const Complex mu = p.mu;
  VerticalLineOptions opt;
  opt.conjugate_symmetric = p.mu_is_real();
  opt.T = kernel_T(p, 0.0);
  auto r = integrate_vertical_line(
      [&](Complex s) {
        const Complex l = 2.0 * ln_gamma(s + 0.5) + ln_gamma(-mu - s) - ln_gamma(1.0 + s - mu);
        return Complex(std::exp(l.real()), 0.0);
      },
      p.nu, p.quad, opt);
  const double line = 2.0 * kPi * r.value.real();  // integral of |.| dt
  const double b = beta(p.nu + 0.5, p.nu + 0.5).real();
  return std::pow(2.0, 2.0 * p.nu - 1.0) / (kPi * kSqrtPi) * b * line;
}

}  // namespace lebedev
