#include "lebedev/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "lebedev/errors.hpp"
#include "lebedev/specfun.hpp"

namespace lebedev {

namespace {

const Complex kI(0.0, 1.0);

Complex conical_p(Complex mu, double tau, double y) {
  return legendre_p(LegendreArgs::kernel(mu, Complex(-0.5, tau), y));
}

// exists nu in (-1/2, -Re mu) with 1 - nu inside the Mellin strip of f
void require_forward_class(const TransformParams& p, const TestFunction& f) {
  const double lo = std::max(f.strip.lo, 1.0 + p.mu.real());
  const double hi = std::min(f.strip.hi, 1.5);
  if (!(lo < hi))
    throw IntegrabilityError(f.name + " is not in L_{1-nu,1} for any nu in (-1/2, -Re mu)");
}

double xi_of(double x) {
  // cosh xi = sqrt((1+x)/x)
  const double X = std::sqrt((1.0 + x) / x);
  return std::log(X + std::sqrt(1.0 / x));
}

}  // namespace

KernelRoute resolve_route(KernelRoute r, Complex mu) {
  if (r != KernelRoute::Auto) return r;
  return mu == Complex(0.0, 0.0) ? KernelRoute::Legendre : KernelRoute::Contour;
}

TauRule composite_gauss_rule(double a, double b, double panel, int order) {
  std::vector<double> x, w;
  gauss_legendre(order, x, w);
  TauRule r;
  const int n = std::max(1, static_cast<int>(std::ceil((b - a) / panel)));
  const double len = (b - a) / n;
  for (int k = 0; k < n; ++k) {
    const double c = a + (k + 0.5) * len;
    for (int j = 0; j < order; ++j) {
      r.nodes.push_back(c + 0.5 * len * x[j]);
      r.weights.push_back(0.5 * len * w[j]);
    }
  }
  return r;
}

EvalResult integrate_half_line(const RealFn& g, const QuadratureSpec& spec) {
  auto up = integrate_semi_infinite(
      [&](double w) {
        const double y = std::exp(w);
        return std::isfinite(y) ? g(y) * y : Complex(0.0);
      },
      spec, 0.0, 1.0);
  auto down = integrate_semi_infinite(
      [&](double w) {
        const double y = std::exp(-w);
        return y > 0.0 ? g(y) * y : Complex(0.0);
      },
      spec, 0.0, 1.0);
  EvalResult r;
  r.value = up.value + down.value;
  r.err_estimate = up.err_estimate + down.err_estimate;
  r.nodes_used = up.nodes_used + down.nodes_used;
  r.route = "log-panels";
  return r;
}

EvalResult forward(const TransformParams& p, const TestFunction& f, double tau) {
  p.require_order();
  require_forward_class(p, f);
  EvalResult r = integrate_half_line(
      [&](double y) {
        const Complex P = conical_p(p.mu, tau, y);
        return P * P * f.eval(y);
      },
      p.quad);
  const Complex pre = kSqrtPi * gamma_pair(p.mu, tau);
  r.value *= pre;
  r.err_estimate *= std::abs(pre);
  r.route = "direct";
  return r;
}

EvalResult forward_via_mellin(const TransformParams& p, const TestFunction& f, double tau) {
  p.require_kernel_strip();
  if (!f.has_mellin()) throw PreconditionError(f.name + " has no closed form Mellin transform");
  if (!f.strip.contains(1.0 - p.nu))
    throw OutOfStrip("forward_via_mellin: 1 - nu outside the Mellin strip of " + f.name);
  const Complex mu = p.mu;
  VerticalLineOptions opt;
  opt.conjugate_symmetric = p.mu_is_real();
  opt.T = p.quad.truncation_T + std::abs(tau) + std::abs(mu.imag());
  auto r = integrate_vertical_line(
      [&](Complex s) {
        const Complex l = ln_gamma(s + kI * tau) + ln_gamma(s - kI * tau) + ln_gamma(s) +
                          ln_gamma(0.5 - mu - s) - ln_gamma(0.5 + s) - ln_gamma(0.5 + s - mu);
        return std::exp(l) * f.mellin(1.5 - s);
      },
      p.nu + 0.5, p.quad, opt);
  r.route = "mellin";
  return r;
}

EvalResult phi_aux(const TransformParams& p, const TestFunction& f, double x) {
  p.require_order();
  if (!(p.nu > -0.25 && p.nu < std::min(0.0, -p.mu.real())))
    throw ContourError("phi_aux: nu must lie in (-1/4, min(0, -Re mu))");
  if (!f.has_mellin()) throw PreconditionError(f.name + " has no closed form Mellin transform");
  if (!(x > 0.0)) throw PreconditionError("phi_aux: x must be > 0");
  const Complex mu = p.mu;
  const double slo = f.strip.lo, shi = f.strip.hi;
  double c = p.nu + 0.5;
  if (!(1.5 - c > slo && 1.5 - c < shi))
    throw OutOfStrip("phi_aux: 3/2 - (nu + 1/2) outside the Mellin strip of " + f.name);
  Complex residue = 0.0;
  if (x < 1.0) {
    // move left past the pole of Gamma(s) at 0 for faster decay of x^{-s}
    const double cl = std::max(-0.45, 1.5 - shi + 0.05);
    if (cl < 0.0 && cl < c) {
      c = cl;
      residue = f.mellin(1.5) / kPi;
    }
  } else {
    const double cr = std::min({0.5 - mu.real(), 1.0, 1.5 - slo}) - 0.05;
    if (cr > c) c = cr;
  }
  const double lx = std::log(x);
  VerticalLineOptions opt;
  opt.conjugate_symmetric = p.mu_is_real();
  auto r = integrate_vertical_line(
      [&](Complex s) {
        const Complex l = ln_gamma(0.5 - mu - s) + ln_gamma(s) + ln_gamma(1.0 - s) -
                          ln_gamma(s + 0.5) - ln_gamma(0.5 - s) - ln_gamma(0.5 + s - mu);
        return std::exp(l - s * lx) * f.mellin(1.5 - s);
      },
      c, p.quad, opt);
  r.value += residue;
  r.route = "contour";
  return r;
}

EvalResult forward_via_bessel(const TransformParams& p, const std::function<Complex(double)>& phi,
                              double tau) {
  p.require_order();
  // x = e^{2v}: dx/x = 2 dv, x^{-1/2} = e^{-v}
  auto f = [&](double v) { return bessel_kii_product(tau, std::exp(-v)) * phi(std::exp(2.0 * v)); };
  QuadratureSpec q = p.quad;
  EvalResult r = integrate_oscillatory(f, -40.0, 40.0, 2.0 * std::abs(tau), q);
  const double pre = 2.0 * kSqrtPi / std::cosh(kPi * tau);
  r.value *= pre;
  r.err_estimate *= pre;
  r.route = "bessel";
  return r;
}

SpectralFunction forward_image(const TransformParams& p, const TestFunction& f) {
  require_forward_class(p, f);
  SpectralFunction F;
  F.name = "forward(" + f.name + ")";
  const bool mellin = f.has_mellin() && f.strip.contains(1.0 - p.nu);
  F.eval = [p, f, mellin](double t) {
    return mellin ? forward_via_mellin(p, f, t).value : forward(p, f, t).value;
  };
  F.even = true;
  F.decay = f.spectral_decay;
  F.tau_cut = 40.0;
  F.classes = {"forward image"};
  return F;
}

double default_tau_max(const SpectralFunction& F) {
  if (!std::isfinite(F.decay.rate)) return std::min(F.tau_cut, 40.0);
  // tau^{power+1} e^{-(rate - pi) tau} against ~e^{-32}
  const double c = F.decay.rate - kPi;
  if (!(c > 0.0)) return F.tau_cut;
  double t = 4.0;
  for (int it = 0; it < 200 && t < 60.0; ++it) {
    if (c * t - (F.decay.power + 1.0) * std::log(t) > 32.0) break;
    t += 0.5;
  }
  return std::min(t, F.tau_cut);
}

ForwardInverter::ForwardInverter(const TransformParams& p, const SpectralFunction& F,
                                 InvertForwardOptions opt)
    : p_(p), opt_(opt), route_(resolve_route(opt.route, p.mu)) {
  p_.require_order();
  if (!F.integrable_with(kPi, 0.0))
    throw DecayError("invert_forward: " + F.name +
                     " does not decay fast enough for tau sinh(2 pi tau) S F to be integrable");
  const double tmax = opt.tau_max > 0.0 ? opt.tau_max : default_tau_max(F);
  rule_ = composite_gauss_rule(0.0, tmax, opt.panel, opt.order);
  weighted_.resize(rule_.nodes.size());
  for (std::size_t j = 0; j < rule_.nodes.size(); ++j) {
    const double t = rule_.nodes[j];
    weighted_[j] = rule_.weights[j] * t * std::sinh(2.0 * kPi * t) * F.eval(t);
  }
}

std::vector<EvalResult> ForwardInverter::evaluate(const std::vector<double>& xs) const {
  static constexpr double kOff[6] = {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0};
  std::vector<double> pts;
  for (double x : xs) {
    if (!(x > 0.0)) throw PreconditionError("invert_forward: x must be > 0");
    const double h = opt_.step_rel * x;
    for (double o : kOff) pts.push_back(x + o * h);
  }
  std::vector<Complex> I(pts.size(), 0.0);
  for (std::size_t j = 0; j < rule_.nodes.size(); ++j) {
    const double t = rule_.nodes[j];
    if (route_ == KernelRoute::Contour) {
      const auto S = s_kernel_contour_multi(p_, t, pts);
      for (std::size_t k = 0; k < pts.size(); ++k) I[k] += weighted_[j] * S[k];
    } else {
      for (std::size_t k = 0; k < pts.size(); ++k) I[k] += weighted_[j] * s_kernel(p_, {t, pts[k]});
    }
  }
  std::vector<EvalResult> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i], h = opt_.step_rel * x;
    Complex g[6];
    for (int k = 0; k < 6; ++k) {
      const double y = pts[6 * i + k];
      g[k] = y * std::sqrt(y) * I[6 * i + k];
    }
    const Complex d1 = (-g[5] + 8.0 * g[4] - 8.0 * g[1] + g[0]) / (12.0 * h);
    const Complex d2 = (-g[4] + 8.0 * g[3] - 8.0 * g[2] + g[1]) / (6.0 * h);
    const Complex d = (16.0 * d2 - d1) / 15.0;
    const double pre = 1.0 / (std::sqrt(x) * kPi * kPi);
    out[i].value = pre * d;
    out[i].err_estimate = pre * std::abs(d2 - d1) / 15.0;
    out[i].nodes_used = static_cast<long>(rule_.nodes.size());
    out[i].truncation_T_used = rule_.nodes.empty() ? 0.0 : rule_.nodes.back();
    out[i].route = route_ == KernelRoute::Contour ? "inverse-contour" : "inverse-legendre";
  }
  return out;
}

EvalResult invert_forward(const TransformParams& p, const SpectralFunction& F, double x,
                          InvertForwardOptions opt) {
  return ForwardInverter(p, F, opt)(x);
}

namespace {

// Composite Gauss rules of two orders on [0, tmax]; their difference is the error estimate.
EvalResult fixed_rule_integral(const RealFn& fn, double tmax, double omega) {
  const double panel = std::min(1.0, kPi / std::max(omega, 1e-9));
  EvalResult r;
  Complex lo = 0.0;
  for (int order : {20, 14}) {
    const TauRule rule = composite_gauss_rule(0.0, tmax, panel, order);
    Complex sum = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) sum += rule.weights[j] * fn(rule.nodes[j]);
    if (order == 20) r.value = sum;
    else lo = sum;
    r.nodes_used += static_cast<long>(rule.nodes.size());
  }
  r.err_estimate = std::abs(r.value - lo);
  r.truncation_T_used = tmax;
  return r;
}

}  // namespace

TwoSided expansion_antiderivative(const TransformParams& p, const TestFunction& f, double x,
                                  ExpansionForm form, KernelRoute route,
                                  const std::function<Complex(double)>* F) {
  p.require_order();
  if (!(x > 0.0)) throw PreconditionError("expansion_antiderivative: x must be > 0");
  route = resolve_route(route, p.mu);
  SpectralFunction decl;
  decl.decay = f.spectral_decay;
  if (!decl.integrable_with(kPi, 0.0))
    throw DecayError("expansion_antiderivative: the forward image of " + f.name +
                     " is not declared to decay faster than e^{-pi tau}");
  TwoSided out;
  const double lx = std::log(x);
  out.lhs = integrate_semi_infinite(
      [&](double w) {
        const double y = std::exp(w);
        // y^{3/2} overflows beyond
        return w < 460.0 ? y * std::sqrt(y) * f.eval(y) : Complex(0.0);
      },
      p.quad, lx, 1.0);
  out.lhs.route = "direct";

  const Complex emu = std::exp(kI * kPi * p.mu);
  QuadratureSpec q = p.quad;
  q.rel_tol = std::max(q.rel_tol, 1e-9);
  std::function<Complex(double)> integrand;
  double omega = 2.0 * xi_of(x);
  if (form == ExpansionForm::Theorem) {
    const SpectralFunction image = forward_image(p, f);
    auto Ff = [&](double t) { return F ? (*F)(t) : image.eval(t); };
    // beyond tmax the sampling error of F outweighs F itself
    const double tmax = default_tau_max(decl);
    if (route == KernelRoute::Legendre) {
      // -(2 e^{i mu pi}/(pi^{3/2} sqrt x)) int tau sinh(pi tau) P (Q+Q) F d tau
      integrand = [&](double t) {
        return t * std::sinh(kPi * t) * legendre_pq_sum(p.mu, t, x) * Ff(t);
      };
      out.rhs = fixed_rule_integral(integrand, tmax, omega);
      out.rhs.value *= -2.0 * emu / (kPi * kSqrtPi * std::sqrt(x));
    } else {
      // P (Q+Q) e^{i mu pi} -> x^2 cosh(pi tau) S / sqrt(pi)
      integrand = [&](double t) {
        const Complex S = s_kernel_contour_multi(p, t, {x}).front();
        return t * std::sinh(2.0 * kPi * t) * S * Ff(t);
      };
      out.rhs = fixed_rule_integral(integrand, tmax, omega);
      out.rhs.value *= -x * std::sqrt(x) / (kPi * kPi);
    }
  } else {
    if (route != KernelRoute::Legendre)
      throw PreconditionError("expansion_antiderivative: the swapped form has a Legendre route only");
    // -(2 e^{i mu pi}/(pi sqrt x)) int tau sinh(pi tau) Gamma-pair P(x)^2 int P (Q+Q) f dy d tau
    // the inner rule revisits the same y for every tau
    std::map<double, Complex> fcache;
    auto fy = [&](double y) {
      auto it = fcache.find(y);
      if (it == fcache.end()) it = fcache.emplace(y, f.eval(y)).first;
      return it->second;
    };
    integrand = [&](double t) {
      const Complex P = conical_p(p.mu, t, x);
      const Complex H =
          integrate_half_line([&](double y) { return legendre_pq_sum(p.mu, t, y) * fy(y); }, q)
              .value;
      return t * std::sinh(kPi * t) * gamma_pair(p.mu, t) * P * P * H;
    };
    out.rhs = integrate_oscillatory_tail(integrand, 0.0, omega, q);
    out.rhs.value *= -2.0 * emu / (kPi * std::sqrt(x));
  }
  out.rhs.route = form == ExpansionForm::Theorem ? "expansion" : "expansion-swapped";
  return out;
}

EvalResult adjoint(const TransformParams& p, const SpectralFunction& g, double x) {
  p.require_order();
  if (!(x > 0.0)) throw PreconditionError("adjoint: x must be > 0");
  auto half = [&](double sgn) {
    return integrate_gk(
        [&](double t) { return phi_direct(p, {t, x}) * g.eval(sgn * t); }, 0.0, g.tau_cut,
        p.quad.rel_tol, p.quad.abs_tol, p.quad.max_nodes);
  };
  EvalResult r = half(1.0);
  if (g.even) {
    r.value *= 2.0;
    r.err_estimate *= 2.0;
  } else {
    EvalResult m = half(-1.0);
    r.value += m.value;
    r.err_estimate += m.err_estimate;
    r.nodes_used += m.nodes_used;
  }
  r.route = "adaptive";
  return r;
}

Complex adjoint_fixed(const TransformParams& p, const SpectralFunction& g, double x,
                      double theta) {
  p.require_order();
  static const TauRule unit = composite_gauss_rule(0.0, 1.0, 1.0, 12);
  const double cut = g.tau_cut;
  const int panels = std::max(1, static_cast<int>(std::ceil(cut / 0.5)));
  const double len = cut / panels;
  Complex acc = 0.0;
  for (int k = 0; k < panels; ++k) {
    for (std::size_t j = 0; j < unit.nodes.size(); ++j) {
      const double t = (k + unit.nodes[j]) * len;
      const Complex gg = std::exp(theta * t) * g.eval(t) + std::exp(-theta * t) * g.eval(-t);
      acc += unit.weights[j] * len * phi_direct(p, {t, x}) * gg;
    }
  }
  return acc;
}

std::pair<Complex, Complex> adjoint_mellin_identity(const TransformParams& p,
                                                    const SpectralFunction& g, double y) {
  p.require_order();
  if (!(p.nu > -0.5 && p.nu < std::min(0.0, -p.mu.real())))
    throw ContourError("adjoint_mellin_identity: nu must lie in (-1/2, min(0, -Re mu))");
  if (!(y > 0.0)) throw PreconditionError("adjoint_mellin_identity: y must be > 0");
  const TauRule rule = composite_gauss_rule(0.0, g.tau_cut, 0.25, 16);
  std::vector<Complex> gp(rule.nodes.size()), gm(rule.nodes.size());
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    gp[j] = g.eval(rule.nodes[j]);
    gm[j] = g.eval(-rule.nodes[j]);
  }
  bool real_g = true;
  for (std::size_t j = 0; j < gp.size(); ++j) real_g = real_g && gp[j].imag() == 0.0 && gm[j].imag() == 0.0;
  const double ly = std::log(y);
  VerticalLineOptions opt;
  opt.conjugate_symmetric = real_g;
  auto lhs = integrate_vertical_line(
      [&](Complex s) {
        // W(s) = int Gamma(s+1/2+i tau) Gamma(s+1/2-i tau) g(tau) d tau; the pair is even in tau
        Complex W = 0.0;
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
          const double t = rule.nodes[j];
          W += rule.weights[j] * std::exp(ln_gamma(s + 0.5 + kI * t) + ln_gamma(s + 0.5 - kI * t)) *
               (gp[j] + gm[j]);
        }
        // the gamma ratio times G*(s) is W(s) by the Mellin transform of the adjoint
        return std::exp(ln_gamma(-s) - s * ly) * W;
      },
      p.nu, p.quad, opt);
  auto rhs = integrate_gk(
      [&](double t) {
        return bessel_k_imag_scaled(t, 0.5 * y) * (g.eval(t) + g.eval(-t)) / std::cosh(kPi * t);
      },
      0.0, g.tau_cut, p.quad.rel_tol, p.quad.abs_tol, p.quad.max_nodes);
  return {lhs.value, std::sqrt(kPi * y) * rhs.value};
}

AdjointImage adjoint_image(const TransformParams& p, const SpectralFunction& g) {
  AdjointImage G;
  G.name = "adjoint(" + g.name + ")";
  G.eval = [p, g](double y) { return adjoint_fixed(p, g, y); };
  G.even = g.even;
  G.vanishing_order = g.vanishing_order;
  G.analytic_strip = g.analytic_strip;
  return G;
}

AdjointInverter::AdjointInverter(const TransformParams& p, const AdjointImage& G,
                                 InvertAdjointOptions opt)
    : p_(p), opt_(opt), route_(resolve_route(opt.route, p.mu)) {
  p_.require_order();
  if (!G.even || G.vanishing_order < 2 || !(G.analytic_strip > 0.0))
    throw HypothesisError("invert_adjoint: g must be declared even, analytic near the real axis "
                          "and vanishing with g(0) = g'(0) = 0");
  const double w0 = std::log(opt.y0);
  const TauRule r = composite_gauss_rule(w0, opt.w_max, opt.panel, opt.order);
  for (std::size_t j = 0; j < r.nodes.size(); ++j) {
    const double y = std::exp(r.nodes[j]);
    ys_.push_back(y);
    wy_.push_back(r.weights[j] * y);
    G_.push_back(G.eval(y));
  }
  G0_ = G.eval(opt.y0);
}

EvalResult AdjointInverter::operator()(double x) const {
  EvalResult out;
  if (x == 0.0) {
    out.route = "prefactor-zero";
    return out;
  }
  const double ax = std::abs(x);
  // kernel and boundary potential in the contour normalization
  std::vector<Complex> psi(ys_.size());
  Complex B0;
  if (route_ == KernelRoute::Contour) {
    const std::size_t chunk = static_cast<std::size_t>(opt_.order) * 2;
    for (std::size_t a = 0; a < ys_.size(); a += chunk) {
      const std::size_t b = std::min(ys_.size(), a + chunk);
      std::vector<double> part(ys_.begin() + long(a), ys_.begin() + long(b));
      const auto v = psi0_kernel_multi(p_, ax, part);
      std::copy(v.begin(), v.end(), psi.begin() + long(a));
    }
    const double y0 = opt_.y0;
    B0 = y0 * std::sqrt(y0) * s_kernel_contour_multi(p_, ax, {y0}).front();
  } else {
    const Complex norm = kSqrtPi * std::exp(kI * kPi * p_.mu) / std::cosh(kPi * ax);
    for (std::size_t j = 0; j < ys_.size(); ++j) psi[j] = norm * g_inverse_kernel(p_, ax, ys_[j]);
    B0 = norm * g_inverse_potential(p_, ax, opt_.y0);
  }
  Complex acc = 0.0;
  for (std::size_t j = 0; j < ys_.size(); ++j) acc += wy_[j] * psi[j] * G_[j];
  // int_0^{y0} y^{-1/2} B' G dy with G ~ C y^{1/2} and B oscillating about zero
  acc += B0 * G0_ / std::sqrt(opt_.y0);
  const double pre = ax * std::sinh(2.0 * kPi * ax) / (2.0 * kPi * kPi);
  out.value = pre * acc;
  out.nodes_used = static_cast<long>(ys_.size());
  out.route = route_ == KernelRoute::Contour ? "adjoint-inverse-contour" : "adjoint-inverse-legendre";
  return out;
}

EvalResult invert_adjoint(const TransformParams& p, const AdjointImage& G, double x_index,
                          InvertAdjointOptions opt) {
  return AdjointInverter(p, G, opt)(x_index);
}

}  // namespace lebedev
