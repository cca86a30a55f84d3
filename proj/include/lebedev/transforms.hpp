#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lebedev/functions.hpp"
#include "lebedev/kernel.hpp"

namespace lebedev {

/// How the inversion kernels are evaluated.
/// Legendre: the closed P*(Q+Q) product, with finite differences for the adjoint kernel.
/// Contour: the Mellin-Barnes integrals, one contour shared by many points.
/// Auto: Legendre at mu = 0, Contour otherwise.
enum class KernelRoute { Auto, Legendre, Contour };

KernelRoute resolve_route(KernelRoute r, Complex mu);

/// Composite Gauss-Legendre rule on [a, b].
struct TauRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
TauRule composite_gauss_rule(double a, double b, double panel, int order);

/// int_0^inf g(y) dy, split at y = 1 and integrated in log y.
EvalResult integrate_half_line(const RealFn& g, const QuadratureSpec& spec);

/// Forward transform by direct quadrature in y.
EvalResult forward(const TransformParams& p, const TestFunction& f, double tau);

/// Forward transform from the Mellin transform of f on Re s = nu + 1/2.
EvalResult forward_via_mellin(const TransformParams& p, const TestFunction& f, double tau);

/// Auxiliary function phi(x) of the Bessel composition, by a contour integral
/// against f*(3/2 - s). Needs p.nu in (-1/4, min(0, -Re mu)).
EvalResult phi_aux(const TransformParams& p, const TestFunction& f, double x);

/// (sqrt(pi)/cosh(pi tau)) int K_{i tau}(x^{-1/2}) [I_{i tau} + I_{-i tau}](x^{-1/2}) phi(x) dx/x
EvalResult forward_via_bessel(const TransformParams& p, const std::function<Complex(double)>& phi,
                              double tau);

/// Spectral function tau -> F(tau), carrying f's declared decay. Uses the Mellin
/// route when f has a closed Mellin transform on Re s = 1 - nu, direct quadrature otherwise.
SpectralFunction forward_image(const TransformParams& p, const TestFunction& f);

struct InvertForwardOptions {
  double tau_max = 0.0;  // 0: from the declared decay of F
  KernelRoute route = KernelRoute::Auto;
  double step_rel = 1e-3;
  double panel = 1.0;
  int order = 20;
};

/// Smallest tau at which tau sinh(2 pi tau) |S| |F| has dropped below ~1e-14 of its scale.
double default_tau_max(const SpectralFunction& F);

/// Inversion of the forward transform on a fixed tau rule; F is sampled once.
class ForwardInverter {
 public:
  ForwardInverter(const TransformParams& p, const SpectralFunction& F,
                  InvertForwardOptions opt = {});
  std::vector<EvalResult> evaluate(const std::vector<double>& xs) const;
  EvalResult operator()(double x) const { return evaluate({x}).front(); }
  const TauRule& rule() const { return rule_; }

 private:
  TransformParams p_;
  InvertForwardOptions opt_;
  KernelRoute route_;
  TauRule rule_;
  std::vector<Complex> weighted_;  // w_j tau_j sinh(2 pi tau_j) F(tau_j)
};

EvalResult invert_forward(const TransformParams& p, const SpectralFunction& F, double x,
                          InvertForwardOptions opt = {});

/// Both sides of the antiderivative expansion.
struct TwoSided {
  EvalResult lhs;
  EvalResult rhs;
};
/// Theorem: Legendre product at x, forward image inside.
/// Remark: kernels swapped (square at x, product inside).
enum class ExpansionForm { Theorem, Remark };

/// lhs = int_x^inf y^{1/2} f(y) dy, rhs = the tau-expansion.
/// `F` overrides the forward image (sampled on demand) when non-null.
TwoSided expansion_antiderivative(const TransformParams& p, const TestFunction& f, double x,
                                  ExpansionForm form = ExpansionForm::Theorem,
                                  KernelRoute route = KernelRoute::Auto,
                                  const std::function<Complex(double)>* F = nullptr);

/// Adjoint transform: int Phi_tau(x) g(tau) d tau over R.
EvalResult adjoint(const TransformParams& p, const SpectralFunction& g, double x);

/// Same integral on a fixed composite Gauss rule (used for grids and the wedge solver).
Complex adjoint_fixed(const TransformParams& p, const SpectralFunction& g, double x,
                      double theta = 0.0);

/// (lhs, rhs) of the Mellin identity for the adjoint transform at y.
std::pair<Complex, Complex> adjoint_mellin_identity(const TransformParams& p,
                                                    const SpectralFunction& g, double y);

/// G = adjoint image of g together with the declarations of g that the
/// adjoint inversion relies on.
struct AdjointImage {
  std::string name;
  std::function<Complex(double)> eval;
  bool even = false;
  int vanishing_order = 0;
  double analytic_strip = 0.0;
};
AdjointImage adjoint_image(const TransformParams& p, const SpectralFunction& g);

struct InvertAdjointOptions {
  KernelRoute route = KernelRoute::Auto;
  double y0 = 1e-6;     // lower cut, closed by the boundary term
  double w_max = 24.0;  // upper limit in log y
  double panel = 0.5;
  int order = 16;
};

/// Adjoint inversion on a fixed log-y rule; G is sampled once.
class AdjointInverter {
 public:
  AdjointInverter(const TransformParams& p, const AdjointImage& G, InvertAdjointOptions opt = {});
  EvalResult operator()(double x_index) const;

 private:
  TransformParams p_;
  InvertAdjointOptions opt_;
  KernelRoute route_;
  std::vector<double> ys_, wy_;
  std::vector<Complex> G_;
  Complex G0_;
};

EvalResult invert_adjoint(const TransformParams& p, const AdjointImage& G, double x_index,
                          InvertAdjointOptions opt = {});

}  // namespace lebedev
