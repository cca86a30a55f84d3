#pragma once

#include <string>
#include <vector>

#include "lebedev/complexfn.hpp"
#include "lebedev/quad.hpp"
#include "lebedev/specfun.hpp"

namespace lebedev {

/// Order mu, contour abscissa nu and quadrature controls.
struct TransformParams {
  Complex mu{0.0, 0.0};
  double nu = -0.25;
  QuadratureSpec quad;

  /// nu at the middle of (-1/2, -Re mu).
  static TransformParams make(Complex mu);
  static TransformParams make(Complex mu, double nu);

  bool mu_is_real() const { return mu.imag() == 0.0; }
  /// Throws PreconditionError unless Re mu < 1/2.
  void require_order() const;
  /// Throws ContourError unless nu lies in (-1/2, -Re mu).
  void require_kernel_strip() const;
};

struct KernelPoint {
  double tau = 0.0;
  double x = 1.0;
};

/// Gamma(1/2 + i tau - mu) Gamma(1/2 - i tau - mu)
Complex gamma_pair(Complex mu, double tau);

/// Phi_tau(x) from the square of the conical function.
Complex phi_direct(const TransformParams& p, const KernelPoint& k);

/// Phi_tau(x) as a Mellin-Barnes integral on Re s = p.nu.
EvalResult phi_mellin_barnes(const TransformParams& p, const KernelPoint& k);

/// Phi_tau(x) as a cosine transform of Q_{-1/2-mu}; x >= 1 unless exploratory.
EvalResult phi_fourier_cosine(const TransformParams& p, const KernelPoint& k,
                              bool exploratory = false);

/// Phi and its first three x-derivatives from the Mellin-Barnes integrand.
struct PhiJet {
  Complex d[4];
  double err[4];
};
PhiJet phi_mb_jet(const TransformParams& p, const KernelPoint& k);

/// Which coefficient multiplies Phi'' in the third order ODE.
/// Corrected: 3x^2(1+2x), the form Phi actually satisfies (it follows from the
/// operator form in x d/dx). AsPrinted: 3x(1+2x).
enum class OdeForm { Corrected, AsPrinted };

/// Relative residual of the third order ODE satisfied by Phi_tau.
double ode_residual(const TransformParams& p, const KernelPoint& k,
                    OdeForm form = OdeForm::Corrected);
/// Same residual for a supplied derivative stack.
double ode_residual_of(const Complex d[4], Complex mu, double tau, double x,
                       OdeForm form = OdeForm::Corrected);

/// P^mu_{-1/2+i tau}(X) [Q^{-mu}_{-1/2+i tau}(X) + Q^{-mu}_{-1/2-i tau}(X)], X = sqrt((1+y)/y).
Complex legendre_pq_sum(Complex mu, double tau, double y);

/// Inversion kernel S_mu(x, tau), closed Legendre form.
/// Adds a BranchWarning to `warnings` for non-real mu.
Complex s_kernel(const TransformParams& p, const KernelPoint& k,
                 std::vector<std::string>* warnings = nullptr);

/// S_mu(x, tau) from its contour integral at Re s = 3/2 - p.nu.
EvalResult s_kernel_contour(const TransformParams& p, const KernelPoint& k);

/// Abscissa nu usable for the S contour: p.nu when 3/2 - p.nu lies in
/// (3/2, min(2, 2 - Re mu)), otherwise the middle of the admissible range.
double s_contour_nu(const TransformParams& p);

/// S_mu(x_j, tau) for several x sharing one contour (nodes reused).
std::vector<Complex> s_kernel_contour_multi(const TransformParams& p, double tau,
                                            const std::vector<double>& xs);

/// y^{-1/2} d/dy [y^{3/2} S_mu(y, x_index)] for several y, by its own contour
/// (the limit kernel of the adjoint inversion, valid for all Re mu < 1/2).
std::vector<Complex> psi0_kernel_multi(const TransformParams& p, double x_index,
                                       const std::vector<double>& ys);

/// y^{-1/2} * legendre_pq_sum(mu, x_index, y)
Complex g_inverse_potential(const TransformParams& p, double x_index, double y);

/// (y^{-1/2} d/dy y^{-1/2}) applied to the Legendre product, by Richardson
/// extrapolated central differences.
Complex g_inverse_kernel(const TransformParams& p, double x_index, double y);

/// Bound constant C_{mu,nu} with |Phi_tau(x)| <= C x^{-nu}.
double norm_constant(const TransformParams& p);

}  // namespace lebedev
