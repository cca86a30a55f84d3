#pragma once

#include "lebedev/complexfn.hpp"

namespace lebedev {

/// Gauss hypergeometric 2F1(a,b;c;z) for |z| < 1 or real z <= 0.
Complex hyp2f1(Complex a, Complex b, Complex c, Complex z);

/// Arguments of P^mu_nu(x), Q^mu_nu(x) on (1, inf).
/// xm1 carries x - 1 without cancellation.
struct LegendreArgs {
  Complex mu;
  Complex nu;
  double x;
  double xm1;

  LegendreArgs(Complex mu_, Complex nu_, double x_);
  LegendreArgs(Complex mu_, Complex nu_, double x_, double xm1_);

  /// Argument sqrt((1+y)/y) of the kernels, with x - 1 formed exactly.
  static LegendreArgs kernel(Complex mu, Complex nu, double y);
  /// Conical degree nu = -1/2 + i tau
  static LegendreArgs conical(Complex mu, double tau, double x);
};

/// P^mu_nu(x), x > 1. Series route near 1, integral route far from 1.
Complex legendre_p(const LegendreArgs& a);
/// Pfaff-transformed hypergeometric series
Complex legendre_p_near(const LegendreArgs& a);
/// Laplace-type integral, valid for Re mu < 1/2.
Complex legendre_p_far(const LegendreArgs& a);

/// Q^mu_nu(x), x > 1 (Hobson normalization with e^{i mu pi}).
Complex legendre_q(const LegendreArgs& a);
/// 1/x^2 series
Complex legendre_q_series(const LegendreArgs& a);
/// Connection with P^{+-mu}; requires mu away from the integers.
Complex legendre_q_connection(const LegendreArgs& a);
/// Integral over (xi, inf); requires Re mu < 1/2, Re(nu+mu) > -1.
Complex legendre_q_integral(const LegendreArgs& a);

/// I_order(x) by the ascending series.
Complex bessel_i(Complex order, double x);

/// K_{i tau}(x) = int_0^inf e^{-x cosh t} cos(tau t) dt.
double bessel_k_imag(double tau, double x);
/// e^{x} K_{i tau}(x)
double bessel_k_imag_scaled(double tau, double x);

/// I_a(x) K_b(x) from the large-argument expansions (x >~ 20).
Complex bessel_ik_asymptotic(Complex a, Complex b, double x);

/// K_{i tau}(z) [I_{i tau}(z) + I_{-i tau}(z)], real for real tau, z.
double bessel_kii_product(double tau, double z);

}  // namespace lebedev
