#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lebedev/complexfn.hpp"
#include "lebedev/functions.hpp"

namespace lebedev {

struct QuadratureSpec {
  double rel_tol = 1e-12;
  double abs_tol = 1e-15;
  long max_nodes = 200000;
  double truncation_T = 14.0;

  void validate() const;
};

struct EvalResult {
  Complex value{0.0, 0.0};
  double err_estimate = 0.0;
  long nodes_used = 0;
  double truncation_T_used = 0.0;
  std::string route;
  std::vector<std::string> warnings;
};

using RealFn = std::function<Complex(double)>;
using ContourFn = std::function<Complex(Complex)>;

/// Adaptive Gauss-Kronrod (7/15) on [a, b].
EvalResult integrate_gk(const RealFn& f, double a, double b, double rel_tol, double abs_tol,
                        long max_nodes = 200000, bool throw_on_fail = true);

/// Integral over [a, inf): geometric panels, each adaptive, with a tail estimate.
/// `scale` sets the first panel length.
EvalResult integrate_semi_infinite(const RealFn& f, const QuadratureSpec& spec, double a = 0.0,
                                   double scale = 1.0);

/// Finite range integral of an integrand oscillating with angular frequency omega.
/// Splits at half periods when omega*(b-a) > 20.
EvalResult integrate_oscillatory(const RealFn& f, double a, double b, double omega,
                                 const QuadratureSpec& spec);

/// [a, inf) with oscillation frequency omega and decaying amplitude.
EvalResult integrate_semi_infinite_osc(const RealFn& f, double a, double omega,
                                       const QuadratureSpec& spec, double scale = 1.0);

/// Sum of half-period panels on [a, inf) accelerated by the epsilon algorithm.
/// For integrands whose amplitude decays only algebraically.
EvalResult integrate_oscillatory_tail(const RealFn& f, double a, double omega,
                                      const QuadratureSpec& spec, int max_panels = 400);

/// Integrand receives (x, x - a, b - x) so endpoint singularities can be
/// evaluated without cancellation.
using EndpointFn = std::function<Complex(double, double, double)>;

/// Tanh-sinh quadrature on [a, b].
EvalResult tanh_sinh(const EndpointFn& f, double a, double b, double rel_tol,
                     int max_level = 9);

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

struct VerticalLineOptions {
  bool conjugate_symmetric = false;  // F(conj s) = conj F(s)
  double T = 0.0;                    // 0: use spec.truncation_T
  double h = 0.0;                    // 0: default step from rel_tol
  double T_max = 600.0;
};

/// (1/2 pi i) * integral of F over Re s = gamma_abscissa.
EvalResult integrate_vertical_line(const ContourFn& F, double gamma_abscissa,
                                   const QuadratureSpec& spec,
                                   const VerticalLineOptions& opt = {});

/// Several integrands sharing the nodes. F writes n values for each s.
using ContourVecFn = std::function<void(Complex, std::span<Complex>)>;
struct VerticalLineMulti {
  std::vector<Complex> values;
  std::vector<double> err;
  long nodes_used = 0;
  double truncation_T_used = 0.0;
  std::vector<std::string> warnings;
};
VerticalLineMulti integrate_vertical_line_multi(const ContourVecFn& F, std::size_t n,
                                                double gamma_abscissa,
                                                const QuadratureSpec& spec,
                                                const VerticalLineOptions& opt = {});

/// f*(s) by quadrature on [0,1] and [1,inf) in logarithmic variables.
Complex mellin_transform_numeric(const TestFunction& f, Complex s,
                                 const QuadratureSpec& spec = {});

/// (1/2 pi i) * integral of Fstar(s) x^{-s} over Re s = nu.
Complex mellin_invert_numeric(const ContourFn& Fstar, double nu, double x,
                              const QuadratureSpec& spec = {}, bool conjugate_symmetric = false);

/// (integral |f|^p x^{nu p - 1} dx)^{1/p}
double weighted_norm(const TestFunction& f, double nu, double p,
                     const QuadratureSpec& spec = {});

/// Reads key=value lines (rel_tol, abs_tol, max_nodes, truncation_T) into spec.
/// Unknown keys are returned, '#' starts a comment.
std::vector<std::string> apply_config_file(const std::string& path, QuadratureSpec& spec);
std::vector<std::string> apply_config_text(const std::string& text, QuadratureSpec& spec);

}  // namespace lebedev
