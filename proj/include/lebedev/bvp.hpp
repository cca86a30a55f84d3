#pragma once

#include <iosfwd>
#include <vector>

#include "lebedev/functions.hpp"
#include "lebedev/kernel.hpp"

namespace lebedev {

/// u(r, theta) on the wedge 0 <= theta < beta with u(r, 0) given by the adjoint transform of g.
struct WedgeProblem {
  Complex mu{-0.5, 0.0};
  double beta = 0.6;
  SpectralFunction g;

  /// Throws PreconditionError unless Re mu < 0 and 0 < beta < pi,
  /// GrowthError unless g is declared integrable against e^{beta |tau|}.
  void validate() const;
  TransformParams params() const { return TransformParams::make(mu); }
};

/// u(r, theta) by a fixed Gauss rule in tau.
EvalResult solve_wedge(const WedgeProblem& prob, double r, double theta);

/// d[a][b] = d^a/dr^a d^b/dtheta^b u for a + b <= 3.
struct PolarStack {
  Complex d[4][4]{};
};
PolarStack polar_stack(const WedgeProblem& prob, double r, double theta);

/// Cartesian partials of u up to third order at (x, y).
struct CartesianStack {
  Complex u, ux, uy, uxx, uxy, uyy, uxxx, uxxy, uxyy, uyyy;
};
/// Converts a polar stack taken at (r, theta) = polar(x, y).
CartesianStack to_cartesian(const PolarStack& s, double x, double y);

/// Corrected: the operator u(r, theta) actually satisfies, 3r(r + 1/2) u_rr in polar form
/// and the matching second order coefficients in Cartesian form.
/// AsPrinted: 3(r + 1/2) u_rr, and (3/(2r) + 2)(...) + (3 + r)xy/r^2 u_xy.
enum class PdeForm { Corrected, AsPrinted };

/// Relative residual of the polar PDE (scale = largest term).
double pde_residual_polar(const WedgeProblem& prob, double r, double theta,
                          PdeForm form = PdeForm::Corrected);
double pde_residual_polar_of(const PolarStack& s, Complex mu, double r,
                             PdeForm form = PdeForm::Corrected);

/// Relative residual of the Cartesian PDE at (x, y).
double pde_residual_cartesian(const WedgeProblem& prob, double x, double y,
                              PdeForm form = PdeForm::Corrected);
double pde_residual_cartesian_of(const CartesianStack& c, Complex mu, double x, double y,
                                 PdeForm form = PdeForm::Corrected);

struct BoundaryReport {
  std::vector<double> r;
  std::vector<Complex> wedge;    // solve_wedge(r, 0)
  std::vector<Complex> adjoint;  // adjoint(p, g, r)
  double max_rel_dev = 0.0;
};
BoundaryReport boundary_check(const WedgeProblem& prob, const std::vector<double>& r_grid);

struct FieldGrid {
  std::vector<double> r_values;
  std::vector<double> theta_values;
  std::vector<std::vector<Complex>> u;         // u[i][j] at (r_i, theta_j)
  std::vector<std::vector<double>> residual;  // empty unless requested
};
FieldGrid field_grid(const WedgeProblem& prob, const std::vector<double>& rs,
                     const std::vector<double>& thetas, bool with_residual = false);

/// Columns r, theta, re_u, im_u, residual.
void write_csv(const FieldGrid& grid, std::ostream& os);

}  // namespace lebedev
