#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "lebedev/complexfn.hpp"

namespace lebedev {

/// Open interval of Re s on which a Mellin transform converges absolutely.
struct Strip {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool contains(double s) const { return s > lo && s < hi; }
};

/// Asymptotic envelope |F(tau)| ~ tau^power * exp(-rate*|tau|).
/// rate = +inf stands for faster than any exponential.
struct Decay {
  double rate = std::numeric_limits<double>::infinity();
  double power = 0.0;
};

/// A function on (0, inf) with declared Mellin data.
/// Membership f in L_{nu,1} is read off the strip.
struct TestFunction {
  std::string name;
  std::function<Complex(double)> eval;
  std::function<Complex(Complex)> mellin;  // empty when no closed form
  Strip strip;
  Decay spectral_decay{kPi, -1.0};  // declared decay of the forward image
  std::vector<std::string> classes;

  bool in_L1(double nu) const { return strip.contains(nu); }
  bool has_mellin() const { return static_cast<bool>(mellin); }
};

/// A function of the index tau.
struct SpectralFunction {
  std::string name;
  std::function<Complex(double)> eval;
  bool even = false;
  int vanishing_order = 0;     // g and its first vanishing_order-1 derivatives vanish at 0
  double analytic_strip = 0.0; // g(z/i) analytic for |Re z| < analytic_strip
  Decay decay;
  double tau_cut = 40.0;       // |g| negligible beyond
  std::vector<std::string> classes;

  /// g in L_1(R; |tau|^k e^{c|tau|} d tau)
  bool integrable_with(double c, double k = 0.0) const {
    if (decay.rate > c) return true;
    return decay.rate == c && decay.power + k < -1.0;
  }
};

}  // namespace lebedev
