#pragma once

#include <string>
#include <vector>

#include "lebedev/functions.hpp"

namespace lebedev {

/// Test functions by name:
///   exp            e^{-y}
///   exp-pow:a      y^a e^{-y}
///   smooth-bump    y^{1/2} e^{-y-1/y}
///   one-over-1px   1/(1+y)
///   barnes:a,b     f with f*(z) = G(2-z)G(2-mu-z)G(a-3/2+z)G(b-3/2+z) / (G(3/2-z)G(z-1-mu));
///                  its forward image is G(a+-i tau)G(b+-i tau)/G(a+b). Depends on mu.
///   zero
/// Throws PreconditionError for an unknown name.
TestFunction make_test_function(const std::string& spec, Complex mu = 0.0);

/// Spectral functions: gauss-even (e^{-tau^2}), tau2-gauss (tau^2 e^{-tau^2}), zero,
/// barnes-image:a,b (closed form forward image of barnes:a,b).
SpectralFunction make_spectral_function(const std::string& spec);

std::vector<std::string> test_function_names();
std::vector<std::string> spectral_function_names();

/// Mellin transform of barnes:a,b
Complex barnes_mellin(double a, double b, Complex mu, Complex z);

}  // namespace lebedev
