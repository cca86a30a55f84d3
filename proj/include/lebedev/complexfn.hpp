#pragma once

#include <complex>

namespace lebedev {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kSqrtPi = 1.77245385090551602729816748334114518;
inline constexpr double kPoleEps = 1e-14;

/// True when z lies within kPoleEps of 0, -1, -2, ...
bool near_nonpositive_integer(Complex z);

/// sin(pi z) with exact argument reduction on the real part.
Complex sin_pi(Complex z);
Complex cos_pi(Complex z);

/// Analytic continuation of log Gamma from the positive real axis.
/// Agrees with the principal log of Gamma up to multiples of 2 pi i.
/// Throws PoleError at nonpositive integers.
Complex ln_gamma(Complex z);

/// Gamma(z); reflection for Re z < 1/2.
Complex gamma(Complex z);

/// 1/Gamma(z), exactly zero at the poles of Gamma.
Complex rgamma(Complex z);

/// B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b).
Complex beta(Complex a, Complex b);

}  // namespace lebedev
