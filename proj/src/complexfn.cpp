#include "lebedev/complexfn.hpp"

#include <array>
#include <cmath>
#include <string>

#include "lebedev/errors.hpp"

namespace lebedev {

namespace {

// Godfrey's g = 607/128 Lanczos set.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5};

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640561764;

// log Gamma for Re z >= 1/2.
Complex lanczos_log(Complex z) {
  z -= 1.0;
  Complex sum = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) sum += kLanczos[k] / (z + double(k));
  const Complex t = z + kLanczosG + 0.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(sum);
}

void check_pole(Complex z, const char* who) {
  if (near_nonpositive_integer(z))
    throw PoleError(std::string(who) + ": argument at a pole of Gamma");
}

}  // namespace

bool near_nonpositive_integer(Complex z) {
  if (z.real() > 0.5) return false;
  const double n = std::round(z.real());
  return std::abs(z - Complex(n, 0.0)) < kPoleEps;
}

Complex sin_pi(Complex z) {
  const double n = std::round(z.real());
  const double r = z.real() - n;  // |r| <= 1/2
  const double sgn = (static_cast<long long>(n) % 2 == 0) ? 1.0 : -1.0;
  const double b = kPi * z.imag();
  return sgn * Complex(std::sin(kPi * r) * std::cosh(b), std::cos(kPi * r) * std::sinh(b));
}

Complex cos_pi(Complex z) { return sin_pi(z + 0.5); }

Complex ln_gamma(Complex z) {
  check_pole(z, "ln_gamma");
  if (z.real() >= 0.5) return lanczos_log(z);
  // Upward recurrence keeps the continuous branch.
  const int n = static_cast<int>(std::ceil(0.5 - z.real()));
  Complex acc = 0.0;
  for (int k = 0; k < n; ++k) acc += std::log(z + double(k));
  return lanczos_log(z + double(n)) - acc;
}

Complex gamma(Complex z) {
  check_pole(z, "gamma");
  if (z.real() >= 0.5) return std::exp(lanczos_log(z));
  return kPi / (sin_pi(z) * std::exp(lanczos_log(1.0 - z)));
}

Complex rgamma(Complex z) {
  if (near_nonpositive_integer(z)) return 0.0;
  if (z.real() >= 0.5) return std::exp(-lanczos_log(z));
  return sin_pi(z) * std::exp(lanczos_log(1.0 - z)) / kPi;
}

Complex beta(Complex a, Complex b) {
  check_pole(a, "beta");
  check_pole(b, "beta");
  if (near_nonpositive_integer(a + b)) return 0.0;
  return std::exp(ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b));
}

}  // namespace lebedev
