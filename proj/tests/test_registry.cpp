#include <cmath>

#include "doctest.h"
#include "lebedev/complexfn.hpp"
#include "lebedev/errors.hpp"
#include "lebedev/quad.hpp"
#include "lebedev/registry.hpp"

using namespace lebedev;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_CASE("names resolve") {
  for (const auto& n : {"exp", "exp-pow:0.3", "smooth-bump", "one-over-1px", "barnes:1,1.5", "zero"})
    CHECK_NOTHROW(make_test_function(n, -0.3));
  for (const auto& n : {"gauss-even", "tau2-gauss", "barnes-image:2,2", "zero"})
    CHECK_NOTHROW(make_spectral_function(n));
  CHECK_THROWS_AS(make_test_function("nope"), PreconditionError);
  CHECK_THROWS_AS(make_test_function("exp-pow:"), PreconditionError);
  CHECK_THROWS_AS(make_test_function("barnes:1"), PreconditionError);
  CHECK_THROWS_AS(make_test_function("barnes:-1,2"), PreconditionError);
  CHECK_THROWS_AS(make_spectral_function("gauss-odd"), PreconditionError);
  CHECK_FALSE(test_function_names().empty());
  CHECK_FALSE(spectral_function_names().empty());
}

TEST_CASE("elementary test functions and their Mellin transforms") {
  const auto f = make_test_function("exp-pow:0.3");
  CHECK(rel(f.eval(2.0), std::pow(2.0, 0.3) * std::exp(-2.0)) < 1e-15);
  CHECK(rel(f.mellin(1.2), std::tgamma(1.5)) < 1e-14);
  CHECK(f.in_L1(0.0));
  CHECK_FALSE(f.in_L1(-0.5));
  const auto h = make_test_function("one-over-1px");
  // int x^{s-1}/(1+x) dx = pi / sin(pi s)
  CHECK(rel(mellin_transform_numeric(h, 0.4), kPi / std::sin(0.4 * kPi)) < 1e-10);
  CHECK(h.in_L1(0.5));
  CHECK_FALSE(h.in_L1(1.0));
  const auto z = make_test_function("zero");
  CHECK(z.eval(3.0) == Complex(0.0));
}

TEST_CASE("spectral functions") {
  const auto g = make_spectral_function("gauss-even");
  CHECK(g.even);
  CHECK(rel(g.eval(1.5), std::exp(-2.25)) < 1e-15);
  CHECK(g.integrable_with(2.9));
  const auto g2 = make_spectral_function("tau2-gauss");
  CHECK(g2.vanishing_order == 2);
  CHECK(rel(g2.eval(1.5), 2.25 * std::exp(-2.25)) < 1e-15);
  const auto b = make_spectral_function("barnes-image:1,1.5");
  CHECK(b.integrable_with(kPi, 1.0));
  CHECK_FALSE(b.integrable_with(2.0 * kPi, 1.0));
  for (double t : {0.0, 0.7, 3.0}) {
    const Complex i(0.0, t);
    const Complex ref = lebedev::gamma(1.0 + i) * lebedev::gamma(1.0 - i) * lebedev::gamma(1.5 + i) *
                        lebedev::gamma(1.5 - i) / lebedev::gamma(2.5);
    CHECK(rel(b.eval(t), ref) < 1e-13);
  }
}

TEST_CASE("Barnes functions invert their Mellin transform") {
  for (double mu : {0.0, -0.3}) {
    const auto f = make_test_function("barnes:2,2", mu);
    REQUIRE(f.has_mellin());
    const double s = 1.2;
    CHECK(f.strip.contains(s));
    CHECK(barnes_mellin(2.0, 2.0, mu, 1.0 + mu) == Complex(0.0));
    CHECK(rel(mellin_transform_numeric(f, s), barnes_mellin(2.0, 2.0, mu, s)) < 1e-9);
    CHECK(rel(f.mellin(Complex(1.2, 0.5)), barnes_mellin(2.0, 2.0, mu, Complex(1.2, 0.5))) < 1e-15);
  }
  // far outside the tabulated range the contour is moved, values stay finite and decay
  const auto f = make_test_function("barnes:1,1.5", 0.0);
  const double big = std::abs(f.eval(1e6)), small = std::abs(f.eval(1e-6));
  CHECK(std::isfinite(big));
  CHECK(std::isfinite(small));
  CHECK(big < 1e-6);
}
