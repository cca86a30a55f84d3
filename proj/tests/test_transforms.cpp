#include <cmath>

#include "doctest.h"
#include "lebedev/errors.hpp"
#include "lebedev/registry.hpp"
#include "lebedev/transforms.hpp"
#include "oracles.hpp"

using namespace lebedev;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

double phi0_oracle(double tau, double y) {
  const double P = oracle::conical_p(tau, std::sqrt((1.0 + y) / y));
  return std::pow(oracle::pi, 1.5) / std::cosh(oracle::pi * tau) * P * P;
}

}  // namespace

TEST_CASE("routes and rules") {
  CHECK(resolve_route(KernelRoute::Auto, 0.0) == KernelRoute::Legendre);
  CHECK(resolve_route(KernelRoute::Auto, -0.3) == KernelRoute::Contour);
  CHECK(resolve_route(KernelRoute::Legendre, -0.3) == KernelRoute::Legendre);
  CHECK(resolve_route(KernelRoute::Contour, 0.0) == KernelRoute::Contour);
  const TauRule r = composite_gauss_rule(0.0, 3.0, 0.7, 10);
  CHECK(r.nodes.size() == 50);
  Complex s = 0.0;
  for (std::size_t j = 0; j < r.nodes.size(); ++j) s += r.weights[j] * std::exp(-r.nodes[j]);
  CHECK(std::abs(s - (1.0 - std::exp(-3.0))) < 1e-15);
  QuadratureSpec q;
  CHECK(std::abs(integrate_half_line([](double y) { return Complex(std::exp(-y) / std::sqrt(y)); }, q)
                     .value -
                 kSqrtPi) < 1e-11);
}

TEST_CASE("forward transform at mu = 0 against the Mehler integral") {
  const auto p = TransformParams::make(0.0);
  const auto f = make_test_function("exp");
  for (double tau : {0.0, 1.0, 2.5}) {
    const double ref = oracle::half_line([&](double y) { return phi0_oracle(tau, y) * std::exp(-y); },
                                         -40.0, 5.0, 120);
    CHECK(rel(forward(p, f, tau).value, ref) < 1e-10);
  }
}

TEST_CASE("forward transform routes") {
  const auto p = TransformParams::make(-0.3);
  const auto f = make_test_function("exp");
  CHECK(std::abs(forward(p, f, 1.0).value - 0.188671602929791) < 1e-12);
  const auto g = make_test_function("exp-pow:0.3");
  for (double tau : {0.0, 0.5, 2.0}) {
    const Complex d = forward(p, g, tau).value;
    CHECK(rel(forward_via_mellin(p, g, tau).value, d) < 1e-9);
  }
  CHECK(forward(p, make_test_function("zero"), 1.0).value == Complex(0.0));
  // the Barnes image is known in closed form
  const auto b = make_test_function("barnes:2,2", -0.3);
  const auto B = make_spectral_function("barnes-image:2,2");
  CHECK(rel(forward(p, b, 0.7).value, B.eval(0.7)) < 1e-10);
  CHECK(rel(forward_via_mellin(p, b, 0.7).value, B.eval(0.7)) < 1e-8);
  CHECK(rel(forward_image(p, b).eval(0.7), B.eval(0.7)) < 1e-8);
}

TEST_CASE("forward preconditions") {
  const auto p = TransformParams::make(-0.3);
  CHECK_THROWS_AS(forward_via_mellin(p, make_test_function("one-over-1px"), 1.0), PreconditionError);
  CHECK_THROWS_AS(phi_aux(TransformParams::make(-0.3, -0.4), make_test_function("exp"), 1.0),
                  ContourError);
}

TEST_CASE("inversion of the forward transform") {
  const auto p0 = TransformParams::make(0.0);
  CHECK_THROWS_AS(ForwardInverter(p0, forward_image(p0, make_test_function("exp"))), DecayError);
  CHECK(std::abs(invert_forward(p0, make_spectral_function("zero"), 1.0).value) < 1e-300);
  for (double mu : {0.0, -0.3}) {
    const auto p = TransformParams::make(mu);
    const auto f = make_test_function("barnes:2,2", mu);
    const ForwardInverter inv(p, make_spectral_function("barnes-image:2,2"));
    const std::vector<double> xs = {0.5, 1.0, 2.0};
    const auto got = inv.evaluate(xs);
    for (std::size_t i = 0; i < xs.size(); ++i) CHECK(rel(got[i].value, f.eval(xs[i])) < 1e-6);
  }
}

TEST_CASE("antiderivative expansion") {
  const auto p = TransformParams::make(0.0);
  CHECK_THROWS_AS(expansion_antiderivative(p, make_test_function("exp"), 1.0), DecayError);
  const auto f = make_test_function("barnes:2,2", 0.0);
  const auto r = expansion_antiderivative(p, f, 1.0);
  CHECK(rel(r.rhs.value, r.lhs.value) < 1e-8);
  CHECK_THROWS_AS(expansion_antiderivative(p, f, 1.0, ExpansionForm::Remark, KernelRoute::Contour),
                  PreconditionError);
}

TEST_CASE("adjoint transform") {
  const auto p0 = TransformParams::make(0.0);
  const auto g = make_spectral_function("gauss-even");
  for (double x : {0.3, 2.0}) {
    const double ref =
        2.0 * oracle::integrate([&](double t) { return phi0_oracle(t, x) * std::exp(-t * t); }, 0.0, 9.0, 18);
    CHECK(rel(adjoint(p0, g, x).value, ref) < 1e-10);
  }
  const auto p = TransformParams::make(-0.3);
  for (double x : {0.1, 1.0, 10.0}) CHECK(rel(adjoint_fixed(p, g, x), adjoint(p, g, x).value) < 1e-10);
  CHECK(adjoint(p, make_spectral_function("zero"), 1.0).value == Complex(0.0));
  const auto G = adjoint_image(p, make_spectral_function("tau2-gauss"));
  CHECK(G.even);
  CHECK(G.vanishing_order == 2);
  CHECK(rel(G.eval(1.0), adjoint_fixed(p, make_spectral_function("tau2-gauss"), 1.0)) < 1e-15);
}

TEST_CASE("Mellin identity for the adjoint transform") {
  const auto p = TransformParams::make(-0.3, -0.1);
  const auto [lhs, rhs] = adjoint_mellin_identity(p, make_spectral_function("gauss-even"), 1.0);
  CHECK(rel(lhs, rhs) < 1e-7);
}

TEST_CASE("adjoint inversion hypotheses") {
  const auto p = TransformParams::make(-0.3);
  CHECK_THROWS_AS(AdjointInverter(p, adjoint_image(p, make_spectral_function("gauss-even"))),
                  HypothesisError);
  auto G = adjoint_image(p, make_spectral_function("tau2-gauss"));
  G.even = false;
  CHECK_THROWS_AS(invert_adjoint(p, G, 1.0), HypothesisError);
}
