#include "lebedev/registry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <sstream>

#include "lebedev/errors.hpp"
#include "lebedev/quad.hpp"

namespace lebedev {

namespace {

std::vector<double> parse_numbers(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw PreconditionError("bad numeric parameter: " + item);
    out.push_back(v);
  }
  return out;
}

// Piecewise barycentric Chebyshev interpolant of f(e^w) on [w0, w1].
class LogChebTable {
 public:
  static constexpr int kNodes = 21;

  LogChebTable(double w0, double w1, double width) : w0_(w0), width_(width) {
    panels_ = static_cast<int>(std::ceil((w1 - w0) / width));
    for (int k = 0; k < kNodes; ++k) cheb_[k] = -std::cos(kPi * k / (kNodes - 1));
  }
  double lo() const { return w0_; }
  double hi() const { return w0_ + panels_ * width_; }
  int panels() const { return panels_; }
  double node(int panel, int k) const {
    return w0_ + width_ * (panel + 0.5 * (cheb_[k] + 1.0));
  }
  std::vector<Complex>& values() { return vals_; }

  Complex operator()(double w) const {
    int pnl = static_cast<int>(std::floor((w - w0_) / width_));
    pnl = std::clamp(pnl, 0, panels_ - 1);
    const double t = 2.0 * (w - w0_ - pnl * width_) / width_ - 1.0;
    const Complex* v = &vals_[static_cast<std::size_t>(pnl) * kNodes];
    Complex num = 0.0;
    double den = 0.0;
    for (int k = 0; k < kNodes; ++k) {
      const double d = t - cheb_[k];
      if (d == 0.0) return v[k];
      double wk = (k % 2 ? -1.0 : 1.0) / d;
      if (k == 0 || k == kNodes - 1) wk *= 0.5;
      num += wk * v[k];
      den += wk;
    }
    return num / den;
  }

 private:
  double w0_, width_;
  int panels_;
  double cheb_[kNodes];
  std::vector<Complex> vals_;
};

TestFunction barnes_function(double a, double b, Complex mu) {
  if (!(a > 0.0 && b > 0.0)) throw PreconditionError("barnes: a, b must be > 0");
  if (!(mu.real() < 0.5)) throw PreconditionError("requires Re mu < 1/2");
  TestFunction f;
  std::ostringstream nm;
  nm << "barnes:" << a << "," << b;
  f.name = nm.str();
  f.strip.lo = 1.5 - std::min(a, b);
  f.strip.hi = std::min(2.0, 2.0 - mu.real());
  f.mellin = [a, b, mu](Complex z) { return barnes_mellin(a, b, mu, z); };
  f.spectral_decay = Decay{2.0 * kPi, 2.0 * a + 2.0 * b - 2.0};
  f.classes = {"mellin-closed", "forward-image-closed"};

  const double lo = f.strip.lo, hi = f.strip.hi;
  const double margin = std::min(0.1, 0.25 * (hi - lo));
  const bool sym = mu.imag() == 0.0;
  auto table = std::make_shared<LogChebTable>(-36.0, 36.0, 1.5);
  QuadratureSpec q;
  q.rel_tol = 1e-13;
  q.max_nodes = 400000;
  for (int pnl = 0; pnl < table->panels(); ++pnl) {
    const double wc = table->node(pnl, LogChebTable::kNodes / 2);
    const double c = wc < 0.0 ? lo + margin : hi - margin;
    std::vector<double> ws(LogChebTable::kNodes);
    for (int k = 0; k < LogChebTable::kNodes; ++k) ws[k] = table->node(pnl, k);
    VerticalLineOptions opt;
    opt.conjugate_symmetric = sym;
    auto r = integrate_vertical_line_multi(
        [&](Complex s, std::span<Complex> out) {
          const Complex m = barnes_mellin(a, b, mu, s);
          for (std::size_t k = 0; k < ws.size(); ++k) out[k] = m * std::exp(-s * ws[k]);
        },
        ws.size(), c, q, opt);
    for (auto& v : r.values) table->values().push_back(v);
  }
  f.eval = [table, a, b, mu, lo, hi, margin, sym](double y) -> Complex {
    const double w = std::log(y);
    if (w >= table->lo() && w <= table->hi()) return (*table)(w);
    // keep y^{-c} within a few e-folds of f itself
    const double d = std::min(margin, 3.0 / std::abs(w));
    const double c = w < 0.0 ? lo + d : hi - d;
    QuadratureSpec q2;
    q2.max_nodes = 2000000;
    return mellin_invert_numeric([&](Complex z) { return barnes_mellin(a, b, mu, z); }, c, y, q2,
                                 sym);
  };
  return f;
}

}  // namespace

Complex barnes_mellin(double a, double b, Complex mu, Complex z) {
  // zeros from the poles of the denominator
  if (near_nonpositive_integer(1.5 - z) || near_nonpositive_integer(z - 1.0 - mu)) return 0.0;
  return std::exp(ln_gamma(2.0 - z) + ln_gamma(2.0 - mu - z) + ln_gamma(a - 1.5 + z) +
                  ln_gamma(b - 1.5 + z) - ln_gamma(1.5 - z) - ln_gamma(z - 1.0 - mu));
}

TestFunction make_test_function(const std::string& spec, Complex mu) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  TestFunction f;
  f.name = spec;
  if (head == "exp" && args.empty()) {
    f.eval = [](double y) { return Complex(std::exp(-y), 0.0); };
    f.mellin = [](Complex s) { return gamma(s); };
    f.strip = Strip{0.0, std::numeric_limits<double>::infinity()};
    f.classes = {"L_{nu,1} for nu > 0", "mellin-closed"};
  } else if (head == "exp-pow") {
    const auto v = parse_numbers(args);
    if (v.size() != 1) throw PreconditionError("exp-pow:a takes one parameter");
    const double a = v[0];
    f.eval = [a](double y) { return Complex(std::pow(y, a) * std::exp(-y), 0.0); };
    f.mellin = [a](Complex s) { return gamma(s + a); };
    f.strip = Strip{-a, std::numeric_limits<double>::infinity()};
    f.classes = {"L_{nu,1} for nu > -a", "mellin-closed"};
  } else if (head == "smooth-bump" && args.empty()) {
    f.eval = [](double y) { return Complex(std::sqrt(y) * std::exp(-y - 1.0 / y), 0.0); };
    f.strip = Strip{};
    f.classes = {"L_{nu,1} for all nu", "smooth"};
  } else if (head == "one-over-1px" && args.empty()) {
    f.eval = [](double y) { return Complex(1.0 / (1.0 + y), 0.0); };
    f.mellin = [](Complex s) { return kPi / sin_pi(s); };
    f.strip = Strip{0.0, 1.0};
    f.classes = {"L_{nu,1} for 0 < nu < 1", "mellin-closed"};
  } else if (head == "barnes") {
    const auto v = parse_numbers(args);
    if (v.size() != 2) throw PreconditionError("barnes:a,b takes two parameters");
    return barnes_function(v[0], v[1], mu);
  } else if (head == "zero" && args.empty()) {
    f.eval = [](double) { return Complex(0.0, 0.0); };
    f.mellin = [](Complex) { return Complex(0.0, 0.0); };
    f.spectral_decay = Decay{};
    f.classes = {"all"};
  } else {
    throw PreconditionError("unknown test function: " + spec);
  }
  return f;
}

SpectralFunction make_spectral_function(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  SpectralFunction g;
  g.name = spec;
  if (head == "gauss-even" && args.empty()) {
    g.eval = [](double t) { return Complex(std::exp(-t * t), 0.0); };
    g.even = true;
    g.analytic_strip = std::numeric_limits<double>::infinity();
    g.tau_cut = 9.0;
    g.classes = {"L_1(R; e^{c|tau|}) for all c", "even", "entire"};
  } else if (head == "tau2-gauss" && args.empty()) {
    g.eval = [](double t) { return Complex(t * t * std::exp(-t * t), 0.0); };
    g.even = true;
    g.vanishing_order = 2;
    g.analytic_strip = std::numeric_limits<double>::infinity();
    g.tau_cut = 9.5;
    g.classes = {"L_1(R; e^{c|tau|}) for all c", "even", "entire", "g(0) = g'(0) = 0"};
  } else if (head == "barnes-image") {
    const auto v = parse_numbers(args);
    if (v.size() != 2) throw PreconditionError("barnes-image:a,b takes two parameters");
    const double a = v[0], b = v[1];
    g.eval = [a, b](double t) {
      const Complex i(0.0, 1.0);
      return std::exp(ln_gamma(a + i * t) + ln_gamma(a - i * t) + ln_gamma(b + i * t) +
                      ln_gamma(b - i * t) - ln_gamma(Complex(a + b, 0.0)));
    };
    g.even = true;
    g.analytic_strip = std::min(a, b);
    g.decay = Decay{2.0 * kPi, 2.0 * a + 2.0 * b - 2.0};
    g.tau_cut = 40.0;
    g.classes = {"L_1(R; |tau| e^{2 pi |tau|})", "even"};
  } else if (head == "zero" && args.empty()) {
    g.eval = [](double) { return Complex(0.0, 0.0); };
    g.even = true;
    g.vanishing_order = 1000;
    g.analytic_strip = std::numeric_limits<double>::infinity();
    g.tau_cut = 1.0;
    g.classes = {"all"};
  } else {
    throw PreconditionError("unknown spectral function: " + spec);
  }
  return g;
}

std::vector<std::string> test_function_names() {
  return {"exp", "exp-pow:a", "smooth-bump", "one-over-1px", "barnes:a,b", "zero"};
}

std::vector<std::string> spectral_function_names() {
  return {"gauss-even", "tau2-gauss", "barnes-image:a,b", "zero"};
}

}  // namespace lebedev
