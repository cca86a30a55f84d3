#include "lebedev/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "lebedev/errors.hpp"

namespace lebedev {

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
    throw PreconditionError("QuadratureSpec: tolerances must be positive");
  if (max_nodes < 64) throw PreconditionError("QuadratureSpec: max_nodes must be >= 64");
  if (!(truncation_T > 0.0)) throw PreconditionError("QuadratureSpec: truncation_T must be > 0");
}

namespace {

constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  Complex value;
  double err;
  double floor;
  bool operator<(const Panel& o) const { return err < o.err; }
};

Panel gk15(const RealFn& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  std::array<Complex, 15> fv;
  fv[7] = f(c);
  for (int j = 0; j < 7; ++j) {
    fv[j] = f(c - h * xgk[j]);
    fv[14 - j] = f(c + h * xgk[j]);
  }
  Complex k = wgk[7] * fv[7];
  Complex g = wg[3] * fv[7];
  double resabs = wgk[7] * std::abs(fv[7]);
  for (int j = 0; j < 7; ++j) {
    k += wgk[j] * (fv[j] + fv[14 - j]);
    resabs += wgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
    if (j % 2 == 1) g += wg[j / 2] * (fv[j] + fv[14 - j]);
  }
  const Complex mean = 0.5 * k;
  double resasc = wgk[7] * std::abs(fv[7] - mean);
  for (int j = 0; j < 7; ++j)
    resasc += wgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));
  double err = std::abs(k - g) * h;
  resasc *= h;
  resabs *= h;
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double floor = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
  if (err < floor) err = floor;
  return {a, b, k * h, err, floor};
}

}  // namespace

EvalResult integrate_gk(const RealFn& f, double a, double b, double rel_tol, double abs_tol,
                        long max_nodes, bool throw_on_fail) {
  EvalResult out;
  out.route = "gk15";
  if (a == b) return out;
  std::vector<Panel> heap;
  heap.push_back(gk15(f, a, b));
  long nodes = 15;
  Complex total = heap.front().value;
  double err = heap.front().err;
  double floor = heap.front().floor;
  // below the rounding floor further bisection cannot help
  while (err > std::max({abs_tol, rel_tol * std::abs(total), 2.0 * floor})) {
    if (nodes + 30 > max_nodes) {
      out.value = total;
      out.err_estimate = err;
      out.nodes_used = nodes;
      if (throw_on_fail) throw NoConvergence("integrate_gk: node budget exhausted");
      out.warnings.push_back("node budget exhausted");
      return out;
    }
    std::pop_heap(heap.begin(), heap.end());
    const Panel worst = heap.back();
    heap.pop_back();
    const double m = 0.5 * (worst.a + worst.b);
    if (!(m > worst.a && m < worst.b)) {
      // interval no longer splittable in double precision
      heap.push_back(worst);
      std::push_heap(heap.begin(), heap.end());
      break;
    }
    Panel l = gk15(f, worst.a, m), r = gk15(f, m, worst.b);
    nodes += 30;
    total += l.value + r.value - worst.value;
    heap.push_back(l);
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(r);
    std::push_heap(heap.begin(), heap.end());
    err = 0.0;
    floor = 0.0;
    for (const auto& p : heap) {
      err += p.err;
      floor += p.floor;
    }
  }
  total = 0.0;
  for (const auto& p : heap) total += p.value;
  out.value = total;
  out.err_estimate = err;
  out.nodes_used = nodes;
  return out;
}

EvalResult integrate_semi_infinite(const RealFn& f, const QuadratureSpec& spec, double a,
                                   double scale) {
  EvalResult out;
  out.route = "gk15-panels";
  double lo = a, len = scale;
  int quiet = 0;
  for (int panel = 0; panel < 200; ++panel) {
    const double tol_abs = std::max(spec.abs_tol, spec.rel_tol * std::abs(out.value)) * 0.2;
    EvalResult r = integrate_gk(f, lo, lo + len, spec.rel_tol * 0.2, tol_abs,
                                spec.max_nodes - out.nodes_used);
    out.value += r.value;
    out.err_estimate += r.err_estimate;
    out.nodes_used += r.nodes_used;
    lo += len;
    const double thresh = std::max(spec.abs_tol, spec.rel_tol * std::abs(out.value)) * 0.1;
    if (std::abs(r.value) + r.err_estimate <= thresh) {
      if (++quiet >= 2) {
        out.err_estimate += std::abs(r.value);
        out.truncation_T_used = lo;
        return out;
      }
    } else {
      quiet = 0;
    }
    len *= 2.0;
    if (!std::isfinite(lo)) break;
  }
  throw NoConvergence("integrate_semi_infinite: tail did not decay");
}

EvalResult integrate_oscillatory(const RealFn& f, double a, double b, double omega,
                                 const QuadratureSpec& spec) {
  omega = std::abs(omega);
  if (omega * (b - a) <= 20.0) {
    EvalResult r = integrate_gk(f, a, b, spec.rel_tol, spec.abs_tol, spec.max_nodes);
    r.route = "gk15";
    return r;
  }
  const long n = static_cast<long>(std::ceil(omega * (b - a) / kPi));
  const double len = (b - a) / double(n);
  EvalResult out;
  out.route = "gk15-half-periods";
  // first pass for the scale of the answer
  double mag = 0.0;
  std::vector<EvalResult> parts;
  parts.reserve(n);
  for (long k = 0; k < n; ++k) {
    const double lo = a + k * len, hi = (k + 1 == n) ? b : lo + len;
    parts.push_back(integrate_gk(f, lo, hi, spec.rel_tol, spec.abs_tol / double(n),
                                 spec.max_nodes, false));
    mag += std::abs(parts.back().value);
  }
  for (auto& p : parts) {
    out.value += p.value;
    out.err_estimate += p.err_estimate;
    out.nodes_used += p.nodes_used;
  }
  (void)mag;
  if (out.nodes_used > spec.max_nodes) throw NoConvergence("integrate_oscillatory: budget");
  return out;
}

EvalResult integrate_semi_infinite_osc(const RealFn& f, double a, double omega,
                                       const QuadratureSpec& spec, double scale) {
  omega = std::abs(omega);
  if (omega < 1e-3) return integrate_semi_infinite(f, spec, a, scale);
  EvalResult out;
  out.route = "gk15-osc-panels";
  const double cap = 20.0 * kPi / omega;
  double lo = a, len = std::min(scale, cap);
  int quiet = 0;
  for (int panel = 0; panel < 20000; ++panel) {
    const double tol_abs = std::max(spec.abs_tol, spec.rel_tol * std::abs(out.value)) * 0.05;
    EvalResult r = integrate_gk(f, lo, lo + len, spec.rel_tol * 0.2, tol_abs,
                                std::max<long>(spec.max_nodes - out.nodes_used, 64), false);
    out.value += r.value;
    out.err_estimate += r.err_estimate;
    out.nodes_used += r.nodes_used;
    if (out.nodes_used > spec.max_nodes)
      throw NoConvergence("integrate_semi_infinite_osc: node budget exhausted");
    lo += len;
    const double thresh = std::max(spec.abs_tol, spec.rel_tol * std::abs(out.value)) * 0.1;
    if (std::abs(r.value) + r.err_estimate <= thresh) {
      if (++quiet >= 3) {
        out.err_estimate += std::abs(r.value);
        out.truncation_T_used = lo;
        return out;
      }
    } else {
      quiet = 0;
    }
    len = std::min(2.0 * len, cap);
  }
  throw NoConvergence("integrate_semi_infinite_osc: tail did not decay");
}

namespace {

// Wynn epsilon algorithm on a sequence of partial sums; returns the
// extrapolated limit and a crude error (distance between the last two
// even-column estimates).
std::pair<Complex, double> wynn_epsilon(const std::vector<Complex>& s) {
  const std::size_t n = s.size();
  if (n < 3) return {s.back(), std::abs(s.back() - s[n - 2 < n ? n - 2 : 0])};
  std::vector<Complex> e0(n, 0.0), e1(s.begin(), s.end());
  Complex best = s.back();
  double best_err = std::numeric_limits<double>::infinity();
  Complex prev_even = s.back();
  for (std::size_t col = 1; col < n; ++col) {
    std::vector<Complex> e2(n - col);
    bool ok = true;
    for (std::size_t i = 0; i + col < n; ++i) {
      const Complex d = e1[i + 1] - e1[i];
      if (std::abs(d) < 1e-300) { ok = false; break; }
      e2[i] = e0[i + 1] + 1.0 / d;
    }
    if (!ok) break;
    if (col % 2 == 0) {
      const Complex v = e2.back();
      const double err = std::abs(v - prev_even) + (e2.size() > 1 ? std::abs(v - e2[e2.size() - 2]) : 0.0);
      if (err < best_err) { best_err = err; best = v; }
      prev_even = v;
    }
    e0 = std::move(e1);
    e1 = std::move(e2);
  }
  return {best, best_err};
}

}  // namespace

EvalResult integrate_oscillatory_tail(const RealFn& f, double a, double omega,
                                      const QuadratureSpec& spec, int max_panels) {
  omega = std::abs(omega);
  if (!(omega > 0.0)) throw PreconditionError("integrate_oscillatory_tail: omega must be > 0");
  const double len = kPi / omega;
  EvalResult out;
  out.route = "half-period-epsilon";
  std::vector<Complex> partial;
  Complex sum = 0.0;
  Complex last = 0.0;
  int stable = 0, quiet = 0;
  const int window = 24;
  for (int k = 0; k < max_panels; ++k) {
    EvalResult r = integrate_gk(f, a + k * len, a + (k + 1) * len, spec.rel_tol * 0.1,
                                spec.abs_tol * 0.1, spec.max_nodes, false);
    out.nodes_used += r.nodes_used;
    sum += r.value;
    if (!std::isfinite(std::abs(sum)))
      throw NoConvergence("integrate_oscillatory_tail: non-finite integrand");
    partial.push_back(sum);
    // amplitude already negligible: the plain partial sum has converged
    if (std::abs(r.value) + r.err_estimate <= std::max(spec.abs_tol, spec.rel_tol * std::abs(sum)) * 0.1) {
      if (++quiet >= 3) {
        out.value = sum;
        out.err_estimate = std::abs(r.value) + r.err_estimate;
        out.truncation_T_used = a + (k + 1) * len;
        return out;
      }
    } else {
      quiet = 0;
    }
    if (partial.size() < 8) continue;
    const std::size_t start = partial.size() > std::size_t(window) ? partial.size() - window : 0;
    std::vector<Complex> w(partial.begin() + long(start), partial.end());
    auto [v, e] = wynn_epsilon(w);
    const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(v));
    if (std::abs(v - last) <= tol && e <= 10.0 * tol) {
      if (++stable >= 3) {
        out.value = v;
        out.err_estimate = std::abs(v - last) + e;
        out.truncation_T_used = a + (k + 1) * len;
        return out;
      }
    } else {
      stable = 0;
    }
    last = v;
  }
  const std::size_t start = partial.size() > std::size_t(window) ? partial.size() - window : 0;
  std::vector<Complex> w(partial.begin() + long(start), partial.end());
  auto [v, e] = wynn_epsilon(w);
  out.value = v;
  out.err_estimate = e + std::abs(v - last);
  out.truncation_T_used = a + max_panels * len;
  out.warnings.push_back("oscillatory tail: extrapolation not settled");
  return out;
}

EvalResult tanh_sinh(const EndpointFn& f, double a, double b, double rel_tol, int max_level) {
  EvalResult out;
  out.route = "tanh-sinh";
  const double half = 0.5 * (b - a), len = b - a;
  const double tmax = 6.5;  // nodes beyond have dl or dr underflowing
  auto node = [&](double t) -> Complex {
    const double u = 0.5 * kPi * std::sinh(t);
    const double ch = std::cosh(u);
    const double w = half * 0.5 * kPi * std::cosh(t) / (ch * ch);
    if (!(w > 0.0) || !std::isfinite(w)) return 0.0;
    const double dl = len / (1.0 + std::exp(-2.0 * u));
    const double dr = len / (1.0 + std::exp(2.0 * u));
    if (dl <= 0.0 || dr <= 0.0) return 0.0;
    const double x = (u < 0.0) ? a + dl : b - dr;
    ++out.nodes_used;
    return w * f(x, dl, dr);
  };
  double h = 0.5;
  Complex sum = node(0.0);
  for (double t = h; t <= tmax; t += h) sum += node(t) + node(-t);
  Complex est = h * sum;
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    for (double t = h; t <= tmax; t += 2.0 * h) sum += node(t) + node(-t);
    const Complex next = h * sum;
    const double diff = std::abs(next - est);
    est = next;
    if (level >= 3 && diff <= rel_tol * std::abs(est)) {
      out.value = est;
      out.err_estimate = diff;
      return out;
    }
    out.err_estimate = diff;
  }
  out.value = est;
  out.warnings.push_back("tanh-sinh: level limit reached");
  return out;
}

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

VerticalLineMulti integrate_vertical_line_multi(const ContourVecFn& F, std::size_t n,
                                                double g, const QuadratureSpec& spec,
                                                const VerticalLineOptions& opt) {
  spec.validate();
  double h = opt.h > 0.0 ? opt.h : std::min(0.05, kPi / (4.0 * std::abs(std::log(spec.rel_tol))));
  double T = opt.T > 0.0 ? opt.T : spec.truncation_T;
  const bool sym = opt.conjugate_symmetric;
  VerticalLineMulti out;
  // vals[k + K] holds F(g + i k h), k in [-K, K] (only k >= 0 when sym)
  std::vector<std::vector<Complex>> pos, neg;  // pos[k] = t = k h, neg[k] = t = -k h
  std::vector<Complex> buf(n);
  auto eval = [&](double t) {
    std::vector<Complex> v(n);
    F(Complex(g, t), std::span<Complex>(v));
    ++out.nodes_used;
    if (out.nodes_used > spec.max_nodes)
      throw NoConvergence("integrate_vertical_line: node budget exhausted");
    return v;
  };
  auto extend = [&](std::size_t K) {
    while (pos.size() <= K) pos.push_back(eval(double(pos.size()) * h));
    if (!sym) {
      if (neg.empty()) neg.push_back(pos[0]);
      while (neg.size() <= K) neg.push_back(eval(-double(neg.size()) * h));
    }
  };
  auto sums = [&](std::size_t K, std::size_t stride) {
    std::vector<Complex> s(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc = sym ? 0.5 * pos[0][j] : pos[0][j];
      for (std::size_t k = stride; k <= K; k += stride) {
        acc += pos[k][j];
        if (!sym) acc += neg[k][j];
      }
      // the odd imaginary part cancels against the mirrored half line
      if (sym) acc = Complex(acc.real(), 0.0);
      s[j] = acc * (double(stride) * h);
    }
    return s;
  };
  auto envelope = [&](std::size_t k0, std::size_t k1) {
    double m = 0.0;
    for (std::size_t k = k0; k <= k1; ++k)
      for (std::size_t j = 0; j < n; ++j) {
        m = std::max(m, std::abs(pos[k][j]));
        if (!sym) m = std::max(m, std::abs(neg[k][j]));
      }
    return m;
  };
  const double norm = sym ? 1.0 / kPi : 1.0 / (2.0 * kPi);
  for (int round = 0; round < 40; ++round) {
    std::size_t K = static_cast<std::size_t>(std::ceil(T / h));
    K += K % 2;  // even, so the 2h subgrid ends on the same node
    extend(K);
    std::vector<Complex> S = sums(K, 1), S2 = sums(K, 2);
    double scale = 0.0;
    for (auto& v : S) scale = std::max(scale, std::abs(v) * norm);
    const double tol = std::max(spec.abs_tol, spec.rel_tol * scale);
    // tail from the envelope on the last two unit windows
    const std::size_t w = std::max<std::size_t>(1, static_cast<std::size_t>(std::round(1.0 / h)));
    double tail = 0.0;
    if (K > 2 * w) {
      const double e1 = envelope(K - w, K), e0 = envelope(K - 2 * w, K - w);
      const double lam = (e1 > 0.0 && e0 > e1) ? std::log(e0 / e1) : 0.0;
      tail = (sym ? 1.0 : 2.0) * e1 / std::max(lam, 0.02) * norm;
      if (lam < 0.02 && e1 > 0.0) tail = std::numeric_limits<double>::infinity();
    }
    if (tail > 0.1 * tol && T < opt.T_max) {
      T = std::min(opt.T_max, T * 1.5 + 2.0);
      continue;
    }
    double disc = 0.0;
    for (std::size_t j = 0; j < n; ++j) disc = std::max(disc, std::abs(S[j] - S2[j]) * norm);
    if (disc > tol) {
      // halve h: rebuild grids interleaving new odd nodes
      if (out.nodes_used + 2 * static_cast<long>(K) > spec.max_nodes)
        throw NoConvergence("integrate_vertical_line: node budget exhausted");
      h *= 0.5;
      std::vector<std::vector<Complex>> p2, n2;
      p2.reserve(2 * pos.size());
      for (std::size_t k = 0; k < pos.size(); ++k) {
        p2.push_back(pos[k]);
        if (k + 1 < pos.size()) p2.push_back(eval((2.0 * k + 1.0) * h));
      }
      pos.swap(p2);
      if (!sym) {
        n2.reserve(2 * neg.size());
        for (std::size_t k = 0; k < neg.size(); ++k) {
          n2.push_back(neg[k]);
          if (k + 1 < neg.size()) n2.push_back(eval(-(2.0 * k + 1.0) * h));
        }
        neg.swap(n2);
      }
      continue;
    }
    out.values.resize(n);
    out.err.assign(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      out.values[j] = sym ? Complex(S[j].real() * norm, 0.0) : S[j] * norm;
      out.err[j] = std::abs(S[j] - S2[j]) * norm + (std::isfinite(tail) ? tail : 0.0);
    }
    out.truncation_T_used = T;
    if (tail > 0.1 * tol) out.warnings.push_back("vertical line: truncation limit reached");
    if (sym) {
      // spot check of the assumed symmetry
      for (double frac : {0.137, 0.611}) {
        std::vector<Complex> a(n), b(n);
        F(Complex(g, frac * T), std::span<Complex>(a));
        F(Complex(g, -frac * T), std::span<Complex>(b));
        for (std::size_t j = 0; j < n; ++j) {
          const double d = std::abs(a[j] - std::conj(b[j]));
          if (d > 1e-10 * std::max(std::abs(a[j]), 1e-300)) {
            out.warnings.push_back("AsymmetryWarning: conjugate symmetry violated");
            frac = 2.0;
            break;
          }
        }
      }
    }
    return out;
  }
  throw NoConvergence("integrate_vertical_line: refinement limit reached");
}

EvalResult integrate_vertical_line(const ContourFn& F, double g, const QuadratureSpec& spec,
                                   const VerticalLineOptions& opt) {
  auto r = integrate_vertical_line_multi(
      [&](Complex s, std::span<Complex> out) { out[0] = F(s); }, 1, g, spec, opt);
  EvalResult e;
  e.value = r.values[0];
  e.err_estimate = r.err[0];
  e.nodes_used = r.nodes_used;
  e.truncation_T_used = r.truncation_T_used;
  e.warnings = r.warnings;
  e.route = "vertical-trapezoid";
  return e;
}

Complex mellin_transform_numeric(const TestFunction& f, Complex s, const QuadratureSpec& spec) {
  if (!f.strip.contains(s.real()))
    throw OutOfStrip("mellin_transform_numeric: Re s outside the strip of " + f.name);
  const double om = std::abs(s.imag());
  auto lower = [&](double w) { return f.eval(std::exp(-w)) * std::exp(-w * s); };
  auto upper = [&](double w) { return f.eval(std::exp(w)) * std::exp(w * s); };
  QuadratureSpec q = spec;
  q.rel_tol = std::max(spec.rel_tol, 1e-13);
  return integrate_semi_infinite_osc(lower, 0.0, om, q).value +
         integrate_semi_infinite_osc(upper, 0.0, om, q).value;
}

Complex mellin_invert_numeric(const ContourFn& Fstar, double nu, double x,
                              const QuadratureSpec& spec, bool conjugate_symmetric) {
  if (!(x > 0.0)) throw PreconditionError("mellin_invert_numeric: x must be > 0");
  const double lx = std::log(x);
  VerticalLineOptions opt;
  opt.conjugate_symmetric = conjugate_symmetric;
  return integrate_vertical_line([&](Complex s) { return Fstar(s) * std::exp(-s * lx); }, nu,
                                 spec, opt)
      .value;
}

double weighted_norm(const TestFunction& f, double nu, double p, const QuadratureSpec& spec) {
  if (!(p >= 1.0)) throw PreconditionError("weighted_norm: p must be >= 1");
  auto lower = [&](double w) {
    return Complex(std::pow(std::abs(f.eval(std::exp(-w))), p) * std::exp(-w * nu * p), 0.0);
  };
  auto upper = [&](double w) {
    return Complex(std::pow(std::abs(f.eval(std::exp(w))), p) * std::exp(w * nu * p), 0.0);
  };
  double v = 0.0;
  try {
    v = integrate_semi_infinite(lower, spec).value.real() +
        integrate_semi_infinite(upper, spec).value.real();
  } catch (const NoConvergence&) {
    throw Divergent("weighted_norm: integral does not converge for " + f.name);
  }
  if (!std::isfinite(v) || v > 1e300) throw Divergent("weighted_norm: overflow");
  return std::pow(v, 1.0 / p);
}

std::vector<std::string> apply_config_text(const std::string& text, QuadratureSpec& spec) {
  std::vector<std::string> unknown;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    if (key.empty()) continue;
    try {
      if (key == "rel_tol") spec.rel_tol = std::stod(val);
      else if (key == "abs_tol") spec.abs_tol = std::stod(val);
      else if (key == "max_nodes") spec.max_nodes = std::stol(val);
      else if (key == "truncation_T") spec.truncation_T = std::stod(val);
      else unknown.push_back(key);
    } catch (const std::logic_error&) {
      throw PreconditionError("config: bad value for " + key);
    }
  }
  spec.validate();
  return unknown;
}

std::vector<std::string> apply_config_file(const std::string& path, QuadratureSpec& spec) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("config: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return apply_config_text(ss.str(), spec);
}

}  // namespace lebedev
