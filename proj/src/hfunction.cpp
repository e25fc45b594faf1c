#include "fwcs/hfunction.hpp"

#include <cmath>
#include <limits>

#include "fwcs/gamma.hpp"

namespace fwcs {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLogZero = -std::numeric_limits<double>::infinity();
constexpr double kTailLimit = 1e5;

// log M(s); -inf when a denominator gamma sits on a pole.
Complex log_kernel(const HWeightParams& hp, Complex s) {
  Complex acc = 0.0;
  for (const auto& u : hp.upper) {
    const Complex w = u.alpha + s * u.big_a;
    if (is_gamma_pole(w)) return Complex(kLogZero, 0.0);
    acc -= log_gamma(w);
  }
  for (const auto& l : hp.lower) acc += log_gamma(l.beta + s * l.big_b);
  return acc;
}

// log |M(c)| x^{-c} on the real axis, where every gamma argument is positive.
double log_envelope(const HWeightParams& hp, double c, double log_x) {
  double acc = -c * log_x;
  for (const auto& u : hp.upper) acc -= log_gamma(u.alpha + c * u.big_a);
  for (const auto& l : hp.lower) acc += log_gamma(l.beta + c * l.big_b);
  return acc;
}

double golden_min(const std::function<double(double)>& f, double lo, double hi) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - g * (hi - lo);
  double x2 = lo + g * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int i = 0; i < 80 && hi - lo > 1e-6 * (1.0 + std::abs(lo)); ++i) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = f(x2);
    }
  }
  return 0.5 * (lo + hi);
}

double choose_abscissa(const HWeightParams& hp, double log_x, const ContourConfig& cc) {
  const double base = std::max(0.0, hp.rightmost_pole()) + cc.c_offset;
  if (!cc.saddle_abscissa) return base;

  // The envelope is only smooth where no denominator gamma changes sign.
  double start = base;
  for (const auto& u : hp.upper) start = std::max(start, -u.alpha / u.big_a + cc.c_offset);
  auto phi = [&](double c) { return log_envelope(hp, c, log_x); };

  double prev = start;
  double step = 0.5;
  double cur = start + step;
  if (phi(cur) >= phi(prev)) {
    const double c = golden_min(phi, start, cur);
    return std::max(base, c);
  }
  while (phi(cur) < phi(prev)) {
    prev = cur;
    step *= 2.0;
    cur = prev + step;
    if (cur > 1e6) throw ContourFailure("saddle abscissa search ran away");
  }
  return golden_min(phi, std::max(start, prev - step / 2.0), cur);
}

}  // namespace

HWeightParams HWeightParams::from_model(const CoherentModel& model) {
  HWeightParams hp;
  for (const auto& u : model.params().upper) hp.upper.push_back({u.a.real() - u.big_a, u.big_a});
  hp.lower.push_back({0.0, 1.0});
  for (const auto& l : model.params().lower) hp.lower.push_back({l.b.real() - l.big_b, l.big_b});
  return hp;
}

void HWeightParams::validate() const {
  for (const auto& u : upper) {
    if (!std::isfinite(u.alpha) || !(u.big_a > 0.0) || !std::isfinite(u.big_a)) {
      throw ValidationError("H-function upper entries need finite alpha and A > 0");
    }
  }
  if (lower.empty()) throw ValidationError("H-function needs at least one lower entry");
  for (const auto& l : lower) {
    if (!std::isfinite(l.beta) || !(l.big_b > 0.0) || !std::isfinite(l.big_b)) {
      throw ValidationError("H-function lower entries need finite beta and B > 0");
    }
  }
  if (!(decay_margin() > kMarginTolerance)) {
    throw ValidationError("H-function contour integrand does not decay: sum B - sum A <= 0");
  }
}

double HWeightParams::decay_margin() const {
  double m = 0.0;
  for (const auto& l : lower) m += l.big_b;
  for (const auto& u : upper) m -= u.big_a;
  return m;
}

double HWeightParams::rightmost_pole() const {
  double c = -std::numeric_limits<double>::infinity();
  for (const auto& l : lower) c = std::max(c, -l.beta / l.big_b);
  return c;
}

Complex mellin_kernel(const HWeightParams& hp, Complex s) {
  const Complex lk = log_kernel(hp, s);
  if (lk.real() == kLogZero) return 0.0;
  return std::exp(lk);
}

HEvaluation eval_h_detail(const HWeightParams& hp, double x, const ContourConfig& cc) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("H-function needs x > 0");
  hp.validate();
  if (!(cc.c_offset > 0.0) || !(cc.initial_step > 0.0) || !(cc.rel_tol > 0.0)) {
    throw ValidationError("contour config needs positive offset, step and tolerance");
  }

  const double log_x = std::log(x);
  HEvaluation out;
  out.abscissa = choose_abscissa(hp, log_x, cc);
  const double c = out.abscissa;

  // Integrand on the line s = c + it: Re[M(s) x^{-s}]; the modulus tracks the envelope.
  double peak = 0.0;
  auto node = [&](double t, double& modulus) {
    const Complex s(c, t);
    const Complex lk = log_kernel(hp, s);
    ++out.nodes;
    if (lk.real() == kLogZero) {
      modulus = 0.0;
      return 0.0;
    }
    const Complex v = std::exp(lk - s * log_x);
    modulus = std::abs(v);
    if (!std::isfinite(modulus)) throw Overflow("H-function contour integrand overflows");
    peak = std::max(peak, modulus);
    return v.real();
  };

  // Sum f(t0), f(t0 + stride), ... until the envelope has stayed negligible for a while
  // and the run has passed t_end.
  double t_end = 0.0;
  auto run = [&](double t0, double stride, double& abs_sum) {
    double sum = 0.0;
    int quiet = 0;
    for (double t = t0;; t += stride) {
      double m = 0.0;
      const double v = node(t, m);
      sum += v;
      abs_sum += std::abs(v);
      quiet = m < cc.envelope_drop * peak ? quiet + 1 : 0;
      if (quiet >= 5 && t >= t_end) {
        t_end = std::max(t_end, t);
        return sum;
      }
      if (t > kTailLimit) throw ContourFailure("contour integrand does not decay by |t| = 1e5");
    }
  };

  double h = cc.initial_step;
  double abs_sum = 0.0;
  double m0 = 0.0;
  double f0 = node(0.0, m0);
  abs_sum += 0.5 * std::abs(f0);
  double s = 0.5 * f0 + run(h, h, abs_sum);
  double estimate = h / kPi * s;
  out.level_estimates.push_back(estimate);

  for (int level = 1; level <= cc.max_halvings; ++level) {
    h *= 0.5;
    s += run(h, 2.0 * h, abs_sum);
    const double next = h / kPi * s;
    out.level_estimates.push_back(next);
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * h / kPi * abs_sum;
    const double diff = std::abs(next - estimate);
    estimate = next;
    if (level >= 2 && diff <= cc.rel_tol * std::abs(next) + floor) {
      out.value = next;
      return out;
    }
  }
  throw ContourFailure("trapezoid halving stalled at x = " + std::to_string(x));
}

double eval_h(const HWeightParams& hp, double x, const ContourConfig& cc) {
  return eval_h_detail(hp, x, cc).value;
}

double eval_h_at_zero(const HWeightParams& hp) {
  hp.validate();
  const double c = hp.rightmost_pole();
  if (c > 1e-12) throw DomainError("H-function diverges as x -> 0+");
  // The limit is the residue of M(s) x^{-s} at the simple pole s = 0.
  int at_zero = 0;
  double value = 1.0;
  for (const auto& l : hp.lower) {
    if (std::abs(l.beta) <= 1e-12) {
      ++at_zero;
      value /= l.big_b;
    } else {
      value *= std::tgamma(l.beta);
    }
  }
  if (at_zero > 1) throw DomainError("H-function has a multiple pole at s = 0 and diverges as x -> 0+");
  for (const auto& u : hp.upper) {
    if (is_gamma_pole(u.alpha)) return 0.0;
    value /= std::tgamma(u.alpha);
  }
  return value;
}

double weight(const CoherentModel& model, double x, const ContourConfig& cc) {
  if (!(x >= 0.0)) throw ValidationError("weight needs x >= 0");
  const HWeightParams hp = HWeightParams::from_model(model);
  const double psi = std::exp(model.log_gamma_prefactor()) * normalization(model, x);
  const double h = x == 0.0 ? eval_h_at_zero(hp) : eval_h(hp, x, cc);
  return psi * h;
}

double measure_density(const CoherentModel& model, double x, const ContourConfig& cc) {
  return weight(model, x, cc);
}

Hyperbolic measure_density_b(const BCCoherentModel& model, Hyperbolic x, const ContourConfig& cc) {
  if (!x.nonnegative()) throw ValidationError("bicomplex measure density needs x in D+");
  return {measure_density(model.component(1), x.c1(), cc), measure_density(model.component(2), x.c2(), cc)};
}

namespace {

// Upper limit where log g has dropped `drop` below its running peak, scanning a geometric grid.
double x_cutoff(const std::function<double(double)>& log_g, double drop) {
  double peak = -std::numeric_limits<double>::infinity();
  for (double x = 1e-3;; x *= 1.25) {
    const double v = log_g(x);
    if (v > peak) {
      peak = v;
    } else if (v < peak - drop) {
      return x;
    }
    if (x > 1e8) throw QuadratureFailure("moment integrand does not decay by x = 1e8");
  }
}

QuadResult integrate_positive_axis(const std::function<double(double)>& g, const QuadConfig& cfg) {
  auto log_g = [&](double x) { return std::log(std::abs(g(x)) + 1e-300); };
  const double x_max = x_cutoff(log_g, std::log(1e16));
  // Split at 1 so the quadrature resolves the behaviour near the origin separately.
  QuadResult head = integrate_gauss_kronrod(g, 0.0, std::min(1.0, x_max), cfg);
  if (x_max <= 1.0) return head;
  QuadResult tail = integrate_gauss_kronrod(g, 1.0, x_max, cfg);
  return {head.value + tail.value, head.err_est + tail.err_est, head.evaluations + tail.evaluations};
}

}  // namespace

QuadResult mellin_transform_numeric(const HWeightParams& hp, double s, const QuadConfig& cfg,
                                    const ContourConfig& cc) {
  cfg.validate();
  if (!(s > hp.rightmost_pole())) throw DomainError("Mellin transform needs s right of the rightmost pole");
  return integrate_positive_axis([&](double x) { return std::pow(x, s - 1.0) * eval_h(hp, x, cc); }, cfg);
}

QuadConfig moment_quad_config() {
  QuadConfig cfg;
  cfg.rel_tol = 1e-9;
  return cfg;
}

MomentCheck moment_check(const CoherentModel& model, long k, const QuadConfig& cfg, const ContourConfig& cc) {
  if (k < 0) throw ValidationError("moment check needs k >= 0");
  cfg.validate();
  const HWeightParams hp = HWeightParams::from_model(model);
  const double pref = std::exp(model.log_gamma_prefactor());
  const double kd = static_cast<double>(k);
  // W(x)/N(x) = prod Gamma(a)/prod Gamma(b) * H(x).
  auto g = [&](double x) { return std::pow(x, kd) * pref * eval_h(hp, x, cc); };
  const QuadResult q = integrate_positive_axis(g, cfg);

  MomentCheck out;
  out.k = k;
  out.lhs = q.value;
  out.err_est = q.err_est;
  out.rhs = rho(model, k);
  out.rel_err = std::abs(out.lhs - out.rhs) / std::abs(out.rhs);
  return out;
}

}  // namespace fwcs
