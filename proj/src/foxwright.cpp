#include "fwcs/foxwright.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "fwcs/gamma.hpp"

namespace fwcs {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Compensated (Neumaier) complex accumulator.
class ComplexSum {
 public:
  void add(Complex t) {
    add_component(re_, re_c_, t.real());
    add_component(im_, im_c_, t.imag());
  }
  Complex value() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add_component(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double re_ = 0.0, re_c_ = 0.0, im_ = 0.0, im_c_ = 0.0;
};

Complex term_value(const CoefficientWalker& walker, Complex log_z) {
  if (walker.is_zero()) return 0.0;
  const Complex t = std::exp(walker.log_coefficient() + static_cast<double>(walker.index()) * log_z);
  if (!is_finite(t)) {
    std::ostringstream os;
    os << "Fox-Wright term overflow at k = " << walker.index();
    throw Overflow(os.str());
  }
  return t;
}

std::string describe(Complex z) {
  std::ostringstream os;
  os << "(" << z.real() << ", " << z.imag() << ")";
  return os.str();
}

}  // namespace

void FWParams::validate() const {
  for (const auto& u : upper) {
    if (!is_finite(u.a) || !std::isfinite(u.big_a) || !(u.big_a > 0.0)) {
      throw ValidationError("upper pair needs finite a and A > 0");
    }
    if (is_gamma_pole(u.a)) throw ValidationError("upper parameter a sits on a gamma pole");
  }
  for (const auto& l : lower) {
    if (!is_finite(l.b) || !std::isfinite(l.big_b) || !(l.big_b > 0.0)) {
      throw ValidationError("lower pair needs finite b and B > 0");
    }
    if (is_gamma_pole(l.b)) throw ValidationError("lower parameter b sits on a gamma pole");
  }
}

double margin(const FWParams& params) {
  double delta = 1.0;
  for (const auto& l : params.lower) delta += l.big_b;
  for (const auto& u : params.upper) delta -= u.big_a;
  return delta;
}

double radius_scale(const FWParams& params) {
  double log_v = 0.0;
  for (const auto& l : params.lower) log_v += l.big_b * std::log(l.big_b);
  for (const auto& u : params.upper) log_v -= u.big_a * std::log(u.big_a);
  return std::exp(log_v);
}

double radius(const FWParams& params) {
  const double delta = margin(params);
  if (delta > kMarginTolerance) return kInf;
  if (delta < -kMarginTolerance) return 0.0;
  return radius_scale(params);
}

Complex boundary_exponent(const FWParams& params) {
  Complex lambda = 0.0;
  for (const auto& l : params.lower) lambda += l.b;
  for (const auto& u : params.upper) lambda -= u.a;
  lambda -= 0.5 * (static_cast<double>(params.q()) - static_cast<double>(params.p()));
  return lambda;
}

CoefficientWalker::CoefficientWalker(const FWParams& params) : params_(&params) {
  log_upper_.reserve(params.p());
  for (const auto& u : params.upper) log_upper_.push_back(log_gamma(u.a));
  for (const auto& l : params.lower) {
    const bool pole = is_gamma_pole(l.b);
    lower_pole_.push_back(pole);
    log_lower_.push_back(pole ? Complex(0.0) : log_gamma(l.b));
  }
  recompute();
}

void CoefficientWalker::advance() {
  const auto& params = *params_;
  for (std::size_t l = 0; l < params.p(); ++l) {
    log_upper_[l] += log_gamma_ratio(params.upper[l].a, params.upper[l].big_a, k_);
  }
  for (std::size_t r = 0; r < params.q(); ++r) {
    const auto& pair = params.lower[r];
    const Complex next = pair.b + static_cast<double>(k_ + 1) * pair.big_b;
    if (is_gamma_pole(next)) {
      lower_pole_[r] = true;
    } else if (lower_pole_[r]) {
      lower_pole_[r] = false;
      log_lower_[r] = log_gamma(next);
    } else {
      log_lower_[r] += log_gamma_ratio(pair.b, pair.big_b, k_);
    }
  }
  ++k_;
  log_factorial_ += std::log(static_cast<double>(k_));
  recompute();
}

void CoefficientWalker::recompute() {
  lower_poles_ = 0;
  Complex s = -log_factorial_;
  for (const auto& v : log_upper_) s += v;
  for (std::size_t r = 0; r < log_lower_.size(); ++r) {
    if (lower_pole_[r]) {
      ++lower_poles_;
    } else {
      s -= log_lower_[r];
    }
  }
  log_c_ = s;
}

EvalResult eval(const FWParams& params, Complex z, const EvalOptions& options) {
  params.validate();
  if (!(options.tol > 0.0)) throw ValidationError("tolerance must be positive");
  if (options.max_terms < 1) throw ValidationError("max_terms must be at least 1");

  CoefficientWalker walker(params);
  if (z == Complex(0.0)) return {term_value(walker, 0.0), 1, 0.0};

  const double rad = radius(params);
  const double abs_z = std::abs(z);
  bool boundary = false;
  if (rad == 0.0) {
    throw DomainViolation("series diverges for every nonzero z (negative margin)");
  }
  if (std::isfinite(rad)) {
    boundary = std::abs(abs_z - rad) <= kMarginTolerance * rad;
    if (!boundary && abs_z > rad) {
      throw DomainViolation("|z| = " + std::to_string(abs_z) + " exceeds radius " + std::to_string(rad));
    }
    if (boundary && !options.allow_boundary) {
      throw DomainViolation("z = " + describe(z) + " lies on the convergence circle");
    }
  }

  const Complex log_z = std::log(z);
  ComplexSum sum;

  if (boundary) {
    const double excess = boundary_exponent(params).real() - 0.5;
    if (!(excess > 0.0)) {
      throw DomainViolation("boundary convergence condition Re(lambda) > 1/2 fails");
    }
    double tail = kInf;
    int k = 0;
    for (; k < options.max_terms; ++k) {
      if (k > 0) walker.advance();
      const Complex t = term_value(walker, log_z);
      sum.add(t);
      // Majorant tail: sum_{j>k} C j^{-(Re lambda + 1/2)} ~ |t_k| k / (Re lambda - 1/2).
      tail = std::abs(t) * std::max(1, k) / excess;
      if (k >= 10 && tail <= options.tol * std::abs(sum.value())) break;
    }
    return {sum.value(), std::min(k + 1, options.max_terms), tail};
  }

  const double limit_ratio = std::isfinite(rad) ? abs_z / rad : 0.0;
  int small_run = 0;
  double prev_abs = 0.0;
  long prev_index = -1;
  double ratios[3] = {kInf, kInf, kInf};
  int ratio_count = 0;

  for (int k = 0; k < options.max_terms; ++k) {
    if (k > 0) walker.advance();
    const Complex t = term_value(walker, log_z);
    sum.add(t);
    const double abs_t = std::abs(t);

    if (abs_t > 0.0) {
      if (prev_index >= 0) {
        const double r = std::pow(abs_t / prev_abs, 1.0 / static_cast<double>(k - prev_index));
        ratios[ratio_count % 3] = r;
        ++ratio_count;
      }
      prev_abs = abs_t;
      prev_index = k;
    }

    small_run = (abs_t <= options.tol * std::abs(sum.value())) ? small_run + 1 : 0;
    if (small_run >= 3 && ratio_count >= 3) {
      double r = std::max({ratios[0], ratios[1], ratios[2], limit_ratio});
      if (r < 1.0) {
        const double tail = prev_abs * r / (1.0 - r);
        return {sum.value(), k + 1, tail};
      }
    }
  }
  throw MaxTermsExceeded("Fox-Wright series did not converge within " +
                         std::to_string(options.max_terms) + " terms");
}

Complex partial_sum(const FWParams& params, Complex z, int n_terms) {
  params.validate();
  CoefficientWalker walker(params);
  ComplexSum sum;
  if (n_terms <= 0) return 0.0;
  if (z == Complex(0.0)) return term_value(walker, 0.0);
  const Complex log_z = std::log(z);
  for (int k = 0; k < n_terms; ++k) {
    if (k > 0) walker.advance();
    sum.add(term_value(walker, log_z));
  }
  return sum.value();
}

std::optional<PfqReduction> as_pfq(const FWParams& params) {
  for (const auto& u : params.upper) {
    if (u.big_a != 1.0) return std::nullopt;
  }
  for (const auto& l : params.lower) {
    if (l.big_b != 1.0) return std::nullopt;
  }
  PfqReduction out;
  Complex log_prefactor = 0.0;
  for (const auto& u : params.upper) {
    log_prefactor += log_gamma(u.a);
    out.upper.push_back(u.a);
  }
  for (const auto& l : params.lower) {
    log_prefactor -= log_gamma(l.b);
    out.lower.push_back(l.b);
  }
  out.prefactor = std::exp(log_prefactor);
  return out;
}

Complex oracle_pfq(const std::vector<Complex>& upper, const std::vector<Complex>& lower,
                   Complex z, int max_terms) {
  Complex term = 1.0;
  Complex sum = 1.0;
  int small_run = 0;
  for (int k = 0; k < max_terms; ++k) {
    const double kd = static_cast<double>(k);
    Complex factor = z / (kd + 1.0);
    for (const auto& a : upper) factor *= (a + kd);
    for (const auto& b : lower) {
      if (b + kd == Complex(0.0)) throw DomainError("pFq lower parameter is a nonpositive integer");
      factor /= (b + kd);
    }
    term *= factor;
    sum += term;
    small_run = (std::abs(term) <= 1e-17 * std::abs(sum)) ? small_run + 1 : 0;
    if (small_run >= 3) return sum;
  }
  throw MaxTermsExceeded("pFq oracle did not converge");
}

Complex oracle_mittag_leffler(double big_b, Complex b, Complex z, int max_terms) {
  auto inv_gamma_term = [&](int k) -> Complex {
    const Complex arg = b + static_cast<double>(k) * big_b;
    if (is_gamma_pole(arg)) return 0.0;
    if (k == 0) return std::exp(-log_gamma(arg));
    return std::exp(static_cast<double>(k) * std::log(z) - log_gamma(arg));
  };
  if (z == Complex(0.0)) return inv_gamma_term(0);
  Complex sum = 0.0;
  int small_run = 0;
  for (int k = 0; k < max_terms; ++k) {
    const Complex t = inv_gamma_term(k);
    sum += t;
    small_run = (std::abs(t) <= 1e-17 * std::abs(sum)) ? small_run + 1 : 0;
    if (small_run >= 3) return sum;
  }
  throw MaxTermsExceeded("Mittag-Leffler oracle did not converge");
}

double oracle_bessel_j(double nu, double y, int max_terms) {
  const double half = 0.5 * y;
  double term = std::pow(half, nu) / std::tgamma(nu + 1.0);
  double sum = term;
  double abs_sum = std::abs(term);
  int small_run = 0;
  for (int k = 0; k < max_terms; ++k) {
    const double kd = static_cast<double>(k);
    term *= -half * half / ((kd + 1.0) * (nu + kd + 1.0));
    sum += term;
    abs_sum += std::abs(term);
    small_run = (std::abs(term) <= 1e-18 * abs_sum) ? small_run + 1 : 0;
    if (small_run >= 3) return sum;
  }
  throw MaxTermsExceeded("Bessel oracle did not converge");
}

}  // namespace fwcs
