#include "fwcs/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace fwcs {
namespace {

constexpr double kPi = std::numbers::pi;
const double kHalfLog2Pi = 0.5 * std::log(2.0 * kPi);

// Lanczos coefficients for g = 7, n = 9.
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// B_{2n} / (2n (2n-1)) for the Stirling correction series.
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,          -1.0 / 360.0,   1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0,        -691.0 / 360360.0, 1.0 / 156.0, -3617.0 / 122400.0};

constexpr double kStirlingMinAbs = 12.0;

void check_pole(Complex w) {
  if (is_gamma_pole(w)) {
    std::ostringstream os;
    os << "gamma pole at w = (" << w.real() << ", " << w.imag() << ")";
    throw PoleError(os.str());
  }
}

Complex lanczos_log_gamma(Complex w) {
  const Complex z = w - 1.0;
  Complex x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + kGammaConfig.lanczos_g + 0.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

// log sin(pi w), stable for large |Im w|. Only exp of the result matters to
// callers, so the branch is immaterial.
Complex log_sin_pi(Complex w) {
  const Complex x = kPi * w;
  const Complex i(0.0, 1.0);
  if (x.imag() > 20.0) {
    // sin x = (i/2) e^{-ix} (1 - e^{2ix})
    return -i * x + Complex(std::log(0.5), 0.5 * kPi) + std::log(1.0 - std::exp(2.0 * i * x));
  }
  if (x.imag() < -20.0) {
    return i * x + Complex(std::log(0.5), -0.5 * kPi) + std::log(1.0 - std::exp(-2.0 * i * x));
  }
  return std::log(std::sin(x));
}

Complex log1p_complex(Complex u) {
  const Complex w = 1.0 + u;
  if (w == Complex(1.0)) return u;
  return std::log(w) * u / (w - 1.0);
}

Complex stirling_correction(Complex x) {
  const Complex inv = 1.0 / x;
  const Complex inv2 = inv * inv;
  Complex term = inv;
  Complex sum = 0.0;
  for (double c : kStirling) {
    sum += c * term;
    term *= inv2;
  }
  return sum;
}

}  // namespace

bool is_gamma_pole(Complex w) noexcept {
  if (w.real() > 0.5) return false;
  const double n = std::round(w.real());
  return n <= 0.0 && std::abs(w - Complex(n, 0.0)) < kPoleTolerance;
}

bool is_gamma_pole(double x) noexcept { return is_gamma_pole(Complex(x, 0.0)); }

Complex log_gamma(Complex w) {
  check_pole(w);
  if (w.real() < kGammaConfig.reflection_threshold) {
    return std::log(kPi) - log_sin_pi(w) - log_gamma(1.0 - w);
  }
  return lanczos_log_gamma(w);
}

double log_gamma(double x) {
  check_pole(Complex(x, 0.0));
  if (x < kGammaConfig.reflection_threshold) {
    return std::log(kPi / std::abs(std::sin(kPi * x))) - log_gamma(1.0 - x);
  }
  return lanczos_log_gamma(Complex(x, 0.0)).real();
}

Complex gamma(Complex w) { return std::exp(log_gamma(w)); }

Bicomplex gamma_bicomplex(const Bicomplex& w) {
  for (int p = 1; p <= 2; ++p) {
    if (is_gamma_pole(w.component(p))) {
      std::ostringstream os;
      os << "bicomplex gamma pole in idempotent component " << p;
      throw PoleError(os.str(), p);
    }
  }
  return {gamma(w.z1()), gamma(w.z2())};
}

Complex pochhammer(Complex a, double e) {
  if (e == 0.0) {
    check_pole(a);
    return 1.0;
  }
  return std::exp(log_gamma(a + e) - log_gamma(a));
}

Complex log_gamma_ratio(Complex a, double big_a, long k) {
  const Complex x = a + static_cast<double>(k) * big_a;
  const Complex y = x + big_a;
  check_pole(x);
  check_pole(y);
  if (x.real() > 0.0 && std::abs(x) >= kStirlingMinAbs && y.real() > 0.0) {
    // (y - 1/2) log y - (x - 1/2) log x - A = (x - 1/2) log1p(A/x) + A log y - A
    return (x - 0.5) * log1p_complex(big_a / x) + big_a * std::log(y) - big_a +
           (stirling_correction(y) - stirling_correction(x));
  }
  const double n = std::round(big_a);
  if (n == big_a && n >= 1.0 && n <= 32.0) {
    Complex sum = 0.0;
    for (int j = 0; j < static_cast<int>(n); ++j) sum += std::log(x + static_cast<double>(j));
    return sum;
  }
  return log_gamma(y) - log_gamma(x);
}

double log_gamma_shift(double x, double big_a) {
  if (x > 0.0) return log_gamma_ratio(Complex(x, 0.0), big_a, 0).real();
  return log_gamma(x + big_a) - log_gamma(x);
}

}  // namespace fwcs
