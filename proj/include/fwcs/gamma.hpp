#pragma once

#include "fwcs/bicomplex.hpp"

namespace fwcs {

/// Parameters of the Lanczos approximation backing every gamma evaluation.
struct GammaConfig {
  double lanczos_g = 7.0;
  int lanczos_coeff_count = 9;
  double reflection_threshold = 0.5;
};

inline constexpr GammaConfig kGammaConfig{};

// Distance to a nonpositive integer below which an argument is treated as a pole.
inline constexpr double kPoleTolerance = 1e-12;

bool is_gamma_pole(Complex w) noexcept;
bool is_gamma_pole(double x) noexcept;

/// Principal-branch log Gamma. Throws PoleError at nonpositive integers.
Complex log_gamma(Complex w);

/// log |Gamma(x)| for real x (x not a pole).
double log_gamma(double x);

Complex gamma(Complex w);

/// Gamma_b(W) = Gamma(w1) e1 + Gamma(w2) e2; PoleError names the singular component.
Bicomplex gamma_bicomplex(const Bicomplex& w);

/// (a)_E = Gamma(a + E) / Gamma(a).
Complex pochhammer(Complex a, double e);

/// log[Gamma(a + (k+1)A) / Gamma(a + kA)] evaluated without forming either gamma,
/// so the result keeps full relative accuracy for large k.
Complex log_gamma_ratio(Complex a, double big_a, long k);

/// Real-parameter variant: log[Gamma(x + A) / Gamma(x)] for x > 0.
double log_gamma_shift(double x, double big_a);

}  // namespace fwcs
