#pragma once

#include <vector>

#include "fwcs/coherent_states.hpp"
#include "fwcs/quadrature.hpp"

namespace fwcs {

struct HUpper {
  double alpha;
  double big_a;
};

struct HLower {
  double beta;
  double big_b;
};

/// Parameter block of H_{p,q+1}^{q+1,0}[x | (alpha_i, A_i); (beta_j, B_j)], whose Mellin
/// transform is prod Gamma(beta_j + s B_j) / prod Gamma(alpha_i + s A_i).
struct HWeightParams {
  std::vector<HUpper> upper;
  std::vector<HLower> lower;

  /// Shift rule of the resolution-of-unity weight: upper (a-A, A); lower (0,1), (b-B, B).
  static HWeightParams from_model(const CoherentModel& model);

  void validate() const;
  /// 1 + sum B_j - sum A_i - 1 over the lower list including (0,1); positive for valid blocks.
  double decay_margin() const;
  /// Rightmost pole of the numerator gammas: max_j(-beta_j / B_j).
  double rightmost_pole() const;
};

/// Vertical-line contour for the inverse Mellin integral.
struct ContourConfig {
  double c_offset = 0.5;      // abscissa distance right of the rightmost pole
  bool saddle_abscissa = true; // move right to the saddle of |M(c)| x^-c when it lies further right
  double initial_step = 0.25;
  double rel_tol = 1e-10;
  double envelope_drop = 1e-18;  // truncate where |integrand| < envelope_drop * peak
  int max_halvings = 14;
};

/// Mellin kernel prod Gamma(beta + sB) / prod Gamma(alpha + sA); denominator poles give 0.
Complex mellin_kernel(const HWeightParams& hp, Complex s);

struct HEvaluation {
  double value = 0.0;
  double abscissa = 0.0;
  int nodes = 0;
  std::vector<double> level_estimates;  // trapezoid value after each halving
};

HEvaluation eval_h_detail(const HWeightParams& hp, double x, const ContourConfig& cc = {});
double eval_h(const HWeightParams& hp, double x, const ContourConfig& cc = {});
/// lim_{x -> 0+} H(x); DomainError when it diverges.
double eval_h_at_zero(const HWeightParams& hp);

/// W(x) = psi(x) H(x): Fox-Wright series without prefactor times the H-function.
double weight(const CoherentModel& model, double x, const ContourConfig& cc = {});
/// Radial density of the resolution-of-unity measure (angular factor integrated out).
double measure_density(const CoherentModel& model, double x, const ContourConfig& cc = {});
/// Per-component densities for a bicomplex model at x_p = |z_p|^2.
Hyperbolic measure_density_b(const BCCoherentModel& model, Hyperbolic x, const ContourConfig& cc = {});

/// Numerical Mellin transform  integral_0^inf x^{s-1} H(x) dx.
QuadResult mellin_transform_numeric(const HWeightParams& hp, double s, const QuadConfig& cfg,
                                    const ContourConfig& cc = {});

struct MomentCheck {
  long k = 0;
  double lhs = 0.0;  // integral of x^k W(x)/N(x)
  double rhs = 0.0;  // rho(k)
  double rel_err = 0.0;
  double err_est = 0.0;
};

/// Moment identity integral_0^inf x^k W(x)/N(x) dx = rho(k), with W/N formed from the
/// MB-evaluated H-function.
MomentCheck moment_check(const CoherentModel& model, long k, const QuadConfig& cfg,
                         const ContourConfig& cc = {});

/// Default outer-quadrature settings for moment checks.
QuadConfig moment_quad_config();

}  // namespace fwcs
