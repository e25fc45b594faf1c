#pragma once

#include <functional>
#include <string>

namespace fwcs {

/// Tolerances and budget for the real-line quadratures used by the continuous
/// spectrum and the moment checks.
struct QuadConfig {
  double rel_tol = 1e-12;
  double abs_tol = 1e-300;
  int max_subdivisions = 4000;
  double e_max_drop = 40.0;  // log-drop below the integrand peak that sets the upper limit

  void validate() const;
};

struct QuadResult {
  double value = 0.0;
  double err_est = 0.0;
  int evaluations = 0;
};

enum class QuadScheme { GaussKronrod, TanhSinh };

std::string to_string(QuadScheme scheme);
QuadScheme parse_scheme(const std::string& name);  // "gk" | "ts"

using RealFunction = std::function<double(double)>;

/// Globally adaptive 7/15-point Gauss-Kronrod on [a, b].
QuadResult integrate_gauss_kronrod(const RealFunction& f, double a, double b, const QuadConfig& cfg);

/// Tanh-sinh (double exponential) rule on [a, b] with level halving until two
/// successive levels agree to rel_tol.
QuadResult integrate_tanh_sinh(const RealFunction& f, double a, double b, const QuadConfig& cfg);

QuadResult integrate(QuadScheme scheme, const RealFunction& f, double a, double b, const QuadConfig& cfg);

}  // namespace fwcs
