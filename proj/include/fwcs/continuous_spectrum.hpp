#pragma once

#include <functional>

#include "fwcs/coherent_states.hpp"
#include "fwcs/quadrature.hpp"

namespace fwcs {

/// log rho~(E): the parameter function continued to real E >= 0.
double log_rho_tilde(const CoherentModel& model, double e);
/// rho~(E); throws Overflow when not representable.
double rho_tilde(const CoherentModel& model, double e);

/// Upper integration limit for a log-concave-tailed integrand on [0, inf): the first
/// point past the peak where log f drops e_max_drop below its maximum.
double integration_cutoff(const std::function<double(double)>& log_f, double drop);

struct NuResult {
  double value = 0.0;
  double err_est = 0.0;
  QuadScheme scheme = QuadScheme::GaussKronrod;
  double e_max = 0.0;
};

/// FW-generalized nu-function: integral over E of zeta^E / rho~(E).
NuResult nu(const CoherentModel& model, double zeta, const QuadConfig& cfg = {},
            QuadScheme scheme = QuadScheme::GaussKronrod);

/// Component-wise nu on a bicomplex model; W in D+.
Hyperbolic nu_bicomplex(const BCCoherentModel& model, Hyperbolic w, const QuadConfig& cfg = {},
                        QuadScheme scheme = QuadScheme::GaussKronrod);

/// Overlap of two continuous-spectrum states. The numerator integrates
/// |z|^E |z'|^E e^{iE(arg z' - arg z)} / rho~(E), i.e. conj(z^E) z'^E with principal branches.
Complex overlap_tilde(const CoherentModel& model, Complex z, Complex z_prime, const QuadConfig& cfg = {},
                      QuadScheme scheme = QuadScheme::GaussKronrod);

/// Continuous-spectrum coherent state |z~>: amplitude density z^E / sqrt(rho~(E) nu(|z|^2)).
class ContinuousState {
 public:
  ContinuousState(const CoherentModel& model, Complex z, const QuadConfig& cfg = {},
                  QuadScheme scheme = QuadScheme::GaussKronrod);

  Complex density(double e) const;
  double nu_value() const noexcept { return nu_; }
  /// Integral of |density|^2 over E >= 0.
  QuadResult norm_squared() const;

 private:
  const CoherentModel* model_;
  Complex z_;
  QuadConfig cfg_;
  QuadScheme scheme_;
  double nu_;
};

Complex state_density(const CoherentModel& model, Complex z, double e, const QuadConfig& cfg = {});

}  // namespace fwcs
