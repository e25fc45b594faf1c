#pragma once

#include <array>
#include <vector>

#include "fwcs/bicomplex.hpp"
#include "fwcs/foxwright.hpp"
#include "fwcs/foxwright_bicomplex.hpp"

namespace fwcs {

/// Fox-Wright model with real positive a_l, b_r and a positive convergence margin,
/// so the normalization function is entire.
class CoherentModel {
 public:
  explicit CoherentModel(FWParams params, int truncation = 32);

  const FWParams& params() const noexcept { return params_; }
  int truncation() const noexcept { return truncation_; }
  /// log[prod Gamma(a_l) / prod Gamma(b_r)].
  double log_gamma_prefactor() const noexcept { return log_prefactor_; }

 private:
  FWParams params_;
  int truncation_;
  double log_prefactor_ = 0.0;
};

/// Truncation policy for make_state: K doubles from the model truncation until the
/// discarded probability is at most tail_target, up to max_truncation.
struct StateOptions {
  double tail_target = 1e-12;
  int max_truncation = 1 << 16;
};

struct StateVector {
  std::vector<Complex> coeffs;  // c_0 ... c_K
  double norm_prefactor = 1.0;  // 1 / sqrt(N(|z|^2))
  Complex z;
  double tail_mass = 0.0;  // sum_{k>K} |c_k|^2

  int truncation() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
};

struct LadderElements {
  double f_down;  // f(k-1), 0 at k = 0
  double f_up;    // f(k)
  double aa_dag;  // <k|A- A+|k> = f(k)^2
  double adag_a;  // <k|A+ A-|k> = f(k-1)^2
};

/// log rho(k) = log Gamma(k+1) + log[prod Gamma(a)/prod Gamma(b)] + log[prod Gamma(b+kB)/prod Gamma(a+kA)].
double log_rho(const CoherentModel& model, double k);
/// rho(k); throws Overflow when it is not representable (use log_rho).
double rho(const CoherentModel& model, long k);
/// f(s) with f(s)^2 = rho(s+1)/rho(s).
double f_factor(const CoherentModel& model, long s);

/// N(zeta) = [prod Gamma(b)/prod Gamma(a)] psi(zeta), evaluated through the Fox-Wright series.
double normalization(const CoherentModel& model, double zeta);
/// Same series at a complex argument (used by overlaps, argument conj(z) z').
Complex normalization(const CoherentModel& model, Complex w);

StateVector make_state(const CoherentModel& model, Complex z, const StateOptions& options = {});
/// <z|z'> = N(conj(z) z') / sqrt(N(|z|^2) N(|z'|^2)).
Complex overlap(const CoherentModel& model, Complex z, Complex z_prime);
LadderElements ladder_elements(const CoherentModel& model, long k);
/// || A- c - z c ||_2 over rows k = 0 ... K-1, (A- c)_k = f(k) c_{k+1}. Row K needs the
/// discarded c_{K+1} and is excluded; its size is bounded by the tail mass.
double annihilation_residual(const CoherentModel& model, const StateVector& state);
/// |c_k|^2 for k = 0 ... K.
std::vector<double> photon_distribution(const StateVector& state);

/// Bicomplex model: each idempotent component is a CoherentModel; Upsilon >_h -1.
class BCCoherentModel {
 public:
  explicit BCCoherentModel(BCFWParams params, int truncation = 32);

  const BCFWParams& params() const noexcept { return params_; }
  const CoherentModel& component(int p) const { return components_[p - 1]; }

 private:
  BCFWParams params_;
  std::vector<CoherentModel> components_;
};

struct BCStateVector {
  std::array<StateVector, 2> components;
  Bicomplex z;
};

Hyperbolic rho_b(const BCCoherentModel& model, long k);
Hyperbolic f_b(const BCCoherentModel& model, long s);
Bicomplex normalization_b(const BCCoherentModel& model, const Bicomplex& w);
BCStateVector make_state_b(const BCCoherentModel& model, const Bicomplex& z, const StateOptions& options = {});
Bicomplex overlap_b(const BCCoherentModel& model, const Bicomplex& z, const Bicomplex& z_prime);

}  // namespace fwcs
