#pragma once

#include <optional>
#include <vector>

#include "fwcs/bicomplex.hpp"

namespace fwcs {

struct UpperPair {
  Complex a;
  double big_a;  // A_l > 0
};

struct LowerPair {
  Complex b;
  double big_b;  // B_r > 0
};

/// Parameter block (a_l, A_l)_{l<=p}; (b_r, B_r)_{r<=q} of a Fox-Wright series.
struct FWParams {
  std::vector<UpperPair> upper;
  std::vector<LowerPair> lower;

  std::size_t p() const noexcept { return upper.size(); }
  std::size_t q() const noexcept { return lower.size(); }

  /// Throws ValidationError unless every weight is positive and finite and no
  /// k = 0 argument sits on a gamma pole.
  void validate() const;
};

struct EvalOptions {
  double tol = 1e-14;
  int max_terms = 10000;
  // Permit |z| equal to the radius when the boundary convergence condition holds.
  bool allow_boundary = false;
};

struct EvalResult {
  Complex value;
  int terms_used = 0;
  double tail_bound = 0.0;
};

// Tolerance used to decide that the convergence margin is exactly zero.
inline constexpr double kMarginTolerance = 1e-12;

/// Delta = 1 + sum B_r - sum A_l.
double margin(const FWParams& params);

/// prod B_r^{B_r} prod A_l^{-A_l}; the radius when the margin is zero.
double radius_scale(const FWParams& params);

/// Radius of convergence: +inf (Delta > 0), radius_scale (Delta = 0) or 0 (Delta < 0).
double radius(const FWParams& params);

/// lambda = sum b_r - sum a_l - (q - p)/2; boundary convergence needs Re(lambda) > 1/2.
Complex boundary_exponent(const FWParams& params);

/// Sum of prod Gamma(a_l + kA_l) / prod Gamma(b_r + kB_r) z^k / k!.
EvalResult eval(const FWParams& params, Complex z, const EvalOptions& options = {});

/// Plain partial sum over k < n_terms, without domain checks or stop rule.
Complex partial_sum(const FWParams& params, Complex z, int n_terms);

/// Walks the series coefficients c_k = prod Gamma(a+kA) / prod Gamma(b+kB) / k! in log
/// form using the gamma-ratio recurrence. Lower-pair poles give c_k = 0.
class CoefficientWalker {
 public:
  explicit CoefficientWalker(const FWParams& params);

  long index() const noexcept { return k_; }
  bool is_zero() const noexcept { return lower_poles_ > 0; }
  /// log c_k (undefined when is_zero()).
  Complex log_coefficient() const noexcept { return log_c_; }
  void advance();

 private:
  void recompute();

  const FWParams* params_;
  long k_ = 0;
  std::vector<Complex> log_upper_;
  std::vector<Complex> log_lower_;
  std::vector<bool> lower_pole_;
  int lower_poles_ = 0;
  double log_factorial_ = 0.0;
  Complex log_c_;
};

struct PfqReduction {
  Complex prefactor;
  std::vector<Complex> upper;
  std::vector<Complex> lower;
};

/// Some(...) iff all A_l = B_r = 1; then psi(z) = prefactor * pFq(upper; lower; z).
std::optional<PfqReduction> as_pfq(const FWParams& params);

// Direct classical series, independent of eval(); conformance oracles only.
Complex oracle_pfq(const std::vector<Complex>& upper, const std::vector<Complex>& lower,
                   Complex z, int max_terms = 20000);
Complex oracle_mittag_leffler(double big_b, Complex b, Complex z, int max_terms = 20000);
double oracle_bessel_j(double nu, double y, int max_terms = 20000);

}  // namespace fwcs
