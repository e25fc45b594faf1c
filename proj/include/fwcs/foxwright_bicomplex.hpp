#pragma once

#include <array>
#include <string>
#include <vector>

#include "fwcs/bicomplex.hpp"
#include "fwcs/foxwright.hpp"

namespace fwcs {

struct BCUpperPair {
  Bicomplex mu;
  Hyperbolic big_m;  // in D+ minus zero divisors
};

struct BCLowerPair {
  Bicomplex nu;
  Hyperbolic big_n;
};

/// Parameter block of the bicomplex series sum prod Gamma_b(mu+kM) / prod Gamma_b(nu+kN) Z^k/k!.
struct BCFWParams {
  std::vector<BCUpperPair> upper;
  std::vector<BCLowerPair> lower;

  std::size_t m() const noexcept { return upper.size(); }
  std::size_t n() const noexcept { return lower.size(); }

  void validate() const;
  /// Restriction to idempotent component p (1 or 2).
  FWParams component(int p) const;
};

/// Sign of Upsilon_p + 1 relative to zero.
enum class Sign { Negative, Zero, Positive };

/// One variant per sign pattern of (Upsilon_1 + 1, Upsilon_2 + 1).
enum class Domain {
  EntireBC,             // (>, >)  case (i)
  Disk1Plane2,          // (=, >)  case (ii)
  Plane1Disk2,          // (>, =)  case (iii)
  Disk1Zero2,           // (=, <)  case (iv)
  Zero1Disk2,           // (<, =)  case (v)
  Plane1Zero2,          // (>, <)  case (vi)
  Zero1Plane2,          // (<, >)  case (vii)
  HyperbolicBall,       // (=, =)  case (viii)
  DivergentEverywhere,  // (<, <)  case (ix)
};

std::string to_string(Domain d);
std::string case_label(Domain d);  // "i" ... "ix"
Domain domain_for(Sign s1, Sign s2);

struct ConvergenceReport {
  Hyperbolic upsilon;
  Hyperbolic v_scale;                 // prod N^N prod M^-M per component
  std::array<double, 2> radius{};     // +inf, v_scale_p or 0 per component
  std::array<Sign, 2> signs{};
  std::array<Complex, 2> lambda_idem{};  // lambda_1, lambda_2
  std::array<Complex, 2> lambda_cart{};  // Lambda_1, Lambda_2
  Domain domain = Domain::EntireBC;
  bool boundary_abs_convergent = false;
  double sign_tolerance = kMarginTolerance;
};

/// Sign of x relative to zero with absolute tolerance tol.
Sign classify_sign(double x, double tol = kMarginTolerance);

ConvergenceReport classify(const BCFWParams& params);

/// Boundary condition in cartesian form: Re(Lambda_1) - 1/2 > |Im(Lambda_2)|.
bool boundary_condition_cartesian(Complex big_lambda1, Complex big_lambda2);
/// Same condition in idempotent form: Re(lambda_1) > 1/2 and Re(lambda_2) > 1/2.
bool boundary_condition_idempotent(Complex lambda1, Complex lambda2);

/// Membership of a point with idempotent moduli (r1, r2) in the convergence region.
/// Points on a circle are outside, except for the full hyperbolic-ball boundary
/// when allow_boundary is set and the boundary condition holds.
struct Membership {
  bool inside = true;
  int violating_component = 0;
  std::string reason;
};
Membership membership(const ConvergenceReport& report, double r1, double r2,
                      bool allow_boundary = false);

struct BCEvalResult {
  Bicomplex value;
  std::array<EvalResult, 2> components;
};

BCEvalResult eval(const BCFWParams& params, const Bicomplex& z, const EvalOptions& options = {});

struct GridSpec {
  int n1 = 41;
  int n2 = 41;
  double z1_max = 1.0;
  double z2_max = 1.0;
};

/// Grid spanning 1.5x the finite radii (1 where a component radius is 0 or infinite).
GridSpec default_grid(const ConvergenceReport& report, int n1 = 41, int n2 = 41);

struct RegionSample {
  double z1_abs;
  double z2_abs;
  bool inside;
};

std::vector<RegionSample> region_sample(const BCFWParams& params, const GridSpec& grid);

}  // namespace fwcs
