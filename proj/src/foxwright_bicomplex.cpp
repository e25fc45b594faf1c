#include "fwcs/foxwright_bicomplex.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "fwcs/gamma.hpp"

namespace fwcs {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

void BCFWParams::validate() const {
  for (const auto& u : upper) {
    if (!u.big_m.positive()) throw ValidationError("upper weight M must lie in D+ minus zero divisors");
  }
  for (const auto& l : lower) {
    if (!l.big_n.positive()) throw ValidationError("lower weight N must lie in D+ minus zero divisors");
  }
  component(1).validate();
  component(2).validate();
}

FWParams BCFWParams::component(int p) const {
  FWParams out;
  out.upper.reserve(upper.size());
  out.lower.reserve(lower.size());
  for (const auto& u : upper) out.upper.push_back({u.mu.component(p), u.big_m.component(p)});
  for (const auto& l : lower) out.lower.push_back({l.nu.component(p), l.big_n.component(p)});
  return out;
}

std::string to_string(Domain d) {
  switch (d) {
    case Domain::EntireBC: return "EntireBC";
    case Domain::Disk1Plane2: return "Disk1xPlane2";
    case Domain::Plane1Disk2: return "Plane1xDisk2";
    case Domain::Disk1Zero2: return "Disk1xZero2";
    case Domain::Zero1Disk2: return "Zero1xDisk2";
    case Domain::Plane1Zero2: return "Plane1xZero2";
    case Domain::Zero1Plane2: return "Zero1xPlane2";
    case Domain::HyperbolicBall: return "HyperbolicBall";
    case Domain::DivergentEverywhere: return "DivergentEverywhere";
  }
  return "?";
}

std::string case_label(Domain d) {
  static const char* labels[] = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix"};
  return labels[static_cast<int>(d)];
}

Domain domain_for(Sign s1, Sign s2) {
  using S = Sign;
  if (s1 == S::Positive && s2 == S::Positive) return Domain::EntireBC;
  if (s1 == S::Zero && s2 == S::Positive) return Domain::Disk1Plane2;
  if (s1 == S::Positive && s2 == S::Zero) return Domain::Plane1Disk2;
  if (s1 == S::Zero && s2 == S::Negative) return Domain::Disk1Zero2;
  if (s1 == S::Negative && s2 == S::Zero) return Domain::Zero1Disk2;
  if (s1 == S::Positive && s2 == S::Negative) return Domain::Plane1Zero2;
  if (s1 == S::Negative && s2 == S::Positive) return Domain::Zero1Plane2;
  if (s1 == S::Zero && s2 == S::Zero) return Domain::HyperbolicBall;
  return Domain::DivergentEverywhere;
}

Sign classify_sign(double x, double tol) {
  if (x > tol) return Sign::Positive;
  if (x < -tol) return Sign::Negative;
  return Sign::Zero;
}

bool boundary_condition_cartesian(Complex big_lambda1, Complex big_lambda2) {
  return big_lambda1.real() - 0.5 > std::abs(big_lambda2.imag());
}

bool boundary_condition_idempotent(Complex lambda1, Complex lambda2) {
  return lambda1.real() > 0.5 && lambda2.real() > 0.5;
}

ConvergenceReport classify(const BCFWParams& params) {
  params.validate();
  ConvergenceReport report;

  Hyperbolic upsilon(0.0, 0.0);
  for (const auto& l : params.lower) upsilon = upsilon + l.big_n;
  for (const auto& u : params.upper) upsilon = upsilon - u.big_m;
  report.upsilon = upsilon;

  const FWParams c1 = params.component(1);
  const FWParams c2 = params.component(2);
  report.v_scale = Hyperbolic(radius_scale(c1), radius_scale(c2));

  for (int p = 0; p < 2; ++p) {
    report.signs[p] = classify_sign(upsilon.component(p + 1) + 1.0, report.sign_tolerance);
    switch (report.signs[p]) {
      case Sign::Positive: report.radius[p] = kInf; break;
      case Sign::Zero: report.radius[p] = report.v_scale.component(p + 1); break;
      case Sign::Negative: report.radius[p] = 0.0; break;
    }
  }
  report.domain = domain_for(report.signs[0], report.signs[1]);

  report.lambda_idem = {boundary_exponent(c1), boundary_exponent(c2)};
  const Complex l1 = report.lambda_idem[0];
  const Complex l2 = report.lambda_idem[1];
  report.lambda_cart = {0.5 * (l1 + l2), Complex(0.0, 0.5) * (l1 - l2)};
  report.boundary_abs_convergent = boundary_condition_idempotent(l1, l2);
  return report;
}

Membership membership(const ConvergenceReport& report, double r1, double r2, bool allow_boundary) {
  const double r[2] = {r1, r2};
  bool on_circle[2] = {false, false};
  for (int p = 0; p < 2; ++p) {
    const double rad = report.radius[p];
    if (std::isinf(rad)) continue;
    if (rad == 0.0) {
      if (r[p] != 0.0) {
        return {false, p + 1, "component " + std::to_string(p + 1) + " must be zero (radius 0)"};
      }
      continue;
    }
    if (std::abs(r[p] - rad) <= kMarginTolerance * rad) {
      on_circle[p] = true;
    } else if (r[p] > rad) {
      return {false, p + 1,
              "component " + std::to_string(p + 1) + " modulus " + fmt(r[p]) + " exceeds radius " + fmt(rad)};
    }
  }
  if (on_circle[0] || on_circle[1]) {
    const bool full_boundary =
        report.domain == Domain::HyperbolicBall && on_circle[0] && on_circle[1];
    if (allow_boundary && full_boundary && report.boundary_abs_convergent) return {};
    const int p = on_circle[0] ? 1 : 2;
    return {false, p, "component " + std::to_string(p) + " lies on its convergence circle"};
  }
  return {};
}

BCEvalResult eval(const BCFWParams& params, const Bicomplex& z, const EvalOptions& options) {
  const ConvergenceReport report = classify(params);
  const Membership m = membership(report, std::abs(z.z1()), std::abs(z.z2()), options.allow_boundary);
  if (!m.inside) throw DomainViolation(m.reason, m.violating_component);

  BCEvalResult out;
  Complex values[2];
  for (int p = 1; p <= 2; ++p) {
    const FWParams comp = params.component(p);
    try {
      out.components[p - 1] = fwcs::eval(comp, z.component(p), options);
    } catch (const PoleError& e) {
      throw PoleError(std::string(e.what()) + " (component " + std::to_string(p) + ")", p);
    } catch (const DomainViolation& e) {
      throw DomainViolation(std::string(e.what()) + " (component " + std::to_string(p) + ")", p);
    }
    values[p - 1] = out.components[p - 1].value;
  }
  out.value = Bicomplex(values[0], values[1]);
  return out;
}

GridSpec default_grid(const ConvergenceReport& report, int n1, int n2) {
  auto extent = [](double rad) { return (std::isfinite(rad) && rad > 0.0) ? 1.5 * rad : 1.0; };
  return {n1, n2, extent(report.radius[0]), extent(report.radius[1])};
}

std::vector<RegionSample> region_sample(const BCFWParams& params, const GridSpec& grid) {
  if (grid.n1 < 1 || grid.n2 < 1) throw ValidationError("grid needs at least one probe per axis");
  const ConvergenceReport report = classify(params);
  std::vector<RegionSample> out;
  out.reserve(static_cast<std::size_t>(grid.n1) * grid.n2);
  auto coord = [](int i, int n, double max) { return n == 1 ? 0.0 : max * i / (n - 1); };
  for (int i = 0; i < grid.n1; ++i) {
    const double r1 = coord(i, grid.n1, grid.z1_max);
    for (int j = 0; j < grid.n2; ++j) {
      const double r2 = coord(j, grid.n2, grid.z2_max);
      out.push_back({r1, r2, membership(report, r1, r2).inside});
    }
  }
  return out;
}

}  // namespace fwcs
