#include "fwcs/continuous_spectrum.hpp"

#include <cmath>
#include <limits>

namespace fwcs {
namespace {

constexpr double kMaxLog = 709.0;
constexpr double kCutoffLimit = 1e7;

}  // namespace

double log_rho_tilde(const CoherentModel& model, double e) {
  if (e < 0.0) throw ValidationError("rho~ needs E >= 0");
  return log_rho(model, e);
}

double rho_tilde(const CoherentModel& model, double e) {
  const double lr = log_rho_tilde(model, e);
  if (std::abs(lr) > kMaxLog) throw Overflow("rho~(E) not representable; use log_rho_tilde");
  return std::exp(lr);
}

double integration_cutoff(const std::function<double(double)>& log_f, double drop) {
  double peak = log_f(0.0);
  double e = 0.0;
  for (;;) {
    const double step = std::max(0.25, 0.01 * e);
    e += step;
    const double v = log_f(e);
    if (v > peak) {
      peak = v;
    } else if (v < peak - drop) {
      return e;
    }
    if (e > kCutoffLimit) throw QuadratureFailure("integrand does not decay within E < 1e7");
  }
}

NuResult nu(const CoherentModel& model, double zeta, const QuadConfig& cfg, QuadScheme scheme) {
  cfg.validate();
  if (zeta < 0.0) throw ValidationError("nu needs zeta >= 0");
  NuResult out;
  out.scheme = scheme;
  if (zeta == 0.0) return out;

  const double log_zeta = std::log(zeta);
  auto log_f = [&](double e) { return e * log_zeta - log_rho_tilde(model, e); };
  out.e_max = integration_cutoff(log_f, cfg.e_max_drop);
  const QuadResult q = integrate(scheme, [&](double e) { return std::exp(log_f(e)); }, 0.0, out.e_max, cfg);
  out.value = q.value;
  out.err_est = q.err_est;
  return out;
}

Hyperbolic nu_bicomplex(const BCCoherentModel& model, Hyperbolic w, const QuadConfig& cfg, QuadScheme scheme) {
  if (!w.nonnegative()) throw ValidationError("nu_bicomplex needs W in D+");
  return {nu(model.component(1), w.c1(), cfg, scheme).value, nu(model.component(2), w.c2(), cfg, scheme).value};
}

Complex overlap_tilde(const CoherentModel& model, Complex z, Complex z_prime, const QuadConfig& cfg,
                      QuadScheme scheme) {
  if (std::abs(z) == 0.0 || std::abs(z_prime) == 0.0) {
    throw ValidationError("continuous overlap needs nonzero z and z'");
  }
  const double log_mod = std::log(std::abs(z)) + std::log(std::abs(z_prime));
  const double dphase = std::arg(z_prime) - std::arg(z);
  auto log_f = [&](double e) { return e * log_mod - log_rho_tilde(model, e); };
  const double e_max = integration_cutoff(log_f, cfg.e_max_drop);
  const double re = integrate(scheme, [&](double e) { return std::exp(log_f(e)) * std::cos(e * dphase); },
                              0.0, e_max, cfg).value;
  double im = 0.0;
  if (dphase != 0.0) {
    im = integrate(scheme, [&](double e) { return std::exp(log_f(e)) * std::sin(e * dphase); }, 0.0, e_max, cfg)
             .value;
  }
  const double n1 = nu(model, std::norm(z), cfg, scheme).value;
  const double n2 = nu(model, std::norm(z_prime), cfg, scheme).value;
  return Complex(re, im) / std::sqrt(n1 * n2);
}

ContinuousState::ContinuousState(const CoherentModel& model, Complex z, const QuadConfig& cfg, QuadScheme scheme)
    : model_(&model), z_(z), cfg_(cfg), scheme_(scheme) {
  if (std::abs(z) == 0.0) throw ValidationError("continuous state needs z != 0");
  nu_ = nu(model, std::norm(z), cfg, scheme).value;
}

Complex ContinuousState::density(double e) const {
  // z^E by the principal branch exp(E Log z).
  const double log_mod = e * std::log(std::abs(z_)) - 0.5 * log_rho_tilde(*model_, e) - 0.5 * std::log(nu_);
  return std::polar(std::exp(log_mod), e * std::arg(z_));
}

QuadResult ContinuousState::norm_squared() const {
  auto log_f = [&](double e) { return 2.0 * std::log(std::abs(density(e))); };
  const double e_max = integration_cutoff(log_f, cfg_.e_max_drop);
  return integrate(scheme_, [&](double e) { return std::norm(density(e)); }, 0.0, e_max, cfg_);
}

Complex state_density(const CoherentModel& model, Complex z, double e, const QuadConfig& cfg) {
  if (e < 0.0) throw ValidationError("state density needs E >= 0");
  return ContinuousState(model, z, cfg).density(e);
}

}  // namespace fwcs
