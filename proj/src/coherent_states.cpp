#include "fwcs/coherent_states.hpp"

#include <cmath>
#include <limits>

#include "fwcs/gamma.hpp"

namespace fwcs {
namespace {

constexpr double kMaxLog = 709.0;

// Normalization series options: the series is entire, so only the term budget matters.
EvalOptions normalization_options() {
  EvalOptions opts;
  opts.tol = 1e-16;
  opts.max_terms = 100000;
  return opts;
}

}  // namespace

CoherentModel::CoherentModel(FWParams params, int truncation)
    : params_(std::move(params)), truncation_(truncation) {
  params_.validate();
  if (truncation_ < 1) throw ValidationError("coherent-state truncation K must be at least 1");
  for (const auto& u : params_.upper) {
    if (u.a.imag() != 0.0 || !(u.a.real() > 0.0)) {
      throw ValidationError("coherent-state models need real a_l > 0");
    }
  }
  for (const auto& l : params_.lower) {
    if (l.b.imag() != 0.0 || !(l.b.real() > 0.0)) {
      throw ValidationError("coherent-state models need real b_r > 0");
    }
  }
  if (!(margin(params_) > kMarginTolerance)) {
    throw ValidationError("coherent-state models need 1 + sum B - sum A > 0");
  }
  for (const auto& u : params_.upper) log_prefactor_ += log_gamma(u.a.real());
  for (const auto& l : params_.lower) log_prefactor_ -= log_gamma(l.b.real());
}

double log_rho(const CoherentModel& model, double k) {
  double s = log_gamma(k + 1.0) + model.log_gamma_prefactor();
  for (const auto& l : model.params().lower) s += log_gamma(l.b.real() + k * l.big_b);
  for (const auto& u : model.params().upper) s -= log_gamma(u.a.real() + k * u.big_a);
  return s;
}

double rho(const CoherentModel& model, long k) {
  if (k < 0) throw ValidationError("rho needs k >= 0");
  if (k == 0) return 1.0;
  const double lr = log_rho(model, static_cast<double>(k));
  if (std::abs(lr) > kMaxLog) throw Overflow("rho(" + std::to_string(k) + ") is not representable; use log_rho");
  return std::exp(lr);
}

double f_factor(const CoherentModel& model, long s) {
  if (s < 0) throw ValidationError("f needs s >= 0");
  const double sd = static_cast<double>(s);
  double log_f2 = std::log(sd + 1.0);
  for (const auto& l : model.params().lower) log_f2 += log_gamma_shift(l.b.real() + sd * l.big_b, l.big_b);
  for (const auto& u : model.params().upper) log_f2 -= log_gamma_shift(u.a.real() + sd * u.big_a, u.big_a);
  return std::exp(0.5 * log_f2);
}

Complex normalization(const CoherentModel& model, Complex w) {
  const EvalResult r = eval(model.params(), w, normalization_options());
  return std::exp(-model.log_gamma_prefactor()) * r.value;
}

double normalization(const CoherentModel& model, double zeta) {
  if (zeta < 0.0) throw ValidationError("normalization needs zeta >= 0");
  return normalization(model, Complex(zeta, 0.0)).real();
}

StateVector make_state(const CoherentModel& model, Complex z, const StateOptions& options) {
  StateVector state;
  state.z = z;
  const double abs_z = std::abs(z);
  if (abs_z == 0.0) {
    state.coeffs.assign(static_cast<std::size_t>(model.truncation()) + 1, Complex(0.0));
    state.coeffs[0] = 1.0;
    return state;
  }
  const double norm = normalization(model, abs_z * abs_z);
  const double log_norm = std::log(norm);
  state.norm_prefactor = 1.0 / std::sqrt(norm);
  const double log_abs = std::log(abs_z);
  const double phase = std::arg(z);

  // log |c_k|^2
  auto log_weight = [&](long k) {
    const double kd = static_cast<double>(k);
    return 2.0 * kd * log_abs - log_rho(model, kd) - log_norm;
  };

  std::vector<double> log_w;
  int k_trunc = model.truncation();
  for (;;) {
    for (long k = static_cast<long>(log_w.size()); k <= k_trunc; ++k) log_w.push_back(log_weight(k));

    // Discarded probability, summed directly past K until the terms are negligible.
    double tail = 0.0;
    double prev = std::exp(log_w.back());
    for (long k = k_trunc + 1;; ++k) {
      const double w = std::exp(log_weight(k));
      tail += w;
      if ((w <= 1e-17 * tail && w < prev) || w < 1e-300 || k > k_trunc + 4L * options.max_truncation) break;
      prev = w;
    }

    if (tail <= options.tail_target) {
      state.tail_mass = tail;
      break;
    }
    if (k_trunc >= options.max_truncation) {
      throw TruncationError("state tail " + std::to_string(tail) + " above target at K = " +
                            std::to_string(k_trunc));
    }
    k_trunc = std::min(2 * k_trunc, options.max_truncation);
  }

  state.coeffs.resize(static_cast<std::size_t>(k_trunc) + 1);
  for (int k = 0; k <= k_trunc; ++k) {
    state.coeffs[k] = std::polar(std::exp(0.5 * log_w[k]), k * phase);
  }
  return state;
}

Complex overlap(const CoherentModel& model, Complex z, Complex z_prime) {
  const double n1 = normalization(model, std::norm(z));
  const double n2 = normalization(model, std::norm(z_prime));
  return normalization(model, std::conj(z) * z_prime) / std::sqrt(n1 * n2);
}

LadderElements ladder_elements(const CoherentModel& model, long k) {
  if (k < 0) throw ValidationError("ladder elements need k >= 0");
  const double up = f_factor(model, k);
  const double down = k == 0 ? 0.0 : f_factor(model, k - 1);
  return {down, up, up * up, down * down};
}

double annihilation_residual(const CoherentModel& model, const StateVector& state) {
  const auto& c = state.coeffs;
  const int kmax = state.truncation();
  double sum = 0.0;
  for (int k = 0; k < kmax; ++k) sum += std::norm(f_factor(model, k) * c[k + 1] - state.z * c[k]);
  return std::sqrt(sum);
}

std::vector<double> photon_distribution(const StateVector& state) {
  std::vector<double> out;
  out.reserve(state.coeffs.size());
  for (const auto& c : state.coeffs) out.push_back(std::norm(c));
  return out;
}

BCCoherentModel::BCCoherentModel(BCFWParams params, int truncation) : params_(std::move(params)) {
  params_.validate();
  for (int p = 1; p <= 2; ++p) {
    try {
      components_.emplace_back(params_.component(p), truncation);
    } catch (const ValidationError& e) {
      throw ValidationError(std::string(e.what()) + " (component " + std::to_string(p) + ")");
    }
  }
}

Hyperbolic rho_b(const BCCoherentModel& model, long k) {
  return {rho(model.component(1), k), rho(model.component(2), k)};
}

Hyperbolic f_b(const BCCoherentModel& model, long s) {
  return {f_factor(model.component(1), s), f_factor(model.component(2), s)};
}

Bicomplex normalization_b(const BCCoherentModel& model, const Bicomplex& w) {
  Complex v[2];
  for (int p = 1; p <= 2; ++p) {
    v[p - 1] = normalization(model.component(p), w.component(p));
    if (!is_finite(v[p - 1]) || v[p - 1] == Complex(0.0)) {
      throw ValidationError("normalization singular in component " + std::to_string(p));
    }
  }
  return {v[0], v[1]};
}

BCStateVector make_state_b(const BCCoherentModel& model, const Bicomplex& z, const StateOptions& options) {
  BCStateVector out;
  out.z = z;
  for (int p = 1; p <= 2; ++p) out.components[p - 1] = make_state(model.component(p), z.component(p), options);
  return out;
}

Bicomplex overlap_b(const BCCoherentModel& model, const Bicomplex& z, const Bicomplex& z_prime) {
  const Bicomplex num = normalization_b(model, conj(z) * z_prime);
  const Bicomplex d1 = normalization_b(model, conj(z) * z);
  const Bicomplex d2 = normalization_b(model, conj(z_prime) * z_prime);
  Complex v[2];
  for (int p = 1; p <= 2; ++p) {
    v[p - 1] = num.component(p) / std::sqrt(d1.component(p).real() * d2.component(p).real());
  }
  return {v[0], v[1]};
}

}  // namespace fwcs
