#include "criteria.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "fwcs/coherent_states.hpp"
#include "fwcs/continuous_spectrum.hpp"
#include "fwcs/foxwright.hpp"
#include "fwcs/foxwright_bicomplex.hpp"
#include "fwcs/gamma.hpp"
#include "fwcs/hfunction.hpp"
#include "support/oracles.hpp"

namespace acceptance {

using fwcs::Bicomplex;
using fwcs::Complex;
using fwcs::FWParams;
using fwcs::Hyperbolic;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// |got - want| relative to max(1, |want|).
double mixed_err(Complex got, Complex want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }
double rel_err(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

std::vector<oracle::Pair> oracle_upper(const FWParams& p) {
  std::vector<oracle::Pair> out;
  for (const auto& u : p.upper) out.push_back({u.a, u.big_a});
  return out;
}

std::vector<oracle::Pair> oracle_lower(const FWParams& p) {
  std::vector<oracle::Pair> out;
  for (const auto& l : p.lower) out.push_back({l.b, l.big_b});
  return out;
}

CriterionResult timed(int id, const std::string& name, const std::function<void(CriterionResult&)>& body) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

CriterionResult within_budget(CriterionResult r, double budget) {
  if (r.seconds > budget) {
    r.pass = false;
    r.detail += " over budget " + fmt("%.0f", budget) + "s";
  }
  return r;
}

// Random coherent-state model with p, q <= 2 and margin at least 0.2.
FWParams random_coherent_params(std::mt19937_64& rng) {
  for (;;) {
    FWParams p;
    const int np = uniform_int(rng, 0, 2);
    const int nq = uniform_int(rng, 0, 2);
    for (int i = 0; i < np; ++i) p.upper.push_back({Complex(uniform(rng, 0.5, 3.0)), uniform(rng, 0.5, 2.0)});
    for (int i = 0; i < nq; ++i) p.lower.push_back({Complex(uniform(rng, 0.5, 3.0)), uniform(rng, 0.5, 2.0)});
    if (fwcs::margin(p) >= 0.2) return p;
  }
}

}  // namespace

CriterionResult reduction_conformance(std::uint64_t seed) {
  auto res = timed(1, "reduction conformance (A=B=1 vs pFq)", [&](CriterionResult& r) {
    std::mt19937_64 rng(seed);
    // Points where the series cancels by more than this factor are redrawn.
    constexpr double kMaxCondition = 1e3;
    double worst = 0.0;
    int points = 0;
    int rejected = 0;
    for (int m = 0; m < 50; ++m) {
      FWParams p;
      const int nq = uniform_int(rng, 0, 3);
      const int np = uniform_int(rng, 0, std::min(3, nq + 1));
      for (int i = 0; i < np; ++i) p.upper.push_back({Complex(uniform(rng, 0.2, 5.0)), 1.0});
      for (int i = 0; i < nq; ++i) p.lower.push_back({Complex(uniform(rng, 0.2, 5.0)), 1.0});
      const auto red = fwcs::as_pfq(p);
      if (!red) throw std::runtime_error("A=B=1 model not recognised as pFq");
      const double r_max = np <= nq ? 10.0 : 0.9 * fwcs::radius(p);
      for (int j = 0; j < 10;) {
        const Complex z = std::polar(uniform(rng, 0.0, r_max), uniform(rng, -kPi / 2, kPi / 2));
        const Complex want = red->prefactor * fwcs::oracle_pfq(red->upper, red->lower, z);
        // Positive coefficients: the absolute series is the same function at |z|.
        const double abs_series = std::abs(red->prefactor * fwcs::oracle_pfq(red->upper, red->lower, Complex(std::abs(z))));
        if (abs_series > kMaxCondition * std::abs(want)) {
          ++rejected;
          continue;
        }
        const Complex got = fwcs::eval(p, z).value;
        worst = std::max(worst, rel_err(got, want));
        ++points;
        ++j;
      }
    }
    r.pass = worst <= 1e-10;
    r.detail = "max_rel_err=" + fmt("%.3e", worst) + " points=" + std::to_string(points) +
               " redrawn_ill_conditioned=" + std::to_string(rejected);
  });
  return within_budget(res, 10.0);
}

CriterionResult mittag_leffler_bessel() {
  return timed(2, "Mittag-Leffler and Bessel reductions", [&](CriterionResult& r) {
    FWParams e11;
    e11.upper = {{Complex(1.0), 1.0}};
    e11.lower = {{Complex(1.0), 1.0}};
    double err_exp = 0.0;
    for (int i = 0; i <= 10; ++i) {
      for (int j = 0; j < 16; ++j) {
        const Complex z = std::polar(0.5 * i, 2 * kPi * j / 16);
        err_exp = std::max(err_exp, mixed_err(fwcs::eval(e11, z).value, std::exp(z)));
      }
    }
    FWParams e21;
    e21.upper = {{Complex(1.0), 1.0}};
    e21.lower = {{Complex(1.0), 2.0}};
    double err_cosh = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const double x = 0.1 * i;
      err_cosh = std::max(err_cosh, rel_err(fwcs::eval(e21, Complex(x)).value, std::cosh(std::sqrt(x))));
    }
    double err_j = 0.0;
    for (double nu : {0.0, 1.0}) {
      FWParams bj;
      bj.lower = {{Complex(nu + 1.0), 1.0}};
      for (int i = 0; i <= 100; ++i) {
        const double y = 0.1 * i;
        const Complex got = std::pow(0.5 * y, nu) * fwcs::eval(bj, Complex(-0.25 * y * y)).value;
        err_j = std::max(err_j, mixed_err(got, std::cyl_bessel_j(nu, y)));
      }
    }
    r.pass = err_exp <= 1e-12 && err_cosh <= 1e-10 && err_j <= 1e-10;
    r.detail = "exp=" + fmt("%.3e", err_exp) + " cosh=" + fmt("%.3e", err_cosh) + " J0/J1=" + fmt("%.3e", err_j);
  });
}

CriterionResult radius_law(std::uint64_t seed) {
  return timed(3, "radius law (ratio test at k=2000)", [&](CriterionResult& r) {
    std::mt19937_64 rng(seed + 3);
    // Delta = 0 parameter set with complex a, b.
    auto delta_zero = [&]() {
      FWParams p;
      const int np = uniform_int(rng, 1, 3);
      const int nq = uniform_int(rng, 0, 2);
      double sum_b = 0.0;
      for (int i = 0; i < nq; ++i) {
        const double big_b = uniform(rng, 0.3, 2.0);
        sum_b += big_b;
        p.lower.push_back({Complex(uniform(rng, 0.2, 5.0), uniform(rng, -2.0, 2.0)), big_b});
      }
      std::vector<double> w(np);
      double sw = 0.0;
      for (auto& x : w) sw += (x = uniform(rng, 0.5, 1.5));
      for (int i = 0; i < np; ++i) {
        p.upper.push_back({Complex(uniform(rng, 0.2, 5.0), uniform(rng, -2.0, 2.0)), w[i] / sw * (1.0 + sum_b)});
      }
      return p;
    };
    double worst = 0.0;
    for (int m = 0; m < 20; ++m) {
      const FWParams p = delta_zero();
      const double emp = oracle::ratio_test_radius(oracle_upper(p), oracle_lower(p), 2000);
      worst = std::max(worst, std::abs(emp / fwcs::radius(p) - 1.0));
    }
    double worst_bc = 0.0;
    for (int m = 0; m < 20; ++m) {
      // Component p has Upsilon_p = -1; the other component is entire.
      const int crit = 1 + m % 2;
      const FWParams c_crit = delta_zero();
      FWParams c_other = c_crit;
      for (auto& u : c_other.upper) u.big_a *= 0.5;
      fwcs::BCFWParams bc;
      for (std::size_t i = 0; i < c_crit.upper.size(); ++i) {
        const auto& a = c_crit.upper[i];
        const auto& b = c_other.upper[i];
        bc.upper.push_back(crit == 1 ? fwcs::BCUpperPair{Bicomplex(a.a, b.a), Hyperbolic(a.big_a, b.big_a)}
                                     : fwcs::BCUpperPair{Bicomplex(b.a, a.a), Hyperbolic(b.big_a, a.big_a)});
      }
      for (std::size_t i = 0; i < c_crit.lower.size(); ++i) {
        const auto& a = c_crit.lower[i];
        const auto& b = c_other.lower[i];
        bc.lower.push_back(crit == 1 ? fwcs::BCLowerPair{Bicomplex(a.b, b.b), Hyperbolic(a.big_b, b.big_b)}
                                     : fwcs::BCLowerPair{Bicomplex(b.b, a.b), Hyperbolic(b.big_b, a.big_b)});
      }
      const auto report = fwcs::classify(bc);
      const FWParams comp = bc.component(crit);
      const double emp = oracle::ratio_test_radius(oracle_upper(comp), oracle_lower(comp), 2000);
      if (report.signs[crit - 1] != fwcs::Sign::Zero) throw std::runtime_error("constructed component is not critical");
      worst_bc = std::max(worst_bc, std::abs(emp / report.radius[crit - 1] - 1.0));
    }
    r.pass = worst <= 0.01 && worst_bc <= 0.01;
    r.detail = "complex max_rel_dev=" + fmt("%.3e", worst) + " bicomplex max_rel_dev=" + fmt("%.3e", worst_bc);
  });
}

CriterionResult nine_case_classifier(std::uint64_t seed) {
  return timed(4, "nine-case classifier and boundary flag", [&](CriterionResult& r) {
    struct Row {
      char s1, s2;
      fwcs::Domain want;
      const char* label;
    };
    const Row table[] = {
        {'>', '>', fwcs::Domain::EntireBC, "i"},          {'=', '>', fwcs::Domain::Disk1Plane2, "ii"},
        {'>', '=', fwcs::Domain::Plane1Disk2, "iii"},     {'=', '<', fwcs::Domain::Disk1Zero2, "iv"},
        {'<', '=', fwcs::Domain::Zero1Disk2, "v"},        {'>', '<', fwcs::Domain::Plane1Zero2, "vi"},
        {'<', '>', fwcs::Domain::Zero1Plane2, "vii"},     {'=', '=', fwcs::Domain::HyperbolicBall, "viii"},
        {'<', '<', fwcs::Domain::DivergentEverywhere, "ix"},
    };
    // One upper and one lower pair: Upsilon_p + 1 = 1 + N_p - M_p.
    auto weights = [](char s) -> std::pair<double, double> {
      switch (s) {
        case '>': return {1.0, 0.5};
        case '=': return {0.5, 1.5};
        default: return {0.5, 2.0};
      }
    };
    int matched = 0;
    std::string bad;
    for (const auto& row : table) {
      const auto [n1, m1] = weights(row.s1);
      const auto [n2, m2] = weights(row.s2);
      fwcs::BCFWParams bc;
      bc.upper.push_back({Bicomplex(Complex(1.0, 0.5), Complex(2.0, -0.5)), Hyperbolic(m1, m2)});
      bc.lower.push_back({Bicomplex(Complex(1.5, 0.0), Complex(0.5, 1.0)), Hyperbolic(n1, n2)});
      const auto report = fwcs::classify(bc);
      if (report.domain == row.want && fwcs::case_label(report.domain) == row.label) {
        ++matched;
      } else {
        bad += std::string(" ") + row.label;
      }
    }
    std::mt19937_64 rng(seed + 4);
    int agree = 0;
    for (int i = 0; i < 1000; ++i) {
      const Complex big1(uniform(rng, -3.0, 3.0), uniform(rng, -3.0, 3.0));
      const Complex big2(uniform(rng, -3.0, 3.0), uniform(rng, -3.0, 3.0));
      const Complex iu(0.0, 1.0);
      const bool cart = fwcs::boundary_condition_cartesian(big1, big2);
      const bool idem = fwcs::boundary_condition_idempotent(big1 - iu * big2, big1 + iu * big2);
      if (cart == idem) ++agree;
    }
    r.pass = matched == 9 && agree == 1000;
    r.detail = "cases_matched=" + std::to_string(matched) + "/9" + (bad.empty() ? "" : " mismatched:" + bad) +
               " flag_agree=" + std::to_string(agree) + "/1000";
  });
}

CriterionResult idempotent_homomorphism(std::uint64_t seed) {
  return timed(5, "idempotent homomorphism", [&](CriterionResult& r) {
    std::mt19937_64 rng(seed + 5);
    auto rc = [&](double lo, double hi) { return Complex(uniform(rng, lo, hi), uniform(rng, lo, hi)); };
    const Complex iu(0.0, 1.0);
    double arith = 0.0;
    double gam = 0.0;
    double series = 0.0;
    fwcs::BCFWParams bc;
    bc.upper.push_back({Bicomplex(Complex(1.2, 0.3), Complex(0.8, -0.4)), Hyperbolic(0.7, 1.1)});
    bc.lower.push_back({Bicomplex(Complex(1.5, 0.2), Complex(2.0, 0.1)), Hyperbolic(1.0, 1.3)});
    const FWParams c1 = bc.component(1);
    const FWParams c2 = bc.component(2);
    for (int i = 0; i < 10000; ++i) {
      // Cartesian operands a + jb; the product rule (a1 a2 - b1 b2) + j(a1 b2 + a2 b1).
      const Complex a1 = rc(-2, 2), b1 = rc(-2, 2), a2 = rc(-2, 2), b2 = rc(-2, 2);
      const Bicomplex x = Bicomplex::from_cartesian(a1, b1);
      const Bicomplex y = Bicomplex::from_cartesian(a2, b2);
      const Bicomplex prod = x * y;
      const Bicomplex sum = x + y;
      const Bicomplex diff = x - y;
      arith = std::max({arith, mixed_err(prod.a(), a1 * a2 - b1 * b2), mixed_err(prod.b(), a1 * b2 + a2 * b1),
                        mixed_err(sum.a(), a1 + a2), mixed_err(sum.b(), b1 + b2), mixed_err(diff.a(), a1 - a2),
                        mixed_err(diff.b(), b1 - b2)});
      for (int p = 1; p <= 2; ++p) {
        arith = std::max(arith, mixed_err(prod.component(p), x.component(p) * y.component(p)));
      }
      if (!x.is_singular()) {
        const Bicomplex inv = fwcs::inverse(x);
        for (int p = 1; p <= 2; ++p) arith = std::max(arith, mixed_err(inv.component(p), 1.0 / x.component(p)));
      }
      // j = -i e1 + i e2 in idempotent form.
      const Bicomplex j = Bicomplex::from_cartesian(Complex(0.0), Complex(1.0));
      arith = std::max({arith, std::abs(j.z1() + iu), std::abs(j.z2() - iu)});

      const Bicomplex w(rc(0.1, 5.0), rc(0.1, 5.0));
      const Bicomplex g = fwcs::gamma_bicomplex(w);
      for (int p = 1; p <= 2; ++p) gam = std::max(gam, rel_err(g.component(p), fwcs::gamma(w.component(p))));

      const Bicomplex z(rc(-3.0, 3.0), rc(-3.0, 3.0));
      const Bicomplex v = fwcs::eval(bc, z).value;
      series = std::max({series, mixed_err(v.z1(), fwcs::eval(c1, z.z1()).value),
                         mixed_err(v.z2(), fwcs::eval(c2, z.z2()).value)});
    }
    r.pass = arith <= 1e-12 && gam <= 1e-12 && series <= 1e-12;
    r.detail = "arith=" + fmt("%.3e", arith) + " gamma=" + fmt("%.3e", gam) + " eval=" + fmt("%.3e", series) +
               " pairs=10000";
  });
}

CriterionResult coherent_state_structure(std::uint64_t seed) {
  return timed(6, "coherent-state structure", [&](CriterionResult& r) {
    std::mt19937_64 rng(seed + 6);
    std::vector<fwcs::CoherentModel> models;
    models.emplace_back(FWParams{});
    for (int i = 0; i < 10; ++i) models.emplace_back(random_coherent_params(rng));

    double rec = 0.0;
    double norm = 0.0;
    double resid = 0.0;
    auto check_model = [&](const fwcs::CoherentModel& m) {
      for (long k = 0; k <= 100; ++k) {
        const double lhs = fwcs::log_rho(m, double(k + 1));
        const double rhs = fwcs::log_rho(m, double(k)) + 2.0 * std::log(fwcs::f_factor(m, k));
        rec = std::max(rec, std::abs(std::expm1(lhs - rhs)));
      }
      for (double mod : {0.0, 0.5, 1.0, 1.5, 2.0}) {
        for (int j = 0; j < 4; ++j) {
          const Complex z = std::polar(mod, 2 * kPi * j / 4 + 0.3);
          norm = std::max(norm, std::abs(fwcs::overlap(m, z, z) - 1.0));
          const auto state = fwcs::make_state(m, z);
          double mass = state.tail_mass;
          for (double w : fwcs::photon_distribution(state)) mass += w;
          norm = std::max(norm, std::abs(mass - 1.0));
          resid = std::max(resid, fwcs::annihilation_residual(m, state));
        }
      }
    };
    for (const auto& m : models) check_model(m);

    // Bicomplex models assembled from pairs of random component models.
    double bc_dev = 0.0;
    for (int i = 0; i < 3; ++i) {
      FWParams p1 = random_coherent_params(rng);
      FWParams p2 = p1;
      for (auto& u : p2.upper) u.a += 0.3;
      for (auto& l : p2.lower) l.big_b += 0.2;
      fwcs::BCFWParams bc;
      for (std::size_t k = 0; k < p1.upper.size(); ++k) {
        bc.upper.push_back({Bicomplex(p1.upper[k].a, p2.upper[k].a), Hyperbolic(p1.upper[k].big_a, p2.upper[k].big_a)});
      }
      for (std::size_t k = 0; k < p1.lower.size(); ++k) {
        bc.lower.push_back({Bicomplex(p1.lower[k].b, p2.lower[k].b), Hyperbolic(p1.lower[k].big_b, p2.lower[k].big_b)});
      }
      const fwcs::BCCoherentModel bm(bc);
      for (int p = 1; p <= 2; ++p) check_model(bm.component(p));
      for (long k = 0; k <= 20; ++k) {
        const Hyperbolic rb = fwcs::rho_b(bm, k);
        const Hyperbolic rb1 = fwcs::rho_b(bm, k + 1);
        const Hyperbolic f = fwcs::f_b(bm, k);
        for (int p = 1; p <= 2; ++p) {
          bc_dev = std::max(bc_dev, std::abs(rb1.component(p) / (rb.component(p) * f.component(p) * f.component(p)) - 1.0));
        }
      }
      const Bicomplex z(Complex(0.6, 0.8), Complex(-1.1, 0.4));
      const Bicomplex o = fwcs::overlap_b(bm, z, z);
      bc_dev = std::max({bc_dev, std::abs(o.z1() - 1.0), std::abs(o.z2() - 1.0)});
      const auto st = fwcs::make_state_b(bm, z);
      for (int p = 1; p <= 2; ++p) {
        resid = std::max(resid, fwcs::annihilation_residual(bm.component(p), st.components[p - 1]));
      }
    }
    r.pass = rec <= 1e-11 && norm <= 1e-10 && resid <= 1e-8 && bc_dev <= 1e-10;
    r.detail = "recurrence=" + fmt("%.3e", rec) + " norm=" + fmt("%.3e", norm) + " residual=" + fmt("%.3e", resid) +
               " bicomplex=" + fmt("%.3e", bc_dev);
  });
}

CriterionResult resolution_of_unity() {
  auto res = timed(7, "resolution-of-unity moments", [&](CriterionResult& r) {
    const auto cfg = fwcs::moment_quad_config();
    double worst = 0.0;
    auto run = [&](const FWParams& p, long kmax) {
      const fwcs::CoherentModel m(p);
      for (long k = 0; k <= kmax; ++k) worst = std::max(worst, fwcs::moment_check(m, k, cfg).rel_err);
    };
    run(FWParams{}, 6);
    FWParams remark1;
    remark1.upper = {{Complex(1.0), 1.0}};
    remark1.lower = {{Complex(2.0), 1.0}};
    run(remark1, 4);
    FWParams remark2;
    remark2.upper = {{Complex(1.0), 1.0}};
    remark2.lower = {{Complex(2.0), 2.0}};
    run(remark2, 4);
    r.pass = worst <= 1e-5;
    r.detail = "max_rel_err=" + fmt("%.3e", worst);
  });
  return within_budget(res, 60.0);
}

CriterionResult nu_function() {
  return timed(8, "nu-function and continuous states", [&](CriterionResult& r) {
    const fwcs::QuadConfig cfg;
    std::vector<fwcs::CoherentModel> models;
    models.emplace_back(FWParams{});
    FWParams p1;
    p1.upper = {{Complex(1.5), 0.8}};
    p1.lower = {{Complex(2.0), 1.2}};
    models.emplace_back(p1);

    double dual = 0.0;
    double consist = 0.0;
    double norm = 0.0;
    for (const auto& m : models) {
      for (int i = 0; i <= 10; ++i) {
        const double zeta = 0.1 * std::pow(100.0, i / 10.0);
        const double gk = fwcs::nu(m, zeta, cfg, fwcs::QuadScheme::GaussKronrod).value;
        const double ts = fwcs::nu(m, zeta, cfg, fwcs::QuadScheme::TanhSinh).value;
        dual = std::max(dual, std::abs(gk - ts) / std::abs(gk));
      }
      for (long k = 0; k <= 50; ++k) {
        consist = std::max(consist, std::abs(fwcs::rho_tilde(m, double(k)) / fwcs::rho(m, k) - 1.0));
      }
      for (Complex z : {Complex(0.5, 0.2), Complex(-1.0, 1.0), Complex(2.5, 0.0)}) {
        norm = std::max(norm, std::abs(fwcs::ContinuousState(m, z, cfg).norm_squared().value - 1.0));
      }
    }
    // Bicomplex continuous states, component by component.
    fwcs::BCFWParams bc;
    bc.upper.push_back({Bicomplex(Complex(1.5), Complex(1.0)), Hyperbolic(0.8, 1.0)});
    bc.lower.push_back({Bicomplex(Complex(2.0), Complex(1.0)), Hyperbolic(1.2, 1.0)});
    const fwcs::BCCoherentModel bm(bc);
    const Bicomplex z(Complex(0.7, 0.3), Complex(1.2, -0.5));
    for (int p = 1; p <= 2; ++p) {
      norm = std::max(norm, std::abs(fwcs::ContinuousState(bm.component(p), z.component(p), cfg).norm_squared().value - 1.0));
    }
    const double norm_tol = 10.0 * cfg.rel_tol;
    r.pass = dual <= 1e-8 && consist <= 1e-12 && norm <= norm_tol;
    r.detail = "dual_scheme=" + fmt("%.3e", dual) + " rho_consistency=" + fmt("%.3e", consist) +
               " state_norm=" + fmt("%.3e", norm);
  });
}

std::vector<CriterionResult> run_all(std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<CriterionResult> out;
  out.push_back(reduction_conformance(seed));
  out.push_back(mittag_leffler_bessel());
  out.push_back(radius_law(seed));
  out.push_back(nine_case_classifier(seed));
  out.push_back(idempotent_homomorphism(seed));
  out.push_back(coherent_state_structure(seed));
  out.push_back(resolution_of_unity());
  out.push_back(nu_function());

  out.push_back(timed(9, "selftest runtime and determinism", [&](CriterionResult& r) {
    // Re-run the seeded criteria and compare their reports byte for byte.
    const bool same = reduction_conformance(seed).detail == out[0].detail &&
                      radius_law(seed).detail == out[2].detail &&
                      coherent_state_structure(seed).detail == out[5].detail;
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.pass = same && total <= 120.0;
    r.detail = "total=" + fmt("%.2f", total) + "s deterministic=" + (same ? "yes" : "no");
  }));
  return out;
}

std::string format_line(const CriterionResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2fs", r.seconds);
  return std::string(r.pass ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + ": " + r.detail +
         " (" + buf + ")";
}

}  // namespace acceptance
