#include <doctest.h>

#include <cmath>

#include "fwcs/coherent_states.hpp"

using namespace fwcs;

namespace {

constexpr double kE = 2.718281828459045;

FWParams remark1() {
  FWParams p;
  p.upper = {{1.0, 1.0}};
  p.lower = {{2.0, 1.0}};
  return p;
}

FWParams mixed() {
  FWParams p;
  p.upper = {{1.5, 0.8}, {0.7, 0.4}};
  p.lower = {{2.0, 1.2}, {1.1, 0.9}};
  return p;
}

}  // namespace

TEST_CASE("model validation") {
  FWParams complex_a;
  complex_a.upper = {{Complex(1.0, 0.5), 1.0}};
  CHECK_THROWS_AS(CoherentModel{complex_a}, ValidationError);
  FWParams divergent;
  divergent.upper = {{1.0, 2.0}};
  CHECK_THROWS_AS(CoherentModel{divergent}, ValidationError);
  CHECK_THROWS_AS(CoherentModel(FWParams{}, 0), ValidationError);
}

TEST_CASE("rho") {
  const CoherentModel canon{FWParams{}};
  const CoherentModel r1{remark1()};
  CHECK(rho(canon, 0) == 1.0);
  CHECK(rho(r1, 0) == 1.0);
  CHECK(rho(CoherentModel{mixed()}, 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rho(canon, 3) == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(rho(r1, 2) == doctest::Approx(6.0).epsilon(1e-14));
  CHECK_THROWS_AS(rho(canon, -1), ValidationError);
  CHECK_THROWS_AS(rho(canon, 400), Overflow);
  CHECK(std::isfinite(log_rho(canon, 400.0)));
}

TEST_CASE("f factor") {
  const CoherentModel canon{FWParams{}};
  for (long s = 0; s < 20; ++s) CHECK(f_factor(canon, s) == doctest::Approx(std::sqrt(s + 1.0)).epsilon(1e-14));
  const CoherentModel m{mixed()};
  CHECK(f_factor(m, 0) == doctest::Approx(std::sqrt(rho(m, 1))).epsilon(1e-13));
  CHECK(f_factor(CoherentModel{remark1()}, 1) * f_factor(CoherentModel{remark1()}, 1) ==
        doctest::Approx(3.0).epsilon(1e-13));
  for (long k = 0; k < 100; ++k) {
    const double lhs = log_rho(m, k + 1.0);
    const double rhs = log_rho(m, double(k)) + 2.0 * std::log(f_factor(m, k));
    CHECK(std::abs(lhs - rhs) < 1e-11 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("normalization") {
  const CoherentModel canon{FWParams{}};
  CHECK(normalization(canon, 0.0) == doctest::Approx(1.0));
  CHECK(normalization(CoherentModel{mixed()}, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(normalization(canon, 2.3) == doctest::Approx(std::exp(2.3)).epsilon(1e-14));
  CHECK(normalization(CoherentModel{remark1()}, 1.0) == doctest::Approx(kE - 1.0).epsilon(1e-14));
  const CoherentModel m{mixed()};
  double direct = 0.0;
  for (long k = 0; k < 200; ++k) direct += std::exp(k * std::log(1.7) - log_rho(m, double(k)));
  CHECK(normalization(m, 1.7) == doctest::Approx(direct).epsilon(1e-13));
}

TEST_CASE("state vectors") {
  const CoherentModel canon{FWParams{}};
  const StateVector vac = make_state(canon, 0.0);
  CHECK(vac.coeffs[0] == Complex(1.0));
  for (std::size_t k = 1; k < vac.coeffs.size(); ++k) CHECK(vac.coeffs[k] == Complex(0.0));
  CHECK(annihilation_residual(canon, vac) == 0.0);

  const StateVector s = make_state(canon, 0.5);
  double fact = 1.0;
  for (int k = 0; k <= s.truncation(); ++k) {
    if (k > 0) fact *= k;
    const double want = std::exp(-0.125) * std::pow(0.5, k) / std::sqrt(fact);
    CHECK(std::abs(s.coeffs[k] - want) < 1e-15);
  }
  CHECK(s.tail_mass <= 1e-12);
  CHECK(annihilation_residual(canon, s) <= 1e-8);

  const std::vector<double> pd = photon_distribution(make_state(canon, Complex(1.0, 1.0)));
  double lam = 2.0;
  double pk = std::exp(-lam);
  for (std::size_t k = 0; k < pd.size(); ++k) {
    CHECK(std::abs(pd[k] - pk) < 1e-14);
    pk *= lam / double(k + 1);
  }
}

TEST_CASE("probability mass and truncation growth") {
  const CoherentModel m{mixed()};
  for (double r : {0.3, 1.0, 2.0, 3.0}) {
    const StateVector s = make_state(m, std::polar(r, 0.7));
    double mass = s.tail_mass;
    for (double w : photon_distribution(s)) mass += w;
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.tail_mass <= 1e-12);
  }
  // A slowly decaying distribution forces K past the initial 32.
  const StateVector big = make_state(CoherentModel{FWParams{}}, 5.0);
  CHECK(big.truncation() > 32);
}

TEST_CASE("residual does not grow with K") {
  const CoherentModel m{mixed()};
  StateOptions loose;
  loose.tail_target = 1e-8;
  const Complex z(1.1, -0.6);
  const double r_loose = annihilation_residual(m, make_state(m, z, loose));
  const double r_tight = annihilation_residual(m, make_state(m, z));
  CHECK(r_tight <= r_loose + 1e-15);
  CHECK(r_tight <= 1e-8);
}

TEST_CASE("overlaps") {
  const CoherentModel canon{FWParams{}};
  const Complex z(0.8, -0.4);
  CHECK(std::abs(overlap(canon, z, z) - 1.0) < 1e-14);
  CHECK(std::abs(overlap(canon, z, 0.0) - 1.0 / std::sqrt(std::exp(std::norm(z)))) < 1e-14);
  const Complex o = overlap(canon, 1.0, Complex(0.0, 1.0));
  CHECK(std::abs(o - std::exp(Complex(-1.0, 1.0))) < 1e-14);
  CHECK(std::abs(o) == doctest::Approx(std::exp(-1.0)));
  const CoherentModel m{mixed()};
  CHECK(std::abs(overlap(m, Complex(1.2, 0.3), Complex(-0.4, 0.9))) < 1.0);
}

TEST_CASE("ladder elements") {
  const CoherentModel canon{FWParams{}};
  const LadderElements l0 = ladder_elements(canon, 0);
  CHECK(l0.f_down == 0.0);
  CHECK(l0.adag_a == 0.0);
  CHECK(l0.aa_dag == doctest::Approx(1.0));
  const LadderElements l4 = ladder_elements(canon, 4);
  CHECK(l4.f_down == doctest::Approx(2.0));
  CHECK(l4.f_up == doctest::Approx(std::sqrt(5.0)));
  CHECK(l4.aa_dag == doctest::Approx(5.0));
  CHECK(l4.adag_a == doctest::Approx(4.0));
  for (long k = 0; k < 30; ++k) {
    const LadderElements l = ladder_elements(canon, k);
    CHECK(l.aa_dag - l.adag_a == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("bicomplex states") {
  BCFWParams p;
  p.upper.push_back({Bicomplex(Complex(1.5)), Hyperbolic(0.8, 0.8)});
  p.lower.push_back({Bicomplex(Complex(2.0)), Hyperbolic(1.2, 1.2)});
  const BCCoherentModel embedded(p);
  FWParams flat;
  flat.upper = {{1.5, 0.8}};
  flat.lower = {{2.0, 1.2}};
  const CoherentModel m(flat);
  for (long k = 0; k < 10; ++k) {
    const Hyperbolic r = rho_b(embedded, k);
    CHECK(r.c1() == doctest::Approx(rho(m, k)));
    CHECK(r.c2() == doctest::Approx(rho(m, k)));
  }
  const Bicomplex z(Complex(0.6, 0.2), Complex(-0.3, 1.1));
  const Bicomplex o = overlap_b(embedded, z, z);
  CHECK(std::abs(o.z1() - 1.0) < 1e-13);
  CHECK(std::abs(o.z2() - 1.0) < 1e-13);

  // Zero divisor 0.5 e1: component 2 is the vacuum.
  const Bicomplex zd = 0.5 * Bicomplex::e1();
  const BCStateVector st = make_state_b(embedded, zd);
  CHECK(st.components[1].coeffs[0] == Complex(1.0));
  const Bicomplex o0 = overlap_b(embedded, zd, Bicomplex::zero());
  CHECK(std::abs(o0.z1() - 1.0 / std::sqrt(normalization(m, 0.25))) < 1e-14);
  CHECK(std::abs(o0.z2() - 1.0) < 1e-14);

  const Bicomplex n = normalization_b(embedded, compose_idempotent(0.3, 0.7));
  CHECK(std::abs(n.z1() - normalization(m, 0.3)) < 1e-14);
  CHECK(std::abs(n.z2() - normalization(m, 0.7)) < 1e-14);
  for (int c = 1; c <= 2; ++c) {
    CHECK(annihilation_residual(embedded.component(c), st.components[c - 1]) <= 1e-8);
  }
  CHECK(f_b(embedded, 3).c1() == doctest::Approx(f_factor(m, 3)));
}
