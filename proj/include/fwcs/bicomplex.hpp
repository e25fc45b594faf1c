#pragma once

#include <complex>
#include <utility>

#include "fwcs/errors.hpp"

namespace fwcs {

using Complex = std::complex<double>;

// Absolute tolerance used when comparing hyperbolic components for equality.
inline constexpr double kOrderTolerance = 1e-12;

bool is_finite(Complex z) noexcept;

/// Hyperbolic number stored in idempotent form c1 e1 + c2 e2 (both components real).
/// Cartesian form x1 + ij x4 has x1 = (c1 + c2)/2, x4 = (c1 - c2)/2.
class Hyperbolic {
 public:
  constexpr Hyperbolic() = default;
  Hyperbolic(double c1, double c2);

  static Hyperbolic from_cartesian(double x1, double x4) {
    return Hyperbolic(x1 + x4, x1 - x4);
  }
  static Hyperbolic real(double x) { return Hyperbolic(x, x); }

  double c1() const noexcept { return c1_; }
  double c2() const noexcept { return c2_; }
  double component(int p) const { return p == 1 ? c1_ : c2_; }
  double x1() const noexcept { return 0.5 * (c1_ + c2_); }
  double x4() const noexcept { return 0.5 * (c1_ - c2_); }

  /// Membership in the non-negative cone D+.
  bool nonnegative() const noexcept { return c1_ >= 0.0 && c2_ >= 0.0; }
  /// Membership in D+ minus the zero divisors: both components strictly positive.
  bool positive() const noexcept { return c1_ > 0.0 && c2_ > 0.0; }

  friend Hyperbolic operator+(Hyperbolic p, Hyperbolic q) { return {p.c1_ + q.c1_, p.c2_ + q.c2_}; }
  friend Hyperbolic operator-(Hyperbolic p, Hyperbolic q) { return {p.c1_ - q.c1_, p.c2_ - q.c2_}; }
  friend Hyperbolic operator*(Hyperbolic p, Hyperbolic q) { return {p.c1_ * q.c1_, p.c2_ * q.c2_}; }
  friend bool operator==(Hyperbolic p, Hyperbolic q) { return p.c1_ == q.c1_ && p.c2_ == q.c2_; }

 private:
  double c1_ = 0.0;
  double c2_ = 0.0;
};

/// Bicomplex number Z = a + j b = z1 e1 + z2 e2 with e1 = (1 + ij)/2, e2 = (1 - ij)/2.
/// The idempotent pair is the stored representation; z1 = a - ib, z2 = a + ib.
class Bicomplex {
 public:
  constexpr Bicomplex() = default;
  Bicomplex(Complex z1, Complex z2);
  explicit Bicomplex(Complex c) : Bicomplex(c, c) {}
  explicit Bicomplex(Hyperbolic h) : Bicomplex(Complex(h.c1()), Complex(h.c2())) {}

  static Bicomplex from_cartesian(Complex a, Complex b);
  static Bicomplex e1() { return {Complex(1.0), Complex(0.0)}; }
  static Bicomplex e2() { return {Complex(0.0), Complex(1.0)}; }
  static Bicomplex one() { return {Complex(1.0), Complex(1.0)}; }
  static Bicomplex zero() { return {}; }

  Complex z1() const noexcept { return z1_; }
  Complex z2() const noexcept { return z2_; }
  Complex component(int p) const { return p == 1 ? z1_ : z2_; }
  std::pair<Complex, Complex> decompose() const noexcept { return {z1_, z2_}; }

  Complex a() const noexcept { return 0.5 * (z1_ + z2_); }
  Complex b() const noexcept { return Complex(0.0, 0.5) * (z1_ - z2_); }

  bool is_zero() const noexcept { return z1_ == Complex(0.0) && z2_ == Complex(0.0); }
  /// Zero divisor: exactly one idempotent component vanishes.
  bool is_singular() const noexcept {
    return (z1_ == Complex(0.0)) != (z2_ == Complex(0.0));
  }

  friend Bicomplex operator+(const Bicomplex& z, const Bicomplex& w) {
    return {z.z1_ + w.z1_, z.z2_ + w.z2_};
  }
  friend Bicomplex operator-(const Bicomplex& z, const Bicomplex& w) {
    return {z.z1_ - w.z1_, z.z2_ - w.z2_};
  }
  friend Bicomplex operator*(const Bicomplex& z, const Bicomplex& w) {
    return {z.z1_ * w.z1_, z.z2_ * w.z2_};
  }
  friend Bicomplex operator*(Complex c, const Bicomplex& z) { return {c * z.z1_, c * z.z2_}; }
  friend Bicomplex operator*(const Bicomplex& z, Complex c) { return c * z; }
  friend Bicomplex operator-(const Bicomplex& z) { return {-z.z1_, -z.z2_}; }
  friend bool operator==(const Bicomplex& z, const Bicomplex& w) {
    return z.z1_ == w.z1_ && z.z2_ == w.z2_;
  }

 private:
  Complex z1_{};
  Complex z2_{};
};

inline Bicomplex compose_idempotent(Complex z1, Complex z2) { return {z1, z2}; }
inline std::pair<Complex, Complex> decompose(const Bicomplex& z) { return z.decompose(); }

/// Multiplicative inverse; throws SingularElement for zero divisors and zero.
Bicomplex inverse(const Bicomplex& z);

/// Component-wise complex conjugation, the conjugation with conj(Z) Z = |Z|_h^2.
inline Bicomplex conj(const Bicomplex& z) { return {std::conj(z.z1()), std::conj(z.z2())}; }

/// Hyperbolic norm |Z|_h = |z1| e1 + |z2| e2.
inline Hyperbolic hyper_norm(const Bicomplex& z) { return {std::abs(z.z1()), std::abs(z.z2())}; }

/// Partial order P <=_h Q, i.e. Q - P in D+.
inline bool leq_h(Hyperbolic p, Hyperbolic q) noexcept {
  return q.c1() - p.c1() >= 0.0 && q.c2() - p.c2() >= 0.0;
}

/// Strict order: both components of Q - P exceed kOrderTolerance.
inline bool lt_h(Hyperbolic p, Hyperbolic q) noexcept {
  return q.c1() - p.c1() > kOrderTolerance && q.c2() - p.c2() > kOrderTolerance;
}

inline bool approx_equal_h(Hyperbolic p, Hyperbolic q, double tol = kOrderTolerance) noexcept {
  return std::abs(p.c1() - q.c1()) <= tol && std::abs(p.c2() - q.c2()) <= tol;
}

/// Component-wise real power (c1^t1, c2^t2); base must be in D+ minus zero divisors.
Hyperbolic pow_real(Hyperbolic base, Hyperbolic exponent);

}  // namespace fwcs
