#include "fwcs/bicomplex.hpp"

#include <cmath>
#include <sstream>

namespace fwcs {

bool is_finite(Complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Hyperbolic::Hyperbolic(double c1, double c2) : c1_(c1), c2_(c2) {
  if (!std::isfinite(c1) || !std::isfinite(c2)) {
    throw ValidationError("hyperbolic number with non-finite component");
  }
}

Bicomplex::Bicomplex(Complex z1, Complex z2) : z1_(z1), z2_(z2) {
  if (!is_finite(z1) || !is_finite(z2)) {
    throw ValidationError("bicomplex number with non-finite component");
  }
}

Bicomplex Bicomplex::from_cartesian(Complex a, Complex b) {
  const Complex i(0.0, 1.0);
  return {a - i * b, a + i * b};
}

Bicomplex inverse(const Bicomplex& z) {
  const Complex zero(0.0);
  if (z.z1() == zero || z.z2() == zero) {
    std::ostringstream os;
    os << "inverse of singular bicomplex element (component "
       << (z.z1() == zero ? 1 : 2) << " is zero)";
    throw SingularElement(os.str());
  }
  return {1.0 / z.z1(), 1.0 / z.z2()};
}

Hyperbolic pow_real(Hyperbolic base, Hyperbolic exponent) {
  if (!(base.c1() > 0.0) || !(base.c2() > 0.0)) {
    throw DomainError("pow_real requires both components of the base to be positive");
  }
  return {std::pow(base.c1(), exponent.c1()), std::pow(base.c2(), exponent.c2())};
}

}  // namespace fwcs
