#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include "ximon/constants.hpp"
#include "ximon/specfun.hpp"

// Completed zeta function xi(s) = (1/2) s (s-1) pi^(-s/2) Gamma(s/2) zeta(s),
// evaluated in log form through the pole-free grouping
//
//   xi(s) = pi^(-s/2) * Gamma(s/2 + 1) * (s-1) * zeta(s),
//
// which absorbs the s = 0, 1 cancellations into Gamma(s/2+1) and the
// regularized zeta. Working with log-modulus and phase keeps the function
// usable far outside the range where |xi| fits in a double.

namespace ximon {

struct XiValue {
  double log_modulus;  // ln|xi(s)|; -infinity exactly at a zero
  double phase;        // arg in (-pi, pi]; 0 reported at a zero
  Complex value;       // exp(log_modulus) * e^{i phase} when representable
  bool representable;  // false when exp(log_modulus) over- or underflows
};

namespace detail {

inline double wrap_phase(double x) {
  double p = std::remainder(x, 2.0 * pi_const);
  if (p <= -pi_const) p += 2.0 * pi_const;
  return p;
}

inline XiValue make_xi_value(double log_modulus, double raw_phase) {
  XiValue v;
  v.log_modulus = log_modulus;
  if (log_modulus == -std::numeric_limits<double>::infinity()) {
    v.phase = 0.0;
    v.value = Complex(0.0, 0.0);
    v.representable = true;
    return v;
  }
  v.phase = wrap_phase(raw_phase);
  // exp() range for normal doubles
  if (log_modulus > -708.0 && log_modulus < 709.0) {
    const double r = std::exp(log_modulus);
    v.value = Complex(r * std::cos(v.phase), r * std::sin(v.phase));
    v.representable = true;
  } else {
    v.value = Complex(0.0, 0.0);
    v.representable = false;
  }
  return v;
}

// log xi(s) as a complex number (real part = log-modulus, imaginary part =
// unwrapped phase), evaluated directly on the grouped product.
inline Complex log_xi_direct(Complex s) {
  const Complex zr = zeta_reg(s);
  const Complex lg = log_gamma(0.5 * s + 1.0);
  return std::log(zr) + lg - 0.5 * s * ln_pi;
}

// The grouped product is exact everywhere, but in double precision two of
// its factors lose relative accuracy together near the trivial zeros
// s = -2k (zeta -> 0 against the Gamma pole, both through sin(pi s/2)), and
// zeta itself leaves its quoted range once sigma drops far below the working
// box. Both neighborhoods are evaluated at 1-s instead, which is the same
// function by the functional equation.
inline bool reflect_for_accuracy(Complex s) {
  if (s.real() >= 0.5) return false;
  if (s.real() < -25.0) return true;
  const double k = std::round(-0.5 * s.real());
  if (k >= 1.0) {
    const Complex center(-2.0 * k, 0.0);
    if (std::abs(s - center) < 0.05) return true;
  }
  return false;
}

}  // namespace detail

inline XiValue xi(Complex s) {
  if (detail::reflect_for_accuracy(s)) s = 1.0 - s;
  const Complex lx = detail::log_xi_direct(s);
  return detail::make_xi_value(lx.real(), lx.imag());
}

// ln|xi(s)|; -infinity when |xi(s)| underflows 1e-300 equivalent (a zero).
inline double log_abs_xi(Complex s) {
  if (detail::reflect_for_accuracy(s)) s = 1.0 - s;
  return detail::log_xi_direct(s).real();
}

// |xi(s) - xi(1-s)| / max(|xi(s)|, 1e-300), evaluated in log scale.
inline double functional_equation_residual(Complex s) {
  const XiValue a = xi(s);
  const XiValue b = xi(1.0 - s);
  const double inf = std::numeric_limits<double>::infinity();
  if (a.log_modulus == -inf && b.log_modulus == -inf) return 0.0;
  const double m = std::max(a.log_modulus, b.log_modulus);
  const double da = std::exp(a.log_modulus - m);
  const double db = std::exp(b.log_modulus - m);
  const double diff = std::abs(Complex(da * std::cos(a.phase), da * std::sin(a.phase)) -
                               Complex(db * std::cos(b.phase), db * std::sin(b.phase)));
  const double log_floor = -690.77552789821370520;  // ln 1e-300
  const double log_diff = m + std::log(diff);       // diff = 0 gives -inf
  const double log_denom = std::max(a.log_modulus, log_floor);
  return std::exp(log_diff - log_denom);
}

}  // namespace ximon
