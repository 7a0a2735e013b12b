#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "ximon/constants.hpp"

// Complex log-gamma and Riemann zeta in double precision.
//
// log_gamma: Lanczos approximation with g = 607/128 and the 15-term
// coefficient set due to Paul Godfrey, continued to Re(s) < 1/2 with the
// reflection formula. The log-sine term is assembled so the result stays on
// the principal branch (continuous off the negative real axis, real on the
// positive real axis).
//
// zeta: for Re(s) >= 1/2 the alternating (eta) series accelerated with the
// Chebyshev-weight scheme of P. Borwein, "An efficient algorithm for the
// Riemann zeta function" (2000), algorithm 2. The quotient by (1 - 2^(1-s))
// degenerates near s = 1 + 2*pi*i*k/ln 2, k != 0, and the weights overflow
// doubles once |Im s| needs more than ~400 terms; both cases fall back to a
// classical Euler-Maclaurin evaluation. For Re(s) < 1/2 the functional
// equation is applied once, with the pole of zeta(1-s) at s = 0 absorbed by
// the regularized form (s-1)*zeta(s).

namespace ximon {

struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

namespace detail {

inline Complex cexpm1(Complex z) {
  // exp(z) - 1 without cancellation for small z
  const double em = std::expm1(z.real());
  const double cy = std::cos(z.imag());
  const double sy = std::sin(z.imag());
  return {em * cy + (cy - 1.0), std::exp(z.real()) * sy};
}

inline constexpr double lanczos_g = 4.7421875;  // 607/128
inline constexpr double lanczos_c[15] = {
    0.99999999999999709182,
    57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,     -0.49191381609762019978,
    0.33994649984811888699e-4, 0.46523628927048575665e-4,
    -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3,
    -0.16431810653676389022e-3, 0.84418223983852743293e-4,
    -0.26190838401581408670e-4, 0.36899182659531622704e-5};

inline Complex lanczos_log_gamma(Complex z) {
  // valid for Re(z) >= 0.5
  Complex a = lanczos_c[0];
  for (int k = 1; k < 15; ++k) a += lanczos_c[k] / (z - 1.0 + static_cast<double>(k));
  const Complex t = z + (lanczos_g - 0.5);
  return (z - 0.5) * std::log(t) - t + half_log_two_pi + std::log(a);
}

inline Complex log_sin_pi_upper(Complex z) {
  // log sin(pi z) for Im(z) >= 0, on the branch that makes the reflection
  // formula below reproduce the principal branch of log-gamma.
  // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z}), and |e^{2 pi i z}| <= 1
  // in the closed upper half plane, so the last log never crosses its cut.
  const Complex w = std::exp(Complex(0.0, 2.0 * pi_const) * z);
  return Complex(-ln_2, 0.5 * pi_const) + Complex(0.0, -pi_const) * z +
         std::log(1.0 - w);
}

inline Complex log_gamma_upper(Complex z) {
  // Im(z) >= 0
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  return Complex(ln_pi, 0.0) - log_sin_pi_upper(z) - lanczos_log_gamma(1.0 - z);
}

}  // namespace detail

// Principal branch of log Gamma(s).
inline Complex log_gamma(Complex s) {
  if (std::abs(s.imag()) <= 1e-12) {
    const double nearest = std::round(s.real());
    if (nearest <= 0.0 && std::abs(s.real() - nearest) <= 1e-12)
      throw PoleError("log_gamma: pole at nonpositive integer s = " +
                      std::to_string(s.real()));
  }
  if (s.imag() < 0.0) return std::conj(detail::log_gamma_upper(std::conj(s)));
  return detail::log_gamma_upper(s);
}

namespace detail {

inline constexpr double ln_3_sqrt8 = 1.7627471740390860504;  // ln(3 + sqrt 8)

inline int borwein_term_count(double t) {
  t = std::abs(t);
  const double need =
      (0.5 * pi_const * t + std::log(3.0 * (1.0 + 2.0 * t)) + 36.8) / ln_3_sqrt8;
  const int n = static_cast<int>(std::ceil(need)) + 4;
  return n < 28 ? 28 : n;
}

// largest weight count whose d_k still fit in doubles
inline constexpr int borwein_max_terms = 396;

inline Complex zeta_borwein(Complex s, Complex one_minus_2_pow) {
  const int n = borwein_term_count(s.imag());
  // d_k = sum_{i<=k} u_i, u_0 = 1, u_{i+1} = u_i * 4(n+i)(n-i) / ((2i+1)(2i+2))
  double d[borwein_max_terms + 1];
  double u = 1.0;
  d[0] = 1.0;
  for (int i = 0; i < n; ++i) {
    u *= 4.0 * (n + i) * (n - i) / ((2 * i + 1.0) * (2 * i + 2.0));
    d[i + 1] = d[i] + u;
  }
  const double dn = d[n];
  Complex acc = 0.0;
  double sign = 1.0;
  for (int k = 0; k < n; ++k) {
    acc += sign * (d[k] - dn) * std::exp(-s * std::log(k + 1.0));
    sign = -sign;
  }
  return -acc / (dn * one_minus_2_pow);
}

// B_{2j}/(2j)! for j = 1..14
inline constexpr double em_tail_coeff[14] = {
    8.3333333333333333333e-02, -1.3888888888888888889e-03,
    3.3068783068783068783e-05, -8.2671957671957671958e-07,
    2.0876756987868098979e-08, -5.2841901386874931848e-10,
    1.3382536530684678833e-11, -3.3896802963225828668e-13,
    8.5860620562778445641e-15, -2.1748686985580618731e-16,
    5.5090028283602295152e-18, -1.3954464685812523341e-19,
    3.5347070396294674717e-21, -8.9535174270375468504e-23};

inline Complex zeta_euler_maclaurin(Complex s) {
  // requires Re(s) >= 0.5 and s != 1; stays accurate for very large |Im s|
  const int m = std::max(24, static_cast<int>(std::ceil(0.7 * std::abs(s.imag()))) + 20);
  // main sum with Neumaier compensation, componentwise
  double sr = 0.0, cr = 0.0, si = 0.0, ci = 0.0;
  for (int k = 1; k < m; ++k) {
    const Complex term = std::exp(-s * std::log(static_cast<double>(k)));
    double t1 = sr + term.real();
    cr += (std::abs(sr) >= std::abs(term.real())) ? (sr - t1) + term.real()
                                                  : (term.real() - t1) + sr;
    sr = t1;
    t1 = si + term.imag();
    ci += (std::abs(si) >= std::abs(term.imag())) ? (si - t1) + term.imag()
                                                  : (term.imag() - t1) + si;
    si = t1;
  }
  Complex total(sr + cr, si + ci);
  const double md = static_cast<double>(m);
  const Complex m_pow = std::exp(-s * std::log(md));  // m^(-s)
  total += 0.5 * m_pow;
  total += m_pow * md / (s - 1.0);
  // correction terms c_j * s(s+1)...(s+2j-2) * m^(1-s-2j)
  Complex poly = s;
  Complex mp = m_pow / md;
  total += em_tail_coeff[0] * poly * mp;
  for (int j = 2; j <= 14; ++j) {
    poly *= (s + (2.0 * j - 3.0)) * (s + (2.0 * j - 2.0));
    mp /= md * md;
    total += em_tail_coeff[j - 1] * poly * mp;
  }
  return total;
}

inline Complex zeta_right(Complex s) {
  // requires Re(s) >= 0.5, s != 1
  const Complex den = -cexpm1((1.0 - s) * ln_2);  // 1 - 2^(1-s)
  if (borwein_term_count(s.imag()) > borwein_max_terms)
    return zeta_euler_maclaurin(s);
  if (std::abs(den) < 1e-3 && std::abs(s.imag()) > 4.0)
    return zeta_euler_maclaurin(s);  // removable zero of the eta quotient
  return zeta_borwein(s, den);
}

inline Complex zeta_reg_right(Complex w) {
  // (w-1)*zeta(w) for Re(w) >= 0.5; series through the point w = 1
  const Complex u = w - 1.0;
  if (std::abs(u) < 1e-3) {
    return 1.0 + u * (euler_gamma +
                      u * (-stieltjes_1 +
                           u * (0.5 * stieltjes_2 + u * (-stieltjes_3 / 6.0))));
  }
  return u * zeta_right(w);
}

inline Complex sin_half_pi_over_s(Complex s) {
  // sin(pi s / 2) / s, finite at s = 0
  const Complex x = 0.5 * pi_const * s;
  if (std::abs(x) < 0.01) {
    const Complex x2 = x * x;
    return 0.5 * pi_const *
           (1.0 - x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0)));
  }
  return std::sin(x) / s;
}

inline Complex zeta_left(Complex s) {
  // functional equation, valid for Re(s) < 0.5:
  //   zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)
  // written with (s-1)-regularized zeta so that s = 0 needs no special case
  const Complex w = 1.0 - s;
  const Complex scale = std::exp(s * ln_2 + (s - 1.0) * ln_pi + lanczos_log_gamma(w));
  return -scale * zeta_reg_right(w) * sin_half_pi_over_s(s);
}

}  // namespace detail

// Riemann zeta. Throws PoleError at s = 1 (within 1e-12).
inline Complex zeta(Complex s) {
  if (std::abs(s - Complex(1.0, 0.0)) <= 1e-12)
    throw PoleError("zeta: pole at s = 1");
  if (s.imag() < 0.0) return std::conj(zeta(std::conj(s)));
  return s.real() >= 0.5 ? detail::zeta_right(s) : detail::zeta_left(s);
}

struct ZetaEval {
  Complex value;
  bool accuracy_degraded;  // set when |Im s| exceeds the quoted-error range
};

inline ZetaEval zeta_checked(Complex s) {
  return {zeta(s), std::abs(s.imag()) > 100.0};
}

// (s-1)*zeta(s), entire; equals 1 at s = 1.
inline Complex zeta_reg(Complex s) {
  if (s.imag() < 0.0) return std::conj(zeta_reg(std::conj(s)));
  if (s.real() >= 0.5) return detail::zeta_reg_right(s);
  return (s - 1.0) * detail::zeta_left(s);
}

}  // namespace ximon
