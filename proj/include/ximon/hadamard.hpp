#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>

#include "ximon/constants.hpp"
#include "ximon/xi.hpp"
#include "ximon/zeros.hpp"

// Truncations of the Hadamard product
//
//   xi(s) = (1/2) e^{Bs} prod_rho (1 - s/rho) e^{s/rho},
//
// the product running over nontrivial zeros in conjugate pairs. Two forms
// are evaluated, both in log scale with compensated accumulation:
//
//   paired:    (1/2) e^{Bs}         prod_{n<=N} (1-s/rho_n) e^{s/rho_n} (1-s/conj rho_n) e^{s/conj rho_n}
//   regrouped: (1/2) e^{(B+S_N) s}  prod_{n<=N} (1-s/rho_n) (1-s/conj rho_n)
//
// The two agree identically; the regrouped form folds the exponential
// convergence factors of the first N pairs into the prefactor.

namespace ximon {

enum class TruncationMode { paired, regrouped };

struct TruncationSpec {
  std::size_t n;  // number of conjugate pairs, >= 1
  TruncationMode mode;
};

namespace detail {

struct NeumaierSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    comp += (std::abs(sum) >= std::abs(x)) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

// ln|1 - s/rho| for rho = beta + i*gamma_signed; -infinity exactly at s = rho
inline double factor_log_modulus(Complex s, double beta, double gamma_signed) {
  const double rho_sq = beta * beta + gamma_signed * gamma_signed;
  double x = (std::norm(s) - 2.0 * (s.real() * beta + s.imag() * gamma_signed)) / rho_sq;
  if (x < -1.0) x = -1.0;  // rounding guard; exact -1 means s = rho
  return 0.5 * std::log1p(x);
}

inline double factor_arg(Complex s, double beta, double gamma_signed) {
  return std::arg(1.0 - s / Complex(beta, gamma_signed));
}

}  // namespace detail

// ln|1 - s/rho| = ln|s - rho| - ln|rho|.
inline double product_factor_log_modulus(Complex s, const ZetaZero& rho) {
  return detail::factor_log_modulus(s, rho.beta, rho.gamma);
}

// ln|e^{s/rho}| = Re(s/rho) = (beta*Re(s) + gamma*Im(s)) / (beta^2 + gamma^2).
inline double exp_factor_log_modulus(Complex s, const ZetaZero& rho) {
  return (rho.beta * s.real() + rho.gamma * s.imag()) /
         (rho.beta * rho.beta + rho.gamma * rho.gamma);
}

inline XiValue truncated_xi(Complex s, const ZeroTable& table, TruncationSpec spec) {
  if (spec.n < 1) throw std::invalid_argument("truncated_xi: need n >= 1");
  if (spec.n > table.zeros.size())
    throw std::out_of_range("truncated_xi: n = " + std::to_string(spec.n) +
                            " exceeds table size " + std::to_string(table.zeros.size()));
  detail::NeumaierSum log_mod;
  detail::NeumaierSum phase;
  log_mod.add(-ln_2);  // the leading 1/2
  const double b = b_closed_form();
  if (spec.mode == TruncationMode::paired) {
    log_mod.add(b * s.real());
    phase.add(b * s.imag());
  } else {
    const double c = b + partial_sum_S(table, spec.n);
    log_mod.add(c * s.real());
    phase.add(c * s.imag());
  }
  for (std::size_t i = 0; i < spec.n; ++i) {
    const ZetaZero& z = table.zeros[i];
    log_mod.add(detail::factor_log_modulus(s, z.beta, z.gamma));
    log_mod.add(detail::factor_log_modulus(s, z.beta, -z.gamma));
    phase.add(detail::factor_arg(s, z.beta, z.gamma));
    phase.add(detail::factor_arg(s, z.beta, -z.gamma));
    if (spec.mode == TruncationMode::paired) {
      const double rho_sq = z.beta * z.beta + z.gamma * z.gamma;
      // s/rho + s/conj(rho), split into modulus and phase parts
      log_mod.add(2.0 * s.real() * z.beta / rho_sq);
      phase.add(2.0 * s.imag() * z.beta / rho_sq);
    }
  }
  return detail::make_xi_value(log_mod.value(), phase.value());
}

// The finite product (1 - s/rho_1) * prod_{n=2..N} (1-s/rho_n)(1-s/conj rho_n):
// the conjugate partner of the first zero is deliberately left out.
inline XiValue finite_zero_product(Complex s, const ZeroTable& table, std::size_t n) {
  if (n < 2 || n > table.zeros.size())
    throw std::out_of_range("finite_zero_product: need 2 <= n <= table size, got n = " +
                            std::to_string(n));
  detail::NeumaierSum log_mod;
  detail::NeumaierSum phase;
  log_mod.add(detail::factor_log_modulus(s, table.zeros[0].beta, table.zeros[0].gamma));
  phase.add(detail::factor_arg(s, table.zeros[0].beta, table.zeros[0].gamma));
  for (std::size_t i = 1; i < n; ++i) {
    const ZetaZero& z = table.zeros[i];
    log_mod.add(detail::factor_log_modulus(s, z.beta, z.gamma));
    log_mod.add(detail::factor_log_modulus(s, z.beta, -z.gamma));
    phase.add(detail::factor_arg(s, z.beta, z.gamma));
    phase.add(detail::factor_arg(s, z.beta, -z.gamma));
  }
  return detail::make_xi_value(log_mod.value(), phase.value());
}

}  // namespace ximon
