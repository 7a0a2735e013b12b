#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ximon/constants.hpp"
#include "ximon/xi.hpp"
#include "ximon/zeros.hpp"

// Monotonicity scans of |xi| along horizontal half-lines, and the truncated
// derivative-positivity condition
//
//   (sigma - beta_1) / ((sigma - beta_1)^2 + (t0 - gamma_1)^2)  >  -(B + S_N)
//
// whose left side is the logarithmic-derivative contribution of the first
// zero factor and whose right side is the deficit left by truncating the
// zero sum at N pairs.

namespace ximon {

enum class Direction { rightward, leftward };

struct HalfLineSpec {
  double t0;
  double sigma_start;
  double sigma_end;
  double step;
  Direction direction;
};

struct ScanSample {
  double sigma;
  double log_abs_xi;
};

struct ScanViolation {
  double sigma_lo;
  double sigma_hi;
  double delta;  // log_abs_xi(sigma_hi) - log_abs_xi(sigma_lo)
};

struct ScanReport {
  HalfLineSpec spec;
  std::vector<ScanSample> samples;
  bool monotone;
  std::vector<ScanViolation> violations;
};

struct ConditionReport {
  double sigma;
  double t0;
  std::size_t n;
  double lhs;
  double rhs;
  bool holds;
};

struct TableExhaustedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Samples log|xi(sigma + i t0)| on the grid sigma_start + k*step and checks
// the consecutive deltas: rightward runs must not decrease, leftward runs
// must not increase, with slack 1e-9 * max(1, |log_abs_xi|). A -infinity
// sample (a zero of xi on the line) is always recorded as a violation.
inline ScanReport scan_half_line(const HalfLineSpec& spec) {
  if (!(spec.step > 0.0))
    throw std::invalid_argument("scan_half_line: step must be positive");
  if (!(spec.sigma_start < spec.sigma_end))
    throw std::invalid_argument("scan_half_line: need sigma_start < sigma_end");
  const double span = spec.sigma_end - spec.sigma_start;
  const double count_d = std::floor(span / spec.step + 1e-9) + 1.0;
  if (count_d > 1e7 + 1.0)
    throw std::invalid_argument("scan_half_line: grid would exceed 1e7 points");
  const std::size_t count = static_cast<std::size_t>(count_d);

  ScanReport report;
  report.spec = spec;
  report.samples.resize(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double sigma = spec.sigma_start + static_cast<double>(k) * spec.step;
    report.samples[k] = {sigma, log_abs_xi(Complex(sigma, spec.t0))};
  }
  const double dir = (spec.direction == Direction::rightward) ? 1.0 : -1.0;
  for (std::size_t k = 0; k + 1 < count; ++k) {
    const double lo = report.samples[k].log_abs_xi;
    const double hi = report.samples[k + 1].log_abs_xi;
    const double delta = hi - lo;
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
      report.violations.push_back({report.samples[k].sigma, report.samples[k + 1].sigma, delta});
      continue;
    }
    const double slack = 1e-9 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
    if (!(dir * delta > -slack))
      report.violations.push_back({report.samples[k].sigma, report.samples[k + 1].sigma, delta});
  }
  report.monotone = report.violations.empty();
  return report;
}

// Rightward scan over sigma in (1/2 + step, sigma_max]; under the Riemann
// hypothesis (true in any range anyone has checked) no violation can occur,
// so a reported violation at moderate heights indicates numerical error.
inline ScanReport rh_probe(double t0, double sigma_max, double step) {
  if (!(step > 0.0) || !(sigma_max > 0.5 + step))
    throw std::invalid_argument("rh_probe: need step > 0 and sigma_max > 1/2 + step");
  return scan_half_line({t0, 0.5 + step, sigma_max, step, Direction::rightward});
}

// f_N(sigma) = |(1/2) e^{(B+S_N) s} (1 - s/rho_1)|^2 on the line s = sigma + i t0,
// in closed form.
inline double prefactor_modulus_sq(double sigma, double t0, const ZeroTable& table,
                                   std::size_t n) {
  if (table.zeros.empty())
    throw std::invalid_argument("prefactor_modulus_sq: empty zero table");
  if (n > table.zeros.size())
    throw std::out_of_range("prefactor_modulus_sq: n exceeds table size");
  const ZetaZero& z1 = table.zeros.front();
  const double c = b_closed_form() + partial_sum_S(table, n);
  const double dx = sigma - z1.beta;
  const double dy = t0 - z1.gamma;
  return 0.25 * std::exp(2.0 * c * sigma) * (dx * dx + dy * dy) /
         (z1.beta * z1.beta + z1.gamma * z1.gamma);
}

// Sign condition for f_N'(sigma) > 0. Rejected at the first zero itself,
// where the left side degenerates to 0/0.
inline ConditionReport derivative_condition(double sigma, double t0,
                                            const ZeroTable& table, std::size_t n) {
  if (table.zeros.empty())
    throw std::invalid_argument("derivative_condition: empty zero table");
  const ZetaZero& z1 = table.zeros.front();
  const double dx = sigma - z1.beta;
  const double dy = t0 - z1.gamma;
  const double denom = dx * dx + dy * dy;
  if (denom == 0.0)
    throw std::domain_error("derivative_condition: degenerate at (sigma, t0) = rho_1");
  const double lhs = dx / denom;
  const double rhs = b_deficit(table, n);  // may throw out_of_range
  return {sigma, t0, n, lhs, rhs, lhs > rhs};
}

// Smallest N >= 1 whose deficit satisfies the derivative condition at
// (sigma1, t0); linear scan, since the deficit is strictly decreasing.
inline std::size_t minimal_truncation_order(double sigma1, double t0,
                                            const ZeroTable& table) {
  if (table.zeros.empty())
    throw std::invalid_argument("minimal_truncation_order: empty zero table");
  const ZetaZero& z1 = table.zeros.front();
  const double dx = sigma1 - z1.beta;
  const double dy = t0 - z1.gamma;
  const double denom = dx * dx + dy * dy;
  if (denom == 0.0)
    throw std::domain_error("minimal_truncation_order: degenerate at (sigma1, t0) = rho_1");
  const double lhs = dx / denom;
  const std::vector<double> prefix = detail::partial_sum_prefix(table);
  const double b = b_closed_form();
  for (std::size_t n = 1; n < prefix.size(); ++n) {
    if (lhs > -(b + prefix[n])) return n;
  }
  throw TableExhaustedError("minimal_truncation_order: condition not reached with " +
                            std::to_string(table.zeros.size()) + " zeros");
}

// Central difference of f_N at sigma with h = 1e-6 * max(1, |sigma|).
inline double finite_difference_slope(double sigma, double t0, const ZeroTable& table,
                                      std::size_t n) {
  const double h = 1e-6 * std::max(1.0, std::abs(sigma));
  return (prefactor_modulus_sq(sigma + h, t0, table, n) -
          prefactor_modulus_sq(sigma - h, t0, table, n)) /
         (2.0 * h);
}

}  // namespace ximon
