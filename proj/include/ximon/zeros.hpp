#pragma once

#include <cmath>
#include <cstdlib>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ximon/constants.hpp"
#include "ximon/xi.hpp"

// Nontrivial zeta zeros: file-backed tables, a sign-change finder on the
// critical line, and the Hadamard coefficient B with its partial sums
//   S_N = sum_{n<=N} (1/rho_n + 1/conj(rho_n)) = sum 2 beta_n/(beta_n^2+gamma_n^2).

namespace ximon {

struct ZetaZero {
  double beta;
  double gamma;
};

struct ZeroTable {
  std::vector<ZetaZero> zeros;  // ascending gamma, all gamma > 0
  std::string source;
};

struct Constants {
  double euler_C;
  double B;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// thrown when a requested range contains no zeros at all
struct NoZerosError : std::domain_error {
  using std::domain_error::domain_error;
};

// B = ln(4 pi)/2 - 1 - C/2 = -(sum over zeros of 1/rho), C Euler's constant.
inline double b_closed_form() {
  return 0.5 * std::log(4.0 * pi_const) - 1.0 - 0.5 * euler_gamma;
}

inline Constants constants() { return {euler_gamma, b_closed_form()}; }

// Reads one gamma per line in plain decimal. '#' lines are comments, blank
// lines are skipped, anything else must parse completely as a number.
// Ordinates must be positive and strictly ascending; beta is 1/2 throughout.
inline ZeroTable load_zero_table(std::istream& in, const std::string& source = "stream") {
  ZeroTable table;
  table.source = source;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // tolerate CRLF input and surrounding blanks
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    if (line[b] == '#') continue;
    const std::string tok = line.substr(b, e - b + 1);
    char* end = nullptr;
    const double g = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size())
      throw ParseError("zero table line " + std::to_string(lineno) +
                       ": not a number: '" + tok + "'");
    if (!std::isfinite(g) || g <= 0.0)
      throw ParseError("zero table line " + std::to_string(lineno) +
                       ": ordinate must be finite and positive");
    if (!table.zeros.empty() && g <= table.zeros.back().gamma)
      throw ParseError("zero table line " + std::to_string(lineno) +
                       ": ordinates must be strictly ascending");
    table.zeros.push_back({0.5, g});
  }
  if (table.zeros.empty()) throw ParseError("zero table: no entries");
  return table;
}

namespace detail {

inline int xi_sign_on_line(double t) {
  // xi(1/2+it) is real; its sign is read off the phase (0 or +-pi)
  const XiValue v = ximon::xi(Complex(0.5, t));
  return std::abs(v.phase) < 0.5 * pi_const ? 1 : -1;
}

// asymptotic zero count up to height t (Riemann-von Mangoldt with the
// standard theta expansion); good to +-1 at the heights used here
inline double zero_count_estimate(double t) {
  if (t < 6.0) return 0.0;
  const double x = t / (2.0 * pi_const);
  const double theta = 0.5 * t * std::log(x) - 0.5 * t - 0.125 * pi_const +
                       1.0 / (48.0 * t) + 7.0 / (5760.0 * t * t * t);
  return theta / pi_const + 1.0;
}

inline double scan_step(double t, double scale) {
  // mean zero spacing is 2 pi / ln(t / 2 pi); stay a factor ~80 below it
  const double mean_gap = 2.0 * pi_const / std::log(std::max(t, 20.0) / (2.0 * pi_const));
  return scale * std::min(0.04, mean_gap / 80.0);
}

inline double bisect_zero(double lo, double hi, int sign_lo) {
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    if (xi_sign_on_line(mid) == sign_lo)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

// Scans xi(1/2+it) upward from t ~ 0, bracketing sign changes and bisecting
// each bracket to width < 1e-9. If the count disagrees with the asymptotic
// zero-count estimate (a pair hiding inside one step), the scan restarts with
// the step halved, up to 10 times.
inline ZeroTable find_zeros_on_critical_line(double t_max,
                                             std::size_t count_limit = static_cast<std::size_t>(-1)) {
  if (!(t_max > 0.0) || count_limit == 0)
    throw std::invalid_argument("find_zeros_on_critical_line: empty search range");
  ZeroTable table;
  table.source = "computed: critical-line sign scan, bisection to 1e-9";
  double scale = 1.0;
  for (int attempt = 0; attempt < 10; ++attempt) {
    table.zeros.clear();
    double t = 0.1;
    int sign = detail::xi_sign_on_line(t);
    double t_reached = t;
    while (t < t_max && table.zeros.size() < count_limit) {
      const double t_next = std::min(t + detail::scan_step(t, scale), t_max);
      const int sign_next = detail::xi_sign_on_line(t_next);
      if (sign_next != sign)
        table.zeros.push_back({0.5, detail::bisect_zero(t, t_next, sign)});
      t = t_next;
      sign = sign_next;
      t_reached = t;
    }
    const double expected = detail::zero_count_estimate(t_reached);
    if (static_cast<double>(table.zeros.size()) >= std::floor(expected - 1.5))
      break;
    scale *= 0.5;  // step too coarse: a sign change pair fit inside one step
    if (attempt == 9)
      throw std::runtime_error("find_zeros_on_critical_line: zero count below "
                               "estimate after 10 step reductions");
  }
  if (table.zeros.empty())
    throw NoZerosError("find_zeros_on_critical_line: no zeros at or below t_max = " +
                       std::to_string(t_max));
  return table;
}

namespace detail {

// prefix sums S_0..S_len of 2 beta/(beta^2+gamma^2), Neumaier-compensated
inline std::vector<double> partial_sum_prefix(const ZeroTable& table) {
  std::vector<double> out(table.zeros.size() + 1);
  out[0] = 0.0;
  double sum = 0.0, comp = 0.0;
  for (std::size_t i = 0; i < table.zeros.size(); ++i) {
    const ZetaZero& z = table.zeros[i];
    const double term = 2.0 * z.beta / (z.beta * z.beta + z.gamma * z.gamma);
    const double t = sum + term;
    comp += (std::abs(sum) >= std::abs(term)) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    out[i + 1] = sum + comp;
  }
  return out;
}

}  // namespace detail

// S_N over the first n table entries; S_0 = 0.
inline double partial_sum_S(const ZeroTable& table, std::size_t n) {
  if (n > table.zeros.size())
    throw std::out_of_range("partial_sum_S: n = " + std::to_string(n) +
                            " exceeds table size " + std::to_string(table.zeros.size()));
  double sum = 0.0, comp = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const ZetaZero& z = table.zeros[i];
    const double term = 2.0 * z.beta / (z.beta * z.beta + z.gamma * z.gamma);
    const double t = sum + term;
    comp += (std::abs(sum) >= std::abs(term)) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return sum + comp;
}

// -(B + S_N): positive, strictly decreasing in N, tending to 0.
inline double b_deficit(const ZeroTable& table, std::size_t n) {
  return -(b_closed_form() + partial_sum_S(table, n));
}

}  // namespace ximon
