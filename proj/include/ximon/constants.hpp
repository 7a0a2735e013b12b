#pragma once

#include <complex>

// Shared numeric constants. Everything downstream works in double precision;
// the literals below carry 20 significant digits so they round correctly.

namespace ximon {

using Complex = std::complex<double>;

inline constexpr double pi_const = 3.1415926535897932385;
inline constexpr double ln_pi = 1.1447298858494001741;
inline constexpr double ln_2 = 0.69314718055994530942;
inline constexpr double half_log_two_pi = 0.91893853320467274178;

// Euler's constant, 20 digits.
inline constexpr double euler_gamma = 0.57721566490153286061;

// Stieltjes constants g1..g3, used by the regularized-zeta series near s = 1.
inline constexpr double stieltjes_1 = -0.072815845483676724861;
inline constexpr double stieltjes_2 = -0.0096903631928723184845;
inline constexpr double stieltjes_3 = 0.0020538344203033458662;

}  // namespace ximon
