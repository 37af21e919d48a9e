// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "scatter/errors.hpp"

namespace scatter {

using Complex = std::complex<double>;

namespace detail {

// Lanczos coefficients for g = 671/128 with 14 terms; relative accuracy of
// Gamma is at the level of double rounding for Re z >= 1/2.
inline constexpr double kLanczosShift = 5.24218750000000000;
inline constexpr double kLanczosSeries0 = 0.999999999999997092;
inline constexpr std::array<double, 14> kLanczosCoefficients = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};
inline constexpr double kSqrtTwoPi = 2.5066282746310005;
inline constexpr double kPolePadding = 1e-12;

inline Complex log_gamma_right_half_plane(Complex z) {
  Complex y = z;
  Complex tmp = z + kLanczosShift;
  tmp = (z + 0.5) * std::log(tmp) - tmp;
  Complex series = kLanczosSeries0;
  for (double c : kLanczosCoefficients) {
    y += 1.0;
    series += c / y;
  }
  return tmp + std::log(kSqrtTwoPi * series / z);
}

// Principal log of sin(pi z), stable for large |Im z| where sin overflows.
// sin(pi x) and cos(pi x) with exact argument reduction, so half-integers give
// exact zeros.
inline void sincos_pi(double x, double& sin_out, double& cos_out) {
  constexpr double pi = std::numbers::pi;
  const double r = std::fmod(x, 2.0);
  const double q = std::round(2.0 * r);
  const double t = r - 0.5 * q;  // |t| <= 1/4
  const double st = std::sin(pi * t);
  const double ct = std::cos(pi * t);
  switch (((static_cast<int>(q) % 4) + 4) % 4) {
    case 0: sin_out = st; cos_out = ct; break;
    case 1: sin_out = ct; cos_out = -st; break;
    case 2: sin_out = -st; cos_out = -ct; break;
    default: sin_out = -ct; cos_out = st; break;
  }
}

// Principal log of sin(pi z), written as
//   pi|y| - ln 2 + log[sin(pi x)(1 + e) + i sgn(y) cos(pi x)(1 - e)],  e = exp(-2 pi |y|),
// which cannot overflow.
inline Complex log_sin_pi(Complex z) {
  constexpr double pi = std::numbers::pi;
  double sx = 0.0, cx = 0.0;
  sincos_pi(z.real(), sx, cx);
  const double ay = std::abs(z.imag());
  const double e = std::exp(-2.0 * pi * ay);
  const Complex bracket{sx * (1.0 + e), std::copysign(1.0, z.imag()) * cx * -std::expm1(-2.0 * pi * ay)};
  return Complex{pi * ay - std::numbers::ln2, 0.0} + std::log(bracket);
}

inline void check_pole(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("log_gamma: non-finite argument");
  }
  if (z.real() > 0.5) return;
  const double n = std::round(-z.real());
  if (n >= 0.0 && std::abs(z + n) < kPolePadding) {
    throw PoleError("log_gamma: argument within 1e-12 of the pole at -" +
                    std::to_string(static_cast<long long>(n)));
  }
}

}  // namespace detail

/// Log-Gamma on the complex plane.
///
/// Returns the analytic continuation of ln Gamma(z) with its branch cut on the
/// negative real axis, i.e. the imaginary part is continuous in z and not
/// wrapped into (-pi, pi]. exp(log_gamma(z)) == Gamma(z). Throws PoleError
/// within 1e-12 of a non-positive integer.
inline Complex log_gamma(Complex z) {
  detail::check_pole(z);
  if (z.real() >= 0.5) return detail::log_gamma_right_half_plane(z);

  // Reflection with the 2 pi i correction that keeps the continuation smooth.
  constexpr double pi = std::numbers::pi;
  const double branch =
      std::copysign(2.0 * pi, z.imag()) * std::floor(0.5 * z.real() + 0.25);
  const Complex log_pi{std::log(pi), branch};
  return log_pi - detail::log_sin_pi(z) -
         detail::log_gamma_right_half_plane(1.0 - z);
}

/// Gamma(num) / Gamma(den), evaluated as exp of a log difference so that
/// large arguments never overflow.
inline Complex gamma_ratio(Complex num, Complex den) {
  return std::exp(log_gamma(num) - log_gamma(den));
}

/// Legendre polynomial P_l(x) by upward three-term recurrence.
inline double legendre_p(int l, double x) {
  if (l < 0) throw DomainError("legendre_p: negative degree");
  if (!(std::abs(x) <= 1.0)) throw DomainError("legendre_p: |x| > 1");
  if (l == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (int n = 1; n < l; ++n) {
    const double next = ((2 * n + 1) * x * cur - n * prev) / (n + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// P_0(x) .. P_lmax(x) in one pass.
inline std::vector<double> legendre_sequence(int l_max, double x) {
  if (l_max < 0) throw DomainError("legendre_sequence: negative degree");
  if (!(std::abs(x) <= 1.0)) throw DomainError("legendre_sequence: |x| > 1");
  std::vector<double> p(static_cast<std::size_t>(l_max) + 1);
  p[0] = 1.0;
  if (l_max >= 1) p[1] = x;
  for (int n = 1; n < l_max; ++n) {
    p[n + 1] = ((2 * n + 1) * x * p[n] - n * p[n - 1]) / (n + 1);
  }
  return p;
}

/// Coulomb phase eta = arg Gamma(1 + i tau), taken as Im log_gamma(1 + i tau).
inline double coulomb_phase(double tau) {
  return log_gamma(Complex{1.0, tau}).imag();
}

}  // namespace scatter
