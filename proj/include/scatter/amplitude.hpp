// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include "scatter/errors.hpp"
#include "scatter/kinematics.hpp"
#include "scatter/smatrix.hpp"
#include "scatter/specfun.hpp"

// Scattering amplitudes and cross sections. Angles in radians, natural units.

namespace scatter {

inline constexpr double kDegree = std::numbers::pi / 180.0;

/// Default lower edge of the angular window around the forward Coulomb singularity.
inline constexpr double kDefaultThetaMin = 5.0 * kDegree;

struct AmplitudePoint {
  double theta{0};
  Complex f{};
  double dsigma_domega{0};
};

/// Abel summation of the partial-wave series: each epsilon weights term l by
/// exp(-epsilon l) and truncates at ceil(cutoff_factor / epsilon); the sequence of
/// sums is extrapolated to epsilon -> 0 with a polynomial of the given order.
struct RegularizationSpec {
  std::vector<double> epsilons{0.1, 0.05, 0.025, 0.0125};
  double cutoff_factor{12.0};
  int order{3};
  /// Largest accepted |P_order(0) - P_{order-1}(0)| / |P_order(0)|.
  double tolerance{5e-2};

  int l_cut(double epsilon) const { return static_cast<int>(std::ceil(cutoff_factor / epsilon)); }
  int max_l() const { return l_cut(epsilons.back()); }

  void validate() const {
    if (epsilons.empty()) throw DomainError("RegularizationSpec: no epsilons");
    for (std::size_t n = 0; n < epsilons.size(); ++n) {
      if (!(epsilons[n] > 0.0)) throw DomainError("RegularizationSpec: epsilons must be positive");
      if (n > 0 && !(epsilons[n] < epsilons[n - 1])) {
        throw DomainError("RegularizationSpec: epsilons must be strictly decreasing");
      }
    }
    if (order < 1 || static_cast<std::size_t>(order) + 1 > epsilons.size()) {
      throw DomainError("RegularizationSpec: order needs order + 1 epsilons");
    }
    if (!(cutoff_factor >= 1.0)) throw DomainError("RegularizationSpec: l_cut below 1/epsilon");
  }
};

struct RegularizedSum {
  Complex value{};
  double residual_estimate{0};    // absolute
  std::vector<Complex> sequence;  // one sum per epsilon
};

namespace detail {

inline constexpr double kWindowSlack = 1e-12;

inline double half_angle_sin2(double theta) {
  const double s = std::sin(0.5 * theta);
  return s * s;
}

inline void check_forward_window(double theta, double theta_min) {
  if (!(theta >= theta_min - kWindowSlack) || theta > std::numbers::pi + kWindowSlack) {
    throw WindowError("amplitude: theta outside [theta_min, pi]");
  }
}

inline void check_symmetric_window(double theta, double theta_min) {
  if (!(theta >= theta_min - kWindowSlack) || theta > std::numbers::pi - theta_min + kWindowSlack) {
    throw WindowError("amplitude: theta outside [theta_min, pi - theta_min]");
  }
}

// Neville's scheme evaluated at x = 0.
inline Complex extrapolate_to_zero(std::span<const double> x, std::span<const Complex> y) {
  std::vector<Complex> p(y.begin(), y.end());
  const std::size_t n = p.size();
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t i = 0; i + m < n; ++i) {
      p[i] = (x[i + m] * p[i] - x[i] * p[i + 1]) / (x[i + m] - x[i]);
    }
  }
  return p[0];
}

}  // namespace detail

/// (1/2ik) sum_{l <= l_cut} (2l+1) d_l P_l(cos theta) exp(-epsilon l) with d_l = S_l - 1.
inline Complex abel_partial_wave_sum(std::span<const Complex> deviations,
                                     std::span<const double> legendre, double k,
                                     double epsilon, int l_cut) {
  const int n = std::min<int>(l_cut, static_cast<int>(deviations.size()) - 1);
  Complex sum{0.0, 0.0};
  for (int l = 0; l <= n; ++l) {
    sum += (2.0 * l + 1.0) * deviations[l] * (legendre[l] * std::exp(-epsilon * l));
  }
  return sum / Complex{0.0, 2.0 * k};
}

/// Regularised partial-wave series for arbitrary deviations d_l = S_l - 1.
/// Throws ConvergenceError when the extrapolation residual exceeds reg.tolerance.
inline RegularizedSum regularized_partial_wave_sum(std::span<const Complex> deviations, double k,
                                                   double theta, const RegularizationSpec& reg) {
  reg.validate();
  if (!(k > 0.0)) throw DomainError("partial_wave_amplitude: needs k > 0");
  if (static_cast<int>(deviations.size()) <= reg.max_l()) {
    throw SizeError("partial_wave_amplitude: not enough partial waves for the cutoff");
  }
  const std::vector<double> legendre = legendre_sequence(reg.max_l(), std::cos(theta));

  RegularizedSum out;
  for (double eps : reg.epsilons) {
    out.sequence.push_back(abel_partial_wave_sum(deviations, legendre, k, eps, reg.l_cut(eps)));
  }
  const std::size_t used = static_cast<std::size_t>(reg.order) + 1;
  const std::span<const double> eps_all(reg.epsilons);
  const std::span<const Complex> seq_all(out.sequence);
  out.value = detail::extrapolate_to_zero(eps_all.last(used), seq_all.last(used));
  const Complex lower = detail::extrapolate_to_zero(eps_all.last(used - 1), seq_all.last(used - 1));
  out.residual_estimate = std::abs(out.value - lower);
  if (out.residual_estimate > reg.tolerance * std::abs(out.value)) {
    throw ConvergenceError("partial_wave_amplitude: extrapolation did not converge",
                           out.residual_estimate);
  }
  return out;
}

/// f(theta) = (1/2ik) sum (2l+1)(S_l - 1) P_l(cos theta), Abel-regularised.
inline Complex partial_wave_amplitude(const PartialWaveSMatrix& s, double k, double theta,
                                      const RegularizationSpec& reg = {}) {
  detail::check_symmetric_window(theta, kDefaultThetaMin);
  std::vector<Complex> deviations(s.elements().begin(), s.elements().end());
  for (Complex& d : deviations) d -= 1.0;
  return regularized_partial_wave_sum(deviations, k, theta, reg).value;
}

/// Same, generating S_l from the closed form up to the regularisation cutoff.
inline Complex partial_wave_amplitude(double tau, double k, double theta,
                                      const RegularizationSpec& reg = {}) {
  return partial_wave_amplitude(sl_closed_form_sequence(tau, reg.max_l()), k, theta, reg);
}

/// f(theta) = (1/2ik) [Gamma(1+i tau)/Gamma(-i tau)] sin^-2(theta/2) exp[-i tau ln sin^2(theta/2)].
inline Complex closed_form_amplitude(double tau, double k, double theta,
                                     double theta_min = kDefaultThetaMin) {
  if (!(k > 0.0)) throw DomainError("closed_form_amplitude: needs k > 0");
  detail::check_forward_window(theta, theta_min);
  // Gamma(1+i tau)/Gamma(-i tau) = -i tau Gamma(1+i tau)/Gamma(1-i tau); finite at tau = 0.
  const Complex prefactor = Complex{0.0, -tau} * gamma_ratio(Complex{1.0, tau}, Complex{1.0, -tau});
  const double s2 = detail::half_angle_sin2(theta);
  const Complex phase = std::exp(Complex{0.0, -tau * std::log(s2)});
  return prefactor / Complex{0.0, 2.0 * k} / s2 * phase;
}

/// Coulomb amplitude for equal masses:
/// f_c = alpha (1 - beta^2) / (m v^2 sin^2(theta/2)) exp[-i tau ln sin^2(theta/2) + i pi + 2 i eta].
inline Complex coulomb_amplitude(double alpha, double m, double k, double theta,
                                 double theta_min = kDefaultThetaMin) {
  if (!(k > 0.0)) throw DomainError("coulomb_amplitude: needs k > 0");
  detail::check_forward_window(theta, theta_min);
  const double tau = coulomb_tau(alpha, m, k);
  const RelativeVelocity rel = relative_velocity(k, m);
  const double eta = coulomb_phase(tau);
  const double s2 = detail::half_angle_sin2(theta);
  const double modulus = alpha * (1.0 - rel.beta * rel.beta) / (m * rel.v * rel.v * s2);
  return modulus * std::exp(Complex{0.0, -tau * std::log(s2) + std::numbers::pi + 2.0 * eta});
}

/// f_c(theta) + f_c(pi - theta) for identical spinless particles.
inline Complex symmetrized_amplitude(double alpha, double m, double k, double theta,
                                     double theta_min = kDefaultThetaMin) {
  detail::check_symmetric_window(theta, theta_min);
  return coulomb_amplitude(alpha, m, k, theta, theta_min) +
         coulomb_amplitude(alpha, m, k, std::numbers::pi - theta, theta_min);
}

namespace detail {

inline double mott_bracket(double theta, double cos_argument) {
  const double s2 = std::pow(std::sin(0.5 * theta), 2);
  const double c2 = std::pow(std::cos(0.5 * theta), 2);
  return 1.0 / (s2 * s2) + 1.0 / (c2 * c2) +
         2.0 / (s2 * c2) * std::cos(cos_argument * std::log(s2 / c2));
}

}  // namespace detail

/// Relativistic Mott cross section
/// (alpha/m v^2)^2 {sin^-4 + cos^-4 + 2 cos[(alpha/v)(1-beta^2)^(1/2) ln tan^2] / (sin^2 cos^2)} (1-beta^2)^2.
inline double mott_cross_section(double alpha, double m, double k, double theta,
                                 double theta_min = kDefaultThetaMin) {
  if (!(k > 0.0)) throw DomainError("mott_cross_section: needs k > 0");
  detail::check_symmetric_window(theta, theta_min);
  const RelativeVelocity rel = relative_velocity(k, m);
  const double one_minus_b2 = 1.0 - rel.beta * rel.beta;
  const double scale = alpha / (m * rel.v * rel.v);
  return scale * scale * detail::mott_bracket(theta, alpha / rel.v * std::sqrt(one_minus_b2)) *
         one_minus_b2 * one_minus_b2;
}

/// The classic non-relativistic Mott formula at relative velocity v.
inline double mott_cross_section_nonrelativistic(double alpha, double m, double v, double theta,
                                                 double theta_min = kDefaultThetaMin) {
  if (!(v > 0.0)) throw DomainError("mott_cross_section_nonrelativistic: needs v > 0");
  detail::check_symmetric_window(theta, theta_min);
  const double scale = alpha / (m * v * v);
  return scale * scale * detail::mott_bracket(theta, alpha / v);
}

/// Invariant amplitude M = -sqrt(s) f / pi^2.
inline Complex invariant_amplitude(double s_mandelstam, Complex f) {
  if (s_mandelstam < 0.0) throw DomainError("invariant_amplitude: s < 0");
  return -std::sqrt(s_mandelstam) * f / (std::numbers::pi * std::numbers::pi);
}

/// dsigma/dt = pi^5 |M|^2 / sqrt((p1 p2)^2 - m^4) for equal masses.
inline double dsigma_dt(const FourMomentum& p1, const FourMomentum& p2, Complex m_inv) {
  const double m1 = p1.mass();
  const double m2 = p2.mass();
  if (std::abs(m1 - m2) > 1e-9 * std::max(m1, m2)) {
    throw DomainError("dsigma_dt: requires equal masses");
  }
  const double pp = minkowski_dot(p1, p2);
  const double m4 = m1 * m1 * m2 * m2;
  const double flux2 = pp * pp - m4;
  if (!(flux2 > 1e-14 * pp * pp)) throw ThresholdError("dsigma_dt: vanishing flux at threshold");
  return std::pow(std::numbers::pi, 5) * std::norm(m_inv) / std::sqrt(flux2);
}

/// dsigma/dOmega = |f|^2.
inline double dsigma_domega(Complex f) { return std::norm(f); }

/// T(k', k) = -f / (2 pi^2 m).
inline Complex transition_amplitude(Complex f, double m) {
  if (!(m > 0.0)) throw DomainError("transition_amplitude: needs m > 0");
  return -f / (2.0 * std::numbers::pi * std::numbers::pi * m);
}

/// dsigma/dt divided by the c.m. form (pi / k^2) |f|^2; equals k sqrt(s) for
/// M = -sqrt(s) f / pi^2, independent of the angle.
inline double dsigma_dt_ratio(double dsdt, Complex f, double k) {
  return dsdt / (std::numbers::pi / (k * k) * std::norm(f));
}

}  // namespace scatter
