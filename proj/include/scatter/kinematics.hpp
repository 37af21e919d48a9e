// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <utility>

#include "scatter/errors.hpp"

// Relativistic two-body kinematics in natural units (hbar = c = 1).

namespace scatter {

struct Vec3 {
  double x{0}, y{0}, z{0};

  friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend constexpr Vec3 operator*(Vec3 a, double s) { return s * a; }
  friend constexpr Vec3 operator/(Vec3 a, double s) { return {a.x / s, a.y / s, a.z / s}; }
  friend constexpr bool operator==(Vec3, Vec3) = default;
};

constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

/// Energy and three-momentum of a single particle.
struct FourMomentum {
  double E{0};
  Vec3 p{};

  static FourMomentum on_shell(double mass, Vec3 p) {
    return {std::sqrt(mass * mass + dot(p, p)), p};
  }

  /// Invariant mass sqrt(E^2 - p^2); throws for space-like or non-positive energy.
  double mass() const {
    const double m2 = E * E - dot(p, p);
    if (!(E > 0.0) || m2 < -1e-12 * E * E) {
      throw DomainError("FourMomentum: not a physical single-particle state");
    }
    return m2 > 0.0 ? std::sqrt(m2) : 0.0;
  }

  friend constexpr FourMomentum operator+(FourMomentum a, FourMomentum b) { return {a.E + b.E, a.p + b.p}; }
  friend constexpr FourMomentum operator-(FourMomentum a, FourMomentum b) { return {a.E - b.E, a.p - b.p}; }
};

/// Minkowski product with signature (+, -, -, -).
constexpr double minkowski_dot(const FourMomentum& a, const FourMomentum& b) {
  return a.E * b.E - dot(a.p, b.p);
}

/// Total and relative three-momenta of a two-body state.
struct CMVariables {
  Vec3 P{};
  Vec3 k_vec{};
};

struct RelativeVelocity {
  double v{0};
  double beta{0};
};

/// Kinematic summary of a two-body channel.
struct TwoBodyKinematics {
  double m1{0}, m2{0};
  double k{0};
  double s{0};
  double w{0};
  double w1{0}, w2{0};
  double eps1{0}, eps2{0};
  double beta{0};
  double v{0};
};

/// Relative fraction below threshold that is still treated as the threshold itself.
inline constexpr double kThresholdSlack = 1e-12;

inline double mandelstam_s(const FourMomentum& p1, const FourMomentum& p2) {
  const FourMomentum total = p1 + p2;
  return minkowski_dot(total, total);
}

/// Relative-momentum magnitude k >= 0 with sqrt(m1^2+k^2) + sqrt(m2^2+k^2) = sqrt(s).
inline double k_from_s(double s, double m1, double m2) {
  const double threshold = (m1 + m2) * (m1 + m2);
  if (!(s >= threshold)) {
    if (s >= threshold * (1.0 - kThresholdSlack)) return 0.0;
    throw ThresholdError("k_from_s: s below the two-body threshold (m1+m2)^2");
  }
  const double pseudo = (m1 - m2) * (m1 - m2);
  const double k2 = (s - threshold) * (s - pseudo) / (4.0 * s);
  return std::sqrt(std::max(k2, 0.0));
}

/// Single-particle c.m. energy w_a(k).
inline double cm_energy(double mass, double k) { return std::sqrt(mass * mass + k * k); }

/// Relative velocity for two particles of equal mass m: the solution of
/// k = (m v / 2) (1 - beta^2)^(-1/2) with beta = v.
inline RelativeVelocity relative_velocity(double k, double m) {
  if (k < 0.0 || !(m > 0.0)) throw DomainError("relative_velocity: needs k >= 0, m > 0");
  const double v = 2.0 * k / std::sqrt(m * m + 4.0 * k * k);
  return {v, v};
}

inline TwoBodyKinematics two_body_at_k(double m1, double m2, double k) {
  if (!(m1 > 0.0) || !(m2 > 0.0) || k < 0.0) {
    throw DomainError("two_body_at_k: needs positive masses and k >= 0");
  }
  TwoBodyKinematics out;
  out.m1 = m1;
  out.m2 = m2;
  out.k = k;
  out.w1 = cm_energy(m1, k);
  out.w2 = cm_energy(m2, k);
  out.w = out.w1 + out.w2;
  out.s = out.w * out.w;
  out.eps1 = out.w1;
  out.eps2 = out.w2;
  // Equal-mass relation generalised through the reduced mass mu = m1 m2 / (m1 + m2).
  const RelativeVelocity rel = relative_velocity(k, 2.0 * m1 * m2 / (m1 + m2));
  out.v = rel.v;
  out.beta = rel.beta;
  return out;
}

inline TwoBodyKinematics two_body_from_pair(const FourMomentum& p1, const FourMomentum& p2) {
  const double s = mandelstam_s(p1, p2);
  TwoBodyKinematics out = two_body_at_k(p1.mass(), p2.mass(), k_from_s(s, p1.mass(), p2.mass()));
  out.s = s;
  out.w = std::sqrt(s);
  out.eps1 = 0.5 * (p1.E + out.w1);
  out.eps2 = 0.5 * (p2.E + out.w2);
  return out;
}

/// (p1, p2) -> (P, k). |k| comes from the invariant s, then eps_a = (E_a + w_a)/2
/// fixes the direction: k = (eps2 p1 - eps1 p2) / (eps1 + eps2).
inline CMVariables to_cm_variables(const FourMomentum& p1, const FourMomentum& p2) {
  const TwoBodyKinematics kin = two_body_from_pair(p1, p2);
  return {p1.p + p2.p, (kin.eps2 * p1.p - kin.eps1 * p2.p) / (kin.eps1 + kin.eps2)};
}

/// Inverse of to_cm_variables restricted to P = 0.
inline std::pair<FourMomentum, FourMomentum> from_cm_at_rest(Vec3 k_vec, double m1, double m2) {
  const double k = norm(k_vec);
  return {FourMomentum{cm_energy(m1, k), k_vec}, FourMomentum{cm_energy(m2, k), -k_vec}};
}

/// |d(p1,p2)/d(P,k)| = (E1 E2 / (E1 + E2)) (w1 + w2) / (w1 w2).
inline double jacobian(const FourMomentum& p1, const FourMomentum& p2) {
  const TwoBodyKinematics kin = two_body_from_pair(p1, p2);
  return (p1.E * p2.E / (p1.E + p2.E)) * (kin.w1 + kin.w2) / (kin.w1 * kin.w2);
}

/// t = (p1' - p1)^2.
inline double momentum_transfer_t(const FourMomentum& p1, const FourMomentum& p1_out) {
  const FourMomentum q = p1_out - p1;
  return minkowski_dot(q, q);
}

/// Coulomb parameter tau = alpha m / (2 k) for equal masses m.
inline double coulomb_tau(double alpha, double m, double k) {
  if (!(k > 0.0)) throw DomainError("coulomb_tau: needs k > 0");
  return alpha * m / (2.0 * k);
}

}  // namespace scatter
