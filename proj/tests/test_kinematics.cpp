// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "scatter/kinematics.hpp"

using scatter::FourMomentum;
using scatter::Vec3;

namespace {

// Pure boost along z with rapidity eta; test plumbing only.
FourMomentum boost_z(const FourMomentum& p, double eta) {
  const double ch = std::cosh(eta), sh = std::sinh(eta);
  return {ch * p.E + sh * p.p.z, Vec3{p.p.x, p.p.y, sh * p.E + ch * p.p.z}};
}

// Momentum of particle 1 in the c.m. frame by an explicit Lorentz boost.
Vec3 cm_momentum_by_boost(const FourMomentum& p1, const FourMomentum& p2) {
  const FourMomentum total = p1 + p2;
  const double M = std::sqrt(scatter::minkowski_dot(total, total));
  const Vec3 P = total.p;
  return p1.p + P * (scatter::dot(P, p1.p) / (M * (total.E + M)) - p1.E / M);
}

FourMomentum random_particle(std::mt19937_64& rng, double mass) {
  std::normal_distribution<double> g(0.0, 1.0);
  return FourMomentum::on_shell(mass, Vec3{g(rng), g(rng), g(rng)});
}

}  // namespace

TEST(MandelstamS, Examples) {
  const auto rest = FourMomentum::on_shell(1.0, {});
  EXPECT_DOUBLE_EQ(scatter::mandelstam_s(rest, rest), 4.0);

  const double m = 1.3, k = 0.8;
  const auto [p1, p2] = scatter::from_cm_at_rest({0.0, k, 0.0}, m, m);
  EXPECT_NEAR(scatter::mandelstam_s(p1, p2), 4.0 * (m * m + k * k), 1e-14);

  const FourMomentum a{std::sqrt(2.0), {1.0, 0.0, 0.0}};
  const FourMomentum b{2.0, {}};
  EXPECT_NEAR(scatter::mandelstam_s(a, b), 10.656854249492380195, 1e-13);
}

TEST(MandelstamS, InvariantUnderBoost) {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 50; ++n) {
    const auto p1 = random_particle(rng, 0.7), p2 = random_particle(rng, 1.9);
    const double s = scatter::mandelstam_s(p1, p2);
    for (double eta : {-1.5, 0.3, 2.0}) {
      EXPECT_NEAR(scatter::mandelstam_s(boost_z(p1, eta), boost_z(p2, eta)) / s, 1.0, 1e-10);
    }
  }
}

TEST(KFromS, Examples) {
  EXPECT_EQ(scatter::k_from_s(9.0, 1.0, 2.0), 0.0);
  EXPECT_NEAR(scatter::k_from_s(4.0 * (1.0 + 0.25), 1.0, 1.0), 0.5, 1e-15);
  const double k = scatter::k_from_s(16.0, 1.0, 2.0);
  EXPECT_NEAR(k, 1.2808688457449497979, 1e-15);
  EXPECT_NEAR(scatter::cm_energy(1.0, k) + scatter::cm_energy(2.0, k), 4.0, 1e-12);
}

TEST(KFromS, ThresholdHandling) {
  EXPECT_EQ(scatter::k_from_s(9.0 * (1.0 - 1e-13), 1.0, 2.0), 0.0);
  EXPECT_THROW(scatter::k_from_s(9.0 * (1.0 - 1e-9), 1.0, 2.0), scatter::ThresholdError);
  EXPECT_THROW(scatter::k_from_s(1.0, 1.0, 1.0), scatter::ThresholdError);
}

TEST(KFromS, EnergyRoundTrip) {
  for (double m1 : {0.5, 1.0, 2.0}) {
    for (double m2 : {0.5, 1.0, 2.0}) {
      const double threshold = (m1 + m2) * (m1 + m2);
      for (double excess : {0.0, 1e-12, 1e-6, 1e-2, 1.0, 1e2, 1e6}) {
        const double s = threshold * (1.0 + excess);
        const double k = scatter::k_from_s(s, m1, m2);
        const double w = scatter::cm_energy(m1, k) + scatter::cm_energy(m2, k);
        EXPECT_NEAR(w / std::sqrt(s), 1.0, 1e-12) << m1 << ' ' << m2 << ' ' << excess;
      }
    }
  }
}

TEST(KFromS, RoundTripThroughCMPair) {
  for (double k : {0.1, 1.0, 1e3}) {
    for (double m1 : {0.5, 1.0, 2.0}) {
      for (double m2 : {0.5, 1.0, 2.0}) {
        const auto [p1, p2] = scatter::from_cm_at_rest({0.0, 0.0, k}, m1, m2);
        EXPECT_NEAR(scatter::k_from_s(scatter::mandelstam_s(p1, p2), m1, m2) / k, 1.0, 1e-12)
            << k << ' ' << m1 << ' ' << m2;
      }
    }
  }
}

TEST(KFromS, NearThresholdLimitedByConditioning) {
  // s carries relative rounding eps, so k picks up about eps * s / (2 (s - (m1+m2)^2)).
  const double m = 1.0, k = 1e-4;
  const double w = 2.0 * scatter::cm_energy(m, k);
  const double bound = 8.0 * 2.2e-16 * (w * w) / (2.0 * (w * w - 4.0 * m * m));
  EXPECT_LE(std::abs(scatter::k_from_s(w * w, m, m) / k - 1.0), bound);
}

TEST(ToCMVariables, CMInput) {
  const Vec3 k{0.3, -0.4, 1.2};
  const auto [p1, p2] = scatter::from_cm_at_rest(k, 0.9, 1.6);
  const auto cm = scatter::to_cm_variables(p1, p2);
  EXPECT_EQ(cm.P, Vec3{});
  EXPECT_NEAR(cm.k_vec.x, k.x, 1e-12);
  EXPECT_NEAR(cm.k_vec.y, k.y, 1e-12);
  EXPECT_NEAR(cm.k_vec.z, k.z, 1e-12);
}

TEST(ToCMVariables, TargetAtRestEqualMasses) {
  const auto p1 = FourMomentum::on_shell(1.0, {0.0, 0.0, 2.0});
  const auto p2 = FourMomentum::on_shell(1.0, {});
  const auto cm = scatter::to_cm_variables(p1, p2);
  EXPECT_EQ(cm.P, p1.p);
  EXPECT_EQ(cm.k_vec.x, 0.0);
  EXPECT_EQ(cm.k_vec.y, 0.0);
  EXPECT_GT(cm.k_vec.z, 0.0);
}

TEST(ToCMVariables, GenericPairsMatchExplicitBoost) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 100; ++n) {
    const auto p1 = random_particle(rng, 0.6), p2 = random_particle(rng, 1.7);
    const auto cm = scatter::to_cm_variables(p1, p2);
    const double k = scatter::k_from_s(scatter::mandelstam_s(p1, p2), 0.6, 1.7);
    EXPECT_NEAR(scatter::norm(cm.k_vec), k, 1e-10);
    EXPECT_LE(scatter::norm(cm.k_vec - cm_momentum_by_boost(p1, p2)), 1e-10);
  }
}

TEST(FromCMAtRest, Examples) {
  const auto [a, b] = scatter::from_cm_at_rest({}, 1.0, 3.0);
  EXPECT_EQ(a.E, 1.0);
  EXPECT_EQ(b.E, 3.0);
  EXPECT_EQ(a.p, Vec3{});

  const auto [p1, p2] = scatter::from_cm_at_rest({0.5, 0.2, -0.1}, 1.0, 2.0);
  const auto kin = scatter::two_body_from_pair(p1, p2);
  EXPECT_NEAR(kin.w, std::sqrt(scatter::mandelstam_s(p1, p2)), 1e-14);
  EXPECT_NEAR(kin.w, kin.w1 + kin.w2, 1e-14);
}

TEST(Jacobian, UnityInCMFrame) {
  for (double k : {1e-3, 0.4, 25.0}) {
    const auto [p1, p2] = scatter::from_cm_at_rest({k, 0.0, 0.0}, 0.8, 1.4);
    EXPECT_NEAR(scatter::jacobian(p1, p2), 1.0, 1e-12);
  }
}

TEST(Jacobian, TargetAtRestEqualMasses) {
  const double m = 1.0;
  const auto p1 = FourMomentum::on_shell(m, {0.0, 0.0, 1.5});
  const auto p2 = FourMomentum::on_shell(m, {});
  const double w1 = scatter::cm_energy(m, scatter::k_from_s(scatter::mandelstam_s(p1, p2), m, m));
  EXPECT_NEAR(scatter::jacobian(p1, p2), (p1.E * m / (p1.E + m)) * (2.0 * w1 / (w1 * w1)), 1e-14);
}

TEST(Jacobian, PositiveOnRandomPairs) {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 100; ++n) {
    EXPECT_GT(scatter::jacobian(random_particle(rng, 0.5), random_particle(rng, 2.5)), 0.0);
  }
}

TEST(MomentumTransfer, Examples) {
  const double k = 1.0, m = 1.0;
  const auto p1 = FourMomentum::on_shell(m, {0.0, 0.0, k});
  EXPECT_EQ(scatter::momentum_transfer_t(p1, p1), 0.0);
  EXPECT_NEAR(scatter::momentum_transfer_t(p1, FourMomentum::on_shell(m, {0.0, 0.0, -k})), -4.0 * k * k, 1e-14);
  EXPECT_NEAR(scatter::momentum_transfer_t(p1, FourMomentum::on_shell(m, {k, 0.0, 0.0})), -2.0, 1e-14);
  const double theta = 0.7;
  EXPECT_NEAR(scatter::momentum_transfer_t(
                  p1, FourMomentum::on_shell(m, {k * std::sin(theta), 0.0, k * std::cos(theta)})),
              -2.0 * k * k * (1.0 - std::cos(theta)), 1e-14);
}

TEST(CoulombTau, Examples) {
  EXPECT_EQ(scatter::coulomb_tau(1.0, 1.0, 0.5), 1.0);
  EXPECT_EQ(scatter::coulomb_tau(0.0, 1.0, 0.5), 0.0);
  EXPECT_THROW(scatter::coulomb_tau(1.0, 1.0, 0.0), scatter::DomainError);
}

TEST(CoulombTau, AgreesWithVelocityForm) {
  for (double k : {1e-3, 0.2, 1.0, 4.0}) {
    for (double m : {0.5, 1.0, 3.0}) {
      const auto rel = scatter::relative_velocity(k, m);
      const double alpha = 0.37;
      EXPECT_NEAR(scatter::coulomb_tau(alpha, m, k) / (alpha / rel.v * std::sqrt(1.0 - rel.beta * rel.beta)),
                  1.0, 1e-12);
    }
  }
}

TEST(RelativeVelocity, Examples) {
  EXPECT_EQ(scatter::relative_velocity(0.0, 1.0).v, 0.0);
  const double m = 2.0, k = 1e-6;
  EXPECT_NEAR(scatter::relative_velocity(k, m).v / (2.0 * k / m), 1.0, 1e-10);
  EXPECT_NEAR(scatter::relative_velocity(m / 2.0, m).v, 1.0 / std::sqrt(2.0), 1e-15);
  // defining relation k = (m v / 2) / sqrt(1 - v^2)
  const auto rel = scatter::relative_velocity(0.9, 1.1);
  EXPECT_NEAR(1.1 * rel.v / 2.0 / std::sqrt(1.0 - rel.v * rel.v), 0.9, 1e-14);
  EXPECT_LT(scatter::relative_velocity(1e6, 1.0).beta, 1.0);
}

TEST(TwoBodyKinematics, Invariants) {
  const auto kin = scatter::two_body_at_k(0.5, 2.0, 0.75);
  EXPECT_NEAR(kin.w, std::sqrt(kin.s), 1e-14);
  EXPECT_NEAR(kin.w, kin.w1 + kin.w2, 1e-14);
  EXPECT_GE(kin.s, (kin.m1 + kin.m2) * (kin.m1 + kin.m2));
  EXPECT_GE(kin.beta, 0.0);
  EXPECT_LT(kin.beta, 1.0);
  // equal masses reduce to relative_velocity
  const auto eq = scatter::two_body_at_k(1.2, 1.2, 0.3);
  EXPECT_EQ(eq.v, scatter::relative_velocity(0.3, 1.2).v);
}

TEST(FourMomentum, RejectsUnphysicalStates) {
  EXPECT_THROW((FourMomentum{1.0, {2.0, 0.0, 0.0}}.mass()), scatter::DomainError);
  EXPECT_THROW((FourMomentum{-1.0, {}}.mass()), scatter::DomainError);
}
