// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "scatter/errors.hpp"
#include "scatter/so31.hpp"
#include "scatter/specfun.hpp"

namespace scatter {

/// Partial-wave S-matrix elements S_0 .. S_lmax for a real tau.
class PartialWaveSMatrix {
 public:
  PartialWaveSMatrix(double tau, std::vector<Complex> elements)
      : tau_(tau), s_(std::move(elements)) {
    if (s_.empty()) throw SizeError("PartialWaveSMatrix: needs at least S_0");
  }

  double tau() const { return tau_; }
  int l_max() const { return static_cast<int>(s_.size()) - 1; }
  Complex operator[](int l) const { return s_.at(static_cast<std::size_t>(l)); }
  std::span<const Complex> elements() const { return s_; }

 private:
  double tau_;
  std::vector<Complex> s_;
};

/// S_l = Gamma(1 + i tau + l) / Gamma(1 - i tau + l).
inline Complex sl_closed_form(double tau, int l) {
  if (l < 0) throw DomainError("sl_closed_form: l must be non-negative");
  return gamma_ratio(Complex{1.0 + l, tau}, Complex{1.0 + l, -tau});
}

inline PartialWaveSMatrix sl_closed_form_sequence(double tau, int l_max) {
  if (l_max < 0) throw DomainError("sl_closed_form_sequence: l_max must be non-negative");
  std::vector<Complex> s(static_cast<std::size_t>(l_max) + 1);
  for (int l = 0; l <= l_max; ++l) s[l] = sl_closed_form(tau, l);
  return {tau, std::move(s)};
}

/// Upward solution of (1 - i tau + l) S_{l+1} = (1 + i tau + l) S_l seeded
/// with the closed-form S_0, which also fixes S_l -> 1 as tau -> 0.
inline PartialWaveSMatrix sl_recurrence(double tau, int l_max) {
  if (l_max < 0) throw DomainError("sl_recurrence: l_max must be non-negative");
  std::vector<Complex> s(static_cast<std::size_t>(l_max) + 1);
  s[0] = sl_closed_form(tau, 0);
  for (int l = 0; l < l_max; ++l) {
    s[l + 1] = s[l] * (Complex{1.0 + l, tau} / Complex{1.0 + l, -tau});
  }
  return {tau, std::move(s)};
}

/// max_l ||S_l| - 1|.
inline double unitarity_deviation(const PartialWaveSMatrix& s) {
  double worst = 0.0;
  for (Complex v : s.elements()) worst = std::max(worst, std::abs(std::abs(v) - 1.0));
  return worst;
}

/// max_l |a_l - b_l| over the common range.
inline double max_difference(const PartialWaveSMatrix& a, const PartialWaveSMatrix& b) {
  const int n = std::min(a.l_max(), b.l_max());
  double worst = 0.0;
  for (int l = 0; l <= n; ++l) worst = std::max(worst, std::abs(a[l] - b[l]));
  return worst;
}

/// Residuals of S X(chi) - X(chi~) S on the block l <= l_max - 1, with S acting
/// as S_l on block l. L3, L+-, N3 are gated; N+- are reported only.
inline ResidualReport verify_intertwining(const TruncatedRep& rep_chi, const TruncatedRep& rep_dual,
                                          const PartialWaveSMatrix& s) {
  if (rep_chi.l_max() != rep_dual.l_max() || s.l_max() < rep_chi.l_max()) {
    throw SizeError("verify_intertwining: truncations do not match");
  }
  if (!(rep_dual.label() == weyl_dual(rep_chi.label()))) {
    throw DomainError("verify_intertwining: second representation is not the Weyl dual");
  }
  const int dim = interior_dimension(rep_chi.l_max(), 1);
  std::vector<Complex> diag(static_cast<std::size_t>(rep_chi.dimension()));
  for (int idx = 0; idx < rep_chi.dimension(); ++idx) diag[idx] = s[BasisIndex::from_flat(idx).l];

  auto residual = [&](Generator g) {
    const ComplexMatrix& x = rep_chi.generator(g);
    const ComplexMatrix& y = rep_dual.generator(g);
    double worst = 0.0;
    for (int c = 0; c < dim; ++c) {
      for (int r = 0; r < dim; ++r) {
        worst = std::max(worst, std::abs(diag[r] * x(r, c) - y(r, c) * diag[c]));
      }
    }
    return worst;
  };

  ResidualReport report;
  for (Generator g : kAllGenerators) {
    const bool gated = g != Generator::Np && g != Generator::Nm;
    report.add("intertwining", std::string(generator_name(g)), residual(g), gated);
  }
  return report;
}

}  // namespace scatter
