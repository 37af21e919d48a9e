// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "scatter/errors.hpp"
#include "scatter/specfun.hpp"

// Truncated matrix realisation of the SO(3,1) principal series (tau, 0) on the
// |l, mu> basis.

namespace scatter {

using ComplexMatrix = Eigen::MatrixXcd;

/// Principal-series label chi = (tau, lambda). lambda is kept as 2*lambda so
/// half-integers are exact; only lambda = 0 is realised.
struct RepLabel {
  double tau{0};
  int twice_lambda{0};

  double lambda() const { return 0.5 * twice_lambda; }
  friend bool operator==(const RepLabel&, const RepLabel&) = default;
};

/// Weyl-equivalent label (-tau, -lambda).
inline RepLabel weyl_dual(const RepLabel& label) {
  return {-label.tau, -label.twice_lambda};
}

/// |l, mu> with flat index l^2 + (l + mu); blocks ascend in l, mu ascends within a block.
struct BasisIndex {
  int l{0};
  int mu{0};

  static constexpr int flat(int l, int mu) { return l * l + l + mu; }
  constexpr int flat() const { return flat(l, mu); }

  static BasisIndex from_flat(int index) {
    int l = static_cast<int>(std::sqrt(static_cast<double>(index)));
    while (l * l > index) --l;
    while ((l + 1) * (l + 1) <= index) ++l;
    return {l, index - l * l - l};
  }
};

/// Dimension of the space spanned by l = 0..l_max.
constexpr int basis_dimension(int l_max) { return (l_max + 1) * (l_max + 1); }

enum class Generator { L3, Lp, Lm, N3, Np, Nm };

inline constexpr std::array<Generator, 6> kAllGenerators = {
    Generator::L3, Generator::Lp, Generator::Lm, Generator::N3, Generator::Np, Generator::Nm};

constexpr std::string_view generator_name(Generator g) {
  switch (g) {
    case Generator::L3: return "L3";
    case Generator::Lp: return "L+";
    case Generator::Lm: return "L-";
    case Generator::N3: return "N3";
    case Generator::Np: return "N+";
    case Generator::Nm: return "N-";
  }
  return "?";
}

/// a_{l,mu} = sqrt[(l+mu)(l-mu) / ((2l+1)(2l-1))].
inline double coeff_a(int l, int mu) {
  if (l < 1 || std::abs(mu) > l) throw DomainError("coeff_a: needs l >= 1 and |mu| <= l");
  const double num = static_cast<double>(l + mu) * (l - mu);
  return std::sqrt(num / ((2.0 * l + 1.0) * (2.0 * l - 1.0)));
}

/// b_{l,mu} = sqrt[(l+mu)(l+mu-1) / ((2l+1)(2l-1))]. Valid for l >= 1 and
/// -l+1 <= mu <= l+1, the range in which the product under the root is non-negative.
inline double coeff_b(int l, int mu) {
  if (l < 1 || mu < 1 - l || mu > l + 1) {
    throw DomainError("coeff_b: needs l >= 1 and 1-l <= mu <= l+1");
  }
  const double num = static_cast<double>(l + mu) * (l + mu - 1);
  return std::sqrt(num / ((2.0 * l + 1.0) * (2.0 * l - 1.0)));
}

/// The six generator matrices of chi = (tau, 0) truncated at l_max. Immutable.
class TruncatedRep {
 public:
  const RepLabel& label() const { return label_; }
  int l_max() const { return l_max_; }
  int dimension() const { return basis_dimension(l_max_); }

  const ComplexMatrix& L3() const { return m_[0]; }
  const ComplexMatrix& Lp() const { return m_[1]; }
  const ComplexMatrix& Lm() const { return m_[2]; }
  const ComplexMatrix& N3() const { return m_[3]; }
  const ComplexMatrix& Np() const { return m_[4]; }
  const ComplexMatrix& Nm() const { return m_[5]; }

  const ComplexMatrix& generator(Generator g) const { return m_[static_cast<int>(g)]; }

 private:
  TruncatedRep(RepLabel label, int l_max) : label_(label), l_max_(l_max) {
    for (auto& m : m_) m = ComplexMatrix::Zero(dimension(), dimension());
  }

  friend TruncatedRep build_rep(const RepLabel& label, int l_max);

  RepLabel label_;
  int l_max_;
  std::array<ComplexMatrix, 6> m_;
};

/// Populates the generators from their actions on |l mu>:
///   l3 |l mu>  = mu |l mu>
///   l+- |l mu> = sqrt[(l -+ mu)(l +- mu + 1)] |l, mu +- 1>
///   N3 |l mu>  = i(-1 + i tau - l) a_{l+1,mu} |l+1, mu> + i(i tau + l) a_{l,mu} |l-1, mu>
///   N+- |l mu> = +-i(1 - i tau + l) b_{l+1,+-mu+1} |l+1, mu+-1>
///                +-i(i tau + l) b_{l,-+mu} |l-1, mu+-1>
/// Transitions to l > l_max are dropped.
inline TruncatedRep build_rep(const RepLabel& label, int l_max) {
  if (label.twice_lambda != 0) throw DomainError("build_rep: only lambda = 0 is realised");
  if (!std::isfinite(label.tau)) throw DomainError("build_rep: tau must be finite");
  if (l_max < 2) throw SizeError("build_rep: l_max must be at least 2");

  TruncatedRep rep(label, l_max);
  auto& [L3, Lp, Lm, N3, Np, Nm] = rep.m_;
  const Complex i{0.0, 1.0};
  const double tau = label.tau;

  for (int l = 0; l <= l_max; ++l) {
    const Complex up = 1.0 - i * tau + static_cast<double>(l);  // (1 - i tau + l)
    const Complex down = i * tau + static_cast<double>(l);      // (i tau + l)
    for (int mu = -l; mu <= l; ++mu) {
      const int col = BasisIndex::flat(l, mu);
      L3(col, col) = mu;
      if (mu < l) Lp(BasisIndex::flat(l, mu + 1), col) = std::sqrt(double(l - mu) * (l + mu + 1));
      if (mu > -l) Lm(BasisIndex::flat(l, mu - 1), col) = std::sqrt(double(l + mu) * (l - mu + 1));

      if (l < l_max) {
        N3(BasisIndex::flat(l + 1, mu), col) = -i * up * coeff_a(l + 1, mu);
        Np(BasisIndex::flat(l + 1, mu + 1), col) = i * up * coeff_b(l + 1, mu + 1);
        Nm(BasisIndex::flat(l + 1, mu - 1), col) = -i * up * coeff_b(l + 1, -mu + 1);
      }
      if (l >= 1) {
        if (std::abs(mu) <= l - 1) N3(BasisIndex::flat(l - 1, mu), col) = i * down * coeff_a(l, mu);
        if (mu + 1 <= l - 1) Np(BasisIndex::flat(l - 1, mu + 1), col) = i * down * coeff_b(l, -mu);
        if (mu - 1 >= -(l - 1)) Nm(BasisIndex::flat(l - 1, mu - 1), col) = -i * down * coeff_b(l, mu);
      }
    }
  }
  return rep;
}

/// Dimension of the block l <= l_max - margin.
inline int interior_dimension(int l_max, int margin) {
  return std::max(0, basis_dimension(l_max - margin));
}

/// One named max-abs residual. Ungated entries are diagnostic only.
struct NamedResidual {
  std::string family;
  std::string name;
  double value{0};
  bool gated{true};
};

class ResidualReport {
 public:
  void add(std::string family, std::string name, double value, bool gated = true) {
    entries_.push_back({std::move(family), std::move(name), value, gated});
  }

  const std::vector<NamedResidual>& entries() const { return entries_; }

  /// Largest gated residual in a family; the empty family matches every family.
  double max(std::string_view family = {}) const {
    double worst = 0.0;
    for (const auto& e : entries_) {
      if (e.gated && (family.empty() || e.family == family)) worst = std::max(worst, e.value);
    }
    return worst;
  }

  double at(std::string_view name) const {
    for (const auto& e : entries_) {
      if (e.name == name) return e.value;
    }
    throw DomainError("ResidualReport: no entry named " + std::string(name));
  }

 private:
  std::vector<NamedResidual> entries_;
};

namespace detail {

using SparseComplex = Eigen::SparseMatrix<Complex>;

inline double interior_max_abs(const ComplexMatrix& m, int dim) {
  if (dim == 0) return 0.0;
  return m.topLeftCorner(dim, dim).cwiseAbs().maxCoeff();
}

// Cartesian components x1 = (x+ + x-)/2, x2 = (x+ - x-)/(2i), x3.
struct CartesianTriple {
  std::array<SparseComplex, 3> c;
};

inline CartesianTriple cartesian(const ComplexMatrix& plus, const ComplexMatrix& minus,
                                 const ComplexMatrix& third) {
  const Complex i{0.0, 1.0};
  CartesianTriple t;
  t.c[0] = ((plus + minus) * 0.5).sparseView();
  t.c[1] = ((plus - minus) / (2.0 * i)).sparseView();
  t.c[2] = third.sparseView();
  return t;
}

inline SparseComplex commutator(const SparseComplex& a, const SparseComplex& b) {
  return SparseComplex(a * b) - SparseComplex(b * a);
}

inline int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

}  // namespace detail

/// Max-abs residuals of
///   [l_i, l_j] = i eps_ijk l_k,  [l_i, N_j] = i eps_ijk N_k,  [N_i, N_j] = -i eps_ijk l_k
/// on the interior block l <= l_max - 2, plus the ladder forms of the same relations.
inline ResidualReport commutator_residuals(const TruncatedRep& rep) {
  using detail::SparseComplex;
  const int dim = interior_dimension(rep.l_max(), 2);
  const Complex i{0.0, 1.0};
  const auto l = detail::cartesian(rep.Lp(), rep.Lm(), rep.L3());
  const auto n = detail::cartesian(rep.Np(), rep.Nm(), rep.N3());

  auto residual = [&](const SparseComplex& lhs, const SparseComplex& rhs) {
    return detail::interior_max_abs(ComplexMatrix(lhs - rhs), dim);
  };
  auto rhs_of = [&](const detail::CartesianTriple& target, int a, int b, Complex sign) {
    SparseComplex out(rep.dimension(), rep.dimension());
    for (int k = 0; k < 3; ++k) {
      const int e = detail::levi_civita(a, b, k);
      if (e != 0) out += (sign * i * static_cast<double>(e)) * target.c[k];
    }
    return out;
  };

  ResidualReport report;
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      report.add("rotation", "[l" + std::to_string(a + 1) + ",l" + std::to_string(b + 1) + "]",
                 residual(detail::commutator(l.c[a], l.c[b]), rhs_of(l, a, b, 1.0)));
    }
  }
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      report.add("mixed", "[l" + std::to_string(a + 1) + ",N" + std::to_string(b + 1) + "]",
                 residual(detail::commutator(l.c[a], n.c[b]), rhs_of(n, a, b, 1.0)));
    }
  }
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      report.add("boost", "[N" + std::to_string(a + 1) + ",N" + std::to_string(b + 1) + "]",
                 residual(detail::commutator(n.c[a], n.c[b]), rhs_of(l, a, b, -1.0)));
    }
  }

  const SparseComplex L3 = rep.L3().sparseView(), Lp = rep.Lp().sparseView(),
                      Lm = rep.Lm().sparseView(), N3 = rep.N3().sparseView(),
                      Np = rep.Np().sparseView(), Nm = rep.Nm().sparseView();
  report.add("rotation", "[l3,l+]-l+", residual(detail::commutator(L3, Lp), Lp));
  report.add("rotation", "[l3,l-]+l-", residual(detail::commutator(L3, Lm), -Lm));
  report.add("rotation", "[l+,l-]-2l3", residual(detail::commutator(Lp, Lm), 2.0 * L3));
  report.add("mixed", "[l3,N+]-N+", residual(detail::commutator(L3, Np), Np));
  report.add("mixed", "[l3,N-]+N-", residual(detail::commutator(L3, Nm), -Nm));
  report.add("boost", "[N+,N-]+2l3", residual(detail::commutator(Np, Nm), -2.0 * L3));
  return report;
}

struct Casimirs {
  ComplexMatrix c1;
  ComplexMatrix c2;
};

/// C1 = l^2 - N^2 and C2 = (l.N + N.l)/2 with x^2 = x3^2 + (x+ x- + x- x+)/2.
inline Casimirs casimirs(const TruncatedRep& rep) {
  using detail::SparseComplex;
  const SparseComplex L3 = rep.L3().sparseView(), Lp = rep.Lp().sparseView(),
                      Lm = rep.Lm().sparseView(), N3 = rep.N3().sparseView(),
                      Np = rep.Np().sparseView(), Nm = rep.Nm().sparseView();
  auto dot = [](const SparseComplex& a3, const SparseComplex& ap, const SparseComplex& am,
                const SparseComplex& b3, const SparseComplex& bp, const SparseComplex& bm) -> SparseComplex {
    return SparseComplex(a3 * b3) + 0.5 * (SparseComplex(ap * bm) + SparseComplex(am * bp));
  };
  const SparseComplex l2 = dot(L3, Lp, Lm, L3, Lp, Lm);
  const SparseComplex n2 = dot(N3, Np, Nm, N3, Np, Nm);
  const SparseComplex ln = dot(L3, Lp, Lm, N3, Np, Nm);
  const SparseComplex nl = dot(N3, Np, Nm, L3, Lp, Lm);
  return {ComplexMatrix(l2 - n2), ComplexMatrix(0.5 * (ln + nl))};
}

/// Interior (l <= l_max - 2) deviations of the Casimirs from their principal-series values.
struct CasimirDeviation {
  double expected_c1{0};        // -(lambda^2 + tau^2 + 1)
  double c1_diagonal{0};        // max |C1_ii - expected_c1|
  double c1_off_diagonal{0};    // max |C1_ij|, i != j
  double c2{0};                 // max |C2_ij|
};

inline CasimirDeviation casimir_deviation(const TruncatedRep& rep, const Casimirs& c) {
  const int dim = interior_dimension(rep.l_max(), 2);
  CasimirDeviation out;
  const double lambda = rep.label().lambda();
  out.expected_c1 = -(lambda * lambda + rep.label().tau * rep.label().tau + 1.0);
  for (int r = 0; r < dim; ++r) {
    for (int col = 0; col < dim; ++col) {
      const Complex v = c.c1(r, col);
      if (r == col) {
        out.c1_diagonal = std::max(out.c1_diagonal, std::abs(v - out.expected_c1));
      } else {
        out.c1_off_diagonal = std::max(out.c1_off_diagonal, std::abs(v));
      }
    }
  }
  out.c2 = detail::interior_max_abs(c.c2, dim);
  return out;
}

}  // namespace scatter
