#pragma once

#include <optional>
#include <vector>

#include "qhlocal/types.hpp"

namespace qhl {

/// Parameters of the PT-symmetric tight-binding chain with a conjugate pair
/// of complex on-site impurities at sites m and n-m+1. Sites are 1-based.
struct ChainParams {
  int n = 2;                      ///< site count, n >= 2
  int m = 1;                      ///< impurity site, 1 <= m <= ceil(n/2)
  Complex gamma{0.0, 0.0};        ///< complex potential at the impurity
  std::vector<Complex> hoppings;  ///< t_1..t_{n-1}, all nonzero
  std::vector<double> onsite;     ///< V_1..V_n with V_i = V_{n+1-i}
  double beta = 0.0;              ///< metric parameter, used only when n = 2m

  /// XX chain: impurity at site 1, unit hoppings, zero potential.
  static ChainParams xx(int n, Complex gamma);
  /// Nearest-impurity chain (n = 2m): impurities at the two central sites.
  static ChainParams nearest(int n, Complex gamma, double beta);

  int mirror(int site) const { return n + 1 - site; }
  Complex hopping(int i) const { return hoppings.at(i - 1); }
  double potential(int i) const { return onsite.empty() ? 0.0 : onsite.at(i - 1); }

  bool phase_symmetric(double tol = 1e-10) const;

  /// Throws ParameterError unless all ChainParams invariants hold.
  void validate(double tol = 1e-10) const;
};

struct FirstQuantizedHamiltonian {
  Matrix gamma_matrix;  ///< n x n hopping/potential matrix
  int size() const { return static_cast<int>(gamma_matrix.rows()); }
};

enum class MetricProvenance { Farthest, Nearest, Diagonal, Custom };

/// First-quantized metric M, Hermitian by construction. Positive definiteness
/// is a queried property, never assumed.
struct ReducedMetric {
  Matrix matrix;
  MetricProvenance provenance = MetricProvenance::Custom;
  int size() const { return static_cast<int>(matrix.rows()); }
};

/// Gamma_ii = V_i + gamma [i=m] + conj(gamma) [i=n-m+1],
/// Gamma_{i,i+1} = conj(t_{n-i}), Gamma_{i+1,i} = t_i.
FirstQuantizedHamiltonian build_pt_hamiltonian(const ChainParams& params);

FirstQuantizedHamiltonian build_xx_hamiltonian(int n, Complex gamma);

/// Analytic metric for the farthest-impurity (XX) chain:
/// M_ii = 1, M_ij = -i Im(gamma) conj(gamma)^{j-i-1} for i < j.
/// Hermitian always; positive definite only in part of the unbroken region.
ReducedMetric farthest_metric(int n, Complex gamma);

/// One-parameter metric family for the nearest-impurity chain (n = 2m).
/// Nonzero only on the diagonal and antidiagonal; built from the central
/// 2x2 block by the outward recurrence. Requires
/// beta^2 + Im(gamma)^2 / |t_m|^2 < 1.
ReducedMetric nearest_metric(const ChainParams& params);

/// Gauge away hopping phases: t_i -> |t_i| via b_i = exp(-i chi_i) a_i.
/// Requires parity-symmetric phases; the result is isospectral.
ChainParams strip_phases(const ChainParams& params);

/// General metric from the spectral decomposition op = U D U^{-1}:
/// eta^{-1} = U d U^dagger with positive diagonal d (identity by default).
/// Eigenvectors inside a degenerate cluster are orthonormalized. Throws
/// NoMetricError if the spectrum is complex or the operator is defective.
ReducedMetric metric_from_spectrum(const Matrix& op,
                                   const std::optional<RealVector>& d = std::nullopt,
                                   double tol = kDefaultRankTol);

}  // namespace qhl
