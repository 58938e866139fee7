#pragma once

#include "dicke/propagator.hpp"
#include "dicke/qmat.hpp"

namespace dicke {

/// Concurrence, guaranteed to lie in [0, 1].
class ConcurrenceValue {
 public:
  /// Throws InvalidParameter outside [0, 1] (after absorbing 1e-9 rounding).
  explicit ConcurrenceValue(double v);
  double value() const { return v_; }
  operator double() const { return v_; }

 private:
  double v_;
};

/// (sigma2 x sigma2) conj(rho) (sigma2 x sigma2)
ComplexMatrix4 spin_flip(const ComplexMatrix4& rho);
ComplexMatrix4 spin_flip(const DensityMatrix& rho);

/// Wootters concurrence max(0, l1 - l2 - l3 - l4), where l_i are the
/// descending square roots of the eigenvalues of rho * spin_flip(rho).
ConcurrenceValue concurrence(const DensityMatrix& rho);

/// Same quantity via the nested square roots
/// R = sqrt(sqrt(rho) * spin_flip(rho) * sqrt(rho)),  C = max(0, 2 * max eig R - tr R).
/// Slower; kept as an independent route for cross-checks.
ConcurrenceValue concurrence_via_sqrt(const DensityMatrix& rho);

/// Stationary-state concurrence for g = 1 straight from the initial matrix
/// elements: |rho22 + rho33 - 2 Re rho23| / 2.
ConcurrenceValue asymptotic_concurrence(const DensityMatrix& rho0);

/// (1 - |<psi, phi>|^2) / 2 for an initial product state psi (x) phi.
ConcurrenceValue product_asymptotic_concurrence(const QubitVector& psi, const QubitVector& phi);

/// (1 - a^2)(1 - cos(theta1 - theta2)) / 2 for the maximally entangled family.
ConcurrenceValue mes_asymptotic_concurrence(double a, double theta1, double theta2);

/// Peres-Horodecki: the partial transpose has no eigenvalue below -1e-9.
bool is_ppt_separable(const DensityMatrix& rho, double tol = kStructuralTol);

/// Smallest eigenvalue of the partial transpose.
double min_partial_transpose_eigenvalue(const DensityMatrix& rho);

/// Von Neumann entropy in bits of the reduced state of a pure rho.
/// Throws NotPure unless tr(rho^2) >= 1 - 1e-9.
double entropy_of_entanglement(const DensityMatrix& rho);

}  // namespace dicke
