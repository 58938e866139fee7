#pragma once

// Named families of two-atom states. Every constructor returns a validated
// DensityMatrix in the e1..e4 = |11>, |10>, |01>, |00> basis.

#include <array>
#include <string_view>

#include "dicke/qmat.hpp"

namespace dicke {

/// Tolerance every factory output is validated against.
inline constexpr Tolerances kFactoryTolerances{1e-12, 1e-12, 1e-12};

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

std::string_view to_string(BellState b);

/// Phi+- = (|00> +- |11>)/sqrt2,  Psi+- = (|10> +- |01>)/sqrt2.
Eigen::Vector4cd bell_vector(BellState which);

/// Mixing parameter of the maximally-entangled-mixed-state family together
/// with the derived diagonal weight h: 1/3 on [0, 2/3], delta/2 on [2/3, 1].
class MemsDelta {
 public:
  explicit MemsDelta(double delta);
  double delta() const { return delta_; }
  double h() const;

 private:
  double delta_;
};

/// |psi><psi| (x) |phi><phi|
DensityMatrix product_state(const QubitVector& psi, const QubitVector& phi);

DensityMatrix bell(BellState which);

/// Pure maximally entangled state Q(a, theta1, theta2), a in [0, 1], entered
/// element by element rather than from a state vector.
DensityMatrix mes(double a, double theta1, double theta2);

/// p1 Phi+ + p2 Phi- + p3 Psi+ + p4 Psi-. Throws InvalidWeights for negative
/// entries or a sum off 1 by more than 1e-12.
DensityMatrix bell_diagonal(double p1, double p2, double p3, double p4);

/// (1 - p) I/4 + p Phi+, p in [0, 1].
DensityMatrix werner(double p);

/// [[h, 0, 0, d/2], [0, 1 - 2h, 0, 0], [0, 0, 0, 0], [d/2, 0, 0, h]]
DensityMatrix mems(const MemsDelta& delta);

/// The computational basis state |a>|b> with a, b in {0, 1} (1 = excited).
DensityMatrix basis_state(int atom_a, int atom_b);

/// tr(rho^2)
double purity(const DensityMatrix& rho);

}  // namespace dicke
