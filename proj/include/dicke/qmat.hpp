#pragma once

// Dense 2x2 / 4x4 complex linear algebra and the two-atom density matrix.
//
// Single-atom basis: |1> (excited) = (1, 0), |0> (ground) = (0, 1).
// Two-atom basis (row/column order of every 4x4 matrix):
//   e1 = |1>|1>,  e2 = |1>|0>,  e3 = |0>|1>,  e4 = |0>|0>
// which is exactly the ordering produced by the standard Kronecker product
// of the single-atom vectors. Atom A is the left tensor factor.

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "dicke/errors.hpp"

namespace dicke {

using Complex = std::complex<double>;
using ComplexMatrix2 = Eigen::Matrix2cd;
using ComplexMatrix4 = Eigen::Matrix4cd;
using Spectrum4 = std::array<double, 4>;
using Spectrum2 = std::array<double, 2>;

/// Numerical bands used by the structural checks. Tests may pass their own.
struct Tolerances {
  double hermiticity = 1e-9;
  double trace = 1e-9;
  double positivity = 1e-9;
};

inline constexpr double kStructuralTol = 1e-9;
inline constexpr double kAlgebraicTol = 1e-8;
inline constexpr double kNormTol = 1e-12;
inline constexpr Tolerances kDefaultTolerances{};

enum class Subsystem { A, B };

/// Normalized single-atom pure state.
class QubitVector {
 public:
  /// Throws NotNormalized unless |c1|^2 + |c2|^2 = 1 within 1e-12.
  QubitVector(Complex excited, Complex ground);

  static QubitVector excited() { return {1.0, 0.0}; }
  static QubitVector ground() { return {0.0, 1.0}; }
  /// Normalizes (c1, c2); throws NotNormalized for the zero vector.
  static QubitVector normalized(Complex excited, Complex ground);

  /// Amplitude on |1>, i.e. the first component.
  Complex first() const { return v_(0); }
  /// Amplitude on |0>, i.e. the second component.
  Complex second() const { return v_(1); }
  const Eigen::Vector2cd& vector() const { return v_; }

 private:
  Eigen::Vector2cd v_;
};

/// <psi, phi>, antilinear in the first argument.
Complex inner(const QubitVector& psi, const QubitVector& phi);

/// Hermitian, positive semidefinite, unit-trace 4x4 matrix.
///
/// Instances only come out of validate_state (or the library's own
/// constructors, which run it), so holding one means the invariants held at
/// the tolerance it was checked with.
class DensityMatrix {
 public:
  const ComplexMatrix4& matrix() const { return m_; }
  /// Zero-based element access.
  Complex operator()(int row, int col) const { return m_(row, col); }
  /// One-based element access matching rho_jk notation.
  Complex at1(int j, int k) const { return m_(j - 1, k - 1); }

  friend bool operator==(const DensityMatrix&, const DensityMatrix&) = default;

 private:
  explicit DensityMatrix(const ComplexMatrix4& m) : m_(m) {}
  friend DensityMatrix validate_state(const ComplexMatrix4&, const Tolerances&);

  ComplexMatrix4 m_;
};

/// Checks hermiticity, unit trace and positivity; throws InvalidState listing
/// every violated invariant with its measured magnitude.
DensityMatrix validate_state(const ComplexMatrix4& m,
                             const Tolerances& tol = kDefaultTolerances);

ComplexMatrix4 kron(const ComplexMatrix2& a, const ComplexMatrix2& b);
Eigen::Vector4cd kron(const Eigen::Vector2cd& a, const Eigen::Vector2cd& b);

ComplexMatrix2 partial_trace(const ComplexMatrix4& m, Subsystem traced_out);
ComplexMatrix2 partial_trace(const DensityMatrix& rho, Subsystem traced_out);

/// Transposes the indices of atom A: (a b | a' b') -> (a' b | a b').
ComplexMatrix4 partial_transpose_A(const ComplexMatrix4& m);
ComplexMatrix4 partial_transpose_A(const DensityMatrix& rho);

/// Largest absolute entry of M - M^dagger.
double hermiticity_defect(const ComplexMatrix4& m);
double max_abs_diff(const ComplexMatrix4& a, const ComplexMatrix4& b);

/// Eigenvalues in descending order. Throws NotHermitian if M deviates from
/// M^dagger by more than `hermiticity_tol` in any entry.
Spectrum4 hermitian_eigenvalues(const ComplexMatrix4& m,
                                double hermiticity_tol = kStructuralTol);
Spectrum2 hermitian_eigenvalues(const ComplexMatrix2& m,
                                double hermiticity_tol = kStructuralTol);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues inside
/// [-psd_tol, 0) are clamped to zero; anything lower throws NotPSD.
ComplexMatrix4 sqrt_psd(const ComplexMatrix4& m, double psd_tol = kStructuralTol);

/// Pauli matrices and ladder operators in the single-atom basis.
namespace pauli {
ComplexMatrix2 identity();
ComplexMatrix2 sigma1();
ComplexMatrix2 sigma2();
ComplexMatrix2 sigma3();
/// |1><0|
ComplexMatrix2 raising();
/// |0><1|
ComplexMatrix2 lowering();
}  // namespace pauli

/// Projector |v><v| for a unit vector.
ComplexMatrix4 projector(const Eigen::Vector4cd& v);

}  // namespace dicke
