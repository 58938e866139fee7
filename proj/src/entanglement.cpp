#include "dicke/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dicke/states.hpp"

namespace dicke {

namespace {

constexpr double kClampBand = 1e-10;
constexpr double kImagBand = 1e-9;
constexpr double kRangeSlack = 1e-9;

const ComplexMatrix4& sigma_yy() {
  static const ComplexMatrix4 m = kron(pauli::sigma2(), pauli::sigma2());
  return m;
}

double clamp_unit(double v) {
  if (v < -kRangeSlack || v > 1.0 + kRangeSlack || !std::isfinite(v)) {
    std::ostringstream os;
    os << "concurrence " << v << " outside [0, 1]";
    throw InvalidParameter(os.str());
  }
  return std::clamp(v, 0.0, 1.0);
}

}  // namespace

ConcurrenceValue::ConcurrenceValue(double v) : v_(clamp_unit(v)) {}

ComplexMatrix4 spin_flip(const ComplexMatrix4& rho) {
  return sigma_yy() * rho.conjugate() * sigma_yy();
}

ComplexMatrix4 spin_flip(const DensityMatrix& rho) { return spin_flip(rho.matrix()); }

static void check_spin_flip_product(const DensityMatrix& rho) {
  const ComplexMatrix4 r = rho.matrix() * spin_flip(rho);
  Eigen::ComplexEigenSolver<ComplexMatrix4> es(r, false);
  if (es.info() != Eigen::Success) throw InternalConsistency("eigen-decomposition failed");
  for (int i = 0; i < 4; ++i) {
    const Complex ev = es.eigenvalues()(i);
    if (std::abs(ev.imag()) > kImagBand) {
      std::ostringstream os;
      os << "rho * spin_flip(rho) has eigenvalue " << ev << " with a non-negligible imaginary part";
      throw InternalConsistency(os.str());
    }
    if (ev.real() < -kClampBand) {
      std::ostringstream os;
      os << "rho * spin_flip(rho) has negative eigenvalue " << ev.real();
      throw InternalConsistency(os.str());
    }
  }
}

ConcurrenceValue concurrence(const DensityMatrix& rho) {
  check_spin_flip_product(rho);

  // lambda_i are the singular values of tau = W^T (sigma2 x sigma2) W with rho = W W^dagger;
  // their squares are the eigenvalues of rho * spin_flip(rho).
  Eigen::SelfAdjointEigenSolver<ComplexMatrix4> es(rho.matrix());
  if (es.info() != Eigen::Success) throw InternalConsistency("eigen-decomposition failed");
  ComplexMatrix4 w = es.eigenvectors();
  for (int i = 0; i < 4; ++i) w.col(i) *= std::sqrt(std::max(0.0, es.eigenvalues()(i)));
  const ComplexMatrix4 tau = w.transpose() * sigma_yy() * w;
  const Eigen::Vector4d lambda = Eigen::JacobiSVD<ComplexMatrix4>(tau).singularValues();
  return ConcurrenceValue(std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]));
}

ConcurrenceValue concurrence_via_sqrt(const DensityMatrix& rho) {
  const ComplexMatrix4 root = sqrt_psd(rho.matrix());
  ComplexMatrix4 inner = root * spin_flip(rho) * root;
  inner = 0.5 * (inner + inner.adjoint());
  const ComplexMatrix4 hat = sqrt_psd(inner);
  const Spectrum4 ev = hermitian_eigenvalues(hat);
  const double trace = hat.trace().real();
  return ConcurrenceValue(std::max(0.0, 2.0 * ev[0] - trace));
}

ConcurrenceValue asymptotic_concurrence(const DensityMatrix& rho0) {
  const double s = rho0.at1(2, 2).real() + rho0.at1(3, 3).real() - 2.0 * rho0.at1(2, 3).real();
  return ConcurrenceValue(0.5 * std::abs(s));
}

ConcurrenceValue product_asymptotic_concurrence(const QubitVector& psi, const QubitVector& phi) {
  return ConcurrenceValue(0.5 * (1.0 - std::norm(inner(psi, phi))));
}

ConcurrenceValue mes_asymptotic_concurrence(double a, double theta1, double theta2) {
  if (!(a >= 0.0 && a <= 1.0)) throw InvalidParameter("a must lie in [0, 1]");
  return ConcurrenceValue(0.5 * (1.0 - a * a) * (1.0 - std::cos(theta1 - theta2)));
}

double min_partial_transpose_eigenvalue(const DensityMatrix& rho) {
  return hermitian_eigenvalues(partial_transpose_A(rho))[3];
}

bool is_ppt_separable(const DensityMatrix& rho, double tol) {
  return min_partial_transpose_eigenvalue(rho) >= -tol;
}

double entropy_of_entanglement(const DensityMatrix& rho) {
  const double p = purity(rho);
  if (p < 1.0 - kStructuralTol) {
    std::ostringstream os;
    os << "entropy of entanglement needs a pure state (tr rho^2 = " << p << ")";
    throw NotPure(os.str());
  }
  const Spectrum2 ev = hermitian_eigenvalues(partial_trace(rho, Subsystem::A));
  double s = 0.0;
  for (double x : ev)
    if (x > 0.0) s -= x * std::log2(x);
  return std::max(0.0, s);
}

}  // namespace dicke
