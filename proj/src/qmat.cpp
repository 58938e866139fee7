#include "dicke/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dicke {

const char* to_string(StateViolation v) {
  switch (v) {
    case StateViolation::Hermiticity:
      return "hermiticity";
    case StateViolation::Trace:
      return "trace";
    case StateViolation::Positivity:
      return "positivity";
  }
  return "unknown";
}

namespace {

std::string describe(const std::vector<InvalidState::Item>& items) {
  std::ostringstream os;
  os << "invalid density matrix:";
  for (const auto& it : items) os << ' ' << to_string(it.kind) << "(" << it.magnitude << ")";
  return os.str();
}

}  // namespace

InvalidState::InvalidState(std::vector<Item> items)
    : Error(describe(items)), items_(std::move(items)) {}

bool InvalidState::has(StateViolation kind) const {
  return std::any_of(items_.begin(), items_.end(),
                     [kind](const Item& it) { return it.kind == kind; });
}

QubitVector::QubitVector(Complex excited, Complex ground) : v_(excited, ground) {
  const double n = std::norm(excited) + std::norm(ground);
  if (!(std::abs(n - 1.0) <= kNormTol)) {
    std::ostringstream os;
    os << "qubit vector has squared norm " << n;
    throw NotNormalized(os.str());
  }
}

QubitVector QubitVector::normalized(Complex excited, Complex ground) {
  const double n = std::sqrt(std::norm(excited) + std::norm(ground));
  if (!(n > 0.0) || !std::isfinite(n)) throw NotNormalized("cannot normalize a zero qubit vector");
  return {excited / n, ground / n};
}

Complex inner(const QubitVector& psi, const QubitVector& phi) {
  return psi.vector().dot(phi.vector());  // Eigen's dot conjugates the left side
}

double hermiticity_defect(const ComplexMatrix4& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix4& a, const ComplexMatrix4& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

DensityMatrix validate_state(const ComplexMatrix4& m, const Tolerances& tol) {
  std::vector<InvalidState::Item> bad;
  if (!m.allFinite()) {
    bad.push_back({StateViolation::Hermiticity, std::numeric_limits<double>::infinity()});
    throw InvalidState(std::move(bad));
  }
  const double herm = hermiticity_defect(m);
  if (herm > tol.hermiticity) bad.push_back({StateViolation::Hermiticity, herm});

  const double trace_err = std::abs(m.trace() - Complex(1.0, 0.0));
  if (trace_err > tol.trace) bad.push_back({StateViolation::Trace, trace_err});

  // Positivity is judged on the Hermitian part so that a hermiticity defect
  // is not double-reported as a spectral artefact.
  const ComplexMatrix4 h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix4> es(h, Eigen::EigenvaluesOnly);
  const double min_ev = es.eigenvalues().minCoeff();
  if (min_ev < -tol.positivity) bad.push_back({StateViolation::Positivity, -min_ev});

  if (!bad.empty()) throw InvalidState(std::move(bad));
  return DensityMatrix(m);
}

ComplexMatrix4 kron(const ComplexMatrix2& a, const ComplexMatrix2& b) {
  ComplexMatrix4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Eigen::Vector4cd kron(const Eigen::Vector2cd& a, const Eigen::Vector2cd& b) {
  Eigen::Vector4cd out;
  out << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
  return out;
}

ComplexMatrix2 partial_trace(const ComplexMatrix4& m, Subsystem traced_out) {
  ComplexMatrix2 r = ComplexMatrix2::Zero();
  // Composite index = 2*a + b.
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int s = 0; s < 2; ++s) {
        if (traced_out == Subsystem::A)
          r(x, y) += m(2 * s + x, 2 * s + y);
        else
          r(x, y) += m(2 * x + s, 2 * y + s);
      }
  return r;
}

ComplexMatrix2 partial_trace(const DensityMatrix& rho, Subsystem traced_out) {
  return partial_trace(rho.matrix(), traced_out);
}

ComplexMatrix4 partial_transpose_A(const ComplexMatrix4& m) {
  ComplexMatrix4 out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int ap = 0; ap < 2; ++ap)
        for (int bp = 0; bp < 2; ++bp) out(2 * a + b, 2 * ap + bp) = m(2 * ap + b, 2 * a + bp);
  return out;
}

ComplexMatrix4 partial_transpose_A(const DensityMatrix& rho) {
  return partial_transpose_A(rho.matrix());
}

namespace {

template <typename Matrix>
void require_hermitian(const Matrix& m, double tol) {
  const double d = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (!(d <= tol)) {
    std::ostringstream os;
    os << "matrix is not Hermitian (defect " << d << ")";
    throw NotHermitian(os.str());
  }
}

}  // namespace

Spectrum4 hermitian_eigenvalues(const ComplexMatrix4& m, double hermiticity_tol) {
  require_hermitian(m, hermiticity_tol);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix4> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  Spectrum4 out;
  for (int i = 0; i < 4; ++i) out[i] = es.eigenvalues()(3 - i);  // solver sorts ascending
  return out;
}

Spectrum2 hermitian_eigenvalues(const ComplexMatrix2& m, double hermiticity_tol) {
  require_hermitian(m, hermiticity_tol);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix2> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  return {es.eigenvalues()(1), es.eigenvalues()(0)};
}

ComplexMatrix4 sqrt_psd(const ComplexMatrix4& m, double psd_tol) {
  require_hermitian(m, psd_tol);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix4> es(0.5 * (m + m.adjoint()));
  Eigen::Vector4d ev = es.eigenvalues();
  if (ev.minCoeff() < -psd_tol) {
    std::ostringstream os;
    os << "matrix is not positive semidefinite (min eigenvalue " << ev.minCoeff() << ")";
    throw NotPSD(os.str());
  }
  ev = ev.cwiseMax(0.0).cwiseSqrt();
  const auto& v = es.eigenvectors();
  return v * ev.cast<Complex>().asDiagonal() * v.adjoint();
}

namespace pauli {

ComplexMatrix2 identity() { return ComplexMatrix2::Identity(); }

ComplexMatrix2 sigma1() {
  ComplexMatrix2 s;
  s << 0.0, 1.0, 1.0, 0.0;
  return s;
}

ComplexMatrix2 sigma2() {
  const Complex i(0.0, 1.0);
  ComplexMatrix2 s;
  s << 0.0, -i, i, 0.0;
  return s;
}

ComplexMatrix2 sigma3() {
  ComplexMatrix2 s;
  s << 1.0, 0.0, 0.0, -1.0;
  return s;
}

ComplexMatrix2 raising() {
  ComplexMatrix2 s;
  s << 0.0, 1.0, 0.0, 0.0;
  return s;
}

ComplexMatrix2 lowering() {
  ComplexMatrix2 s;
  s << 0.0, 0.0, 1.0, 0.0;
  return s;
}

}  // namespace pauli

ComplexMatrix4 projector(const Eigen::Vector4cd& v) { return v * v.adjoint(); }

}  // namespace dicke
