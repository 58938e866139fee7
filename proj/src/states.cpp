#include "dicke/states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace dicke {

std::string_view to_string(BellState b) {
  switch (b) {
    case BellState::PhiPlus:
      return "phi+";
    case BellState::PhiMinus:
      return "phi-";
    case BellState::PsiPlus:
      return "psi+";
    case BellState::PsiMinus:
      return "psi-";
  }
  return "?";
}

Eigen::Vector4cd bell_vector(BellState which) {
  const double s = std::numbers::sqrt2 / 2.0;
  const Eigen::Vector2cd one = QubitVector::excited().vector();
  const Eigen::Vector2cd zero = QubitVector::ground().vector();
  switch (which) {
    case BellState::PhiPlus:
      return s * (kron(zero, zero) + kron(one, one));
    case BellState::PhiMinus:
      return s * (kron(zero, zero) - kron(one, one));
    case BellState::PsiPlus:
      return s * (kron(one, zero) + kron(zero, one));
    case BellState::PsiMinus:
      return s * (kron(one, zero) - kron(zero, one));
  }
  throw InvalidParameter("unknown Bell state");
}

MemsDelta::MemsDelta(double delta) : delta_(delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) throw InvalidParameter("MEMS delta must lie in [0, 1]");
}

double MemsDelta::h() const { return delta_ <= 2.0 / 3.0 ? 1.0 / 3.0 : 0.5 * delta_; }

DensityMatrix product_state(const QubitVector& psi, const QubitVector& phi) {
  return validate_state(projector(kron(psi.vector(), phi.vector())), kFactoryTolerances);
}

DensityMatrix bell(BellState which) {
  return validate_state(projector(bell_vector(which)), kFactoryTolerances);
}

DensityMatrix mes(double a, double theta1, double theta2) {
  if (!(a >= 0.0 && a <= 1.0)) throw InvalidParameter("a must lie in [0, 1]");
  const Complex i(0.0, 1.0);
  const double a2 = a * a;
  const double c = a * std::sqrt(1.0 - a2) / 2.0;
  const double b = (1.0 - a2) / 2.0;
  auto phase = [&](double x) { return std::exp(i * x); };

  ComplexMatrix4 m;
  // clang-format off
  m << a2 / 2,                      c * phase(-theta1),          c * phase(-theta2),  -a2 / 2 * phase(-(theta1 + theta2)),
       c * phase(theta1),           b,                           b * phase(theta1 - theta2), -c * phase(-theta2),
       c * phase(theta2),           b * phase(-(theta1 - theta2)), b,                   -c * phase(-theta1),
       -a2 / 2 * phase(theta1 + theta2), -c * phase(theta2),     -c * phase(theta1),   a2 / 2;
  // clang-format on
  return validate_state(m, kFactoryTolerances);
}

DensityMatrix bell_diagonal(double p1, double p2, double p3, double p4) {
  const std::array<double, 4> p{p1, p2, p3, p4};
  double sum = 0.0;
  for (double x : p) {
    if (!(x >= 0.0)) throw InvalidWeights("Bell-diagonal weights must be non-negative");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "Bell-diagonal weights sum to " << sum;
    throw InvalidWeights(os.str());
  }
  ComplexMatrix4 m = ComplexMatrix4::Zero();
  constexpr std::array kOrder{BellState::PhiPlus, BellState::PhiMinus, BellState::PsiPlus,
                              BellState::PsiMinus};
  for (int k = 0; k < 4; ++k) m += p[k] * projector(bell_vector(kOrder[k]));
  return validate_state(m, kFactoryTolerances);
}

DensityMatrix werner(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidParameter("Werner p must lie in [0, 1]");
  const ComplexMatrix4 m = (1.0 - p) * ComplexMatrix4::Identity() / 4.0 +
                           p * projector(bell_vector(BellState::PhiPlus));
  return validate_state(m, kFactoryTolerances);
}

DensityMatrix mems(const MemsDelta& delta) {
  const double h = delta.h();
  ComplexMatrix4 m = ComplexMatrix4::Zero();
  m(0, 0) = h;
  m(1, 1) = 1.0 - 2.0 * h;
  m(3, 3) = h;
  m(0, 3) = delta.delta() / 2.0;
  m(3, 0) = delta.delta() / 2.0;
  return validate_state(m, kFactoryTolerances);
}

DensityMatrix basis_state(int atom_a, int atom_b) {
  auto pick = [](int v) {
    if (v == 1) return QubitVector::excited();
    if (v == 0) return QubitVector::ground();
    throw InvalidParameter("basis labels must be 0 or 1");
  };
  return product_state(pick(atom_a), pick(atom_b));
}

double purity(const DensityMatrix& rho) {
  return (rho.matrix() * rho.matrix()).trace().real();
}

}  // namespace dicke
