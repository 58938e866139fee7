#include "dicke/random.hpp"

#include <cmath>

namespace dicke {

Complex StateSampler::gaussian() {
  const double re = normal_(rng_);
  const double im = normal_(rng_);
  return {re, im};
}

DensityMatrix StateSampler::mixed() {
  ComplexMatrix4 g;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) g(r, c) = gaussian();
  ComplexMatrix4 m = g * g.adjoint();
  m /= m.trace().real();
  m = 0.5 * (m + m.adjoint());
  return validate_state(m);
}

DensityMatrix StateSampler::pure() {
  Eigen::Vector4cd v;
  for (int i = 0; i < 4; ++i) v(i) = gaussian();
  v.normalize();
  return validate_state(projector(v));
}

QubitVector StateSampler::qubit() {
  Complex a = gaussian();
  Complex b = gaussian();
  return QubitVector::normalized(a, b);
}

ComplexMatrix2 StateSampler::unitary2() {
  ComplexMatrix2 g;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) g(r, c) = gaussian();
  Eigen::HouseholderQR<ComplexMatrix2> qr(g);
  ComplexMatrix2 q = qr.householderQ();
  const ComplexMatrix2 r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phases of R's diagonal so Q is Haar distributed.
  for (int i = 0; i < 2; ++i) {
    const Complex d = r(i, i);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(i) *= d / mag;
  }
  return q;
}

double StateSampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

std::array<double, 4> StateSampler::simplex4() {
  std::exponential_distribution<double> expo(1.0);
  std::array<double, 4> p{};
  double sum = 0.0;
  for (auto& x : p) sum += (x = expo(rng_));
  for (auto& x : p) x /= sum;
  // Push the residual rounding onto the largest weight.
  double s = 0.0;
  std::size_t big = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    s += p[i];
    if (p[i] > p[big]) big = i;
  }
  p[big] += 1.0 - s;
  return p;
}

}  // namespace dicke
