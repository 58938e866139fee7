#include "dicke/kernels.hpp"

namespace dicke::kernels::scalar {

void apply(const Superoperator& op, const SplitState& in, SplitState& out) {
  SplitState acc;
  for (int k = 0; k < kDim; ++k) {
    const double xr = in.re[k];
    const double xi = in.im[k];
    const double* col = op.coeff.data() + k * kDim;
    for (int i = 0; i < kDim; ++i) {
      acc.re[i] += col[i] * xr;
      acc.im[i] += col[i] * xi;
    }
  }
  out = acc;
}

namespace {

// y = x + a * k
void axpy(const SplitState& x, double a, const SplitState& k, SplitState& y) {
  for (int i = 0; i < kDim; ++i) {
    y.re[i] = x.re[i] + a * k.re[i];
    y.im[i] = x.im[i] + a * k.im[i];
  }
}

}  // namespace

void rk4(const Superoperator& op, SplitState& x, double h, std::size_t steps) {
  SplitState k1, k2, k3, k4, tmp;
  const double half = 0.5 * h;
  const double sixth = h / 6.0;
  for (std::size_t s = 0; s < steps; ++s) {
    apply(op, x, k1);
    axpy(x, half, k1, tmp);
    apply(op, tmp, k2);
    axpy(x, half, k2, tmp);
    apply(op, tmp, k3);
    axpy(x, h, k3, tmp);
    apply(op, tmp, k4);
    for (int i = 0; i < kDim; ++i) {
      x.re[i] += sixth * (k1.re[i] + 2.0 * k2.re[i] + 2.0 * k3.re[i] + k4.re[i]);
      x.im[i] += sixth * (k1.im[i] + 2.0 * k2.im[i] + 2.0 * k3.im[i] + k4.im[i]);
    }
  }
}

}  // namespace dicke::kernels::scalar
