#include <immintrin.h>

#include "dicke/kernels.hpp"

namespace dicke::kernels::avx2 {

namespace {

// Four ymm accumulators cover one 16-element plane.
struct Plane {
  __m256d v[4];
};

inline Plane load(const std::array<double, kDim>& a) {
  return {{_mm256_load_pd(&a[0]), _mm256_load_pd(&a[4]), _mm256_load_pd(&a[8]),
           _mm256_load_pd(&a[12])}};
}

inline void store(const Plane& p, std::array<double, kDim>& a) {
  _mm256_store_pd(&a[0], p.v[0]);
  _mm256_store_pd(&a[4], p.v[1]);
  _mm256_store_pd(&a[8], p.v[2]);
  _mm256_store_pd(&a[12], p.v[3]);
}

// Column-broadcast matvec on both planes at once.
inline void matvec(const Superoperator& op, const double* xr, const double* xi, Plane& re,
                   Plane& im) {
  for (int b = 0; b < 4; ++b) {
    re.v[b] = _mm256_setzero_pd();
    im.v[b] = _mm256_setzero_pd();
  }
  const double* col = op.coeff.data();
  for (int k = 0; k < kDim; ++k, col += kDim) {
    const __m256d br = _mm256_broadcast_sd(xr + k);
    const __m256d bi = _mm256_broadcast_sd(xi + k);
    for (int b = 0; b < 4; ++b) {
      const __m256d c = _mm256_load_pd(col + 4 * b);
      re.v[b] = _mm256_fmadd_pd(c, br, re.v[b]);
      im.v[b] = _mm256_fmadd_pd(c, bi, im.v[b]);
    }
  }
}

// y = x + a * k
inline void axpy(const Plane& x, __m256d a, const Plane& k, Plane& y) {
  for (int b = 0; b < 4; ++b) y.v[b] = _mm256_fmadd_pd(a, k.v[b], x.v[b]);
}

}  // namespace

void apply(const Superoperator& op, const SplitState& in, SplitState& out) {
  Plane re, im;
  matvec(op, in.re.data(), in.im.data(), re, im);
  store(re, out.re);
  store(im, out.im);
}

void rk4(const Superoperator& op, SplitState& x, double h, std::size_t steps) {
  const __m256d half = _mm256_set1_pd(0.5 * h);
  const __m256d full = _mm256_set1_pd(h);
  const __m256d sixth = _mm256_set1_pd(h / 6.0);
  const __m256d two = _mm256_set1_pd(2.0);

  Plane xr = load(x.re), xi = load(x.im);
  Plane k1r, k1i, k2r, k2i, k3r, k3i, k4r, k4i, tr, ti;
  alignas(32) std::array<double, kDim> sr, si;

  auto eval = [&](const Plane& pr, const Plane& pi, Plane& outr, Plane& outi) {
    store(pr, sr);
    store(pi, si);
    matvec(op, sr.data(), si.data(), outr, outi);
  };

  for (std::size_t s = 0; s < steps; ++s) {
    eval(xr, xi, k1r, k1i);
    axpy(xr, half, k1r, tr);
    axpy(xi, half, k1i, ti);
    eval(tr, ti, k2r, k2i);
    axpy(xr, half, k2r, tr);
    axpy(xi, half, k2i, ti);
    eval(tr, ti, k3r, k3i);
    axpy(xr, full, k3r, tr);
    axpy(xi, full, k3i, ti);
    eval(tr, ti, k4r, k4i);
    for (int b = 0; b < 4; ++b) {
      __m256d sum_r = _mm256_add_pd(k1r.v[b], k4r.v[b]);
      sum_r = _mm256_fmadd_pd(two, _mm256_add_pd(k2r.v[b], k3r.v[b]), sum_r);
      xr.v[b] = _mm256_fmadd_pd(sixth, sum_r, xr.v[b]);
      __m256d sum_i = _mm256_add_pd(k1i.v[b], k4i.v[b]);
      sum_i = _mm256_fmadd_pd(two, _mm256_add_pd(k2i.v[b], k3i.v[b]), sum_i);
      xi.v[b] = _mm256_fmadd_pd(sixth, sum_i, xi.v[b]);
    }
  }
  store(xr, x.re);
  store(xi, x.im);
}

}  // namespace dicke::kernels::avx2
