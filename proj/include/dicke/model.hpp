#pragma once

// Collective spontaneous emission of two two-level atoms: the dissipative
// generator and a fixed-step RK4 integrator for d(rho)/dt = L(rho).

#include <span>
#include <vector>

#include "dicke/kernels.hpp"
#include "dicke/qmat.hpp"

namespace dicke {

/// Single-atom emission rate gamma0 and exchange ratio g; gamma = g * gamma0.
class ModelParams {
 public:
  /// Throws InvalidParameter unless gamma0 > 0 and 0 <= g <= 1.
  ModelParams(double gamma0, double g);

  double gamma0() const { return gamma0_; }
  double g() const { return g_; }
  double gamma() const { return g_ * gamma0_; }

 private:
  double gamma0_;
  double g_;
};

struct IntegratorConfig {
  /// RK4 step in time units. Steps are shortened so they tile each interval.
  double step = 1e-3;
};

/// L(rho) assembled operator by operator from the two dissipators with rates
/// gamma0/2 (independent emission) and gamma/2 (photon exchange).
ComplexMatrix4 lindblad_rhs(const ComplexMatrix4& rho, const ModelParams& params);
ComplexMatrix4 lindblad_rhs(const DensityMatrix& rho, const ModelParams& params);

/// Matrix of the generator on vec(rho) (row-major vectorization), obtained by
/// applying lindblad_rhs to the 16 matrix units.
kernels::Superoperator liouvillian(const ModelParams& params);

kernels::SplitState to_split(const ComplexMatrix4& m);
ComplexMatrix4 from_split(const kernels::SplitState& s);

/// rho(t) from rho0 by fixed-step RK4. t = 0 returns rho0 unchanged. The
/// result is validated with a 1e-7 band; a positivity breach beyond 1e-6
/// raises StepTooLarge.
DensityMatrix integrate(const DensityMatrix& rho0, const ModelParams& params, double t,
                        const IntegratorConfig& config = {});

/// States at every point of an ascending grid starting at 0, from a single
/// integrator pass.
std::vector<DensityMatrix> evolve_series(const DensityMatrix& rho0, const ModelParams& params,
                                         std::span<const double> t_grid,
                                         const IntegratorConfig& config = {});

/// Uniform grid of `samples` points on [0, t_max].
std::vector<double> uniform_grid(double t_max, std::size_t samples);

}  // namespace dicke
