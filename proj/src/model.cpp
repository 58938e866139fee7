#include "dicke/model.hpp"

#include <cmath>
#include <sstream>

namespace dicke {

namespace {

constexpr Tolerances kIntegratedTol{1e-7, 1e-7, 1e-7};
constexpr double kStepPositivityBand = 1e-6;

struct Ladder {
  ComplexMatrix4 plus_a, minus_a, plus_b, minus_b;
};

const Ladder& ladder() {
  static const Ladder l = [] {
    const ComplexMatrix2 id = pauli::identity();
    return Ladder{kron(pauli::raising(), id), kron(pauli::lowering(), id),
                  kron(id, pauli::raising()), kron(id, pauli::lowering())};
  }();
  return l;
}

std::size_t steps_for(double dt, double step) {
  if (dt <= 0.0) return 0;
  const double n = std::ceil(dt / step - 1e-9);
  return static_cast<std::size_t>(std::max(1.0, n));
}

void check_step(const kernels::SplitState& x, double t) {
  // Diagonal of a PSD matrix is non-negative; a cheap screen before the
  // full spectral check.
  for (int d = 0; d < 4; ++d) {
    const double v = x.re[5 * d];
    if (!std::isfinite(v) || v < -kStepPositivityBand) {
      std::ostringstream os;
      os << "integrator left the state space at t=" << t << " (diagonal entry " << v
         << "); reduce the step";
      throw StepTooLarge(os.str());
    }
  }
}

DensityMatrix finalize(const kernels::SplitState& x, double t) {
  check_step(x, t);
  const ComplexMatrix4 m = from_split(x);
  try {
    return validate_state(m, kIntegratedTol);
  } catch (const InvalidState& e) {
    for (const auto& item : e.violations()) {
      if (item.kind == StateViolation::Positivity && item.magnitude > kStepPositivityBand) {
        std::ostringstream os;
        os << "integrated state at t=" << t << " has eigenvalue " << -item.magnitude
           << "; reduce the step";
        throw StepTooLarge(os.str());
      }
    }
    throw;
  }
}

void require_step(const IntegratorConfig& config) {
  if (!(config.step > 0.0) || !std::isfinite(config.step))
    throw InvalidParameter("integrator step must be positive");
}

}  // namespace

ModelParams::ModelParams(double gamma0, double g) : gamma0_(gamma0), g_(g) {
  if (!(gamma0 > 0.0) || !std::isfinite(gamma0))
    throw InvalidParameter("gamma0 must be positive and finite");
  if (!(g >= 0.0 && g <= 1.0)) throw InvalidParameter("g must lie in [0, 1]");
}

ComplexMatrix4 lindblad_rhs(const ComplexMatrix4& rho, const ModelParams& params) {
  const auto& [pa, ma, pb, mb] = ladder();

  const ComplexMatrix4 n_own = pa * ma + pb * mb;
  const ComplexMatrix4 own =
      2.0 * ma * rho * pa + 2.0 * mb * rho * pb - n_own * rho - rho * n_own;

  const ComplexMatrix4 n_cross = pa * mb + pb * ma;
  const ComplexMatrix4 cross =
      2.0 * ma * rho * pb + 2.0 * mb * rho * pa - n_cross * rho - rho * n_cross;

  return 0.5 * params.gamma0() * own + 0.5 * params.gamma() * cross;
}

ComplexMatrix4 lindblad_rhs(const DensityMatrix& rho, const ModelParams& params) {
  return lindblad_rhs(rho.matrix(), params);
}

kernels::Superoperator liouvillian(const ModelParams& params) {
  kernels::Superoperator op;
  for (int k = 0; k < kernels::kDim; ++k) {
    ComplexMatrix4 unit = ComplexMatrix4::Zero();
    unit(k / 4, k % 4) = 1.0;
    const ComplexMatrix4 image = lindblad_rhs(unit, params);
    for (int i = 0; i < kernels::kDim; ++i) {
      const Complex c = image(i / 4, i % 4);
      if (c.imag() != 0.0) throw InternalConsistency("generator has a complex coefficient");
      op(i, k) = c.real();
    }
  }
  return op;
}

kernels::SplitState to_split(const ComplexMatrix4& m) {
  kernels::SplitState s;
  for (int i = 0; i < kernels::kDim; ++i) {
    s.re[i] = m(i / 4, i % 4).real();
    s.im[i] = m(i / 4, i % 4).imag();
  }
  return s;
}

ComplexMatrix4 from_split(const kernels::SplitState& s) {
  ComplexMatrix4 m;
  for (int i = 0; i < kernels::kDim; ++i) m(i / 4, i % 4) = Complex(s.re[i], s.im[i]);
  return m;
}

DensityMatrix integrate(const DensityMatrix& rho0, const ModelParams& params, double t,
                        const IntegratorConfig& config) {
  require_step(config);
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidParameter("time must be non-negative");
  if (t == 0.0) return rho0;

  const auto op = liouvillian(params);
  const auto& k = kernels::active();
  kernels::SplitState x = to_split(rho0.matrix());
  const std::size_t n = steps_for(t, config.step);
  k.rk4(op, x, t / static_cast<double>(n), n);
  return finalize(x, t);
}

std::vector<DensityMatrix> evolve_series(const DensityMatrix& rho0, const ModelParams& params,
                                         std::span<const double> t_grid,
                                         const IntegratorConfig& config) {
  require_step(config);
  if (t_grid.empty()) return {};
  if (t_grid.front() != 0.0) throw InvalidParameter("time grid must start at 0");
  for (std::size_t i = 1; i < t_grid.size(); ++i)
    if (!(t_grid[i] > t_grid[i - 1])) throw InvalidParameter("time grid must be strictly ascending");

  const auto op = liouvillian(params);
  const auto& k = kernels::active();
  std::vector<DensityMatrix> out;
  out.reserve(t_grid.size());
  out.push_back(rho0);

  kernels::SplitState x = to_split(rho0.matrix());
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    const double dt = t_grid[i] - t_grid[i - 1];
    const std::size_t n = steps_for(dt, config.step);
    k.rk4(op, x, dt / static_cast<double>(n), n);
    out.push_back(finalize(x, t_grid[i]));
  }
  return out;
}

std::vector<double> uniform_grid(double t_max, std::size_t samples) {
  if (samples == 0) throw InvalidParameter("need at least one sample");
  if (!(t_max >= 0.0) || !std::isfinite(t_max)) throw InvalidParameter("t_max must be non-negative");
  if (samples > 1 && t_max == 0.0) throw InvalidParameter("t_max must be positive for a multi-point grid");
  std::vector<double> grid(samples);
  for (std::size_t i = 0; i < samples; ++i)
    grid[i] = samples == 1 ? 0.0 : t_max * static_cast<double>(i) / static_cast<double>(samples - 1);
  return grid;
}

}  // namespace dicke
