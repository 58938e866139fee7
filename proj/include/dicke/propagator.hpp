#pragma once

// Closed-form solutions of the master equation: the full propagator for
// coincident atoms (g = 1), its stationary-state map, and the two special
// initial states that are solvable for g < 1.

#include "dicke/qmat.hpp"

namespace dicke {

/// Parameters of the g = 1 stationary state reached from a given rho0:
///
///   rho_as = [[0, 0,       0,      0      ],
///             [0, a,      -a,      b      ],
///             [0, -a,      a,     -b      ],
///             [0, conj b, -conj b, 1 - 2a ]]
struct AsymptoticParams {
  double alpha = 0.0;
  Complex beta{};
};

/// rho(t) for g = 1 from the exact matrix-element formulas, including the
/// secular gamma0*t*exp(-2*gamma0*t) terms. Lower triangle by hermiticity.
DensityMatrix evolve_g1(const DensityMatrix& rho0, double gamma0, double t);

/// alpha = (rho22 + rho33 - 2 Re rho23) / 4,  beta = (rho24 - rho34) / 2.
AsymptoticParams asymptotic_params(const DensityMatrix& rho0);

DensityMatrix asymptotic_state(const AsymptoticParams& p);
DensityMatrix asymptotic_state(const DensityMatrix& rho0);

/// One atom excited, the other in the ground state, arbitrary 0 <= gamma < gamma0.
/// Weight starts at e2 = |1>|0>; the A<->B mirror image has the same
/// concurrence.
DensityMatrix evolve_excited_ground_general(double gamma0, double gamma, double t);

enum class BellSign { Plus, Minus };

/// Evolution of Psi+ (superradiant, rate gamma0 + gamma) or Psi- (subradiant,
/// rate gamma0 - gamma) for 0 <= gamma <= gamma0.
DensityMatrix evolve_bell_general(BellSign sign, double gamma0, double gamma, double t);

/// Time at which exp(-gamma0 t) sinh(gamma t) peaks, for 0 < gamma < gamma0.
/// Throws DegenerateRates when gamma >= gamma0.
double t_gamma(double gamma0, double gamma);

/// Peak value of exp(-gamma0 t) sinh(gamma t); same domain as t_gamma.
double c_max(double gamma0, double gamma);

}  // namespace dicke
