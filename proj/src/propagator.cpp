#include "dicke/propagator.hpp"

#include <cmath>
#include <sstream>

namespace dicke {

namespace {

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidParameter("time must be non-negative");
}

void require_gamma0(double gamma0) {
  if (!(gamma0 > 0.0) || !std::isfinite(gamma0)) throw InvalidParameter("gamma0 must be positive");
}

void require_rates(double gamma0, double gamma) {
  require_gamma0(gamma0);
  if (!(gamma >= 0.0 && gamma <= gamma0)) throw InvalidParameter("gamma must lie in [0, gamma0]");
}

void mirror_lower(ComplexMatrix4& m) {
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < j; ++k) m(j, k) = std::conj(m(k, j));
}

void require_open_interval(double gamma0, double gamma) {
  require_gamma0(gamma0);
  if (gamma >= gamma0) {
    std::ostringstream os;
    os << "gamma (" << gamma << ") must be below gamma0 (" << gamma0 << ")";
    throw DegenerateRates(os.str());
  }
  if (!(gamma > 0.0)) throw InvalidParameter("gamma must be positive");
}

}  // namespace

DensityMatrix evolve_g1(const DensityMatrix& rho0, double gamma0, double t) {
  require_gamma0(gamma0);
  require_time(t);
  auto r = [&](int j, int k) { return rho0.at1(j, k); };

  const double x = gamma0 * t;
  const double e2 = std::exp(-2.0 * x);
  const double e1 = std::exp(-x);
  const double secular = x * e2;

  const double re23 = r(2, 3).real();
  const Complex sym = r(2, 2) + r(3, 3) + 2.0 * re23;   // rho22 + rho33 + 2 Re rho23
  const Complex anti = r(2, 2) + r(3, 3) - 2.0 * re23;  // rho22 + rho33 - 2 Re rho23
  const Complex s12 = r(1, 2) + r(1, 3);
  const Complex mid24 = 2.0 * r(1, 2) + 2.0 * r(1, 3) + r(2, 4) + r(3, 4);
  const Complex d24 = r(2, 4) - r(3, 4);

  ComplexMatrix4 m;
  m(0, 0) = e2 * r(1, 1);
  m(0, 1) = 0.5 * (e2 * s12 + e1 * (r(1, 2) - r(1, 3)));
  m(0, 2) = 0.5 * (e2 * s12 + e1 * (r(1, 3) - r(1, 2)));
  m(0, 3) = e1 * r(1, 4);
  m(1, 1) = 0.25 * e2 * sym + 0.5 * e1 * (r(2, 2) - r(3, 3)) + secular * r(1, 1) + 0.25 * anti;
  m(1, 2) = 0.25 * e2 * sym + 0.5 * e1 * (r(2, 3) - r(3, 2)) + secular * r(1, 1) - 0.25 * anti;
  m(1, 3) = -e2 * s12 + 0.5 * e1 * mid24 + 0.5 * d24;
  m(2, 2) = 0.25 * e2 * sym - 0.5 * e1 * (r(2, 2) - r(3, 3)) + secular * r(1, 1) + 0.25 * anti;
  m(2, 3) = -e2 * s12 + 0.5 * e1 * mid24 - 0.5 * d24;
  m(3, 3) = -0.5 * e2 * (1.0 + r(1, 1) - r(4, 4) + 2.0 * re23) - 2.0 * secular * r(1, 1) +
            0.5 * (1.0 + r(1, 1) + r(4, 4) + 2.0 * re23);
  // The diagonal is real; drop the rounding residue of the input's imaginary parts.
  for (int d = 0; d < 4; ++d) m(d, d) = m(d, d).real();
  mirror_lower(m);
  return validate_state(m);
}

AsymptoticParams asymptotic_params(const DensityMatrix& rho0) {
  AsymptoticParams p;
  p.alpha = 0.25 * (rho0.at1(2, 2).real() + rho0.at1(3, 3).real() - 2.0 * rho0.at1(2, 3).real());
  p.beta = 0.5 * (rho0.at1(2, 4) - rho0.at1(3, 4));
  return p;
}

DensityMatrix asymptotic_state(const AsymptoticParams& p) {
  const double a = p.alpha;
  const Complex b = p.beta;
  ComplexMatrix4 m = ComplexMatrix4::Zero();
  m(1, 1) = a;
  m(1, 2) = -a;
  m(2, 1) = -a;
  m(2, 2) = a;
  m(1, 3) = b;
  m(2, 3) = -b;
  m(3, 1) = std::conj(b);
  m(3, 2) = -std::conj(b);
  m(3, 3) = 1.0 - 2.0 * a;
  return validate_state(m);
}

DensityMatrix asymptotic_state(const DensityMatrix& rho0) {
  return asymptotic_state(asymptotic_params(rho0));
}

DensityMatrix evolve_excited_ground_general(double gamma0, double gamma, double t) {
  require_gamma0(gamma0);
  if (!(gamma >= 0.0 && gamma < gamma0))
    throw InvalidParameter("excited/ground closed form needs 0 <= gamma < gamma0");
  require_time(t);
  const double decay = std::exp(-gamma0 * t);
  const double ch = std::cosh(gamma * t);
  const double sh = std::sinh(gamma * t);
  ComplexMatrix4 m = ComplexMatrix4::Zero();
  m(1, 1) = 0.5 * decay * (ch + 1.0);
  m(2, 2) = 0.5 * decay * (ch - 1.0);
  m(1, 2) = -0.5 * decay * sh;
  m(2, 1) = m(1, 2);
  m(3, 3) = 1.0 - decay * ch;
  return validate_state(m);
}

DensityMatrix evolve_bell_general(BellSign sign, double gamma0, double gamma, double t) {
  require_rates(gamma0, gamma);
  require_time(t);
  const double rate = sign == BellSign::Plus ? gamma0 + gamma : gamma0 - gamma;
  const double w = std::exp(-rate * t);
  // Symmetric combination keeps a positive coherence, antisymmetric a negative one.
  const double coherence = sign == BellSign::Plus ? 0.5 * w : -0.5 * w;
  ComplexMatrix4 m = ComplexMatrix4::Zero();
  m(1, 1) = 0.5 * w;
  m(2, 2) = 0.5 * w;
  m(1, 2) = coherence;
  m(2, 1) = coherence;
  m(3, 3) = 1.0 - w;
  return validate_state(m);
}

double t_gamma(double gamma0, double gamma) {
  require_open_interval(gamma0, gamma);
  return std::log((gamma0 + gamma) / (gamma0 - gamma)) / (2.0 * gamma);
}

double c_max(double gamma0, double gamma) {
  require_open_interval(gamma0, gamma);
  const double ratio = (gamma0 + gamma) / (gamma0 - gamma);
  return gamma / (gamma0 - gamma) * std::pow(ratio, -(gamma0 + gamma) / (2.0 * gamma));
}

}  // namespace dicke
