#pragma once

// Operations behind the command-line front end. They return data; the
// executable in tools/ only parses flags, formats, and maps errors to exit
// codes.

#include <optional>
#include <string>

#include "dicke/io.hpp"
#include "dicke/propagator.hpp"

namespace dicke {

enum class EvolveMethod { Auto, ClosedForm, Rk4 };

std::optional<EvolveMethod> parse_method(const std::string& name);
std::string to_string(EvolveMethod m);

struct EvolveOptions {
  double gamma0 = 1.0;
  double g = 1.0;
  /// Defaults to 5 / gamma0.
  std::optional<double> t_max;
  std::size_t samples = 501;
  double dt = 1e-3;
  EvolveMethod method = EvolveMethod::Auto;
  bool include_rho = false;
};

/// Initial states with a closed-form trajectory for g < 1.
enum class SpecialCase { None, ExcitedGround, GroundExcited, PsiPlus, PsiMinus };

SpecialCase classify_special_case(const DensityMatrix& rho);

/// Concurrence trajectory. closed-form needs g = 1 or a special-case state and
/// otherwise throws UnsupportedClosedForm; auto prefers closed-form and falls
/// back to RK4.
TimeSeries cmd_evolve(const StateFile& state, const EvolveOptions& options);

struct AsymptoticReport {
  double g = 1.0;
  /// g < 1 relaxes every state to |00>; alpha and beta are only meaningful for g = 1.
  bool unique = false;
  AsymptoticParams params;
  DensityMatrix rho_as;
  double concurrence = 0.0;
  /// Closed-form 2|alpha| (g = 1 only).
  double concurrence_formula = 0.0;
};

AsymptoticReport cmd_asymptotic(const StateFile& state, double g = 1.0);

struct ConcurrenceReport {
  double concurrence = 0.0;
  double min_pt_eigenvalue = 0.0;
  bool ppt_separable = false;
  double purity = 0.0;
  std::optional<double> entropy;
};

ConcurrenceReport cmd_concurrence(const StateFile& state);

enum class Figure { Fig1, Fig2, Fig3 };

std::optional<Figure> parse_figure(const std::string& name);

struct FigureOptions {
  double gamma0 = 1.0;
  /// fig3 exchange ratio.
  double g = 0.99;
  std::optional<double> t_max;
  std::size_t samples = 501;
};

/// fig1: t, C_phi_plus, C_psi_plus at g = 1.
/// fig2: delta, purity, C_mems, C_asymptotic over delta in [0, 1].
/// fig3: t, C_plus, C_minus at the requested g.
Table cmd_figure(Figure which, const FigureOptions& options);

struct PeakReport {
  double gamma0 = 1.0;
  double g = 0.0;
  double t_gamma = 0.0;
  double c_max = 0.0;
  double grid_t = 0.0;
  double grid_c = 0.0;
  double grid_step = 0.0;
  double residual_t = 0.0;
  double residual_c = 0.0;
};

/// t_gamma and C_max from their closed forms, verified by brute-force search
/// of exp(-gamma0 t) sinh(gamma t) over [0, max(20, 4 t_gamma)] / gamma0.
/// Throws DegenerateRates for g >= 1.
PeakReport cmd_peak(double gamma0, double g, double grid_step = 1e-4);

}  // namespace dicke
