#include "dicke/commands.hpp"

#include <algorithm>
#include <cmath>

#include "dicke/entanglement.hpp"
#include "dicke/model.hpp"
#include "dicke/states.hpp"

namespace dicke {

namespace {

constexpr double kMatchTol = 1e-12;

bool matches(const DensityMatrix& rho, const DensityMatrix& ref) {
  return max_abs_diff(rho.matrix(), ref.matrix()) <= kMatchTol;
}

// Exchanges atoms A and B.
DensityMatrix swap_atoms(const DensityMatrix& rho) {
  Eigen::Matrix4cd p = Eigen::Matrix4cd::Zero();
  p(0, 0) = p(1, 2) = p(2, 1) = p(3, 3) = 1.0;
  return validate_state(p * rho.matrix() * p);
}

double default_t_max(std::optional<double> t_max, double gamma0) {
  return t_max ? *t_max : 5.0 / gamma0;
}

}  // namespace

std::optional<EvolveMethod> parse_method(const std::string& name) {
  if (name == "auto") return EvolveMethod::Auto;
  if (name == "closed-form") return EvolveMethod::ClosedForm;
  if (name == "rk4") return EvolveMethod::Rk4;
  return std::nullopt;
}

std::string to_string(EvolveMethod m) {
  switch (m) {
    case EvolveMethod::Auto:
      return "auto";
    case EvolveMethod::ClosedForm:
      return "closed-form";
    case EvolveMethod::Rk4:
      return "rk4";
  }
  return "?";
}

SpecialCase classify_special_case(const DensityMatrix& rho) {
  if (matches(rho, basis_state(1, 0))) return SpecialCase::ExcitedGround;
  if (matches(rho, basis_state(0, 1))) return SpecialCase::GroundExcited;
  if (matches(rho, bell(BellState::PsiPlus))) return SpecialCase::PsiPlus;
  if (matches(rho, bell(BellState::PsiMinus))) return SpecialCase::PsiMinus;
  return SpecialCase::None;
}

TimeSeries cmd_evolve(const StateFile& state, const EvolveOptions& opt) {
  const ModelParams params(opt.gamma0, opt.g);
  const double t_max = default_t_max(opt.t_max, opt.gamma0);
  const std::vector<double> grid = uniform_grid(t_max, opt.samples);

  const SpecialCase special = classify_special_case(state.state);
  const bool closed_available = opt.g == 1.0 || special != SpecialCase::None;

  EvolveMethod method = opt.method;
  if (method == EvolveMethod::Auto)
    method = closed_available ? EvolveMethod::ClosedForm : EvolveMethod::Rk4;
  if (method == EvolveMethod::ClosedForm && !closed_available)
    throw UnsupportedClosedForm(
        "no closed form for g < 1 except one-excited/one-ground and Psi+/Psi- initial states");

  std::vector<DensityMatrix> states;
  states.reserve(grid.size());
  if (method == EvolveMethod::Rk4) {
    states = evolve_series(state.state, params, grid, IntegratorConfig{opt.dt});
  } else {
    const double gamma = params.gamma();
    for (double t : grid) {
      if (opt.g == 1.0) {
        states.push_back(evolve_g1(state.state, opt.gamma0, t));
        continue;
      }
      switch (special) {
        case SpecialCase::ExcitedGround:
          states.push_back(evolve_excited_ground_general(opt.gamma0, gamma, t));
          break;
        case SpecialCase::GroundExcited:
          states.push_back(swap_atoms(evolve_excited_ground_general(opt.gamma0, gamma, t)));
          break;
        case SpecialCase::PsiPlus:
          states.push_back(evolve_bell_general(BellSign::Plus, opt.gamma0, gamma, t));
          break;
        case SpecialCase::PsiMinus:
          states.push_back(evolve_bell_general(BellSign::Minus, opt.gamma0, gamma, t));
          break;
        case SpecialCase::None:
          throw UnsupportedClosedForm("unreachable");
      }
    }
  }

  TimeSeries ts;
  ts.scenario = state.family.empty() ? "matrix" : state.family;
  ts.gamma0 = opt.gamma0;
  ts.g = opt.g;
  ts.t_max = t_max;
  ts.samples = opt.samples;
  ts.method = to_string(method);
  ts.records.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    TimeRecord r{grid[i], concurrence(states[i]).value(), std::nullopt};
    if (opt.include_rho) r.rho = states[i].matrix();
    ts.records.push_back(std::move(r));
  }
  return ts;
}

AsymptoticReport cmd_asymptotic(const StateFile& state, double g) {
  const ModelParams params(1.0, g);  // validates g
  if (g < 1.0) {
    const DensityMatrix ground = basis_state(0, 0);
    return AsymptoticReport{.g = params.g(),
                            .unique = true,
                            .params = {},
                            .rho_as = ground,
                            .concurrence = 0.0,
                            .concurrence_formula = 0.0};
  }
  const AsymptoticParams p = asymptotic_params(state.state);
  const DensityMatrix rho_as = asymptotic_state(p);
  return AsymptoticReport{.g = 1.0,
                          .unique = false,
                          .params = p,
                          .rho_as = rho_as,
                          .concurrence = concurrence(rho_as).value(),
                          .concurrence_formula = asymptotic_concurrence(state.state).value()};
}

ConcurrenceReport cmd_concurrence(const StateFile& state) {
  const DensityMatrix& rho = state.state;
  ConcurrenceReport r;
  r.concurrence = concurrence(rho).value();
  r.min_pt_eigenvalue = min_partial_transpose_eigenvalue(rho);
  r.ppt_separable = is_ppt_separable(rho);
  r.purity = purity(rho);
  if (r.purity >= 1.0 - kStructuralTol) r.entropy = entropy_of_entanglement(rho);
  return r;
}

std::optional<Figure> parse_figure(const std::string& name) {
  if (name == "fig1") return Figure::Fig1;
  if (name == "fig2") return Figure::Fig2;
  if (name == "fig3") return Figure::Fig3;
  return std::nullopt;
}

Table cmd_figure(Figure which, const FigureOptions& opt) {
  Table table;
  const std::size_t n = opt.samples;
  if (which == Figure::Fig2) {
    table.columns = {"delta", "purity", "C_mems", "C_asymptotic"};
    for (double delta : uniform_grid(1.0, n)) {
      const DensityMatrix rho = mems(MemsDelta(delta));
      table.rows.push_back({delta, purity(rho), concurrence(rho).value(),
                            asymptotic_concurrence(rho).value()});
    }
    table.metadata = {{"figure", "fig2"}, {"samples", n}, {"x", "purity"}};
    return table;
  }

  const double t_max = default_t_max(opt.t_max, opt.gamma0);
  const std::vector<double> grid = uniform_grid(t_max, n);
  if (which == Figure::Fig1) {
    table.columns = {"t", "C_phi_plus", "C_psi_plus"};
    const DensityMatrix phi_plus = bell(BellState::PhiPlus);
    for (double t : grid) {
      const double c_phi = concurrence(evolve_g1(phi_plus, opt.gamma0, t)).value();
      const double c_psi =
          concurrence(evolve_bell_general(BellSign::Plus, opt.gamma0, opt.gamma0, t)).value();
      table.rows.push_back({t, c_phi, c_psi});
    }
    table.metadata = {{"figure", "fig1"}, {"gamma0", opt.gamma0}, {"g", 1.0},
                      {"t_max", t_max},   {"samples", n}};
    return table;
  }

  const ModelParams params(opt.gamma0, opt.g);
  table.columns = {"t", "C_plus", "C_minus"};
  for (double t : grid) {
    const double c_plus =
        concurrence(evolve_bell_general(BellSign::Plus, opt.gamma0, params.gamma(), t)).value();
    const double c_minus =
        concurrence(evolve_bell_general(BellSign::Minus, opt.gamma0, params.gamma(), t)).value();
    table.rows.push_back({t, c_plus, c_minus});
  }
  table.metadata = {{"figure", "fig3"}, {"gamma0", opt.gamma0}, {"g", opt.g},
                    {"t_max", t_max},   {"samples", n}};
  return table;
}

PeakReport cmd_peak(double gamma0, double g, double grid_step) {
  const ModelParams params(gamma0, g);
  if (g >= 1.0) throw DegenerateRates("the concurrence peak is only defined for g < 1");
  if (!(grid_step > 0.0)) throw InvalidParameter("grid step must be positive");
  const double gamma = params.gamma();

  PeakReport r;
  r.gamma0 = gamma0;
  r.g = g;
  r.t_gamma = t_gamma(gamma0, gamma);
  r.c_max = c_max(gamma0, gamma);
  r.grid_step = grid_step / gamma0;

  const double t_end = std::max(20.0 / gamma0, 4.0 * r.t_gamma);
  const auto n = static_cast<std::size_t>(std::ceil(t_end / r.grid_step));
  for (std::size_t i = 0; i <= n; ++i) {
    const double t = static_cast<double>(i) * r.grid_step;
    const double c = std::exp(-gamma0 * t) * std::sinh(gamma * t);
    if (c > r.grid_c) {
      r.grid_c = c;
      r.grid_t = t;
    }
  }
  r.residual_t = std::abs(r.grid_t - r.t_gamma);
  r.residual_c = std::abs(r.grid_c - r.c_max);
  return r;
}

}  // namespace dicke
