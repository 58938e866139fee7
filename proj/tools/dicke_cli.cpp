// dicke: collective spontaneous emission of two two-level atoms.
//
// Exit codes: 0 success, 2 invalid input state, 3 unsupported parameter
// combination. Usage errors use CLI11's own codes.

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>

#include "dicke/commands.hpp"
#include "dicke/kernels.hpp"
#include "dicke/random.hpp"

namespace {

constexpr int kExitInvalidState = 2;
constexpr int kExitUnsupported = 3;

struct StateSource {
  std::string path;
  std::string inline_json;
  std::optional<std::uint64_t> seed;

  dicke::StateFile load() const {
    if (seed) return {dicke::StateSampler(*seed).mixed(), "random"};
    if (inline_json.empty() && path.empty())
      throw dicke::ParseError("no state given (use --state FILE, --state-json or --seed)");
    try {
      return inline_json.empty() ? dicke::read_state_file(path) : dicke::parse_state(inline_json);
    } catch (const dicke::InvalidParameter& e) {
      // Out-of-range family parameters describe an invalid state.
      throw dicke::ParseError(e.what());
    }
  }
};

void add_state_options(CLI::App* cmd, StateSource& src) {
  cmd->add_option("-s,--state", src.path, "State file (JSON); '-' reads stdin");
  cmd->add_option("--state-json", src.inline_json, "State descriptor given inline");
  cmd->add_option("--seed", src.seed, "Draw a random mixed state from the seeded Gaussian ensemble");
}

dicke::OutputFormat format_of(const std::string& name) {
  auto f = dicke::parse_format(name);
  if (!f) throw dicke::InvalidParameter("unknown format '" + name + "'");
  return *f;
}

void emit(const dicke::Table& table, dicke::OutputFormat format, const std::string& output) {
  if (output.empty() || output == "-") {
    dicke::write_table(std::cout, table, format);
    return;
  }
  std::ofstream out(output);
  if (!out) throw dicke::InvalidParameter("cannot write '" + output + "'");
  dicke::write_table(out, table, format);
}

std::string fmt_complex(dicke::Complex c) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << c.real() + 0.0
     << (c.imag() < 0 ? " - " : " + ") << std::abs(c.imag()) << "i";
  return os.str();
}

void print_asymptotic(const dicke::AsymptoticReport& r, dicke::OutputFormat format) {
  if (format == dicke::OutputFormat::Json) {
    nlohmann::json j = {{"g", r.g},
                        {"unique", r.unique},
                        {"alpha", r.params.alpha},
                        {"beta", {r.params.beta.real(), r.params.beta.imag()}},
                        {"rho_as", dicke::state_to_json(r.rho_as)["matrix"]},
                        {"concurrence", r.concurrence},
                        {"concurrence_formula", r.concurrence_formula}};
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::cout << std::setprecision(std::numeric_limits<double>::max_digits10);
  if (r.unique) {
    std::cout << "g = " << r.g << " < 1: every state relaxes to |0>|0>\n";
  } else {
    std::cout << "alpha = " << r.params.alpha << '\n'
              << "beta = " << fmt_complex(r.params.beta) << '\n';
  }
  std::cout << "rho_as =\n";
  for (int j = 0; j < 4; ++j) {
    std::cout << "  ";
    for (int k = 0; k < 4; ++k) std::cout << (k ? ",  " : "") << fmt_complex(r.rho_as(j, k));
    std::cout << '\n';
  }
  std::cout << "C(rho_as) = " << r.concurrence << '\n';
  if (!r.unique) std::cout << "2|alpha| = " << r.concurrence_formula << '\n';
}

void print_concurrence(const dicke::ConcurrenceReport& r, dicke::OutputFormat format) {
  if (format == dicke::OutputFormat::Json) {
    nlohmann::json j = {{"concurrence", r.concurrence},
                        {"min_pt_eigenvalue", r.min_pt_eigenvalue},
                        {"ppt_separable", r.ppt_separable},
                        {"purity", r.purity}};
    if (r.entropy) j["entropy_of_entanglement"] = *r.entropy;
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::cout << std::setprecision(std::numeric_limits<double>::max_digits10)
            << "concurrence = " << r.concurrence << '\n'
            << "min eigenvalue of partial transpose = " << r.min_pt_eigenvalue << '\n'
            << "PPT separable = " << (r.ppt_separable ? "yes" : "no") << '\n'
            << "purity = " << r.purity << '\n';
  if (r.entropy) std::cout << "entropy of entanglement = " << *r.entropy << " bits\n";
}

void print_peak(const dicke::PeakReport& r, dicke::OutputFormat format) {
  if (format == dicke::OutputFormat::Json) {
    nlohmann::json j = {{"gamma0", r.gamma0},         {"g", r.g},
                        {"t_gamma", r.t_gamma},       {"c_max", r.c_max},
                        {"grid_t", r.grid_t},         {"grid_c", r.grid_c},
                        {"grid_step", r.grid_step},   {"residual_t", r.residual_t},
                        {"residual_c", r.residual_c}};
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::cout << std::setprecision(std::numeric_limits<double>::max_digits10)
            << "t_gamma = " << r.t_gamma << '\n'
            << "C_max = " << r.c_max << '\n'
            << "grid search (step " << r.grid_step << "): t = " << r.grid_t
            << ", C = " << r.grid_c << '\n'
            << "residuals: |dt| = " << r.residual_t << ", |dC| = " << r.residual_c << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement dynamics of two atoms under collective spontaneous emission"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "csv";
  std::string kernel_name;
  app.add_option("--format", format_name, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--kernel", kernel_name, "Force the integrator kernel: scalar or avx2")
      ->check(CLI::IsMember({"scalar", "avx2"}));

  // evolve
  auto* evolve = app.add_subcommand("evolve", "Concurrence (and optionally rho) along a trajectory");
  StateSource evolve_src;
  add_state_options(evolve, evolve_src);
  dicke::EvolveOptions evolve_opt;
  double evolve_t_max = 0.0;
  std::string method_name = "auto";
  std::string evolve_out;
  evolve->add_option("--gamma0", evolve_opt.gamma0, "Single-atom emission rate")->capture_default_str();
  evolve->add_option("--g", evolve_opt.g, "Exchange ratio gamma/gamma0 in [0, 1]")->capture_default_str();
  auto* t_max_opt = evolve->add_option("--t-max", evolve_t_max, "End time (default 5/gamma0)");
  evolve->add_option("--samples", evolve_opt.samples, "Number of grid points")->capture_default_str();
  evolve->add_option("--dt", evolve_opt.dt, "RK4 step")->capture_default_str();
  evolve->add_option("--method", method_name, "auto, closed-form or rk4")
      ->check(CLI::IsMember({"auto", "closed-form", "rk4"}))
      ->capture_default_str();
  evolve->add_flag("--rho", evolve_opt.include_rho, "Emit all density-matrix entries");
  evolve->add_option("-o,--output", evolve_out, "Output path (default stdout)");

  // asymptotic
  auto* asym = app.add_subcommand("asymptotic", "Stationary state and its concurrence");
  StateSource asym_src;
  add_state_options(asym, asym_src);
  double asym_g = 1.0;
  asym->add_option("--g", asym_g, "Exchange ratio")->capture_default_str();

  // concurrence
  auto* conc = app.add_subcommand("concurrence", "Entanglement measures of a single state");
  StateSource conc_src;
  add_state_options(conc, conc_src);

  // figure
  auto* fig = app.add_subcommand("figure", "Curve data for the published figures");
  std::string fig_name;
  dicke::FigureOptions fig_opt;
  double fig_t_max = 0.0;
  std::string fig_out;
  fig->add_option("which", fig_name, "fig1, fig2 or fig3")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3"}));
  fig->add_option("--gamma0", fig_opt.gamma0)->capture_default_str();
  fig->add_option("--g", fig_opt.g, "Exchange ratio for fig3")->capture_default_str();
  auto* fig_t_opt = fig->add_option("--t-max", fig_t_max, "End time (default 5/gamma0)");
  fig->add_option("--samples", fig_opt.samples)->capture_default_str();
  fig->add_option("-o,--output", fig_out, "Output path (default stdout)");

  // peak
  auto* peak = app.add_subcommand("peak", "Maximum of the excited/ground concurrence for g < 1");
  double peak_gamma0 = 1.0;
  double peak_g = 0.5;
  double peak_step = 1e-4;
  peak->add_option("--gamma0", peak_gamma0)->capture_default_str();
  peak->add_option("--g", peak_g)->capture_default_str();
  peak->add_option("--grid-step", peak_step, "Brute-force search step in units of 1/gamma0")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (!kernel_name.empty()) dicke::kernels::force_isa(dicke::kernels::parse_isa(kernel_name));
    const auto format = format_of(format_name);

    if (*evolve) {
      if (*t_max_opt) evolve_opt.t_max = evolve_t_max;
      evolve_opt.method = *dicke::parse_method(method_name);
      const auto ts = dicke::cmd_evolve(evolve_src.load(), evolve_opt);
      emit(ts.to_table(), format, evolve_out);
    } else if (*asym) {
      print_asymptotic(dicke::cmd_asymptotic(asym_src.load(), asym_g), format);
    } else if (*conc) {
      print_concurrence(dicke::cmd_concurrence(conc_src.load()), format);
    } else if (*fig) {
      if (*fig_t_opt) fig_opt.t_max = fig_t_max;
      emit(dicke::cmd_figure(*dicke::parse_figure(fig_name), fig_opt), format, fig_out);
    } else if (*peak) {
      print_peak(dicke::cmd_peak(peak_gamma0, peak_g, peak_step), format);
    }
  } catch (const dicke::InvalidState& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidState;
  } catch (const dicke::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidState;
  } catch (const dicke::InvalidWeights& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidState;
  } catch (const dicke::NotNormalized& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidState;
  } catch (const dicke::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUnsupported;
  }
  return 0;
}
