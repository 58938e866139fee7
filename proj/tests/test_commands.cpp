#include <doctest.h>

#include <cmath>

#include "dicke/commands.hpp"
#include "dicke/entanglement.hpp"
#include "dicke/random.hpp"
#include "dicke/states.hpp"

using namespace dicke;

namespace {

StateFile family(const std::string& text) { return parse_state(text); }

}  // namespace

TEST_CASE("method names") {
  for (auto m : {EvolveMethod::Auto, EvolveMethod::ClosedForm, EvolveMethod::Rk4})
    CHECK(parse_method(to_string(m)) == m);
  CHECK_FALSE(parse_method("euler").has_value());
}

TEST_CASE("special-case detection") {
  CHECK(classify_special_case(basis_state(1, 0)) == SpecialCase::ExcitedGround);
  CHECK(classify_special_case(basis_state(0, 1)) == SpecialCase::GroundExcited);
  CHECK(classify_special_case(bell(BellState::PsiPlus)) == SpecialCase::PsiPlus);
  CHECK(classify_special_case(bell(BellState::PsiMinus)) == SpecialCase::PsiMinus);
  CHECK(classify_special_case(werner(0.5)) == SpecialCase::None);
}

TEST_CASE("evolve") {
  SUBCASE("excited-ground at g = 1") {
    const TimeSeries ts = cmd_evolve(family(R"({"family": "basis", "a": 1, "b": 0})"), {});
    CHECK(ts.records.size() == 501);
    CHECK(ts.method == "closed-form");
    CHECK(ts.t_max == 5.0);
    // The Psi+ component decays at 2 gamma0 and the singlet part survives.
    for (const auto& r : ts.records)
      CHECK(std::abs(r.concurrence - 0.5 * (1.0 - std::exp(-2.0 * r.t))) < 1e-8);
    CHECK(ts.records.back().concurrence == doctest::Approx(0.5).epsilon(1e-4));
  }
  SUBCASE("singlet stays maximally entangled at g = 1") {
    const TimeSeries ts = cmd_evolve(family(R"({"family": "bell", "which": "psi-"})"), {});
    for (const auto& r : ts.records) CHECK(r.concurrence == doctest::Approx(1.0).epsilon(1e-10));
  }
  SUBCASE("ground state is never entangled") {
    EvolveOptions opt;
    opt.g = 0.4;
    const TimeSeries ts = cmd_evolve(family(R"({"family": "basis", "a": 0, "b": 0})"), opt);
    CHECK(ts.method == "rk4");
    for (const auto& r : ts.records) CHECK(r.concurrence == 0.0);
  }
  SUBCASE("ground-excited at g < 1 uses the mirrored closed form") {
    EvolveOptions opt;
    opt.g = 0.5;
    opt.samples = 11;
    opt.include_rho = true;
    const TimeSeries ts = cmd_evolve(family(R"({"family": "basis", "a": 0, "b": 1})"), opt);
    CHECK(ts.method == "closed-form");
    for (const auto& r : ts.records) {
      CHECK(std::abs(r.concurrence - std::exp(-r.t) * std::sinh(0.5 * r.t)) < 1e-8);
      REQUIRE(r.rho.has_value());
    }
    CHECK((*ts.records.back().rho)(2, 2).real() > (*ts.records.back().rho)(1, 1).real());
  }
  SUBCASE("closed form and RK4 agree") {
    StateSampler s(81);
    const StateFile f{s.mixed(), ""};
    EvolveOptions opt;
    opt.samples = 51;
    opt.include_rho = true;
    opt.method = EvolveMethod::ClosedForm;
    const TimeSeries a = cmd_evolve(f, opt);
    opt.method = EvolveMethod::Rk4;
    const TimeSeries b = cmd_evolve(f, opt);
    CHECK(a.scenario == "matrix");
    for (std::size_t i = 0; i < a.records.size(); ++i) {
      CHECK(std::abs(a.records[i].concurrence - b.records[i].concurrence) < 1e-6);
      CHECK(max_abs_diff(*a.records[i].rho, *b.records[i].rho) < 1e-6);
    }
  }
  SUBCASE("closed form unavailable") {
    EvolveOptions opt;
    opt.g = 0.7;
    opt.method = EvolveMethod::ClosedForm;
    CHECK_THROWS_AS(cmd_evolve(family(R"({"family": "werner", "p": 0.5})"), opt),
                    UnsupportedClosedForm);
  }
  SUBCASE("t_max scales with gamma0") {
    EvolveOptions opt;
    opt.gamma0 = 2.0;
    opt.samples = 3;
    CHECK(cmd_evolve(family(R"({"family": "werner", "p": 0.5})"), opt).t_max == 2.5);
  }
}

TEST_CASE("asymptotic") {
  const AsymptoticReport w = cmd_asymptotic(family(R"({"family": "werner", "p": 0})"));
  CHECK(w.unique == false);
  CHECK(w.concurrence == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(w.concurrence_formula == doctest::Approx(0.25));
  CHECK(w.params.alpha == doctest::Approx(0.125));

  const AsymptoticReport up = cmd_asymptotic(family(R"({"family": "basis", "a": 1, "b": 1})"));
  CHECK(up.rho_as == basis_state(0, 0));
  CHECK(up.concurrence == 0.0);

  const AsymptoticReport bd =
      cmd_asymptotic(family(R"({"family": "bell_diagonal", "p": [0.1, 0.2, 0.3, 0.4]})"));
  CHECK(bd.concurrence == doctest::Approx(0.4).epsilon(1e-10));

  const AsymptoticReport g05 = cmd_asymptotic(family(R"({"family": "bell", "which": "psi-"})"), 0.5);
  CHECK(g05.unique);
  CHECK(g05.rho_as == basis_state(0, 0));
  CHECK(g05.concurrence == 0.0);
}

TEST_CASE("concurrence report") {
  const ConcurrenceReport w = cmd_concurrence(family(R"({"family": "werner", "p": 0.5})"));
  CHECK(w.concurrence == doctest::Approx(0.25));
  CHECK_FALSE(w.ppt_separable);
  CHECK(w.min_pt_eigenvalue == doctest::Approx(-0.125));
  CHECK_FALSE(w.entropy.has_value());

  const ConcurrenceReport b = cmd_concurrence(family(R"({"family": "bell", "which": "phi+"})"));
  REQUIRE(b.entropy.has_value());
  CHECK(*b.entropy == doctest::Approx(1.0));
  CHECK(b.purity == doctest::Approx(1.0));
}

TEST_CASE("figures") {
  SUBCASE("fig1 ordering") {
    FigureOptions opt;
    opt.t_max = 2.0;
    opt.samples = 5;
    const Table t = cmd_figure(Figure::Fig1, opt);
    CHECK(t.columns == std::vector<std::string>{"t", "C_phi_plus", "C_psi_plus"});
    CHECK(t.rows[0][1] == doctest::Approx(1.0));
    CHECK(t.rows[0][2] == doctest::Approx(1.0));
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
      const double s = t.rows[i][0];
      CHECK(t.rows[i][1] > t.rows[i][2]);
      CHECK(t.rows[i][1] == doctest::Approx(std::exp(-s) - s * std::exp(-2 * s)).epsilon(1e-9));
      CHECK(t.rows[i][2] == doctest::Approx(std::exp(-2 * s)).epsilon(1e-9));
    }
  }
  SUBCASE("fig2 endpoints") {
    FigureOptions opt;
    opt.samples = 11;
    const Table t = cmd_figure(Figure::Fig2, opt);
    CHECK(t.rows.front()[1] == doctest::Approx(1.0 / 3.0));
    CHECK(t.rows.front()[2] == doctest::Approx(0.0));
    CHECK(t.rows.front()[3] == doctest::Approx(1.0 / 6.0));
    CHECK(t.rows.back()[2] == doctest::Approx(1.0));
    CHECK(t.rows.back()[3] == doctest::Approx(0.0));
  }
  SUBCASE("fig3 minus dominates plus") {
    const Table t = cmd_figure(Figure::Fig3, {});
    CHECK(t.rows[0][1] == doctest::Approx(1.0));
    CHECK(t.rows[0][2] == doctest::Approx(1.0));
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
      const double s = t.rows[i][0];
      CHECK(t.rows[i][2] > t.rows[i][1]);
      CHECK(std::abs(t.rows[i][1] - std::exp(-1.99 * s)) < 1e-8);
      CHECK(std::abs(t.rows[i][2] - std::exp(-0.01 * s)) < 1e-8);
    }
  }
  CHECK(parse_figure("fig2") == Figure::Fig2);
  CHECK_FALSE(parse_figure("fig4").has_value());
}

TEST_CASE("peak") {
  const PeakReport r = cmd_peak(1.0, 0.5);
  CHECK(r.t_gamma == doctest::Approx(std::log(3.0)));
  CHECK(r.c_max == doctest::Approx(std::pow(3.0, -1.5)));
  CHECK(r.residual_t < 1e-4);
  CHECK(r.residual_c < 1e-4);

  const PeakReport weak = cmd_peak(1.0, 0.01);
  CHECK(weak.c_max > 0.0);
  CHECK(weak.residual_t < 1e-4);

  const PeakReport fast = cmd_peak(4.0, 0.5);
  CHECK(fast.t_gamma == doctest::Approx(std::log(3.0) / 4.0));
  CHECK(fast.c_max == doctest::Approx(std::pow(3.0, -1.5)));

  CHECK_THROWS_AS(cmd_peak(1.0, 1.0), DegenerateRates);
  CHECK_THROWS_AS(cmd_peak(1.0, 0.5, 0.0), InvalidParameter);
}
