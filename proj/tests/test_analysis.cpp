#include <doctest.h>

#include <cmath>
#include <limits>

#include "yukawa/analysis.hpp"
#include "yukawa/analytic.hpp"
#include "yukawa/errors.hpp"

using namespace yukawa;

namespace {

const Table1Cell& cell(const Table1Report& r, int m, int n, const std::string& scenario) {
  for (const auto& c : r.cells) {
    if (c.m == m && c.n == n && c.scenario == scenario) return c;
  }
  throw std::runtime_error("no such cell");
}

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("embedded table has 48 cells and one documented exception") {
    CHECK(published_table1().size() == 48);
    REQUIRE(table1_exceptions().size() == 1);
    const auto& ex = table1_exceptions().front();
    CHECK(ex.m == -1);
    CHECK(ex.n == 1);
    CHECK(ex.scenario == "wc5_xi0");
  }

  TEST_CASE("CSV parsing skips comments and rejects malformed rows") {
    const auto cells = parse_published_cells("# note\nm,n,scenario,energy\n0,1,wc0_xi0,-0.5\n\n");
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].energy == -0.5);
    CHECK_THROWS_AS(parse_published_cells("m,n,scenario,energy\n0,1\n"), DomainError);
  }

  TEST_CASE("table reproduction") {
    const auto report = reproduce_table1();
    CHECK(report.cells.size() == 48);
    CHECK(report.matches == 47);
    CHECK(report.documented == 1);
    CHECK(report.unexpected == 0);
    CHECK(report.passed());
    CHECK(cell(report, 0, 2, "wc0_xi5").computed == doctest::Approx(-0.0284107).epsilon(1e-6));
    CHECK(std::abs(cell(report, 1, 3, "wc5_xi0").computed - -0.0001999) < 1e-7);
    const auto& odd = cell(report, -1, 1, "wc5_xi0");
    CHECK(odd.status == CellStatus::MismatchDocumented);
    CHECK(odd.computed == doctest::Approx(9.249e-6).epsilon(1e-3));
    CHECK_FALSE(odd.is_bound);
  }

  TEST_CASE("serial and parallel table agree") {
    const auto a = reproduce_table1(PhysicalParams{}, Execution::Serial);
    const auto b = reproduce_table1(PhysicalParams{}, Execution::Parallel);
    CHECK(a.cells == b.cells);
  }

  TEST_CASE("a changed parameter shows up as unexpected mismatches") {
    const auto report = reproduce_table1(PhysicalParams({.delta = 0.006}));
    CHECK(report.unexpected > 0);
    CHECK_FALSE(report.passed());
  }

  TEST_CASE("combined fields raise every golden level") {
    const auto report = reproduce_table1();
    for (int m : {-1, 0, 1}) {
      for (int n = 0; n <= 3; ++n) {
        CHECK(cell(report, m, n, "wc5_xi5").computed > cell(report, m, n, "wc0_xi0").computed);
        CHECK(cell(report, m, n, "wc5_xi5").published > cell(report, m, n, "wc0_xi0").published);
      }
    }
    for (const auto& row : field_effect_comparison()) CHECK(row.combined_above_zero_field);
  }

  TEST_CASE("field effect rows cover the golden states") {
    const auto rows = field_effect_comparison();
    CHECK(rows.size() == 12);
    for (const auto& r : rows) CHECK(r.magnetic_closer_to_zero_than_combined == (std::abs(r.magnetic) < std::abs(r.combined)));
  }

  TEST_CASE("degeneracy at zero fields pairs m and -m") {
    const auto report = degeneracy_report(PhysicalParams{}, {}, 3, {-1, 1}, 1e-12);
    CHECK(report.groups.size() == 4);
    for (const auto& g : report.groups) {
      REQUIRE(g.members.size() == 2);
      CHECK(g.members[0].n == g.members[1].n);
      CHECK(g.members[0].m == -g.members[1].m);
      CHECK(g.max_gap == 0.0);
    }
    CHECK(report.groups.front().energy == doctest::Approx(-0.8822253).epsilon(1e-7));
  }

  TEST_CASE("flux splits every pair") {
    const FieldConfig f(0, 5);
    const double tol = default_degeneracy_tolerance(PhysicalParams{}, f, 3, {-1, 1});
    const auto report = degeneracy_report(PhysicalParams{}, f, 3, {-1, 1}, tol);
    CHECK(report.groups.size() == 8);
    for (const auto& g : report.groups) CHECK(g.members.size() == 1);
  }

  TEST_CASE("infinite tolerance gives a single group") {
    const auto report =
        degeneracy_report(PhysicalParams{}, {}, 3, {-1, 0, 1}, std::numeric_limits<double>::infinity());
    REQUIRE(report.groups.size() == 1);
    CHECK(report.groups[0].members.size() == 12);
    CHECK_THROWS_AS(degeneracy_report(PhysicalParams{}, {}, 3, {0}, 0.0), DomainError);
  }

  TEST_CASE("sweep over omega_c raises the ground level") {
    const auto r = sweep(PhysicalParams{}, {}, SweepAxis::OmegaC, {0, 1, 5}, {QuantumNumbers(0, 0)});
    CHECK(r.trends[0] == Trend::Increasing);
    CHECK(r.at(0, 0).energy == doctest::Approx(-8.0000031).epsilon(1e-7));
    CHECK(std::abs(r.at(2, 0).energy - -0.0000032) < 1e-7);
    CHECK(r.at(0, 0).flag == CellFlag::Ok);
    CHECK(r.at(2, 0).flag == CellFlag::NotNormalizable);
  }

  TEST_CASE("sweep over delta tends to the Coulomb value") {
    const auto r = sweep(PhysicalParams{}, {}, SweepAxis::Delta, {1e-6, 1e-4, 0.005}, {QuantumNumbers(0, 0)});
    CHECK(std::abs(r.at(0, 0).energy - -8.0) < 1e-8);
    CHECK(r.trends[0] == Trend::Decreasing);
  }

  TEST_CASE("sweep flags invalid cells and handles empty input") {
    const auto r = sweep(PhysicalParams{}, {}, SweepAxis::Delta, {-1.0, 0.005}, {QuantumNumbers(0, 0)});
    CHECK(r.at(0, 0).flag == CellFlag::DomainError);
    CHECK(std::isnan(r.at(0, 0).energy));
    CHECK_FALSE(r.at(0, 0).message.empty());
    CHECK(r.at(1, 0).flag == CellFlag::Ok);
    CHECK(r.trends[0] == Trend::Undetermined);

    const auto empty = sweep(PhysicalParams{}, {}, SweepAxis::V1, {}, {QuantumNumbers(0, 0)});
    CHECK(empty.cells.empty());

    const auto unbound = sweep(PhysicalParams{}, FieldConfig(5, 0), SweepAxis::Xi, {0.0}, {QuantumNumbers(1, -1)});
    CHECK(unbound.at(0, 0).flag == CellFlag::Unbound);
  }

  TEST_CASE("sweep axis names") {
    CHECK(parse_sweep_axis("omega_c") == SweepAxis::OmegaC);
    CHECK(parse_sweep_axis("omega-c") == SweepAxis::OmegaC);
    CHECK(parse_sweep_axis("delta") == SweepAxis::Delta);
    CHECK_THROWS_AS(parse_sweep_axis("beta"), DomainError);
  }

  TEST_CASE("spectrum ordering") {
    const auto t = compute_spectrum(PhysicalParams{}, table1_scenarios(), {1, -1}, {0, 2});
    REQUIRE(t.rows.size() == 4);
    CHECK(t.rows[0].m == 1);
    CHECK(t.rows[1].n == 2);
    CHECK(t.rows[2].m == -1);
    CHECK(t.rows[0].energies.size() == 4);
  }

  TEST_CASE("approximation error study") {
    const auto study = approximation_error_study(PhysicalParams{}, {}, {QuantumNumbers(0, 0), QuantumNumbers(0, 1)},
                                                 {0.005, 0.05, 0.5});
    CHECK(study.rows.size() == 6);
    for (const auto& row : study.rows) {
      CHECK(row.error.empty());
      CHECK(row.resolvable);
    }
    CHECK(study.monotone[0]);
    CHECK(study.monotone[1]);
    // delta = 0.005: closed form within 1% of the exact-potential numeric value.
    CHECK(study.rows[0].gap < 0.01 * std::abs(study.rows[0].closed_form));

    // (n=1, m=1) has E > 0 at delta = 0.5; the row carries the error instead.
    const auto partial = approximation_error_study(PhysicalParams{}, {}, {QuantumNumbers(1, 1)}, {0.05, 0.5});
    CHECK(partial.rows[0].error.empty());
    CHECK_FALSE(partial.rows[1].error.empty());
    CHECK_FALSE(partial.monotone[0]);
  }

  TEST_CASE("approximation gap vanishes as delta goes to zero") {
    const auto study = approximation_error_study(PhysicalParams{}, {}, {QuantumNumbers(0, 0)}, {1e-3, 1e-4});
    CHECK(study.rows[1].gap < study.rows[0].gap);
    CHECK(study.rows[1].gap < 1e-3);
  }
}
