#include <doctest.h>

#include <algorithm>

#include "chisq/axioms.hpp"

using namespace chisq;

namespace {

const ReferencePoint kStairs({Rational(1, 6), Rational(1, 3), Rational(1, 2)});
const ReferencePoint kHalf({Rational(1, 2), Rational(1, 2)});

const CheckReport& find_report(const std::vector<CheckReport>& reports,
                               const AxiomId& id) {
  auto it = std::find_if(reports.begin(), reports.end(),
                         [&](const CheckReport& r) { return r.axiom == id; });
  REQUIRE(it != reports.end());
  return *it;
}

SuiteConfig small_config() {
  SuiteConfig config;
  config.n_values = {2, 3};
  config.k_multiples = {1, 2};
  config.lambda_max = 3;
  config.db_limit = 100;
  return config;
}

}  // namespace

TEST_CASE("check_homogeneity examples") {
  CHECK(check_homogeneity(MeasureSpec::chi2_0_measure(), 0, CountVector({3, 2, 1}),
                          kStairs, 5));
  CHECK_FALSE(check_homogeneity(MeasureSpec::chi2_1_measure(), 0, CountVector({1, 0}),
                                kHalf, 2));
  CHECK(check_homogeneity(MeasureSpec::chi2_1_measure(), 0, CountVector({1, 0}), kHalf,
                          1));
  CHECK(check_homogeneity(MeasureSpec::abs_counter(), 0, CountVector({2, 1}), kHalf, 3));
  CHECK_THROWS_AS(check_homogeneity(MeasureSpec::chi2_0_measure(), 2,
                                    CountVector({1, 1}), kHalf, 2),
                  std::invalid_argument);
}

TEST_CASE("harmonic_factor") {
  CHECK(harmonic_factor(kHalf, 1, 2) == 4);
  CHECK(harmonic_factor(kStairs, 1, 3) == 8);
  CHECK_THROWS_AS(harmonic_factor(kStairs, 1, 1), EqualIndices);
  CHECK_THROWS_AS(harmonic_factor(kStairs, 0, 2), IndexOutOfRange);
  CHECK_THROWS_AS(harmonic_factor(kStairs, 1, 4), IndexOutOfRange);
}

TEST_CASE("check_inverse_effects examples") {
  CHECK(check_inverse_effects(MeasureSpec::chi2_0_measure(), 6, 6, kStairs, kStairs, 1,
                              2, 2, 3));
  CHECK_FALSE(check_inverse_effects(MeasureSpec::sq_counter(), 6, 6, kStairs, kStairs,
                                    1, 2, 2, 3));
  // identical numerator and denominator
  CHECK(check_inverse_effects(MeasureSpec::sq_counter(), 6, 6, kStairs, kStairs, 1, 2,
                              1, 2));
  CHECK_THROWS_AS(check_inverse_effects(MeasureSpec::chi2_0_measure(), 4, 4, kStairs,
                                        kStairs, 1, 2, 2, 3),
                  NotIntegral);
}

TEST_CASE("restricted inverse effects is vacuous at n = 2") {
  std::vector<MeasureSpec> measures = {
      MeasureSpec::chi2_0_measure(), MeasureSpec::chi2_1_measure(),
      MeasureSpec::abs_counter(), MeasureSpec::sq_counter(),
      MeasureSpec::scaled(Rational(5, 2), MeasureSpec::chi2_1_measure())};
  const ReferencePoint thirds({Rational(1, 3), Rational(2, 3)});
  for (const auto& m : measures) {
    for (const auto& pi : {kHalf, thirds}) {
      const std::int64_t k0 = lcm_denominators(pi);
      for (std::int64_t k : {k0, 2 * k0, 4 * k0}) {
        for (std::size_t j : {1, 2}) {
          const std::size_t l = 3 - j;
          for (std::size_t r : {1, 2}) {
            const std::size_t s = 3 - r;
            CHECK(check_inverse_effects(m, k, k, pi, pi, j, l, r, s));
          }
        }
      }
    }
  }
}

TEST_CASE("enumerate_db_pairs") {
  auto pairs = enumerate_db_pairs(kHalf, 2, 1000);
  auto has = [&](std::vector<std::int64_t> x, std::vector<std::int64_t> y) {
    return std::find(pairs.begin(), pairs.end(),
                     std::make_pair(CountVector(x), CountVector(y))) != pairs.end();
  };
  CHECK(has({1, 1}, {2, 0}));
  CHECK(has({1, 1}, {1, 1}));  // x = y = k*pi
  CHECK_FALSE(has({2, 0}, {0, 2}));  // x - y + k*pi = (3, -1) is out of X

  // deterministic lexicographic order
  auto again = enumerate_db_pairs(kHalf, 2, 1000);
  CHECK(pairs == again);
  CHECK(std::is_sorted(pairs.begin(), pairs.end()));

  CHECK(enumerate_db_pairs(kHalf, 2, 3).size() == 3);
  CHECK_THROWS_AS(enumerate_db_pairs(kStairs, 4, 10), NotIntegral);
}

TEST_CASE("deviations balancedness") {
  MeasureSpec chi1 = MeasureSpec::chi2_1_measure();
  for (const auto& [x, y] : enumerate_db_pairs(kStairs, 6, 200)) {
    CHECK(check_deviations_balancedness(chi1, kStairs, x, y, 6));
  }
  // x = y reduces to f(2x - k*pi) + f(k*pi) = 4 f(x) with f(k*pi) = 0
  CHECK(check_deviations_balancedness(chi1, kHalf, CountVector({3, 1}),
                                      CountVector({3, 1}), 4));
  // frozen witness: lhs = 2, rhs = 4
  CHECK_FALSE(check_deviations_balancedness(MeasureSpec::abs_counter(), kHalf,
                                            CountVector({3, 1}), CountVector({1, 3}),
                                            4));
}

TEST_CASE("reference catalogue") {
  for (std::size_t n : {2, 3, 4, 5}) {
    auto catalogue = reference_catalogue(n);
    CHECK(catalogue.size() == (n == 2 ? 2 : 3));
    for (const auto& pi : catalogue) CHECK(pi.dim() == n);
  }
  auto cat3 = reference_catalogue(3);
  CHECK(cat3[1] == kStairs);
  CHECK(cat3[2] == ReferencePoint({Rational(1, 2), Rational(1, 4), Rational(1, 4)}));
}

TEST_CASE("suite verdicts per measure") {
  SuiteConfig config = small_config();
  const AxiomId h0{AxiomId::Tag::Homogeneity, 0};
  const AxiomId h1{AxiomId::Tag::Homogeneity, 1};
  const AxiomId db{AxiomId::Tag::DeviationsBalancedness};
  const AxiomId ie{AxiomId::Tag::InverseEffects};
  const AxiomId rie{AxiomId::Tag::RestrictedInverseEffects};

  auto chi0 = run_axiom_suite(MeasureSpec::chi2_0_measure(), config);
  CHECK(find_report(chi0, h0).passed);
  CHECK(find_report(chi0, db).passed);
  CHECK(find_report(chi0, ie).passed);
  CHECK(find_report(chi0, rie).passed);
  CHECK_FALSE(find_report(chi0, h1).passed);

  auto chi1 = run_axiom_suite(MeasureSpec::chi2_1_measure(), config);
  CHECK(find_report(chi1, h1).passed);
  CHECK(find_report(chi1, db).passed);
  CHECK(find_report(chi1, ie).passed);
  CHECK_FALSE(find_report(chi1, h0).passed);
  CHECK(find_report(chi1, h0).witness.has_value());

  auto phi = run_axiom_suite(
      MeasureSpec::phi_weighted(catalogue_phi_table(config)), config);
  CHECK_FALSE(find_report(phi, ie).passed);
  CHECK(find_report(phi, rie).passed);
  CHECK(find_report(phi, db).passed);
}

TEST_CASE("witnesses replay to a violation") {
  SuiteConfig config = small_config();
  const std::vector<MeasureSpec> measures = {MeasureSpec::chi2_1_measure(),
                                             MeasureSpec::abs_counter(),
                                             MeasureSpec::sq_counter()};
  for (const auto& m : measures) {
    for (const auto& report : run_axiom_suite(m, config)) {
      if (report.passed) {
        CHECK_FALSE(report.witness.has_value());
        continue;
      }
      REQUIRE(report.witness.has_value());
      CHECK(report.witness->lhs != report.witness->rhs);
      CHECK_FALSE(replay_witness(m, *report.witness));
    }
  }
}

TEST_CASE("parallel suite matches the serial reference") {
  SuiteConfig config = small_config();
  for (const auto& m : {MeasureSpec::chi2_0_measure(), MeasureSpec::abs_counter()}) {
    auto serial = run_axiom_suite(m, config, false);
    auto parallel = run_axiom_suite(m, config, true);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(serial[i].axiom == parallel[i].axiom);
      CHECK(serial[i].passed == parallel[i].passed);
      CHECK(serial[i].instances_tested == parallel[i].instances_tested);
      CHECK(serial[i].witness.has_value() == parallel[i].witness.has_value());
      if (serial[i].witness) {
        CHECK(serial[i].witness->lhs == parallel[i].witness->lhs);
        CHECK(serial[i].witness->x == parallel[i].witness->x);
      }
    }
  }
}

TEST_CASE("independence matrix") {
  auto report = independence_report(small_config());
  REQUIRE(report.rows.size() == 3);
  CHECK(report.as_expected);

  const auto& chi1 = report.rows[0];
  CHECK_FALSE(chi1.homogeneity0_passed);
  CHECK(chi1.deviations_balancedness_passed);
  CHECK(chi1.inverse_effects_passed);

  const auto& abs_row = report.rows[1];
  CHECK(abs_row.homogeneity0_passed);
  CHECK_FALSE(abs_row.deviations_balancedness_passed);
  CHECK(abs_row.inverse_effects_passed);

  const auto& sq_row = report.rows[2];
  CHECK(sq_row.homogeneity0_passed);
  CHECK(sq_row.deviations_balancedness_passed);
  CHECK_FALSE(sq_row.inverse_effects_passed);
}
