#include <doctest.h>

#include <cmath>

#include "acri/constructions.hpp"
#include "acri/conformance.hpp"

using namespace acri;

namespace {

const std::vector<double> kGrid = detail::validation_grid();

/// Independent infimum oracle: first c on a 1e-4 scan with I(a,c) >= b.
double scan_infimum(const Implication& i, double a, double b) {
  for (int k = 0; k <= 10000; ++k) {
    const double c = k / 10000.0;
    if (i(a, c) >= b - 1e-12) return c;
  }
  return 1.0;
}

void check_matches_infimum(const Aggregator& closed, const Implication& source,
                           double tol) {
  Aggregator oracle = aggregator_from_implication(source, 1e-6);
  for (const double x : kGrid)
    for (const double y : kGrid) {
      INFO(closed.describe(), " at (", x, ",", y, ")");
      CHECK(std::abs(closed(x, y) - oracle(x, y)) <= tol);
    }
}

}  // namespace

TEST_CASE("residual construction from the Lukasiewicz implication") {
  auto ilk = Implication::lukasiewicz();
  auto a = aggregator_from_implication(ilk, 1e-6);
  CHECK(a(0.7, 0.5) == doctest::Approx(0.2).epsilon(1e-6));
  CHECK(a(0.7, 0.5) == doctest::Approx(scan_infimum(ilk, 0.7, 0.5)).epsilon(2e-4));
  // coincides with the Lukasiewicz t-norm everywhere on the grid
  auto tlk = Aggregator::lukasiewicz_tnorm();
  for (const double x : kGrid)
    for (const double y : {0.0, 0.34, 0.72, 1.0})
      CHECK(std::abs(a(x, y) - tlk(x, y)) <= 1e-6);
}

TEST_CASE("residual construction from the Reichenbach implication") {
  auto irc = Implication::reichenbach();
  auto a = aggregator_from_implication(irc, 1e-6);
  CHECK(a(1.0, 0.63) == doctest::Approx(0.63).epsilon(1e-6));
  CHECK(a(0.9, 0.37) == doctest::Approx(0.3).epsilon(1e-6));
  CHECK(a(0.0, 0.5) == 0.0);
  CHECK(a(1.0, 1.0) == 1.0);
  // left neutral element 1 whenever the source satisfies (NP)
  for (const double b : kGrid) CHECK(std::abs(a(1.0, b) - b) <= 1e-6);
}

TEST_CASE("residual construction rejects implications with I(1,b)=1 below 1") {
  auto top = Implication::an_implication(Aggregator::greatest_disjunctor(),
                                         Negation::standard());
  CHECK_THROWS_AS(aggregator_from_implication(top, 1e-6),
                  std::invalid_argument);
}

TEST_CASE("closed form for f-implications") {
  auto a_log = aggregator_for_f_implication(Generator::neg_log());
  CHECK(a_log(0.5, 0.25) == doctest::Approx(0.0625).epsilon(1e-12));  // y^(1/x)
  auto a_rc = aggregator_for_f_implication(Generator::one_minus_x());
  CHECK(a_rc(0.9, 0.37) == doctest::Approx(0.3).epsilon(1e-12));
  for (const double b : kGrid) {
    CHECK(std::abs(a_log(1.0, b) - b) <= 1e-12);
    CHECK(std::abs(a_rc(1.0, b) - b) <= 1e-12);
  }
  check_matches_infimum(a_log, Implication::f_implication(Generator::neg_log()),
                        1e-4);
  check_matches_infimum(a_rc, Implication::reichenbach(), 1e-4);
}

TEST_CASE("closed form for g-implications") {
  auto a = aggregator_for_g_implication(Generator::identity());
  CHECK(a(0.5, 0.8) == doctest::Approx(0.4).epsilon(1e-12));
  for (const double b : kGrid) CHECK(a(1.0, b) == b);
  // A-conditionality holds exactly on the grid
  auto goguen = Implication::g_implication(Generator::identity());
  for (const double x : kGrid)
    for (const double y : kGrid) CHECK(a(x, goguen(x, y)) <= y + 1e-12);
  check_matches_infimum(a, goguen, 1e-4);
}

TEST_CASE("closed form for power-based implications") {
  auto a = aggregator_for_tpower(Generator::neg_log());
  CHECK(a(0.5, 0.5) == doctest::Approx(0.25).epsilon(1e-12));  // x^(1/y)
  for (const double x : kGrid) CHECK(std::abs(a(x, 1.0) - x) <= 1e-12);
  auto it = Implication::t_power(Generator::neg_log());
  for (const double x : kGrid)
    for (const double y : kGrid)
      if (x > y && y > 0.0 && x < 1.0)
        CHECK(std::abs(a(x, it(x, y)) - y) <= 1e-9);
  check_matches_infimum(a, it, 1e-4);
}

TEST_CASE("closed form for ordinal-sum (A,N)-implication sources") {
  auto nc = Negation::standard();
  auto single = aggregator_for_ordinal_sum_sn(
      {{0.0, 1.0, Generator::identity()}}, nc);
  CHECK(single(0.7, 0.5) == doctest::Approx(0.2).epsilon(1e-9));
  // zero branch and fall-through branch
  CHECK(single(0.3, 0.6) == 0.0);  // N(x)=0.7 >= y
  auto off = aggregator_for_ordinal_sum_sn(
      {{0.0, 0.25, Generator::identity()}}, nc);
  CHECK(off(0.5, 0.9) == 0.9);  // N(x)=0.5 outside the summand, below y

  check_matches_infimum(
      single,
      Implication::an_implication(Aggregator::lukasiewicz_tconorm(), nc),
      1e-4);

  // two-summand t-conorm against the generic infimum
  std::vector<Aggregator::OrdinalSummand> parts = {
      {0.0, 0.5, Generator::neg_log_one_minus()},
      {0.5, 1.0, Generator::identity()}};
  auto closed = aggregator_for_ordinal_sum_sn(parts, nc);
  auto source = Implication::an_implication(
      Aggregator::ordinal_sum_tconorm(parts), nc);
  check_matches_infimum(closed, source, 1e-4);

  CHECK_THROWS_AS(
      aggregator_for_ordinal_sum_sn({{0.0, 0.6, Generator::identity()},
                                     {0.5, 1.0, Generator::identity()}},
                                    nc),
      std::invalid_argument);
}

TEST_CASE("closed forms for probabilistic implication sources") {
  auto plain = aggregator_for_probabilistic(Generator::neg_log(), false);
  CHECK(plain(0.4, 0.7) == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(plain(0.0, 0.7) == 0.0);
  check_matches_infimum(plain, Implication::probabilistic(Copula::product()),
                        1e-4);

  auto s_pi = aggregator_for_probabilistic(Generator::neg_log(), true);
  CHECK(s_pi(0.9, 0.47) == doctest::Approx(0.37 / 0.9).epsilon(1e-9));
  check_matches_infimum(s_pi, Implication::probabilistic_s(Copula::product()),
                        1e-4);

  auto s_w = aggregator_for_probabilistic(Generator::one_minus_x(), true);
  CHECK(s_w(0.3, 0.6) == 0.0);
  CHECK(s_w(0.6, 0.8) == doctest::Approx(0.8).epsilon(1e-9));
  check_matches_infimum(s_w,
                        Implication::probabilistic_s(Copula::lukasiewicz()),
                        1e-4);
}

TEST_CASE("A-conditionality certificate for every closed form") {
  auto nc = Negation::standard();
  const Grid g = Grid::uniform(101);
  const std::vector<std::pair<Aggregator, Implication>> pairs = {
      {aggregator_for_f_implication(Generator::one_minus_x()),
       Implication::reichenbach()},
      {aggregator_for_f_implication(Generator::neg_log()),
       Implication::f_implication(Generator::neg_log())},
      {aggregator_for_g_implication(Generator::identity()),
       Implication::g_implication(Generator::identity())},
      {aggregator_for_tpower(Generator::neg_log()),
       Implication::t_power(Generator::neg_log())},
      {aggregator_for_ordinal_sum_sn({{0.0, 1.0, Generator::identity()}}, nc),
       Implication::lukasiewicz()},
      {aggregator_for_probabilistic(Generator::neg_log(), false),
       Implication::probabilistic(Copula::product())},
      {aggregator_for_probabilistic(Generator::neg_log(), true),
       Implication::probabilistic_s(Copula::product())},
  };
  for (const auto& [a, i] : pairs) {
    auto report = check_ac(a, i, g, 1e-9);
    INFO(a.describe());
    CHECK(report.pass);
  }
}

TEST_CASE("scaling a constructed aggregator preserves A-conditionality") {
  auto a = aggregator_for_f_implication(Generator::one_minus_x());
  auto irc = Implication::reichenbach();
  const Grid g = Grid::uniform(101);
  for (const double lambda : {0.25, 0.5, 0.75}) {
    auto scaled = [lambda, a](double x, double y) { return lambda * a(x, y); };
    auto report = check_ac_fn(scaled, irc.fn(), g, 1e-9);
    CHECK(report.pass);
  }
}

TEST_CASE("star extension agrees with continuous aggregators") {
  for (const auto& a : {Aggregator::product(), Aggregator::minimum(),
                        Aggregator::lukasiewicz_tnorm()}) {
    auto star = star_extension(a);
    INFO(a.describe());
    for (const double x : kGrid)
      for (const double y : {0.0, 0.3, 0.62, 1.0}) {
        CHECK(star(x, y) <= a(x, y));
        CHECK(std::abs(star(x, y) - a(x, y)) <= 3e-3);  // Lipschitz * offset
      }
  }
}

TEST_CASE("star extension is left-continuous at grid resolution") {
  auto star = star_extension(Aggregator::product());
  const double h = 1.0 / 1000;
  for (const double x : kGrid)
    for (const double y : kGrid)
      if (y > 2 * h && x > 0.0 && x < 1.0 && y < 1.0)
        CHECK(std::abs(star(x, y) - star(x, y - h)) <= 3e-3);
}

TEST_CASE("star extension recovers the left limit at an interior jump") {
  // max(xy, step) with the step rising to 0.5 inside [0.4995, 0.5]^2:
  // border-continuous, monotone, but discontinuous in the interior.
  const std::vector<double> axis = {0.0, 0.25, 0.4995, 0.5, 0.75, 1.0};
  std::vector<double> values;
  for (const double x : axis)
    for (const double y : axis) {
      const double step = (x >= 0.5 && y >= 0.5) ? 0.5 : 0.0;
      values.push_back(std::max(x * y, step));
    }
  auto a = Aggregator::tabulated(axis, axis, values);
  auto star = star_extension(a);

  // explicit supremum over the sampled open rectangle below (0.5, 0.5)
  double sup = 0.0;
  for (int u = 0; u < 500; ++u)
    for (int v = 0; v < 500; ++v)
      sup = std::max(sup, a(u / 1000.0, v / 1000.0));
  CHECK(star(0.5, 0.5) == doctest::Approx(sup).epsilon(1e-9));
  CHECK(star(0.5, 0.5) < a(0.5, 0.5) - 0.2);

  // approximate idempotence at grid resolution
  auto star2 = star_extension(star);
  int large = 0;
  for (const double x : kGrid)
    for (const double y : kGrid)
      if (std::abs(star2(x, y) - star(x, y)) > 1e-2) ++large;
  CHECK(large <= static_cast<int>(kGrid.size()));  // only near the shifted jump
}

TEST_CASE("star extension rejects border-discontinuous aggregators") {
  CHECK_THROWS_AS(star_extension(Aggregator::greatest_disjunctor()),
                  std::invalid_argument);
}

TEST_CASE("contrapositive residual bound for exchange conjunctors") {
  const Grid g = Grid::uniform(101);
  auto tlk = Aggregator::lukasiewicz_tnorm();
  auto nc = Negation::standard();
  auto id = Automorphism::identity();

  auto r1 = check_dac_residual_bound(Implication::lukasiewicz(), tlk, nc, id, g);
  CHECK(r1.pass);
  CHECK(r1.worst_violation == 0.0);

  auto r2 = check_dac_residual_bound(Implication::reichenbach(), tlk, nc, id, g);
  CHECK(r2.pass);
  CHECK(r2.worst_violation == 0.0);

  auto top = Implication::an_implication(Aggregator::greatest_disjunctor(), nc);
  auto r3 = check_dac_residual_bound(top, tlk, nc, id, g);
  CHECK(!r3.pass);
  REQUIRE(r3.witness.size() == 2);
  CHECK(top(r3.witness[0], r3.witness[1]) > 0.99);

  // precondition failures name the condition
  CHECK_THROWS_WITH_AS(
      check_dac_residual_bound(Implication::lukasiewicz(),
                               Aggregator::greatest_disjunctor(), nc, id, g),
      doctest::Contains("left-neutral-one"), std::invalid_argument);
}
