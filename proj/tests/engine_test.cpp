#include <doctest.h>

#include <cmath>
#include <random>

#include "acri/constructions.hpp"
#include "acri/engine.hpp"

using namespace acri;

namespace {

FuzzySet apple_d1() {
  return FuzzySet({"x11", "x12", "x13", "x14"}, {1, 0.1, 0, 0.05});
}
FuzzySet apple_d2() {
  return FuzzySet({"x21", "x22", "x23", "x24", "x25"}, {0, 0.9, 0.04, 0, 0});
}
FuzzySet apple_b() { return FuzzySet({"y1", "y2", "y3"}, {0.3, 0.2, 0.4}); }
FuzzySet apple_input() {
  return product_set(FuzzySet({"x11", "x12", "x13", "x14"}, {1, 0, 0, 0}),
                     FuzzySet({"x21", "x22", "x23", "x24", "x25"},
                              {0, 1, 0, 0, 0}));
}

}  // namespace

TEST_CASE("fuzzy set construction validates") {
  CHECK_THROWS_AS(FuzzySet({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(FuzzySet({"a", "b"}, {0.5}), std::invalid_argument);
  CHECK_THROWS_AS(FuzzySet({"a", "a"}, {0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(FuzzySet({"a"}, {1.2}), std::invalid_argument);
  CHECK(FuzzySet({"a", "b"}, {1.0, 0.2}).is_normal());
  CHECK(!FuzzySet({"a", "b"}, {0.99, 0.2}).is_normal());
}

TEST_CASE("cartesian products combine memberships") {
  auto d = product_set(apple_d1(), apple_d2());
  CHECK(d.universe()[0 * 5 + 1] == "x11|x22");
  CHECK(d[0 * 5 + 1] == 0.9);  // min(1, 0.9)

  auto crisp = apple_input();
  CHECK(crisp[0 * 5 + 1] == 1.0);
  int ones = 0;
  for (std::size_t k = 0; k < crisp.size(); ++k) ones += crisp[k] == 1.0;
  CHECK(ones == 1);

  auto prod = product_set(apple_d1(), apple_d2(), Aggregator::product());
  CHECK(prod[1 * 5 + 1] == doctest::Approx(0.09).epsilon(1e-12));

  CHECK_THROWS_AS(product_set(apple_d1(), apple_d2(), Aggregator::maximum()),
                  std::invalid_argument);
}

TEST_CASE("apple-maturity inference reproduces the published output") {
  Rule rule{product_set(apple_d1(), apple_d2()), apple_b()};
  auto a = aggregator_for_f_implication(Generator::one_minus_x());
  auto irc = Implication::reichenbach();

  FuzzySet out = fmp_infer(a, irc, rule, apple_input());
  REQUIRE(out.size() == 3);
  CHECK(out[0] == doctest::Approx(0.37).epsilon(1e-9));
  CHECK(out[1] == doctest::Approx(0.28).epsilon(1e-9));
  CHECK(out[2] == doctest::Approx(0.46).epsilon(1e-9));

  FuzzySet blown =
      fmp_infer(Aggregator::greatest_disjunctor(), irc, rule, apple_input());
  for (std::size_t k = 0; k < blown.size(); ++k) CHECK(blown[k] == 1.0);

  CHECK(distance(apple_b(), out, 2) == doctest::Approx(0.122).epsilon(1e-2));
  CHECK(distance(apple_b(), blown, 2) == doctest::Approx(1.22).epsilon(5e-3));
}

TEST_CASE("the published joint-input distance matches one factor only") {
  // d over the min-combined product universes is 0.165, over the product
  // combiner 0.147; the second factor alone gives 0.108.
  auto joint_min = product_set(apple_d1(), apple_d2());
  auto input = apple_input();
  CHECK(distance(input, joint_min, 2) == doctest::Approx(0.16523).epsilon(1e-3));
  auto joint_prod = product_set(apple_d1(), apple_d2(), Aggregator::product());
  auto input_prod = product_set(
      FuzzySet({"x11", "x12", "x13", "x14"}, {1, 0, 0, 0}),
      FuzzySet({"x21", "x22", "x23", "x24", "x25"}, {0, 1, 0, 0, 0}),
      Aggregator::product());
  CHECK(distance(input_prod, joint_prod, 2) ==
        doctest::Approx(0.14746).epsilon(1e-3));
  CHECK(distance(apple_d2(),
                 FuzzySet({"x21", "x22", "x23", "x24", "x25"}, {0, 1, 0, 0, 0}),
                 2) == doctest::Approx(0.10770).epsilon(1e-3));
}

TEST_CASE("modus ponens is exact for compatible pairs") {
  Rule rule{FuzzySet({"u1", "u2", "u3"}, {0.5, 1.0, 0.25}),
            FuzzySet({"v1", "v2"}, {1.0, 0.375})};
  auto out = fmp_infer(Aggregator::lukasiewicz_tnorm(),
                       Implication::lukasiewicz(), rule, rule.antecedent);
  CHECK(out[0] == 1.0);
  CHECK(out[1] == 0.375);
}

TEST_CASE("modus tollens against a brute-force double loop") {
  auto a = aggregator_for_f_implication(Generator::one_minus_x());
  auto irc = Implication::reichenbach();
  Rule rule{FuzzySet({"u1", "u2", "u3", "u4", "u5"}, {0.2, 1.0, 0.7, 0.05, 0.9}),
            FuzzySet({"v1", "v2", "v3"}, {1.0, 0.4, 0.0})};
  FuzzySet input({"v1", "v2", "v3"}, {0.1, 0.8, 0.55});

  FuzzySet got = fmt_infer(a, irc, rule, input);
  for (std::size_t x = 0; x < rule.antecedent.size(); ++x) {
    double want = 0.0;
    for (std::size_t y = 0; y < rule.consequent.size(); ++y)
      want = std::max(want,
                      a(input[y], irc(rule.antecedent[x], rule.consequent[y])));
    CHECK(got[x] == want);
  }
}

TEST_CASE("modus tollens returns the complement for the Lukasiewicz pair") {
  auto tlk = Aggregator::lukasiewicz_tnorm();
  auto ilk = Implication::lukasiewicz();
  auto nc = Negation::standard();
  Rule rule{FuzzySet({"u1", "u2", "u3"}, {1.0, 0.5, 0.125}),
            FuzzySet({"v1", "v2", "v3"}, {1.0, 0.75, 0.0})};
  FuzzySet out = fmt_infer(tlk, ilk, rule, complement(rule.consequent, nc));
  FuzzySet want = complement(rule.antecedent, nc);
  for (std::size_t k = 0; k < want.size(); ++k) CHECK(out[k] == want[k]);
}

TEST_CASE("all-zero modus tollens input vanishes under a conjunctor") {
  Rule rule{FuzzySet({"u1", "u2"}, {1.0, 0.3}),
            FuzzySet({"v1", "v2"}, {1.0, 0.6})};
  FuzzySet zeros({"v1", "v2"}, {0.0, 0.0});
  FuzzySet out = fmt_infer(Aggregator::lukasiewicz_tnorm(),
                           Implication::lukasiewicz(), rule, zeros);
  CHECK(out[0] == 0.0);
  CHECK(out[1] == 0.0);
}

TEST_CASE("universe mismatches are reported with the differing labels") {
  Rule rule{FuzzySet({"u1", "u2"}, {1.0, 0.3}),
            FuzzySet({"v1", "v2"}, {1.0, 0.6})};
  FuzzySet wrong({"u1", "w9"}, {1.0, 0.3});
  CHECK_THROWS_WITH_AS(fmp_infer(Aggregator::minimum(),
                                 Implication::lukasiewicz(), rule, wrong),
                       doctest::Contains("w9"), std::invalid_argument);
  CHECK_THROWS_AS(fmt_infer(Aggregator::minimum(), Implication::lukasiewicz(),
                            rule, wrong),
                  std::invalid_argument);
}

TEST_CASE("non-normal inputs warn but still infer") {
  int warnings = 0;
  set_warning_handler([&warnings](std::string_view) { ++warnings; });
  Rule rule{FuzzySet({"u1", "u2"}, {0.9, 0.3}),
            FuzzySet({"v1", "v2"}, {1.0, 0.6})};
  FuzzySet input({"u1", "u2"}, {0.8, 0.1});
  CHECK_NOTHROW(
      fmp_infer(Aggregator::minimum(), Implication::lukasiewicz(), rule, input));
  CHECK(warnings == 2);  // antecedent and input
  set_warning_handler([](std::string_view) {});
}

TEST_CASE("inference is monotone in the input") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  auto a = aggregator_for_f_implication(Generator::one_minus_x());
  auto irc = Implication::reichenbach();
  for (int round = 0; round < 20; ++round) {
    std::vector<double> dv(4), d2v(4), bv(3);
    for (auto& v : d2v) v = unif(rng);
    for (std::size_t k = 0; k < dv.size(); ++k) dv[k] = d2v[k] * unif(rng);
    for (auto& v : bv) v = unif(rng);
    bv[0] = 1.0;
    Rule rule{FuzzySet({"u1", "u2", "u3", "u4"},
                       {1.0, unif(rng), unif(rng), unif(rng)}),
              FuzzySet({"v1", "v2", "v3"}, bv)};
    FuzzySet lo = fmp_infer(a, irc, rule,
                            FuzzySet({"u1", "u2", "u3", "u4"}, dv));
    FuzzySet hi = fmp_infer(a, irc, rule,
                            FuzzySet({"u1", "u2", "u3", "u4"}, d2v));
    for (std::size_t k = 0; k < lo.size(); ++k) {
      CHECK(lo[k] <= hi[k] + 1e-12);
      CHECK(lo[k] >= 0.0);
      CHECK(hi[k] <= 1.0);
    }
  }
}

TEST_CASE("distance properties") {
  auto b = apple_b();
  CHECK(distance(b, b, 2) == 0.0);
  CHECK(distance(b, b, 1) == 0.0);
  CHECK_THROWS_AS(distance(b, b, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(distance(b, apple_d1(), 2), std::invalid_argument);
  // p=1 accumulates plain absolute differences
  FuzzySet c({"y1", "y2", "y3"}, {0.1, 0.4, 0.4});
  CHECK(distance(b, c, 1) == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("complement applies the negation pointwise") {
  FuzzySet d({"a", "b", "c"}, {1.0, 0.3, 0.0});
  auto nc = Negation::standard();
  auto comp = complement(d, nc);
  CHECK(comp[0] == 0.0);
  CHECK(comp[1] == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(comp[2] == 1.0);
  auto twice = complement(comp, nc);
  for (std::size_t k = 0; k < d.size(); ++k)
    CHECK(twice[k] == doctest::Approx(d[k]).epsilon(1e-12));
  auto bot = complement(d, Negation::bottom());
  CHECK(bot[0] == 0.0);
  CHECK(bot[1] == 0.0);
  CHECK(bot[2] == 1.0);
}
