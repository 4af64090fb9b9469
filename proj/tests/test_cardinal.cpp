#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "setmeter/cardinal.hpp"
#include "setmeter/error.hpp"
#include "setmeter/size_pair.hpp"

using namespace setmeter;

namespace {

SetModel points1d(std::initializer_list<int> coords) {
  std::vector<Point> pts;
  for (int c : coords) pts.push_back({Rational(c)});
  return SetModel(FinitePoints(1, std::move(pts)));
}

}  // namespace

TEST_CASE("cardinality is the self-cover pair (S, 1)") {
  const CoverSize naturals = cardinality_of(SetModel(SymbolicNaturals{}));
  CHECK(naturals.to_text() == "(N, 1)");
  CHECK(naturals.count == MValue::finite(1));
  CHECK_FALSE(naturals.graduation1_count.has_value());

  const CoverSize finite = cardinality_of(points1d({0, 1, 2}));
  CHECK(finite.to_text() == "({0,1,2}, 1)");
  REQUIRE(finite.graduation1_count.has_value());
  CHECK(*finite.graduation1_count == 3);

  const CoverSize unmeasurable = cardinality_of_named("U");
  CHECK(unmeasurable.to_text() == "(U, 1)");
}

TEST_CASE("the naturals have size (r, w)") {
  const SizePair at_half = size_of_naturals(Scale::rational(Rational(1, 2)));
  CHECK(at_half.to_text() == "(1/2,w)");
  CHECK(at_half.count == MValue::omega());

  const SizePair at_limit = size_of_naturals(Scale::limit_zero());
  CHECK(at_limit.to_text() == "(0+,w)");
}

TEST_CASE("ch equation renders the hypothesis") {
  const ChEquation limit = ch_equation(Scale::limit_zero());
  CHECK(limit.equation == "(0+, 2^w) = (0+, 1/r) = 1");
  CHECK(limit.corollary == "w * (r, 2) = 1");
  CHECK(limit.hypothesis);

  const ChEquation at_rational = ch_equation(Scale::rational(Rational(1, 2)));
  CHECK(at_rational.equation == "(1/2, 2^w) = (1/2, 1/r) = 1");

  CHECK_THROWS_AS((void)ch_equation(Scale::rational(Rational(2))), Error);
}

TEST_CASE("ch numeric consistency: dimension of (r, ceil(1/r)) approaches 1") {
  double previous_gap = 1.0;
  Rational r(1);
  for (int k = 1; k <= 12; ++k) {
    r /= 10;
    const BigInt n = ceil_rational(1 / r);
    const double value =
        dimension(SizePair(Scale::rational(r), MValue::finite(n)));
    const double gap = std::abs(value - 1.0);
    CHECK(gap <= previous_gap + 1e-15);  // monotone convergence
    previous_gap = gap;
    if (k == 12) CHECK(gap < 1e-9);
  }
}

TEST_CASE("gch dimension sequence renders the canonical tokens") {
  const auto terms = gch_dimension_sequence(4);
  REQUIRE(terms.size() == 4);
  CHECK(terms[0].to_text() == "ln w/ln(1/r)");
  CHECK(terms[1].to_text() == "1");
  CHECK(terms[2].to_text() == "2^w/w");
  CHECK(terms[3].to_text() == "2^(2^w)/w");

  CHECK(gch_dimension_sequence(1).size() == 1);
  CHECK(gch_dimension_sequence(1)[0].to_text() == "ln w/ln(1/r)");

  // the third infinity rewrites through 2^w * (r,2): count ratio 2^(2^w)/w
  const MValue third = MValue::pow2_node(MValue::pow2_node(MValue::omega()));
  CHECK(terms[3].num() == third);
  CHECK(terms[3].den() == MValue::omega());
}

TEST_CASE("gch sequence prefixes are stable") {
  const auto longest = gch_dimension_sequence(11);
  for (int n = 1; n <= 10; ++n) {
    const auto prefix = gch_dimension_sequence(n);
    REQUIRE(prefix.size() == static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      CHECK(prefix[i].to_text() == longest[i].to_text());
    }
  }
}

TEST_CASE("equal cardinality for finite sets and the naturals") {
  CHECK(equal_cardinality(points1d({1, 2, 3}), points1d({4, 5, 6})));
  CHECK(equal_cardinality(SetModel(SymbolicNaturals{}),
                          SetModel(SymbolicNaturals{})));
  CHECK_FALSE(equal_cardinality(points1d({1, 2}), points1d({1, 2, 3})));
  CHECK_THROWS_AS(
      (void)equal_cardinality(ifs_preset("cantor"), points1d({1})), Error);
}

TEST_CASE("equal cardinality agrees with direct point counting") {
  std::mt19937_64 rng(307);
  for (int trial = 0; trial < 1000; ++trial) {
    const int na = int(rng() % 30);
    const int nb = int(rng() % 30);
    std::vector<Point> a, b;
    for (int i = 0; i < na; ++i) a.push_back({Rational(i), Rational(2 * i)});
    for (int i = 0; i < nb; ++i) b.push_back({Rational(-i), Rational(i * i)});
    const SetModel sa{FinitePoints(2, a)};
    const SetModel sb{FinitePoints(2, b)};
    CHECK(equal_cardinality(sa, sb) == (na == nb));
  }
}
