#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "setmeter/error.hpp"
#include "setmeter/size_pair.hpp"

using namespace setmeter;

namespace {

SizePair pair(int num, int den, std::uint64_t count) {
  return SizePair(Scale::rational(Rational(num, den)), MValue::finite(count));
}

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return errc::invalid_value;
}

bool leq(const SizePair& a, const SizePair& b) {
  const auto order = compare(a, b);
  return order == std::partial_ordering::less ||
         order == std::partial_ordering::equivalent;
}

}  // namespace

TEST_CASE("addition needs a shared scale") {
  CHECK(pair(1, 2, 3) + pair(1, 2, 4) == pair(1, 2, 7));
  CHECK(pair(1, 3, 0) + pair(1, 3, 5) == pair(1, 3, 5));
  CHECK(code_of([] { pair(1, 2, 3) + pair(1, 3, 4); }) == errc::scale_mismatch);
}

TEST_CASE("subtraction mirrors the value-class rules") {
  CHECK(pair(1, 2, 7) - pair(1, 2, 4) == pair(1, 2, 3));
  CHECK((pair(1, 2, 4) - pair(1, 2, 4)).is_zero());
  CHECK(code_of([] { pair(1, 2, 4) - pair(1, 2, 7); }) == errc::underflow);
  CHECK(code_of([] { pair(1, 2, 4) - pair(1, 3, 1); }) == errc::scale_mismatch);
}

TEST_CASE("multiplication squares the scale") {
  CHECK(pair(1, 2, 2) * pair(1, 2, 2) == pair(1, 4, 4));
  CHECK(pair(1, 3, 1) * pair(1, 3, 5) == pair(1, 9, 5));
  CHECK((pair(1, 2, 0) * pair(1, 2, 9)) == pair(1, 4, 0));
  const SizePair limit(Scale::limit_zero(), MValue::finite(2));
  CHECK(code_of([&] { (void)mul(limit, limit); }) ==
        errc::limit_scale_unsupported);
}

TEST_CASE("multiplication preserves the dimension log-law") {
  // (1/2,2)*(1/2,2) = (1/4,4); both sides have dimension 1
  CHECK(dimension(pair(1, 2, 2)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(dimension(pair(1, 4, 4)) == doctest::Approx(1.0).epsilon(1e-12));

  // ln counts and ln inverse scales both add: 2*dim(x*y) = dim(x) + dim(y)
  std::mt19937_64 rng(211);
  for (int i = 0; i < 500; ++i) {
    const int den = 2 + int(rng() % 40);
    const SizePair x = pair(1, den, 2 + rng() % 4000);
    const SizePair y = pair(1, den, 2 + rng() % 4000);
    CHECK(2 * dimension(mul(x, y)) ==
          doctest::Approx(dimension(x) + dimension(y)).epsilon(1e-12));
    CHECK(dimension(mul(x, x)) == doctest::Approx(dimension(x)).epsilon(1e-12));
  }
}

TEST_CASE("scalar application raises the count") {
  CHECK(scalar_mul(Rational(2), pair(1, 2, 3)) == pair(1, 2, 9));
  CHECK(code_of([] { scalar_mul(Rational(3), pair(1, 3, 1)); }) ==
        errc::unit_count_excluded);

  // 16^(1/2) = 4, verified by the independent root oracle
  const BigInt root = 4;
  REQUIRE(root * root == BigInt(16));
  CHECK(scalar_mul(Rational(1, 2), pair(1, 4, 16)) == pair(1, 4, 4));

  CHECK(code_of([] { scalar_mul(Rational(1, 2), pair(1, 4, 15)); }) ==
        errc::non_integer_power);
  CHECK(code_of([] {
          scalar_mul(Rational(1, 3),
                     SizePair(Scale::rational(Rational(1, 2)), MValue::omega()));
        }) == errc::symbolic_unsupported);
}

TEST_CASE("distance examples") {
  CHECK(distance(pair(1, 2, 7), pair(1, 2, 7)).is_zero());
  CHECK(distance(pair(1, 2, 3), pair(1, 2, 8)) == pair(1, 2, 5));
  CHECK(distance(pair(1, 2, 8), pair(1, 2, 3)) == pair(1, 2, 5));
  CHECK(code_of([] { distance(pair(1, 2, 3), pair(1, 3, 3)); }) ==
        errc::scale_mismatch);
}

TEST_CASE("metric axioms over random same-scale triples") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 2000; ++i) {
    const int den = 2 + int(rng() % 30);
    const auto n = [&] { return rng() % 1000; };
    const SizePair x = pair(1, den, n());
    const SizePair y = pair(1, den, n());
    const SizePair z = pair(1, den, n());

    CHECK(distance(x, y).is_zero() == (x == y));
    CHECK(distance(x, y) == distance(y, x));
    CHECK(leq(distance(x, y), distance(x, z) + distance(z, y)));
  }
}

TEST_CASE("pair addition is commutative and associative with zero identity") {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 500; ++i) {
    const int den = 2 + int(rng() % 9);
    const SizePair x = pair(1, den, rng() % 100);
    const SizePair y = pair(1, den, rng() % 100);
    const SizePair z = pair(1, den, rng() % 100);
    CHECK(x + y == y + x);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x + pair(1, den, 0) == x);
  }
}

TEST_CASE("dimension matches direct logarithm evaluation") {
  CHECK(dimension(pair(1, 27, 8)) ==
        doctest::Approx(std::log(8.0) / std::log(27.0)).epsilon(1e-12));
  CHECK(dimension(pair(1, 27, 8)) ==
        doctest::Approx(std::log(2.0) / std::log(3.0)).epsilon(1e-12));
  CHECK(dimension(pair(1, 10, 10)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(dimension(pair(1, 4, 16)) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("dimension rejects degenerate inputs") {
  CHECK(code_of([] { dimension(pair(1, 2, 0)); }) == errc::degenerate_count);
  CHECK(code_of([] { dimension(pair(1, 2, 1)); }) == errc::degenerate_count);
  CHECK(code_of([] { dimension(pair(3, 2, 5)); }) == errc::scale_not_sub_unit);
  CHECK(code_of([] { dimension(pair(1, 1, 5)); }) == errc::scale_not_sub_unit);
  CHECK(code_of([] {
          dimension(SizePair(Scale::limit_zero(), MValue::finite(5)));
        }) == errc::limit_scale_unsupported);
}

TEST_CASE("comparison works at shared scales only") {
  CHECK(compare(pair(1, 2, 1), pair(1, 2, 0)) == std::partial_ordering::greater);
  CHECK(compare(pair(1, 2, 5), pair(1, 2, 5)) == std::partial_ordering::equivalent);
  CHECK(compare(pair(1, 2, 5), pair(1, 3, 5)) == std::partial_ordering::unordered);

  // transitivity at a shared scale
  std::mt19937_64 rng(107);
  for (int i = 0; i < 500; ++i) {
    const SizePair x = pair(1, 7, rng() % 50);
    const SizePair y = pair(1, 7, rng() % 50);
    const SizePair z = pair(1, 7, rng() % 50);
    if (compare(x, y) == std::partial_ordering::greater &&
        compare(y, z) == std::partial_ordering::greater) {
      CHECK(compare(x, z) == std::partial_ordering::greater);
    }
  }
}

TEST_CASE("zero pairs are the same size at every scale") {
  CHECK(pair(1, 2, 0) == pair(1, 3, 0));
  CHECK(compare(pair(1, 2, 0), pair(1, 3, 0)) ==
        std::partial_ordering::equivalent);
}

TEST_CASE("density witness at shared scale") {
  std::mt19937_64 rng(109);
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t na = rng() % 1000;
    const std::uint64_t nb = rng() % 1000;
    if (na == nb || (na > nb ? na - nb : nb - na) < 2) continue;
    const SizePair a = pair(1, 5, std::min(na, nb));
    const SizePair b = pair(1, 5, std::max(na, nb));
    const SizePair mid = pair(1, 5, (na + nb) / 2);
    CHECK(compare(a, mid) == std::partial_ordering::less);
    CHECK(compare(mid, b) == std::partial_ordering::less);
  }
}

TEST_CASE("symbolic counts flow through pair arithmetic") {
  const SizePair naturals(Scale::rational(Rational(1, 2)), MValue::omega());
  const SizePair sum = naturals + naturals;
  CHECK(sum.count.kind() == MValue::Kind::sum);
  CHECK(code_of([&] { (void)(naturals - naturals); }) ==
        errc::symbolic_unsupported);
}

TEST_CASE("rendering and parsing") {
  CHECK(pair(1, 2, 7).to_text() == "(1/2,7)");
  CHECK(SizePair(Scale::limit_zero(), MValue::omega()).to_text() == "(0+,w)");
  CHECK(parse_size_pair("(1/2,7)") == pair(1, 2, 7));
  CHECK(parse_size_pair(" ( 1/2 , (w+w) ) ") ==
        SizePair(Scale::rational(Rational(1, 2)),
                 MValue::sum_node(MValue::omega(), MValue::omega())));
  CHECK(parse_size_pair("(0+,w)").scale.is_limit_zero());
  CHECK(code_of([] { parse_size_pair("(1/2)"); }) == errc::parse_error);
  CHECK(code_of([] { parse_size_pair("(0,3)"); }) == errc::invalid_value);
}
