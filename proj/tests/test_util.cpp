#include <limits>

#include "doctest.h"
#include "hyperchrom/rational.hpp"
#include "hyperchrom/setops.hpp"

using namespace hyperchrom;

TEST_CASE("set helpers on sorted vectors") {
  const std::vector<int> a{1, 3, 5, 7};
  const std::vector<int> b{3, 4, 7, 9};
  const std::vector<int> c{2, 8};

  CHECK(is_sorted_unique(a));
  CHECK_FALSE(is_sorted_unique(std::vector<int>{1, 1, 2}));
  CHECK_FALSE(is_sorted_unique(std::vector<int>{2, 1}));

  CHECK(intersection_size(a, b) == 2);
  CHECK(intersection_size(a, c) == 0);
  CHECK(intersects(a, b));
  CHECK_FALSE(intersects(a, c));

  CHECK(set_intersection(a, b) == std::vector<int>{3, 7});
  CHECK(set_union(a, c) == std::vector<int>{1, 2, 3, 5, 7, 8});

  CHECK(contains(a, 5));
  CHECK_FALSE(contains(a, 4));

  // |a| + |b| - 2|a ∩ b|
  CHECK(sym_diff_distance(a, b) == 4);
  CHECK(sym_diff_distance(a, a) == 0);
  CHECK(sym_diff_distance(a, c) == 6);
}

TEST_CASE("rational normalization and printing") {
  CHECK(Rational(6, 4).str() == "3/2");
  CHECK(Rational(-6, 4).str() == "-3/2");
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(8, 2).str() == "4");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(21).str() == "21");
}

TEST_CASE("rational arithmetic is exact") {
  const Rational half(1, 2);
  const Rational third(1, 3);
  CHECK((half + third).str() == "5/6");
  CHECK((half - third).str() == "1/6");
  CHECK((half * third).str() == "1/6");
  CHECK((half / third).str() == "3/2");

  // (|Γ|+1)/(ar-1) · Δ₂ + 1 with |Γ|=3, ar=3, Δ₂=6.
  const Rational rhs = Rational(4, 2) * Rational(6) + Rational(1);
  CHECK(rhs == Rational(13));

  // 6 vs 17/3: an inequality a float check would get wrong by rounding.
  CHECK(Rational(17, 3) < Rational(6));
  CHECK_FALSE(Rational(6) <= Rational(17, 3));
}

TEST_CASE("rational comparisons and products use wide intermediates") {
  const Rational big(3037000499LL, 2);
  const Rational bigger(3037000500LL, 2);
  CHECK(big < bigger);
  CHECK(big != bigger);
  CHECK(big <= big);

  // Cross terms overflow int64 but cancel after reduction.
  const Rational x(1LL << 40, 3);
  CHECK((x * Rational(3, 1LL << 40)) == Rational(1));
  CHECK((x / x) == Rational(1));

  // A genuinely unrepresentable result must throw, not wrap.
  const Rational huge(std::numeric_limits<std::int64_t>::max(), 1);
  CHECK_THROWS_AS(huge * huge, std::overflow_error);
}
