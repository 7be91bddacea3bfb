#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "cqsres/errors.hpp"
#include "cqsres/hj.hpp"
#include "cqsres/wahl.hpp"

using namespace cqsres;

namespace {

Fraction F(long d, long o) { return make_fraction(d, o); }

HJString S(std::initializer_list<long> xs) {
  HJString s;
  for (long x : xs) s.push_back(x);
  return s;
}

// Contract the single 1 at position i, decrementing its neighbours.
HJString contract_at(const HJString& s, std::size_t i) {
  HJString out;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (j == i) continue;
    Int v = s[j];
    if (j + 1 == i || j == i + 1) v -= 1;
    out.push_back(v);
  }
  return out;
}

// Rightmost-first variant of blow_down, for the confluence check.
HJString blow_down_rightmost(HJString s) {
  for (;;) {
    std::size_t i = s.size();
    while (i-- > 0)
      if (s[i] == 1) break;
    if (i == static_cast<std::size_t>(-1)) return s;
    if (s.size() == 1) return {};
    s = contract_at(s, i);
  }
}

}  // namespace

TEST_CASE("expansion of standard fractions") {
  CHECK(hj_expand(F(19, 7)) == S({3, 4, 2}));
  CHECK(hj_expand(F(89, 33)) == S({3, 4, 2, 2, 4}));
  CHECK(hj_expand(F(85, 49)) == S({2, 4, 5, 2, 2}));
  CHECK(hj_expand(F(2, 1)) == S({2}));
  CHECK(hj_expand(F(4, 3)) == S({2, 2, 2}));
  CHECK(hj_expand(Fraction::smooth()).empty());
}

TEST_CASE("duals") {
  CHECK(hj_dual(F(19, 7)) == S({2, 3, 2, 3}));
  CHECK(hj_dual(F(89, 33)) == S({2, 3, 2, 5, 2, 2}));
  CHECK(hj_dual(F(85, 49)) == S({3, 2, 3, 2, 2, 4}));
  CHECK(hj_dual(F(5, 4)) == S({5}));
  CHECK(hj_dual(F(2, 1)) == S({2}));
}

TEST_CASE("evaluation") {
  CHECK(hj_eval({}) == std::pair<Int, Int>{1, 0});
  CHECK(hj_eval(S({1, 1})) == std::pair<Int, Int>{0, 1});
  CHECK(hj_eval(S({0})) == std::pair<Int, Int>{0, 1});
  CHECK(hj_eval(S({3, 4, 2})) == std::pair<Int, Int>{19, 7});
  CHECK(hj_eval(S({2, 3, 2, 3})) == std::pair<Int, Int>{19, 12});
  CHECK(hj_eval(S({2, 2, 2})) == std::pair<Int, Int>{4, 3});
}

TEST_CASE("fraction validation") {
  CHECK_THROWS_AS(make_fraction(4, 2), Error);
  CHECK_THROWS_AS(make_fraction(3, 3), Error);
  CHECK_THROWS_AS(make_fraction(1, 1), Error);
  CHECK_THROWS_AS(make_fraction(0, 0), Error);
  CHECK(make_fraction(1, 0).is_smooth());
}

TEST_CASE("expand/eval round trip and dual involution up to 300") {
  for (long d = 2; d <= 300; ++d) {
    for (long o = 1; o < d; ++o) {
      if (std::gcd(d, o) != 1) continue;
      Fraction f = F(d, o);
      HJString e = hj_expand(f);
      for (const Int& x : e) CHECK(x >= 2);
      CHECK(hj_eval(e) == std::pair<Int, Int>{f.delta, f.omega});
      CHECK(hj_eval(hj_dual(f)) == std::pair<Int, Int>{Int(d), Int(d - o)});
    }
  }
}

TEST_CASE("riemenschneider point rule up to 300") {
  for (long d = 2; d <= 300; ++d)
    for (long o = 1; o < d; ++o)
      if (std::gcd(d, o) == 1) CHECK(riemenschneider_zero(F(d, o)));
}

TEST_CASE("blow down examples") {
  CHECK(blow_down(S({3, 5, 2, 1, 4})) == S({3, 4, 2}));
  CHECK(blow_down(S({1, 1})) == S({0}));
  CHECK(blow_down(S({1, 3, 1})).empty());
  CHECK(blow_down(S({1})).empty());
  CHECK(blow_down(S({2, 1, 2})) == S({0}));
  CHECK(blow_down(S({1, 2, 2, 1})) == S({0}));
  CHECK(blow_down(S({3, 4, 2})) == S({3, 4, 2}));
  CHECK(blow_down({}).empty());
  // p_s = 0 alone does not make a string blow down to [0].
  CHECK(blow_down(S({1, 1, 1, 1, 1})) == S({-1, -1}));
}

TEST_CASE("blow down is idempotent and order independent") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    // A canonical string with a few 1s inserted stays in the regime the
    // resolution constructions use.
    long d = 2 + static_cast<long>(rng() % 200);
    long o = 1 + static_cast<long>(rng() % (d - 1));
    long g = std::gcd(d, o);
    d /= g;
    o /= g;
    if (d < 2) continue;
    HJString s = hj_expand(F(d, o));
    int ones = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < ones; ++t) {
      std::size_t at = rng() % (s.size() + 1);
      s.insert(s.begin() + at, 1);
      if (at > 0) s[at - 1] += 1;
      if (at + 1 < s.size()) s[at + 1] += 1;
    }
    HJString once = blow_down(s);
    CHECK(blow_down(once) == once);
    CHECK(blow_down_rightmost(s) == once);
  }
}

TEST_CASE("interior contraction preserves evaluation") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    long d = 2 + static_cast<long>(rng() % 150);
    long o = 1 + static_cast<long>(rng() % (d - 1));
    if (std::gcd(d, o) != 1) continue;
    HJString s = hj_expand(F(d, o));
    if (s.size() < 2) continue;
    std::size_t at = 1 + rng() % (s.size() - 1);
    s.insert(s.begin() + at, 1);
    s[at - 1] += 1;
    s[at + 1] += 1;
    CHECK(hj_eval(contract_at(s, at)) == hj_eval(s));
  }
}

TEST_CASE("hj string parsing and formatting") {
  CHECK(format_hj(S({3, 4, 2})) == "[3,4,2]");
  CHECK(format_hj({}) == "[]");
  CHECK(parse_hj("[3,4,2]") == S({3, 4, 2}));
  CHECK(parse_hj("[]").empty());
  CHECK(parse_hj("[0]") == S({0}));
  CHECK_THROWS_AS(parse_hj("3,4,2"), SyntaxError);
  CHECK_THROWS_AS(parse_hj("[3,4,2"), SyntaxError);
  CHECK_THROWS_AS(parse_hj("[3,,2]"), SyntaxError);
  CHECK_THROWS_AS(parse_hj("[3,4,2] "), SyntaxError);

  CHECK(format_fraction(F(19, 7)) == "19/7");
  CHECK(parse_fraction("19/7") == F(19, 7));
  CHECK(parse_fraction("1/0").is_smooth());
  CHECK_THROWS_AS(parse_fraction("19/"), SyntaxError);
  CHECK_THROWS_AS(parse_fraction("4/2"), SyntaxError);
}

TEST_CASE("wahl strings") {
  CHECK(wahl_cf(make_wahl(2, 1)) == S({4}));
  CHECK(wahl_cf(make_wahl(3, 1)) == S({5, 2}));
  CHECK(wahl_cf(make_wahl(3, 2)) == S({2, 5}));
  CHECK(wahl_cf(make_wahl(5, 2)) == S({3, 5, 2}));
  CHECK(wahl_cf(make_wahl(4, 3)) == S({2, 2, 6}));
  CHECK(wahl_cf(make_wahl(8, 3)) == S({3, 5, 3, 2}));
  CHECK(wahl_cf(make_wahl(17, 4)) == S({5, 2, 2, 7, 2, 2, 2}));
  CHECK(wahl_cf(make_wahl(26, 15)) == S({2, 4, 6, 2, 3, 2, 3}));
  CHECK(wahl_cf(WahlSingularity::smooth()).empty());

  CHECK(wahl_cf_dual(make_wahl(2, 1)) == S({2, 2, 2}));
  CHECK(wahl_cf_dual(make_wahl(3, 1)) == S({2, 2, 2, 3}));

  CHECK_THROWS_AS(make_wahl(4, 2), Error);
  CHECK_THROWS_AS(make_wahl(3, 0), Error);
  CHECK_THROWS_AS(make_wahl(3, 3), Error);
}

TEST_CASE("wahl string recognition round trip") {
  for (long n = 2; n <= 60; ++n)
    for (long a = 1; a < n; ++a) {
      if (std::gcd(n, a) != 1) continue;
      WahlSingularity w = make_wahl(n, a);
      auto back = parse_wahl(wahl_cf(w));
      REQUIRE(back.has_value());
      CHECK(*back == w);
    }
  CHECK(parse_wahl({}) == WahlSingularity::smooth());
  CHECK_FALSE(parse_wahl(S({2, 2})).has_value());
  CHECK_FALSE(parse_wahl(S({3, 4, 2})).has_value());
  CHECK_FALSE(parse_wahl(S({4, 1, 4})).has_value());
}

TEST_CASE("T-singularity recognition") {
  auto t = parse_T(F(4, 1));
  REQUIRE(t.has_value());
  CHECK(t->d == 1);
  CHECK(t->n == 2);
  CHECK(t->a == 1);

  t = parse_T(F(18, 5));
  REQUIRE(t.has_value());
  CHECK(t->d == 2);
  CHECK(t->n == 3);
  CHECK(t->a == 1);

  CHECK_FALSE(parse_T(F(19, 7)).has_value());

  // Du Val fractions are the d n^2 = d case.
  t = parse_T(F(3, 2));
  REQUIRE(t.has_value());
  CHECK(t->d == 3);
  CHECK(t->n == 1);

  // Wahl singularities themselves: d = 1.
  t = parse_T(F(25, 14));
  REQUIRE(t.has_value());
  CHECK(t->d == 1);
  CHECK(t->n == 5);
  CHECK(t->a == 3);

  // The decomposition scan asserts uniqueness internally; exercise it.
  for (long d = 2; d <= 400; ++d)
    for (long o = 1; o < d; ++o)
      if (std::gcd(d, o) == 1) (void)parse_T(F(d, o));
}
