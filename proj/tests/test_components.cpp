#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "cqsres/components.hpp"
#include "cqsres/errors.hpp"

using namespace cqsres;

namespace {

Fraction F(long d, long o) { return make_fraction(d, o); }
HJString S(std::initializer_list<long> xs) { return HJString(xs.begin(), xs.end()); }

std::vector<HJString> ks(const Fraction& f) {
  std::vector<HJString> out;
  for (const ZeroFraction& z : enumerate_zero_fractions(f)) out.push_back(z.k);
  return out;
}

std::vector<Int> deltas(const ZeroFraction& z) { return delta_vector(z).delta; }

}  // namespace

TEST_CASE("zero continued fraction predicate") {
  CHECK(is_zero_fraction(S({0})));
  CHECK(is_zero_fraction(S({1, 1})));
  CHECK(is_zero_fraction(S({1, 2, 1})));
  CHECK(is_zero_fraction(S({2, 1, 2})));
  CHECK(is_zero_fraction(S({1, 2, 2, 1})));
  CHECK(is_zero_fraction(S({2, 2, 1, 3})));
  CHECK(is_zero_fraction(S({3, 1, 2, 2})));
  CHECK_FALSE(is_zero_fraction(S({})));
  CHECK_FALSE(is_zero_fraction(S({1})));
  CHECK_FALSE(is_zero_fraction(S({2, 2})));
  CHECK_FALSE(is_zero_fraction(S({1, 3, 2, 1})));
  // p_s = 0 alone is not enough: this one has an intermediate p_i = 0.
  CHECK_FALSE(is_zero_fraction(S({1, 1, 1, 1, 1})));
}

TEST_CASE("zero fraction enumeration anchors") {
  CHECK(ks(F(19, 7)) ==
        std::vector<HJString>{S({1, 2, 2, 1}), S({1, 3, 1, 2}), S({2, 2, 1, 3})});
  CHECK(ks(F(85, 49)) ==
        std::vector<HJString>{S({1, 2, 2, 2, 2, 1}), S({1, 2, 3, 2, 1, 3}),
                              S({2, 1, 3, 2, 2, 1}), S({2, 2, 3, 1, 2, 4}),
                              S({3, 1, 3, 2, 1, 4})});
  CHECK(ks(F(4, 1)) == std::vector<HJString>{S({1, 2, 1}), S({2, 1, 2})});

  std::vector<HJString> k89 = ks(F(89, 33));
  CHECK(std::find(k89.begin(), k89.end(), S({2, 2, 1, 5, 1, 2})) != k89.end());

  // Du Val: conventional k = [0] against b = [delta].
  std::vector<ZeroFraction> dv = enumerate_zero_fractions(F(4, 3));
  REQUIRE(dv.size() == 1);
  CHECK(dv[0].k == S({0}));
  CHECK(dv[0].b == S({4}));
  CHECK(is_du_val(F(4, 3)));
  CHECK_FALSE(is_du_val(F(19, 7)));
}

TEST_CASE("enumeration agrees with the blow-up construction") {
  for (long d = 2; d <= 40; ++d) {
    for (long o = 1; o < d; ++o) {
      if (std::gcd(d, o) != 1) continue;
      Fraction f = F(d, o);
      std::vector<ZeroFraction> zs = enumerate_zero_fractions(f);
      HJString b = hj_dual(f);
      std::vector<HJString> oracle =
          is_du_val(f) ? std::vector<HJString>{S({0})}
                       : reference::zero_fractions_by_blowup(b);
      REQUIRE(zs.size() == oracle.size());
      for (std::size_t i = 0; i < zs.size(); ++i) {
        CHECK(zs[i].k == oracle[i]);
        CHECK(zs[i].b == b);
        if (!is_du_val(f)) {
          REQUIRE(zs[i].k.size() == b.size());
          for (std::size_t j = 0; j < b.size(); ++j) {
            CHECK(zs[i].k[j] >= 1);
            CHECK(zs[i].k[j] <= b[j]);
          }
        }
      }
    }
  }
}

TEST_CASE("delta vectors") {
  std::vector<ZeroFraction> z19 = enumerate_zero_fractions(F(19, 7));
  CHECK(deltas(z19[0]) == std::vector<Int>{1, 2, 0});
  CHECK(deltas(z19[1]) == std::vector<Int>{3, 1});
  CHECK(deltas(z19[2]) == std::vector<Int>{1});

  DeltaVector d0 = delta_vector(z19[0]);
  CHECK(d0.eps == std::vector<Int>{0, 1, 0});

  std::vector<ZeroFraction> z85 = enumerate_zero_fractions(F(85, 49));
  CHECK(deltas(z85[0]) == std::vector<Int>{0, 2, 3, 0, 0});
  CHECK(delta_vector(z85[0]).eps == std::vector<Int>{0, 1, 2, 0, 0});
  CHECK(deltas(z85[1]) == std::vector<Int>{0, 8, 1});
  CHECK(deltas(z85[2]) == std::vector<Int>{1, 7, 0, 0});
  CHECK(deltas(z85[3]) == std::vector<Int>{5});
  CHECK(deltas(z85[4]) == std::vector<Int>{5});

  std::vector<ZeroFraction> z89 = enumerate_zero_fractions(F(89, 33));
  auto it = std::find_if(z89.begin(), z89.end(), [](const ZeroFraction& z) {
    return z.k == S({2, 2, 1, 5, 1, 2});
  });
  REQUIRE(it != z89.end());
  CHECK(deltas(*it) == std::vector<Int>{1, 5});
}

TEST_CASE("M-resolutions") {
  std::vector<ZeroFraction> z19 = enumerate_zero_fractions(F(19, 7));
  CHECK(print_chain(m_resolution(F(19, 7), z19[0])) == "*-(3)-*-(4)-*-(2)-*");
  CHECK(print_chain(m_resolution(F(19, 7), z19[1])) == "*-(3)-[2|1]-(2)-*");
  CHECK(print_chain(m_resolution(F(19, 7), z19[2])) == "[2|1]-(1)-[3|1]");

  std::vector<ZeroFraction> z85 = enumerate_zero_fractions(F(85, 49));
  CHECK(print_chain(m_resolution(F(85, 49), z85[0])) ==
        "*-(2)-*-(4)-*-(5)-*-(2)-*-(2)-*");
  CHECK(print_chain(m_resolution(F(85, 49), z85[1])) == "*-(2)-*-(4)-[3|1]-(2)-*");
  CHECK(print_chain(m_resolution(F(85, 49), z85[2])) ==
        "*-(2)-[2|1]-(5)-*-(2)-*-(2)-*");
  CHECK(print_chain(m_resolution(F(85, 49), z85[3])) == "*-(2)-[7|2]");
  CHECK(print_chain(m_resolution(F(85, 49), z85[4])) == "[3|2]-(1)-[4|1]");

  std::vector<ZeroFraction> z89 = enumerate_zero_fractions(F(89, 33));
  auto it = std::find_if(z89.begin(), z89.end(), [](const ZeroFraction& z) {
    return z.k == S({2, 2, 1, 5, 1, 2});
  });
  REQUIRE(it != z89.end());
  CHECK(print_chain(m_resolution(F(89, 33), *it)) == "[2|1]-(1)-[3|1]-(2)-[2|1]");

  std::vector<ZeroFraction> z4 = enumerate_zero_fractions(F(4, 1));
  CHECK(print_chain(m_resolution(F(4, 1), z4[0])) == "*-(4)-*");
  CHECK(print_chain(m_resolution(F(4, 1), z4[1])) == "[2|1]");
}

TEST_CASE("N-resolutions") {
  std::vector<ZeroFraction> z19 = enumerate_zero_fractions(F(19, 7));
  CHECK(print_chain(n_resolution(F(19, 7), z19[0])) ==
        "[8|3]-(1)-[8|3]-(1)-[2|1]-(1)-*");
  CHECK(print_chain(n_resolution(F(19, 7), z19[1])) == "[8|3]-(1)-[5|2]-(1)-*");
  CHECK(print_chain(n_resolution(F(19, 7), z19[2])) == "[5|2]-(1)-[2|1]");

  std::vector<ZeroFraction> z85 = enumerate_zero_fractions(F(85, 49));
  CHECK(print_chain(n_resolution(F(85, 49), z85[0])) ==
        "[26|15]-(1)-[26|15]-(1)-[26|15]-(1)-[5|3]-(1)-*-(2)-*");
  CHECK(print_chain(n_resolution(F(85, 49), z85[1])) ==
        "[26|15]-(1)-[19|11]-(1)-*-(2)-*");
  CHECK(print_chain(n_resolution(F(85, 49), z85[2])) ==
        "[26|15]-(1)-[26|15]-(1)-[26|15]-(1)-[3|2]-(1)-*");
  CHECK(print_chain(n_resolution(F(85, 49), z85[3])) == "[12|7]-(1)-*");
  CHECK(print_chain(n_resolution(F(85, 49), z85[4])) == "[19|11]-(1)-[3|2]");

  std::vector<ZeroFraction> z89 = enumerate_zero_fractions(F(89, 33));
  auto it = std::find_if(z89.begin(), z89.end(), [](const ZeroFraction& z) {
    return z.k == S({2, 2, 1, 5, 1, 2});
  });
  REQUIRE(it != z89.end());
  WahlResolution n89 = n_resolution(F(89, 33), *it);
  CHECK(print_chain(n89) == "[35|13]-(1)-[5|2]-(1)-[2|1]");

  // Anti-nef: every signed intersection is <= 0.
  for (std::size_t i = 1; i <= n89.r(); ++i) CHECK(delta_signed(n89, i) <= 0);

  // Stagewise agreement of partial contractions with the M-resolution.
  WahlResolution m89 = m_resolution(F(89, 33), *it);
  std::size_t r = m89.r();
  for (std::size_t i = 0; i <= r; ++i)
    CHECK(partial_contraction(m89, 0, i) == partial_contraction(n89, r - i, r));
}

TEST_CASE("component dimensions") {
  std::vector<ZeroFraction> z19 = enumerate_zero_fractions(F(19, 7));
  CHECK(component_dimension(m_resolution(F(19, 7), z19[0])) == 6);
  CHECK(component_dimension(m_resolution(F(19, 7), z19[1])) == 4);
  CHECK(component_dimension(m_resolution(F(19, 7), z19[2])) == 2);

  std::vector<Int> dims;
  for (const ComponentReport& rep : components(F(85, 49))) dims.push_back(rep.dimension);
  CHECK(dims == std::vector<Int>{10, 6, 8, 2, 2});
}

TEST_CASE("component reports") {
  std::vector<ComponentReport> reps = components(F(19, 7));
  REQUIRE(reps.size() == 3);
  CHECK(reps[0].artin);
  CHECK_FALSE(reps[1].artin);
  CHECK_FALSE(reps[2].artin);
  CHECK_FALSE(reps[0].du_val);
  CHECK(reps[0].dimension == 6);
  CHECK(reps[2].m_res.sings.size() == 2);
  CHECK(reps[2].n_res.sings.size() == 2);

  std::vector<ComponentReport> r4 = components(F(4, 1));
  REQUIRE(r4.size() == 2);
  CHECK(r4[0].artin);
  CHECK(r4[0].dimension == 3);
  CHECK(r4[1].dimension == 1);
  CHECK(r4[1].m_res.r() == 0);
  CHECK(r4[1].m_res.sings == std::vector<WahlSingularity>{make_wahl(2, 1)});
  CHECK(r4[1].n_res == r4[1].m_res);

  // Du Val: a single component whose two resolutions coincide with the
  // minimal resolution.
  std::vector<ComponentReport> rdv = components(F(4, 3));
  REQUIRE(rdv.size() == 1);
  CHECK(rdv[0].du_val);
  CHECK(rdv[0].artin);
  CHECK(print_chain(rdv[0].m_res) == "*-(2)-*-(2)-*-(2)-*");
  CHECK(rdv[0].n_res == rdv[0].m_res);
  CHECK(rdv[0].dimension == 3);

  CHECK_THROWS_AS(components(Fraction::smooth()), Error);
}

TEST_CASE("every component round-trips through both resolutions") {
  for (long d = 2; d <= 40; ++d) {
    for (long o = 1; o < d; ++o) {
      if (std::gcd(d, o) != 1) continue;
      Fraction f = F(d, o);
      std::vector<ComponentReport> reps = components(f);
      CHECK(!reps.empty());
      int artin = 0;
      for (const ComponentReport& rep : reps) {
        CHECK(rep.m_res.target == f);
        CHECK(rep.n_res.target == f);
        artin += rep.artin ? 1 : 0;
        for (std::size_t i = 1; i <= rep.n_res.r(); ++i)
          CHECK(delta_signed(rep.n_res, i) <= 0);
        CHECK(rep.dimension >= 1);
      }
      // Exactly one component carries the minimal resolution.
      CHECK(artin == 1);
    }
  }
}
