#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "adeweyl/cartan.hpp"

using namespace adeweyl;

namespace {

std::vector<CartanDatum> sample_data() {
  std::vector<CartanDatum> out;
  for (int n = 1; n <= 4; ++n) out.emplace_back(Series::A, n);
  out.emplace_back(Series::D, 4);
  out.emplace_back(Series::D, 5);
  out.emplace_back(Series::E, 6);
  return out;
}

Weight random_weight(const CartanDatum& d, std::mt19937& rng, int64_t span) {
  std::uniform_int_distribution<int64_t> dist(-span, span);
  std::vector<int64_t> coords(static_cast<size_t>(d.rank()));
  for (auto& c : coords) c = dist(rng);
  return Weight(std::move(coords));
}

}  // namespace

TEST_CASE("rank validation follows the series restrictions") {
  CHECK_THROWS_AS(CartanDatum(Series::A, 0), std::invalid_argument);
  CHECK_THROWS_AS(CartanDatum(Series::D, 3), std::invalid_argument);
  CHECK_THROWS_AS(CartanDatum(Series::E, 5), std::invalid_argument);
  CHECK_THROWS_AS(CartanDatum(Series::E, 9), std::invalid_argument);
  CHECK_NOTHROW(CartanDatum(Series::A, 1));
  CHECK_NOTHROW(CartanDatum(Series::D, 4));
  CHECK_NOTHROW(CartanDatum(Series::E, 6));
  CHECK_NOTHROW(CartanDatum(Series::E, 7));
  CHECK_NOTHROW(CartanDatum(Series::E, 8));
}

TEST_CASE("series letters round trip") {
  CHECK(series_from_letter('A') == Series::A);
  CHECK(series_from_letter('d') == Series::D);
  CHECK(series_letter(Series::E) == 'E');
  CHECK_THROWS_AS(series_from_letter('B'), std::invalid_argument);
}

TEST_CASE("positive root counts match the classical values") {
  // Classical counts: A_n has n(n+1)/2, D_n has n(n-1), E6/E7/E8 have
  // 36, 63, 120.
  for (int n = 1; n <= 5; ++n) {
    CHECK(CartanDatum(Series::A, n).positive_roots().size() ==
          static_cast<size_t>(n * (n + 1) / 2));
  }
  CHECK(CartanDatum(Series::D, 4).positive_roots().size() == 12);
  CHECK(CartanDatum(Series::D, 5).positive_roots().size() == 20);
  CHECK(CartanDatum(Series::E, 6).positive_roots().size() == 36);
  CHECK(CartanDatum(Series::E, 7).positive_roots().size() == 63);
  CHECK(CartanDatum(Series::E, 8).positive_roots().size() == 120);
}

TEST_CASE("every positive root has squared length 2") {
  for (const CartanDatum& d : sample_data()) {
    CAPTURE(d.name());
    std::set<RootElem> seen;
    int height_one = 0;
    for (const RootElem& alpha : d.positive_roots()) {
      CHECK(d.pairing(alpha, alpha) == 2);
      CHECK(alpha.is_nonnegative());
      CHECK(!alpha.is_zero());
      seen.insert(alpha);
      if (alpha.height() == 1) ++height_one;
    }
    CHECK(seen.size() == d.positive_roots().size());
    CHECK(height_one == d.rank());
    CHECK(std::is_sorted(d.positive_roots().begin(), d.positive_roots().end(),
                         [](const RootElem& x, const RootElem& y) {
                           return std::pair(x.height(), x.coords()) <
                                  std::pair(y.height(), y.coords());
                         }));
  }
}

TEST_CASE("the cartan matrix inverse is exact") {
  for (const CartanDatum& d : sample_data()) {
    CAPTURE(d.name());
    int n = d.rank();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Rational sum = 0;
        for (int k = 0; k < n; ++k) {
          sum += Rational(d.cartan()[static_cast<size_t>(i)]
                                    [static_cast<size_t>(k)]) *
                 d.cartan_inverse()[static_cast<size_t>(k)]
                                   [static_cast<size_t>(j)];
        }
        CHECK(sum == (i == j ? 1 : 0));
      }
    }
  }
}

TEST_CASE("edge lists match the Bourbaki diagrams") {
  using E = std::vector<std::pair<int, int>>;
  CHECK(CartanDatum(Series::A, 3).edges() == E{{0, 1}, {1, 2}});
  CHECK(CartanDatum(Series::D, 4).edges() == E{{0, 1}, {1, 2}, {1, 3}});
  CHECK(CartanDatum(Series::D, 5).edges() ==
        E{{0, 1}, {1, 2}, {2, 3}, {2, 4}});
  CHECK(CartanDatum(Series::E, 6).edges() ==
        E{{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}});
  CHECK(CartanDatum(Series::E, 8).edges() ==
        E{{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
}

TEST_CASE("minuscule node lists") {
  CHECK(CartanDatum(Series::A, 3).minuscule_nodes() ==
        std::vector<int>{0, 1, 2});
  CHECK(CartanDatum(Series::D, 4).minuscule_nodes() ==
        std::vector<int>{0, 2, 3});
  CHECK(CartanDatum(Series::D, 5).minuscule_nodes() ==
        std::vector<int>{0, 3, 4});
  CHECK(CartanDatum(Series::E, 6).minuscule_nodes() == std::vector<int>{0, 5});
  CHECK(CartanDatum(Series::E, 7).minuscule_nodes() == std::vector<int>{6});
  CHECK(CartanDatum(Series::E, 8).minuscule_nodes().empty());
}

TEST_CASE("the invariant form pairs fundamental weights with simple roots") {
  for (const CartanDatum& d : sample_data()) {
    CAPTURE(d.name());
    for (int i = 0; i < d.rank(); ++i) {
      std::vector<int64_t> unit(static_cast<size_t>(d.rank()), 0);
      unit[static_cast<size_t>(i)] = 1;
      RootElem alpha_i(unit);
      for (int j = 0; j < d.rank(); ++j) {
        CHECK(d.pairing(d.fundamental_weight(j), alpha_i) == (i == j ? 1 : 0));
      }
      CHECK(d.pairing(d.rho(), alpha_i) == 1);
      CHECK(d.pairing(d.root_to_weight(alpha_i), alpha_i) == 2);
    }
  }
}

TEST_CASE("pairing agrees across the three overloads") {
  std::mt19937 rng(20240817);
  for (const CartanDatum& d : sample_data()) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto& roots = d.positive_roots();
      const RootElem& a =
          roots[rng() % roots.size()];
      const RootElem& b = roots[rng() % roots.size()];
      CHECK(Rational(d.pairing(a, b)) ==
            d.pairing(d.root_to_weight(a), d.root_to_weight(b)));
      Weight w = random_weight(d, rng, 3);
      CHECK(Rational(d.pairing(w, a)) == d.pairing(w, d.root_to_weight(a)));
    }
  }
}

TEST_CASE("root coordinate conversions round trip") {
  for (const CartanDatum& d : sample_data()) {
    CAPTURE(d.name());
    for (const RootElem& alpha : d.positive_roots()) {
      Weight w = d.root_to_weight(alpha);
      auto back = d.to_root_element(w);
      REQUIRE(back.has_value());
      CHECK(*back == alpha);
    }
    CHECK(!d.to_root_element(d.fundamental_weight(0)).has_value() ==
          (d.series() != Series::E || d.rank() != 8));
  }
}

TEST_CASE("simple reflections are involutions that preserve the form") {
  std::mt19937 rng(97);
  for (const CartanDatum& d : sample_data()) {
    CAPTURE(d.name());
    for (int trial = 0; trial < 15; ++trial) {
      Weight w = random_weight(d, rng, 4);
      for (int i = 0; i < d.rank(); ++i) {
        Weight once = d.simple_reflection(i, w);
        CHECK(d.simple_reflection(i, once) == w);
        CHECK(d.pairing(once, once) == d.pairing(w, w));
      }
    }
    for (int i = 0; i < d.rank(); ++i) {
      for (int j = 0; j < d.rank(); ++j) {
        Weight image = d.simple_reflection(i, d.fundamental_weight(j));
        if (i == j) {
          std::vector<int64_t> unit(static_cast<size_t>(d.rank()), 0);
          unit[static_cast<size_t>(i)] = 1;
          CHECK(image ==
                d.fundamental_weight(j) - d.root_to_weight(RootElem(unit)));
        } else {
          CHECK(image == d.fundamental_weight(j));
        }
      }
    }
  }
}

TEST_CASE("dominant_conjugate lands in the dominant chamber") {
  std::mt19937 rng(4242);
  for (const CartanDatum& d : sample_data()) {
    CAPTURE(d.name());
    for (int trial = 0; trial < 25; ++trial) {
      Weight w = random_weight(d, rng, 5);
      Weight dom = d.dominant_conjugate(w);
      CHECK(d.is_dominant(dom));
      CHECK(d.dominant_conjugate(dom) == dom);
      CHECK(d.pairing(dom, dom) == d.pairing(w, w));
      auto diff = d.to_root_element(dom - w);
      CHECK(diff.has_value());
    }
  }
}

TEST_CASE("weyl orbit sizes match the classical group orders") {
  // |W(A2)| = 6, |W(A3)| = 24, |W(D4)| = 192; a regular weight has a
  // free orbit and omega_1 has orbit size rank + 1 in A_n, 2n in D_n.
  CartanDatum a2(Series::A, 2);
  CHECK(a2.weyl_orbit(Weight({1, 1})).size() == 6);
  CHECK(a2.weyl_orbit(Weight({1, 0})).size() == 3);
  CHECK(a2.weyl_orbit(Weight({0, 0})).size() == 1);
  CartanDatum a3(Series::A, 3);
  CHECK(a3.weyl_orbit(Weight({1, 1, 1})).size() == 24);
  CHECK(a3.weyl_orbit(Weight({1, 0, 0})).size() == 4);
  CHECK(a3.weyl_orbit(Weight({0, 1, 0})).size() == 6);
  CartanDatum d4(Series::D, 4);
  CHECK(d4.weyl_orbit(Weight({1, 1, 1, 1})).size() == 192);
  CHECK(d4.weyl_orbit(Weight({1, 0, 0, 0})).size() == 8);
  CHECK(d4.weyl_orbit(Weight({0, 1, 0, 0})).size() == 24);
}

TEST_CASE("orbit members are conjugate to the dominant representative") {
  CartanDatum d4(Series::D, 4);
  Weight lambda({1, 0, 1, 0});
  auto orbit = d4.weyl_orbit(lambda);
  CHECK(std::is_sorted(orbit.begin(), orbit.end()));
  for (const Weight& w : orbit) {
    CHECK(d4.dominant_conjugate(w) == d4.dominant_conjugate(lambda));
  }
}

TEST_CASE("dominant_weights_below lists exactly the dominant cone section") {
  CartanDatum a1(Series::A, 1);
  CHECK(a1.dominant_weights_below(Weight({4})) ==
        std::vector<Weight>{Weight({4}), Weight({2}), Weight({0})});
  CHECK(a1.dominant_weights_below(Weight({3})) ==
        std::vector<Weight>{Weight({3}), Weight({1})});

  CartanDatum a2(Series::A, 2);
  CHECK(a2.dominant_weights_below(Weight({1, 1})) ==
        std::vector<Weight>{Weight({1, 1}), Weight({0, 0})});
  CHECK(a2.dominant_weights_below(Weight({2, 2})) ==
        std::vector<Weight>{Weight({2, 2}), Weight({0, 3}), Weight({3, 0}),
                            Weight({1, 1}), Weight({0, 0})});

  for (const CartanDatum& d : sample_data()) {
    CAPTURE(d.name());
    Weight lambda = d.fundamental_weight(0) + d.fundamental_weight(d.rank() - 1);
    for (const Weight& mu : d.dominant_weights_below(lambda)) {
      CHECK(d.is_dominant(mu));
      auto diff = d.to_root_element(lambda - mu);
      REQUIRE(diff.has_value());
      CHECK(diff->is_nonnegative());
    }
  }
}

TEST_CASE("weight helpers validate sizes and render coordinates") {
  CartanDatum a2(Series::A, 2);
  CHECK_THROWS_AS(a2.check_weight(Weight({1})), std::invalid_argument);
  CHECK_THROWS_AS(a2.check_root(RootElem({1, 2, 3})), std::invalid_argument);
  CHECK(Weight({2, 0}).to_string() == "[2,0]");
  CHECK(RootElem({1, -1}).to_string() == "[1,-1]");
  CHECK(Weight({1, -2}) + Weight({0, 3}) == Weight({1, 1}));
  CHECK(RootElem({2, 1}).height() == 3);
  CHECK(!RootElem({1, -1}).is_nonnegative());
}

TEST_CASE("budgets abort oversized orbit enumerations") {
  CartanDatum d4(Series::D, 4);
  Budget tiny(10);
  CHECK_THROWS_AS(d4.weyl_orbit(Weight({1, 1, 1, 1}), &tiny), BudgetExceeded);
}
