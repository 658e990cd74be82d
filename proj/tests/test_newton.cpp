#include <catch2/catch_amalgamated.hpp>

#include "monideal/newton.hpp"
#include "test_helpers.hpp"

using namespace monideal;
using test_helpers::ev;
using test_helpers::ideal;

namespace {

WeightVector weight(std::initializer_list<long> entries) {
  std::vector<mpq_class> w;
  for (long v : entries) w.emplace_back(v);
  return WeightVector(std::move(w));
}

/// Brute-force oracle: x^m integral over I iff (x^m)^rho lies in I^rho for
/// some rho up to the bound. Independent of the feasibility kernel.
bool rho_power_oracle(const MonomialIdeal& I, const ExponentVector& m, long long bound) {
  for (long long rho = 1; rho <= bound; ++rho)
    if (contains(power(I, rho), m.scaled(rho))) return true;
  return false;
}

}  // namespace

TEST_CASE("np_membership basics") {
  MonomialIdeal I = ideal(2, {{2, 0}, {0, 2}});
  CHECK(np_membership(I, ev({1, 1})));
  CHECK_FALSE(np_membership(I, ev({1, 0})));
  CHECK_FALSE(np_membership(MonomialIdeal::zero(2), ev({3, 3})));
  CHECK(np_membership(MonomialIdeal::unit(2), ev({0, 0})));
  CHECK_THROWS_AS(np_membership(I, ev({1, 1, 1})), DimensionError);
  // (a,b,c) = (1,3,4): YZ^2 is integral, via (YZ^2)^2 = Y^2 * Z^4
  MonomialIdeal T = ideal(3, {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {0, 0, 4}, {1, 0, 1}, {0, 1, 3}});
  CHECK(np_membership(T, ev({0, 1, 2})));
  CHECK_FALSE(contains(T, ev({0, 1, 2})));
}

TEST_CASE("certificates") {
  MonomialIdeal I = ideal(2, {{2, 0}, {0, 2}});
  auto cert = certificate(I, ev({1, 1}));
  REQUIRE(cert);
  CHECK(cert->rho == 2);
  CHECK(cert->factor_counts == std::map<std::size_t, long long>{{0, 1}, {1, 1}});
  CHECK(cert->slack == ev({0, 0}));
  CHECK(certificate_is_valid(I, ev({1, 1}), *cert));

  CHECK_FALSE(certificate(I, ev({1, 0})));
  CHECK_FALSE(certificate(MonomialIdeal::zero(2), ev({1, 1})));

  // YZ^2 over the (1,3,4) family ideal: rho = 2 through Y^2 and Z^4
  MonomialIdeal T = ideal(3, {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {0, 0, 4}, {1, 0, 1}, {0, 1, 3}});
  auto c2 = certificate(T, ev({0, 1, 2}));
  REQUIRE(c2);
  CHECK(c2->rho == 2);
  auto index_of = [&](const ExponentVector& g) {
    auto gens = T.generators();
    return static_cast<std::size_t>(std::ranges::find(gens, g) - gens.begin());
  };
  std::map<std::size_t, long long> expected{{index_of(ev({0, 2, 0})), 1},
                                            {index_of(ev({0, 0, 4})), 1}};
  CHECK(c2->factor_counts == expected);
  CHECK(c2->slack == ev({0, 0, 0}));
}

TEST_CASE("integral closure reproduces the worked closures") {
  CHECK(integral_closure(ideal(3, {{7, 0, 0}, {0, 3, 0}, {0, 0, 2}})) ==
        ideal(3, {{7, 0, 0}, {0, 3, 0}, {0, 0, 2}, {5, 1, 0},
                  {4, 0, 1}, {3, 2, 0}, {2, 1, 1}, {0, 2, 1}}));
  CHECK(integral_closure(ideal(3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 1}})) ==
        ideal(3, {{3, 0, 0}, {2, 1, 0}, {1, 2, 0}, {0, 3, 0}, {0, 0, 1}}));
  CHECK(integral_closure(ideal(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 4}})) ==
        ideal(3, {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {0, 0, 4}, {1, 0, 2}, {0, 1, 2}}));
  CHECK(integral_closure(MonomialIdeal::zero(2)).is_zero());
  CHECK(integral_closure(MonomialIdeal::unit(2)).is_unit());
}

TEST_CASE("ord_w") {
  MonomialIdeal I = ideal(3, {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {0, 0, 4}, {1, 0, 2}, {0, 1, 2}});
  CHECK(ord_w(I, weight({1, 1, 1})) == 2);
  CHECK(ord_w(I, weight({2, 2, 1})) == 4);
  CHECK(ord_w(I, weight({0, 0, 0})) == 0);
  CHECK_THROWS_AS(ord_w(MonomialIdeal::zero(3), weight({1, 1, 1})), std::domain_error);
  CHECK_THROWS_AS(weight({-1, 0, 0}), std::invalid_argument);
  // rational weights: (c, c, 2)/1 style maps stay exact
  WeightVector half({mpq_class(1, 2), mpq_class(1, 2), mpq_class(2)});
  CHECK(ord_w(I, half) == 1);
}

TEST_CASE("valuation membership is necessary but not sufficient") {
  MonomialIdeal I = ideal(2, {{2, 0}, {0, 2}});
  // every generator passes any sample
  std::vector<WeightVector> sample{weight({1, 1}), weight({3, 1})};
  CHECK(valuation_membership(I, ev({2, 0}), sample));
  // x fails np_membership but passes the axis weight (0,1)
  std::vector<WeightVector> axis{weight({0, 1})};
  CHECK(valuation_membership(I, ev({1, 0}), axis));
  CHECK_FALSE(np_membership(I, ev({1, 0})));
  CHECK_FALSE(valuation_membership(MonomialIdeal::zero(2), ev({1, 0}), axis));

  // the (a,b,c)-family weight (q, c, 2) with q = 2(b-a)+c-1, on the closed
  // instance (1,2,4): the weight maps I to order q+2a = 7, and it detects
  // exactly where XYZ^gamma enters the closure of I^2 (gamma >= a+b = 3)
  MonomialIdeal T = ideal(3, {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {0, 0, 4}, {1, 0, 1}, {0, 1, 2}});
  WeightVector w43 = weight({5, 4, 2});
  CHECK(ord_w(T, w43) == 7);
  std::vector<WeightVector> case43{w43};
  CHECK(valuation_membership(T, ev({1, 1, 3}), case43));
  MonomialIdeal T2 = power(T, 2);
  CHECK(ord_w(T2, w43) == 14);
  CHECK_FALSE(valuation_membership(T2, ev({1, 1, 2}), case43));
  CHECK_FALSE(np_membership(T2, ev({1, 1, 2})));
  CHECK(np_membership(T2, ev({1, 1, 3})));
}

TEST_CASE("closure properties on random ideals") {
  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    int d = static_cast<int>(rng.uniform(1, 3));
    MonomialIdeal I = test_helpers::random_ideal(rng, d, 4, 1, 5);
    MonomialIdeal cl = integral_closure(I);
    CHECK(is_subideal(I, cl));
    CHECK(integral_closure(cl) == cl);  // idempotent
    MonomialIdeal J = sum(I, test_helpers::random_ideal(rng, d, 4, 1, 3));
    CHECK(is_subideal(cl, integral_closure(J)));  // monotone: I subset J
    CHECK(is_subideal(product(cl, integral_closure(J)), integral_closure(product(I, J))));
  }
}

TEST_CASE("products of integrally closed ideals in two variables stay closed") {
  Rng rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    MonomialIdeal I = integral_closure(test_helpers::random_ideal(rng, 2, 5, 1, 5));
    MonomialIdeal J = integral_closure(test_helpers::random_ideal(rng, 2, 5, 1, 5));
    CHECK(integral_closure(product(I, J)) == product(I, J));
  }
}

TEST_CASE("membership agrees with the rho-power oracle") {
  Rng rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    int d = static_cast<int>(rng.uniform(1, 3));
    MonomialIdeal I = test_helpers::random_ideal(rng, d, 4, 1, 5);
    ExponentVector m = test_helpers::random_point(rng, d, 6);
    FeasibilityResult fr = np_feasibility(I, m);
    if (fr.feasible) {
      REQUIRE(fr.denominator.fits_slong_p());
      long long rho = fr.denominator.get_si();
      // the cleared-denominator relation is itself the oracle witness
      CHECK(contains(power(I, rho), m.scaled(rho)));
    } else {
      CHECK_FALSE(rho_power_oracle(I, m, 6));
    }
  }
}

TEST_CASE("certificates cross-check against power membership") {
  Rng rng(37);
  int verified = 0;
  for (int trial = 0; trial < 150; ++trial) {
    int d = static_cast<int>(rng.uniform(2, 3));
    MonomialIdeal I = test_helpers::random_ideal(rng, d, 4, 2, 5);
    ExponentVector m = test_helpers::random_point(rng, d, 5);
    auto cert = certificate(I, m);
    if (!cert) continue;
    CHECK(certificate_is_valid(I, m, *cert));
    if (cert->rho <= 6) {
      CHECK(contains(power(I, cert->rho), m.scaled(cert->rho)));
      ++verified;
    }
  }
  CHECK(verified > 20);
}

TEST_CASE("valuation membership is implied by np_membership") {
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    int d = static_cast<int>(rng.uniform(1, 3));
    MonomialIdeal I = test_helpers::random_ideal(rng, d, 4, 1, 5);
    ExponentVector m = test_helpers::random_point(rng, d, 5);
    std::vector<WeightVector> sample;
    for (int s = 0; s < 3; ++s) {
      std::vector<mpq_class> w;
      for (int j = 0; j < d; ++j)
        w.emplace_back(mpq_class(rng.uniform(0, 6), rng.uniform(1, 3)));
      sample.emplace_back(std::move(w));
    }
    if (np_membership(I, m)) CHECK(valuation_membership(I, m, sample));
  }
}
