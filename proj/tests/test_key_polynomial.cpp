#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "spherical/key_polynomial.hpp"

using namespace spherical;

namespace {

SparsePoly random_poly(std::mt19937& rng, int n, int terms, int max_exp, int max_coeff) {
  SparsePoly f(n);
  std::uniform_int_distribution<int> exp_dist(0, max_exp);
  std::uniform_int_distribution<int> coeff_dist(-max_coeff, max_coeff);
  for (int t = 0; t < terms; ++t) {
    Composition e(static_cast<size_t>(n));
    for (auto& v : e) v = exp_dist(rng);
    f.add_term(ExpVec::from(e), coeff_dist(rng));
  }
  return f;
}

// Oracle for pi_i straight from its definition, via exact division.
SparsePoly pi_by_division(const SparsePoly& f, int i) {
  const int n = f.n();
  Composition ei(static_cast<size_t>(n), 0), ej(static_cast<size_t>(n), 0);
  ei[static_cast<size_t>(i - 1)] = 1;
  ej[static_cast<size_t>(i)] = 1;
  const SparsePoly xi = SparsePoly::monomial(ei);
  const SparsePoly xj = SparsePoly::monomial(ej);
  return (xi * f - xj * f.swap_vars(i, i + 1)).divide_exact(xi - xj);
}

Composition to_comp(const ExpVec& e, int n) { return e.to_composition(n); }

}  // namespace

TEST_CASE("pi_i small cases") {
  CHECK(demazure_pi(SparsePoly::monomial({1, 0}), 1) ==
        SparsePoly::monomial({1, 0}) + SparsePoly::monomial({0, 1}));
  CHECK(demazure_pi(SparsePoly::monomial({0, 1}), 1).is_zero());
  CHECK(demazure_pi(SparsePoly::monomial({0, 2}), 1).coeff_of({1, 1}) == -1);
  CHECK(demazure_pi(SparsePoly::monomial({0, 0}), 1) == SparsePoly::monomial({0, 0}));
}

TEST_CASE("pi_i matches the defining quotient on random input") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const SparsePoly f = random_poly(rng, 4, 6, 5, 4);
    for (int i = 1; i < 4; ++i) CHECK(demazure_pi(f, i) == pi_by_division(f, i));
  }
}

TEST_CASE("pi operator relations") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const SparsePoly f = random_poly(rng, 4, 5, 4, 4);
    // idempotence
    for (int i = 1; i < 4; ++i) {
      const SparsePoly once = demazure_pi(f, i);
      CHECK(demazure_pi(once, i) == once);
    }
    // braid and commutation
    CHECK(pi_along(f, {1, 2, 1}) == pi_along(f, {2, 1, 2}));
    CHECK(pi_along(f, {1, 3}) == pi_along(f, {3, 1}));
    // result depends only on the Demazure product
    CHECK(pi_along(f, {1, 1}) == pi_along(f, {1}));
    CHECK(pi_along(f, {2, 1, 2, 2}) == pi_along(f, {1, 2, 1}));
    // exact divided-difference identity
    for (int i = 1; i < 4; ++i) {
      Composition ei(4, 0), ej(4, 0);
      ei[static_cast<size_t>(i - 1)] = 1;
      ej[static_cast<size_t>(i)] = 1;
      const SparsePoly xi = SparsePoly::monomial(ei), xj = SparsePoly::monomial(ej);
      CHECK((xi - xj) * demazure_pi(f, i) == xi * f - xj * f.swap_vars(i, i + 1));
    }
  }
  CHECK(pi_along(SparsePoly::monomial({2, 1, 0, 0}), {}) == SparsePoly::monomial({2, 1, 0, 0}));
}

TEST_CASE("pi along any word only sees its Demazure product") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> letter(1, 3);
  std::uniform_int_distribution<int> len(0, 6);
  for (int trial = 0; trial < 30; ++trial) {
    SparsePoly f(4);
    for (int t = 0; t < 4; ++t) {
      Composition e(4);
      for (auto& v : e) v = std::uniform_int_distribution<int>(0, 3)(rng);
      f.add_term(ExpVec::from(e), std::uniform_int_distribution<int>(-3, 3)(rng));
    }
    Word word(static_cast<size_t>(len(rng)));
    for (auto& w : word) w = letter(rng);
    const Permutation product = demazure_product(word, 4);
    CHECK(pi_along(f, word) == pi_along(f, canonical_reduced_word(product)));
  }
}

TEST_CASE("key polynomials, small") {
  CHECK(key_demazure({2, 1}) == SparsePoly::monomial({2, 1}));
  CHECK(key_demazure({0, 1}) == SparsePoly::monomial({1, 0}) + SparsePoly::monomial({0, 1}));
  CHECK(key_demazure({0, 1, 2}).coeff_of({1, 1, 1}) == 2);
  CHECK(key_kohnert({0, 1}) == key_demazure({0, 1}));
  CHECK(key_kohnert({2, 1}) == SparsePoly::monomial({2, 1}));
}

TEST_CASE("worked large example has the expected monomial") {
  const SparsePoly f = key_kohnert({2, 9, 8, 7, 6, 5, 4, 1, 3});
  CHECK(f.coeff_of({9, 2, 8, 7, 6, 5, 4, 2, 2}) != 0);
  CHECK(f == key_demazure({2, 9, 8, 7, 6, 5, 4, 1, 3}));
}

TEST_CASE("engine equivalence and support laws on exhaustive small indices") {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c) {
        const Composition alpha{a, b, c};
        const SparsePoly kd = key_demazure(alpha);
        const SparsePoly kk = key_kohnert(alpha);
        REQUIRE(kd == kk);
        std::set<Composition> support;
        for (const auto& [e, coeff] : kd.terms()) support.insert(to_comp(e, 3));
        CHECK(support == tab_support(alpha));
        for (const auto& beta : support) {
          CHECK(dominance_leq(alpha, beta));
          CHECK(support_nonzero(alpha, beta));
        }
        Composition off(alpha);
        off[0] += 1;  // wrong weight is never in the support
        CHECK_FALSE(support_nonzero(alpha, off));
      }
}

TEST_CASE("tab support small cases") {
  CHECK(tab_support({0, 1}) == std::set<Composition>{{1, 0}, {0, 1}});
  CHECK(tab_support({2, 1}) == std::set<Composition>{{2, 1}});
}

TEST_CASE("support exchange property") {
  // a support vector with beta_j - beta_i = t > 0 admits all intermediate shifts
  const Composition alpha{1, 0, 3, 2};
  const SparsePoly f = key_demazure(alpha);
  for (const auto& [e, coeff] : f.terms()) {
    const Composition beta = to_comp(e, 4);
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) {
        const int t = beta[static_cast<size_t>(j - 1)] - beta[static_cast<size_t>(i - 1)];
        for (int s = 1; s <= t; ++s) {
          Composition shifted(beta);
          shifted[static_cast<size_t>(i - 1)] += s;
          shifted[static_cast<size_t>(j - 1)] -= s;
          CHECK(f.coeff_of(shifted) != 0);
        }
      }
  }
}

TEST_CASE("split symmetry of key polynomials in descent positions") {
  // kappa_{w lambda} is symmetric in x_i, x_{i+1} for every left descent i of w
  const Composition alpha{2, 4, 5, 6, 7, 8, 9, 1, 3};  // w lambda for the worked w
  const SparsePoly f = key_demazure(alpha);
  for (int i : {1, 2, 3, 4, 5, 6, 8}) CHECK(f.symmetric_in(i, i + 1));
}
