#include <catch2/catch_amalgamated.hpp>

#include "spherical/composition.hpp"

using namespace spherical;

TEST_CASE("permutation action on compositions") {
  const Composition lambda{9, 8, 7, 6, 5, 4, 3, 2, 1};
  CHECK(act(Permutation({2, 3, 4, 5, 6, 7, 9, 1, 8}), lambda) ==
        Composition{2, 9, 8, 7, 6, 5, 4, 1, 3});
  CHECK(act(Permutation({7, 6, 5, 4, 3, 2, 9, 1, 8}), lambda) ==
        Composition{2, 4, 5, 6, 7, 8, 9, 1, 3});
  CHECK(act(Permutation::identity(9), lambda) == lambda);
}

TEST_CASE("action is a group action") {
  const Composition alpha{3, 1, 4, 1, 5};
  std::vector<int> v{1, 2, 3, 4, 5};
  do {
    const Permutation w(v);
    std::vector<int> u{2, 5, 3, 1, 4};
    const Permutation p(u);
    CHECK(act(p, act(w, alpha)) == act(p * w, alpha));
  } while (std::next_permutation(v.begin(), v.end()));
}

TEST_CASE("t transform") {
  CHECK(t_transform({4, 4, 3}, 1, 2) == Composition{3, 5, 3});
  CHECK(t_transform({3, 5, 3}, 1, 3) == Composition{1, 5, 5});
  CHECK(t_transform({9, 7, 6, 5, 5, 5, 4, 2, 2}, 2, 3) ==
        Composition{9, 5, 8, 5, 5, 5, 4, 2, 2});
  // involution
  const Composition beta{4, 1, 3, 2};
  CHECK(t_transform(t_transform(beta, 1, 3), 1, 3) == beta);
  // rejection outside Comp_n
  CHECK_THROWS_AS(t_transform({5, 0, 3}, 1, 2), std::domain_error);
}

TEST_CASE("raises") {
  CHECK(raises({4, 4, 3}, 1, 2));
  CHECK_FALSE(raises({3, 5, 3}, 1, 2));
  CHECK_FALSE(raises({1, 4, 6}, 1, 2));
  CHECK_FALSE(raises({1, 4, 6}, 2, 3));
  CHECK_FALSE(raises({1, 4, 6}, 1, 3));
  CHECK_THROWS_AS(raises({2, 3}, 1, 2), std::logic_error);  // equal shifted entries
}

TEST_CASE("dominance order") {
  CHECK(dominance_leq({1, 1}, {2, 0}));
  CHECK(dominance_leq({2, 9, 8, 7, 6, 5, 4, 1, 3}, {9, 7, 6, 5, 5, 5, 4, 2, 2}));
  const Composition a{3, 1, 2};
  CHECK(dominance_leq(a, a));
  CHECK_FALSE(dominance_leq({2, 0}, {1, 1}));
  CHECK_THROWS_AS(dominance_leq({1, 0}, {2, 0}), std::invalid_argument);
}

TEST_CASE("composition patterns") {
  CHECK(contains_comp_pattern({1, 0, 3, 2}, {1, 0, 3, 2}));
  CHECK_FALSE(contains_comp_pattern({2, 9, 8, 7, 6, 5, 4, 1, 3}, {0, 1, 2}));
  CHECK(contains_comp_pattern({0, 2, 3}, {0, 1, 2}));
  // gap condition: order-isomorphic but gaps too small
  CHECK_FALSE(contains_comp_pattern({0, 1, 2}, {0, 2, 4}));
  // equalities must be respected both ways
  CHECK(contains_comp_pattern({3, 3, 1}, {1, 1, 0}));
  CHECK_FALSE(contains_comp_pattern({3, 2, 1}, {1, 1, 0}));
  // appending entries never removes a pattern
  const Composition alpha{1, 0, 2, 2};
  const Composition pat{1, 0, 2, 2};
  REQUIRE(contains_comp_pattern(alpha, pat));
  for (int extra : {0, 1, 5}) {
    Composition longer(alpha);
    longer.push_back(extra);
    CHECK(contains_comp_pattern(longer, pat));
  }
}

TEST_CASE("minimal coset representatives act block-decreasingly") {
  // for w = w0(I) u length-additive and i in I, (u lambda)_i >= (u lambda)_{i+1}
  std::vector<int> v{1, 2, 3, 4, 5};
  const Composition lambda{7, 5, 5, 2, 0};
  do {
    const Permutation w(v);
    const auto J = left_descents(w);
    const int k = static_cast<int>(J.size());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<int> I;
      for (int b = 0; b < k; ++b)
        if (mask & (1u << b)) I.push_back(J[static_cast<size_t>(b)]);
      const Permutation u = longest_element(I, 5) * w;
      const Composition ulam = act(u, lambda);
      for (int i : I)
        CHECK(ulam[static_cast<size_t>(i - 1)] >= ulam[static_cast<size_t>(i)]);
    }
  } while (std::next_permutation(v.begin(), v.end()));
}

TEST_CASE("block structure from D and I") {
  const auto bs = BlockStructure::from_D({1, 7, 8, 9}, 9);
  CHECK(bs.block_count() == 4);
  CHECK(bs.block_range(1) == std::pair<int, int>{1, 1});
  CHECK(bs.block_range(2) == std::pair<int, int>{2, 7});
  CHECK(bs.block_range(3) == std::pair<int, int>{8, 8});
  CHECK(bs.block_range(4) == std::pair<int, int>{9, 9});
  CHECK(bs.I() == std::vector<int>{2, 3, 4, 5, 6});
  CHECK(bs.same_block(2, 7));
  CHECK_FALSE(bs.same_block(1, 2));
  CHECK(BlockStructure::from_I({2, 3, 4, 5, 6}, 9) == bs);
  // sentinel n is optional on input
  CHECK(BlockStructure::from_D({1, 7, 8}, 9) == bs);
  // single block when D is empty
  const auto one = BlockStructure::from_D({}, 3);
  CHECK(one.block_count() == 1);
  CHECK(one.I() == std::vector<int>{1, 2});
}

TEST_CASE("split partition validation") {
  const auto bs = BlockStructure::from_D({1, 7, 8, 9}, 9);
  const Composition gamma{9, 7, 6, 5, 5, 5, 4, 2, 2};
  const auto sp = SplitPartition::from_composition(gamma, bs);
  CHECK(sp.blocks.size() == 4);
  CHECK(sp.blocks[1] == std::vector<int>{7, 6, 5, 5, 5, 4});
  CHECK(sp.flatten() == gamma);
  CHECK_THROWS_AS(SplitPartition::from_composition({1, 2, 3}, BlockStructure::from_D({}, 3)),
                  std::invalid_argument);
}
