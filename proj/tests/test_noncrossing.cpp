#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "toric/noncrossing.hpp"

using namespace toric;

TEST_CASE("partition construction and text form") {
  NCPartition p(7, {{1, 3}, {2}, {4, 6, 7}, {5}});
  CHECK(p.str() == "13/2/467/5");
  CHECK(p.block_index(6) == p.block_index(4));
  CHECK(p.block_of(5) == std::vector<int>{5});
  CHECK(NCPartition::parse(7, "13/2/467/5") == p);
  CHECK(NCPartition::parse(11, "1,10/2,3/4,5,6,7,8,9/11").str() ==
        "1,10/2,3/4,5,6,7,8,9/11");
  CHECK_THROWS_AS(NCPartition(3, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(NCPartition(3, {{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(NCPartition(3, {{1, 2, 4}}), std::invalid_argument);
}

TEST_CASE("crossing detection") {
  CHECK(NCPartition(7, {{1, 3}, {2}, {4, 6, 7}, {5}}).noncrossing());
  CHECK_FALSE(NCPartition(4, {{1, 3}, {2, 4}}).noncrossing());
  CHECK(NCPartition(4, {{1, 4}, {2, 3}}).noncrossing());
  CHECK(NCPartition(3, {{1}, {2}, {3}}).noncrossing());
}

TEST_CASE("enumeration counts are Catalan") {
  std::size_t expect[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 0; n <= 8; ++n) {
    auto all = enumerate_nc(n);
    CHECK(all.size() == expect[n]);
    for (const auto& p : all) CHECK(p.noncrossing());
  }
}

TEST_CASE("favorite-relative classes of a postorder tree") {
  CHECK(tree_to_nc(decode_polish("xxF2xxF2F1F2")).str() == "13/2/467/5");
  CHECK(tree_to_nc(decode_polish("xF1F1F1")).str() == "123");  // path
  CHECK(tree_to_nc(decode_polish("xxxF3")).str() == "1/2/3");  // star
}

TEST_CASE("partition to tree inversion") {
  CHECK(encode_polish(nc_to_tree(NCPartition::parse(7, "13/2/467/5"))) ==
        "xxF2xxF2F1F2");
  for (int n = 1; n <= 8; ++n)
    for (const auto& t : enumerate_plane_trees(n))
      CHECK(nc_to_tree(tree_to_nc(t)) == t);
  for (const auto& p : enumerate_nc(6)) CHECK(tree_to_nc(nc_to_tree(p)) == p);
  CHECK_THROWS_AS(nc_to_tree(NCPartition(4, {{1, 3}, {2, 4}})),
                  std::invalid_argument);
}

TEST_CASE("shelling statistic on partitions") {
  CHECK(nc_statistic_m(NCPartition(2, {{1, 2}}), 1, 0) == 1);
  CHECK(nc_statistic_m(NCPartition(2, {{1}, {2}}), 1, 0) == 1);
  CHECK(nc_statistic_sum(3, 1, 0) == Polynomial({0, 0, 2}));
  CHECK(nc_statistic_sum(2, 0, 0) == Polynomial({0, 0, 1}));
  CHECK_THROWS_AS(nc_statistic_m(NCPartition(2, {{1, 2}}), 0, 2),
                  std::invalid_argument);
}

TEST_CASE("sibling classes of a preorder tree") {
  CHECK(kreweras(decode_polish("xxxF3")).str() == "123");
  CHECK(kreweras(decode_polish("xF1F1F1")).str() == "1/2/3");
  for (int n = 2; n <= 8; ++n)
    for (const auto& t : enumerate_plane_trees(n)) {
      NCPartition p = kreweras(t);
      CHECK(p.noncrossing());
      int nonsingleton = 0;
      for (const auto& b : p.blocks())
        if (b.size() > 1) ++nonsingleton;
      CHECK(nonsingleton == count_forks(t));
    }
}

TEST_CASE("filler points") {
  CHECK(fillers(NCPartition(5, {{1, 2, 3, 4, 5}})) == 1);
  CHECK(fillers(NCPartition(2, {{1}, {2}})) == 0);
  CHECK(fillers(NCPartition::parse(7, "13/2/467/5")) == 3);
}

TEST_CASE("distributions match the cube g-polynomial") {
  CHECK(nc_nonsingleton_distribution(4) == Polynomial({1, 11, 2}));
  CHECK(nc_filler_distribution(4) == Polynomial({1, 11, 2}));
}

TEST_CASE("weighted partition totals") {
  CHECK(nc_weighted_P(1) == Polynomial(1));
  CHECK(nc_weighted_P(2) == Polynomial({2, -1}));
  CHECK(nc_weighted_P(3) == Polynomial({4, -3, 1}));
  CHECK_THROWS_AS(nc_weighted_P(0), std::invalid_argument);
}

TEST_CASE("per-element correspondence with tree types") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& t : enumerate_plane_trees(n)) {
      auto kinds = classify(t, Scheme::paren);
      NCPartition p = tree_to_nc(t);
      for (int v = 1; v < n; ++v) {
        const auto& b = p.block_of(v);
        CHECK((kinds[v] == 0) == (b.size() > 1 && b.front() == v));
        CHECK((kinds[v] == 2) ==
              (b.front() != v && (b.back() != v || b.front() == 1)));
        if (kinds[v] == 1) CHECK(b.size() == 1);
        // singletons without a type are non-leftmost leaf children of the root
        if (b.size() == 1 && kinds[v] != 1) {
          CHECK(t.is_leaf(v));
          CHECK(t.parent(v) == t.root());
          CHECK_FALSE(t.is_leftmost_child(v));
        }
      }
    }
}
