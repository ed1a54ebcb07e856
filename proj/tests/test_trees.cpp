#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "toric/trees.hpp"

using namespace toric;

TEST_CASE("operation word parsing") {
  PlaneTree t({0, 0, 2, 0, 0, 2, 1, 2});  // xxF2xxF2F1F2
  CHECK(t.size() == 8);
  CHECK(t.root() == 8);
  CHECK(t.children(8) == std::vector<int>{3, 7});
  CHECK(t.children(3) == std::vector<int>{1, 2});
  CHECK(t.parent(4) == 6);
  CHECK(t.is_leaf(5));
  CHECK_FALSE(t.is_leaf(7));
  CHECK(t.is_leftmost_child(1));
  CHECK_FALSE(t.is_leftmost_child(2));
  CHECK_THROWS_AS(PlaneTree({2}), std::invalid_argument);     // missing operands
  CHECK_THROWS_AS(PlaneTree({0, 0, 1}), std::invalid_argument);  // extra value
  CHECK_THROWS_AS(PlaneTree({}), std::invalid_argument);
}

TEST_CASE("enumeration counts are Catalan") {
  std::size_t expect[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 1; n <= 8; ++n) {
    auto trees = enumerate_plane_trees(n);
    CHECK(trees.size() == expect[n - 1]);
    std::set<std::vector<int>> dedup;
    for (const auto& t : trees) dedup.insert(t.word());
    CHECK(dedup.size() == trees.size());
  }
}

TEST_CASE("Polish notation") {
  CHECK(encode_polish(PlaneTree({0, 0, 2, 0, 0, 2, 1, 2})) == "xxF2xxF2F1F2");
  CHECK(encode_polish(PlaneTree({0})) == "x");
  CHECK(decode_polish("xxxF3").word() == std::vector<int>{0, 0, 0, 3});
  CHECK(decode_polish("xxF2xxF2F1F2") == PlaneTree({0, 0, 2, 0, 0, 2, 1, 2}));
  CHECK_THROWS_AS(decode_polish("xFx"), std::invalid_argument);
  CHECK_THROWS_AS(decode_polish("xy"), std::invalid_argument);
  CHECK_THROWS_AS(decode_polish("xxF3"), std::invalid_argument);
}

TEST_CASE("special vertex classification") {
  PlaneTree t = decode_polish("xxF2xxF2F1F2");
  CHECK(classify(t, Scheme::paren) ==
        std::vector<int>{-1, 0, 1, 2, 0, 1, 2, -1});
  CHECK(classify(t, Scheme::bracket) ==
        std::vector<int>{-1, 0, 1, 2, 0, 1, 2, -1});

  // Leaves hanging off the root differ between the two schemes.
  PlaneTree star = decode_polish("xxxF3");
  CHECK(classify(star, Scheme::paren) == std::vector<int>{-1, 1, -1, -1});
  CHECK(classify(star, Scheme::bracket) == std::vector<int>{-1, 0, 1, 1});
}

TEST_CASE("fork counting") {
  CHECK(count_forks(decode_polish("x")) == 0);
  CHECK(count_forks(decode_polish("xF1F1")) == 0);
  CHECK(count_forks(decode_polish("xxxF3")) == 1);
  CHECK(count_forks(decode_polish("xxF2xxF2F1F2")) == 3);
}

TEST_CASE("vertex removal") {
  PlaneTree t = decode_polish("xxF2xxF2F1F2");
  CHECK(encode_polish(remove_vertex(t, 1)) == "xF1xxF2F1F2");
  CHECK(encode_polish(remove_vertex(t, 3)) == "xxxxF2F1F3");
  CHECK_THROWS_AS(remove_vertex(t, 8), std::invalid_argument);  // the root
  CHECK_THROWS_AS(remove_vertex(t, 9), std::invalid_argument);
}

TEST_CASE("removal commutes") {
  for (const auto& t : enumerate_plane_trees(6))
    for (int p = 1; p <= 5; ++p)
      for (int q = p + 1; q <= 5; ++q)
        CHECK(remove_vertex(remove_vertex(t, p), q - 1) ==
              remove_vertex(remove_vertex(t, q), p));
}

TEST_CASE("leaf insertion") {
  CHECK(encode_polish(insert_type1(decode_polish("xxxF3F1"), 1)) ==
        "xxxxF3F2");
  CHECK(encode_polish(insert_type1(decode_polish("xxF2xxF3xF2"), 4)) ==
        "xxF2xxxF4xF2");
  CHECK_THROWS_AS(insert_type1(decode_polish("x"), 2), std::invalid_argument);
}

TEST_CASE("operation insertion") {
  CHECK(encode_polish(insert_type2(decode_polish("xF1xxF3"), 4)) ==
        "xF1xF2xF2");
  CHECK_THROWS_AS(insert_type2(decode_polish("xF1"), 1), std::invalid_argument);
}

TEST_CASE("insertions invert removal") {
  for (const auto& t : enumerate_plane_trees(5))
    for (int p = 1; p <= 5; ++p) {
      CHECK(remove_vertex(insert_type1(t, p), p) == t);
      if (p >= 2) CHECK(remove_vertex(insert_type2(t, p), p) == t);
    }
}

TEST_CASE("marked multi-insertion") {
  PlaneTree t = decode_polish("xxF2");
  PlaneTree u = insert_marked_set(t, {2, 4}, {1, 2});
  CHECK(remove_vertex(remove_vertex(u, 4), 2) == t);
  CHECK(insert_marked_set(t, {4, 2}, {2, 1}) == u);  // order-insensitive input
  CHECK_THROWS_AS(insert_marked_set(t, {2, 2}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(insert_marked_set(t, {2}, {0}), std::invalid_argument);
}

TEST_CASE("shelling statistic") {
  PlaneTree path2 = decode_polish("xF1");
  CHECK(statistic_m(path2, 1, 0, Scheme::bracket) == 1);
  CHECK(statistic_m(decode_polish("xxF2xxF2F1F2"), 1, 0, Scheme::bracket) == 2);
  CHECK_THROWS_AS(statistic_m(path2, 0, 1, Scheme::bracket),
                  std::invalid_argument);  // needs j < d-1
}

TEST_CASE("statistic generating sums") {
  CHECK(tree_statistic_sum(2, 1, 0, Scheme::bracket) == Polynomial({0, 1}));
  CHECK(tree_statistic_sum(3, 1, 0, Scheme::bracket) ==
        Polynomial({0, 0, 2}));
  CHECK(tree_statistic_sum(3, 0, 0, Scheme::paren) ==
        Polynomial({0, 0, 1, 1}));
}

TEST_CASE("type distribution") {
  CHECK(tree_kind_distribution(5, Scheme::paren, 0) == Polynomial({1, 11, 2}));
}

TEST_CASE("walk words") {
  PlaneTree t = catalan_to_tree("++--+++--+-+--");
  CHECK(encode_polish(t) == "xF1xF1xxF3F2");
  CHECK(tree_to_catalan(t) == "++--+++--+-+--");
  CHECK_THROWS_AS(catalan_to_tree("++-"), std::invalid_argument);
  CHECK_THROWS_AS(catalan_to_tree("-+"), std::invalid_argument);
}

TEST_CASE("binary tree encoding round trips") {
  for (const auto& t : enumerate_plane_trees(6)) {
    std::string w = tree_to_catalan(t);
    BinaryTree b = catalan_to_binary(w);
    CHECK(binary_to_catalan(b) == w);
    CHECK(binary_to_catalan(mirror_binary(mirror_binary(b))) == w);
  }
}

TEST_CASE("planar mirror is an involution") {
  for (const auto& t : enumerate_plane_trees(6))
    CHECK(mirror_tree(mirror_tree(t)) == t);
}

TEST_CASE("preorder to postorder bijection") {
  CHECK(encode_polish(preorder_to_postorder(decode_polish("xF1F1"))) ==
        "xxF2");
  CHECK(encode_polish(preorder_to_postorder(decode_polish("xxF2"))) ==
        "xF1F1");
  for (int n = 1; n <= 7; ++n) {
    std::set<std::vector<int>> images;
    for (const auto& t : enumerate_plane_trees(n)) {
      PlaneTree post = preorder_to_postorder(t);
      images.insert(post.word());
      auto kinds = classify(post, Scheme::paren);
      CHECK(std::count(kinds.begin(), kinds.end(), 0) == count_forks(t));
    }
    CHECK(images.size() == enumerate_plane_trees(n).size());
  }
}
