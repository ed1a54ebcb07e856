#pragma once

#include <string>
#include <vector>

#include "toric/polynomial.hpp"

namespace toric {

/// Ordered rooted tree with vertices identified by their postorder label
/// 1..n; the root is always n. The canonical representation is the Polish
/// operation word: letter p is 0 when vertex p is a leaf (the variable x)
/// and c >= 1 when vertex p is an internal vertex with c children (F_c).
class PlaneTree {
 public:
  explicit PlaneTree(std::vector<int> word);  // validates stack discipline

  int size() const { return static_cast<int>(word_.size()); }
  int root() const { return size(); }
  const std::vector<int>& word() const { return word_; }
  int parent(int v) const { return parent_[v]; }  // 0 for the root
  const std::vector<int>& children(int v) const { return children_[v]; }
  bool is_leaf(int v) const { return children_[v].empty(); }
  bool is_leftmost_child(int v) const;  // v != root

  bool operator==(const PlaneTree& o) const { return word_ == o.word_; }

 private:
  std::vector<int> word_;
  std::vector<int> parent_;                 // 1-based, parent_[root] = 0
  std::vector<std::vector<int>> children_;  // 1-based
};

/// All C_{n-1} plane trees on n vertices, deterministic order.
std::vector<PlaneTree> enumerate_plane_trees(int n);

/// Polish-notation text, e.g. "xxF2xxF2F1F2".
std::string encode_polish(const PlaneTree& t);
PlaneTree decode_polish(const std::string& w);

enum class Scheme { paren, bracket };

/// Special-vertex kind per nonroot vertex: 0, 1, 2, or -1 for none.
/// Index v in [1, n); the root has no entry.
std::vector<int> classify(const PlaneTree& t, Scheme scheme);

/// Vertices with more than one child.
int count_forks(const PlaneTree& t);

/// Plane-order-preserving contraction of a nonroot vertex: its children are
/// spliced into the parent's child list at its position.
PlaneTree remove_vertex(const PlaneTree& t, int p);

/// Unique insertion of a new type-(1) special vertex at postorder position p
/// (1 <= p <= size); removing position p from the result gives t back.
PlaneTree insert_type1(const PlaneTree& t, int p);

/// Unique insertion of a new type-[2] special vertex at postorder position p
/// (2 <= p <= size).
PlaneTree insert_type2(const PlaneTree& t, int p);

/// Inserts one vertex per (position, kind) pair, kinds over {1,2}, positions
/// distinct; insertions proceed in increasing position order.
PlaneTree insert_marked_set(const PlaneTree& t, const std::vector<int>& positions,
                            const std::vector<int>& kinds);

/// The shelling-statistic m of the tree for type (i,j): counts type-[0]
/// (resp. (0)) vertices, type-[1] vertices labeled <= i or >= d-j, and
/// type-[2] vertices labeled >= d-j, where d = size. Requires j < d-1.
int statistic_m(const PlaneTree& t, int i, int j, Scheme scheme);

/// Sum of x^{d - statistic_m} over all plane trees on d vertices.
Polynomial tree_statistic_sum(int d, int i, int j, Scheme scheme);

/// Distribution polynomial: sum of x^{#special vertices of the given kind}
/// over all plane trees on n vertices.
Polynomial tree_kind_distribution(int n, Scheme scheme, int kind);

// --- preorder tree -> postorder tree bijection chain ---

/// Binary tree for the Catalan-word parenthesization; node 0 is absent.
struct BinaryTree {
  std::vector<int> left, right;  // per node, 1-based; 0 = none
  int root = 0;                  // 0 = empty tree
  int size() const { return static_cast<int>(left.size()) - 1; }
};

/// Counterclockwise walk word: '+' descending an edge, '-' ascending.
std::string tree_to_catalan(const PlaneTree& t);
PlaneTree catalan_to_tree(const std::string& w);

/// Parenthesization reading of a balanced word: "+u-v" -> node(B(u), B(v)).
BinaryTree catalan_to_binary(const std::string& w);
std::string binary_to_catalan(const BinaryTree& b);
BinaryTree mirror_binary(const BinaryTree& b);

/// Reverses every child list.
PlaneTree mirror_tree(const PlaneTree& t);

/// The full chain: walk word, parenthesization, mirrored binary tree, walk
/// word again. Maps forks onto type-(0) vertices; the walk convention here
/// absorbs the planar mirror of the textbook picture.
PlaneTree preorder_to_postorder(const PlaneTree& t);

}  // namespace toric
