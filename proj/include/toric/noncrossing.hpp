#pragma once

#include <string>
#include <vector>

#include "toric/polynomial.hpp"
#include "toric/trees.hpp"

namespace toric {

/// Set partition of {1..n}; blocks kept sorted and ordered by minimum, so
/// equality is structural. n = 0 is the empty partition.
class NCPartition {
 public:
  NCPartition(int n, std::vector<std::vector<int>> blocks);  // validates

  int ground_size() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_index(int v) const { return block_of_[v]; }
  const std::vector<int>& block_of(int v) const { return blocks_[block_of_[v]]; }

  bool noncrossing() const;

  /// Canonical text form "13/2/467/5"; elements comma-separated when the
  /// ground set goes beyond 9.
  std::string str() const;
  static NCPartition parse(int n, const std::string& s);

  bool operator==(const NCPartition&) const = default;

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;  // 1-based
};

inline bool is_noncrossing(const NCPartition& p) { return p.noncrossing(); }

/// All C_n noncrossing partitions of {1..n}, deterministic order.
std::vector<NCPartition> enumerate_nc(int n);

/// Favorite-relative classes of the nonroot vertices of a postorder tree on
/// n+1 vertices: maximal leftmost-child chains, as a partition of {1..n}.
NCPartition tree_to_nc(const PlaneTree& t);

/// Inverse of tree_to_nc; throws on a crossing partition.
PlaneTree nc_to_tree(const NCPartition& p);

/// The shelling statistic on a noncrossing partition of {1..d-1}: counts
/// nonsingleton-block minima; singletons <= i or >= d-j; and elements >= d-j
/// that are not their block's minimum and, when they are its maximum, whose
/// block contains 1. Requires j < d-1.
int nc_statistic_m(const NCPartition& p, int i, int j);

/// Sum of x^{d - nc_statistic_m} over all noncrossing partitions of {1..d-1}.
Polynomial nc_statistic_sum(int d, int i, int j);

/// Kreweras's sibling-class partition of a preorder tree on n+1 vertices
/// (root excluded, nonroot vertices labeled 1..n in preorder).
NCPartition kreweras(const PlaneTree& t);

/// Denise-Simion filler count m(pi).
int fillers(const NCPartition& p);

/// Total Denise-Simion weight of the noncrossing partitions of {1..k-1}:
/// (1-(1-t)^k)/t for the all-singleton partition, t^{m(pi)-1} otherwise.
Polynomial nc_weighted_P(int k);

/// Distribution of a statistic over NC(n): 0 = nonsingleton block count,
/// 1 = filler count.
Polynomial nc_nonsingleton_distribution(int n);
Polynomial nc_filler_distribution(int n);

}  // namespace toric
