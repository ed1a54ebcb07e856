#include "toric/noncrossing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace toric {

NCPartition::NCPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n_ < 0) throw std::invalid_argument("ground set size must be >= 0");
  block_of_.assign(n_ + 1, -1);
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t k = 0; k < blocks_.size(); ++k)
    for (int v : blocks_[k]) {
      if (v < 1 || v > n_)
        throw std::invalid_argument("element " + std::to_string(v) +
                                    " outside the ground set");
      if (block_of_[v] != -1)
        throw std::invalid_argument("element " + std::to_string(v) +
                                    " appears in two blocks");
      block_of_[v] = static_cast<int>(k);
    }
  for (int v = 1; v <= n_; ++v)
    if (block_of_[v] == -1)
      throw std::invalid_argument("element " + std::to_string(v) +
                                  " is missing from every block");
}

bool NCPartition::noncrossing() const {
  // Between consecutive members a < c of a block, every block met must lie
  // entirely inside the open interval (a, c).
  for (const auto& b : blocks_)
    for (std::size_t k = 1; k < b.size(); ++k) {
      int a = b[k - 1], c = b[k];
      for (int v = a + 1; v < c; ++v) {
        const auto& other = blocks_[block_of_[v]];
        if (other.front() <= a || other.back() >= c) return false;
      }
    }
  return true;
}

std::string NCPartition::str() const {
  std::string s;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (k) s += '/';
    for (std::size_t q = 0; q < blocks_[k].size(); ++q) {
      if (q && n_ > 9) s += ',';
      s += std::to_string(blocks_[k][q]);
    }
  }
  return s;
}

NCPartition NCPartition::parse(int n, const std::string& s) {
  std::vector<std::vector<int>> blocks;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t slash = s.find('/', pos);
    if (slash == std::string::npos) slash = s.size();
    std::string tok = s.substr(pos, slash - pos);
    std::vector<int> block;
    if (tok.find(',') != std::string::npos || n > 9) {
      std::size_t q = 0;
      while (q <= tok.size()) {
        std::size_t comma = tok.find(',', q);
        if (comma == std::string::npos) comma = tok.size();
        block.push_back(std::stoi(tok.substr(q, comma - q)));
        q = comma + 1;
      }
    } else {
      for (char ch : tok) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw std::invalid_argument(std::string("unexpected character '") +
                                      ch + "' in partition");
        block.push_back(ch - '0');
      }
    }
    blocks.push_back(std::move(block));
    if (slash == s.size()) break;
    pos = slash + 1;
  }
  if (n == 0 && s.empty()) blocks.clear();
  return NCPartition(n, std::move(blocks));
}

namespace {

// Noncrossing partitions of the interval [lo, hi], each as a block list.
std::vector<std::vector<std::vector<int>>> nc_segments(int lo, int hi) {
  if (lo > hi) return {{}};
  std::vector<std::vector<std::vector<int>>> out;
  // The block of lo is lo = c_0 < c_1 < ... < c_m; the gaps between
  // consecutive c's and the tail (c_m, hi] are independent segments.
  std::vector<int> block{lo};
  std::vector<std::vector<int>> acc;
  auto grow = [&](auto&& self) -> void {
    int a = block.back();
    for (const auto& tail : nc_segments(a + 1, hi)) {
      auto full = acc;
      full.push_back(block);
      full.insert(full.end(), tail.begin(), tail.end());
      out.push_back(std::move(full));
    }
    for (int c = a + 1; c <= hi; ++c)
      for (const auto& mid : nc_segments(a + 1, c - 1)) {
        std::size_t mark = acc.size();
        acc.insert(acc.end(), mid.begin(), mid.end());
        block.push_back(c);
        self(self);
        block.pop_back();
        acc.resize(mark);
      }
  };
  grow(grow);
  return out;
}

}  // namespace

std::vector<NCPartition> enumerate_nc(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_nc: n must be >= 0");
  std::vector<NCPartition> out;
  for (auto& blocks : nc_segments(1, n)) out.emplace_back(n, std::move(blocks));
  return out;
}

NCPartition tree_to_nc(const PlaneTree& t) {
  int n = t.size() - 1;  // ground set = nonroot postorder labels
  std::vector<int> head(n + 1);
  std::iota(head.begin(), head.end(), 0);
  auto find = [&](int v) {
    while (head[v] != v) v = head[v] = head[head[v]];
    return v;
  };
  for (int v = 1; v <= n; ++v)
    if (!t.is_leaf(v)) head[find(t.children(v).front())] = find(v);
  std::vector<std::vector<int>> grouped(n + 1);
  for (int v = 1; v <= n; ++v) grouped[find(v)].push_back(v);
  std::vector<std::vector<int>> blocks;
  for (auto& b : grouped)
    if (!b.empty()) blocks.push_back(std::move(b));
  return NCPartition(n, std::move(blocks));
}

PlaneTree nc_to_tree(const NCPartition& p) {
  if (!p.noncrossing())
    throw std::invalid_argument("nc_to_tree requires a noncrossing partition");
  int n = p.ground_size();
  int root = n + 1;
  // Within a block the successor is the parent; a block maximum attaches to
  // the smallest larger element whose block reaches below it, else the root.
  std::vector<int> parent(n + 1, root);
  for (const auto& b : p.blocks()) {
    for (std::size_t k = 1; k < b.size(); ++k) parent[b[k - 1]] = b[k];
    int a = b.back();
    for (int v = a + 1; v <= n; ++v)
      if (p.block_of(v).front() < a) {
        parent[a] = v;
        break;
      }
  }
  std::vector<std::vector<int>> children(root + 1);
  for (int v = 1; v <= n; ++v) children[parent[v]].push_back(v);

  std::vector<int> order;
  auto walk = [&](auto&& self, int v) -> void {
    for (int c : children[v]) self(self, c);
    order.push_back(v);
  };
  walk(walk, root);
  for (int q = 0; q <= n; ++q)
    if (order[q] != q + 1)
      throw std::invalid_argument(
          "partition does not reconstruct a postorder labeling");

  std::vector<int> word(root);
  for (int v = 1; v <= root; ++v)
    word[v - 1] = static_cast<int>(children[v].size());
  return PlaneTree(word);
}

int nc_statistic_m(const NCPartition& p, int i, int j) {
  int d = p.ground_size() + 1;
  if (j >= d - 1)
    throw std::invalid_argument("statistic requires j < d-1");
  int m = 0;
  for (const auto& b : p.blocks()) {
    if (b.size() > 1) ++m;  // block minimum of a nonsingleton block
    for (std::size_t k = 0; k < b.size(); ++k) {
      int v = b[k];
      if (b.size() == 1) {
        if (v <= i || v >= d - j) ++m;
      } else if (k > 0 && v >= d - j) {
        if (k + 1 < b.size() || b.front() == 1) ++m;
      }
    }
  }
  return m;
}

Polynomial nc_statistic_sum(int d, int i, int j) {
  Polynomial sum;
  for (const auto& p : enumerate_nc(d - 1))
    sum += Polynomial::monomial(1, d - nc_statistic_m(p, i, j));
  return sum;
}

NCPartition kreweras(const PlaneTree& t) {
  int n = t.size() - 1;
  // Preorder labels: root -> 0, nonroot vertices -> 1..n.
  std::vector<int> pre(t.size() + 1, 0);
  int next = 0;
  auto walk = [&](auto&& self, int v) -> void {
    pre[v] = next++;
    for (int c : t.children(v)) self(self, c);
  };
  walk(walk, t.root());
  std::vector<std::vector<int>> blocks;
  for (int v = 1; v <= t.size(); ++v) {
    if (t.is_leaf(v)) continue;
    std::vector<int> b;
    for (int c : t.children(v)) b.push_back(pre[c]);
    blocks.push_back(std::move(b));
  }
  return NCPartition(n, std::move(blocks));
}

int fillers(const NCPartition& p) {
  int m = 0;
  for (int v = 2; v <= p.ground_size(); ++v) {
    const auto& b = p.block_of(v);
    if (b.size() > 1 && p.block_index(v - 1) == p.block_index(v)) {
      if (b.back() == v) ++m;
    } else if (b.size() == 1 && p.block_of(v - 1).back() != v - 1) {
      ++m;
    }
  }
  return m;
}

Polynomial nc_weighted_P(int k) {
  if (k < 1) throw std::invalid_argument("nc_weighted_P: k must be >= 1");
  // All-singleton weight (1-(1-t)^k)/t, expanded.
  std::vector<Int> single(k);
  for (int q = 1; q <= k; ++q)
    single[q - 1] = (q % 2 ? 1 : -1) * binomial(k, q);
  Polynomial total;
  for (const auto& p : enumerate_nc(k - 1)) {
    bool singletons = true;
    for (const auto& b : p.blocks())
      if (b.size() > 1) singletons = false;
    if (singletons) {
      total += Polynomial(single);
    } else {
      int m = fillers(p);
      if (m < 1) throw std::logic_error("nonsingleton partition with no filler");
      total += Polynomial::monomial(1, m - 1);
    }
  }
  return total;
}

Polynomial nc_nonsingleton_distribution(int n) {
  Polynomial sum;
  for (const auto& p : enumerate_nc(n)) {
    int k = 0;
    for (const auto& b : p.blocks())
      if (b.size() > 1) ++k;
    sum += Polynomial::monomial(1, k);
  }
  return sum;
}

Polynomial nc_filler_distribution(int n) {
  Polynomial sum;
  for (const auto& p : enumerate_nc(n)) sum += Polynomial::monomial(1, fillers(p));
  return sum;
}

}  // namespace toric
