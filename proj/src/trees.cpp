#include "toric/trees.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

PlaneTree::PlaneTree(std::vector<int> word) : word_(std::move(word)) {
  int n = size();
  if (n == 0) throw std::invalid_argument("empty operation word");
  parent_.assign(n + 1, 0);
  children_.assign(n + 1, {});
  std::vector<int> stack;
  for (int p = 1; p <= n; ++p) {
    int c = word_[p - 1];
    if (c < 0) throw std::invalid_argument("negative arity at position " +
                                           std::to_string(p));
    if (c > static_cast<int>(stack.size()))
      throw std::invalid_argument("malformed word: operation at position " +
                                  std::to_string(p) + " lacks operands");
    children_[p].assign(stack.end() - c, stack.end());
    stack.resize(stack.size() - c);
    for (int ch : children_[p]) parent_[ch] = p;
    stack.push_back(p);
  }
  if (stack.size() != 1)
    throw std::invalid_argument("malformed word: " +
                                std::to_string(stack.size()) +
                                " values remain after position " +
                                std::to_string(n));
}

bool PlaneTree::is_leftmost_child(int v) const {
  int q = parent_[v];
  return q != 0 && children_[q].front() == v;
}

std::vector<PlaneTree> enumerate_plane_trees(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_plane_trees: n must be >= 1");
  // forests[k]: words of ordered forests on k vertices with the root-arity
  // still to append; stored as (word, number of trees in the forest).
  std::vector<std::vector<std::pair<std::vector<int>, int>>> forests(n);
  std::vector<std::vector<std::vector<int>>> trees(n + 1);
  forests[0] = {{{}, 0}};
  trees[1] = {{0}};
  for (int k = 1; k < n; ++k) {
    for (int m = 1; m <= k; ++m)
      for (const auto& first : trees[m])
        for (const auto& [rest, cnt] : forests[k - m]) {
          std::vector<int> w = first;
          w.insert(w.end(), rest.begin(), rest.end());
          forests[k].emplace_back(std::move(w), cnt + 1);
        }
    trees[k + 1].reserve(forests[k].size());
    for (const auto& [w, cnt] : forests[k]) {
      std::vector<int> t = w;
      t.push_back(cnt);
      trees[k + 1].push_back(std::move(t));
    }
  }
  std::vector<PlaneTree> out;
  out.reserve(trees[n].size());
  for (auto& w : trees[n]) out.emplace_back(std::move(w));
  return out;
}

std::string encode_polish(const PlaneTree& t) {
  std::string s;
  for (int c : t.word()) {
    if (c == 0)
      s += 'x';
    else
      s += "F" + std::to_string(c);
  }
  return s;
}

PlaneTree decode_polish(const std::string& w) {
  std::vector<int> word;
  std::size_t q = 0;
  while (q < w.size()) {
    if (w[q] == 'x' || w[q] == 'X') {
      word.push_back(0);
      ++q;
    } else if (w[q] == 'F' || w[q] == 'f') {
      std::size_t r = q + 1;
      while (r < w.size() && std::isdigit(static_cast<unsigned char>(w[r]))) ++r;
      if (r == q + 1)
        throw std::invalid_argument("parse error at position " +
                                    std::to_string(q + 1) +
                                    ": F must carry an arity");
      word.push_back(std::stoi(w.substr(q + 1, r - q - 1)));
      q = r;
    } else {
      throw std::invalid_argument("parse error at position " +
                                  std::to_string(q + 1) +
                                  ": unexpected character '" + w[q] + "'");
    }
  }
  return PlaneTree(word);
}

std::vector<int> classify(const PlaneTree& t, Scheme scheme) {
  int n = t.size();
  std::vector<int> kind(n, -1);  // index v in [1, n)
  for (int v = 1; v < n; ++v) {
    bool leaf = t.is_leaf(v);
    bool lm = t.is_leftmost_child(v);
    bool root_parent = t.parent(v) == t.root();
    if (scheme == Scheme::bracket) {
      if (leaf)
        kind[v] = lm ? 0 : 1;
      else if (lm)
        kind[v] = 2;
    } else {
      if (leaf && lm && !root_parent)
        kind[v] = 0;
      else if (leaf && ((lm && root_parent) || (!root_parent && !lm)))
        kind[v] = 1;
      else if (!leaf && lm)
        kind[v] = 2;
    }
  }
  return kind;
}

int count_forks(const PlaneTree& t) {
  int forks = 0;
  for (int v = 1; v <= t.size(); ++v)
    if (t.children(v).size() > 1) ++forks;
  return forks;
}

PlaneTree remove_vertex(const PlaneTree& t, int p) {
  if (p < 1 || p > t.size()) throw std::invalid_argument("vertex out of range");
  if (p == t.root()) throw std::invalid_argument("cannot remove the root");
  int q = t.parent(p);
  int c = static_cast<int>(t.children(p).size());
  int s = static_cast<int>(t.children(q).size()) - 1;
  std::vector<int> w = t.word();
  w.erase(w.begin() + (p - 1));
  w[q - 2] = s + c;  // parent letter, shifted left by the erase (q > p)
  return PlaneTree(w);
}

PlaneTree insert_type1(const PlaneTree& t, int p) {
  if (p < 1 || p > t.size())
    throw std::invalid_argument("insertion position out of range");
  int target = (p == 1) ? t.root() : t.parent(p - 1);
  std::vector<int> w = t.word();
  w.insert(w.begin() + (p - 1), 0);
  ++w[target];  // old 0-based target-1, shifted right by the insert
  return PlaneTree(w);
}

PlaneTree insert_type2(const PlaneTree& t, int p) {
  if (p < 2 || p > t.size())
    throw std::invalid_argument("insertion position out of range");
  int q = t.parent(p - 1);
  const auto& sibs = t.children(q);
  int c = static_cast<int>(std::find(sibs.begin(), sibs.end(), p - 1) -
                           sibs.begin()) + 1;
  std::vector<int> w = t.word();
  w.insert(w.begin() + (p - 1), c);
  w[q] -= c - 1;  // parent letter, shifted right by the insert
  return PlaneTree(w);
}

PlaneTree insert_marked_set(const PlaneTree& t, const std::vector<int>& positions,
                            const std::vector<int>& kinds) {
  if (positions.size() != kinds.size())
    throw std::invalid_argument("positions and kinds must have equal length");
  std::vector<std::pair<int, int>> marks;
  for (std::size_t s = 0; s < positions.size(); ++s)
    marks.emplace_back(positions[s], kinds[s]);
  std::sort(marks.begin(), marks.end());
  for (std::size_t s = 1; s < marks.size(); ++s)
    if (marks[s].first == marks[s - 1].first)
      throw std::invalid_argument("positions must be distinct");
  PlaneTree cur = t;
  for (auto [p, kind] : marks) {
    if (kind == 1)
      cur = insert_type1(cur, p);
    else if (kind == 2)
      cur = insert_type2(cur, p);
    else
      throw std::invalid_argument("kinds must be 1 or 2");
  }
  return cur;
}

int statistic_m(const PlaneTree& t, int i, int j, Scheme scheme) {
  int d = t.size();
  if (j >= d - 1)
    throw std::invalid_argument("statistic requires j < d-1");
  auto kind = classify(t, scheme);
  int m = 0;
  for (int v = 1; v < d; ++v) {
    if (kind[v] == 0)
      ++m;
    else if (kind[v] == 1 && (v <= i || v >= d - j))
      ++m;
    else if (kind[v] == 2 && v >= d - j)
      ++m;
  }
  return m;
}

Polynomial tree_statistic_sum(int d, int i, int j, Scheme scheme) {
  Polynomial sum;
  for (const auto& t : enumerate_plane_trees(d))
    sum += Polynomial::monomial(1, d - statistic_m(t, i, j, scheme));
  return sum;
}

Polynomial tree_kind_distribution(int n, Scheme scheme, int kind) {
  Polynomial sum;
  for (const auto& t : enumerate_plane_trees(n)) {
    auto kinds = classify(t, scheme);
    int cnt = static_cast<int>(std::count(kinds.begin(), kinds.end(), kind));
    sum += Polynomial::monomial(1, cnt);
  }
  return sum;
}

std::string tree_to_catalan(const PlaneTree& t) {
  std::string w;
  auto walk = [&](auto&& self, int v) -> void {
    for (int c : t.children(v)) {
      w += '+';
      self(self, c);
      w += '-';
    }
  };
  walk(walk, t.root());
  return w;
}

namespace {

// Position just past the segment matched by the '+' at `from`.
std::size_t match_end(const std::string& w, std::size_t from) {
  int depth = 0;
  for (std::size_t q = from; q < w.size(); ++q) {
    if (w[q] == '+')
      ++depth;
    else if (w[q] == '-')
      --depth;
    else
      throw std::invalid_argument("Catalan word may only contain + and -");
    if (depth == 0) return q + 1;
  }
  throw std::invalid_argument("unbalanced Catalan word");
}

}  // namespace

PlaneTree catalan_to_tree(const std::string& w) {
  std::vector<int> word;
  auto parse = [&](auto&& self, std::size_t lo, std::size_t hi) -> int {
    // Emits the subtrees of one vertex, returns its child count.
    int arity = 0;
    std::size_t q = lo;
    while (q < hi) {
      if (w[q] != '+') throw std::invalid_argument("unbalanced Catalan word");
      std::size_t end = match_end(w, q);
      if (end > hi) throw std::invalid_argument("unbalanced Catalan word");
      int sub = self(self, q + 1, end - 1);
      word.push_back(sub);
      ++arity;
      q = end;
    }
    return arity;
  };
  int root_arity = parse(parse, 0, w.size());
  word.push_back(root_arity);
  return PlaneTree(word);
}

BinaryTree catalan_to_binary(const std::string& w) {
  BinaryTree b;
  b.left.push_back(0);
  b.right.push_back(0);
  auto parse = [&](auto&& self, std::size_t lo, std::size_t hi) -> int {
    if (lo == hi) return 0;
    if (w[lo] != '+') throw std::invalid_argument("unbalanced Catalan word");
    std::size_t end = match_end(w, lo);
    if (end > hi) throw std::invalid_argument("unbalanced Catalan word");
    int l = self(self, lo + 1, end - 1);
    int r = self(self, end, hi);
    b.left.push_back(l);
    b.right.push_back(r);
    return b.size();
  };
  b.root = parse(parse, 0, w.size());
  return b;
}

std::string binary_to_catalan(const BinaryTree& b) {
  std::string w;
  auto emit = [&](auto&& self, int v) -> void {
    if (v == 0) return;
    w += '+';
    self(self, b.left[v]);
    w += '-';
    self(self, b.right[v]);
  };
  emit(emit, b.root);
  return w;
}

BinaryTree mirror_binary(const BinaryTree& b) {
  BinaryTree m = b;
  std::swap(m.left, m.right);
  return m;
}

PlaneTree mirror_tree(const PlaneTree& t) {
  std::vector<int> word;
  auto emit = [&](auto&& self, int v) -> void {
    const auto& ch = t.children(v);
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) self(self, *it);
    word.push_back(static_cast<int>(ch.size()));
  };
  emit(emit, t.root());
  return PlaneTree(word);
}

PlaneTree preorder_to_postorder(const PlaneTree& t) {
  std::string w = tree_to_catalan(t);
  BinaryTree b = mirror_binary(catalan_to_binary(w));
  return catalan_to_tree(binary_to_catalan(b));
}

}  // namespace toric
