#include "toric/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace toric {

namespace {

Polynomial truncated_differences(const Polynomial& f, int half) {
  // g = sum_{i=0}^{half} (k_i - k_{i-1}) x^i with k_{-1} = 0.
  std::vector<Int> g(static_cast<std::size_t>(half) + 1, 0);
  for (int i = 0; i <= half; ++i)
    g[i] = f.coeff(i) - (i > 0 ? f.coeff(i - 1) : Int(0));
  return Polynomial(std::move(g));
}

}  // namespace

GradedPoset::GradedPoset(std::vector<int> ranks,
                         std::vector<std::pair<int, int>> covers, int bottom,
                         std::optional<int> top, std::vector<std::string> labels)
    : ranks_(std::move(ranks)),
      covers_(std::move(covers)),
      bottom_(bottom),
      top_(top),
      labels_(std::move(labels)) {
  int n = size();
  if (n == 0) throw std::invalid_argument("poset must be nonempty");
  if (bottom_ < 0 || bottom_ >= n) throw std::invalid_argument("bad bottom id");
  if (top_ && (*top_ < 0 || *top_ >= n)) throw std::invalid_argument("bad top id");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
    throw std::invalid_argument("label count mismatch");
  for (auto [lo, hi] : covers_) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n)
      throw std::invalid_argument("cover references unknown element");
    if (ranks_[hi] != ranks_[lo] + 1)
      throw std::invalid_argument("cover does not raise rank by one");
  }

  // Strict up-sets, filled in decreasing rank order.
  std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  up_.assign(n, std::vector<std::uint64_t>(words, 0));
  std::vector<int> by_rank(n);
  std::iota(by_rank.begin(), by_rank.end(), 0);
  std::sort(by_rank.begin(), by_rank.end(),
            [&](int a, int b) { return ranks_[a] > ranks_[b]; });
  std::vector<std::vector<int>> above(n);
  for (auto [lo, hi] : covers_) above[lo].push_back(hi);
  for (int v : by_rank)
    for (int w : above[v]) {
      up_[v][static_cast<std::size_t>(w) >> 6] |= 1ull << (w & 63);
      for (std::size_t k = 0; k < words; ++k) up_[v][k] |= up_[w][k];
    }

  for (int v = 0; v < n; ++v) {
    if (v != bottom_ && !less(bottom_, v))
      throw std::invalid_argument("bottom is not below every element");
    if (top_ && v != *top_ && !less(v, *top_))
      throw std::invalid_argument("top is not above every element");
  }
}

std::string GradedPoset::label(int v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

namespace {

// Checks parity balance of the closed interval [a,b]; used by both the
// Eulerian check and the lower-Eulerian precondition of stanley_f.
bool interval_balanced(const GradedPoset& p, int a, int b,
                       const std::vector<int>& middles) {
  int bal = (p.rank(a) % 2 == 0 ? 1 : -1) + (p.rank(b) % 2 == 0 ? 1 : -1);
  for (int z : middles)
    if (p.less(a, z) && p.less(z, b)) bal += p.rank(z) % 2 == 0 ? 1 : -1;
  return bal == 0;
}

// Returns an offending pair (a,b), or nullopt if every closed interval
// within the element set `keep` is balanced.
std::optional<std::pair<int, int>> find_unbalanced(const GradedPoset& p,
                                                   const std::vector<int>& keep) {
  for (int a : keep) {
    std::vector<int> up;
    for (int b : keep)
      if (p.less(a, b)) up.push_back(b);
    for (int b : up)
      if (p.rank(b) - p.rank(a) >= 2 && !interval_balanced(p, a, b, up))
        return std::make_pair(a, b);
  }
  return std::nullopt;
}

}  // namespace

bool is_eulerian(const GradedPoset& p) {
  if (!p.top()) throw std::invalid_argument("is_eulerian requires a top element");
  std::vector<int> all(p.size());
  std::iota(all.begin(), all.end(), 0);
  return !find_unbalanced(p, all);
}

Polynomial stanley_f(const GradedPoset& p) {
  std::vector<int> keep;
  for (int v = 0; v < p.size(); ++v)
    if (!p.top() || v != *p.top()) keep.push_back(v);

  if (auto bad = find_unbalanced(p, keep))
    throw std::invalid_argument("poset is not lower Eulerian: interval [" +
                                p.label(bad->first) + ", " +
                                p.label(bad->second) + "] is unbalanced");

  int d = 0;
  for (int v : keep) d = std::max(d, p.rank(v));

  // g([0,t), x) per element, in increasing rank order.
  std::vector<Polynomial> g_below(p.size());
  std::vector<int> by_rank = keep;
  std::sort(by_rank.begin(), by_rank.end(),
            [&](int a, int b) { return p.rank(a) < p.rank(b); });
  Polynomial xm1({-1, 1});
  for (int t : by_rank) {
    if (t == p.bottom()) {
      g_below[t] = Polynomial(1);  // [0,0) is empty, f = g = 1
      continue;
    }
    int dt = p.rank(t) - 1;
    Polynomial f;
    for (int s : keep)
      if (s == p.bottom() || p.less(s, t))
        if (s != t) f += g_below[s] * pow(xm1, dt - p.rank(s));
    g_below[t] = truncated_differences(f, dt / 2);
  }

  Polynomial f;
  for (int t : keep) f += g_below[t] * pow(xm1, d - p.rank(t));
  return f;
}

Polynomial stanley_g(const GradedPoset& p) {
  if (!p.top()) throw std::invalid_argument("stanley_g requires a top element");
  int d = p.rank(*p.top()) - 1;
  return truncated_differences(stanley_f(p), d / 2);
}

GradedPoset cube_face_lattice(int d) {
  if (d < 0) throw std::invalid_argument("cube_face_lattice: negative dimension");
  // Element 0 is the empty face; faces follow in lexicographic order.
  std::vector<Face> faces;
  Face cur(static_cast<std::size_t>(d), '0');
  auto gen = [&](auto&& self, int pos) -> void {
    if (pos == d) {
      faces.push_back(cur);
      return;
    }
    for (char ch : {'0', '1', '*'}) {
      cur[pos] = ch;
      self(self, pos + 1);
    }
  };
  gen(gen, 0);

  std::map<Face, int> id;
  std::vector<int> ranks{0};
  std::vector<std::string> labels{"<empty>"};
  for (const auto& f : faces) {
    id[f] = static_cast<int>(ranks.size());
    ranks.push_back(star_count(f) + 1);
    labels.push_back(f.empty() ? "<point>" : f);
  }

  std::vector<std::pair<int, int>> covers;
  for (const auto& f : faces) {
    if (star_count(f) == 0) {
      covers.emplace_back(0, id[f]);
      continue;
    }
    for (std::size_t q = 0; q < f.size(); ++q) {
      if (f[q] != '*') continue;
      for (char v : {'0', '1'}) {
        Face sub = f;
        sub[q] = v;
        covers.emplace_back(id[sub], id[f]);
      }
    }
  }
  int top = id[Face(static_cast<std::size_t>(d), '*')];
  return GradedPoset(std::move(ranks), std::move(covers), 0, top,
                     std::move(labels));
}

GradedPoset face_poset(const CubicalComplex& c) {
  c.validate();
  std::map<Face, int> id;
  std::vector<Face> faces;
  for (const auto& fct : c.facets)
    for (const auto& f : closed_faces(fct))
      if (id.emplace(f, 0).second) faces.push_back(f);
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    return std::pair(star_count(a), a) < std::pair(star_count(b), b);
  });

  std::vector<int> ranks{0};
  std::vector<std::string> labels{"<empty>"};
  for (const auto& f : faces) {
    id[f] = static_cast<int>(ranks.size());
    ranks.push_back(star_count(f) + 1);
    labels.push_back(f);
  }
  std::vector<std::pair<int, int>> covers;
  for (const auto& f : faces) {
    if (star_count(f) == 0) {
      covers.emplace_back(0, id[f]);
      continue;
    }
    for (std::size_t q = 0; q < f.size(); ++q) {
      if (f[q] != '*') continue;
      for (char v : {'0', '1'}) {
        Face sub = f;
        sub[q] = v;
        covers.emplace_back(id[sub], id[f]);
      }
    }
  }
  return GradedPoset(std::move(ranks), std::move(covers), 0, std::nullopt,
                     std::move(labels));
}

std::pair<Polynomial, Polynomial> toric_h_and_g_of_complex(const CubicalComplex& c) {
  int d = c.dim();
  Polynomial hbar = stanley_f(face_poset(c));
  Polynomial h = hbar.reverse(static_cast<std::size_t>(d) + 1);
  Polynomial g = truncated_differences(h, (d + 1) / 2);
  return {h, g};
}

}  // namespace toric
