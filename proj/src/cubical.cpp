#include "toric/cubical.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace toric {

int star_count(const Face& f) {
  return static_cast<int>(std::count(f.begin(), f.end(), '*'));
}

bool is_subface(const Face& sub, const Face& sup) {
  if (sub.size() != sup.size()) return false;
  for (std::size_t q = 0; q < sub.size(); ++q)
    if (sup[q] != '*' && sub[q] != sup[q]) return false;
  return true;
}

std::vector<Face> facet_faces(const Face& f, int codim) {
  std::vector<int> stars;
  for (std::size_t q = 0; q < f.size(); ++q)
    if (f[q] == '*') stars.push_back(static_cast<int>(q));
  if (codim < 0 || codim > static_cast<int>(stars.size()))
    throw std::invalid_argument("facet_faces: codim exceeds star count");

  std::vector<Face> out;
  // Choose codim star positions, then all 0/1 assignments for them.
  std::vector<int> pick(codim);
  auto rec = [&](auto&& self, int from, int depth) -> void {
    if (depth == codim) {
      for (int mask = 0; mask < (1 << codim); ++mask) {
        Face g = f;
        for (int b = 0; b < codim; ++b)
          g[stars[pick[b]]] = (mask >> b & 1) ? '1' : '0';
        out.push_back(g);
      }
      return;
    }
    for (int q = from; q < static_cast<int>(stars.size()); ++q) {
      pick[depth] = q;
      self(self, q + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<Face> closed_faces(const Face& f) {
  std::vector<Face> out;
  for (int c = 0; c <= star_count(f); ++c) {
    auto fs = facet_faces(f, c);
    out.insert(out.end(), fs.begin(), fs.end());
  }
  return out;
}

int CubicalComplex::dim() const {
  validate();
  return star_count(facets.front());
}

void CubicalComplex::validate() const {
  if (facets.empty()) throw std::invalid_argument("empty cubical complex");
  int s = star_count(facets.front());
  for (const auto& f : facets) {
    if (static_cast<int>(f.size()) != ambient)
      throw std::invalid_argument("facet length does not match ambient dimension");
    if (f.find_first_not_of("01*") != Face::npos)
      throw std::invalid_argument("facet contains characters outside {0,1,*}");
    if (star_count(f) != s)
      throw std::invalid_argument("complex is not pure");
  }
  for (std::size_t a = 0; a < facets.size(); ++a)
    for (std::size_t b = 0; b < facets.size(); ++b)
      if (a != b && facets[a] == facets[b])
        throw std::invalid_argument("duplicate facet");
}

ShellStep shelling_type(const std::set<Face>& prev_union, const Face& f, int d) {
  if (star_count(f) != d - 1)
    throw std::invalid_argument("shelling_type: facet is not a (d-1)-cube");

  std::vector<Face> hit;  // codim-1 faces of f present in the earlier union
  int i = 0, j = 0;
  for (std::size_t q = 0; q < f.size(); ++q) {
    if (f[q] != '*') continue;
    Face lo = f, hi = f;
    lo[q] = '0';
    hi[q] = '1';
    bool in_lo = prev_union.count(lo) > 0, in_hi = prev_union.count(hi) > 0;
    if (in_lo && in_hi) {
      ++j;
      hit.push_back(lo);
      hit.push_back(hi);
    } else if (in_lo || in_hi) {
      ++i;
      hit.push_back(in_lo ? lo : hi);
    }
  }

  // The intersection with the earlier union must be exactly the union of the
  // closed codim-1 faces found above.
  std::set<Face> covered;
  for (const auto& g : hit)
    for (const auto& s : closed_faces(g)) covered.insert(s);
  for (const auto& s : closed_faces(f))
    if (prev_union.count(s) && !covered.count(s))
      throw std::invalid_argument("not a valid shelling step: facet " + f +
                                  " meets the earlier union outside a union of "
                                  "closed codimension-1 faces (at " + s + ")");

  if (i == 0 && j != d - 1)
    throw std::invalid_argument("illegal type (0," + std::to_string(j) +
                                ") for facet " + f);
  return {i, j};
}

Polynomial g_cube(int d, GForm form) {
  if (d < 0) throw std::invalid_argument("g_cube: negative dimension");
  Polynomial g;
  Polynomial xm1({-1, 1});
  for (int k = 0; k <= d / 2; ++k) {
    Int c;
    if (form == GForm::gessel) {
      c = binomial(d, k) * binomial(2 * d - 2 * k, d);
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(),
                      static_cast<unsigned long>(d - k + 1));
    } else {
      c = catalan(d - k) * binomial(d - k, k);
    }
    g += Polynomial(c) * pow(xm1, k);
  }
  return g;
}

bool legal_type(int d, int i, int j) {
  if (d < 1 || i < 0 || j < 0) return false;
  if (i == 0) return j == 0 || j == d - 1;
  return i + j <= d - 1;
}

std::vector<ShellStep> legal_types(int d) {
  std::vector<ShellStep> out;
  out.push_back({0, 0});
  if (d >= 2) out.push_back({0, d - 1});
  for (int i = 1; i <= d - 1; ++i)
    for (int j = 0; i + j <= d - 1; ++j) out.push_back({i, j});
  return out;
}

Polynomial f_contrib(int d, int i, int j) {
  if (!legal_type(d, i, j))
    throw std::invalid_argument("illegal shelling type (" + std::to_string(i) +
                                "," + std::to_string(j) + ") for d=" +
                                std::to_string(d));
  Polynomial one_minus_x({1, -1});
  if (i == 0 && j == d - 1 && d >= 2) {
    // f_d(0,d-1,x) = g(L_{d-1},x)
    return g_cube(d - 1);
  }
  Polynomial f;
  for (int k = 0; k <= d - 1; ++k) {
    Int inner = 0;
    for (int s = 0; s <= j; ++s)
      inner += binomial(j, s) * binomial(d + i + j - 1 - k - s, k - s);
    f += Polynomial(catalan(d - 1 - k) * inner) * pow(one_minus_x, k) *
         Polynomial::monomial(1, d - k);
  }
  return f;
}

Polynomial f_contrib_recursive(int d, int i, int j) {
  if (!legal_type(d, i, j))
    throw std::invalid_argument("illegal shelling type (" + std::to_string(i) +
                                "," + std::to_string(j) + ") for d=" +
                                std::to_string(d));
  static std::map<std::tuple<int, int, int>, Polynomial> memo;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);

  auto rec = [&](auto&& self, int dd, int ii, int jj) -> Polynomial {
    auto key = std::make_tuple(dd, ii, jj);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Polynomial xm1({-1, 1});
    Polynomial r;
    if (ii == 0 && jj == 0) {
      r = g_cube(dd - 1).reverse(dd);  // f_d(0,0,x) = x^d g(L_{d-1},1/x)
    } else if (ii == 0) {
      r = g_cube(dd - 1);  // f_d(0,d-1,x)
    } else if (jj == 0) {
      r = self(self, dd, ii - 1, 0) - xm1 * self(self, dd - 1, ii - 1, 0);
    } else {
      r = self(self, dd, ii, jj - 1) -
          Polynomial(2) * xm1 * self(self, dd - 1, ii, jj - 1);
    }
    memo.emplace(key, r);
    return r;
  };
  return rec(rec, d, i, j);
}

Polynomial h_contrib(int d, int i, int j) {
  if (!legal_type(d, i, j))
    throw std::invalid_argument("illegal shelling type (" + std::to_string(i) +
                                "," + std::to_string(j) + ") for d=" +
                                std::to_string(d));
  Polynomial h;
  if (i == 0 && j == d - 1 && d >= 2) {
    // h_d(0,d-1,x) = sum_k C_{d-1-k} binom(d-1-k,k) x^{d-k} (1-x)^k
    Polynomial one_minus_x({1, -1});
    for (int k = 0; k <= d - 1; ++k)
      h += Polynomial(catalan(d - 1 - k) * binomial(d - 1 - k, k)) *
           Polynomial::monomial(1, d - k) * pow(one_minus_x, k);
    return h;
  }
  Polynomial xm1({-1, 1});
  for (int k = 0; k <= d - 1; ++k) {
    Int inner = 0;
    for (int s = 0; s <= j; ++s)
      inner += binomial(j, s) * binomial(d + i + j - 1 - k - s, k - s);
    h += Polynomial(catalan(d - 1 - k) * inner) * pow(xm1, k);
  }
  return h;
}

std::pair<Shelling, Polynomial> shell_complex(const CubicalComplex& c,
                                              const std::vector<int>& order) {
  c.validate();
  int d = c.dim() + 1;
  std::vector<int> seen(c.facets.size(), 0);
  if (order.size() != c.facets.size())
    throw std::invalid_argument("shelling order must cover all facets");
  for (int idx : order) {
    if (idx < 0 || idx >= static_cast<int>(c.facets.size()) || seen[idx]++)
      throw std::invalid_argument("shelling order is not a permutation of facets");
  }

  Shelling sh;
  sh.order = order;
  Polynomial total;
  std::set<Face> prev;
  for (std::size_t t = 0; t < order.size(); ++t) {
    const Face& f = c.facets[order[t]];
    if (t == 0) {
      sh.types.push_back({0, 0});
      total += f_contrib(d, 0, 0);
    } else {
      ShellStep step = shelling_type(prev, f, d);
      sh.types.push_back(step);
      // A later facet of type (0,d-1) contributes g(L_{d-1},x), also when
      // d=1 where the pair (0,0) would otherwise mean the first facet.
      total += (step.i == 0) ? g_cube(d - 1) : f_contrib(d, step.i, step.j);
    }
    for (const auto& s : closed_faces(f)) prev.insert(s);
  }
  return {sh, total};
}

}  // namespace toric
