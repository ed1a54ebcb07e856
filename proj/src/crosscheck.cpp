#include "toric/crosscheck.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toric/cubical.hpp"
#include "toric/motzkin.hpp"
#include "toric/noncrossing.hpp"
#include "toric/polynomial.hpp"
#include "toric/poset.hpp"
#include "toric/trees.hpp"

namespace toric {

namespace {

CubicalComplex cube_boundary(int d) {
  CubicalComplex c;
  c.ambient = d;
  for (char v : {'0', '1'})
    for (int q = 0; q < d; ++q) {
      Face f(static_cast<std::size_t>(d), '*');
      f[q] = v;
      c.facets.push_back(f);
    }
  return c;
}

std::string mismatch(int d, const std::string& what) {
  return "first mismatch at d=" + std::to_string(d) + " (" + what + ")";
}

std::string mismatch_ij(int d, int i, int j, const std::string& what) {
  return "first mismatch at d=" + std::to_string(d) + ", (i,j)=(" +
         std::to_string(i) + "," + std::to_string(j) + ") (" + what + ")";
}

CheckResult five_way_g(int max_d) {
  for (int d = 0; d <= std::min(10, max_d); ++d) {
    Polynomial g = g_cube(d, GForm::catalan);
    if (g_cube(d, GForm::gessel) != g)
      return {"five_way_g", false, mismatch(d, "gessel vs catalan")};
    if (tree_kind_distribution(d + 1, Scheme::paren, 0) != g)
      return {"five_way_g", false, mismatch(d, "type-(0) distribution")};
    if (nc_nonsingleton_distribution(d) != g)
      return {"five_way_g", false, mismatch(d, "nonsingleton blocks")};
    if (nc_filler_distribution(d) != g)
      return {"five_way_g", false, mismatch(d, "fillers")};
    if (motzkin_g(d) != g)
      return {"five_way_g", false, mismatch(d, "colored Motzkin")};
    if (d <= 7 && stanley_g(cube_face_lattice(d)) != g)
      return {"five_way_g", false, mismatch(d, "cube face lattice")};
  }
  return {"five_way_g", true, "six models agree"};
}

CheckResult contrib_consistency(int max_d) {
  for (int d = 1; d <= std::min(10, max_d); ++d)
    for (auto [i, j] : legal_types(d)) {
      Polynomial f = f_contrib(d, i, j);
      if (f_contrib_recursive(d, i, j) != f)
        return {"contrib_consistency", false,
                mismatch_ij(d, i, j, "closed vs recursive")};
      if (h_contrib(d, i, j).reverse(d) != f)
        return {"contrib_consistency", false,
                mismatch_ij(d, i, j, "h vs reversed f")};
    }
  return {"contrib_consistency", true, "closed, recursive, and h forms agree"};
}

CheckResult model_theorems(int max_d) {
  for (int d = 2; d <= std::min(8, max_d); ++d)
    for (auto [i, j] : legal_types(d)) {
      if (j >= d - 1) continue;
      Polynomial f = f_contrib(d, i, j);
      Scheme scheme = i == 0 ? Scheme::paren : Scheme::bracket;
      if (tree_statistic_sum(d, i, j, scheme) != f)
        return {"model_theorems", false, mismatch_ij(d, i, j, "tree statistic")};
      if (nc_statistic_sum(d, i, j) != f)
        return {"model_theorems", false,
                mismatch_ij(d, i, j, "noncrossing statistic")};
    }
  return {"model_theorems", true, "tree and partition statistics match f"};
}

CheckResult shelling_oracle(int max_d) {
  auto check_one = [](const CubicalComplex& c,
                      const std::vector<int>& order) -> std::string {
    auto [sh, total] = shell_complex(c, order);
    if (total != stanley_f(face_poset(c))) return "shelled total != poset value";
    return "";
  };
  for (int d = 2; d <= std::min(5, max_d); ++d) {
    CubicalComplex c = cube_boundary(d);
    std::vector<int> order(c.facets.size());
    for (std::size_t q = 0; q < order.size(); ++q) order[q] = static_cast<int>(q);
    if (auto err = check_one(c, order); !err.empty())
      return {"shelling_oracle", false, "cube boundary d=" + std::to_string(d) +
                                            ": " + err};
  }
  CubicalComplex lshape{3, {"**0", "0**"}};
  if (auto err = check_one(lshape, {0, 1}); !err.empty())
    return {"shelling_oracle", false, "L-shaped grid complex: " + err};
  CubicalComplex strip{4, {"**00", "0**0", "00**"}};
  if (auto err = check_one(strip, {0, 1, 2}); !err.empty())
    return {"shelling_oracle", false, "three-square strip: " + err};

  auto [sq, sq_total] = shell_complex(cube_boundary(2), {0, 1, 2, 3});
  std::vector<ShellStep> expect{{0, 0}, {1, 0}, {1, 0}, {0, 1}};
  if (sq.types != expect)
    return {"shelling_oracle", false, "square boundary types differ"};
  if (sq_total != Polynomial({1, 2, 1}))
    return {"shelling_oracle", false, "square boundary total != 1+2x+x^2"};
  return {"shelling_oracle", true, "shelled totals equal poset h-polynomials"};
}

CheckResult special_values(int max_d) {
  for (int d = 1; d <= std::min(12, max_d); ++d) {
    if (f_contrib(d, 0, 0) != g_cube(d - 1).reverse(d))
      return {"special_values", false, mismatch(d, "f(0,0) vs reversed g")};
    if (d >= 2 && f_contrib(d, 0, d - 1) != g_cube(d - 1))
      return {"special_values", false, mismatch(d, "f(0,d-1) vs g")};
  }
  for (int d = 0; d <= std::min(7, max_d); ++d) {
    Polynomial f = stanley_f(cube_face_lattice(d));
    if (f.reverse(d) != f)
      return {"special_values", false, mismatch(d, "palindromic f")};
  }
  for (int d = 0; d <= std::min(6, max_d); ++d) {
    // Cube face lattice with one extra element on top: its f-polynomial,
    // reversed in degree d+1, must equal the g-polynomial of the lattice.
    GradedPoset p = cube_face_lattice(d);
    std::vector<int> ranks;
    for (int v = 0; v < p.size(); ++v) ranks.push_back(p.rank(v));
    ranks.push_back(d + 2);
    auto covers = p.covers();
    covers.emplace_back(*p.top(), p.size());
    GradedPoset q(std::move(ranks), std::move(covers), p.bottom(), p.size());
    if (stanley_f(q).reverse(d + 1) != stanley_g(p))
      return {"special_values", false, mismatch(d, "coned lattice duality")};
  }
  return {"special_values", true, "base cases and dualities hold"};
}

CheckResult nonnegativity(int max_d) {
  for (int d = 1; d <= std::min(10, max_d); ++d)
    for (auto [i, j] : legal_types(d)) {
      Polynomial h = h_contrib(d, i, j);
      for (int k = 0; k <= d; ++k)
        if (h.coeff(k) < 0)
          return {"nonnegativity", false,
                  mismatch_ij(d, i, j, "negative h coefficient")};
    }
  return {"nonnegativity", true, "all h contributions nonnegative"};
}

CheckResult round_trips(int max_d) {
  for (int n = 1; n <= std::min(9, max_d); ++n) {
    std::set<std::vector<int>> images;
    for (const auto& t : enumerate_plane_trees(n)) {
      if (decode_polish(encode_polish(t)) != t)
        return {"round_trips", false, "Polish word round trip, n=" +
                                          std::to_string(n)};
      NCPartition p = tree_to_nc(t);
      if (!p.noncrossing() || nc_to_tree(p) != t ||
          NCPartition::parse(p.ground_size(), p.str()) != p)
        return {"round_trips", false,
                "tree/partition round trip at " + encode_polish(t)};
      PlaneTree post = preorder_to_postorder(t);
      images.insert(post.word());
      auto kinds = classify(post, Scheme::paren);
      int zeros = static_cast<int>(std::count(kinds.begin(), kinds.end(), 0));
      if (zeros != count_forks(t))
        return {"round_trips", false,
                "fork count not preserved at " + encode_polish(t)};
    }
    if (images.size() != enumerate_plane_trees(n).size())
      return {"round_trips", false,
              "preorder/postorder chain not injective, n=" + std::to_string(n)};
  }

  // Marked insertion: for each small tree, position set, and kind choice over
  // {[1],[2]}, exactly one larger tree carries those special vertices there
  // and contracts back, and insert_marked_set builds it.
  for (int n = 3; n <= std::min(7, max_d); ++n) {
    std::map<std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>,
             int>
        hits;
    for (const auto& u : enumerate_plane_trees(n)) {
      auto kinds = classify(u, Scheme::bracket);
      for (int p = 1; p < n; ++p) {
        if (kinds[p] != 1 && kinds[p] != 2) continue;
        PlaneTree base = remove_vertex(u, p);
        ++hits[{base.word(), {p}, {kinds[p]}}];
        if (insert_marked_set(base, {p}, {kinds[p]}) != u)
          return {"round_trips", false,
                  "single marked insertion at " + encode_polish(u)};
        for (int p2 = p + 1; p2 < n; ++p2) {
          if (kinds[p2] != 1 && kinds[p2] != 2) continue;
          PlaneTree base2 = remove_vertex(remove_vertex(u, p2), p);
          ++hits[{base2.word(), {p, p2}, {kinds[p], kinds[p2]}}];
          if (insert_marked_set(base2, {p, p2}, {kinds[p], kinds[p2]}) != u)
            return {"round_trips", false,
                    "double marked insertion at " + encode_polish(u)};
        }
      }
    }
    for (const auto& [key, count] : hits)
      if (count != 1)
        return {"round_trips", false,
                "marked insertion not unique, n=" + std::to_string(n)};
  }
  return {"round_trips", true, "all encodings and bijections invert"};
}

CheckResult denise_simion(int max_d) {
  Polynomial omt({1, -1});
  for (int n = 0; n <= std::min(10, max_d); ++n) {
    Polynomial rhs = pow(omt, n + 1);
    if (g_cube(n) != rhs + Polynomial::x() * P_recursion(n + 1))
      return {"denise_simion", false, mismatch(n, "recursive P")};
    if (g_cube(n) != rhs + Polynomial::x() * nc_weighted_P(n + 1))
      return {"denise_simion", false, mismatch(n, "weighted partition P")};
  }
  for (int k = 0; k <= std::min(12, max_d); ++k)
    if (g_recursion(k) != g_cube(k))
      return {"denise_simion", false, mismatch(k, "g recursion")};
  return {"denise_simion", true, "P and g recursions consistent"};
}

CheckResult viennot(int max_d) {
  MomentSpec spec = catalan_moment_spec(std::min(12, max_d) / 2 + 1);
  for (int n = 0; n <= std::min(12, max_d); ++n)
    if (weighted_moment(n, spec) != Polynomial(catalan(n)))
      return {"viennot", false, mismatch(n, "Catalan moment")};
  for (int k = 0; k <= std::min(8, max_d); ++k)
    for (int l = 0; l <= std::min(8, max_d); ++l) {
      Int v = orthogonality_check(k, l);
      if ((k != l && v != 0) || (k == l && v == 0))
        return {"viennot", false,
                "orthogonality fails at (k,l)=(" + std::to_string(k) + "," +
                    std::to_string(l) + ")"};
    }
  for (int n = 0; n <= std::min(15, max_d); ++n) {
    Polynomial p = morgan_voyce(n, MorganVoyce::p).substitute_affine(-1, 0);
    if (n % 2) p = -p;
    if (p != morgan_voyce(n, MorganVoyce::b))
      return {"viennot", false, mismatch(n, "Morgan-Voyce sign relation")};
  }
  return {"viennot", true, "moments, orthogonality, and sign relation hold"};
}

CheckResult counting(int max_d) {
  for (int n = 1; n <= std::min(12, max_d); ++n) {
    if (Int(enumerate_plane_trees(n).size()) != catalan(n - 1))
      return {"counting", false, "tree count at n=" + std::to_string(n)};
    if (n <= 12 && Int(enumerate_nc(n).size()) != catalan(n))
      return {"counting", false, "partition count at n=" + std::to_string(n)};
  }
  return {"counting", true, "Catalan counts confirmed"};
}

}  // namespace

std::vector<CheckResult> run_crosscheck(int max_d) {
  return {
      five_way_g(max_d),     contrib_consistency(max_d),
      model_theorems(max_d), shelling_oracle(max_d),
      special_values(max_d), nonnegativity(max_d),
      round_trips(max_d),    denise_simion(max_d),
      viennot(max_d),        counting(max_d),
  };
}

}  // namespace toric
