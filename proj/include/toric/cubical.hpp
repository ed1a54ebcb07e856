#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toric/polynomial.hpp"

namespace toric {

/// A face of a cubical complex: a string over {'0','1','*'}, one character
/// per ambient coordinate. Star positions are the free directions, so a face
/// with s stars is an s-cube.
using Face = std::string;

int star_count(const Face& f);
bool is_subface(const Face& sub, const Face& sup);

/// All faces obtained from f by fixing exactly `codim` of its star
/// coordinates to 0 or 1. Throws if codim exceeds the star count.
std::vector<Face> facet_faces(const Face& f, int codim);

/// All subfaces of f, including f itself.
std::vector<Face> closed_faces(const Face& f);

struct CubicalComplex {
  int ambient = 0;
  std::vector<Face> facets;

  /// Dimension of the facets (star count); requires a pure nonempty complex.
  int dim() const;
  void validate() const;  // pure, facets pairwise incomparable, chars in {0,1,*}
};

struct ShellStep {
  int i = 0;
  int j = 0;
  bool operator==(const ShellStep&) const = default;
};

struct Shelling {
  std::vector<int> order;        // permutation of facet indices
  std::vector<ShellStep> types;  // one per facet; first is (0,0)
};

/// Classifies the shelling step that adds facet f to a union of earlier
/// facets, given as the set of all their closed faces. d is the facet
/// dimension plus one. Verifies that the intersection is a union of complete
/// closed codimension-1 faces of f and that the resulting type is legal.
ShellStep shelling_type(const std::set<Face>& prev_union, const Face& f, int d);

enum class GForm { gessel, catalan };

/// Toric g-polynomial of the face lattice of the d-cube, by either closed form.
Polynomial g_cube(int d, GForm form = GForm::catalan);

bool legal_type(int d, int i, int j);
std::vector<ShellStep> legal_types(int d);

/// Contribution of a type-(i,j) shelling facet to f(P,x) of the face poset of
/// a (d-1)-dimensional cubical complex. (0,0) is the first-facet contribution.
Polynomial f_contrib(int d, int i, int j);

/// Same value computed through Chan's recursions; memoized.
Polynomial f_contrib_recursive(int d, int i, int j);

/// Contribution to the toric h-polynomial; equals reverse(f_contrib, d).
Polynomial h_contrib(int d, int i, int j);

/// Validates `order` as a shelling of c, classifying every step, and returns
/// the accumulated f-polynomial contribution.
std::pair<Shelling, Polynomial> shell_complex(const CubicalComplex& c,
                                              const std::vector<int>& order);

}  // namespace toric
