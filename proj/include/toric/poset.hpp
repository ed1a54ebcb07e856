#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric/cubical.hpp"
#include "toric/polynomial.hpp"

namespace toric {

/// Finite graded poset given by cover relations. Immutable after
/// construction; the strict order is precomputed as bitset rows.
class GradedPoset {
 public:
  /// ranks[v] is the rank of element v; each cover (lo, hi) must raise rank
  /// by exactly one; `bottom` must be the unique minimum; `top`, when given,
  /// the unique maximum. Optional labels are used in error messages and JSON.
  GradedPoset(std::vector<int> ranks, std::vector<std::pair<int, int>> covers,
              int bottom, std::optional<int> top = std::nullopt,
              std::vector<std::string> labels = {});

  int size() const { return static_cast<int>(ranks_.size()); }
  int rank(int v) const { return ranks_[v]; }
  int bottom() const { return bottom_; }
  std::optional<int> top() const { return top_; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int v) const;

  /// Strict order: a < b.
  bool less(int a, int b) const {
    return (up_[a][static_cast<std::size_t>(b) >> 6] >> (b & 63)) & 1u;
  }

 private:
  std::vector<int> ranks_;
  std::vector<std::pair<int, int>> covers_;
  int bottom_;
  std::optional<int> top_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::uint64_t>> up_;  // strict up-sets, bit per element
};

/// Every closed interval of length >= 2 has equally many elements at odd and
/// even ranks. Requires bottom and top.
bool is_eulerian(const GradedPoset& p);

/// Stanley's toric h-polynomial f(P,x) of the input with its maximum removed
/// (when a top was supplied). Checks the lower-Eulerian precondition and
/// throws naming the offending interval otherwise.
Polynomial stanley_f(const GradedPoset& p);

/// Toric g-polynomial: truncated difference polynomial of stanley_f.
/// Requires a top (its rank fixes the truncation degree).
Polynomial stanley_g(const GradedPoset& p);

/// Face lattice of the d-cube: the empty face below all 3^d faces, the
/// all-stars face as the maximum. rank(face) = stars + 1.
GradedPoset cube_face_lattice(int d);

/// Face poset of a cubical complex: empty face as bottom, no top.
GradedPoset face_poset(const CubicalComplex& c);

/// Toric h- and g-polynomials of a cubical complex per the polyhedral-complex
/// adaptation: h = x^{d+1} f(face poset, 1/x), g the truncated differences.
std::pair<Polynomial, Polynomial> toric_h_and_g_of_complex(const CubicalComplex& c);

}  // namespace toric
