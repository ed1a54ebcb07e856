#pragma once

#include <string>
#include <vector>

#include "toric/polynomial.hpp"

namespace toric {

/// One step of a colored Motzkin path. Horizontal steps at level 0 are
/// always red; blue is only available at positive levels.
enum class Step { up, down, red, blue };

using MotzkinPath = std::vector<Step>;

/// Throws unless the path stays nonnegative, returns to level 0, and uses
/// red for every level-0 horizontal step.
void validate_path(const MotzkinPath& p);

/// Serialization over {U, D, r, b}.
std::string path_str(const MotzkinPath& p);
MotzkinPath parse_path(const std::string& s);

/// All valid colored paths of length n. Intended for small n.
std::vector<MotzkinPath> enumerate_motzkin(int n);

/// Adjacent pairs whose first step is up or blue and whose second is red
/// or down.
int s_statistic(const MotzkinPath& p);

/// Generating polynomial sum of t^{s(p)} over the colored paths of length n.
/// Walks the paths without storing them, so usable up to n around 14.
Polynomial motzkin_g(int n);

/// g_k(t) = (1-t)^k + sum_{i=1}^k g_{i-1}(t) (g_{k-i}(t) - (1-t)^{k+1-i}),
/// g_0 = 1.
Polynomial g_recursion(int k);

/// P_k(t) = (1-t)^{k-1}
///        + sum_{i=1}^{k-1} ((1-t)^i P_{k-i}(t) + t P_i(t) P_{k-i}(t)),
/// P_1 = 1.
Polynomial P_recursion(int k);

enum class MorganVoyce { b, p };

/// b_{n+1} = (x+2) b_n - b_{n-1}, b_0 = 1, b_1 = x+1;
/// p_{n+1} = (x-2) p_n - p_{n-1}, p_0 = 1, p_1 = x-1.
Polynomial morgan_voyce(int n, MorganVoyce variant);

/// Level-indexed weights for uncolored Motzkin paths: horizontal at level i
/// weighs b[i], a down step starting at level i weighs lambda[i]; up steps
/// weigh 1. lambda[0] is never used.
struct MomentSpec {
  std::vector<Polynomial> b;
  std::vector<Polynomial> lambda;
};

/// Total weight of the uncolored Motzkin paths of length n, by dynamic
/// programming over levels. Throws when the weights miss a reachable level.
Polynomial weighted_moment(int n, const MomentSpec& spec);

/// The b0=1, b_i=2, lambda_i=1 spec; its moments are the Catalan numbers.
MomentSpec catalan_moment_spec(int max_level);

/// Applies the Catalan-moment functional to the product p_k * p_l of
/// Morgan-Voyce p-polynomials; zero exactly when k != l.
Int orthogonality_check(int k, int l);

}  // namespace toric
