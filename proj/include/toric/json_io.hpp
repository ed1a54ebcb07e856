#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "toric/crosscheck.hpp"
#include "toric/cubical.hpp"
#include "toric/polynomial.hpp"
#include "toric/poset.hpp"
#include "toric/trees.hpp"

namespace toric {

/// Coefficient array in ascending degree. Values that fit in a JSON number
/// stay numeric; larger ones become decimal strings.
nlohmann::json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const nlohmann::json& j);

/// {"ambient": n, "facets": ["0**1", ...]}
nlohmann::json complex_to_json(const CubicalComplex& c);
CubicalComplex complex_from_json(const nlohmann::json& j);

/// {"elements": [labels], "covers": [[lo,hi],...], "ranks": [...]}
nlohmann::json poset_to_json(const GradedPoset& p);

/// Nested child lists, e.g. [[],[[]]] for a root with a leaf and a path.
nlohmann::json tree_to_json(const PlaneTree& t);
PlaneTree tree_from_json(const nlohmann::json& j);

/// Machine-readable run summary emitted by the CLI under --format json.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, nlohmann::json>> results;
  std::vector<CheckResult> checks;
};

nlohmann::json report_to_json(const Report& r);

}  // namespace toric
