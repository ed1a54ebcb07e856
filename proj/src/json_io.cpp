#include "toric/json_io.hpp"

#include <stdexcept>

namespace toric {

using nlohmann::json;

json poly_to_json(const Polynomial& p) {
  json arr = json::array();
  std::size_t terms = p == Polynomial() ? 1 : p.degree() + 1;
  for (std::size_t k = 0; k < terms; ++k) {
    const Int& c = p.coeff(k);
    if (c.fits_slong_p())
      arr.push_back(c.get_si());
    else
      arr.push_back(c.get_str());
  }
  return arr;
}

Polynomial poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array");
  std::vector<Int> coeffs;
  for (const auto& v : j) {
    if (v.is_number_integer())
      coeffs.emplace_back(static_cast<long>(v.get<long long>()));
    else if (v.is_string())
      coeffs.emplace_back(v.get<std::string>());
    else
      throw std::invalid_argument("coefficient must be an integer or a string");
  }
  return Polynomial(std::move(coeffs));
}

json complex_to_json(const CubicalComplex& c) {
  return json{{"ambient", c.ambient}, {"facets", c.facets}};
}

CubicalComplex complex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ambient") || !j.contains("facets"))
    throw std::invalid_argument(
        "complex needs \"ambient\" and \"facets\" fields");
  CubicalComplex c;
  c.ambient = j.at("ambient").get<int>();
  for (const auto& f : j.at("facets")) c.facets.push_back(f.get<Face>());
  c.validate();
  return c;
}

json poset_to_json(const GradedPoset& p) {
  json elements = json::array(), covers = json::array(), ranks = json::array();
  for (int v = 0; v < p.size(); ++v) {
    elements.push_back(p.label(v));
    ranks.push_back(p.rank(v));
  }
  for (auto [lo, hi] : p.covers()) covers.push_back(json::array({lo, hi}));
  return json{{"elements", elements}, {"covers", covers}, {"ranks", ranks}};
}

namespace {

void emit_subtree(const PlaneTree& t, int v, json& out) {
  for (int c : t.children(v)) {
    json sub = json::array();
    emit_subtree(t, c, sub);
    out.push_back(std::move(sub));
  }
}

void parse_subtree(const json& j, std::vector<int>& word) {
  if (!j.is_array()) throw std::invalid_argument("tree node must be an array");
  for (const auto& c : j) parse_subtree(c, word);
  word.push_back(static_cast<int>(j.size()));
}

}  // namespace

json tree_to_json(const PlaneTree& t) {
  json out = json::array();
  emit_subtree(t, t.root(), out);
  return out;
}

PlaneTree tree_from_json(const json& j) {
  std::vector<int> word;
  parse_subtree(j, word);
  return PlaneTree(word);
}

json report_to_json(const Report& r) {
  json inputs = json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  json results = json::array();
  for (const auto& [label, value] : r.results)
    results.push_back(json{{"label", label}, {"value", value}});
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(
        json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return json{{"command", r.command},
              {"inputs", inputs},
              {"results", results},
              {"checks", checks}};
}

}  // namespace toric
