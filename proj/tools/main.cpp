#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "toric/crosscheck.hpp"
#include "toric/cubical.hpp"
#include "toric/json_io.hpp"
#include "toric/motzkin.hpp"
#include "toric/noncrossing.hpp"
#include "toric/polynomial.hpp"
#include "toric/poset.hpp"
#include "toric/trees.hpp"

namespace {

using namespace toric;
using nlohmann::json;

struct Options {
  std::string format = "text";  // text | json | latex
  std::string basis = "plain";  // plain | shifted
};

std::string latex_poly(const Polynomial& p, bool shifted) {
  Polynomial q = shifted ? p.substitute_affine(1, 1) : p;
  std::string var = shifted ? "(x-1)" : "x";
  std::size_t top = q == Polynomial() ? 0 : q.degree();
  std::string s;
  for (std::size_t k = 0; k <= top; ++k) {
    const Int& c = q.coeff(k);
    if (c == 0 && top > 0) continue;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    Int a = abs(c);
    if (k == 0 || a != 1) s += a.get_str();
    if (k >= 1) s += var;
    if (k >= 2) s += "^{" + std::to_string(k) + "}";
  }
  return s.empty() ? "0" : s;
}

std::string show(const Polynomial& p, const Options& opt) {
  if (opt.format == "latex") return latex_poly(p, opt.basis == "shifted");
  return p.str();
}

void emit(const Report& r, const Options& opt) {
  if (opt.format == "json") {
    std::cout << report_to_json(r).dump(2) << "\n";
    return;
  }
  for (const auto& [label, value] : r.results) {
    if (value.is_string())
      std::cout << label << ": " << value.get<std::string>() << "\n";
    else
      std::cout << label << ": " << value.dump() << "\n";
  }
  for (const auto& c : r.checks)
    std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.name
              << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
}

void add_result(Report& r, const Options& opt, const std::string& label,
                const Polynomial& p) {
  if (opt.format == "json")
    r.results.emplace_back(label, poly_to_json(p));
  else
    r.results.emplace_back(label, show(p, opt));
}

std::vector<int> parse_triple(const std::string& s) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    out.push_back(std::stoi(s.substr(pos, comma - pos)));
    if (comma == s.size()) break;
    pos = comma + 1;
  }
  if (out.size() != 3) throw std::invalid_argument("expected d,i,j");
  return out;
}

int cmd_toric_h(const std::string& file, const std::string& shelling,
                const Options& opt) {
  std::ifstream in(file);
  if (!in) {
    std::cerr << "cannot open " << file << "\n";
    return 2;
  }
  json j;
  in >> j;
  CubicalComplex c = complex_from_json(j);
  auto [h, g] = toric_h_and_g_of_complex(c);

  Report r{"toric-h", {{"file", file}}, {}, {}};
  add_result(r, opt, "h", h);
  add_result(r, opt, "g", g);

  int exit_code = 0;
  if (!shelling.empty()) {
    std::vector<int> order;
    std::size_t pos = 0;
    while (pos <= shelling.size()) {
      std::size_t comma = shelling.find(',', pos);
      if (comma == std::string::npos) comma = shelling.size();
      order.push_back(std::stoi(shelling.substr(pos, comma - pos)) - 1);
      if (comma == shelling.size()) break;
      pos = comma + 1;
    }
    auto [sh, total] = shell_complex(c, order);
    if (opt.format != "json") {
      std::cout << "facet\ttype\n";
      for (std::size_t q = 0; q < sh.order.size(); ++q)
        std::cout << c.facets[sh.order[q]] << "\t(" << sh.types[q].i << ","
                  << sh.types[q].j << ")\n";
    } else {
      json table = json::array();
      for (std::size_t q = 0; q < sh.order.size(); ++q)
        table.push_back(json{{"facet", c.facets[sh.order[q]]},
                             {"type", {sh.types[q].i, sh.types[q].j}}});
      r.results.emplace_back("shelling", table);
    }
    bool ok = total == stanley_f(face_poset(c));
    r.checks.push_back({"shelled_total_matches_poset", ok,
                        ok ? "" : "sum of contributions differs from poset"});
    if (!ok) exit_code = 1;
  }
  emit(r, opt);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toric h-polynomials of cubical complexes and Eulerian posets"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --format/--basis appear after the subcommand
  Options opt;
  app.add_option("--format", opt.format, "text, json, or latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--basis", opt.basis, "plain or shifted (latex powers of x-1)")
      ->check(CLI::IsMember({"plain", "shifted"}));

  int d = 0, i = 0, j = 0, n = 0, max_d = 8;
  bool want_h = false, want_fillers = false;
  std::string file, shelling, stat, scheme = "bracket";

  auto* gpoly = app.add_subcommand("gpoly", "toric g-polynomial of the d-cube");
  gpoly->add_option("d", d)->required()->check(CLI::NonNegativeNumber);

  auto* contrib =
      app.add_subcommand("contrib", "shelling component contribution");
  contrib->add_option("d", d)->required();
  contrib->add_option("i", i)->required();
  contrib->add_option("j", j)->required();
  contrib->set_help_flag("--help", "print help");  // frees -h for the flag below
  contrib->add_flag("--h", want_h, "also print the h-contribution");

  auto* toric_h =
      app.add_subcommand("toric-h", "toric h/g of a cubical complex");
  toric_h->add_option("complex", file, "complex JSON file")->required();
  toric_h->add_option("--shelling", shelling,
                      "comma-separated 1-based facet order");

  auto* trees = app.add_subcommand("trees", "plane tree enumeration");
  trees->add_option("n", n)->required()->check(CLI::PositiveNumber);
  trees->add_option("--stat", stat, "d,i,j for the generating sum");
  trees->add_option("--scheme", scheme)
      ->check(CLI::IsMember({"paren", "bracket"}));

  auto* nc = app.add_subcommand("nc", "noncrossing partition enumeration");
  nc->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
  nc->add_flag("--fillers", want_fillers, "filler-count distribution");
  nc->add_option("--stat", stat, "d,i,j for the generating sum");

  auto* motzkin = app.add_subcommand("motzkin", "colored Motzkin paths");
  motzkin->add_option("n", n)->required()->check(CLI::NonNegativeNumber);

  auto* crosscheck =
      app.add_subcommand("crosscheck", "run the verification matrix");
  crosscheck->add_option("--max-d", max_d, "sweep bound");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gpoly) {
      Report r{"gpoly", {{"d", std::to_string(d)}}, {}, {}};
      add_result(r, opt, "gessel", g_cube(d, GForm::gessel));
      add_result(r, opt, "catalan", g_cube(d, GForm::catalan));
      emit(r, opt);
      return 0;
    }
    if (*contrib) {
      if (!legal_type(d, i, j)) {
        std::cerr << "(" << i << "," << j << ") is not a legal type for d=" << d
                  << "\n";
        return 2;
      }
      Report r{"contrib",
               {{"d", std::to_string(d)},
                {"i", std::to_string(i)},
                {"j", std::to_string(j)}},
               {},
               {}};
      add_result(r, opt, "f_closed", f_contrib(d, i, j));
      add_result(r, opt, "f_recursive", f_contrib_recursive(d, i, j));
      if (want_h) add_result(r, opt, "h", h_contrib(d, i, j));
      emit(r, opt);
      return 0;
    }
    if (*toric_h) return cmd_toric_h(file, shelling, opt);
    if (*trees) {
      Report r{"trees", {{"n", std::to_string(n)}}, {}, {}};
      if (!stat.empty()) {
        auto dij = parse_triple(stat);
        Scheme sc = scheme == "paren" ? Scheme::paren : Scheme::bracket;
        add_result(r, opt, "statistic_sum",
                   tree_statistic_sum(dij[0], dij[1], dij[2], sc));
      } else {
        json words = json::array();
        for (const auto& t : enumerate_plane_trees(n))
          words.push_back(encode_polish(t));
        r.results.emplace_back("trees", words);
        r.results.emplace_back("count", std::to_string(words.size()));
      }
      emit(r, opt);
      return 0;
    }
    if (*nc) {
      Report r{"nc", {{"n", std::to_string(n)}}, {}, {}};
      if (!stat.empty()) {
        auto dij = parse_triple(stat);
        add_result(r, opt, "statistic_sum",
                   nc_statistic_sum(dij[0], dij[1], dij[2]));
      } else if (want_fillers) {
        add_result(r, opt, "filler_distribution", nc_filler_distribution(n));
      } else {
        json parts = json::array();
        for (const auto& p : enumerate_nc(n)) parts.push_back(p.str());
        r.results.emplace_back("partitions", parts);
        r.results.emplace_back("count", std::to_string(parts.size()));
      }
      emit(r, opt);
      return 0;
    }
    if (*motzkin) {
      Report r{"motzkin", {{"n", std::to_string(n)}}, {}, {}};
      add_result(r, opt, "g", motzkin_g(n));
      if (n <= 6) {
        json paths = json::array();
        for (const auto& p : enumerate_motzkin(n)) paths.push_back(path_str(p));
        r.results.emplace_back("paths", paths);
      }
      emit(r, opt);
      return 0;
    }
    if (*crosscheck) {
      Report r{"crosscheck", {{"max-d", std::to_string(max_d)}}, {}, {}};
      r.checks = run_crosscheck(max_d);
      emit(r, opt);
      for (const auto& c : r.checks)
        if (!c.pass) return 1;
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
