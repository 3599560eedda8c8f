#include "conjzoo/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <sstream>

#include "conjzoo/alg_format.hpp"
#include "conjzoo/catalog.hpp"
#include "conjzoo/cayley_dickson.hpp"
#include "conjzoo/constructions.hpp"
#include "conjzoo/jordan.hpp"
#include "conjzoo/obstructions.hpp"
#include "conjzoo/properties.hpp"
#include "conjzoo/random.hpp"
#include "conjzoo/steenrod.hpp"

namespace conjzoo {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json report_json(const ValidationReport& r) {
  Json findings = Json::array();
  for (const auto& f : r.findings) findings.push_back({{"check", f.check}, {"witness", f.witness}});
  return {{"valid", r.ok()}, {"findings", findings}, {"truncated", r.truncated}};
}

std::string report_text(const ValidationReport& r) {
  if (r.ok()) return "ok\n";
  std::string out;
  for (const auto& f : r.findings) out += f.check + ": " + f.witness + "\n";
  if (r.truncated) out += "(further findings omitted)\n";
  return out;
}

Json algebra_json(const UnstableAlgebra& a) {
  Json basis = Json::array();
  for (const auto& b : a.basis()) basis.push_back({{"label", b.label}, {"degree", b.degree}});
  Json products = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) {
      if (i == a.unit_index() || j == a.unit_index() || a.product(i, j).none()) continue;
      products.push_back({{"left", a.label(i)}, {"right", a.label(j)}, {"value", a.format(a.product(i, j))}});
    }
  }
  Json squares = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (const auto& [key, value] : a.sq_entries()) {
      if (key.second == i) squares.push_back({{"k", key.first}, {"label", a.label(i)}, {"value", a.format(value)}});
    }
  }
  Json j{{"name", a.name()}, {"basis", basis}, {"products", products}, {"squares", squares}};
  j["fundamental"] = a.fundamental() ? Json(a.label(*a.fundamental())) : Json(nullptr);
  return j;
}

Json realizability_json(const RealizabilityReport& r) {
  Json trail = Json::array();
  for (const auto& t : r.trail) trail.push_back({{"rule", t.rule}, {"outcome", t.outcome}, {"detail", t.detail}});
  return {{"verdict", to_string(r.verdict)}, {"rule", r.rule},     {"evidence", r.evidence},
          {"witness", r.witness},            {"passed", r.passed}, {"trail", trail}};
}

std::string realizability_text(const RealizabilityReport& r) {
  std::string out = "verdict: " + to_string(r.verdict);
  if (!r.rule.empty()) out += " (" + r.rule + ")";
  out += "\n";
  if (!r.witness.empty()) out += "witness: " + r.witness + "\n";
  if (!r.evidence.empty()) out += "evidence: " + r.evidence + "\n";
  for (const auto& t : r.trail) out += "  " + t.rule + ": " + t.outcome + " - " + t.detail + "\n";
  return out;
}

Json graded_json(const UnstableAlgebra& a, const std::vector<F2Vector>& graded) {
  Json classes = Json::array();
  for (std::size_t d = 0; d < graded.size(); ++d) {
    classes.push_back({{"degree", d}, {"class", a.format(graded[d])}});
  }
  return {{"algebra", a.name()}, {"classes", classes}, {"total", a.format(total_class(a, graded))}};
}

std::string graded_text(const UnstableAlgebra& a, const std::vector<F2Vector>& graded, const std::string& letter) {
  std::string out;
  for (std::size_t d = 0; d < graded.size(); ++d) out += letter + std::to_string(d) + " = " + a.format(graded[d]) + "\n";
  return out + letter + " = " + a.format(total_class(a, graded)) + "\n";
}

Json cells_json(const std::vector<Cell>& cells) {
  Json out = Json::array();
  for (const auto& c : cells) {
    out.push_back({{"name", c.name},
                   {"rho_multiple", c.rho_multiple},
                   {"total_dimension", c.total_dimension},
                   {"fixed_dimension", c.fixed_dimension},
                   {"attaching", c.attaching}});
  }
  return out;
}

std::string cells_text(const std::vector<Cell>& cells) {
  std::string out = "cells:\n";
  for (const auto& c : cells) {
    out += "  " + c.name + ": " + std::to_string(c.rho_multiple) + " rho, total dimension " +
           std::to_string(c.total_dimension) + ", fixed dimension " + std::to_string(c.fixed_dimension) + ", " +
           c.attaching + "\n";
  }
  return out;
}

struct Options {
  bool json = false;
  std::string output;
  std::uint64_t seed = random::kDefaultSeed;
  int max_degree = -1;
  int samples = 200;
};

class Runner {
 public:
  Runner(const Options& options, std::ostream& err) : options_(options), err_(err) {}

  /// Text or JSON, chosen by --json.
  void emit(const Json& j, const std::string& text) {
    if (options_.json) {
      body_ << j.dump(2) << '\n';
    } else {
      body_ << text;
    }
  }
  std::ostream& err() { return err_; }
  std::string body() const { return body_.str(); }
  const Options& options() const { return options_; }

  UnstableAlgebra load_algebra(const std::string& path) const {
    alg::ParseOptions parse_options;
    if (options_.max_degree >= 0) parse_options.max_degree = options_.max_degree;
    return alg::parse(read_file(path), parse_options);
  }

 private:
  const Options& options_;
  std::ostream& err_;
  std::ostringstream body_;
};

CDElement parse_element(const std::string& text, int level) {
  return level >= 0 ? cd::parse(text, level) : cd::parse(text);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations around conjugation spaces: Cayley-Dickson algebras, Jordan projective planes, "
               "Steenrod squares, cohomological doubling and realizability obstructions.",
               "conjzoo"};
  app.fallthrough();
  app.require_subcommand(1);
  Options options;
  app.add_flag("--json", options.json, "Emit machine-readable JSON");
  app.add_option("-o,--output", options.output, "Write the result to a file instead of stdout");
  app.add_option("--seed", options.seed, "Seed for randomized checks");
  app.add_option("--max-degree", options.max_degree, "Degree cap when expanding polynomial algebras")
      ->check(CLI::NonNegativeNumber);

  Runner runner(options, err);
  std::function<int()> action;
  auto on = [&](CLI::App* sub, std::function<int()> body) {
    sub->callback([&action, body = std::move(body)] { action = body; });
  };

  // cd
  auto* cd_cmd = app.add_subcommand("cd", "Cayley-Dickson arithmetic");
  cd_cmd->require_subcommand(1);
  std::string a_text, b_text;
  int level = -1;
  auto* cd_mul = cd_cmd->add_subcommand("mul", "Product of two elements");
  cd_mul->add_option("a", a_text)->required();
  cd_mul->add_option("b", b_text)->required();
  cd_mul->add_option("--level", level)->check(CLI::Range(0, kMaxCDLevel));
  on(cd_mul, [&] {
    auto a = parse_element(a_text, level), b = parse_element(b_text, level);
    const int l = std::max(a.level(), b.level());
    a = a.embed(l);
    b = b.embed(l);
    const auto p = cd::mul(a, b);
    runner.emit({{"level", l}, {"a", cd::to_string(a)}, {"b", cd::to_string(b)}, {"product", cd::to_string(p)}},
                cd::to_string(p) + "\n");
    return 0;
  });
  for (const char* name : {"tau", "conj", "norm", "inv"}) {
    auto* sub = cd_cmd->add_subcommand(name, std::string("Apply ") + name + " to an element");
    sub->add_option("a", a_text)->required();
    sub->add_option("--level", level)->check(CLI::Range(0, kMaxCDLevel));
    const std::string op = name;
    on(sub, [&, op] {
      const auto a = parse_element(a_text, level);
      std::string value;
      if (op == "tau") value = cd::to_string(cd::tau(a));
      if (op == "conj") value = cd::to_string(cd::conj(a));
      if (op == "norm") value = to_string(cd::norm(a));
      if (op == "inv") value = cd::to_string(cd::inverse(a));
      runner.emit({{"level", a.level()}, {"input", cd::to_string(a)}, {op, value}}, value + "\n");
      return 0;
    });
  }
  int table_level = 0;
  auto* cd_table = cd_cmd->add_subcommand("table", "Multiplication table of the basis");
  cd_table->add_option("level", table_level)->required()->check(CLI::Range(0, kMaxCDLevel));
  on(cd_table, [&] {
    const auto table = cd::multiplication_table(table_level);
    Json rows = Json::array();
    std::string text;
    for (std::size_t i = 0; i < table.size(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < table.size(); ++j) {
        row.push_back(cd::to_string(table[i][j]));
        text += "e" + std::to_string(i) + " * e" + std::to_string(j) + " = " + cd::to_string(table[i][j]) + "\n";
      }
      rows.push_back(row);
    }
    runner.emit({{"level", table_level}, {"table", rows}}, text);
    return 0;
  });
  auto* cd_fixed = cd_cmd->add_subcommand("fixed", "Basis of the tau-fixed subalgebra and its isomorphism type");
  cd_fixed->add_option("level", table_level)->required()->check(CLI::Range(1, kMaxCDLevel));
  on(cd_fixed, [&] {
    Json basis = Json::array(), images = Json::array();
    std::string text = "basis:";
    for (const auto& b : cd::fixed_subalgebra_basis(table_level)) {
      basis.push_back(cd::to_string(b));
      text += " " + cd::to_string(b) + ";";
    }
    text.back() = '\n';
    const auto iso = cd::fixed_subalgebra_isomorphism(table_level);
    if (iso) {
      text += "isomorphic to level " + std::to_string(table_level - 1) + ":";
      for (std::size_t i = 0; i < iso->size(); ++i) {
        images.push_back(cd::to_string((*iso)[i]));
        text += " e" + std::to_string(i) + " -> " + cd::to_string((*iso)[i]) + ";";
      }
      text.back() = '\n';
    } else {
      text += "no isomorphism found\n";
    }
    runner.emit({{"level", table_level},
                 {"dimension", basis.size()},
                 {"basis", basis},
                 {"isomorphism", iso ? images : Json(nullptr)}},
                text);
    return iso ? 0 : 1;
  });
  std::string y_text;
  auto* cd_line = cd_cmd->add_subcommand("line", "Normalized point [x : y] of the projective line and its tau image");
  cd_line->add_option("x", a_text)->required();
  cd_line->add_option("y", y_text)->required();
  cd_line->add_option("--level", level)->check(CLI::Range(1, kMaxCDLevel));
  on(cd_line, [&] {
    auto x = parse_element(a_text, level), y = parse_element(y_text, level);
    const int l = std::max({x.level(), y.level(), 1});
    const auto p = line_normalize(x.embed(l), y.embed(l));
    const auto t = line_tau(p);
    runner.emit({{"level", l}, {"point", to_string(p)}, {"tau", to_string(t)}, {"fixed", p == t}},
                to_string(p) + "\ntau: " + to_string(t) + (p == t ? " (fixed)\n" : "\n"));
    return 0;
  });

  // jordan
  auto* jordan_cmd = app.add_subcommand("jordan", "Hermitian 3x3 matrices and the projective plane");
  jordan_cmd->require_subcommand(1);
  std::string path;
  auto* j_check = jordan_cmd->add_subcommand("check", "Projector, trace and tau report for a matrix file");
  j_check->add_option("file", path)->required();
  on(j_check, [&] {
    const auto m = jordan::parse_matrix(read_file(path));
    const bool projector = jordan::is_projector(m);
    const bool plane = jordan::in_projective_plane(m);
    const bool fixed = jordan::matrix_tau(m) == m;
    Json j{{"level", m.level()},
           {"trace", to_string(m.trace())},
           {"projector", projector},
           {"projective_plane", plane},
           {"tau_fixed", fixed},
           {"entries_in_fixed_subalgebra", jordan::entries_tau_fixed(m)}};
    std::string text = "level: " + std::to_string(m.level()) + "\ntrace: " + to_string(m.trace()) +
                       "\nprojector: " + (projector ? "yes" : "no") + "\nprojective plane: " + (plane ? "yes" : "no") +
                       "\ntau-fixed: " + (fixed ? "yes" : "no") + "\n";
    if (plane) {
      const auto s = jordan::classify_stratum(m);
      j["stratum"] = {{"kind", jordan::to_string(s.kind)}, {"dimension", s.dimension}};
      text += "stratum: " + jordan::to_string(s.kind) + " (dimension " + std::to_string(s.dimension) + ")\n";
    }
    runner.emit(j, text);
    return 0;
  });
  auto* j_stratum = jordan_cmd->add_subcommand("stratum", "Cell of the projective plane containing a projector");
  j_stratum->add_option("file", path)->required();
  on(j_stratum, [&] {
    const auto m = jordan::parse_matrix(read_file(path));
    if (!jordan::in_projective_plane(m)) throw DomainError("not a trace-1 projector");
    const auto s = jordan::classify_stratum(m);
    const auto t = jordan::classify_stratum(jordan::matrix_tau(m));
    runner.emit({{"kind", jordan::to_string(s.kind)}, {"dimension", s.dimension}, {"tau_stable", s == t}},
                jordan::to_string(s.kind) + " " + std::to_string(s.dimension) + "\n");
    return 0;
  });

  // adem
  std::string expression;
  auto* adem = app.add_subcommand("adem", "Admissible form of a Steenrod algebra expression");
  adem->add_option("expression", expression)->required();
  on(adem, [&] {
    const auto input = steenrod::parse(expression);
    const auto normal = steenrod::adem_normalize(input);
    Json j{{"input", to_string(input)}, {"normal_form", to_string(normal)}};
    j["degree"] = normal.is_zero() || !normal.is_homogeneous() ? Json(nullptr) : Json(normal.terms().begin()->degree());
    runner.emit(j, to_string(normal) + "\n");
    return 0;
  });

  // unstable algebras
  bool ring_only = false;
  auto scope = [&] { return ring_only ? ValidationScope::Ring : ValidationScope::Full; };
  auto* check = app.add_subcommand("check", "Validate the unstable-algebra axioms of an .alg file");
  check->add_option("file", path)->required();
  check->add_flag("--ring-only", ring_only, "Only check the ring axioms");
  on(check, [&] {
    const auto a = runner.load_algebra(path);
    const auto report = validate(a, scope());
    Json j{{"algebra", a.name()}};
    j.update(report_json(report));
    runner.emit(j, a.name() + ": " + report_text(report));
    return report.ok() ? 0 : 1;
  });
  auto* dbl = app.add_subcommand("double", "The double of an algebra");
  dbl->add_option("file", path)->required();
  dbl->add_flag("--ring-only", ring_only, "Only require the ring axioms");
  on(dbl, [&] {
    const auto d = double_algebra(runner.load_algebra(path), scope());
    runner.emit(algebra_json(d), alg::print(d));
    return 0;
  });
  auto* half = app.add_subcommand("halve", "The algebra whose double is the input");
  half->add_option("file", path)->required();
  half->add_flag("--ring-only", ring_only, "Only require the ring axioms");
  on(half, [&] {
    const auto h = halve_algebra(runner.load_algebra(path), scope());
    runner.emit(algebra_json(h), alg::print(h));
    return 0;
  });
  auto* wu = app.add_subcommand("wu", "Wu classes of a Poincare duality algebra");
  wu->add_option("file", path)->required();
  on(wu, [&] {
    const auto a = runner.load_algebra(path);
    if (auto report = validate(a); !report.ok()) throw InvalidAlgebra(report);
    const auto v = wu_classes(a);
    runner.emit(graded_json(a, v), graded_text(a, v, "v"));
    return 0;
  });
  auto* sw = app.add_subcommand("sw", "Stiefel-Whitney classes w = Sq(v)");
  sw->add_option("file", path)->required();
  on(sw, [&] {
    const auto a = runner.load_algebra(path);
    if (auto report = validate(a); !report.ok()) throw InvalidAlgebra(report);
    const auto w = sw_classes(a);
    runner.emit(graded_json(a, w), graded_text(a, w, "w"));
    return 0;
  });

  // constructions
  auto* present = app.add_subcommand("present", "Conjugation complex of a presentation with square relators");
  present->add_option("file", path)->required();
  on(present, [&] {
    const auto p = GroupPresentation::parse(read_file(path));
    const auto d = build_presentation_complex(p);
    const auto pair = check_double_pair(d.cohomology_total, d.cohomology_fixed, identity_kappa(d.cohomology_fixed));
    Json rels = Json::array();
    for (const auto& r : p.relators()) rels.push_back(p.format(r));
    Json j{{"generators", p.generators()},
           {"relators", rels},
           {"betti", {d.betti->b0, d.betti->b1, d.betti->b2}},
           {"fixed_complex", d.fixed_complex},
           {"cells", cells_json(d.cells)},
           {"cohomology_fixed", algebra_json(d.cohomology_fixed)},
           {"cohomology_total", algebra_json(d.cohomology_total)},
           {"double_pair", report_json(pair)}};
    std::string text = "betti mod 2: " + std::to_string(d.betti->b0) + " " + std::to_string(d.betti->b1) + " " +
                       std::to_string(d.betti->b2) + "\n" + cells_text(d.cells) + "fixed cohomology:\n" +
                       alg::print(d.cohomology_fixed) + "total cohomology:\n" + alg::print(d.cohomology_total) +
                       "double pair: " + report_text(pair);
    runner.emit(j, text);
    return 0;
  });
  auto* realize = app.add_subcommand("realize4", "8-dimensional conjugation complex over an intersection form");
  realize->add_option("file", path)->required();
  on(realize, [&] {
    const auto attach = AttachingElement::from_intersection_form(read_file(path));
    const auto d = realize_four_complex(attach.spheres, attach);
    const auto pair = check_double_pair(d.cohomology_total, d.cohomology_fixed, identity_kappa(d.cohomology_fixed));
    Json j{{"spheres", attach.spheres},
           {"attaching", attach.format()},
           {"doubled_attaching", attach.format_doubled()},
           {"fixed_complex", d.fixed_complex},
           {"cells", cells_json(d.cells)},
           {"cohomology_fixed", algebra_json(d.cohomology_fixed)},
           {"cohomology_total", algebra_json(d.cohomology_total)},
           {"double_pair", report_json(pair)}};
    std::string text = "attaching: " + attach.format() + "\ndoubled: " + attach.format_doubled() + "\n" +
                       cells_text(d.cells) + "fixed cohomology:\n" + alg::print(d.cohomology_fixed) +
                       "total cohomology:\n" + alg::print(d.cohomology_total) + "double pair: " + report_text(pair);
    runner.emit(j, text);
    return 0;
  });

  // obstructions and catalog
  auto* realizable = app.add_subcommand("realizable", "Realizability verdict for a candidate real locus");
  realizable->add_option("file", path)->required();
  on(realizable, [&] {
    const auto r = check_realizable_with_catalog(runner.load_algebra(path));
    runner.emit(realizability_json(r), realizability_text(r));
    return 0;
  });
  auto* cat = app.add_subcommand("catalog", "Example spaces");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "List catalog entries");
  on(cat_list, [&] {
    Json entries = Json::array();
    std::string text;
    for (const auto& s : catalog_list()) {
      entries.push_back(
          {{"name", s.name}, {"role", s.role}, {"degrees", s.degrees}, {"scope", s.scope}, {"notes", s.notes}});
      text += s.name + "  [" + s.role + ", " + s.scope + "]  degrees " + s.degrees + "\n";
      for (const auto& n : s.notes) text += "    " + n + "\n";
    }
    runner.emit(entries, text);
    return 0;
  });
  std::string entry_name = "all";
  auto* cat_verify = cat->add_subcommand("verify", "Recompute every expectation of an entry (or all)");
  cat_verify->add_option("name", entry_name, "Entry name or 'all'");
  on(cat_verify, [&] {
    const auto results = catalog_verify(entry_name);
    Json j = Json::array();
    std::string text;
    std::size_t passed = 0;
    for (const auto& r : results) {
      passed += r.pass ? 1 : 0;
      Json item{{"name", r.name}, {"pass", r.pass}, {"checks", r.checks}, {"failures", r.failures}};
      item["wu_correspondence"] = r.wu_correspondence ? Json(*r.wu_correspondence) : Json(nullptr);
      j.push_back(item);
      text += r.name + " " + (r.pass ? "PASS" : "FAIL") + "\n";
      for (const auto& f : r.failures) text += "    " + f + "\n";
    }
    text += std::to_string(passed) + "/" + std::to_string(results.size()) + " entries pass\n";
    runner.emit(j, text);
    return passed == results.size() ? 0 : 1;
  });
  auto* props = app.add_subcommand("props", "Randomized identity checks (see --seed)");
  props->add_option("--samples", options.samples, "Samples per property")->check(CLI::PositiveNumber);
  on(props, [&] {
    const auto results = run_properties(options.seed, options.samples);
    Json j = Json::array();
    std::string text;
    bool ok = true;
    for (const auto& r : results) {
      ok = ok && r.pass;
      j.push_back({{"name", r.name}, {"pass", r.pass}, {"samples", r.samples}, {"detail", r.detail}});
      text += r.name + ": " + (r.pass ? "PASS" : "FAIL " + r.detail) + "\n";
    }
    runner.emit({{"seed", options.seed}, {"results", j}}, "seed " + std::to_string(options.seed) + "\n" + text);
    return ok ? 0 : 1;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  int status = kExitOk;
  try {
    status = action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  if (options.output.empty()) {
    out << runner.body();
  } else {
    std::ofstream file(options.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << options.output << "\n";
      return kExitUsage;
    }
    file << runner.body();
  }
  return status;
}

}  // namespace conjzoo
