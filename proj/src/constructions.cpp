#include "conjzoo/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <json.hpp>
#include <sstream>

namespace conjzoo {

Word free_reduce(const Word& w) {
  Word out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().generator == l.generator && out.back().inverse != l.inverse) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

GroupPresentation::GroupPresentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)) {
  for (auto& r : relators) {
    for (const auto& l : r) {
      if (l.generator >= generators_.size()) throw UsageError("relator uses an unknown generator");
    }
    relators_.push_back(free_reduce(r));
  }
}

GroupPresentation GroupPresentation::parse(std::string_view text) {
  std::vector<std::string> gens;
  std::vector<Word> rels;
  bool have_gens = false;
  int number = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::size_t i = 0;
    while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
    if (i == raw.size()) continue;
    std::size_t colon = raw.find(':', i);
    if (colon == std::string::npos) throw ParseError("expected 'gens:' or 'rel:'", number, static_cast<int>(i) + 1);
    const std::string key = raw.substr(i, colon - i);
    std::vector<std::pair<std::string, int>> tokens;
    for (std::size_t p = colon + 1; p < raw.size();) {
      while (p < raw.size() && std::isspace(static_cast<unsigned char>(raw[p]))) ++p;
      std::size_t q = p;
      while (q < raw.size() && !std::isspace(static_cast<unsigned char>(raw[q]))) ++q;
      if (q > p) tokens.emplace_back(raw.substr(p, q - p), static_cast<int>(p) + 1);
      p = q;
    }
    if (key == "gens") {
      if (have_gens) throw ParseError("repeated 'gens:'", number, static_cast<int>(i) + 1);
      have_gens = true;
      for (const auto& [t, col] : tokens) {
        if (t.find('\'') != std::string::npos) throw ParseError("generator names cannot contain '", number, col);
        if (std::find(gens.begin(), gens.end(), t) != gens.end()) {
          throw ParseError("duplicate generator " + t, number, col);
        }
        gens.push_back(t);
      }
    } else if (key == "rel") {
      if (!have_gens) throw ParseError("'rel:' before 'gens:'", number, static_cast<int>(i) + 1);
      Word w;
      for (const auto& [t, col] : tokens) {
        const bool inverse = t.ends_with('\'');
        const std::string name = inverse ? t.substr(0, t.size() - 1) : t;
        auto it = std::find(gens.begin(), gens.end(), name);
        if (it == gens.end()) throw ParseError("unknown generator " + name, number, col);
        w.push_back({static_cast<std::size_t>(it - gens.begin()), inverse});
      }
      if (w.empty()) throw ParseError("empty relator", number, static_cast<int>(colon) + 1);
      rels.push_back(std::move(w));
    } else {
      throw ParseError("unknown key '" + key + "'", number, static_cast<int>(i) + 1);
    }
  }
  if (!have_gens) throw ParseError("missing 'gens:'", number + 1, 1);
  return GroupPresentation(std::move(gens), std::move(rels));
}

std::string GroupPresentation::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += generators_[l.generator];
    if (l.inverse) out += '\'';
  }
  return out;
}

std::optional<Word> square_root(const Word& w) {
  if (w.empty() || w.size() % 2 != 0) return std::nullopt;
  const auto half = static_cast<std::ptrdiff_t>(w.size() / 2);
  if (!std::equal(w.begin(), w.begin() + half, w.begin() + half)) return std::nullopt;
  return Word(w.begin(), w.begin() + half);
}

bool ConjugationComplexDescription::halves_dimensions() const {
  return std::all_of(cells.begin(), cells.end(),
                     [](const Cell& c) { return 2 * c.fixed_dimension == c.total_dimension && c.total_dimension == 2 * c.rho_multiple; });
}

std::vector<F2Vector> exponent_sum_matrix(const GroupPresentation& p) {
  std::vector<F2Vector> rows;
  for (const auto& r : p.relators()) {
    F2Vector row(p.generators().size());
    for (const auto& l : r) row.flip(l.generator);
    rows.push_back(std::move(row));
  }
  return rows;
}

BettiNumbers betti_numbers(const GroupPresentation& p) {
  const auto rank = static_cast<int>(f2_rank(exponent_sum_matrix(p)));
  return {1, static_cast<int>(p.generators().size()) - rank, static_cast<int>(p.relators().size()) - rank};
}

namespace {

// Mod 2 cellular cohomology ring of the presentation complex. The cup product of
// 1-cocycles a, b on the 2-cell of r = l_1 ... l_m is sum_k a(l_1 ... l_{k-1}) b(l_k),
// where an inverse letter contributes a(l_1 ... l_k) b(x) instead (Fox calculus mod 2).
UnstableAlgebra presentation_cohomology(const GroupPresentation& p) {
  const std::size_t ngen = p.generators().size();
  const std::size_t nrel = p.relators().size();
  const auto e = exponent_sum_matrix(p);
  const auto h1 = f2_nullspace(e, ngen);

  // Image of the coboundary C^1 -> C^2, then a complement spanned by standard vectors.
  std::vector<F2Vector> image;
  for (std::size_t g = 0; g < ngen; ++g) {
    F2Vector col(nrel);
    for (std::size_t r = 0; r < nrel; ++r) {
      if (e[r].test(g)) col.set(r);
    }
    image.push_back(std::move(col));
  }
  std::vector<F2Vector> spanning = image;
  std::vector<std::size_t> complement;
  std::size_t rank = f2_rank(spanning);
  for (std::size_t r = 0; r < nrel; ++r) {
    spanning.push_back(F2Vector::basis(nrel, r));
    if (std::size_t next = f2_rank(spanning); next > rank) {
      rank = next;
      complement.push_back(r);
    } else {
      spanning.pop_back();
    }
  }

  std::vector<BasisElement> basis{{"1", 0}};
  for (const auto& v : h1) {
    std::string label;
    for (auto g : v.support()) label += (label.empty() ? "" : "+") + p.generators()[g];
    basis.push_back({v.count() == 1 ? label + "*" : "(" + label + ")*", 1});
  }
  for (auto r : complement) basis.push_back({"r" + std::to_string(r + 1) + "*", 2});
  UnstableAlgebra a("X_G", std::move(basis));

  std::vector<F2Vector> columns = image;
  for (auto r : complement) columns.push_back(F2Vector::basis(nrel, r));
  for (std::size_t i = 0; i < h1.size(); ++i) {
    for (std::size_t j = i; j < h1.size(); ++j) {
      F2Vector cochain(nrel);
      for (std::size_t r = 0; r < nrel; ++r) {
        bool prefix = false;  // a evaluated on the prefix read so far
        bool value = false;
        for (const auto& l : p.relators()[r]) {
          const bool ai = h1[i].test(l.generator);
          const bool bj = h1[j].test(l.generator);
          if (l.inverse) prefix ^= ai;
          value ^= prefix && bj;
          if (!l.inverse) prefix ^= ai;
        }
        if (value) cochain.set(r);
      }
      auto coeffs = f2_solve(columns, cochain);
      F2Vector cls = a.zero();
      for (auto c : coeffs->support()) {
        if (c >= image.size()) cls.set(1 + h1.size() + (c - image.size()));
      }
      a.set_product(1 + i, 1 + j, std::move(cls));
    }
  }
  a.derive_top_squares();
  return a;
}

// Sets the top class as fundamental when the algebra satisfies Poincare duality.
void attach_fundamental_if_dual(UnstableAlgebra& a) {
  auto top = a.indices_in_degree(a.top_degree());
  if (top.size() != 1 || a.top_degree() == 0) return;
  a.set_fundamental(top.front());
  try {
    (void)wu_classes(a);
  } catch (const NotPoincareDuality&) {
    a.set_fundamental(std::nullopt);
  }
}

}  // namespace

ConjugationComplexDescription build_presentation_complex(const GroupPresentation& p) {
  std::vector<Word> roots;
  for (const auto& r : p.relators()) {
    auto root = square_root(r);
    if (!root) throw NotAllRelatorsSquare("relator '" + p.format(r) + "' is not a square");
    roots.push_back(std::move(*root));
  }
  std::vector<Cell> cells{{"e0", 0, 0, 0, "basepoint"}};
  for (const auto& g : p.generators()) cells.push_back({g, 1, 2, 1, "basepoint"});
  for (std::size_t r = 0; r < roots.size(); ++r) {
    cells.push_back({"r" + std::to_string(r + 1), 2, 4, 2,
                     "(" + p.format(roots[r]) + ")^2, sphere pinched along " + std::to_string(roots[r].size()) +
                         " meridians"});
  }
  UnstableAlgebra fixed = presentation_cohomology(p);
  attach_fundamental_if_dual(fixed);
  UnstableAlgebra total = double_algebra(fixed);
  total.set_name("X_G_total");
  return {std::move(cells),
          "presentation complex X_G",
          std::move(fixed),
          std::move(total),
          betti_numbers(p),
          {"one rho-cell per generator and one 2rho-cell per relator"}};
}

namespace {

std::string term(std::int64_t c, const std::string& name) {
  if (c == 1) return name;
  if (c == -1) return "-" + name;
  return std::to_string(c) + " " + name;
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    out += terms[i].starts_with('-') ? " - " + terms[i].substr(1) : " + " + terms[i];
  }
  return out;
}

std::string formatted(const AttachingElement& a, const char* hopf, const char* whitehead) {
  std::vector<std::string> terms;
  for (const auto& [i, c] : a.eta) {
    if (c != 0) terms.push_back(term(c, std::string(hopf) + "_" + std::to_string(i + 1)));
  }
  for (const auto& [ij, c] : a.omega) {
    if (c != 0) {
      terms.push_back(term(c, std::string(whitehead) + "_" + std::to_string(ij.first + 1) +
                                  std::to_string(ij.second + 1)));
    }
  }
  return join_terms(terms);
}

}  // namespace

std::string AttachingElement::format() const { return formatted(*this, "eta", "omega"); }
std::string AttachingElement::format_doubled() const { return formatted(*this, "nu", "W"); }

AttachingElement AttachingElement::from_intersection_form(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("intersection form: ") + e.what());
  }
  if (!j.is_object() || !j.contains("diagonal") || !j["diagonal"].is_array()) {
    throw UsageError("intersection form needs an array 'diagonal'");
  }
  AttachingElement a;
  const auto& diag = j["diagonal"];
  const std::size_t n = diag.size();
  a.spheres = static_cast<int>(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!diag[i].is_number_integer()) throw UsageError("diagonal entries must be integers");
    a.eta[i] = diag[i].get<std::int64_t>();
  }
  if (j.contains("offdiagonal")) {
    const auto& off = j["offdiagonal"];
    if (!off.is_array() || off.size() != n) throw UsageError("offdiagonal must be an n x n matrix");
    for (std::size_t r = 0; r < n; ++r) {
      if (!off[r].is_array() || off[r].size() != n) throw UsageError("offdiagonal must be an n x n matrix");
      for (std::size_t c = 0; c < n; ++c) {
        if (!off[r][c].is_number_integer()) throw UsageError("offdiagonal entries must be integers");
      }
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (off[r][r].get<std::int64_t>() != 0) throw UsageError("offdiagonal must vanish on the diagonal");
      for (std::size_t c = r + 1; c < n; ++c) {
        const auto v = off[r][c].get<std::int64_t>();
        if (v != off[c][r].get<std::int64_t>()) throw UsageError("offdiagonal must be symmetric");
        a.omega[{r, c}] = v;
      }
    }
  }
  return a;
}

std::string AttachingElement::to_intersection_form() const {
  const auto n = static_cast<std::size_t>(spheres);
  nlohmann::ordered_json j;
  std::vector<std::int64_t> diag(n, 0);
  std::vector<std::vector<std::int64_t>> off(n, std::vector<std::int64_t>(n, 0));
  for (const auto& [i, c] : eta) diag.at(i) = c;
  for (const auto& [ij, c] : omega) off.at(ij.first).at(ij.second) = off.at(ij.second).at(ij.first) = c;
  j["diagonal"] = diag;
  j["offdiagonal"] = off;
  return j.dump();
}

ConjugationComplexDescription realize_four_complex(int spheres, const AttachingElement& attach) {
  if (spheres < 0) throw UsageError("number of spheres must be nonnegative");
  const auto n = static_cast<std::size_t>(spheres);
  for (const auto& [i, c] : attach.eta) {
    if (i >= n) throw UsageError("eta index " + std::to_string(i + 1) + " out of range");
  }
  for (const auto& [ij, c] : attach.omega) {
    if (ij.first >= ij.second || ij.second >= n) {
      throw UsageError("omega index " + std::to_string(ij.first + 1) + std::to_string(ij.second + 1) +
                       " out of range");
    }
  }
  std::vector<BasisElement> basis{{"1", 0}};
  for (std::size_t i = 0; i < n; ++i) basis.push_back({"x" + std::to_string(i + 1), 2});
  basis.push_back({"t", 4});
  UnstableAlgebra fixed("M4", std::move(basis));
  const std::size_t t = n + 1;
  auto odd = [](std::int64_t c) { return c % 2 != 0; };
  for (const auto& [i, c] : attach.eta) {
    if (odd(c)) fixed.set_product(1 + i, 1 + i, fixed.basis_vector(t));
  }
  for (const auto& [ij, c] : attach.omega) {
    if (odd(c)) fixed.set_product(1 + ij.first, 1 + ij.second, fixed.basis_vector(t));
  }
  fixed.derive_top_squares();
  attach_fundamental_if_dual(fixed);
  UnstableAlgebra total = double_algebra(fixed);
  total.set_name("M4_total");

  std::vector<Cell> cells{{"e0", 0, 0, 0, "basepoint"}};
  for (std::size_t i = 0; i < n; ++i) cells.push_back({"x" + std::to_string(i + 1), 2, 4, 2, "basepoint"});
  cells.push_back({"t", 4, 8, 4, attach.format_doubled()});
  return {std::move(cells),
          "wedge of " + std::to_string(n) + " 2-spheres with a 4-cell attached along " + attach.format(),
          std::move(fixed),
          std::move(total),
          std::nullopt,
          {}};
}

}  // namespace conjzoo
