#include "conjzoo/alg_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace conjzoo::alg {

namespace {

struct Token {
  std::string text;
  int column;
};

struct Line {
  int number;
  std::vector<Token> tokens;
};

std::vector<Line> lex(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view raw = text.substr(start, stop - start);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.push_back({std::string(raw.substr(i, j - i)), static_cast<int>(i) + 1});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    start = stop + 1;
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, std::size_t token, const std::string& message) {
  const int column = token < line.tokens.size() ? line.tokens[token].column : 1;
  throw ParseError(message, line.number, column);
}

int parse_int(const Line& line, std::size_t token, int min_value, const std::string& what) {
  const std::string& s = line.tokens[token].text;
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(line, token, "expected an integer " + what);
  if (value < min_value) fail(line, token, what + " must be at least " + std::to_string(min_value));
  return value;
}

/// `Sq<k>` -> k (k >= 1).
int parse_sq_keyword(const Line& line, std::size_t token) {
  const std::string& s = line.tokens[token].text;
  if (!s.starts_with("Sq")) fail(line, token, "expected Sq<k>");
  int k = 0;
  auto [ptr, ec] = std::from_chars(s.data() + 2, s.data() + s.size(), k);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.size() == 2) fail(line, token, "expected Sq<k>");
  if (k < 1) fail(line, token, "Sq0 is the identity and cannot be set");
  return k;
}

bool is_keyword_line(const Line& line) {
  const auto& t = line.tokens;
  const std::string& head = t[0].text;
  if (t.size() == 1) return head == "basis" || head == "mul" || head == "sq" || head == "end";
  return t.size() == 2 && head == "fundamental";
}

void expect_equals(const Line& line, std::size_t token) {
  if (token >= line.tokens.size() || line.tokens[token].text != "=") fail(line, token, "expected '='");
  if (token + 1 >= line.tokens.size()) fail(line, token, "missing right-hand side");
}

/// `0` or `t (+ t)*`; each term mapped through `term`, which returns a vector to add.
template <typename Term>
F2Vector parse_sum(const Line& line, std::size_t from, std::size_t size, Term term) {
  F2Vector out(size);
  const auto& t = line.tokens;
  if (t.size() == from + 1 && t[from].text == "0") return out;
  std::set<std::string> seen;
  for (std::size_t i = from; i < t.size(); ++i) {
    if ((i - from) % 2 == 1) {
      if (t[i].text != "+") fail(line, i, "expected '+'");
      if (i + 1 == t.size()) fail(line, i, "dangling '+'");
      continue;
    }
    if (!seen.insert(t[i].text).second) fail(line, i, "repeated term " + t[i].text);
    out ^= term(i);
  }
  return out;
}

void check_label(const Line& line, std::size_t token) {
  const std::string& s = line.tokens[token].text;
  if (s == "0" || s == "=" || s == "+") fail(line, token, "'" + s + "' cannot be a label");
}

UnstableAlgebra parse_table(const std::vector<Line>& lines) {
  const Line& header = lines[0];
  if (header.tokens.size() != 2) fail(header, 0, "expected 'algebra <name>'");
  std::size_t pos = 1;
  if (pos >= lines.size() || lines[pos].tokens[0].text != "basis" || lines[pos].tokens.size() != 1) {
    fail(pos < lines.size() ? lines[pos] : header, 0, "expected 'basis'");
  }
  ++pos;
  std::vector<BasisElement> basis;
  std::set<std::string> labels;
  for (; pos < lines.size() && !is_keyword_line(lines[pos]); ++pos) {
    const Line& line = lines[pos];
    if (line.tokens.size() != 2) fail(line, 0, "expected '<label> <degree>'");
    check_label(line, 0);
    if (!labels.insert(line.tokens[0].text).second) fail(line, 0, "duplicate basis label " + line.tokens[0].text);
    basis.push_back({line.tokens[0].text, parse_int(line, 1, 0, "degree")});
  }
  auto unit = std::find_if(basis.begin(), basis.end(), [](const auto& b) { return b.label == "1"; });
  if (unit == basis.end() || unit->degree != 0) fail(lines[pos - 1], 0, "basis must contain '1 0'");
  UnstableAlgebra a(header.tokens[1].text, std::move(basis));

  auto label_at = [&](const Line& line, std::size_t token) {
    auto i = a.index_of(line.tokens[token].text);
    if (!i) fail(line, token, "unknown label " + line.tokens[token].text);
    return *i;
  };
  auto rhs = [&](const Line& line, std::size_t from) {
    return parse_sum(line, from, a.size(), [&](std::size_t t) { return a.basis_vector(label_at(line, t)); });
  };

  enum class Section { None, Mul, Sq };
  Section section = Section::None;
  std::set<std::string> sections_seen;
  std::set<std::pair<std::size_t, std::size_t>> products_set;
  std::set<std::pair<int, std::size_t>> squares_set;
  bool ended = false;
  for (; pos < lines.size(); ++pos) {
    const Line& line = lines[pos];
    if (ended) fail(line, 0, "content after 'end'");
    if (is_keyword_line(line)) {
      const std::string& head = line.tokens[0].text;
      if (head == "end") {
        ended = true;
        continue;
      }
      if (head == "basis") fail(line, 0, "basis block must come first and appear once");
      if (!sections_seen.insert(head).second) fail(line, 0, "repeated '" + head + "'");
      if (head == "fundamental") {
        a.set_fundamental(label_at(line, 1));
        section = Section::None;
      } else {
        section = head == "mul" ? Section::Mul : Section::Sq;
      }
      continue;
    }
    if (section == Section::Mul) {
      if (line.tokens.size() < 4) fail(line, 0, "expected '<label> <label> = ...'");
      std::size_t i = label_at(line, 0), j = label_at(line, 1);
      expect_equals(line, 2);
      if (!products_set.insert(std::minmax(i, j)).second) {
        fail(line, 0, "duplicate product " + a.label(i) + " " + a.label(j));
      }
      a.set_product(i, j, rhs(line, 3));
    } else if (section == Section::Sq) {
      if (line.tokens.size() < 4) fail(line, 0, "expected 'Sq<k> <label> = ...'");
      int k = parse_sq_keyword(line, 0);
      std::size_t i = label_at(line, 1);
      expect_equals(line, 2);
      if (!squares_set.insert({k, i}).second) fail(line, 0, "duplicate entry for Sq" + std::to_string(k) + " " + a.label(i));
      a.set_sq(k, i, rhs(line, 3));
    } else {
      fail(line, 0, "expected 'mul', 'sq', 'fundamental' or 'end'");
    }
  }
  if (!ended) throw ParseError("missing 'end'", lines.back().number + 1, 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int d = a.degree(i);
    if (d > 0 && !squares_set.contains({d, i})) a.set_sq(d, i, a.product(i, i));
  }
  return a;
}

struct Generator {
  std::string label;
  int degree;
  int max_exponent;
};

using Exponents = std::vector<int>;

std::string monomial_label(const std::vector<Generator>& gens, const Exponents& e) {
  std::string out;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (e[g] == 0) continue;
    if (!out.empty()) out += '*';
    out += gens[g].label;
    if (e[g] > 1) out += '^' + std::to_string(e[g]);
  }
  return out.empty() ? "1" : out;
}

UnstableAlgebra parse_polynomial(const std::vector<Line>& lines, const ParseOptions& options) {
  const Line& header = lines[0];
  if (header.tokens.size() != 2) fail(header, 0, "expected 'polynomial <name>'");
  std::vector<Generator> gens;
  std::vector<std::pair<std::size_t, int>> sq_lines;  // (line position, generator)
  std::optional<std::size_t> fundamental_line;
  bool ended = false;
  std::size_t pos = 1;
  for (; pos < lines.size(); ++pos) {
    const Line& line = lines[pos];
    const std::string& head = line.tokens[0].text;
    if (ended) fail(line, 0, "content after 'end'");
    if (head == "end" && line.tokens.size() == 1) {
      ended = true;
    } else if (head == "gen") {
      if (!sq_lines.empty()) fail(line, 0, "generators must precede squares");
      if (line.tokens.size() != 4) fail(line, 0, "expected 'gen <label> <degree> <max-exponent>'");
      const std::string& label = line.tokens[1].text;
      if (label.find_first_of("*^") != std::string::npos || label == "1") fail(line, 1, "invalid generator label");
      check_label(line, 1);
      for (const auto& g : gens) {
        if (g.label == label) fail(line, 1, "duplicate generator " + label);
      }
      gens.push_back({label, parse_int(line, 2, 1, "degree"), parse_int(line, 3, 1, "maximal exponent")});
    } else if (head == "fundamental" && line.tokens.size() == 2) {
      if (fundamental_line) fail(line, 0, "repeated 'fundamental'");
      fundamental_line = pos;
    } else if (head.starts_with("Sq")) {
      sq_lines.emplace_back(pos, 0);
    } else {
      fail(line, 0, "expected 'gen', 'Sq<k>', 'fundamental' or 'end'");
    }
  }
  if (!ended) throw ParseError("missing 'end'", lines.back().number + 1, 1);
  if (gens.empty()) fail(header, 0, "no generators");

  // Monomial basis.
  std::vector<Exponents> monomials;
  Exponents e(gens.size(), 0);
  auto within_cap = [&](int degree) { return !options.max_degree || degree <= *options.max_degree; };
  auto degree_of = [&](const Exponents& x) {
    int d = 0;
    for (std::size_t g = 0; g < gens.size(); ++g) d += x[g] * gens[g].degree;
    return d;
  };
  std::function<void(std::size_t)> enumerate = [&](std::size_t g) {
    if (g == gens.size()) {
      if (within_cap(degree_of(e))) monomials.push_back(e);
      return;
    }
    for (int k = 0; k <= gens[g].max_exponent; ++k) {
      e[g] = k;
      enumerate(g + 1);
    }
    e[g] = 0;
  };
  enumerate(0);
  std::sort(monomials.begin(), monomials.end(), [&](const Exponents& x, const Exponents& y) {
    const int dx = degree_of(x), dy = degree_of(y);
    return dx != dy ? dx < dy : x > y;
  });
  std::map<Exponents, std::size_t> index;
  std::vector<BasisElement> basis;
  for (const auto& m : monomials) {
    index.emplace(m, basis.size());
    basis.push_back({monomial_label(gens, m), degree_of(m)});
  }
  UnstableAlgebra a(header.tokens[1].text, std::move(basis));
  const std::size_t n = a.size();
  auto lookup = [&](const Exponents& x) -> std::optional<std::size_t> {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (x[g] > gens[g].max_exponent) return std::nullopt;
    }
    auto it = index.find(x);
    return it == index.end() ? std::nullopt : std::optional<std::size_t>(it->second);
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Exponents s(gens.size());
      for (std::size_t g = 0; g < gens.size(); ++g) s[g] = monomials[i][g] + monomials[j][g];
      F2Vector v(n);
      if (auto k = lookup(s)) v.set(*k);
      a.set_product(i, j, std::move(v));
    }
  }

  auto parse_monomial = [&](const Line& line, std::size_t token) -> std::optional<Exponents> {
    const std::string& s = line.tokens[token].text;
    Exponents x(gens.size(), 0);
    if (s == "1") return x;
    std::size_t start = 0;
    while (start <= s.size()) {
      std::size_t stop = s.find('*', start);
      if (stop == std::string::npos) stop = s.size();
      std::string factor = s.substr(start, stop - start);
      int power = 1;
      if (auto caret = factor.find('^'); caret != std::string::npos) {
        const char* first = factor.data() + caret + 1;
        const char* last = factor.data() + factor.size();
        auto [ptr, ec] = std::from_chars(first, last, power);
        if (ec != std::errc() || ptr != last || power < 1) fail(line, token, "bad exponent in " + s);
        factor.resize(caret);
      }
      auto g = std::find_if(gens.begin(), gens.end(), [&](const auto& gen) { return gen.label == factor; });
      if (g == gens.end()) fail(line, token, "unknown generator '" + factor + "'");
      x[static_cast<std::size_t>(g - gens.begin())] += power;
      start = stop + 1;
    }
    return x;
  };
  auto monomial_vector = [&](const Line& line, std::size_t token) {
    F2Vector v(n);
    auto x = parse_monomial(line, token);
    if (auto k = lookup(*x)) v.set(*k);
    return v;
  };

  // Total squares of the generators.
  std::vector<F2Vector> total(gens.size(), F2Vector(n));
  std::set<std::pair<int, std::size_t>> given;
  std::vector<std::map<int, F2Vector>> gen_sq(gens.size());
  for (const auto& [p, unused] : sq_lines) {
    const Line& line = lines[p];
    if (line.tokens.size() < 4) fail(line, 0, "expected 'Sq<k> <generator> = ...'");
    int k = parse_sq_keyword(line, 0);
    auto g = std::find_if(gens.begin(), gens.end(), [&](const auto& gen) { return gen.label == line.tokens[1].text; });
    if (g == gens.end()) fail(line, 1, "squares may only be given on generators");
    const auto gi = static_cast<std::size_t>(g - gens.begin());
    expect_equals(line, 2);
    if (!given.insert({k, gi}).second) fail(line, 0, "duplicate entry");
    gen_sq[gi][k] = parse_sum(line, 3, n, [&](std::size_t t) { return monomial_vector(line, t); });
  }
  for (std::size_t g = 0; g < gens.size(); ++g) {
    Exponents unit_g(gens.size(), 0);
    unit_g[g] = 1;
    auto gi = lookup(unit_g);
    if (!gi) continue;  // generator above the degree cap
    total[g] = a.basis_vector(*gi);
    const int d = gens[g].degree;
    if (!gen_sq[g].contains(d)) gen_sq[g][d] = a.product(*gi, *gi);
    for (const auto& [k, v] : gen_sq[g]) total[g] ^= v;
  }
  // Sq(m) = Sq(g) Sq(m / g) for the first generator g dividing m; monomials are in degree order.
  std::vector<F2Vector> total_sq(n, F2Vector(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Exponents& m = monomials[i];
    auto g = static_cast<std::size_t>(std::find_if(m.begin(), m.end(), [](int x) { return x > 0; }) - m.begin());
    if (g == gens.size()) {
      total_sq[i] = a.basis_vector(i);
      continue;
    }
    Exponents rest = m;
    --rest[g];
    total_sq[i] = a.multiply(total[g], total_sq[*lookup(rest)]);
    const int d = a.degree(i);
    std::map<int, F2Vector> by_k;
    for (auto s : total_sq[i].support()) {
      const int k = a.degree(s) - d;
      if (k <= 0) continue;
      auto [it, inserted] = by_k.try_emplace(k, F2Vector(n));
      it->second.set(s);
    }
    for (auto& [k, v] : by_k) a.set_sq(k, i, std::move(v));
  }

  if (fundamental_line) {
    const Line& line = lines[*fundamental_line];
    if (line.tokens[1].text == "top") {
      auto top = a.indices_in_degree(a.top_degree());
      if (top.size() != 1) fail(line, 1, "top degree is not one-dimensional");
      a.set_fundamental(top.front());
    } else {
      auto x = parse_monomial(line, 1);
      auto k = lookup(*x);
      if (!k) fail(line, 1, "fundamental class vanishes in the truncation");
      a.set_fundamental(*k);
    }
  }
  return a;
}

}  // namespace

UnstableAlgebra parse(std::string_view text, const ParseOptions& options) {
  const auto lines = lex(text);
  if (lines.empty()) throw ParseError("empty input", 1, 1);
  const std::string& head = lines[0].tokens[0].text;
  if (head == "algebra") return parse_table(lines);
  if (head == "polynomial") return parse_polynomial(lines, options);
  fail(lines[0], 0, "expected 'algebra <name>' or 'polynomial <name>'");
}

UnstableAlgebra parse_file(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), options);
}

std::string print(const UnstableAlgebra& a) {
  std::ostringstream out;
  out << "algebra " << a.name() << "\nbasis\n";
  for (const auto& b : a.basis()) out << "  " << b.label << ' ' << b.degree << '\n';
  out << "mul\n";
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) {
      const F2Vector& v = a.product(i, j);
      const bool with_unit = i == a.unit_index() || j == a.unit_index();
      const F2Vector expected = with_unit ? a.basis_vector(i == a.unit_index() ? j : i) : a.zero();
      if (v != expected) out << "  " << a.label(i) << ' ' << a.label(j) << " = " << a.format(v) << '\n';
    }
  }
  out << "sq\n";
  int max_k = 0;
  for (const auto& [key, value] : a.sq_entries()) max_k = std::max(max_k, key.first);
  max_k = std::max(max_k, a.top_degree());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int d = a.degree(i);
    for (int k = 1; k <= max_k; ++k) {
      const F2Vector v = a.sq(k, i);
      const F2Vector expected = (k == d) ? a.product(i, i) : a.zero();
      if (v != expected) out << "  Sq" << k << ' ' << a.label(i) << " = " << a.format(v) << '\n';
    }
  }
  if (a.fundamental()) out << "fundamental " << a.label(*a.fundamental()) << '\n';
  out << "end\n";
  return out.str();
}

}  // namespace conjzoo::alg
