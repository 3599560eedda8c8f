#include "conjzoo/jordan.hpp"

#include <sstream>

#include "conjzoo/error.hpp"

namespace conjzoo {

namespace {

void check_level(int level) {
  if (level < 0 || level > kMaxCDLevel) throw UsageError("Jordan algebra level must be 0..3");
}

}  // namespace

HermitianMatrix::HermitianMatrix(int level, std::array<Rational, 3> diag, std::array<CDElement, 3> upper)
    : level_(level), diag_(std::move(diag)), upper_(std::move(upper)) {
  check_level(level);
  for (const auto& e : upper_) {
    if (e.level() != level) throw UsageError("entry level does not match matrix level");
  }
}

HermitianMatrix HermitianMatrix::zero(int level) { return diagonal(level, 0, 0, 0); }

HermitianMatrix HermitianMatrix::identity(int level) { return diagonal(level, 1, 1, 1); }

HermitianMatrix HermitianMatrix::diagonal(int level, const Rational& a, const Rational& b, const Rational& c) {
  check_level(level);
  return HermitianMatrix(level, {a, b, c}, {CDElement(level), CDElement(level), CDElement(level)});
}

CDElement HermitianMatrix::entry(std::size_t row, std::size_t col) const {
  if (row == col) return CDElement::real(level_, diag_[row]);
  // upper slots: (0,1) -> x, (1,2) -> y, (0,2) -> z
  auto slot = [](std::size_t r, std::size_t c) -> std::size_t {
    if (r == 0 && c == 1) return 0;
    if (r == 1 && c == 2) return 1;
    return 2;
  };
  if (row < col) return upper_[slot(row, col)];
  return cd::conj(upper_[slot(col, row)]);
}

namespace jordan {

CDMatrix3 matrix_product(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.level() != b.level()) throw UsageError("level mismatch in Jordan product");
  const int level = a.level();
  CDMatrix3 out{{{CDElement(level), CDElement(level), CDElement(level)},
                 {CDElement(level), CDElement(level), CDElement(level)},
                 {CDElement(level), CDElement(level), CDElement(level)}}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) out[i][j] = out[i][j] + cd::mul(a.entry(i, k), b.entry(k, j));
    }
  }
  return out;
}

CDMatrix3 symmetrized_product(const HermitianMatrix& a, const HermitianMatrix& b) {
  auto ab = matrix_product(a, b);
  auto ba = matrix_product(b, a);
  const Rational half(1, 2);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) ab[i][j] = half * (ab[i][j] + ba[i][j]);
  }
  return ab;
}

bool is_hermitian(const CDMatrix3& m) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (!m[i][i].is_real()) return false;
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (m[j][i] != cd::conj(m[i][j])) return false;
    }
  }
  return true;
}

HermitianMatrix jordan_mul(const HermitianMatrix& a, const HermitianMatrix& b) {
  auto m = symmetrized_product(a, b);
  return HermitianMatrix(a.level(), {m[0][0][0], m[1][1][0], m[2][2][0]}, {m[0][1], m[1][2], m[0][2]});
}

bool is_projector(const HermitianMatrix& p) { return jordan_mul(p, p) == p; }

bool in_projective_plane(const HermitianMatrix& p) { return p.trace() == 1 && is_projector(p); }

HermitianMatrix matrix_tau(const HermitianMatrix& p) {
  return HermitianMatrix(p.level(), p.diag(), {cd::tau(p.x()), cd::tau(p.y()), cd::tau(p.z())});
}

bool entries_tau_fixed(const HermitianMatrix& p) {
  for (const auto& e : p.upper()) {
    if (cd::tau(e) != e) return false;
  }
  return true;
}

HermitianMatrix rank_one(const std::array<CDElement, 3>& v) {
  const int level = v[0].level();
  if (level > 2) throw DomainError("rank-one construction is only offered over associative levels (<= 2)");
  if (v[1].level() != level || v[2].level() != level) throw UsageError("level mismatch in vector");
  auto e = [&](std::size_t i, std::size_t j) { return cd::mul(v[i], cd::conj(v[j])); };
  return HermitianMatrix(level, {cd::norm(v[0]), cd::norm(v[1]), cd::norm(v[2])}, {e(0, 1), e(1, 2), e(0, 2)});
}

Stratum classify_stratum(const HermitianMatrix& p) {
  if (!in_projective_plane(p)) throw DomainError("not a trace-1 projector");
  const int r = 1 << p.level();
  if (p.gamma() != 0) return {StratumKind::OpenTopCell, 2 * r};
  if (p.beta() != 0) return {StratumKind::SphereCell, r};
  return {StratumKind::ZeroCell, 0};
}

std::string to_string(StratumKind kind) {
  switch (kind) {
    case StratumKind::ZeroCell:
      return "ZeroCell";
    case StratumKind::SphereCell:
      return "SphereCell";
    case StratumKind::OpenTopCell:
      return "OpenTopCell";
  }
  return "?";
}

HermitianMatrix parse_matrix(std::string_view text) {
  std::vector<std::pair<int, std::string>> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.emplace_back(number, line);
  }
  if (lines.size() != 5) {
    throw ParseError("matrix file needs 5 lines (level, diagonal, x, y, z), found " + std::to_string(lines.size()),
                     lines.empty() ? 1 : lines.back().first, 1);
  }
  int level = 0;
  {
    std::istringstream ls(lines[0].second);
    std::string extra;
    if (!(ls >> level) || (ls >> extra)) throw ParseError("expected a level 0..3", lines[0].first, 1);
    if (level < 0 || level > kMaxCDLevel) throw ParseError("level must be 0..3", lines[0].first, 1);
  }
  std::array<Rational, 3> diag;
  {
    std::istringstream ls(lines[1].second);
    std::string tok;
    int count = 0;
    while (ls >> tok) {
      if (count == 3) throw ParseError("expected exactly three diagonal entries", lines[1].first, 1);
      try {
        diag[count++] = parse_rational(tok);
      } catch (const Error& e) {
        throw ParseError(e.what(), lines[1].first, 1);
      }
    }
    if (count != 3) throw ParseError("expected exactly three diagonal entries", lines[1].first, 1);
  }
  std::array<CDElement, 3> upper{CDElement(level), CDElement(level), CDElement(level)};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& [num, body] = lines[2 + i];
    try {
      upper[i] = cd::parse(body, level);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), num, e.column());
    } catch (const Error& e) {
      throw ParseError(e.what(), num, 1);
    }
  }
  return HermitianMatrix(level, diag, upper);
}

std::string to_string(const HermitianMatrix& m) {
  std::ostringstream out;
  out << m.level() << "\n"
      << conjzoo::to_string(m.alpha()) << " " << conjzoo::to_string(m.beta()) << " " << conjzoo::to_string(m.gamma())
      << "\n"
      << cd::to_string(m.x()) << "\n"
      << cd::to_string(m.y()) << "\n"
      << cd::to_string(m.z()) << "\n";
  return out.str();
}

}  // namespace jordan
}  // namespace conjzoo
