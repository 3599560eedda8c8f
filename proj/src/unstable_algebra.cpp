#include "conjzoo/unstable_algebra.hpp"

#include <algorithm>
#include <set>

namespace conjzoo {

UnstableAlgebra::UnstableAlgebra(std::string name, std::vector<BasisElement> basis)
    : name_(std::move(name)), basis_(std::move(basis)) {
  std::set<std::string> seen;
  std::optional<std::size_t> unit;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto& b = basis_[i];
    if (b.label.empty() || b.label == "0") throw UsageError("invalid basis label '" + b.label + "'");
    if (b.degree < 0) throw UsageError("negative degree for " + b.label);
    if (!seen.insert(b.label).second) throw UsageError("duplicate basis label " + b.label);
    if (b.label == "1") unit = i;
  }
  if (!unit || basis_[*unit].degree != 0) throw UsageError("basis must contain the unit 1 in degree 0");
  unit_ = *unit;
  const std::size_t n = basis_.size();
  mul_.assign(n * (n + 1) / 2, F2Vector(n));
  for (std::size_t i = 0; i < n; ++i) set_product(unit_, i, basis_vector(i));
}

std::optional<std::size_t> UnstableAlgebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].label == label) return i;
  }
  return std::nullopt;
}

std::size_t UnstableAlgebra::index(const std::string& label) const {
  auto i = index_of(label);
  if (!i) throw UsageError("unknown basis label " + label + " in " + name_);
  return *i;
}

int UnstableAlgebra::top_degree() const {
  int top = 0;
  for (const auto& b : basis_) top = std::max(top, b.degree);
  return top;
}

std::vector<std::size_t> UnstableAlgebra::indices_in_degree(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].degree == d) out.push_back(i);
  }
  return out;
}

std::vector<std::vector<std::size_t>> UnstableAlgebra::graded_indices() const {
  std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(top_degree()) + 1);
  for (std::size_t i = 0; i < basis_.size(); ++i) out[static_cast<std::size_t>(basis_[i].degree)].push_back(i);
  return out;
}

std::size_t UnstableAlgebra::slot(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  if (j >= basis_.size()) throw UsageError("basis index out of range");
  return i * basis_.size() - i * (i - 1) / 2 + (j - i);
}

const F2Vector& UnstableAlgebra::product(std::size_t i, std::size_t j) const { return mul_[slot(i, j)]; }

void UnstableAlgebra::set_product(std::size_t i, std::size_t j, F2Vector value) {
  if (value.size() != size()) throw UsageError("product value has the wrong size");
  mul_[slot(i, j)] = std::move(value);
}

F2Vector UnstableAlgebra::sq(int k, std::size_t i) const {
  if (k < 0) throw UsageError("negative square");
  if (i >= size()) throw UsageError("basis index out of range");
  if (k == 0) return basis_vector(i);
  auto it = sq_.find({k, i});
  return it == sq_.end() ? zero() : it->second;
}

void UnstableAlgebra::set_sq(int k, std::size_t i, F2Vector value) {
  if (k < 1) throw UsageError("only Sq^k with k >= 1 is stored");
  if (i >= size() || value.size() != size()) throw UsageError("square entry out of range");
  if (value.none()) {
    sq_.erase({k, i});
  } else {
    sq_[{k, i}] = std::move(value);
  }
}

void UnstableAlgebra::derive_top_squares() {
  for (std::size_t i = 0; i < size(); ++i) {
    if (degree(i) > 0) set_sq(degree(i), i, product(i, i));
  }
}

F2Vector UnstableAlgebra::multiply(const F2Vector& a, const F2Vector& b) const {
  F2Vector out = zero();
  const auto sb = b.support();
  for (auto i : a.support()) {
    for (auto j : sb) out ^= product(i, j);
  }
  return out;
}

F2Vector UnstableAlgebra::apply_sq(int k, const F2Vector& a) const {
  if (k == 0) return a;
  F2Vector out = zero();
  for (auto i : a.support()) {
    if (auto it = sq_.find({k, i}); it != sq_.end()) out ^= it->second;
  }
  return out;
}

F2Vector UnstableAlgebra::total_sq(const F2Vector& a) const {
  F2Vector out = a;
  for (const auto& [key, value] : sq_) {
    if (a.test(key.second)) out ^= value;
  }
  return out;
}

std::string UnstableAlgebra::format(const F2Vector& a) const {
  std::string out;
  for (auto i : a.support()) {
    if (!out.empty()) out += " + ";
    out += basis_[i].label;
  }
  return out.empty() ? "0" : out;
}

bool structurally_equal(const UnstableAlgebra& a, const UnstableAlgebra& b) {
  return structurally_equal(a, b, ValidationScope::Full);
}

std::vector<std::size_t> identity_kappa(const UnstableAlgebra& a) {
  std::vector<std::size_t> k(a.size());
  for (std::size_t i = 0; i < k.size(); ++i) k[i] = i;
  return k;
}

bool structurally_equal(const UnstableAlgebra& a, const UnstableAlgebra& b, ValidationScope scope) {
  if (a.size() != b.size() || a.unit_index() != b.unit_index()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.degree(i) != b.degree(i)) return false;
    for (std::size_t j = i; j < a.size(); ++j) {
      if (a.product(i, j) != b.product(i, j)) return false;
    }
  }
  if (a.fundamental() != b.fundamental()) return false;
  return scope == ValidationScope::Ring || a.sq_entries() == b.sq_entries();
}

std::string ValidationReport::summary() const {
  if (findings.empty()) return "ok";
  std::string out = std::to_string(findings.size()) + (truncated ? "+" : "") + " finding(s); first: " +
                    findings.front().check + ": " + findings.front().witness;
  return out;
}

ValidationReport validate(const UnstableAlgebra& a, ValidationScope scope) {
  return kernels::validate_parallel(a, scope);
}

UnstableAlgebra double_algebra(const UnstableAlgebra& b, ValidationScope scope) {
  if (auto report = validate(b, scope); !report.ok()) throw InvalidAlgebra(std::move(report));
  std::vector<BasisElement> basis = b.basis();
  for (auto& e : basis) e.degree *= 2;
  UnstableAlgebra out(b.name() + "_double", std::move(basis));
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i; j < b.size(); ++j) out.set_product(i, j, b.product(i, j));
  }
  for (const auto& [key, value] : b.sq_entries()) out.set_sq(2 * key.first, key.second, value);
  out.set_fundamental(b.fundamental());
  return out;
}

UnstableAlgebra halve_algebra(const UnstableAlgebra& a, ValidationScope scope) {
  for (const auto& e : a.basis()) {
    if (e.degree % 2 != 0) {
      throw NotADoubleCandidate("class " + e.label + " has odd degree " + std::to_string(e.degree));
    }
  }
  for (const auto& [key, value] : a.sq_entries()) {
    if (key.first % 2 != 0) {
      throw NotADoubleCandidate("odd square Sq" + std::to_string(key.first) + " " + a.label(key.second) +
                                " = " + a.format(value) + " is nonzero");
    }
  }
  if (auto report = validate(a, scope); !report.ok()) throw InvalidAlgebra(std::move(report));
  std::vector<BasisElement> basis = a.basis();
  for (auto& e : basis) e.degree /= 2;
  std::string name = a.name();
  constexpr std::string_view kSuffix = "_double";
  if (name.size() > kSuffix.size() && name.ends_with(kSuffix)) {
    name.resize(name.size() - kSuffix.size());
  } else {
    name += "_half";
  }
  UnstableAlgebra out(std::move(name), std::move(basis));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) out.set_product(i, j, a.product(i, j));
  }
  for (const auto& [key, value] : a.sq_entries()) out.set_sq(key.first / 2, key.second, value);
  out.set_fundamental(a.fundamental());
  return out;
}

Kappa kappa_by_label(const UnstableAlgebra& total, const UnstableAlgebra& fixed) {
  Kappa kappa(total.size());
  for (std::size_t i = 0; i < total.size(); ++i) kappa[i] = fixed.index(total.label(i));
  return kappa;
}

F2Vector apply_kappa(const Kappa& kappa, const UnstableAlgebra& fixed, const F2Vector& x) {
  F2Vector out = fixed.zero();
  for (auto i : x.support()) out.flip(kappa.at(i));
  return out;
}

ValidationReport check_double_pair(const UnstableAlgebra& total, const UnstableAlgebra& fixed,
                                   const Kappa& kappa, ValidationScope scope) {
  ValidationReport report;
  auto add = [&](std::string check, std::string witness) {
    if (report.findings.size() >= ValidationReport::kMaxFindings) {
      report.truncated = true;
      return;
    }
    report.findings.push_back({std::move(check), std::move(witness)});
  };
  if (kappa.size() != total.size() || total.size() != fixed.size()) {
    add("bijective", "basis sizes " + std::to_string(total.size()) + " and " + std::to_string(fixed.size()) +
                         " with " + std::to_string(kappa.size()) + " images");
    return report;
  }
  std::vector<bool> hit(fixed.size(), false);
  for (std::size_t i = 0; i < kappa.size(); ++i) {
    if (kappa[i] >= fixed.size() || hit[kappa[i]]) {
      add("bijective", "image of " + total.label(i) + " is out of range or repeated");
      return report;
    }
    hit[kappa[i]] = true;
  }
  for (std::size_t i = 0; i < total.size(); ++i) {
    const int d = total.degree(i);
    if (d % 2 != 0) add("even-degrees", total.label(i) + " has degree " + std::to_string(d));
    if (2 * fixed.degree(kappa[i]) != d) {
      add("degree-halving", total.label(i) + " (degree " + std::to_string(d) + ") -> " +
                                fixed.label(kappa[i]) + " (degree " + std::to_string(fixed.degree(kappa[i])) + ")");
    }
  }
  if (kappa[total.unit_index()] != fixed.unit_index()) add("unit", "unit does not map to unit");
  for (std::size_t i = 0; i < total.size(); ++i) {
    for (std::size_t j = i; j < total.size(); ++j) {
      F2Vector lhs = apply_kappa(kappa, fixed, total.product(i, j));
      const F2Vector& rhs = fixed.product(kappa[i], kappa[j]);
      if (lhs != rhs) {
        add("ring-homomorphism", "kappa(" + total.label(i) + "*" + total.label(j) + ") = " + fixed.format(lhs) +
                                     " but " + fixed.label(kappa[i]) + "*" + fixed.label(kappa[j]) + " = " +
                                     fixed.format(rhs));
      }
    }
  }
  if (scope == ValidationScope::Full) {
    for (std::size_t i = 0; i < total.size(); ++i) {
      const int half = total.degree(i) / 2;
      for (int k = 1; k <= std::max(half, 1); ++k) {
        F2Vector lhs = apply_kappa(kappa, fixed, total.sq(2 * k, i));
        F2Vector rhs = fixed.sq(k, kappa[i]);
        if (lhs != rhs) {
          add("square-compatibility", "kappa(Sq" + std::to_string(2 * k) + " " + total.label(i) + ") = " +
                                          fixed.format(lhs) + " but Sq" + std::to_string(k) + " " +
                                          fixed.label(kappa[i]) + " = " + fixed.format(rhs));
        }
      }
    }
  }
  return report;
}

std::vector<F2Vector> wu_classes(const UnstableAlgebra& a) {
  if (!a.fundamental()) throw DomainError(a.name() + " has no fundamental class");
  const std::size_t fund = *a.fundamental();
  const int n = a.degree(fund);
  if (n != a.top_degree()) throw NotPoincareDuality("fundamental class is not in the top degree");
  const auto graded = a.graded_indices();
  std::vector<F2Vector> v;
  for (int k = 0; k <= n; ++k) {
    const auto& lower = graded[static_cast<std::size_t>(k)];
    const auto& upper = graded[static_cast<std::size_t>(n - k)];
    if (lower.size() != upper.size()) {
      throw NotPoincareDuality("dimensions differ in degrees " + std::to_string(k) + " and " +
                               std::to_string(n - k));
    }
    std::vector<F2Vector> rows;
    for (auto t : lower) {
      F2Vector row(upper.size());
      for (std::size_t s = 0; s < upper.size(); ++s) {
        if (a.product(t, upper[s]).test(fund)) row.set(s);
      }
      rows.push_back(std::move(row));
    }
    if (!f2_inverse(rows)) {
      throw NotPoincareDuality("cup pairing is degenerate in degrees " + std::to_string(k) + " and " +
                               std::to_string(n - k));
    }
    F2Vector target(upper.size());
    for (std::size_t s = 0; s < upper.size(); ++s) {
      if (a.sq(k, upper[s]).test(fund)) target.set(s);
    }
    auto coeffs = f2_solve(rows, target);
    F2Vector vk = a.zero();
    for (auto t : coeffs->support()) vk.set(lower[t]);
    if (2 * k > n && vk.any()) {
      throw DomainError("Wu class v" + std::to_string(k) + " is nonzero above half the dimension");
    }
    v.push_back(std::move(vk));
  }
  return v;
}

std::vector<F2Vector> sw_classes(const UnstableAlgebra& a) {
  const auto v = wu_classes(a);
  const std::size_t n = v.size();
  std::vector<F2Vector> w(n, a.zero());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i + j < n; ++i) w[i + j] ^= a.apply_sq(static_cast<int>(i), v[j]);
  }
  return w;
}

F2Vector total_class(const UnstableAlgebra& a, const std::vector<F2Vector>& graded) {
  F2Vector out = a.zero();
  for (const auto& c : graded) out ^= c;
  return out;
}

}  // namespace conjzoo
