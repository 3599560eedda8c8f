#include "conjzoo/random.hpp"

#include <functional>

#include "conjzoo/error.hpp"

namespace conjzoo::random {

Rational rational(Engine& rng, int max_abs, int max_den) {
  std::uniform_int_distribution<int> num(-max_abs, max_abs);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

CDElement element(Engine& rng, int level) {
  std::vector<Rational> coords(std::size_t{1} << level);
  for (auto& c : coords) c = rational(rng);
  return CDElement(level, std::move(coords));
}

CDElement nonzero_element(Engine& rng, int level) {
  while (true) {
    CDElement a = element(rng, level);
    if (!a.is_zero()) return a;
  }
}

CDElement fixed_element(Engine& rng, int level) {
  if (level == 0) return element(rng, 0);
  CDElement out(level);
  for (const auto& b : cd::fixed_subalgebra_basis(level)) out = out + rational(rng) * b;
  return out;
}

std::vector<Rational> sphere_point(Engine& rng, std::size_t n) {
  if (n == 0) throw UsageError("sphere_point needs n >= 1");
  // (2t, s - 1) / (s + 1) with s = |t|^2 lies on the unit sphere.
  std::vector<Rational> t(n - 1);
  Rational s = 0;
  for (auto& c : t) {
    c = rational(rng);
    s += c * c;
  }
  std::vector<Rational> p(n);
  const Rational denom = s + 1;
  for (std::size_t i = 0; i + 1 < n; ++i) p[i] = 2 * t[i] / denom;
  p[n - 1] = (s - 1) / denom;
  return p;
}

HermitianMatrix projector(Engine& rng, int level, int support, bool tau_fixed) {
  if (support < 1 || support > 3) throw UsageError("projector support must be 1..3");
  auto draw = [&]() -> std::function<CDElement()> {
    if (tau_fixed) return [&] { return fixed_element(rng, level); };
    if (level < 3) return [&] { return element(rng, level); };
    const CDElement u = element(rng, level);
    const CDElement w = element(rng, level);
    const CDElement uw = cd::mul(u, w);
    return [&rng, level, u, w, uw] {
      return CDElement::real(level, rational(rng)) + rational(rng) * u + rational(rng) * w + rational(rng) * uw;
    };
  }();
  // Over O, tau-fixed entries live in a quaternion subalgebra, so they associate too.
  std::array<CDElement, 3> v{CDElement(level), CDElement(level), CDElement(level)};
  while (true) {
    for (int i = 0; i < support; ++i) v[i] = draw();
    if (!v[0].is_zero()) break;
  }
  Rational s = 0;
  for (const auto& vi : v) s += cd::norm(vi);
  auto entry = [&](int i, int j) { return (1 / s) * cd::mul(v[i], cd::conj(v[j])); };
  return HermitianMatrix(level, {cd::norm(v[0]) / s, cd::norm(v[1]) / s, cd::norm(v[2]) / s},
                         {entry(0, 1), entry(1, 2), entry(0, 2)});
}

}  // namespace conjzoo::random
