#pragma once

// Text format for finite unstable algebras.
//
//   algebra RP2
//   basis
//     1 0
//     a 1
//     a2 2
//   mul
//     a a = a2
//   sq
//     Sq1 a = a2          # the top square Sq^{deg b} b = b*b is implied
//   fundamental a2
//   end
//
// Omitted products are zero except those with the unit; omitted squares are
// zero except the top square. The printer emits only entries that differ from
// these defaults, so print(parse(print(A))) == print(A) byte for byte.
//
// A second header, `polynomial <name>`, describes truncated polynomial algebras:
//
//   polynomial P
//   gen c 1 3             # label, degree, maximal exponent
//   gen d 2 2
//   Sq1 d = c*d           # optional squares of generators
//   fundamental top
//   end
//
// The monomial basis is expanded (optionally capped at a maximal degree) and the
// squares are extended to all monomials by the Cartan formula.

#include <optional>
#include <string>
#include <string_view>

#include "conjzoo/unstable_algebra.hpp"

namespace conjzoo::alg {

struct ParseOptions {
  /// Monomials of larger degree are dropped by the polynomial front end.
  std::optional<int> max_degree;
};

UnstableAlgebra parse(std::string_view text, const ParseOptions& options = {});
UnstableAlgebra parse_file(const std::string& path, const ParseOptions& options = {});
std::string print(const UnstableAlgebra& a);

}  // namespace conjzoo::alg
