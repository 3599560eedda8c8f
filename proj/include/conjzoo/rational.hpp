#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace conjzoo {

using Rational = mpq_class;

/// Parses `p`, `-p` or `p/q`; the result is canonicalized.
Rational parse_rational(std::string_view text);

/// `p` when the denominator is 1, otherwise `p/q`.
std::string to_string(const Rational& q);

}  // namespace conjzoo
