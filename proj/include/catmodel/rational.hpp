#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace catmodel {

/// Exact rational in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Parses `p`, `-p`, or `p/q`. Throws std::invalid_argument on malformed
/// text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Bare integer when the denominator is 1, `p/q` otherwise.
std::string format_rational(const Rational& r);

}  // namespace catmodel
