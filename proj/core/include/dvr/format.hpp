#pragma once

#include "dvr/complex_jet.hpp"

#include <string>
#include <string_view>

namespace dvr {

/// Decimal text with 17 significant digits; parses back to the identical double.
std::string format_real(double x);

/// "RE+IMi" / "RE-IMi", each part with 17 significant digits.
std::string format_complex(Complex z);

/// Accepts "a", "bi", "i", "-i", "a+bi", "a-bi" (no spaces; exponents allowed).
/// Throws std::invalid_argument on malformed input.
Complex parse_complex(std::string_view text);

double parse_real(std::string_view text);

} // namespace dvr
