#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "qkp/errors.hpp"

namespace qkp {

// Exact scalars.  Int backs every lattice coordinate and exponent, Rat
// every coefficient; nothing in the library rounds.
using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_string(const Int& v) { return v.get_str(); }

/// Canonical text: "p" for integers, "p/q" otherwise, q > 0.
inline std::string to_string(const Rat& v) {
  Rat c = v;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Int parse_int(std::string_view text) {
  try {
    if (text.empty()) throw std::invalid_argument("empty");
    return Int(std::string(text), 10);
  } catch (const std::invalid_argument&) {
    throw ParseError("invalid integer literal: '" + std::string(text) + "'");
  }
}

/// Accepts "p" or "p/q" with optional leading sign.
inline Rat parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in rational literal");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline int to_int(const Int& v, const char* what = "value") {
  if (!v.fits_sint_p())
    throw DimensionError(std::string(what) + " out of machine range");
  return static_cast<int>(v.get_si());
}

}  // namespace qkp
