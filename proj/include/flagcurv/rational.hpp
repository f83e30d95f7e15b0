#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace flagcurv {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline int sign_of(const Rat& q) { return q.sign(); }
inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

/// Parses "7", "-3/4" or "1.25" (decimal digits become an exact power-of-ten
/// denominator; no binary float parsing anywhere).
Rat parse_rational(const std::string& text);

/// Rounded decimal rendering with `sig_digits` significant digits, trailing
/// zeros trimmed.  Exact for rationals; used for all human-readable numbers.
std::string decimal_string(const Rat& q, int sig_digits = 12);

/// Largest integer r with r*r <= n (n >= 0).
Int isqrt(const Int& n);

/// Writes n = s*s*d with d squarefree, returns (s, d).  Trial division; the
/// inputs in this project stay well within range.
std::pair<Int, Int> extract_square(Int n);

}  // namespace flagcurv
