#pragma once

#include <vector>

#include "flagcurv/rational.hpp"

namespace flagcurv {

/// Dense univariate polynomial, ascending coefficients.
using UPoly = std::vector<Rat>;

UPoly upoly_trim(UPoly p);
int upoly_degree(const UPoly& p);
Rat upoly_eval(const UPoly& p, const Rat& x);
UPoly upoly_derivative(const UPoly& p);
UPoly upoly_mul(const UPoly& a, const UPoly& b);
/// Remainder of a / b (b nonzero).
UPoly upoly_rem(UPoly a, const UPoly& b);
/// Exact quotient; throws if the division leaves a remainder.
UPoly upoly_divexact(const UPoly& a, const UPoly& b);
UPoly upoly_gcd(UPoly a, UPoly b);  // monic gcd
/// Yun square-free decomposition: p ~ prod f_i^i; returns the f_i with their
/// multiplicities (nonconstant factors only).
std::vector<std::pair<UPoly, int>> upoly_squarefree(const UPoly& p);

/// Number of distinct real roots of squarefree p in the half-open interval
/// (a, b], by Sturm's theorem.
int sturm_count(const std::vector<UPoly>& chain, const Rat& a, const Rat& b);
std::vector<UPoly> sturm_chain(const UPoly& p);

/// One certified real root.
struct IsolatedRoot {
    Rat lo, hi;       // isolating interval, sign change of the squarefree part
    Rat mid;          // refined midpoint (or the exact root when lo == hi)
    int multiplicity; // from the square-free decomposition
    Rat residual;     // |p(mid)| of the input polynomial
    bool exact;       // true when the root is the rational `mid` itself
};

/// All positive real roots of p, pairwise-disjoint isolating intervals
/// refined to width <= tolerance; even multiplicities are reported, not
/// dropped.  Throws ZeroPolynomial on the zero input.
std::vector<IsolatedRoot> isolate_positive_roots(const UPoly& p, const Rat& tolerance);

/// Sign status of p on the open ray (0, inf): +1 everywhere positive,
/// -1 everywhere negative, 0 if p vanishes or changes sign somewhere.
int sign_on_positive_ray(const UPoly& p);

}  // namespace flagcurv
