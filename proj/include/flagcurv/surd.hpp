#pragma once

#include <optional>
#include <string>

#include "flagcurv/rational.hpp"

namespace flagcurv {

/// Exact quadratic surd a + b*sqrt(d) with d squarefree (d = 0 iff b = 0).
struct Surd {
    Rat a;
    Rat b;
    Int d;

    Surd() : a(0), b(0), d(0) {}
    Surd(Rat a_, Rat b_, Int d_);
    static Surd rational(const Rat& q) { return Surd(q, 0, 0); }
    /// sqrt(q) for q >= 0, with the square content pulled out of the radical.
    static Surd sqrt_of(const Rat& q);

    bool is_rational() const { return b == 0; }
    int sign() const;

    Surd operator-() const { return Surd(-a, -b, d); }
    friend Surd operator+(const Surd& x, const Surd& y);
    friend Surd operator-(const Surd& x, const Surd& y);
    friend Surd operator*(const Surd& x, const Surd& y);
    friend Surd operator*(const Rat& c, const Surd& x) { return Surd(c * x.a, c * x.b, x.d); }
    bool operator==(const Surd&) const = default;

    /// Decimal value to `digits` significant digits (round-to-nearest on a
    /// guard-digit integer approximation).
    std::string decimal(int digits = 12) const;
    /// Rational q with |q - value| <= 10^-prec_digits.
    Rat approx(int prec_digits) const;

    /// "3/2 + 2*sqrt(2)" style rendering.
    std::string str() const;
};

}  // namespace flagcurv
