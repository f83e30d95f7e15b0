#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "flagcurv/rational.hpp"

namespace flagcurv {

/// Multivariate polynomial with exact rational coefficients.  Monomials are
/// exponent vectors over a fixed variable count, kept in lex order; zero
/// coefficients are never stored.
class Poly {
  public:
    using Mono = std::vector<int>;

    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly constant(int nvars, const Rat& c);
    static Poly variable(int nvars, int index, int power = 1);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // requires is_constant()

    const std::map<Mono, Rat>& terms() const { return terms_; }

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly operator-() const;
    Poly& operator*=(const Rat& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
    bool operator==(const Poly& rhs) const { return nvars_ == rhs.nvars_ && terms_ == rhs.terms_; }

    Poly pow(int e) const;

    int total_degree() const;
    int degree_in(int var) const;
    bool is_homogeneous() const;

    /// Coefficient of var^k, as a polynomial in the remaining variables
    /// (same variable count; var exponent zeroed).
    Poly coeff_of(int var, int k) const;

    Poly derivative(int var) const;

    Rat eval(std::span<const Rat> point) const;
    /// Substitute one variable by a rational, keeping the variable count.
    Poly substitute(int var, const Rat& value) const;

    /// gcd of |coefficients| (as a positive rational); 0 for the zero poly.
    Rat content() const;
    /// Divides by the content, preserving signs.
    Poly primitive() const;

    std::vector<int> vars_present() const;

    /// Dense ascending coefficient list; throws if another variable appears.
    std::vector<Rat> univariate(int var) const;

    bool only_even_powers(int var) const;
    Poly halve_powers(int var) const;  // x^(2k) -> x^k in `var`

    std::string str(const std::vector<std::string>& names) const;

    void add_term(Mono m, const Rat& c);

  private:
    int nvars_;
    std::map<Mono, Rat> terms_;
};

/// Parses expressions like "x^2", "3*(x+y) - 1/2*y^2" over the named
/// parameters.  Supports + - * ^ and parentheses; numeric literals may be
/// integers, fractions or decimals.
Poly parse_poly(const std::string& text, const std::vector<std::string>& params);

}  // namespace flagcurv
