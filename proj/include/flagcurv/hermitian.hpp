#pragma once

#include <memory>
#include <string>
#include <vector>

#include "flagcurv/flagspace.hpp"
#include "flagcurv/poly.hpp"

namespace flagcurv {

/// Invariant metric: one value per isotropy summand, each a polynomial with
/// rational coefficients in the named parameters (a constant polynomial in
/// numeric mode).  Parameters range over the open positive cone.
struct InvariantMetric {
    std::shared_ptr<const FlagSpace> space;
    std::vector<std::string> params;  // empty in numeric mode
    std::vector<Poly> values;         // one per summand, over params

    bool is_numeric() const { return params.empty(); }
    /// Summand values at a parameter point, each checked to be positive.
    std::vector<Rat> eval(std::span<const Rat> point) const;
    std::vector<Rat> numeric_values() const;
};

InvariantMetric make_metric(std::shared_ptr<const FlagSpace> space, std::vector<Rat> values);
InvariantMetric make_metric(std::shared_ptr<const FlagSpace> space,
                            std::vector<std::string> params, std::vector<Poly> values);

/// Invariant almost complex structure: a sign per summand (signs on negative
/// roots are the negatives, by construction).
struct AlmostComplexStructure {
    std::shared_ptr<const FlagSpace> space;
    std::vector<int> signs;  // +1 / -1 per summand

    int sign_of(const Root& r) const;
    std::string str() const;  // "+,+,-"
};

AlmostComplexStructure make_acs(std::shared_ptr<const FlagSpace> space, std::vector<int> signs);
AlmostComplexStructure conjugate(const AlmostComplexStructure& acs);

/// The 2^{s-1} conjugation representatives, first sign fixed to +1, in
/// lexicographic order with + before -.
std::vector<AlmostComplexStructure> enumerate_acs(std::shared_ptr<const FlagSpace> space);

enum class TripleKind { ZeroThree, OneTwo };
TripleKind classify_triple(const ZeroSumTriple& triple, const AlmostComplexStructure& acs);

/// Exact value num / prod_i v_i^{den[i]} over the metric entries v_i; the
/// denominator is strictly positive on the parameter domain, so zero tests
/// and sign questions reduce to the numerator.
struct Frac {
    Poly num;
    std::vector<int> den;  // exponent per summand

    bool is_zero() const { return num.is_zero(); }
};

Frac frac_zero(const InvariantMetric& g);
Frac frac_add(const Frac& a, const Frac& b, const InvariantMetric& g);
Frac frac_sub(const Frac& a, const Frac& b, const InvariantMetric& g);
Frac frac_scale(Frac a, const Rat& c);
bool frac_equal(const Frac& a, const Frac& b, const InvariantMetric& g);
Rat frac_eval(const Frac& a, const InvariantMetric& g, std::span<const Rat> point);
Rat frac_eval(const Frac& a, const InvariantMetric& g);  // numeric mode
/// Expands to a (numerator, denominator) polynomial pair; common monomial and
/// rational content is cancelled, keeping the value's sign on the numerator.
std::pair<Poly, Poly> frac_as_ratio(const Frac& a, const InvariantMetric& g);

/// The four squared tensor norms; the Lee form norm is identically zero on
/// every generalized flag manifold.
struct TensorNorms {
    Frac n0_sq;         // ||N^0||^2
    Frac df_minus_sq;   // ||(dF)^-||^2
    Frac df_plus_sq;    // ||(dF)^+||^2
    Frac DF_sq;         // ||DF||^2
    static constexpr int lee_form_norm_sq = 0;
};

TensorNorms tensor_norms(const InvariantMetric& metric, const AlmostComplexStructure& acs);

enum class TensorKind { DF, dF, dFminus, dFplus, N0 };

/// Per-triple tensor component, as the rational coefficient r in
/// r * m_{alpha,beta} / sqrt(lambda_a lambda_b lambda_c) (up to a phase i);
/// numeric metrics only.  Returns r and the product under the square root.
struct TripleComponent {
    Rat coeff;
    Rat sqrt_arg;

    Rat modulus_sq(const Rat& msq) const { return coeff * coeff * msq / sqrt_arg; }
};

TripleComponent tensor_component(TensorKind kind, const ZeroSumTriple& triple,
                                 const InvariantMetric& metric, const AlmostComplexStructure& acs);

struct GrayHervellaClass {
    bool w1 = false, w2 = false, w3 = false;

    bool is_kaehler() const { return !w1 && !w2 && !w3; }
    /// "Kaehler", "W1", "W1+W2", "W3", ...
    std::string label() const;
    /// Common name when one exists ("nearly-Kaehler" for W1, ...).
    std::string long_name() const;
    bool operator==(const GrayHervellaClass&) const = default;
};

GrayHervellaClass gray_hervella(const InvariantMetric& metric, const AlmostComplexStructure& acs);
GrayHervellaClass gray_hervella(const TensorNorms& norms);

}  // namespace flagcurv
