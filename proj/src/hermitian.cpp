#include "flagcurv/hermitian.hpp"

#include <algorithm>

#include "flagcurv/errors.hpp"

namespace flagcurv {

std::vector<Rat> InvariantMetric::eval(std::span<const Rat> point) const {
    std::vector<Rat> out;
    out.reserve(values.size());
    for (const Poly& v : values) {
        Rat x = v.eval(point);
        if (x <= 0) throw DomainError("metric entry is not positive at the evaluation point");
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<Rat> InvariantMetric::numeric_values() const {
    if (!is_numeric()) throw DomainError("metric is symbolic; supply a parameter point");
    return eval({});
}

InvariantMetric make_metric(std::shared_ptr<const FlagSpace> space, std::vector<Rat> values) {
    if (static_cast<int>(values.size()) != space->num_summands())
        throw InvalidMetric("expected " + std::to_string(space->num_summands()) +
                            " metric values, got " + std::to_string(values.size()));
    InvariantMetric g;
    g.space = std::move(space);
    for (const Rat& v : values) {
        if (v <= 0) throw InvalidMetric("metric values must be positive");
        g.values.push_back(Poly::constant(0, v));
    }
    return g;
}

InvariantMetric make_metric(std::shared_ptr<const FlagSpace> space,
                            std::vector<std::string> params, std::vector<Poly> values) {
    if (static_cast<int>(values.size()) != space->num_summands())
        throw InvalidMetric("expected " + std::to_string(space->num_summands()) +
                            " metric values, got " + std::to_string(values.size()));
    for (const Poly& v : values) {
        if (v.nvars() != static_cast<int>(params.size()))
            throw InvalidMetric("metric entry arity does not match parameter list");
        if (v.is_zero()) throw InvalidMetric("metric entries must be nonzero");
    }
    InvariantMetric g;
    g.space = std::move(space);
    g.params = std::move(params);
    g.values = std::move(values);
    return g;
}

int AlmostComplexStructure::sign_of(const Root& r) const {
    int s = signs.at(space->summand_of(r));
    return r.is_positive() ? s : -s;
}

std::string AlmostComplexStructure::str() const {
    std::string out;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (i) out += ",";
        out += signs[i] > 0 ? "+" : "-";
    }
    return out;
}

AlmostComplexStructure make_acs(std::shared_ptr<const FlagSpace> space, std::vector<int> signs) {
    if (static_cast<int>(signs.size()) != space->num_summands())
        throw InvalidACS("expected " + std::to_string(space->num_summands()) + " signs, got " +
                         std::to_string(signs.size()));
    for (int s : signs)
        if (s != 1 && s != -1) throw InvalidACS("signs must be +1 or -1");
    return AlmostComplexStructure{std::move(space), std::move(signs)};
}

AlmostComplexStructure conjugate(const AlmostComplexStructure& acs) {
    AlmostComplexStructure c = acs;
    for (int& s : c.signs) s = -s;
    return c;
}

std::vector<AlmostComplexStructure> enumerate_acs(std::shared_ptr<const FlagSpace> space) {
    int n = space->num_summands();
    std::vector<AlmostComplexStructure> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
        std::vector<int> signs(n, 1);
        for (int j = 1; j < n; ++j) {
            if (bits >> (n - 1 - j) & 1) signs[j] = -1;
        }
        out.push_back(make_acs(space, std::move(signs)));
    }
    return out;
}

TripleKind classify_triple(const ZeroSumTriple& triple, const AlmostComplexStructure& acs) {
    int e0 = acs.sign_of(triple.roots[0]);
    int e1 = acs.sign_of(triple.roots[1]);
    int e2 = acs.sign_of(triple.roots[2]);
    return (e0 == e1 && e1 == e2) ? TripleKind::ZeroThree : TripleKind::OneTwo;
}

Frac frac_zero(const InvariantMetric& g) {
    return Frac{Poly(static_cast<int>(g.params.size())),
                std::vector<int>(g.values.size(), 0)};
}

Frac frac_add(const Frac& a, const Frac& b, const InvariantMetric& g) {
    Frac r;
    r.den.resize(a.den.size());
    for (std::size_t i = 0; i < a.den.size(); ++i) r.den[i] = std::max(a.den[i], b.den[i]);
    Poly na = a.num, nb = b.num;
    for (std::size_t i = 0; i < a.den.size(); ++i) {
        if (int d = r.den[i] - a.den[i]; d > 0) na = na * g.values[i].pow(d);
        if (int d = r.den[i] - b.den[i]; d > 0) nb = nb * g.values[i].pow(d);
    }
    r.num = na + nb;
    return r;
}

Frac frac_sub(const Frac& a, const Frac& b, const InvariantMetric& g) {
    Frac nb = b;
    nb.num = -nb.num;
    return frac_add(a, nb, g);
}

Frac frac_scale(Frac a, const Rat& c) {
    a.num *= c;
    if (c == 0) std::fill(a.den.begin(), a.den.end(), 0);
    return a;
}

bool frac_equal(const Frac& a, const Frac& b, const InvariantMetric& g) {
    // Cross-multiplied equality: num_a * D_b == num_b * D_a.
    Poly left = a.num, right = b.num;
    for (std::size_t i = 0; i < a.den.size(); ++i) {
        if (b.den[i] > 0) left = left * g.values[i].pow(b.den[i]);
        if (a.den[i] > 0) right = right * g.values[i].pow(a.den[i]);
    }
    return left == right;
}

Rat frac_eval(const Frac& a, const InvariantMetric& g, std::span<const Rat> point) {
    std::vector<Rat> vals = g.eval(point);
    Rat num = a.num.eval(point);
    Rat den = 1;
    for (std::size_t i = 0; i < a.den.size(); ++i)
        for (int k = 0; k < a.den[i]; ++k) den *= vals[i];
    return num / den;
}

Rat frac_eval(const Frac& a, const InvariantMetric& g) { return frac_eval(a, g, {}); }

std::pair<Poly, Poly> frac_as_ratio(const Frac& a, const InvariantMetric& g) {
    int nv = static_cast<int>(g.params.size());
    Poly den = Poly::constant(nv, 1);
    for (std::size_t i = 0; i < a.den.size(); ++i)
        if (a.den[i] > 0) den = den * g.values[i].pow(a.den[i]);
    Poly num = a.num;

    // Cancel common per-variable monomial factors (the denominators are
    // products of metric entries, so this covers the monomial families).
    if (!num.is_zero()) {
        for (int v = 0; v < nv; ++v) {
            int mn = num.degree_in(v), md = den.degree_in(v);
            for (const auto& [m, c] : num.terms()) mn = std::min(mn, m[v]);
            for (const auto& [m, c] : den.terms()) md = std::min(md, m[v]);
            int k = std::min(mn, md);
            if (k > 0) {
                Poly shift_num(nv), shift_den(nv);
                for (const auto& [m, c] : num.terms()) {
                    auto e = m;
                    e[v] -= k;
                    shift_num.add_term(std::move(e), c);
                }
                for (const auto& [m, c] : den.terms()) {
                    auto e = m;
                    e[v] -= k;
                    shift_den.add_term(std::move(e), c);
                }
                num = std::move(shift_num);
                den = std::move(shift_den);
            }
        }
    }
    // Normalize the denominator content away (it is positive on the domain).
    Rat dc = den.content();
    if (dc != 0 && dc != 1) {
        den *= Rat(1) / dc;
        num *= Rat(1) / dc;
    }
    return {std::move(num), std::move(den)};
}

namespace {

struct TripleData {
    Poly la, lb, lc;  // metric values of the three summands
    int ea, eb, ec;   // eps extended to the actual roots
    Rat msq;
    std::vector<int> den;  // lambda_a * lambda_b * lambda_c as exponents
};

TripleData triple_data(const ZeroSumTriple& t, const InvariantMetric& g,
                       const AlmostComplexStructure& acs) {
    TripleData d;
    d.la = g.values[t.summands[0]];
    d.lb = g.values[t.summands[1]];
    d.lc = g.values[t.summands[2]];
    d.ea = acs.sign_of(t.roots[0]);
    d.eb = acs.sign_of(t.roots[1]);
    d.ec = acs.sign_of(t.roots[2]);
    d.msq = t.msq;
    d.den.assign(g.values.size(), 0);
    for (int i : t.summands) d.den[i] += 1;
    return d;
}

}  // namespace

TensorNorms tensor_norms(const InvariantMetric& metric, const AlmostComplexStructure& acs) {
    if (metric.space->key() != acs.space->key())
        throw SpaceMismatch("metric and almost complex structure live on different spaces");

    const FlagSpace& fs = *metric.space;
    TensorNorms out{frac_zero(metric), frac_zero(metric), frac_zero(metric), frac_zero(metric)};

    // Each canonical triple stands for its 6 orderings; the displayed sums
    // collapse to the per-triple contributions below (the epsilon factor is
    // 16 on (0,3)-triples and 0 on (1,2)-triples, and vice versa for (dF)+).
    for (const ZeroSumTriple& t : fs.zero_sum_triples()) {
        TripleData d = triple_data(t, metric, acs);
        bool zero_three = (d.ea == d.eb && d.eb == d.ec);

        if (zero_three) {
            Poly lsum = d.la + d.lb + d.lc;
            out.df_minus_sq =
                frac_add(out.df_minus_sq, Frac{lsum * lsum * d.msq, d.den}, metric);
            Poly b1 = d.lb + d.lc - Rat(2) * d.la;
            Poly b2 = d.la + d.lc - Rat(2) * d.lb;
            Poly b3 = d.la + d.lb - Rat(2) * d.lc;
            Poly bracket = b1 * b1 + b2 * b2 + b3 * b3;
            out.n0_sq = frac_add(out.n0_sq, Frac{bracket * d.msq * Rat(16, 9), d.den}, metric);
        } else {
            Poly esum = Rat(d.ea) * d.la + Rat(d.eb) * d.lb + Rat(d.ec) * d.lc;
            out.df_plus_sq =
                frac_add(out.df_plus_sq, Frac{esum * esum * d.msq, d.den}, metric);
        }

        Poly c1 = d.lb + d.lc - d.la;
        Poly c2 = d.la + d.lc - d.lb;
        Poly c3 = d.la + d.lb - d.lc;
        Poly df_bracket = Rat((d.eb + d.ec) * (d.eb + d.ec)) * c1 * c1 +
                          Rat((d.ea + d.ec) * (d.ea + d.ec)) * c2 * c2 +
                          Rat((d.ea + d.eb) * (d.ea + d.eb)) * c3 * c3;
        out.DF_sq = frac_add(out.DF_sq, Frac{df_bracket * d.msq * Rat(1, 4), d.den}, metric);
    }
    return out;
}

TripleComponent tensor_component(TensorKind kind, const ZeroSumTriple& triple,
                                 const InvariantMetric& metric,
                                 const AlmostComplexStructure& acs) {
    if (metric.space->key() != acs.space->key())
        throw SpaceMismatch("metric and almost complex structure live on different spaces");
    std::vector<Rat> vals = metric.numeric_values();
    Rat la = vals[triple.summands[0]];
    Rat lb = vals[triple.summands[1]];
    Rat lc = vals[triple.summands[2]];
    if (!(triple.roots[0] + triple.roots[1] + triple.roots[2]).is_zero())
        return TripleComponent{0, la * lb * lc};  // "0 otherwise"
    int ea = acs.sign_of(triple.roots[0]);
    int eb = acs.sign_of(triple.roots[1]);
    int ec = acs.sign_of(triple.roots[2]);
    int efac = ea + eb + ec + ea * eb * ec;  // +/-4 on (0,3), 0 on (1,2)

    TripleComponent r;
    r.sqrt_arg = la * lb * lc;
    switch (kind) {
        case TensorKind::DF:
            r.coeff = Rat(-(eb + ec)) * (lb + lc - la) / 2;
            break;
        case TensorKind::dF:
            r.coeff = -(Rat(ea) * la + Rat(eb) * lb + Rat(ec) * lc);
            break;
        case TensorKind::dFminus:
            r.coeff = Rat(-efac) * (la + lb + lc) / 4;
            break;
        case TensorKind::dFplus:
            r.coeff = -(Rat(4) * (Rat(ea) * la + Rat(eb) * lb + Rat(ec) * lc) -
                        Rat(efac) * (la + lb + lc)) /
                      4;
            break;
        case TensorKind::N0:
            // Vanishes on (1,2)-triples; on (0,3)-triples the component is
            // real with coefficient (4/3)(-2 l_a + l_b + l_c).
            if (efac == 0) {
                r.coeff = 0;
            } else {
                r.coeff = Rat(4, 3) * (lb + lc - Rat(2) * la);
            }
            break;
    }
    return r;
}

std::string GrayHervellaClass::label() const {
    if (is_kaehler()) return "Kaehler";
    std::string out;
    auto add = [&out](const char* w) {
        if (!out.empty()) out += "+";
        out += w;
    };
    if (w1) add("W1");
    if (w2) add("W2");
    if (w3) add("W3");
    return out;
}

std::string GrayHervellaClass::long_name() const {
    if (is_kaehler()) return "Kaehler";
    if (w1 && !w2 && !w3) return "nearly-Kaehler";
    if (w1 && w2 && !w3) return "quasi-Kaehler";
    if (!w1 && !w2 && w3) return "Hermitian (W3)";
    return label();
}

GrayHervellaClass gray_hervella(const TensorNorms& norms) {
    GrayHervellaClass c;
    c.w1 = !norms.df_minus_sq.is_zero();
    c.w2 = !norms.n0_sq.is_zero();
    c.w3 = !norms.df_plus_sq.is_zero();
    return c;
}

GrayHervellaClass gray_hervella(const InvariantMetric& metric,
                                const AlmostComplexStructure& acs) {
    return gray_hervella(tensor_norms(metric, acs));
}

}  // namespace flagcurv
