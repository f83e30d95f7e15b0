#include "flagcurv/klsc.hpp"

#include <algorithm>

#include "flagcurv/errors.hpp"

namespace flagcurv {

Poly defect_numerator(const InvariantMetric& family, const AlmostComplexStructure& acs) {
    CurvatureReport rep = curvature_report(family, acs);
    auto [num, den] = frac_as_ratio(rep.defect, family);
    return num.primitive();
}

namespace {

struct QuadView {
    // p as A t^2 + B t + C in one variable against another (ratio form).
    Rat A, B, C;
};

// Homogeneous quadratic in exactly two variables: view as quadratic in the
// ratio (later variable)/(earlier variable).
std::optional<QuadView> ratio_quadratic(const Poly& p, int& num_var, int& den_var) {
    auto vars = p.vars_present();
    if (vars.size() != 2 || !p.is_homogeneous() || p.total_degree() != 2) return std::nullopt;
    den_var = vars[0];
    num_var = vars[1];
    QuadView q;
    for (const auto& [m, c] : p.terms()) {
        if (m[num_var] == 2)
            q.A = c;
        else if (m[num_var] == 1)
            q.B = c;
        else
            q.C = c;
    }
    return q;
}

}  // namespace

namespace {

// A branch set where every branch fails positivity is a certified NoSolution.
void finalize_branches(KlscSolution& sol) {
    for (const ClosedBranch& b : sol.branches)
        if (!b.excluded) return;
    sol.kind = SolutionKind::NoSolution;
    sol.certificate = "every closed-form root of the defect is nonpositive on the domain";
}

}  // namespace

Positivity positivity_status(const Poly& p) {
    if (p.is_zero()) return Positivity::AlwaysFalse;  // "p > 0" fails

    bool nonneg = true, nonpos = true;
    for (const auto& [m, c] : p.terms()) {
        if (c < 0) nonneg = false;
        if (c > 0) nonpos = false;
    }
    if (nonneg) return Positivity::AlwaysTrue;
    if (nonpos) return Positivity::AlwaysFalse;

    auto vars = p.vars_present();
    if (vars.size() == 1) {
        int s = sign_on_positive_ray(p.univariate(vars[0]));
        if (s > 0) return Positivity::AlwaysTrue;
        if (s < 0) return Positivity::AlwaysFalse;
        return Positivity::Conditional;
    }
    int nv = -1, dv = -1;
    if (auto q = ratio_quadratic(p, nv, dv)) {
        if (q->A == 0)  // linear in the ratio with mixed signs: a sign change
            return Positivity::Conditional;
        // Sign of A t^2 + B t + C over t > 0.
        Rat disc = q->B * q->B - 4 * q->A * q->C;
        if (disc < 0) return q->A > 0 ? Positivity::AlwaysTrue : Positivity::AlwaysFalse;
        Surd sq = Surd::sqrt_of(disc);
        Surd r1 = Rat(1, 2) * ((Surd::rational(-q->B) - sq) * Surd::rational(Rat(1) / q->A));
        Surd r2 = Rat(1, 2) * ((Surd::rational(-q->B) + sq) * Surd::rational(Rat(1) / q->A));
        if (r1.sign() > 0 || r2.sign() > 0) return Positivity::Conditional;
        // Both roots <= 0: constant sign on t > 0, that of A.
        return q->A > 0 ? Positivity::AlwaysTrue : Positivity::AlwaysFalse;
    }
    return Positivity::Conditional;
}

namespace {

std::string rat_str(const Rat& q) {
    std::string s = rat_num(q).str();
    if (rat_den(q) != 1) s += "/" + rat_den(q).str();
    return s;
}

// Threshold rendering for a conditional "p > 0" that is a homogeneous
// quadratic in two parameters.
std::string threshold_pretty(const Poly& p, const std::vector<std::string>& params) {
    Poly pp = p;
    int nv = -1, dv = -1;
    auto q = ratio_quadratic(pp, nv, dv);
    if (!q) return "";
    if (q->A == 0) {
        if (q->B == 0) return "";
        // u * (B t + C u) > 0 on the positive cone
        Surd r = Surd::rational(-q->C / q->B);
        const std::string t = params[nv], u = params[dv];
        std::string bnd = "(" + r.str() + ")*" + u;
        return q->B > 0 ? t + " > " + bnd : t + " < " + bnd;
    }
    Rat disc = q->B * q->B - 4 * q->A * q->C;
    if (disc < 0) return "";
    Surd sq = Surd::sqrt_of(disc);
    Rat inv2A = Rat(1) / (2 * q->A);
    Surd r1 = inv2A * (Surd::rational(-q->B) - sq);
    Surd r2 = inv2A * (Surd::rational(-q->B) + sq);
    if (q->A < 0) std::swap(r1, r2);
    const std::string t = params[nv], u = params[dv];
    auto bound = [&](const Surd& r) { return "(" + r.str() + ")*" + u; };
    if (q->A > 0) {
        // positive outside the root interval
        if (r1.sign() <= 0) return t + " > " + bound(r2);
        return t + " < " + bound(r1) + " or " + t + " > " + bound(r2);
    }
    // negative leading coefficient: positive strictly between the roots
    if (r1.sign() <= 0) return t + " < " + bound(r2);
    return bound(r1) + " < " + t + " < " + bound(r2);
}

// Tries to split off a perfect-square polynomial factor: D = r^2 * q with q
// primitive.  Monomial squares cover the families treated here.
void split_square_part(const Poly& prim, Poly& r, Poly& q) {
    int nv = prim.nvars();
    r = Poly::constant(nv, 1);
    q = prim;
    if (prim.terms().size() == 1) {
        const auto& [m, c] = *prim.terms().begin();
        Poly::Mono half = m;
        bool even = true;
        for (int& e : half) {
            if (e % 2 != 0) even = false;
            e /= 2;
        }
        if (even && c == 1) {
            r = Poly(nv);
            r.add_term(half, 1);
            q = Poly::constant(nv, 1);
        }
    }
}

std::string poly_pretty(const Poly& p, const std::vector<std::string>& params) {
    return p.str(params);
}

}  // namespace

std::string branch_str(const ClosedBranch& b, const std::vector<std::string>& params,
                       const std::string& var_name) {
    Poly phead = b.p * (Rat(1) / b.den);
    std::string out = var_name + " = " + poly_pretty(phead, params);
    if (b.c != 0) {
        Rat coef = b.c / b.den;
        std::string rad;
        if (b.d != 1 && b.d != 0) rad += "sqrt(" + b.d.str() + ")";
        if (!(b.r.is_constant() && b.r.constant_value() == 1)) {
            if (!rad.empty()) rad += "*";
            rad += poly_pretty(b.r, params);
        }
        if (!(b.q.is_constant() && b.q.constant_value() == 1)) {
            if (!rad.empty()) rad += "*";
            rad += "sqrt(" + poly_pretty(b.q, params) + ")";
        }
        std::string cpart = (coef == 1) ? "" : rat_str(coef) + "*";
        out += (b.sgn >= 0 ? " + " : " - ") + cpart + rad;
    }
    return out;
}

KlscSolution solve_klsc(const InvariantMetric& family, const AlmostComplexStructure& acs,
                        const std::string& solve_var, const Rat& tolerance) {
    if (tolerance <= 0) throw InvalidTolerance("tolerance must be positive");
    auto it = std::find(family.params.begin(), family.params.end(), solve_var);
    if (it == family.params.end())
        throw UnsupportedFamily("solve variable '" + solve_var + "' is not a family parameter");
    int var = static_cast<int>(it - family.params.begin());

    KlscSolution sol;
    sol.params = family.params;
    sol.var = var;
    sol.numerator = defect_numerator(family, acs);
    sol.homogeneous = sol.numerator.is_homogeneous() && family.params.size() > 1;
    const Poly& P = sol.numerator;

    if (P.is_zero())
        throw UnsupportedFamily("the defect vanishes identically on this family");

    auto vars = P.vars_present();
    bool univariate = (vars.size() == 1 && vars[0] == var);
    int deg = P.degree_in(var);

    if (deg == 0) {
        Positivity st = positivity_status(P);
        if (st == Positivity::AlwaysTrue || st == Positivity::AlwaysFalse) {
            sol.kind = SolutionKind::NoSolution;
            sol.certificate = std::string("defect numerator is ") +
                              (st == Positivity::AlwaysTrue ? "positive" : "negative") +
                              " on the whole domain and does not involve " + solve_var;
            return sol;
        }
        throw UnsupportedFamily("defect does not involve the solve variable");
    }

    if (univariate) {
        sol.kind = SolutionKind::IsolatedRoots;
        UPoly up = P.univariate(var);
        auto isolated = isolate_positive_roots(up, tolerance);

        // Exact surd companions when the numerator is quadratic in the
        // variable or in u = var^2.
        std::vector<Surd> exact_roots;
        bool in_square = false;
        auto quad_roots = [](const Rat& A, const Rat& B, const Rat& C) {
            std::vector<Surd> out;
            if (A == 0) {
                if (B != 0) out.push_back(Surd::rational(-C / B));
                return out;
            }
            Rat disc = B * B - 4 * A * C;
            if (disc < 0) return out;
            Surd sq = Surd::sqrt_of(disc);
            Rat inv2A = Rat(1) / (2 * A);
            out.push_back(inv2A * (Surd::rational(-B) - sq));
            out.push_back(inv2A * (Surd::rational(-B) + sq));
            if (disc == 0) out.pop_back();
            return out;
        };
        if (deg <= 2) {
            UPoly u = up;
            u.resize(3, Rat(0));
            for (const Surd& s : quad_roots(u[2], u[1], u[0]))
                if (s.sign() > 0) exact_roots.push_back(s);
        } else if (P.only_even_powers(var) && P.halve_powers(var).degree_in(var) <= 2) {
            UPoly u = P.halve_powers(var).univariate(var);
            u.resize(3, Rat(0));
            for (const Surd& s : quad_roots(u[2], u[1], u[0]))
                if (s.sign() > 0) exact_roots.push_back(s);
            in_square = true;
        }
        std::sort(exact_roots.begin(), exact_roots.end(),
                  [](const Surd& a, const Surd& b) { return (a - b).sign() < 0; });

        for (std::size_t i = 0; i < isolated.size(); ++i) {
            CertifiedRoot r;
            r.interval = isolated[i];
            if (i < exact_roots.size()) {
                if (in_square) {
                    r.exact_square = exact_roots[i];
                } else {
                    r.exact = exact_roots[i];
                }
            }
            sol.roots.push_back(std::move(r));
        }
        sol.solved_in_square = in_square && !sol.roots.empty();
        if (sol.roots.empty()) {
            sol.kind = SolutionKind::NoSolution;
            int s = sign_on_positive_ray(up);
            bool allsame = true;
            {
                bool nonneg = true, nonpos = true;
                for (const Rat& cc : up) {
                    if (cc < 0) nonneg = false;
                    if (cc > 0) nonpos = false;
                }
                allsame = nonneg || nonpos;
            }
            sol.certificate = std::string("defect numerator is ") +
                              (s > 0 ? "positive" : "negative") + " for all " + solve_var +
                              " > 0 (" +
                              (allsame ? "all-coefficient sign" : "Sturm count 0 on (0, inf)") +
                              ")";
        }
        return sol;
    }

    if (deg > 2)
        throw UnsupportedFamily(
            "defect numerator has degree > 2 in the solve variable with free parameters left");

    Poly A = P.coeff_of(var, 2);
    Poly B = P.coeff_of(var, 1);
    Poly C = P.coeff_of(var, 0);

    if (deg == 1) {
        if (!B.is_constant())
            throw UnsupportedFamily("linear coefficient is not constant; unsupported");
        Rat b = B.constant_value();
        ClosedBranch br;
        br.p = -C;
        br.den = b;
        br.c = 0;
        br.d = 0;
        br.r = Poly::constant(P.nvars(), 1);
        br.q = Poly::constant(P.nvars(), 1);
        br.sgn = 0;
        Poly value = br.p * (Rat(1) / br.den);
        Positivity st = positivity_status(value);
        br.excluded = (st == Positivity::AlwaysFalse);
        if (st == Positivity::Conditional)
            br.domain.push_back({value, threshold_pretty(value, family.params)});
        br.pretty = branch_str(br, family.params, family.params[var]);
        sol.branches.push_back(std::move(br));
        sol.kind = SolutionKind::ClosedFormBranches;
        finalize_branches(sol);
        return sol;
    }

    if (!A.is_constant())
        throw UnsupportedFamily("quadratic coefficient is not constant; unsupported");
    Rat a = A.constant_value();
    int defect_lead_sign = sign_of(a);
    if (a < 0) {  // normalize to a > 0; zeros are unchanged
        a = -a;
        B = -B;
        C = -C;
    }

    Poly D = B * B - Rat(4) * a * C;
    int nv = P.nvars();
    sol.kind = SolutionKind::ClosedFormBranches;

    if (D.is_zero()) {
        ClosedBranch br;
        br.p = -B;
        br.den = 2 * a;
        br.c = 0;
        br.d = 0;
        br.r = Poly::constant(nv, 1);
        br.q = Poly::constant(nv, 1);
        br.double_root = true;
        br.defect_sign_nearby = defect_lead_sign;
        Poly value = br.p * (Rat(1) / br.den);
        Positivity st = positivity_status(value);
        br.excluded = (st == Positivity::AlwaysFalse);
        if (st == Positivity::Conditional)
            br.domain.push_back({value, threshold_pretty(value, family.params)});
        br.pretty = branch_str(br, family.params, family.params[var]);
        sol.branches.push_back(std::move(br));
        finalize_branches(sol);
        return sol;
    }

    Rat cont = D.content();
    Poly prim = D.primitive();
    // cont = s^2 * d with d squarefree, over the rationals.
    Int s2num, dnum, s2den, dden;
    std::tie(s2num, dnum) = extract_square(rat_num(cont));
    std::tie(s2den, dden) = extract_square(rat_den(cont));
    // sqrt(cont) = (s2num/s2den) * sqrt(dnum*dden) / dden
    Rat ccoef = Rat(s2num, s2den * dden);
    Int d = dnum * dden;
    Poly rpart(nv), qpart(nv);
    split_square_part(prim, rpart, qpart);

    Positivity d_status = positivity_status(D);

    for (int sgn : {+1, -1}) {
        ClosedBranch br;
        br.p = -B;
        br.den = 2 * a;
        br.c = ccoef;
        br.d = d;
        br.r = rpart;
        br.q = qpart;
        br.sgn = sgn;
        if (d_status == Positivity::Conditional)
            br.domain.push_back({D, threshold_pretty(D, family.params)});
        else if (d_status == Positivity::AlwaysFalse)
            br.excluded = true;

        // With a > 0: the +branch is positive iff b < 0 or c < 0; the -branch
        // is positive iff b < 0 and c > 0.
        Positivity negB = positivity_status(-B);
        Positivity negC = positivity_status(-C);
        Positivity posC = positivity_status(C);
        if (sgn > 0) {
            if (negB == Positivity::AlwaysTrue || negC == Positivity::AlwaysTrue) {
                // valid on the whole domain
            } else if (negB == Positivity::AlwaysFalse && negC == Positivity::AlwaysFalse) {
                br.excluded = true;
            } else {
                Poly guard = negB != Positivity::AlwaysFalse ? -B : -C;
                br.domain.push_back({guard, threshold_pretty(guard, family.params)});
            }
        } else {
            if (negB == Positivity::AlwaysFalse || posC == Positivity::AlwaysFalse) {
                br.excluded = true;
            } else {
                if (negB == Positivity::Conditional) {
                    Poly g = -B;
                    br.domain.push_back({g, threshold_pretty(g, family.params)});
                }
                if (posC == Positivity::Conditional) {
                    br.domain.push_back({C, threshold_pretty(C, family.params)});
                }
            }
        }
        br.pretty = branch_str(br, family.params, family.params[var]);
        sol.branches.push_back(std::move(br));
    }
    finalize_branches(sol);
    return sol;
}

}  // namespace flagcurv
