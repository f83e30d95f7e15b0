#include "flagcurv/curvature.hpp"

#include <array>

#include "flagcurv/errors.hpp"

namespace flagcurv {

Rat triple_symbol(const FlagSpace& fs, int i, int j, int k) {
    int n = fs.num_summands();
    if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n)
        throw Error("triple symbol index out of range");
    return fs.triple_symbol_table()[(static_cast<std::size_t>(i) * n + j) * n + k];
}

Frac riemannian_scalar(const InvariantMetric& metric) {
    const FlagSpace& fs = *metric.space;
    int n = fs.num_summands();
    int nv = static_cast<int>(metric.params.size());
    Frac s = frac_zero(metric);

    for (int i = 0; i < n; ++i) {
        Frac term;
        term.num = Poly::constant(nv, Rat(fs.summands()[i].dim, 2));
        term.den.assign(n, 0);
        term.den[i] = 1;
        s = frac_add(s, term, metric);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                Rat sym = triple_symbol(fs, i, j, k);
                if (sym == 0) continue;
                Frac term;
                term.num = metric.values[k] * Rat(-sym / 4);
                term.den.assign(n, 0);
                term.den[i] += 1;
                term.den[j] += 1;
                s = frac_add(s, term, metric);
            }
        }
    }
    return s;
}

Frac CurvatureReport::s2_at(const Rat& t, const InvariantMetric& g) const {
    Frac v = frac_scale(s2_t2, t * t);
    v = frac_add(v, frac_scale(s2_t1, t), g);
    return frac_add(v, s2_t0, g);
}

CurvatureReport curvature_report(const InvariantMetric& metric,
                                 const AlmostComplexStructure& acs) {
    CurvatureReport r;
    r.norms = tensor_norms(metric, acs);
    r.gh_class = gray_hervella(r.norms);
    r.s = riemannian_scalar(metric);

    const Frac& dfm = r.norms.df_minus_sq;
    const Frac& n0 = r.norms.n0_sq;
    const Frac& dfp = r.norms.df_plus_sq;
    auto combine = [&](const Rat& cs, const Rat& cm, const Rat& cn, const Rat& cp) {
        Frac v = frac_scale(r.s, cs);
        v = frac_add(v, frac_scale(dfm, cm), metric);
        v = frac_add(v, frac_scale(n0, cn), metric);
        v = frac_add(v, frac_scale(dfp, cp), metric);
        return v;
    };

    r.s1 = combine(Rat(1, 2), Rat(-5, 12), Rat(1, 16), Rat(1, 4));
    r.s2_t0 = combine(Rat(1, 2), Rat(-1, 12), Rat(1, 32), Rat(0));
    r.s2_t1 = frac_scale(dfp, Rat(1, 2));
    r.s2_t2 = frac_scale(dfp, Rat(-1, 4));
    r.sJ = combine(Rat(1), Rat(-2, 3), Rat(1, 4), Rat(0));
    // The defect never references s: it is assembled from the norms alone.
    Frac d = frac_scale(dfm, Rat(-5, 6));
    d = frac_add(d, frac_scale(n0, Rat(1, 8)), metric);
    d = frac_add(d, frac_scale(dfp, Rat(1, 2)), metric);
    r.defect = d;
    return r;
}

}  // namespace flagcurv
