#pragma once

#include "flagcurv/hermitian.hpp"

namespace flagcurv {

/// Fully symmetric triple symbol [ijk]: sum of m^2 over canonical zero-sum
/// triple entries, counting each assignment of the triple's three root planes
/// to the slots (i, j, k).  Indices are 0-based summand positions.
Rat triple_symbol(const FlagSpace& fs, int i, int j, int k);

/// Riemannian scalar curvature
///   s = 1/2 sum_i d_i / v_i - 1/4 sum_{(i,j,k) ordered} [ijk] v_k / (v_i v_j).
Frac riemannian_scalar(const InvariantMetric& metric);

/// Scalar curvatures of the Gauduchon connection family; the Lee-form terms
/// vanish identically on flag manifolds, so s1 carries no t-dependence and
/// s2(t) = s2(2-t).
struct CurvatureReport {
    Frac s;            // Riemannian scalar curvature
    Frac s1;           // first Hermitian scalar curvature (= Chern)
    Frac s2_t2;        // s2(t) = s2_t2 * t^2 + s2_t1 * t + s2_t0
    Frac s2_t1;
    Frac s2_t0;
    Frac sJ;           // J-scalar curvature
    Frac defect;       // 2 s1 - s, assembled from the norms alone
    TensorNorms norms;
    GrayHervellaClass gh_class;

    Frac s2_at(const Rat& t, const InvariantMetric& g) const;
};

CurvatureReport curvature_report(const InvariantMetric& metric,
                                 const AlmostComplexStructure& acs);

}  // namespace flagcurv
