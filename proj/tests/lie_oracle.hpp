#pragma once

// Brute-force oracles in explicit matrix representations, independent of the
// root-system implementation: Killing-dual norms via linear solves on the
// Cartan, squared structure constants via matrix brackets, and triple symbols
// via sums over explicit orthonormal compact bases.

#include <map>
#include <vector>

#include "flagcurv/flagspace.hpp"

namespace flagcurv::oracle {

struct CRat {
    Rat re, im;
    CRat(Rat r = 0, Rat i = 0) : re(std::move(r)), im(std::move(i)) {}
    friend CRat operator+(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
    friend CRat operator-(const CRat& a, const CRat& b) { return {a.re - b.re, a.im - b.im}; }
    friend CRat operator*(const CRat& a, const CRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    bool operator==(const CRat&) const = default;
};

using CMat = std::vector<std::vector<CRat>>;

/// Matrix-representation oracle for sl(n) (family A_{n-1}) and sp(2) (C_2).
class MatrixOracle {
  public:
    static MatrixOracle sl(int n);   // B(X,Y) = 2n tr(XY)
    static MatrixOracle sp2();       // B(X,Y) = 6 tr(XY)

    Rat killing_norm_sq(const Root& alpha) const;
    Rat structure_constant_sq(const Root& alpha, const Root& beta) const;
    /// Sum of B([e_a,e_b],e_c)^2 over orthonormal bases of the three
    /// summands, bases {A_alpha, i S_alpha} normalized against -B.
    Rat triple_symbol(const FlagSpace& fs, int i, int j, int k) const;

  private:
    struct WeylVector {
        CMat mat;      // unscaled integer matrix U_alpha
        Rat scale_sq;  // k^2 with X_alpha = k U_alpha, <X_a, X_-a> = 1
    };
    const WeylVector& vec(const Root& r) const;

    int dim_ = 0;
    Rat cB_;  // B = cB * tr
    std::map<std::vector<int>, WeylVector> roots_;
    // Cartan basis as diagonal matrices plus the coordinates of the weights
    // lambda_i on that basis (columns).
    std::vector<CMat> cartan_;
    std::vector<std::vector<Rat>> weight_on_cartan_;  // weight i of cartan j
    int nweights_ = 0;
    // Maps a root coefficient vector to integer weight coordinates.
    std::vector<std::vector<int>> simple_in_weights_;
};

/// Killing-dual inner products for G2 from the explicit integer realization
/// of its 12 roots in the plane x+y+z = 0, with B(H,H') computed literally as
/// sum_alpha alpha(H) alpha(H').
Rat g2_killing_norm_sq(const Root& alpha);

}  // namespace flagcurv::oracle
