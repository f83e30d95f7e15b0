#include <doctest.h>

#include <random>

#include "flagcurv/errors.hpp"
#include "flagcurv/klsc.hpp"
#include "flagcurv/realroots.hpp"
#include "flagcurv/repro.hpp"
#include "flagcurv/surd.hpp"

using namespace flagcurv;

TEST_CASE("rational parsing and decimal rendering") {
    CHECK(parse_rational("3/4") == Rat(3, 4));
    CHECK(parse_rational("-1.25") == Rat(-5, 4));
    CHECK(parse_rational("1e-3") == Rat(1, 1000));
    CHECK(parse_rational("2.5e2") == 250);
    CHECK(decimal_string(Rat(5, 2), 12) == "2.5");
    CHECK(decimal_string(Rat(1, 3), 5) == "0.33333");
    CHECK(decimal_string(Rat(-1, 18), 6) == "-0.0555556");
    CHECK(decimal_string(Rat(999), 2) == "1000");
}

TEST_CASE("surd arithmetic") {
    Surd s(3, -2, 2);  // 3 - 2 sqrt(2) > 0
    CHECK(s.sign() == 1);
    CHECK(Surd(3, -3, 2).sign() == -1);  // 3 - 3 sqrt(2) < 0
    CHECK((s * Surd(3, 2, 2)).is_rational());
    CHECK((s * Surd(3, 2, 2)).a == 1);  // (3)^2 - 8 = 1
    CHECK(Surd::sqrt_of(Rat(8)) == Surd(0, 2, 2));
    CHECK(Surd::sqrt_of(Rat(9, 4)) == Surd(Rat(3, 2), 0, 0));
    CHECK(Surd(0, 1, 4) == Surd(2, 0, 0));  // sqrt(4) folds to 2
    // decimal of sqrt(2)
    CHECK(Surd(0, 1, 2).decimal(12) == "1.41421356237");
}

TEST_CASE("square-free decomposition and root isolation") {
    // (u-1)^2 (u-2): roots 1 (multiplicity 2, flagged) and 2
    UPoly p{Rat(-2), Rat(5), Rat(-4), Rat(1)};
    auto roots = isolate_positive_roots(p, Rat(1, 1 << 20));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].multiplicity == 2);
    CHECK(roots[0].lo <= 1);
    CHECK(roots[0].hi >= 1);
    CHECK(roots[1].multiplicity == 1);
    CHECK(roots[1].lo < 2);
    CHECK(roots[1].hi > 2);

    // u^2 - 5: one positive root near 2.2360679...
    UPoly q{Rat(-5), Rat(0), Rat(1)};
    auto r = isolate_positive_roots(q, parse_rational("1e-12"));
    REQUIRE(r.size() == 1);
    CHECK(r[0].hi - r[0].lo <= parse_rational("1e-12"));
    CHECK(r[0].lo * r[0].lo < 5);
    CHECK(r[0].hi * r[0].hi > 5);

    // u + 1: no positive roots
    CHECK(isolate_positive_roots(UPoly{Rat(1), Rat(1)}, Rat(1, 100)).empty());
    CHECK_THROWS_AS(isolate_positive_roots(UPoly{}, Rat(1, 100)), ZeroPolynomial);
    CHECK_THROWS_AS(isolate_positive_roots(q, Rat(0)), InvalidTolerance);

    // exact rational root hit by bisection
    UPoly lin{Rat(-1), Rat(1)};
    auto e = isolate_positive_roots(lin, Rat(1, 1000));
    REQUIRE(e.size() == 1);
    CHECK(e[0].mid == 1);
}

TEST_CASE("sign on the positive ray") {
    CHECK(sign_on_positive_ray(UPoly{Rat(1), Rat(0), Rat(3)}) == 1);   // 3u^2 + 1
    CHECK(sign_on_positive_ray(UPoly{Rat(-1), Rat(0), Rat(-3)}) == -1);
    CHECK(sign_on_positive_ray(UPoly{Rat(5), Rat(-2), Rat(1)}) == 1);  // u^2-2u+5 > 0
    CHECK(sign_on_positive_ray(UPoly{Rat(1), Rat(-2), Rat(1)}) == 0);  // (u-1)^2 touches 0
    CHECK(sign_on_positive_ray(UPoly{Rat(-5), Rat(0), Rat(1)}) == 0);  // sign change
}

TEST_CASE("positivity certificates on the open positive cone") {
    std::vector<std::string> ps{"x", "y"};
    auto st = [&](const char* e) { return positivity_status(parse_poly(e, ps)); };
    CHECK(st("x^2+3*x*y+y^2") == Positivity::AlwaysTrue);
    CHECK(st("-x^2-y^2") == Positivity::AlwaysFalse);
    CHECK(st("x^2-x*y+y^2") == Positivity::AlwaysTrue);    // negative discriminant
    CHECK(st("x*y-x^2-y^2") == Positivity::AlwaysFalse);
    CHECK(st("x^2-6*x*y+y^2") == Positivity::Conditional); // two positive ratio roots
    CHECK(st("x*y-x^2") == Positivity::Conditional);       // linear in the ratio
    CHECK(st("x^2+2*x*y+y^2") == Positivity::AlwaysTrue);  // (x+y)^2, root at ratio -1
    CHECK(st("x^2-2*x*y+y^2") == Positivity::Conditional); // (x-y)^2 vanishes at x = y
    CHECK(st("y^2-5") == Positivity::Conditional);         // univariate sign change
    CHECK(st("y^2+5") == Positivity::AlwaysTrue);
    CHECK(st("3-y") == Positivity::Conditional);
}

TEST_CASE("defect numerators of the paper families") {
    auto su3 = builtin_space("su3-full");
    std::vector<Poly> vars{Poly::variable(3, 0), Poly::variable(3, 1), Poly::variable(3, 2)};
    auto g = make_metric(su3, {"x", "y", "z"}, vars);
    Poly num = defect_numerator(g, make_acs(su3, {1, 1, -1}));
    CHECK(num == parse_poly("x^2+y^2+z^2-6*x*y-6*x*z-6*y*z", g.params));

    auto cp3 = builtin_space("cp3");
    std::vector<Poly> vars2{Poly::variable(2, 0), Poly::variable(2, 1)};
    auto gc = make_metric(cp3, {"x", "y"}, vars2);
    Poly numc = defect_numerator(gc, make_acs(cp3, {1, -1}));
    CHECK(numc == parse_poly("y^2-12*x*y-4*x^2", gc.params));

    auto su4 = su4_fibration_family();
    Poly num4 = defect_numerator(su4, make_acs(su4.space, {-1, 1, 1, -1, 1, 1}));
    CHECK(num4 == parse_poly("x^4-5", su4.params));
}

TEST_CASE("solver error paths") {
    auto su3 = builtin_space("su3-full");
    std::vector<Poly> vars{Poly::variable(3, 0), Poly::variable(3, 1), Poly::variable(3, 2)};
    auto g = make_metric(su3, {"x", "y", "z"}, vars);
    auto j2 = make_acs(su3, {1, 1, -1});
    CHECK_THROWS_AS(solve_klsc(g, j2, "w", Rat(1, 100)), UnsupportedFamily);
    CHECK_THROWS_AS(solve_klsc(g, j2, "z", Rat(0)), InvalidTolerance);

    // identically-zero defect: the Kaehler family (x, y, x+y) under J1
    std::vector<Poly> kfam{Poly::variable(2, 0), Poly::variable(2, 1),
                           Poly::variable(2, 0) + Poly::variable(2, 1)};
    auto gk = make_metric(su3, {"x", "y"}, kfam);
    CHECK_THROWS_AS(solve_klsc(gk, make_acs(su3, {1, 1, 1}), "y", Rat(1, 100)),
                    UnsupportedFamily);
}

TEST_CASE("roots outside the positive cone yield NoSolution") {
    // Family (x, y, z+x+y) under J1: the defect is z^2 / (6xy(x+y+z)), whose
    // only root z = 0 lies outside the domain; the free parameters cancel, so
    // the solver certifies positivity on the ray.
    auto su3 = builtin_space("su3-full");
    std::vector<std::string> params{"x", "y", "z"};
    std::vector<Poly> fam{Poly::variable(3, 0), Poly::variable(3, 1),
                          Poly::variable(3, 2) + Poly::variable(3, 0) + Poly::variable(3, 1)};
    auto g = make_metric(su3, params, fam);
    KlscSolution sol = solve_klsc(g, make_acs(su3, {1, 1, 1}), "z", Rat(1, 1000));
    CHECK(sol.numerator == parse_poly("z^2", params));
    CHECK(sol.kind == SolutionKind::NoSolution);
    CHECK(sol.roots.empty());
    CHECK(!sol.certificate.empty());
}

TEST_CASE("shifted family keeps the conditional branch domain coherent") {
    // Family (x, y, z + 6(x+y)) under J2: substituting w = z + 6(x+y) into
    // the defect numerator gives z^2 + 6(x+y)z + (x^2+y^2-6xy); the plus
    // branch survives exactly where x^2+y^2-6xy < 0, the minus branch never.
    auto su3 = builtin_space("su3-full");
    std::vector<std::string> params{"x", "y", "z"};
    Poly x = Poly::variable(3, 0), y = Poly::variable(3, 1), z = Poly::variable(3, 2);
    auto g = make_metric(su3, params, {x, y, z + Rat(6) * (x + y)});
    KlscSolution sol = solve_klsc(g, make_acs(su3, {1, 1, -1}), "z", Rat(1, 1000));
    REQUIRE(sol.kind == SolutionKind::ClosedFormBranches);
    REQUIRE(sol.branches.size() == 2);
    const ClosedBranch& plus = sol.branches[0];
    CHECK(!plus.excluded);
    REQUIRE(plus.domain.size() == 1);
    CHECK(plus.domain[0].lhs == parse_poly("6*x*y-x^2-y^2", params));
    CHECK(sol.branches[1].excluded);

    // Sample the declared domain: at (1,1) the branch value is
    // -6 + 2 sqrt(2) sqrt(5) > 0, and the defect vanishes there exactly.
    std::vector<Rat> pt{Rat(1), Rat(1), Rat(0)};
    Surd root = Surd::sqrt_of(Rat(plus.d) * plus.q.eval(pt));
    Surd zval = Surd::rational(plus.p.eval(pt) / plus.den) + (plus.c / plus.den) * root;
    CHECK(zval.sign() > 0);
    UPoly in_z = sol.numerator.substitute(0, Rat(1)).substitute(1, Rat(1)).univariate(2);
    Surd acc = Surd::rational(0), zp = Surd::rational(1);
    for (const Rat& coeff : in_z) {
        acc = acc + coeff * zp;
        zp = zp * zval;
    }
    CHECK(acc.sign() == 0);
}

TEST_CASE("branch residuals vanish exactly and branches are positive on domain") {
    auto su3 = builtin_space("su3-full");
    std::vector<Poly> vars{Poly::variable(3, 0), Poly::variable(3, 1), Poly::variable(3, 2)};
    auto g = make_metric(su3, {"x", "y", "z"}, vars);
    auto j2 = make_acs(su3, {1, 1, -1});
    KlscSolution sol = solve_klsc(g, j2, "z", parse_rational("1e-12"));
    REQUIRE(sol.kind == SolutionKind::ClosedFormBranches);
    REQUIRE(sol.branches.size() == 2);

    std::mt19937_64 rng(7);
    auto rnd = [&rng]() { return Rat(1 + static_cast<int>(rng() % 20), 1 + static_cast<int>(rng() % 7)); };

    for (const ClosedBranch& b : sol.branches) {
        int checked = 0;
        for (int trial = 0; trial < 400 && checked < 100; ++trial) {
            Rat x = rnd(), y = rnd();
            // For the minus branch, sample the declared domain y > (3+2sqrt2)x
            // or y < (3-2sqrt2)x by construction on part of the trials.
            if (b.sgn < 0 && trial % 2 == 0) y = x * 6 + rnd();  // 6 > 3 + 2 sqrt(2)
            bool in_domain = true;
            for (const DomainConstraint& c : b.domain) {
                std::vector<Rat> pt{x, y, Rat(1)};
                if (c.lhs.eval(pt) <= 0) in_domain = false;
            }
            if (!in_domain) continue;
            ++checked;

            // z = (p +- c sqrt(d) sqrt(q)) / den as an exact surd
            std::vector<Rat> pt{x, y, Rat(0)};
            Rat pval = b.p.eval(pt), qval = b.q.eval(pt);
            Surd root = Surd::sqrt_of(Rat(b.d) * qval * b.r.eval(pt) * b.r.eval(pt));
            Surd z = Surd::rational(pval / b.den) +
                     Rat(b.sgn) * (b.c / b.den) * root;
            CHECK(z.sign() > 0);

            // substitute back into the numerator: exact zero
            UPoly in_z = sol.numerator.substitute(0, x).substitute(1, y).univariate(2);
            REQUIRE(!in_z.empty());
            Surd acc = Surd::rational(0);
            Surd zp = Surd::rational(1);
            for (const Rat& coeff : in_z) {
                acc = acc + coeff * zp;
                zp = zp * z;
            }
            CHECK(acc.sign() == 0);
        }
        CHECK(checked == 100);
    }

    // The minus branch must be nonpositive somewhere outside its domain:
    // at x = y = 1 it is 6 - 2 sqrt(2) sqrt(5) < 0.
    const ClosedBranch& minus = sol.branches[1];
    CHECK(minus.sgn < 0);
    Surd at11 = Surd::rational(Rat(6) / minus.den * 2) +
                Rat(-1) * (minus.c / minus.den) * Surd::sqrt_of(Rat(minus.d) * 5);
    CHECK(at11.sign() < 0);
}

TEST_CASE("excluded cp3 branch is nonpositive on the domain") {
    auto cp3 = builtin_space("cp3");
    std::vector<Poly> vars{Poly::variable(2, 0), Poly::variable(2, 1)};
    auto g = make_metric(cp3, {"x", "y"}, vars);
    KlscSolution sol = solve_klsc(g, make_acs(cp3, {1, -1}), "y", Rat(1, 1000));
    REQUIRE(sol.branches.size() == 2);
    const ClosedBranch& minus = sol.branches[1];
    REQUIRE(minus.sgn < 0);
    CHECK(minus.excluded);
    for (Rat x : {Rat(1), Rat(3, 2), Rat(7)}) {
        std::vector<Rat> pt{x, Rat(0)};
        Surd v = Surd::rational(minus.p.eval(pt) / minus.den) +
                 Rat(-1) * (minus.c / minus.den) *
                     Surd::sqrt_of(Rat(minus.d) * minus.q.eval(pt) * minus.r.eval(pt) *
                                   minus.r.eval(pt));
        CHECK(v.sign() < 0);  // 6x - 2 sqrt(10) x
    }
}

TEST_CASE("cone property: branches scale linearly on the homogeneous family") {
    auto su3 = builtin_space("su3-full");
    std::vector<Poly> vars{Poly::variable(3, 0), Poly::variable(3, 1), Poly::variable(3, 2)};
    auto g = make_metric(su3, {"x", "y", "z"}, vars);
    KlscSolution sol = solve_klsc(g, make_acs(su3, {1, 1, -1}), "z", parse_rational("1e-9"));
    CHECK(sol.homogeneous);
    const ClosedBranch& plus = sol.branches[0];
    // z(cx, cy) = c z(x, y) for c = 3, at (x,y) = (1,2) exactly
    auto value_at = [&](Rat x, Rat y) {
        std::vector<Rat> pt{x, y, Rat(0)};
        return Surd::rational(plus.p.eval(pt) / plus.den) +
               Rat(plus.sgn) * (plus.c / plus.den) *
                   Surd::sqrt_of(Rat(plus.d) * plus.q.eval(pt) *
                                 plus.r.eval(pt) * plus.r.eval(pt));
    };
    Surd v1 = value_at(1, 2), v3 = value_at(3, 6);
    CHECK((v3 - Rat(3) * v1).sign() == 0);
}

TEST_CASE("even-power families are solved through u = var^2") {
    auto g = su4_fibration_family();
    auto j3 = make_acs(g.space, {1, 1, 1, -1, 1, -1});
    KlscSolution sol = solve_klsc(g, j3, "x", parse_rational("1e-12"));
    REQUIRE(sol.kind == SolutionKind::IsolatedRoots);
    REQUIRE(sol.roots.size() == 2);
    CHECK(sol.solved_in_square);
    CHECK(sol.roots[0].exact_square.has_value());
    CHECK(*sol.roots[0].exact_square == Surd(Rat(8, 3), Rat(-1, 3), 61));
    CHECK(*sol.roots[1].exact_square == Surd(Rat(8, 3), Rat(1, 3), 61));
    // residuals certified below the interval width
    for (const CertifiedRoot& r : sol.roots)
        CHECK(r.interval.hi - r.interval.lo <= parse_rational("1e-12"));
}
