#include <doctest.h>

#include "flagcurv/errors.hpp"
#include "flagcurv/rootsystem.hpp"
#include "lie_oracle.hpp"

using namespace flagcurv;

TEST_CASE("root counts and positivity") {
    auto a2 = build_root_system({Family::A, 2});
    CHECK(a2.all_roots().size() == 6);
    CHECK(a2.positive_roots().size() == 3);
    CHECK(a2.is_root(Root{{1, 1}}));  // a12 + a23 = a13

    auto c2 = build_root_system({Family::C, 2});
    CHECK(c2.all_roots().size() == 8);
    // positive roots: a1 = l1-l2, a1+a2 = l1+l2, 2a1+a2 = 2l1, a2 = 2l2
    CHECK(c2.is_root(Root{{1, 1}}));
    CHECK(c2.is_root(Root{{2, 1}}));
    CHECK(!c2.is_root(Root{{2, 0}}));

    auto g2 = build_root_system({Family::G2, 2});
    CHECK(g2.all_roots().size() == 12);
    CHECK(g2.is_root(Root{{1, 3}}));
    CHECK(g2.is_root(Root{{2, 3}}));  // maximal root
    CHECK(!g2.is_root(Root{{2, 2}}));

    auto a3 = build_root_system({Family::A, 3});
    CHECK(a3.all_roots().size() == 12);

    // negation closure and sign coherence
    for (const Root& r : g2.all_roots()) {
        CHECK(g2.is_root(-r));
        bool nonneg = true, nonpos = true;
        for (int c : r.coeffs) {
            nonneg &= (c >= 0);
            nonpos &= (c <= 0);
        }
        CHECK((nonneg || nonpos));
    }
}

TEST_CASE("unsupported algebras") {
    CHECK_THROWS_AS(build_root_system({Family::G2, 3}), UnsupportedAlgebra);
    CHECK_THROWS_AS(build_root_system({Family::A, 0}), UnsupportedAlgebra);
    CHECK_THROWS_AS(build_root_system({Family::C, 1}), UnsupportedAlgebra);
}

TEST_CASE("Killing norms") {
    auto a2 = build_root_system({Family::A, 2});
    for (const Root& r : a2.all_roots()) CHECK(a2.killing_norm_sq(r) == Rat(1, 3));

    auto c2 = build_root_system({Family::C, 2});
    CHECK(c2.killing_norm_sq(Root{{1, 0}}) == Rat(1, 6));   // short
    CHECK(c2.killing_norm_sq(Root{{2, 1}}) == Rat(1, 3));   // long 2l1
    CHECK(c2.killing_norm_sq(Root{{0, 1}}) == Rat(1, 3));   // long 2l2

    auto g2 = build_root_system({Family::G2, 2});
    CHECK(g2.killing_norm_sq(Root{{0, 1}}) == Rat(1, 12));  // short a2
    CHECK(g2.killing_norm_sq(Root{{1, 0}}) == Rat(1, 4));   // long a1

    CHECK_THROWS_AS(a2.killing_norm_sq(Root{{2, 0}}), NotARoot);
}

TEST_CASE("Killing sum rule: sum of <a,a> over all roots equals the rank") {
    for (RootSystemSpec spec : {RootSystemSpec{Family::A, 2}, RootSystemSpec{Family::A, 3},
                                RootSystemSpec{Family::C, 2}, RootSystemSpec{Family::G2, 2}}) {
        auto rs = build_root_system(spec);
        Rat sum = 0;
        for (const Root& r : rs.all_roots()) {
            Rat nsq = rs.killing_norm_sq(r);
            CHECK(nsq > 0);
            sum += nsq;
        }
        CHECK(sum == rs.rank());
    }
}

TEST_CASE("root strings") {
    auto a2 = build_root_system({Family::A, 2});
    CHECK(a2.root_string(Root{{1, 0}}, Root{{0, 1}}) == std::pair{0, 1});

    auto g2 = build_root_system({Family::G2, 2});
    CHECK(g2.root_string(Root{{0, 1}}, Root{{1, 1}}) == std::pair{1, 2});

    auto a3 = build_root_system({Family::A, 3});
    CHECK(a3.root_string(Root{{1, 0, 0}}, Root{{0, 0, 1}}) == std::pair{0, 0});

    CHECK_THROWS_AS(a2.root_string(Root{{1, 0}}, Root{{1, 0}}), DegenerateString);
    CHECK_THROWS_AS(a2.root_string(Root{{1, 0}}, Root{{-1, 0}}), DegenerateString);
}

TEST_CASE("string symmetry: string of -a through b swaps p and q") {
    for (RootSystemSpec spec : {RootSystemSpec{Family::A, 3}, RootSystemSpec{Family::C, 2},
                                RootSystemSpec{Family::G2, 2}}) {
        auto rs = build_root_system(spec);
        for (const Root& a : rs.all_roots()) {
            for (const Root& b : rs.all_roots()) {
                if (b == a || b == -a) continue;
                auto [p, q] = rs.root_string(a, b);
                auto [pn, qn] = rs.root_string(-a, b);
                CHECK(p == qn);
                CHECK(q == pn);
            }
        }
    }
}

TEST_CASE("squared structure constants") {
    auto a2 = build_root_system({Family::A, 2});
    CHECK(a2.structure_constant_sq(Root{{1, 0}}, Root{{0, 1}}) == Rat(1, 6));
    CHECK(a2.structure_constant_sq(Root{{1, 0}}, Root{{1, 1}}) == 0);  // sum not a root

    auto g2 = build_root_system({Family::G2, 2});
    CHECK(g2.structure_constant_sq(Root{{1, 0}}, Root{{1, 3}}) == Rat(1, 8));
}

TEST_CASE("triple invariance of m^2 over zero-sum triples") {
    for (RootSystemSpec spec : {RootSystemSpec{Family::A, 3}, RootSystemSpec{Family::C, 2},
                                RootSystemSpec{Family::G2, 2}}) {
        auto rs = build_root_system(spec);
        for (const Root& a : rs.all_roots()) {
            for (const Root& b : rs.all_roots()) {
                Root c = -(a + b);
                if (!rs.is_root(c) || c == a || c == b) continue;
                Rat mab = rs.structure_constant_sq(a, b);
                CHECK(mab == rs.structure_constant_sq(b, c));
                CHECK(mab == rs.structure_constant_sq(c, a));
            }
        }
    }
}

TEST_CASE("matrix-representation oracle agrees exactly (A2, A3, C2)") {
    struct Case {
        RootSystemSpec spec;
        oracle::MatrixOracle o;
    };
    std::vector<Case> cases;
    cases.push_back({{Family::A, 2}, oracle::MatrixOracle::sl(3)});
    cases.push_back({{Family::A, 3}, oracle::MatrixOracle::sl(4)});
    cases.push_back({{Family::C, 2}, oracle::MatrixOracle::sp2()});

    for (const Case& c : cases) {
        auto rs = build_root_system(c.spec);
        for (const Root& a : rs.all_roots()) {
            CHECK(rs.killing_norm_sq(a) == c.o.killing_norm_sq(a));
            for (const Root& b : rs.all_roots()) {
                if (a == b || a == -b) continue;
                CHECK(rs.structure_constant_sq(a, b) == c.o.structure_constant_sq(a, b));
            }
        }
    }
}

TEST_CASE("G2 Killing form from the explicit 12-root realization") {
    auto g2 = build_root_system({Family::G2, 2});
    for (const Root& r : g2.all_roots())
        CHECK(g2.killing_norm_sq(r) == oracle::g2_killing_norm_sq(r));
}
