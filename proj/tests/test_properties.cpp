#include <doctest.h>

#include "flagcurv/repro.hpp"

using namespace flagcurv;

TEST_CASE("randomized property suite over all spaces and structures") {
    for (const Check& c : checks_property_suite(987654321, 30)) {
        INFO(c.name, " -- ", c.expected);
        CHECK(c.pass);
    }
}

TEST_CASE("reproduction targets all pass") {
    for (const char* t : {"su3", "cp3", "g2-u2", "su4-table", "g2-table"}) {
        ReproductionReport rep = run_target(t);
        for (const Check& c : rep.checks) {
            INFO(rep.target, " / ", c.name, ": expected ", c.expected, ", computed ", c.computed);
            CHECK(c.pass);
        }
        CHECK(rep.overall());
    }
}
