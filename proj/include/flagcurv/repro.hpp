#pragma once

#include <string>
#include <vector>

#include "flagcurv/klsc.hpp"

namespace flagcurv {

struct Check {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct ReproductionReport {
    std::string target;
    std::vector<Check> checks;
    bool overall() const;
};

/// Check builders, grouped as in the verification plan.  `space_filter`
/// restricts the scalar-curvature / zero-set / nearly-Kaehler groups to one
/// space ("" = all five).
std::vector<Check> checks_riemannian_scalar(const std::string& space_filter = "");
std::vector<Check> checks_su3_norms();
std::vector<Check> checks_klsc_zero_sets(const std::string& space_filter = "");
std::vector<Check> checks_su4_table();
std::vector<Check> checks_g2_table();
std::vector<Check> checks_nearly_kaehler(const std::string& space_filter = "");
std::vector<Check> checks_property_suite(unsigned seed = 20210802, int metrics_per_space = 100);

/// Family metrics used by the tables: su4 (x^2,x^2,1,x^2,1,1) and g2
/// (1,1,x^2,1,x^2,1), both over the single parameter "x".
InvariantMetric su4_fibration_family();
InvariantMetric g2_fibration_family();

/// The paper's almost complex structures on SU(4)/T^3, J1..J4.
std::vector<AlmostComplexStructure> su4_table_acs();

/// CLI/reproduction targets: su3, cp3, g2-u2, su4-table, g2-table, identities.
ReproductionReport run_target(const std::string& target);
const std::vector<std::string>& reproduction_targets();

}  // namespace flagcurv
