#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagcurv/curvature.hpp"
#include "flagcurv/realroots.hpp"
#include "flagcurv/surd.hpp"

namespace flagcurv {

/// Defect 2*s1 - s as a single polynomial: the numerator after clearing the
/// strictly positive common denominator, divided by its rational content
/// (sign preserved, so it has the defect's sign on the parameter domain).
Poly defect_numerator(const InvariantMetric& family, const AlmostComplexStructure& acs);

enum class SolutionKind { NoSolution, ClosedFormBranches, IsolatedRoots };
enum class Positivity { AlwaysTrue, AlwaysFalse, Conditional };

struct DomainConstraint {
    Poly lhs;            // constraint lhs > 0, over the family parameters
    std::string pretty;  // threshold form when available, e.g. "y > (3+2*sqrt(2))*x"
};

/// One closed-form branch: var = (p + sign * c*sqrt(d)*r*sqrt(q)) / den.
struct ClosedBranch {
    Poly p;
    Rat c;      // 0 for a rational branch
    Int d;      // squarefree
    Poly r;     // polynomial square factor extracted from the discriminant
    Poly q;     // primitive non-square part left under the radical
    Rat den;
    int sgn = 0;              // +1 / -1; 0 for a double root
    bool double_root = false;
    int defect_sign_nearby = 0;  // sign of the defect off the double root
    bool excluded = false;       // nonpositive somewhere on the whole domain
    std::vector<DomainConstraint> domain;  // beyond parameter positivity
    std::string pretty;
};

struct CertifiedRoot {
    IsolatedRoot interval;            // in the solve variable
    std::optional<Surd> exact;        // exact value of the variable, if quadratic
    std::optional<Surd> exact_square; // exact value of var^2 when solved in u = var^2
};

struct KlscSolution {
    SolutionKind kind = SolutionKind::NoSolution;
    std::vector<ClosedBranch> branches;
    std::vector<CertifiedRoot> roots;
    std::string certificate;   // positivity/negativity certificate for NoSolution
    bool homogeneous = false;  // root set is a cone; solutions scale freely
    bool solved_in_square = false;  // roots were found via u = var^2
    Poly numerator;
    std::vector<std::string> params;
    int var = -1;
};

/// Solves 2*s1 - s = 0 over the positive parameter domain: exact surd
/// branches when the numerator is quadratic in the solve variable, certified
/// isolated roots when it is univariate.
KlscSolution solve_klsc(const InvariantMetric& family, const AlmostComplexStructure& acs,
                        const std::string& solve_var, const Rat& tolerance);

/// Layered positivity certificate on the open positive orthant.
Positivity positivity_status(const Poly& p);

std::string branch_str(const ClosedBranch& b, const std::vector<std::string>& params,
                       const std::string& var_name);

}  // namespace flagcurv
