// Command-line surface for the invariant almost Hermitian curvature engine:
// inspect the built-in flag manifolds, compute norms / curvatures / classes,
// solve the Kahler-like scalar curvature equation 2*s1 - s = 0, emit sweep
// data, and run the paper-reproduction suites.
//
// Exit codes: 0 success, 2 usage or domain error, 3 reproduction mismatch.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "flagcurv/errors.hpp"
#include "flagcurv/repro.hpp"

using json = nlohmann::ordered_json;
using namespace flagcurv;

namespace {

int g_precision = 12;

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<Rat> parse_metric_values(const std::string& s) {
    std::vector<Rat> out;
    for (const std::string& tok : split_commas(s)) out.push_back(parse_rational(tok));
    return out;
}

std::vector<int> parse_signs(const std::string& s) {
    std::vector<int> out;
    for (std::string tok : split_commas(s)) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (tok == "+" || tok == "+1")
            out.push_back(1);
        else if (tok == "-" || tok == "-1")
            out.push_back(-1);
        else
            throw InvalidACS("bad sign token '" + tok + "' (use + or -)");
    }
    return out;
}

// Family components with parameters inferred in order of first appearance.
struct ParsedFamily {
    std::vector<std::string> params;
    std::vector<Poly> values;
};

ParsedFamily parse_family(const std::string& s) {
    ParsedFamily out;
    std::vector<std::string> comps = split_commas(s);
    for (const std::string& comp : comps) {
        std::string name;
        for (std::size_t i = 0; i <= comp.size(); ++i) {
            bool idchar = i < comp.size() && (std::isalnum(static_cast<unsigned char>(comp[i])) ||
                                              comp[i] == '_');
            bool idstart = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) ||
                                             name[0] == '_');
            if (idchar) {
                name += comp[i];
            } else {
                if (idstart &&
                    std::find(out.params.begin(), out.params.end(), name) == out.params.end())
                    out.params.push_back(name);
                name.clear();
            }
        }
    }
    for (const std::string& comp : comps) out.values.push_back(parse_poly(comp, out.params));
    return out;
}

json rat_json(const Rat& q) {
    json j;
    Int num = rat_num(q), den = rat_den(q);
    static const Int lim = Int(std::numeric_limits<std::int64_t>::max());
    if (num >= -lim && num <= lim)
        j["num"] = static_cast<std::int64_t>(num);
    else
        j["num"] = num.str();
    if (den <= lim)
        j["den"] = static_cast<std::int64_t>(den);
    else
        j["den"] = den.str();
    j["decimal"] = decimal_string(q, g_precision);
    return j;
}

json surd_json(const Surd& s) {
    json j;
    j["a"] = rat_json(s.a);
    j["b"] = rat_json(s.b);
    j["d"] = static_cast<std::int64_t>(s.d);
    j["decimal"] = s.decimal(g_precision);
    j["text"] = s.str();
    return j;
}

std::vector<std::string> sign_strings(const AlmostComplexStructure& acs) {
    std::vector<std::string> out;
    for (int s : acs.signs) out.emplace_back(s > 0 ? "+" : "-");
    return out;
}

json space_json(const FlagSpace& fs) {
    json j;
    j["name"] = fs.name();
    j["family"] = family_name(fs.root_system().spec().family);
    j["rank"] = fs.root_system().rank();
    std::vector<int> theta(fs.theta().begin(), fs.theta().end());
    for (int& t : theta) t += 1;  // 1-based simple-root indices
    j["theta"] = theta;
    j["complex_dim"] = fs.complex_dim();
    json summands = json::array();
    for (const IsotropySummand& m : fs.summands()) {
        json s;
        s["index"] = m.index;
        s["dim"] = m.dim;
        std::vector<std::string> roots;
        for (const Root& r : m.roots) roots.push_back(root_str(r));
        s["roots"] = roots;
        summands.push_back(s);
    }
    j["summands"] = summands;
    j["zero_sum_triples"] = fs.zero_sum_triples().size();
    return j;
}

int cmd_spaces(const std::string& format) {
    if (format == "json") {
        json out = json::array();
        for (const std::string& n : builtin_space_names()) out.push_back(space_json(*builtin_space(n)));
        std::cout << json{{"spaces", out}}.dump(2) << "\n";
        return 0;
    }
    for (const std::string& n : builtin_space_names()) {
        auto fs = builtin_space(n);
        Family fam = fs->root_system().spec().family;
        std::string famlabel = fam == Family::G2
                                   ? "G2"
                                   : family_name(fam) + std::to_string(fs->root_system().rank());
        std::cout << n << ": " << famlabel << ", " << fs->num_summands() << " summands, "
                  << fs->zero_sum_triples().size() << " zero-sum triples, complex dim "
                  << fs->complex_dim() << "\n";
        for (const IsotropySummand& m : fs->summands()) {
            std::cout << "  m" << m.index << " (dim " << m.dim << "):";
            for (const Root& r : m.roots) std::cout << " " << root_str(r);
            std::cout << "\n";
        }
    }
    return 0;
}

std::string rat_text(const Rat& q) {
    std::string s = rat_num(q).str();
    if (rat_den(q) != 1) s += "/" + rat_den(q).str();
    return s;
}

int cmd_report(const std::string& space_name, const std::string& metric_str,
               const std::string& acs_str, const std::string& t_str, const std::string& format) {
    auto space = builtin_space(space_name);
    auto g = make_metric(space, parse_metric_values(metric_str));
    auto j = make_acs(space, parse_signs(acs_str));
    CurvatureReport rep = curvature_report(g, j);

    auto ev = [&](const Frac& f) { return frac_eval(f, g); };
    Rat n0 = ev(rep.norms.n0_sq), dfm = ev(rep.norms.df_minus_sq), dfp = ev(rep.norms.df_plus_sq),
        DF = ev(rep.norms.DF_sq);
    Rat s = ev(rep.s), s1 = ev(rep.s1), sJ = ev(rep.sJ), defect = ev(rep.defect);
    Rat a = ev(rep.s2_t2), b = ev(rep.s2_t1), c = ev(rep.s2_t0);

    if (format == "json") {
        json out;
        out["space"] = space_name;
        json metric = json::array();
        for (const Rat& v : g.numeric_values()) metric.push_back(rat_json(v));
        out["metric"] = metric;
        out["acs"] = sign_strings(j);
        out["norms"] = {{"N0_sq", rat_json(n0)},
                        {"dF_minus_sq", rat_json(dfm)},
                        {"dF_plus_sq", rat_json(dfp)},
                        {"DF_sq", rat_json(DF)},
                        {"lee_form_sq", rat_json(Rat(0))}};
        json curv;
        curv["s"] = rat_json(s);
        curv["s1"] = rat_json(s1);
        curv["s2"] = {{"t2", rat_json(a)}, {"t1", rat_json(b)}, {"t0", rat_json(c)}};
        if (!t_str.empty()) {
            Rat t = parse_rational(t_str);
            curv["s2"]["at_t"] = rat_json(a * t * t + b * t + c);
            curv["s2"]["t"] = rat_json(t);
        }
        curv["sJ"] = rat_json(sJ);
        out["curvatures"] = curv;
        out["gh_class"] = {{"members", [&] {
                                std::vector<std::string> m;
                                if (rep.gh_class.w1) m.push_back("W1");
                                if (rep.gh_class.w2) m.push_back("W2");
                                if (rep.gh_class.w3) m.push_back("W3");
                                return m;
                            }()},
                           {"label", rep.gh_class.label()}};
        out["defect"] = rat_json(defect);
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << "space:   " << space_name << "\n";
    std::cout << "metric:  (";
    auto vals = g.numeric_values();
    for (std::size_t i = 0; i < vals.size(); ++i)
        std::cout << (i ? ", " : "") << rat_text(vals[i]);
    std::cout << ")\n";
    std::cout << "acs:     (" << j.str() << ")\n";
    std::cout << "norms:\n";
    std::cout << "  |N0|^2    = " << rat_text(n0) << "\n";
    std::cout << "  |(dF)-|^2 = " << rat_text(dfm) << "\n";
    std::cout << "  |(dF)+|^2 = " << rat_text(dfp) << "\n";
    std::cout << "  |DF|^2    = " << rat_text(DF) << "\n";
    std::cout << "  |lee|^2   = 0\n";
    std::cout << "curvatures:\n";
    std::cout << "  s     = " << rat_text(s) << " (" << decimal_string(s, g_precision) << ")\n";
    std::cout << "  s1    = " << rat_text(s1) << " (" << decimal_string(s1, g_precision) << ")\n";
    std::cout << "  s2(t) = " << rat_text(a) << "*t^2 + " << rat_text(b) << "*t + " << rat_text(c)
              << "\n";
    if (!t_str.empty()) {
        Rat t = parse_rational(t_str);
        std::cout << "  s2(" << rat_text(t) << ") = " << rat_text(a * t * t + b * t + c) << "\n";
    }
    std::cout << "  sJ    = " << rat_text(sJ) << "\n";
    std::cout << "defect 2*s1-s = " << rat_text(defect) << " ("
              << decimal_string(defect, g_precision) << ")\n";
    std::cout << "gh-class: " << rep.gh_class.label();
    if (rep.gh_class.long_name() != rep.gh_class.label())
        std::cout << " (" << rep.gh_class.long_name() << ")";
    std::cout << "\n";
    return 0;
}

json branch_json(const ClosedBranch& b, const std::vector<std::string>& params) {
    json j;
    j["pretty"] = b.pretty;
    j["polynomial_part"] = (b.p * (Rat(1) / b.den)).str(params);
    if (b.c != 0) {
        j["radical"] = {{"coefficient", rat_json(b.c / b.den)},
                        {"d", static_cast<std::int64_t>(b.d)},
                        {"square_factor", b.r.str(params)},
                        {"under_sqrt", b.q.str(params)}};
    }
    j["sign"] = b.sgn;
    j["double_root"] = b.double_root;
    if (b.double_root) j["defect_sign_nearby"] = b.defect_sign_nearby;
    j["excluded"] = b.excluded;
    json dom = json::array();
    for (const DomainConstraint& d : b.domain) {
        json c;
        c["positive"] = d.lhs.str(params);
        if (!d.pretty.empty()) c["condition"] = d.pretty;
        dom.push_back(c);
    }
    j["domain"] = dom;
    return j;
}

json roots_json(const KlscSolution& sol, const std::string& var) {
    json arr = json::array();
    for (const CertifiedRoot& r : sol.roots) {
        json j;
        j["var"] = var;
        j["interval"] = {{"lo", rat_json(r.interval.lo)}, {"hi", rat_json(r.interval.hi)}};
        j["value"] = rat_json(r.interval.mid);
        j["multiplicity"] = r.interval.multiplicity;
        j["exact_rational"] = r.interval.exact;
        j["residual"] = decimal_string(r.interval.residual, 3);
        if (r.exact) j["exact_surd"] = surd_json(*r.exact);
        if (r.exact_square) {
            j["exact_surd_of_square"] = surd_json(*r.exact_square);
        }
        arr.push_back(j);
    }
    return arr;
}

int cmd_solve(const std::string& space_name, const std::string& acs_str,
              const std::string& family_str, const std::string& var, const std::string& tol_str,
              const std::string& format) {
    auto space = builtin_space(space_name);
    auto j = make_acs(space, parse_signs(acs_str));
    ParsedFamily fam = parse_family(family_str);
    auto g = make_metric(space, fam.params, fam.values);
    Rat tol = parse_rational(tol_str);
    KlscSolution sol = solve_klsc(g, j, var, tol);

    if (format == "json") {
        json out;
        out["space"] = space_name;
        out["acs"] = sign_strings(j);
        out["metric"] = split_commas(family_str);
        out["var"] = var;
        out["numerator"] = sol.numerator.str(sol.params);
        out["homogeneous"] = sol.homogeneous;
        json solutions;
        solutions["kind"] = sol.kind == SolutionKind::NoSolution          ? "no-solution"
                            : sol.kind == SolutionKind::ClosedFormBranches ? "closed-form-branches"
                                                                           : "isolated-roots";
        if (sol.kind == SolutionKind::NoSolution) solutions["certificate"] = sol.certificate;
        json branches = json::array();
        for (const ClosedBranch& b : sol.branches) branches.push_back(branch_json(b, sol.params));
        solutions["branches"] = branches;
        solutions["roots"] = roots_json(sol, var);
        solutions["solved_in_square"] = sol.solved_in_square;
        out["solutions"] = solutions;
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << "space:     " << space_name << "\n";
    std::cout << "acs:       (" << j.str() << ")\n";
    std::cout << "family:    (" << family_str << ")\n";
    std::cout << "defect numerator: " << sol.numerator.str(sol.params) << "\n";
    if (sol.homogeneous)
        std::cout << "note: numerator is homogeneous; solutions scale freely (fix one parameter)\n";
    switch (sol.kind) {
        case SolutionKind::NoSolution:
            std::cout << "no solution: " << sol.certificate << "\n";
            break;
        case SolutionKind::ClosedFormBranches:
            for (const ClosedBranch& b : sol.branches) {
                std::cout << (b.excluded ? "excluded branch: " : "branch: ") << b.pretty;
                if (b.double_root)
                    std::cout << "  [double root; defect "
                              << (b.defect_sign_nearby > 0 ? ">= 0" : "<= 0") << " nearby]";
                for (const DomainConstraint& d : b.domain) {
                    std::cout << "  valid iff " << d.lhs.str(sol.params) << " > 0";
                    if (!d.pretty.empty()) std::cout << "  i.e. " << d.pretty;
                }
                std::cout << "\n";
            }
            break;
        case SolutionKind::IsolatedRoots:
            for (const CertifiedRoot& r : sol.roots) {
                std::cout << var << " = " << decimal_string(r.interval.mid, g_precision)
                          << "  in [" << decimal_string(r.interval.lo, g_precision) << ", "
                          << decimal_string(r.interval.hi, g_precision) << "]"
                          << "  multiplicity " << r.interval.multiplicity;
                if (r.exact) std::cout << "  = " << r.exact->str();
                if (r.exact_square)
                    std::cout << "  = sqrt(" << r.exact_square->str() << ")";
                std::cout << "\n";
            }
            break;
    }
    return 0;
}

int cmd_sweep(const std::string& space_name, const std::string& acs_str,
              const std::string& family_str, const std::string& var, const std::string& range_str,
              int steps, const std::string& format) {
    auto space = builtin_space(space_name);
    auto j = make_acs(space, parse_signs(acs_str));
    ParsedFamily fam = parse_family(family_str);
    if (fam.params.size() != 1 || fam.params[0] != var)
        throw DomainError("sweep requires the family to depend on the sweep variable only");
    auto g = make_metric(space, fam.params, fam.values);

    auto ends = split_commas(range_str);
    if (ends.size() != 2) throw DomainError("--range expects lo,hi");
    Rat lo = parse_rational(ends[0]), hi = parse_rational(ends[1]);
    if (steps < 2) throw DomainError("--steps must be >= 2");
    if (lo >= hi || lo <= 0) throw DomainError("empty or non-positive range");

    CurvatureReport rep = curvature_report(g, j);
    json rows = json::array();
    if (format == "csv") std::cout << "var,s,s1,s2_at_0,sJ,defect,gh_class\n";
    for (int i = 0; i < steps; ++i) {
        Rat t = lo + (hi - lo) * Rat(i) / Rat(steps - 1);
        std::vector<Rat> pt{t};
        auto ev = [&](const Frac& f) { return frac_eval(f, g, pt); };
        Rat s = ev(rep.s), s1 = ev(rep.s1), s20 = ev(rep.s2_t0), sJ = ev(rep.sJ),
            defect = ev(rep.defect);
        TensorNorms at;
        at.n0_sq.num = Poly::constant(0, ev(rep.norms.n0_sq));
        at.df_minus_sq.num = Poly::constant(0, ev(rep.norms.df_minus_sq));
        at.df_plus_sq.num = Poly::constant(0, ev(rep.norms.df_plus_sq));
        at.DF_sq.num = Poly::constant(0, ev(rep.norms.DF_sq));
        std::string cls = gray_hervella(at).label();
        if (format == "csv") {
            std::cout << decimal_string(t, g_precision) << "," << decimal_string(s, g_precision)
                      << "," << decimal_string(s1, g_precision) << ","
                      << decimal_string(s20, g_precision) << "," << decimal_string(sJ, g_precision)
                      << "," << decimal_string(defect, g_precision) << "," << cls << "\n";
        } else {
            rows.push_back({{"var", rat_json(t)},
                            {"s", rat_json(s)},
                            {"s1", rat_json(s1)},
                            {"s2_at_0", rat_json(s20)},
                            {"sJ", rat_json(sJ)},
                            {"defect", rat_json(defect)},
                            {"gh_class", cls}});
        }
    }
    if (format == "json") {
        json out;
        out["space"] = space_name;
        out["acs"] = sign_strings(j);
        out["metric"] = split_commas(family_str);
        out["var"] = var;
        out["rows"] = rows;
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int cmd_reproduce(const std::string& target, const std::string& format) {
    ReproductionReport rep = run_target(target);
    bool pass = rep.overall();
    if (format == "json") {
        json checks = json::array();
        for (const Check& c : rep.checks)
            checks.push_back({{"name", c.name},
                              {"expected", c.expected},
                              {"computed", c.computed},
                              {"status", c.pass ? "pass" : "fail"}});
        json out;
        out["target"] = rep.target;
        out["overall"] = pass ? "pass" : "fail";
        out["checks"] = checks;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const Check& c : rep.checks) {
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "\n";
            if (!c.pass) {
                std::cout << "      expected: " << c.expected << "\n";
                std::cout << "      computed: " << c.computed << "\n";
            }
        }
        std::cout << "overall: " << (pass ? "pass" : "fail") << " (" << rep.checks.size()
                  << " checks)\n";
    }
    return pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariant almost Hermitian scalar curvatures on generalized flag manifolds"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--precision", g_precision, "significant digits for decimal output")
        ->capture_default_str();

    std::string space, metric, acs, t_str, family, var, range, tol = "1e-12";
    std::string target;
    std::string fmt_sp = "text", fmt_rp = "text", fmt_sv = "text", fmt_sw = "csv",
                fmt_rr = "text";
    int steps = 0;

    auto* sp = app.add_subcommand("spaces", "list the built-in flag manifolds");
    sp->add_option("--format", fmt_sp)->check(CLI::IsMember({"text", "json"}));

    auto* rp = app.add_subcommand("report", "norms, curvatures and Gray-Hervella class");
    rp->add_option("space", space)->required();
    rp->add_option("--metric", metric, "comma-separated positive rationals")->required();
    rp->add_option("--acs", acs, "comma-separated +/- signs")->required();
    rp->add_option("--t", t_str, "evaluate s2 at this t");
    rp->add_option("--format", fmt_rp)->check(CLI::IsMember({"text", "json"}));

    auto* sv = app.add_subcommand("solve", "solve 2*s1 - s = 0 on a metric family");
    sv->add_option("space", space)->required();
    sv->add_option("--acs", acs)->required();
    sv->add_option("--family", family, "comma-separated polynomials, e.g. x^2,x^2,1,x^2,1,1")
        ->required();
    sv->add_option("--var", var)->required();
    sv->add_option("--tol", tol, "isolation interval width")->capture_default_str();
    sv->add_option("--format", fmt_sv)->check(CLI::IsMember({"text", "json"}));

    auto* sw = app.add_subcommand("sweep", "evaluate curvatures over a parameter grid");
    sw->add_option("space", space)->required();
    sw->add_option("--acs", acs)->required();
    sw->add_option("--family", family)->required();
    sw->add_option("--var", var)->required();
    sw->add_option("--range", range, "lo,hi")->required();
    sw->add_option("--steps", steps)->required();
    sw->add_option("--format", fmt_sw)->check(CLI::IsMember({"csv", "json"}));

    auto* rr = app.add_subcommand("reproduce", "run a paper-reproduction suite");
    rr->add_option("--target", target)
        ->required()
        ->check(CLI::IsMember({"su3", "cp3", "g2-u2", "su4-table", "g2-table", "identities"}));
    rr->add_option("--format", fmt_rr)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sp->parsed()) return cmd_spaces(fmt_sp);
        if (rp->parsed()) return cmd_report(space, metric, acs, t_str, fmt_rp);
        if (sv->parsed()) return cmd_solve(space, acs, family, var, tol, fmt_sv);
        if (sw->parsed()) return cmd_sweep(space, acs, family, var, range, steps, fmt_sw);
        if (rr->parsed()) return cmd_reproduce(target, fmt_rr);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
