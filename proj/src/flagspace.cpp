#include "flagcurv/flagspace.hpp"

#include <algorithm>
#include <map>

#include "flagcurv/errors.hpp"

namespace flagcurv {

namespace {

// Exact orthogonal projection of beta onto the complement of span(Theta),
// w.r.t. the Killing-dual form; equal projections identify a summand.
std::vector<Rat> t_root(const RootSystem& rs, const std::set<int>& theta, const Root& beta) {
    int n = rs.rank();
    std::vector<int> idx(theta.begin(), theta.end());
    int k = static_cast<int>(idx.size());
    std::vector<Rat> b(n);
    for (int i = 0; i < n; ++i) b[i] = beta.coeffs[i];
    if (k == 0) return b;

    // Solve G_theta c = <beta, a_theta> by Gaussian elimination.
    std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k + 1, Rat(0)));
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) m[r][c] = rs.inner(rs.simple_roots()[idx[r]], rs.simple_roots()[idx[c]]);
        m[r][k] = rs.inner(beta, rs.simple_roots()[idx[r]]);
    }
    for (int col = 0; col < k; ++col) {
        int pivot = col;
        while (m[pivot][col] == 0) ++pivot;
        std::swap(m[col], m[pivot]);
        for (int r = 0; r < k; ++r) {
            if (r == col) continue;
            Rat f = m[r][col] / m[col][col];
            for (int c = col; c <= k; ++c) m[r][c] -= f * m[col][c];
        }
    }
    for (int r = 0; r < k; ++r) b[idx[r]] -= m[r][k] / m[r][r];
    return b;
}

bool in_theta_span(const std::set<int>& theta, const Root& r) {
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
        if (r.coeffs[i] != 0 && theta.count(static_cast<int>(i)) == 0) return false;
    return true;
}

}  // namespace

FlagSpace FlagSpace::build(RootSystem rs, std::set<int> theta) {
    for (int i : theta) {
        if (i < 0 || i >= rs.rank()) throw Error("theta index out of range");
    }
    FlagSpace fs;
    fs.rs_ = std::move(rs);
    fs.theta_ = std::move(theta);

    for (const Root& r : fs.rs_.positive_roots())
        if (!in_theta_span(fs.theta_, r)) fs.complementary_positive_.push_back(r);
    if (fs.complementary_positive_.empty())
        throw EmptyTangentSpace("theta spans every root; tangent space is empty");

    std::map<std::vector<Rat>, std::vector<Root>> classes;
    for (const Root& r : fs.complementary_positive_)
        classes[t_root(fs.rs_, fs.theta_, r)].push_back(r);

    for (auto& [t, roots] : classes) {
        IsotropySummand s;
        std::sort(roots.begin(), roots.end());
        s.roots = roots;
        s.dim = 2 * static_cast<int>(roots.size());
        fs.summands_.push_back(std::move(s));
    }
    // Deterministic order: lexicographic by lowest root.
    std::sort(fs.summands_.begin(), fs.summands_.end(),
              [](const IsotropySummand& a, const IsotropySummand& b) {
                  return a.roots.front() < b.roots.front();
              });
    for (std::size_t i = 0; i < fs.summands_.size(); ++i)
        fs.summands_[i].index = static_cast<int>(i) + 1;

    fs.build_triples();
    fs.build_symbol_table();
    return fs;
}

void FlagSpace::build_symbol_table() {
    int n = num_summands();
    symbols_.assign(static_cast<std::size_t>(n) * n * n, Rat(0));
    static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const ZeroSumTriple& t : triples_) {
        for (const auto& p : perms) {
            std::size_t at = (static_cast<std::size_t>(t.summands[p[0]]) * n +
                              t.summands[p[1]]) * n + t.summands[p[2]];
            symbols_[at] += t.msq;
        }
    }
}

bool FlagSpace::is_complementary(const Root& r) const {
    if (!rs_.is_root(r)) return false;
    return !in_theta_span(theta_, r);
}

int FlagSpace::summand_of(const Root& r) const {
    Root p = r.is_positive() ? r : -r;
    for (const IsotropySummand& s : summands_)
        if (std::binary_search(s.roots.begin(), s.roots.end(), p)) return s.index - 1;
    throw NotARoot("root is not complementary: " + root_str(r));
}

void FlagSpace::build_triples() {
    std::set<std::array<Root, 3>> seen;
    std::vector<Root> comp;
    for (const Root& r : complementary_positive_) {
        comp.push_back(r);
        comp.push_back(-r);
    }
    std::set<std::vector<int>> comp_set;
    for (const Root& r : comp) comp_set.insert(r.coeffs);

    for (const Root& a : comp) {
        for (const Root& b : comp) {
            if (b == a || b == -a) continue;
            Root c = -(a + b);
            if (!comp_set.count(c.coeffs)) continue;
            std::array<Root, 3> key{a, b, c};
            std::sort(key.begin(), key.end());
            if (!seen.insert(key).second) continue;

            ZeroSumTriple t;
            t.roots = key;
            t.msq = rs_.structure_constant_sq(key[0], key[1]);
            Rat m2 = rs_.structure_constant_sq(key[1], key[2]);
            Rat m3 = rs_.structure_constant_sq(key[2], key[0]);
            if (t.msq != m2 || t.msq != m3)
                throw std::logic_error("structure constants violate triple invariance");
            for (int i = 0; i < 3; ++i) t.summands[i] = summand_of(key[i]);
            triples_.push_back(std::move(t));
        }
    }
    std::sort(triples_.begin(), triples_.end(),
              [](const ZeroSumTriple& x, const ZeroSumTriple& y) { return x.roots < y.roots; });
    for (ZeroSumTriple& t : triples_) {
        std::array<Root, 3> neg{-t.roots[0], -t.roots[1], -t.roots[2]};
        std::sort(neg.begin(), neg.end());
        t.principal_class = t.roots < neg;
    }
}

void FlagSpace::reorder_summands(const std::vector<Root>& representatives) {
    if (representatives.size() != summands_.size())
        throw std::logic_error("summand reorder arity mismatch");
    std::vector<IsotropySummand> ordered;
    for (const Root& rep : representatives) {
        int i = summand_of(rep);
        ordered.push_back(summands_[i]);
    }
    summands_ = std::move(ordered);
    for (std::size_t i = 0; i < summands_.size(); ++i)
        summands_[i].index = static_cast<int>(i) + 1;
    // Triple summand indices refer to positions; recompute.
    for (ZeroSumTriple& t : triples_)
        for (int i = 0; i < 3; ++i) t.summands[i] = summand_of(t.roots[i]);
    build_symbol_table();
}

std::string FlagSpace::key() const {
    std::string k = family_name(rs_.spec().family) + std::to_string(rs_.rank()) + ":";
    for (int i : theta_) k += std::to_string(i) + ",";
    if (!name_.empty()) k += "#" + name_;
    return k;
}

FlagSpace build_flag(RootSystem rs, std::set<int> theta) {
    return FlagSpace::build(std::move(rs), std::move(theta));
}

const std::vector<std::string>& builtin_space_names() {
    static const std::vector<std::string> names{"su3-full", "cp3", "su4-full", "g2-u2", "g2-full"};
    return names;
}

std::shared_ptr<const FlagSpace> builtin_space(const std::string& name) {
    auto make = [&](RootSystemSpec spec, std::set<int> theta,
                    std::vector<std::vector<int>> reps) {
        FlagSpace fs = FlagSpace::build(RootSystem::build(spec), std::move(theta));
        std::vector<Root> roots;
        for (auto& c : reps) roots.push_back(Root{std::move(c)});
        fs.reorder_summands(roots);
        fs.name_ = name;
        return std::make_shared<const FlagSpace>(std::move(fs));
    };

    if (name == "su3-full") {
        // Summands (u12, u23, u13) <-> (x, y, z).
        return make({Family::A, 2}, {}, {{1, 0}, {0, 1}, {1, 1}});
    }
    if (name == "cp3") {
        // Sp(2)/Sp(1)xU(1): theta is the long simple root 2e2; summands
        // ({e1-e2, e1+e2}, {2e1}) <-> (x, y).
        return make({Family::C, 2}, {1}, {{1, 0}, {2, 1}});
    }
    if (name == "su4-full") {
        // Summands (u12, u13, u14, u23, u24, u34).
        return make({Family::A, 3}, {},
                    {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {0, 1, 0}, {0, 1, 1}, {0, 0, 1}});
    }
    if (name == "g2-u2") {
        // U(2) from the short simple root a2; summands (dim 8, dim 2) <-> (x, y).
        return make({Family::G2, 2}, {1}, {{1, 0}, {2, 3}});
    }
    if (name == "g2-full") {
        // Summands (a1, a2, a1+a2, a1+2a2, a1+3a2, 2a1+3a2).
        return make({Family::G2, 2}, {},
                    {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}});
    }
    throw UnknownSpace("unknown space '" + name + "' (expected one of su3-full, cp3, su4-full, g2-u2, g2-full)");
}

}  // namespace flagcurv
