#include "flagcurv/rootsystem.hpp"

#include <algorithm>

#include "flagcurv/errors.hpp"

namespace flagcurv {

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::C: return "C";
        case Family::G2: return "G2";
    }
    return "?";
}

std::string root_str(const Root& r) {
    // Renders e.g. (1,3) as "a1+3a2" and its negative as "-(a1+3a2)".
    bool negative = !r.is_positive() && !r.is_zero();
    std::string body;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
        int c = negative ? -r.coeffs[i] : r.coeffs[i];
        if (c == 0) continue;
        if (!body.empty()) body += "+";
        if (c != 1) body += std::to_string(c);
        body += "a" + std::to_string(i + 1);
    }
    if (body.empty()) return "0";
    return negative ? "-(" + body + ")" : body;
}

namespace {

// Cartan matrix entries A[i][j] = 2<a_j, a_i>/<a_i, a_i>.
std::vector<std::vector<int>> cartan_matrix(const RootSystemSpec& spec) {
    int n = spec.rank;
    std::vector<std::vector<int>> A(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) A[i][i] = 2;
    switch (spec.family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) A[i][i + 1] = A[i + 1][i] = -1;
            break;
        case Family::C:
            // Simple roots e1-e2, ..., e_{n-1}-e_n, 2e_n (last one long).
            for (int i = 0; i + 1 < n; ++i) A[i][i + 1] = A[i + 1][i] = -1;
            if (n >= 2) {
                A[n - 2][n - 1] = -2;  // short row against the long simple root
                A[n - 1][n - 2] = -1;
            }
            break;
        case Family::G2:
            // a1 long, a2 short; the a2-string through a1 has length 4.
            A[0][1] = -1;
            A[1][0] = -3;
            break;
    }
    return A;
}

// Inverts a symmetric positive-definite rational matrix by Gauss-Jordan.
std::vector<std::vector<Rat>> invert(std::vector<std::vector<Rat>> m) {
    int n = static_cast<int>(m.size());
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) throw std::logic_error("singular Gram matrix");
        std::swap(m[col], m[pivot]);
        std::swap(inv[col], inv[pivot]);
        Rat d = m[col][col];
        for (int j = 0; j < n; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (int j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace

RootSystem RootSystem::build(const RootSystemSpec& spec) {
    if (spec.rank < 1) throw UnsupportedAlgebra("rank must be >= 1");
    switch (spec.family) {
        case Family::A:
            break;
        case Family::C:
            if (spec.rank < 2) throw UnsupportedAlgebra("C_n requires rank >= 2");
            break;
        case Family::G2:
            if (spec.rank != 2) throw UnsupportedAlgebra("G2 has rank 2");
            break;
        default:
            throw UnsupportedAlgebra("unsupported family");
    }

    RootSystem rs;
    rs.spec_ = spec;
    int n = spec.rank;
    auto cartan = cartan_matrix(spec);

    for (int i = 0; i < n; ++i) {
        Root r{std::vector<int>(n, 0)};
        r.coeffs[i] = 1;
        rs.simple_.push_back(r);
    }

    // Close the positive roots upward: beta + a_i is a root iff the a_i-string
    // through beta satisfies q = p - <beta, a_i^vee> >= 1.
    std::set<std::vector<int>> pos;
    for (const Root& r : rs.simple_) pos.insert(r.coeffs);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> snapshot(pos.begin(), pos.end());
        for (const auto& bc : snapshot) {
            for (int i = 0; i < n; ++i) {
                int pairing = 0;  // <beta, a_i^vee>
                for (int j = 0; j < n; ++j) pairing += bc[j] * cartan[i][j];
                int p = 0;
                std::vector<int> down = bc;
                while (true) {
                    down[i] -= 1;
                    bool zero = std::all_of(down.begin(), down.end(), [](int c) { return c == 0; });
                    if (zero || !pos.count(down)) break;
                    ++p;
                }
                if (p - pairing >= 1) {
                    std::vector<int> up = bc;
                    up[i] += 1;
                    if (pos.insert(up).second) grew = true;
                }
            }
        }
    }

    for (const auto& c : pos) rs.positive_.push_back(Root{c});
    std::sort(rs.positive_.begin(), rs.positive_.end());
    for (const Root& r : rs.positive_) {
        rs.all_.push_back(r);
        rs.all_.push_back(-r);
    }
    std::sort(rs.all_.begin(), rs.all_.end());
    for (const Root& r : rs.all_) rs.root_set_.insert(r.coeffs);

    // Killing-dual Gram matrix on simple roots: the Killing form restricted to
    // the Cartan subalgebra is B(H,H') = sum_alpha alpha(H) alpha(H'), so the
    // dual form is the inverse of S = sum_alpha c_alpha c_alpha^T.
    std::vector<std::vector<Rat>> S(n, std::vector<Rat>(n, Rat(0)));
    for (const Root& r : rs.all_) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) S[i][j] += Rat(r.coeffs[i]) * Rat(r.coeffs[j]);
    }
    rs.gram_ = invert(std::move(S));
    return rs;
}

void RootSystem::require_root(const Root& r) const {
    if (static_cast<int>(r.coeffs.size()) != rank() || !is_root(r))
        throw NotARoot("not a root of " + family_name(spec_.family) + std::to_string(rank()) +
                       ": " + root_str(r));
}

Rat RootSystem::inner(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
    Rat acc = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) acc += a[i] * gram_[i][j] * b[j];
    return acc;
}

Rat RootSystem::inner(const Root& a, const Root& b) const {
    Rat acc = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) acc += Rat(a.coeffs[i]) * gram_[i][j] * Rat(b.coeffs[j]);
    return acc;
}

Rat RootSystem::killing_norm_sq(const Root& alpha) const {
    require_root(alpha);
    return inner(alpha, alpha);
}

std::pair<int, int> RootSystem::root_string(const Root& alpha, const Root& beta) const {
    require_root(alpha);
    require_root(beta);
    if (beta == alpha || beta == -alpha)
        throw DegenerateString("root string through beta = +/- alpha is degenerate");
    int p = 0, q = 0;
    Root walk = beta - alpha;
    while (is_root(walk)) {
        ++p;
        walk = walk - alpha;
    }
    walk = beta + alpha;
    while (is_root(walk)) {
        ++q;
        walk = walk + alpha;
    }
    return {p, q};
}

Rat RootSystem::structure_constant_sq(const Root& alpha, const Root& beta) const {
    require_root(alpha);
    require_root(beta);
    Root sum = alpha + beta;
    if (!is_root(sum)) return 0;
    auto [p, q] = root_string(alpha, beta);
    return Rat(q * (p + 1)) * inner(alpha, alpha) / 2;
}

RootSystem build_root_system(const RootSystemSpec& spec) { return RootSystem::build(spec); }

}  // namespace flagcurv
