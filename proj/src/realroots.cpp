#include "flagcurv/realroots.hpp"

#include <algorithm>

#include "flagcurv/errors.hpp"

namespace flagcurv {

UPoly upoly_trim(UPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int upoly_degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

Rat upoly_eval(const UPoly& p, const Rat& x) {
    Rat acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UPoly upoly_derivative(const UPoly& p) {
    UPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<int>(i)));
    return upoly_trim(std::move(d));
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return upoly_trim(std::move(r));
}

UPoly upoly_rem(UPoly a, const UPoly& b) {
    a = upoly_trim(std::move(a));
    UPoly bb = upoly_trim(b);
    if (bb.empty()) throw std::domain_error("division by zero polynomial");
    while (a.size() >= bb.size() && !a.empty()) {
        Rat f = a.back() / bb.back();
        std::size_t shift = a.size() - bb.size();
        for (std::size_t i = 0; i < bb.size(); ++i) a[shift + i] -= f * bb[i];
        a = upoly_trim(std::move(a));
    }
    return a;
}

UPoly upoly_divexact(const UPoly& a, const UPoly& b) {
    UPoly r = upoly_trim(a);
    UPoly bb = upoly_trim(b);
    if (bb.empty()) throw std::domain_error("division by zero polynomial");
    UPoly q(r.size(), Rat(0));
    while (r.size() >= bb.size() && !r.empty()) {
        Rat f = r.back() / bb.back();
        std::size_t shift = r.size() - bb.size();
        q[shift] = f;
        for (std::size_t i = 0; i < bb.size(); ++i) r[shift + i] -= f * bb[i];
        r = upoly_trim(std::move(r));
    }
    if (!r.empty()) throw std::logic_error("inexact polynomial division");
    return upoly_trim(std::move(q));
}

UPoly upoly_gcd(UPoly a, UPoly b) {
    a = upoly_trim(std::move(a));
    b = upoly_trim(std::move(b));
    while (!b.empty()) {
        UPoly r = upoly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        Rat lead = a.back();
        for (Rat& c : a) c /= lead;
    }
    return a;
}

std::vector<std::pair<UPoly, int>> upoly_squarefree(const UPoly& p) {
    // Yun's algorithm over Q.
    std::vector<std::pair<UPoly, int>> out;
    UPoly f = upoly_trim(p);
    if (upoly_degree(f) < 1) return out;
    UPoly fp = upoly_derivative(f);
    UPoly a = upoly_gcd(f, fp);
    UPoly b = upoly_divexact(f, a);
    UPoly c = upoly_divexact(fp, a);
    int i = 1;
    while (upoly_degree(b) >= 1) {
        UPoly db = upoly_derivative(b);
        UPoly d(c.size(), Rat(0));
        d = c;
        for (std::size_t k = 0; k < db.size(); ++k) {
            if (k < d.size())
                d[k] -= db[k];
            else
                d.push_back(-db[k]);
        }
        d = upoly_trim(std::move(d));
        UPoly g = upoly_gcd(b, d);
        if (upoly_degree(g) >= 1) out.emplace_back(g, i);
        b = upoly_divexact(b, g);
        c = upoly_divexact(d, g);
        ++i;
    }
    return out;
}

std::vector<UPoly> sturm_chain(const UPoly& p) {
    std::vector<UPoly> chain;
    chain.push_back(upoly_trim(p));
    chain.push_back(upoly_derivative(chain[0]));
    while (!chain.back().empty() && upoly_degree(chain.back()) >= 1) {
        UPoly r = upoly_rem(chain[chain.size() - 2], chain.back());
        for (Rat& c : r) c = -c;
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

namespace {

int sign_variations(const std::vector<UPoly>& chain, const Rat& x) {
    int variations = 0, prev = 0;
    for (const UPoly& p : chain) {
        if (p.empty()) continue;
        int s = sign_of(upoly_eval(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

}  // namespace

int sturm_count(const std::vector<UPoly>& chain, const Rat& a, const Rat& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

namespace {

Rat cauchy_root_bound(const UPoly& p) {
    Rat lead = rat_abs(p.back());
    Rat m = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, rat_abs(p[i]) / lead);
    return m + 1;
}

// Splits (lo, hi] until it isolates a single root of the squarefree q, then
// appends it; split points that land on roots are recorded exactly.
void isolate_rec(const UPoly& q, const std::vector<UPoly>& chain, const Rat& lo, const Rat& hi,
                 std::vector<std::pair<Rat, Rat>>& intervals, std::vector<Rat>& exact) {
    int n = sturm_count(chain, lo, hi);
    if (n == 0) return;
    if (n == 1) {
        // One root in (lo, hi]; exact endpoint hit?
        if (upoly_eval(q, hi) == 0) {
            exact.push_back(hi);
            return;
        }
        intervals.emplace_back(lo, hi);
        return;
    }
    Rat mid = (lo + hi) / 2;
    if (upoly_eval(q, mid) == 0) {
        exact.push_back(mid);
        // Shave the exact root off both halves with a tiny exclusion.
        Rat eps = (hi - lo);
        while (true) {
            eps /= 4;
            Rat a = mid - eps, b = mid + eps;
            if (sturm_count(chain, a, b) == 1) {  // only `mid` inside
                isolate_rec(q, chain, lo, a, intervals, exact);
                isolate_rec(q, chain, b, hi, intervals, exact);
                return;
            }
        }
    }
    isolate_rec(q, chain, lo, mid, intervals, exact);
    isolate_rec(q, chain, mid, hi, intervals, exact);
}

}  // namespace

std::vector<IsolatedRoot> isolate_positive_roots(const UPoly& input, const Rat& tolerance) {
    UPoly p = upoly_trim(input);
    if (p.empty()) throw ZeroPolynomial("cannot isolate roots of the zero polynomial");
    if (tolerance <= 0) throw InvalidTolerance("tolerance must be positive");

    // Strip the root at zero; only positive roots are reported.
    std::size_t low = 0;
    while (low < p.size() && p[low] == 0) ++low;
    p.erase(p.begin(), p.begin() + low);

    std::vector<IsolatedRoot> out;
    for (const auto& [q, mult] : upoly_squarefree(p)) {
        std::vector<UPoly> chain = sturm_chain(q);
        Rat bound = cauchy_root_bound(q);
        std::vector<std::pair<Rat, Rat>> intervals;
        std::vector<Rat> exact;
        isolate_rec(q, chain, Rat(0), bound, intervals, exact);

        for (const Rat& r : exact) {
            if (r <= 0) continue;
            IsolatedRoot root;
            root.lo = root.hi = root.mid = r;
            root.multiplicity = mult;
            root.residual = rat_abs(upoly_eval(input, r));
            root.exact = true;
            out.push_back(std::move(root));
        }
        for (auto& [lo, hi] : intervals) {
            // Bisection refinement; q has a strict sign change on [lo, hi].
            int sign_hi = sign_of(upoly_eval(q, hi));
            bool hit_exact = false;
            while (hi - lo > tolerance) {
                Rat mid = (lo + hi) / 2;
                int sm = sign_of(upoly_eval(q, mid));
                if (sm == 0) {
                    lo = hi = mid;
                    hit_exact = true;
                    break;
                }
                if (sm == sign_hi)
                    hi = mid;
                else
                    lo = mid;
            }
            IsolatedRoot root;
            root.lo = lo;
            root.hi = hi;
            root.mid = hit_exact ? lo : Rat((lo + hi) / 2);
            root.multiplicity = mult;
            root.residual = rat_abs(upoly_eval(input, root.mid));
            root.exact = hit_exact;
            out.push_back(std::move(root));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.mid < b.mid; });
    return out;
}

int sign_on_positive_ray(const UPoly& input) {
    UPoly p = upoly_trim(input);
    if (p.empty()) return 0;
    std::size_t low = 0;
    while (low < p.size() && p[low] == 0) ++low;
    p.erase(p.begin(), p.begin() + low);

    bool all_nonneg = true, all_nonpos = true;
    for (const Rat& c : p) {
        if (c < 0) all_nonneg = false;
        if (c > 0) all_nonpos = false;
    }
    if (all_nonneg) return 1;
    if (all_nonpos) return -1;

    // Mixed signs: certify by a Sturm root count on (0, bound].
    UPoly square_free = upoly_divexact(p, upoly_gcd(p, upoly_derivative(p)));
    std::vector<UPoly> chain = sturm_chain(square_free);
    Rat bound = cauchy_root_bound(square_free);
    if (sturm_count(chain, Rat(0), bound) != 0) return 0;
    return sign_of(upoly_eval(p, Rat(1)));
}

}  // namespace flagcurv
