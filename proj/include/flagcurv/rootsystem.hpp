#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "flagcurv/rational.hpp"

namespace flagcurv {

enum class Family { A, C, G2 };

std::string family_name(Family f);

struct RootSystemSpec {
    Family family;
    int rank;
};

/// A root, stored as an integer coefficient vector over the simple roots.
struct Root {
    std::vector<int> coeffs;

    Root operator-() const {
        Root r = *this;
        for (int& c : r.coeffs) c = -c;
        return r;
    }
    friend Root operator+(const Root& a, const Root& b) {
        Root r = a;
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
        return r;
    }
    friend Root operator-(const Root& a, const Root& b) { return a + (-b); }
    bool is_zero() const {
        for (int c : coeffs)
            if (c != 0) return false;
        return true;
    }
    bool is_positive() const {
        for (int c : coeffs)
            if (c < 0) return false;
        return !is_zero();
    }
    auto operator<=>(const Root&) const = default;
};

std::string root_str(const Root& r);

/// Root system of a compact simple algebra, with inner products normalized to
/// the Cartan-Killing form of the complexification.  Immutable once built.
class RootSystem {
  public:
    static RootSystem build(const RootSystemSpec& spec);

    const RootSystemSpec& spec() const { return spec_; }
    int rank() const { return spec_.rank; }
    const std::vector<Root>& simple_roots() const { return simple_; }
    const std::vector<Root>& positive_roots() const { return positive_; }
    const std::vector<Root>& all_roots() const { return all_; }
    const std::vector<std::vector<Rat>>& gram() const { return gram_; }

    bool is_root(const Root& r) const { return root_set_.count(r.coeffs) > 0; }
    void require_root(const Root& r) const;

    /// Killing-dual inner product of arbitrary rational-coefficient weights.
    Rat inner(const std::vector<Rat>& a, const std::vector<Rat>& b) const;
    Rat inner(const Root& a, const Root& b) const;

    Rat killing_norm_sq(const Root& alpha) const;

    /// Largest (p, q) with beta - p*alpha, ..., beta + q*alpha all roots.
    std::pair<int, int> root_string(const Root& alpha, const Root& beta) const;

    /// Squared Weyl-basis structure constant m^2_{alpha,beta} in the
    /// normalization <X_alpha, X_-alpha> = 1; zero when alpha+beta is not a
    /// root.  m^2 = q(p+1) <alpha,alpha> / 2.
    Rat structure_constant_sq(const Root& alpha, const Root& beta) const;

  private:
    RootSystemSpec spec_{};
    std::vector<Root> simple_, positive_, all_;
    std::vector<std::vector<Rat>> gram_;
    std::set<std::vector<int>> root_set_;
};

RootSystem build_root_system(const RootSystemSpec& spec);

}  // namespace flagcurv
