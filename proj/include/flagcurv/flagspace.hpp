#pragma once

#include <array>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "flagcurv/rootsystem.hpp"

namespace flagcurv {

struct IsotropySummand {
    int index = 0;                // 1-based, matching the m_i notation
    std::vector<Root> roots;      // positive complementary roots, sorted
    int dim = 0;                  // real dimension = 2 * roots.size()
};

/// One canonical zero-sum triple {a, b, c} with a+b+c = 0, roots sorted
/// lexicographically.  {a,b,c} and {-a,-b,-c} are distinct entries; consumers
/// apply the 6-fold ordering multiplicity themselves.
struct ZeroSumTriple {
    std::array<Root, 3> roots;
    Rat msq;                          // common m^2 of the three pairings
    std::array<int, 3> summands;      // summand index of |roots[i]| (0-based)
    bool principal_class = false;     // lex-smaller member of the {T, -T} pair
};

/// Generalized flag manifold G/K determined by a subset Theta of simple
/// roots: complementary roots, isotropy summands via t-root restriction, and
/// the zero-sum triples.  Immutable after construction.
class FlagSpace {
  public:
    static FlagSpace build(RootSystem rs, std::set<int> theta);

    const RootSystem& root_system() const { return rs_; }
    const std::set<int>& theta() const { return theta_; }
    const std::vector<Root>& complementary_positive() const { return complementary_positive_; }
    const std::vector<IsotropySummand>& summands() const { return summands_; }
    int num_summands() const { return static_cast<int>(summands_.size()); }
    int complex_dim() const { return static_cast<int>(complementary_positive_.size()); }
    const std::vector<ZeroSumTriple>& zero_sum_triples() const { return triples_; }

    bool is_complementary(const Root& r) const;
    /// Summand index (0-based) of the positive root |r|.
    int summand_of(const Root& r) const;

    const std::string& name() const { return name_; }
    /// Structural identity used for space-mismatch checks.
    std::string key() const;

    /// Cached [ijk] table, n^3 entries at (i*n + j)*n + k.
    const std::vector<Rat>& triple_symbol_table() const { return symbols_; }

  private:
    void reorder_summands(const std::vector<Root>& representatives);
    void build_triples();
    void build_symbol_table();

    RootSystem rs_;
    std::set<int> theta_;
    std::vector<Root> complementary_positive_;
    std::vector<IsotropySummand> summands_;
    std::vector<ZeroSumTriple> triples_;
    std::vector<Rat> symbols_;
    std::string name_;

    friend std::shared_ptr<const FlagSpace> builtin_space(const std::string&);
};

FlagSpace build_flag(RootSystem rs, std::set<int> theta);

/// The five spaces treated in detail, with their documented summand order:
/// su3-full, cp3, su4-full, g2-u2, g2-full.
std::shared_ptr<const FlagSpace> builtin_space(const std::string& name);

const std::vector<std::string>& builtin_space_names();

}  // namespace flagcurv
