#pragma once

#include <gmpxx.h>

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "weyldisp/coxeter.hpp"
#include "weyldisp/gfq.hpp"

namespace weyldisp {

// Complete-flag building of type A_{dim-1} over GF(q). A chamber is the flag
// of prefix row spans of an invertible dim x dim matrix held in a canonical
// form (each row reduced against earlier pivots, leading coefficient 1), so
// chamber equality is syntactic.
class FlagBuilding {
  public:
    FlagBuilding(int projective_rank_n, int q);

    int n() const { return dim_ - 1; }
    int dim() const { return dim_; }
    const GFq& field() const { return F_; }
    const CoxeterSystem& weyl() const { return *W_; }

    struct Chamber {
        GFMatrix basis;
        bool operator==(const Chamber& o) const = default;
        bool operator<(const Chamber& o) const { return o.basis.a > basis.a ? false : basis.a < o.basis.a; }
    };

    Chamber canonicalize(GFMatrix basis) const;  // throws NotAFlag on singular input
    Chamber standard_chamber() const;
    mpz_class chamber_count() const;
    std::vector<Chamber> all_chambers(std::size_t max_count = 10000000) const;
    Chamber random_chamber(std::mt19937_64& rng) const;

    // Relative position via the jump matrix of intersection dimensions.
    Element weyl_distance(const Chamber& c, const Chamber& d) const;

  private:
    int dim_;
    GFq F_;
    std::shared_ptr<CoxeterSystem> W_;
};

// Automorphism of the flag building: a collineation (row vectors acting by
// x -> x g) or a correlation (composition with the Gram-form perp map).
struct BuildingAutomorphism {
    std::string description;
    GFMatrix g;          // collineation part
    bool correlation{false};
    GFMatrix gram;       // used when correlation
    DiagramAutomorphism sigma;

    FlagBuilding::Chamber apply(const FlagBuilding& b, const FlagBuilding::Chamber& c) const;
};

BuildingAutomorphism identity_automorphism(const FlagBuilding& b);
BuildingAutomorphism collineation(const FlagBuilding& b, const GFMatrix& g);
BuildingAutomorphism correlation(const FlagBuilding& b, const GFMatrix& gram);
// Polarity from the standard alternating form (n odd).
BuildingAutomorphism symplectic_polarity(const FlagBuilding& b);
// Multiplication by a primitive generator of GF(q^2)* on GF(q^2)^{dim/2}
// viewed over GF(q): fixed-point-free, fixes every line of the induced
// spread (n odd).
BuildingAutomorphism spread_collineation(const FlagBuilding& b);
// The projective-plane automorphism x_{alpha_1}(a) s1 s2; requires
// X^3 + aX^2 - 1 irreducible over GF(q).
BuildingAutomorphism sl3_example(const FlagBuilding& b, int a);

}  // namespace weyldisp
