#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weyldisp/diagrams.hpp"
#include "weyldisp/flags.hpp"
#include "weyldisp/twisted.hpp"

namespace weyldisp {

// Thin building over a Coxeter system: chambers are the group elements and
// delta(u, v) = u^{-1} v. An automorphism is u -> w u^sigma.
struct ThinAutomorphism {
    Element base;
    DiagramAutomorphism sigma;
};

struct SpectrumReport {
    std::string model;
    std::string automorphism;
    bool exhaustive{true};
    std::optional<std::uint64_t> seed;
    std::size_t chambers_visited{0};
    // displacement multiset, keyed by reduced word, sorted by (length, word)
    struct Entry {
        std::string word;
        int length;
        mpz_class count;
    };
    std::vector<Entry> spectrum;

    struct Verdicts {
        bool upward_closed{false};
        bool union_of_classes{false};
        bool uniclass{false};
        bool contains_involution{false};
        bool contains_sigma_involution{false};
        std::string fixed_diagram;       // symbol when computable
        std::string opposition_diagram;
        bool opp_equals_psi_fix{false};
    } verdicts;
};

SpectrumReport thin_spectrum(const CoxeterSystem& sys, const ThinAutomorphism& theta,
                             std::size_t max_elements = 10000000);

struct SpectrumOptions {
    bool exhaustive{true};
    std::size_t samples{100000};
    std::uint64_t seed{0};
    int threads{1};
    std::size_t exhaustive_cap{10000000};
};

SpectrumReport spectrum(const FlagBuilding& b, const BuildingAutomorphism& theta,
                        const SpectrumOptions& opts = {});

// Checks the panel-counting identities |Delta_{w s^sigma}| = |Delta_{s w}| and
// |Delta_{s w s^sigma}| = q_s |Delta_w| + (q_s - 1)|Delta_{s w}| over every
// w in W and s with l(s w s^sigma) = l(w) + 2, on exhaustive counts.
struct RecursionCheck {
    bool holds{true};
    std::string counterexample;
};
RecursionCheck counting_recursion_check(const FlagBuilding& b, const SpectrumReport& report,
                                        const DiagramAutomorphism& sigma);

// Internal: spectrum multiset as elements (used by the verdict logic & tests).
std::map<ElementKey, mpz_class> spectrum_multiset(const CoxeterSystem& sys,
                                                  const SpectrumReport& report);

}  // namespace weyldisp
