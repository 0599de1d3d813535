#pragma once

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "weyldisp/params.hpp"
#include "weyldisp/twisted.hpp"

namespace weyldisp {

// W(q) = sum_w q_w, the chamber count. Equal parameters use the degree
// product; unequal B_n the two-variable factorization; anything else small
// enough is summed directly (the two routes are cross-checked in tests).
mpz_class poincare(const CoxeterSystem& sys, const ParameterMap& params);

// Direct BFS summation over W (or a standard parabolic W_J), guarded.
mpz_class poincare_summation(const CoxeterSystem& sys, const ParameterMap& params,
                             const std::vector<int>& J, std::size_t max_elements = 20000000);
mpz_class poincare_summation(const CoxeterSystem& sys, const ParameterMap& params,
                             std::size_t max_elements = 20000000);

// C(q^{1/2}) = sum over the class of sqrt(q_w). class_sum(c, 1) = |c|.
RadicalNumber class_sum(const TwistedClass& c, const ParameterMap& params);

struct CountStratum {
    int length;
    int deg2;
    std::size_t elements;
    RadicalNumber q_half;
    RadicalNumber count;  // |Delta_w| for each element of the stratum
};

struct CountReport {
    std::string class_description;
    bool integral{true};
    std::string witness;  // set when a division failed or a count is not an integer
    mpz_class total_chambers;   // W(q)
    RadicalNumber class_sum_value;
    std::vector<CountStratum> strata;
    // per-element rows (reduced word, length, q_w^{1/2}, count); computed on
    // demand because large classes only need the stratum table
    struct Row {
        std::string word;
        int length;
        std::string q_half;
        std::string count;
    };
};

// Counts by Theorem-style division |Delta_w| = W(q) q_w^{1/2} / C(q^{1/2}).
CountReport counts_uniclass(const TwistedClass& c, const ParameterMap& params);

// Per-element rows for a report (exercises reduced-word serialization).
std::vector<CountReport::Row> count_rows(const TwistedClass& c, const ParameterMap& params,
                                         const CountReport& report);

struct SubstructureCounts {
    CountReport report;
    RadicalNumber derived_class_sum;  // W(q) q_{w_J}^{1/2} / (W_J(q) W'(q'))
};

// Counts via the fixed Weyl substructure: |Delta_w| = W_J(q) W'(q')
// q_w^{1/2} q_{w_J}^{-1/2}; the derived class sum must reproduce
// class_sum(c, params) exactly, which is asserted.
SubstructureCounts counts_substructure(const TwistedClass& c, const ParameterMap& params,
                                       const CoxeterSystem& sub_system,
                                       const ParameterMap& sub_params);

// A row of the finite Weyl substructure catalogue applicable to one system.
struct WeylSubstructureRow {
    std::string relative_type;
    std::vector<long> relative_params;
    std::string remark;
};

// Catalogue lookup for (system, params); data only.
std::vector<WeylSubstructureRow> finite_ws_rows(const CoxeterSystem& sys,
                                                const ParameterMap& params);

}  // namespace weyldisp
