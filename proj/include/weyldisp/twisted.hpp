#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weyldisp/coxeter.hpp"

namespace weyldisp {

// One enumerated class element. deg2 counts the letters from the second
// generator conjugacy class in any reduced word (0 when there is only one
// class); together with len this determines q_w for every admissible
// parameter map, so the full permutations need not be retained.
struct ClassElement {
    ElementKey key;
    std::uint16_t len;
    std::uint16_t deg2;
};

class TwistedClass {
  public:
    const CoxeterSystem& system() const { return *sys_; }
    const DiagramAutomorphism& sigma() const { return sigma_; }
    const std::vector<ClassElement>& elements() const { return elements_; }

    std::size_t size() const { return elements_.size(); }
    int min_length() const { return elements_.front().len; }
    int max_length() const { return elements_.back().len; }
    bool all_involutions() const { return involutions_; }

    std::vector<Element> min_elements() const;
    std::vector<Element> max_elements() const;
    bool contains(const Element& w) const;

    // (length, deg2) -> multiplicity, sorted.
    std::vector<std::tuple<int, int, std::size_t>> strata() const;

  private:
    friend TwistedClass enumerate_class(const CoxeterSystem&, const Element&,
                                        const DiagramAutomorphism&, std::size_t);
    const CoxeterSystem* sys_{nullptr};
    DiagramAutomorphism sigma_;
    std::vector<ClassElement> elements_;  // sorted by (len, key)
    bool involutions_{false};
};

// Breadth-first closure of w under x -> s x s^sigma.
TwistedClass enumerate_class(const CoxeterSystem& sys, const Element& w,
                             const DiagramAutomorphism& sigma,
                             std::size_t max_elements = 100000000);

bool is_sigma_involution(const CoxeterSystem& sys, const Element& w,
                         const DiagramAutomorphism& sigma);

// Minimal-length reduction of a twisted involution, following the descent
// loop: K = {s in D_L(w) : s w = w s^sigma}; stop when w = w_K, otherwise
// conjugate by the smallest t in D_L(w_K w), which drops the length by 2.
struct DownwardClosure {
    std::vector<int> J;      // 0-based; the minimum reached is w_J
    Element conjugator;      // v with v^-1 w v^sigma = w_J, l drop 2 l(v)
    std::vector<int> trace;  // generators applied, in order (0-based)
    Element minimum;
};
DownwardClosure downward_closure(const CoxeterSystem& sys, const Element& w,
                                 const DiagramAutomorphism& sigma);

struct CapCertificate {
    bool min_unique{false};
    bool max_unique{false};
    std::optional<std::vector<int>> lower_J;       // present iff min_unique
    std::optional<std::vector<int>> upper_Jprime;  // present iff max_unique
    int fix_rank{0};
    int opp_rank{0};
    bool bicapped() const { return min_unique && max_unique; }
};
CapCertificate cap_certificate(const TwistedClass& c);

// psi: the class of x w0 under sigma sigma0; verifies {v w0 : v in c} equals
// the result and that psi is involutive on the sigma-level data.
TwistedClass dual_class(const TwistedClass& c);

struct BicappedClassRow {
    std::vector<int> sigma_nodes;  // 0-based node permutation
    std::vector<int> lower_J;      // 0-based
    std::vector<int> upper_Jprime;
    std::size_t size{0};
    int min_length{0};
    int max_length{0};
    int fix_rank{0};
    int opp_rank{0};
    std::string symbol;
    std::string dual_symbol;
    std::string relative_type;
    std::string dual_relative_type;
};

// All bi-capped twisted involution classes of the system, every sigma with
// sigma^2 = 1, deduplicated by symbol (graph automorphisms of D4 relabel
// classes without changing their diagram symbol). Sorted for stable output.
std::vector<BicappedClassRow> classify_bicapped(const CoxeterSystem& sys,
                                                std::size_t max_elements = 100000000);

}  // namespace weyldisp
