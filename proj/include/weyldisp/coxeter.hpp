#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "weyldisp/quadratic.hpp"
#include "weyldisp/types.hpp"

namespace weyldisp {

using RootIndex = std::uint16_t;
constexpr RootIndex kNoRoot = 0xffff;

class CoxeterSystem;

// Group element as the permutation it induces on the enumerated roots.
// Root indices: 0..N-1 the positive roots (simple roots first), i+N = -root_i.
struct Element {
    std::vector<RootIndex> perm;

    bool operator==(const Element& o) const { return perm == o.perm; }
    bool operator!=(const Element& o) const { return perm != o.perm; }
};

// Images of the simple roots; determines the element. Packed for hashing.
struct ElementKey {
    std::array<RootIndex, 8> img;

    bool operator==(const ElementKey& o) const { return img == o.img; }
    bool operator<(const ElementKey& o) const { return img < o.img; }
};

struct ElementKeyHash {
    std::size_t operator()(const ElementKey& k) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (RootIndex r : k.img) {
            h ^= r + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

// Symmetry of the Coxeter graph, together with the induced permutation of the
// roots (built so that conjugating the generator permutations by root_perm
// realizes s -> s^sigma; see CoxeterSystem::diagram_automorphisms).
struct DiagramAutomorphism {
    std::vector<int> node_perm;        // 0-based images of the nodes
    int order{1};
    std::vector<RootIndex> root_perm;  // signed action on all 2N roots

    bool is_identity() const {
        for (std::size_t i = 0; i < node_perm.size(); ++i)
            if (node_perm[i] != static_cast<int>(i)) return false;
        return true;
    }
    bool operator==(const DiagramAutomorphism& o) const { return node_perm == o.node_perm; }
};

class CoxeterSystem {
  public:
    static CoxeterSystem build(const TypeSpec& spec);
    static CoxeterSystem build(const std::string& spec) { return build(parse_type(spec)); }

    const TypeSpec& spec() const { return spec_; }
    int rank() const { return n_; }
    int positive_count() const { return N_; }
    int root_count() const { return 2 * N_; }
    bool crystallographic() const { return spec_.crystallographic(); }

    // Coordinates of positive root r in the simple-root basis (empty for the
    // combinatorial dihedral model used by I2(m), m not in {3,4,6}).
    bool has_coordinates() const { return !root_coords_.empty(); }
    const std::vector<QuadInt>& root_coords(RootIndex r) const { return root_coords_[r]; }
    RootIndex root_index(const std::vector<QuadInt>& coords) const;  // positive roots only
    RootIndex negate(RootIndex r) const { return static_cast<RootIndex>((r + N_) % (2 * N_)); }
    int coxeter_m(int s, int t) const { return cox_m_[s][t]; }

    // -- group operations -------------------------------------------------
    Element identity() const;
    const Element& generator(int s) const { return gens_[s]; }
    Element multiply(const Element& a, const Element& b) const;        // a∘b
    Element invert(const Element& a) const;
    Element from_word(const std::vector<int>& word_1based) const;
    Element reflection(RootIndex positive_root) const;

    int length(const Element& w) const;
    std::vector<int> left_descents(const Element& w) const;
    std::vector<int> right_descents(const Element& w) const;
    // Canonical reduced word: repeated leftmost-smallest left-descent stripping.
    std::vector<int> reduced_word(const Element& w) const;
    int element_order(const Element& w) const;

    // Longest element of the standard parabolic W_J (J 0-based; empty = identity).
    Element longest_element(const std::vector<int>& J) const;
    Element longest_element() const;

    ElementKey key_of(const Element& w) const;
    Element element_of(const ElementKey& k) const;

    // -- diagram automorphisms --------------------------------------------
    std::vector<DiagramAutomorphism> diagram_automorphisms() const;
    DiagramAutomorphism identity_automorphism() const;
    DiagramAutomorphism opposition() const;  // sigma_0 : s -> w0 s w0
    DiagramAutomorphism automorphism_from_nodes(const std::vector<int>& node_perm) const;
    DiagramAutomorphism compose(const DiagramAutomorphism&, const DiagramAutomorphism&) const;
    Element apply_sigma(const DiagramAutomorphism& sigma, const Element& w) const;

    // Orbits of a sigma-stable subset under sigma, sorted by smallest node.
    std::vector<std::vector<int>> orbits(const DiagramAutomorphism& sigma,
                                         const std::vector<int>& subset) const;

    // Generator conjugacy classes (orbits under odd-bond adjacency), each
    // sorted; classes ordered by smallest member. At most two for our types.
    const std::vector<std::vector<int>>& generator_classes() const { return gen_classes_; }
    int generator_class_of(int s) const { return gen_class_of_[s]; }

    // Highest root, polar set, and the identity w0 s_phi = w_{S minus polar}.
    struct PolarCheck {
        RootIndex highest_root;
        std::vector<int> polar_set;  // 0-based
        bool identity_holds;
    };
    PolarCheck polar_check() const;

    // Serialization of elements as space-separated 1-based reduced words.
    std::string word_string(const Element& w) const;
    Element parse_word(const std::string& s) const;

  private:
    TypeSpec spec_;
    int n_{0};
    int N_{0};
    std::vector<std::vector<int>> cox_m_;
    std::vector<std::vector<QuadInt>> root_coords_;            // positive roots
    std::unordered_map<std::size_t, RootIndex> coord_index_;   // hashed coords -> index
    std::vector<Element> gens_;
    std::vector<std::vector<int>> gen_classes_;
    std::vector<int> gen_class_of_;

    void enumerate_roots(const std::vector<std::vector<QuadInt>>& pairing);
    void build_dihedral(int m);
    void finish_setup();
    static std::size_t coord_hash(const std::vector<QuadInt>& c);
    std::vector<RootIndex> sigma_root_perm(const std::vector<int>& node_perm) const;
};

}  // namespace weyldisp
