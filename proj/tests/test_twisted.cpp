#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "weyldisp/errors.hpp"
#include "weyldisp/twisted.hpp"

using namespace weyldisp;

namespace {

std::vector<Element> whole_group(const CoxeterSystem& sys) {
    std::vector<Element> group{sys.identity()};
    std::set<std::vector<RootIndex>> seen{group[0].perm};
    for (std::size_t head = 0; head < group.size(); ++head)
        for (int s = 0; s < sys.rank(); ++s) {
            Element y = sys.multiply(group[head], sys.generator(s));
            if (seen.insert(y.perm).second) group.push_back(std::move(y));
        }
    return group;
}

DiagramAutomorphism flip_of(const CoxeterSystem& sys) {
    for (const auto& a : sys.diagram_automorphisms())
        if (a.order == 2) return a;
    throw std::runtime_error("no flip");
}

}  // namespace

TEST_CASE("trivial classes") {
    for (const char* name : {"A3", "B4", "I2(5)"}) {
        CoxeterSystem sys = CoxeterSystem::build(name);
        TwistedClass c = enumerate_class(sys, sys.identity(), sys.identity_automorphism());
        CHECK(c.size() == 1);
        CHECK(c.min_length() == 0);
    }
}

TEST_CASE("F4 duality: the identity class contains w0") {
    CoxeterSystem sys = CoxeterSystem::build("F4");
    auto flip = flip_of(sys);
    TwistedClass c = enumerate_class(sys, sys.identity(), flip);
    CHECK(c.contains(sys.longest_element()));
    CHECK(c.size() == 72);
    // it is the unique sigma-involution class: every sigma-involution lies in it
    std::size_t invol = 0;
    for (const Element& w : whole_group(sys)) {
        if (is_sigma_involution(sys, w, flip)) {
            ++invol;
            CHECK(c.contains(w));
        }
    }
    CHECK(invol == c.size());
}

TEST_CASE("D4 triality class of w0 is the 16 listed words") {
    CoxeterSystem sys = CoxeterSystem::build("D4");
    auto tri = sys.automorphism_from_nodes({2, 1, 3, 0});  // 1 -> 3 -> 4 -> 1
    TwistedClass c = enumerate_class(sys, sys.longest_element(), tri);
    CHECK(c.size() == 16);
    const char* words[] = {"1 2 1 3 2 4",       "3 2 1 4 2 1",       "1 2 1 3 2 1",
                           "1 2 3 2 4 2",       "1 4 2 1 3 2",       "2 1 4 2 1 3",
                           "2 3 2 4 2 1",       "2 3 2 4 2 3",       "1 2 1 4 2 1",
                           "1 2 3 2 4 2 1 3",   "1 3 4 2 1 3 2 4",   "1 3 2 1 4 2 1 3",
                           "2 1 3 2 4 2 1 3 2 4", "2 1 3 2 1 4 2 1 3 2",
                           "1 2 1 3 2 1 4 2 1 3 2 4", "1 2 1 3 2 4 2 1 3 2"};
    std::set<std::vector<RootIndex>> expect;
    for (const char* w : words) expect.insert(sys.parse_word(w).perm);
    CHECK(expect.size() == 16);
    for (const auto& e : c.elements()) CHECK(expect.count(sys.element_of(e.key).perm) == 1);
}

TEST_CASE("is_sigma_involution") {
    CoxeterSystem sys = CoxeterSystem::build("A3");
    CHECK(is_sigma_involution(sys, sys.identity(), sys.identity_automorphism()));
    CHECK(is_sigma_involution(sys, sys.longest_element(), sys.opposition()));
    CHECK_FALSE(is_sigma_involution(sys, sys.from_word({1, 2}), sys.identity_automorphism()));

    CoxeterSystem d4 = CoxeterSystem::build("D4");
    auto tri = d4.automorphism_from_nodes({2, 1, 3, 0});
    CHECK_FALSE(is_sigma_involution(d4, d4.identity(), tri));  // sigma^2 != 1
}

TEST_CASE("class lengths share one parity") {
    std::mt19937_64 rng(23);
    CoxeterSystem sys = CoxeterSystem::build("B4");
    for (const auto& sigma : sys.diagram_automorphisms()) {
        for (int i = 0; i < 8; ++i) {
            std::vector<int> word;
            for (int k = 0, l = static_cast<int>(rng() % 9); k < l; ++k)
                word.push_back(static_cast<int>(rng() % 4) + 1);
            TwistedClass c = enumerate_class(sys, sys.from_word(word), sigma);
            for (const auto& e : c.elements()) CHECK((e.len - c.min_length()) % 2 == 0);
        }
    }
}

TEST_CASE("order of w w^sigma ... is constant on classes") {
    CoxeterSystem sys = CoxeterSystem::build("D4");
    auto tri = sys.automorphism_from_nodes({2, 1, 3, 0});
    std::mt19937_64 rng(29);
    for (int i = 0; i < 6; ++i) {
        std::vector<int> word;
        for (int k = 0, l = static_cast<int>(rng() % 8); k < l; ++k)
            word.push_back(static_cast<int>(rng() % 4) + 1);
        Element w = sys.from_word(word);
        TwistedClass c = enumerate_class(sys, w, tri);
        auto norm_order = [&](const Element& x) {
            Element prod = x;
            Element xs = x;
            for (int t = 1; t < tri.order; ++t) {
                xs = sys.apply_sigma(tri, xs);
                prod = sys.multiply(prod, xs);
            }
            return sys.element_order(prod);
        };
        int expect = norm_order(w);
        int checked = 0;
        for (const auto& e : c.elements()) {
            if (checked++ > 25) break;
            CHECK(norm_order(sys.element_of(e.key)) == expect);
        }
    }
}

TEST_CASE("class closure under twisted conjugation") {
    CoxeterSystem sys = CoxeterSystem::build("B3");
    TwistedClass c = enumerate_class(sys, sys.multiply(sys.generator(0), sys.longest_element()),
                                     sys.identity_automorphism());
    for (const auto& e : c.elements()) {
        Element w = sys.element_of(e.key);
        for (int s = 0; s < sys.rank(); ++s) {
            Element y = sys.multiply(sys.multiply(sys.generator(s), w), sys.generator(s));
            CHECK(c.contains(y));
        }
    }
}

TEST_CASE("downward closure basics") {
    CoxeterSystem sys = CoxeterSystem::build("A3");
    auto id = sys.identity_automorphism();
    auto d = downward_closure(sys, sys.identity(), id);
    CHECK(d.J.empty());
    CHECK(d.conjugator == sys.identity());

    CHECK_THROWS_AS(downward_closure(sys, sys.from_word({1, 2}), id), NotTwistedInvolution);
}

TEST_CASE("downward closure in E7: s3 s5 s7 is already minimal") {
    CoxeterSystem sys = CoxeterSystem::build("E7");
    Element w = sys.from_word({3, 5, 7});
    auto d = downward_closure(sys, w, sys.identity_automorphism());
    CHECK(d.J == std::vector<int>{2, 4, 6});
    CHECK(d.minimum == w);
    CHECK(d.trace.empty());
    // no shorter element exists in the class
    TwistedClass c = enumerate_class(sys, w, sys.identity_automorphism());
    CHECK(c.min_length() == 3);
}

TEST_CASE("downward closure on a B4 displacement class") {
    CoxeterSystem sys = CoxeterSystem::build("B4");
    // w = s1 w_{>=4} w0, whose class has the minimum s1 s4
    Element w = sys.multiply(sys.multiply(sys.generator(0), sys.longest_element({3})),
                             sys.longest_element());
    auto d = downward_closure(sys, w, sys.identity_automorphism());
    CHECK(sys.length(d.minimum) == 2);
    TwistedClass c = enumerate_class(sys, w, sys.identity_automorphism());
    CHECK(c.min_length() == 2);
    CHECK(c.contains(sys.from_word({1, 4})));
    CHECK(c.contains(d.minimum));
    // trace length matches the length drop
    CHECK(2 * static_cast<int>(d.trace.size()) == sys.length(w) - 2);
}

TEST_CASE("minima of classes in E6/E7 are parabolic longest elements: spot checks") {
    struct Spot {
        const char* type;
        std::vector<int> word;
        bool flip;
    };
    const Spot spots[] = {{"E6", {}, true},
                          {"E6", {2, 3, 4, 2, 5, 4, 2, 3, 4, 5, 2, 4}, false},  // w_{D4} of E6
                          {"E7", {2, 5, 7}, false},
                          {"E7", {1, 3}, false}};
    for (const auto& sp : spots) {
        CoxeterSystem sys = CoxeterSystem::build(sp.type);
        DiagramAutomorphism sigma = sp.flip ? sys.opposition() : sys.identity_automorphism();
        Element w = sys.from_word(sp.word);
        if (!is_sigma_involution(sys, w, sigma)) continue;
        TwistedClass c = enumerate_class(sys, w, sigma);
        for (const Element& m : c.min_elements()) {
            std::vector<int> J;
            for (int s : sys.left_descents(m))
                if (sys.multiply(sys.generator(s), m) ==
                    sys.multiply(m, sys.generator(sigma.node_perm[s])))
                    J.push_back(s);
            CHECK(sys.longest_element(J) == m);
        }
    }
}

TEST_CASE("every minimal element is a parabolic longest element: exhaustive rank <= 5") {
    for (const char* name : {"A3", "B3", "A4", "B4", "D4", "F4", "I2(6)", "H3", "A5", "B5", "D5"}) {
        CoxeterSystem sys = CoxeterSystem::build(name);
        auto group = whole_group(sys);
        for (const auto& sigma : sys.diagram_automorphisms()) {
            if (sigma.order > 2) continue;
            std::set<std::vector<RootIndex>> covered;
            for (const Element& w : group) {
                if (!is_sigma_involution(sys, w, sigma)) continue;
                if (covered.count(w.perm)) continue;
                TwistedClass c = enumerate_class(sys, w, sigma);
                for (const Element& m : c.min_elements()) {
                    // m = w_J for J = the commuting left descents
                    std::vector<int> J;
                    for (int s : sys.left_descents(m))
                        if (sys.multiply(sys.generator(s), m) ==
                            sys.multiply(m, sys.generator(sigma.node_perm[s])))
                            J.push_back(s);
                    CHECK(sys.longest_element(J) == m);
                }
                // orbit statistics agree across all minima
                std::set<std::size_t> orbit_counts;
                for (const Element& m : c.min_elements()) {
                    std::vector<int> J;
                    for (int s : sys.left_descents(m))
                        if (sys.multiply(sys.generator(s), m) ==
                            sys.multiply(m, sys.generator(sigma.node_perm[s])))
                            J.push_back(s);
                    std::vector<int> rest;
                    for (int s = 0; s < sys.rank(); ++s)
                        if (std::find(J.begin(), J.end(), s) == J.end()) rest.push_back(s);
                    orbit_counts.insert(sys.orbits(sigma, rest).size());
                }
                CHECK(orbit_counts.size() == 1);
                for (const auto& e : c.elements()) covered.insert(sys.element_of(e.key).perm);
            }
        }
    }
}

TEST_CASE("cap certificates") {
    CoxeterSystem sys = CoxeterSystem::build("A3");
    auto id = sys.identity_automorphism();
    auto flip = sys.opposition();

    // Cl(1): bi-capped with J empty, full fix rank
    TwistedClass c1 = enumerate_class(sys, sys.identity(), id);
    auto cert1 = cap_certificate(c1);
    CHECK(cert1.bicapped());
    CHECK(cert1.lower_J->empty());
    CHECK(cert1.fix_rank == 3);
    CHECK(cert1.opp_rank == 0);

    // the 6-element flip class of s1 w0 is not upper capped
    TwistedClass c2 =
        enumerate_class(sys, sys.multiply(sys.generator(0), sys.longest_element()), flip);
    CHECK(c2.size() == 6);
    auto cert2 = cap_certificate(c2);
    CHECK(cert2.min_unique);
    CHECK_FALSE(cert2.max_unique);
    CHECK_FALSE(cert2.bicapped());

    CHECK_THROWS_AS(cap_certificate(enumerate_class(sys, sys.from_word({1, 2}), id)),
                    NotInvolutionClass);
}

TEST_CASE("E7 bicapped pair") {
    CoxeterSystem sys = CoxeterSystem::build("E7");
    TwistedClass c =
        enumerate_class(sys, sys.longest_element({1, 2, 3, 4}), sys.identity_automorphism());
    auto cert = cap_certificate(c);
    CHECK(cert.bicapped());
    CHECK(cert.fix_rank == 3);
    CHECK(cert.opp_rank == 4);
    CHECK(*cert.lower_J == std::vector<int>{1, 2, 3, 4});
    CHECK(*cert.upper_Jprime == std::vector<int>{1, 4, 6});
}

TEST_CASE("dual classes") {
    CoxeterSystem sys = CoxeterSystem::build("A3");
    // psi(Cl(1)) = {w0}
    TwistedClass c1 = enumerate_class(sys, sys.identity(), sys.identity_automorphism());
    TwistedClass d1 = dual_class(c1);
    CHECK(d1.size() == 1);
    CHECK(d1.contains(sys.longest_element()));

    // involutivity on random classes in D5
    CoxeterSystem d5 = CoxeterSystem::build("D5");
    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
        std::vector<int> word;
        for (int k = 0, l = static_cast<int>(rng() % 10); k < l; ++k)
            word.push_back(static_cast<int>(rng() % 5) + 1);
        for (const auto& sigma : d5.diagram_automorphisms()) {
            TwistedClass c = enumerate_class(d5, d5.from_word(word), sigma);
            TwistedClass dd = dual_class(dual_class(c));
            CHECK(dd.size() == c.size());
            CHECK(dd.contains(d5.element_of(c.elements().front().key)));
        }
    }
}

TEST_CASE("E7 duality: psi(Cl(s2 s5 s7)) is the conjugacy class of w_{D4}") {
    CoxeterSystem sys = CoxeterSystem::build("E7");
    TwistedClass c = enumerate_class(sys, sys.from_word({2, 5, 7}), sys.identity_automorphism());
    CHECK(c.size() == 315);
    TwistedClass d = dual_class(c);
    CHECK(d.size() == 315);
    CHECK(d.contains(sys.longest_element({1, 2, 3, 4})));
    CHECK(d.min_length() == 12);
}

TEST_CASE("ranksum for all bicapped classes in moderate rank") {
    for (const char* name : {"A4", "A5", "B4", "D5", "F4", "I2(8)", "E6"}) {
        CoxeterSystem sys = CoxeterSystem::build(name);
        for (const auto& row : classify_bicapped(sys))
            CHECK(row.fix_rank + row.opp_rank == sys.rank());
    }
}

TEST_CASE("class cap errors") {
    CoxeterSystem sys = CoxeterSystem::build("B4");
    CHECK_THROWS_AS(enumerate_class(sys, sys.multiply(sys.generator(0), sys.longest_element()),
                                    sys.identity_automorphism(), 3),
                    ClassTooLarge);
}
