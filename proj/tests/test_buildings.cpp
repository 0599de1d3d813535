#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "weyldisp/counting.hpp"
#include "weyldisp/errors.hpp"
#include "weyldisp/spectrum.hpp"

using namespace weyldisp;

TEST_CASE("field tables") {
    for (int q : {2, 3, 4, 5}) {
        GFq F(q);
        for (int a = 0; a < q; ++a) {
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a) CHECK(F.mul(a, F.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                for (int c = 0; c < q; ++c)
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            }
        }
    }
    CHECK_THROWS_AS(GFq(6), InvalidType);
}

TEST_CASE("chamber counts equal the Poincare value") {
    for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 4}}) {
        FlagBuilding b(n, q);
        CoxeterSystem sys = CoxeterSystem::build(TypeSpec{Family::A, n});
        CHECK(b.chamber_count() == poincare(sys, ParameterMap::uniform(sys, q)));
        CHECK(b.all_chambers().size() == b.chamber_count().get_ui());
        auto cs = b.all_chambers();
        std::set<std::array<std::uint8_t, 128>> keys;
        for (const auto& c : cs) {
            keys.insert(c.basis.a);
            CHECK(b.canonicalize(c.basis) == c);
        }
        CHECK(keys.size() == cs.size());
    }
    CHECK(FlagBuilding(3, 2).chamber_count() == 315);
}

TEST_CASE("weyl distance basics") {
    FlagBuilding b(3, 2);
    const CoxeterSystem& W = b.weyl();
    auto C = b.standard_chamber();
    CHECK(b.weyl_distance(C, C) == W.identity());

    // panel adjacency: flags differing only in the i-th subspace map to s_i
    GFMatrix m = GFMatrix::eye(4);
    std::swap(m.a[0 * 4 + 0], m.a[0 * 4 + 1]);
    std::swap(m.a[1 * 4 + 0], m.a[1 * 4 + 1]);  // rows (e2, e1, e3, e4): V1 differs
    CHECK(b.weyl_distance(C, b.canonicalize(m)) == W.generator(0));

    GFMatrix m2 = GFMatrix::eye(4);
    std::swap(m2.a[1 * 4 + 1], m2.a[1 * 4 + 2]);
    std::swap(m2.a[2 * 4 + 1], m2.a[2 * 4 + 2]);  // V2 differs
    CHECK(b.weyl_distance(C, b.canonicalize(m2)) == W.generator(1));

    // reversed basis flag is opposite
    GFMatrix r = GFMatrix::zero(4, 4);
    for (int i = 0; i < 4; ++i) r.at(i, 3 - i) = 1;
    CHECK(b.weyl_distance(C, b.canonicalize(r)) == W.longest_element());

    CHECK_THROWS_AS(b.canonicalize(GFMatrix::zero(4, 4)), NotAFlag);
}

TEST_CASE("weyl distance properties on random chambers") {
    FlagBuilding b(3, 3);
    const CoxeterSystem& W = b.weyl();
    std::mt19937_64 rng(57);
    for (int i = 0; i < 200; ++i) {
        auto C = b.random_chamber(rng), D = b.random_chamber(rng);
        Element w = b.weyl_distance(C, D);
        CHECK(b.weyl_distance(D, C) == W.invert(w));
    }
    // building axiom on triples: delta(C,D) = v, delta(D,E) = w with lengths
    // adding implies delta(C,E) = vw
    int checked = 0;
    while (checked < 10000) {
        auto C = b.random_chamber(rng), D = b.random_chamber(rng), E = b.random_chamber(rng);
        Element wCD = b.weyl_distance(C, D), wDE = b.weyl_distance(D, E);
        Element comp = W.multiply(wCD, wDE);
        if (W.length(comp) != W.length(wCD) + W.length(wDE)) continue;
        ++checked;
        CHECK(b.weyl_distance(C, E) == comp);
    }
}

TEST_CASE("thin spectra match twisted classes") {
    std::mt19937_64 rng(61);
    for (const char* name : {"A3", "B3", "D4", "H3", "I2(5)", "I2(8)"}) {
        CoxeterSystem sys = CoxeterSystem::build(name);
        for (const auto& sigma : sys.diagram_automorphisms()) {
            for (int i = 0; i < 4; ++i) {
                std::vector<int> word;
                for (int k = 0, l = static_cast<int>(rng() % 10); k < l; ++k)
                    word.push_back(static_cast<int>(rng() % sys.rank()) + 1);
                ThinAutomorphism theta{sys.from_word(word), sigma};
                SpectrumReport rep = thin_spectrum(sys, theta);
                TwistedClass c = enumerate_class(sys, theta.base, sigma);
                mpz_class total = 0;
                for (const auto& e : rep.spectrum) {
                    CHECK(c.contains(sys.parse_word(e.word)));
                    total += e.count;
                }
                CHECK(total == group_order(sys.spec()));
                CHECK(rep.spectrum.size() == c.size());
            }
        }
    }
}

TEST_CASE("identity automorphism spectrum") {
    FlagBuilding b(2, 2);
    SpectrumReport rep = spectrum(b, identity_automorphism(b));
    REQUIRE(rep.spectrum.size() == 1);
    CHECK(rep.spectrum[0].word == "");
    CHECK(rep.spectrum[0].count == 21);
    CHECK(rep.verdicts.uniclass);
    CHECK(rep.verdicts.fixed_diagram == "Cl(1)");
}

TEST_CASE("sl3 example on A2(F2)") {
    FlagBuilding b(2, 2);
    CHECK_THROWS_AS(sl3_example(b, 0), ReduciblePolynomial);  // X^3 - 1 has root 1
    BuildingAutomorphism theta = sl3_example(b, 1);
    SpectrumReport rep = spectrum(b, theta);
    REQUIRE(rep.spectrum.size() == 3);
    CHECK(rep.spectrum[0].word == "1 2");
    CHECK(rep.spectrum[0].count == 7);
    CHECK(rep.spectrum[1].word == "2 1");
    CHECK(rep.spectrum[1].count == 7);
    CHECK(rep.spectrum[2].word == "1 2 1");
    CHECK(rep.spectrum[2].count == 7);
    CHECK_FALSE(rep.verdicts.union_of_classes);
    CHECK_FALSE(rep.verdicts.uniclass);
    CHECK(rep.verdicts.upward_closed);
    // the counting recursion holds even here
    CHECK(counting_recursion_check(b, rep, theta.sigma).holds);
}

TEST_CASE("symplectic polarity on A3(F2)") {
    FlagBuilding b(3, 2);
    BuildingAutomorphism theta = symplectic_polarity(b);
    // polarity squares to the identity chamberwise
    std::mt19937_64 rng(67);
    for (int i = 0; i < 30; ++i) {
        auto C = b.random_chamber(rng);
        CHECK(theta.apply(b, theta.apply(b, C)) == C);
    }
    SpectrumReport rep = spectrum(b, theta);
    mpz_class total = 0;
    for (const auto& e : rep.spectrum) total += e.count;
    CHECK(total == 315);
    CHECK(rep.verdicts.uniclass);
    CHECK(rep.verdicts.contains_involution);
    CHECK(rep.verdicts.contains_sigma_involution);
    CHECK(rep.verdicts.opp_equals_psi_fix);
    CHECK(rep.verdicts.fixed_diagram == "2A3;2^1");
    CHECK(rep.verdicts.opposition_diagram == "A3;1^2");
    // involutory automorphism: every displacement is a sigma-involution
    for (const auto& e : rep.spectrum)
        CHECK(is_sigma_involution(b.weyl(), b.weyl().parse_word(e.word), theta.sigma));
    // empirical counts match the class-sum formula: 45 / 90 / 180
    REQUIRE(rep.spectrum.size() == 3);
    CHECK(rep.spectrum[0].count == 45);
    CHECK(rep.spectrum[1].count == 90);
    CHECK(rep.spectrum[2].count == 180);
    CHECK(counting_recursion_check(b, rep, theta.sigma).holds);
}

TEST_CASE("spread collineation on A3(F2)") {
    FlagBuilding b(3, 2);
    BuildingAutomorphism theta = spread_collineation(b);
    // no fixed projective point: x g != x for all x (over F2)
    const GFq& F = b.field();
    for (int v = 1; v < 16; ++v) {
        std::uint8_t x[4] = {static_cast<std::uint8_t>(v & 1), static_cast<std::uint8_t>(v >> 1 & 1),
                             static_cast<std::uint8_t>(v >> 2 & 1), static_cast<std::uint8_t>(v >> 3 & 1)};
        std::uint8_t y[4] = {0, 0, 0, 0};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) y[j] = F.add(y[j], F.mul(x[i], theta.g.at(i, j)));
        bool equal = true;
        for (int j = 0; j < 4; ++j)
            if (y[j] != x[j]) equal = false;
        CHECK_FALSE(equal);
        // the spread line span{x, xg} is fixed setwise: x g^2 in span{x, xg}
        std::uint8_t z[4] = {0, 0, 0, 0};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) z[j] = F.add(z[j], F.mul(y[i], theta.g.at(i, j)));
        GFMatrix span = GFMatrix::zero(3, 4);
        for (int j = 0; j < 4; ++j) {
            span.at(0, j) = x[j];
            span.at(1, j) = y[j];
            span.at(2, j) = z[j];
        }
        CHECK(gf_rank(F, span) == 2);
    }
    SpectrumReport rep = spectrum(b, theta);
    CHECK(rep.verdicts.uniclass);
    CHECK(rep.verdicts.fixed_diagram == "A3;1^2");
    CHECK(rep.verdicts.opposition_diagram == "2A3;2^1");
    CHECK(rep.verdicts.opp_equals_psi_fix);
    // disp = Cl(s1 s3): minimum length 2
    CHECK(rep.spectrum[0].word == "1 3");
    CHECK(counting_recursion_check(b, rep, theta.sigma).holds);

    CHECK_THROWS_AS(spread_collineation(FlagBuilding(2, 2)), EvenDimension);
    CHECK_THROWS_AS(symplectic_polarity(FlagBuilding(2, 3)), EvenDimension);
}

TEST_CASE("exhaustive spectrum counts match counts_uniclass") {
    FlagBuilding b(3, 3);
    BuildingAutomorphism theta = symplectic_polarity(b);
    SpectrumReport rep = spectrum(b, theta);
    CHECK(rep.verdicts.uniclass);
    const CoxeterSystem& W = b.weyl();
    TwistedClass c = enumerate_class(W, W.parse_word(rep.spectrum[0].word), theta.sigma);
    CountReport counts = counts_uniclass(c, ParameterMap::uniform(W, 3));
    CHECK(counts.integral);
    for (const auto& e : rep.spectrum) {
        Element w = W.parse_word(e.word);
        bool matched = false;
        for (const auto& st : counts.strata)
            if (st.length == W.length(w)) {
                CHECK(st.count == RadicalNumber(e.count));
                matched = true;
            }
        CHECK(matched);
    }
}

TEST_CASE("sampled spectrum is reproducible and lands inside the class") {
    FlagBuilding b(3, 3);
    BuildingAutomorphism theta = spread_collineation(b);
    SpectrumOptions opts;
    opts.exhaustive = false;
    opts.samples = 500;
    opts.seed = 12345;
    SpectrumReport r1 = spectrum(b, theta, opts);
    SpectrumReport r2 = spectrum(b, theta, opts);
    REQUIRE(r1.spectrum.size() == r2.spectrum.size());
    for (std::size_t i = 0; i < r1.spectrum.size(); ++i) {
        CHECK(r1.spectrum[i].word == r2.spectrum[i].word);
        CHECK(r1.spectrum[i].count == r2.spectrum[i].count);
    }
    CHECK(r1.seed == opts.seed);
    SpectrumReport full = spectrum(b, theta);
    auto keys = spectrum_multiset(b.weyl(), full);
    for (const auto& e : r1.spectrum)
        CHECK(keys.count(b.weyl().key_of(b.weyl().parse_word(e.word))) == 1);
}

TEST_CASE("threaded spectrum equals single-threaded") {
    FlagBuilding b(3, 2);
    BuildingAutomorphism theta = symplectic_polarity(b);
    SpectrumOptions one, four;
    four.threads = 4;
    SpectrumReport a = spectrum(b, theta, one), c = spectrum(b, theta, four);
    REQUIRE(a.spectrum.size() == c.spectrum.size());
    for (std::size_t i = 0; i < a.spectrum.size(); ++i) {
        CHECK(a.spectrum[i].word == c.spectrum[i].word);
        CHECK(a.spectrum[i].count == c.spectrum[i].count);
    }
}
