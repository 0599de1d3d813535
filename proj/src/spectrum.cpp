#include "weyldisp/spectrum.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "weyldisp/errors.hpp"

namespace weyldisp {

namespace {

// Generators appearing in a reduced word of w.
std::vector<int> support(const CoxeterSystem& sys, const Element& w) {
    std::vector<bool> in(sys.rank(), false);
    for (int s : sys.reduced_word(w)) in[s - 1] = true;
    std::vector<int> out;
    for (int s = 0; s < sys.rank(); ++s)
        if (in[s]) out.push_back(s);
    return out;
}

void fill_verdicts(const CoxeterSystem& sys, const DiagramAutomorphism& sigma,
                   const std::map<ElementKey, mpz_class>& multiset, bool exhaustive,
                   SpectrumReport& rep) {
    std::vector<Element> disp;
    for (const auto& [k, cnt] : multiset) disp.push_back(sys.element_of(k));

    auto in_disp = [&](const Element& w) { return multiset.count(sys.key_of(w)) != 0; };

    // upward closure under s(.)s^sigma when the length increases by 2
    bool up = true;
    for (const Element& w : disp) {
        int lw = sys.length(w);
        for (int s = 0; s < sys.rank() && up; ++s) {
            Element y = sys.multiply(sys.multiply(sys.generator(s), w),
                                     sys.generator(sigma.node_perm[s]));
            if (sys.length(y) == lw + 2 && !in_disp(y)) up = false;
        }
        if (!up) break;
    }
    rep.verdicts.upward_closed = up;

    // union of classes: closed under every twisted conjugation
    bool closed = true;
    for (const Element& w : disp) {
        for (int s = 0; s < sys.rank() && closed; ++s) {
            Element y = sys.multiply(sys.multiply(sys.generator(s), w),
                                     sys.generator(sigma.node_perm[s]));
            if (!in_disp(y)) closed = false;
        }
        if (!closed) break;
    }
    rep.verdicts.union_of_classes = closed;

    // uniclass: one class, i.e. closed and any two elements connected; test by
    // comparing against the enumerated class of the first element
    if (closed && !disp.empty()) {
        TwistedClass c = enumerate_class(sys, disp.front(), sigma);
        rep.verdicts.uniclass = c.size() == disp.size();
    } else {
        rep.verdicts.uniclass = false;
    }

    for (const Element& w : disp) {
        if (sys.multiply(w, w) == sys.identity()) rep.verdicts.contains_involution = true;
        if (is_sigma_involution(sys, w, sigma)) rep.verdicts.contains_sigma_involution = true;
    }

    if (!exhaustive) return;

    // fixed diagram: orbits K with some type-K simplex stabilised, i.e. some
    // displacement supported away from K; opposition diagram dually via w w0.
    DiagramAutomorphism s2 = sys.compose(sigma, sys.opposition());
    std::vector<int> all(sys.rank());
    for (int i = 0; i < sys.rank(); ++i) all[i] = i;
    std::vector<int> fixJ, oppJ;
    {
        std::vector<std::vector<int>> supp, suppw0;
        for (const Element& w : disp) {
            supp.push_back(support(sys, w));
            suppw0.push_back(support(sys, sys.multiply(w, sys.longest_element())));
        }
        for (const auto& K : sys.orbits(sigma, all)) {
            for (const auto& sp : supp) {
                bool disjoint = true;
                for (int s : K)
                    if (std::find(sp.begin(), sp.end(), s) != sp.end()) disjoint = false;
                if (disjoint) {
                    fixJ.insert(fixJ.end(), K.begin(), K.end());
                    break;
                }
            }
        }
        for (const auto& K : sys.orbits(s2, all)) {
            for (const auto& sp : suppw0) {
                bool disjoint = true;
                for (int s : K)
                    if (std::find(sp.begin(), sp.end(), s) != sp.end()) disjoint = false;
                if (disjoint) {
                    oppJ.insert(oppJ.end(), K.begin(), K.end());
                    break;
                }
            }
        }
    }
    std::sort(fixJ.begin(), fixJ.end());
    std::sort(oppJ.begin(), oppJ.end());
    AdmissibleDiagram fix{&sys, fixJ, sigma};
    AdmissibleDiagram opp{&sys, oppJ, s2};
    rep.verdicts.fixed_diagram = symbol_of(fix);
    rep.verdicts.opposition_diagram = symbol_of(opp);
    if (rep.verdicts.uniclass) {
        try {
            AdmissibleDiagram via = psi_diagram(fix);
            rep.verdicts.opp_equals_psi_fix =
                via.encircled == opp.encircled && via.sigma == opp.sigma;
        } catch (const NotBicapped&) {
            rep.verdicts.opp_equals_psi_fix = false;
        } catch (const NotInvolutionClass&) {
            rep.verdicts.opp_equals_psi_fix = false;
        }
    }
}

void finalize_report(const CoxeterSystem& sys, const DiagramAutomorphism& sigma,
                     const std::map<ElementKey, mpz_class>& multiset, bool exhaustive,
                     SpectrumReport& rep) {
    struct Item {
        int len;
        std::string word;
        mpz_class count;
    };
    std::vector<Item> items;
    for (const auto& [k, cnt] : multiset) {
        Element w = sys.element_of(k);
        items.push_back(Item{sys.length(w), sys.word_string(w), cnt});
    }
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        return a.len != b.len ? a.len < b.len : a.word < b.word;
    });
    for (auto& it : items) rep.spectrum.push_back({it.word, it.len, it.count});
    fill_verdicts(sys, sigma, multiset, exhaustive, rep);
}

}  // namespace

std::map<ElementKey, mpz_class> spectrum_multiset(const CoxeterSystem& sys,
                                                  const SpectrumReport& report) {
    std::map<ElementKey, mpz_class> out;
    for (const auto& e : report.spectrum) out[sys.key_of(sys.parse_word(e.word))] = e.count;
    return out;
}

SpectrumReport thin_spectrum(const CoxeterSystem& sys, const ThinAutomorphism& theta,
                             std::size_t max_elements) {
    SpectrumReport rep;
    rep.model = sys.spec().name() + ":thin";
    rep.automorphism = "(w, sigma) with w = [" + sys.word_string(theta.base) + "]";
    rep.exhaustive = true;

    // enumerate W, accumulate u^{-1} w u^sigma
    std::map<ElementKey, mpz_class> multiset;
    std::unordered_set<ElementKey, ElementKeyHash> seen;
    std::vector<Element> frontier{sys.identity()};
    seen.insert(sys.key_of(frontier[0]));
    const int N = sys.positive_count();
    std::vector<Element> next;
    while (!frontier.empty()) {
        next.clear();
        for (const Element& u : frontier) {
            Element d = sys.multiply(sys.multiply(sys.invert(u), theta.base),
                                     sys.apply_sigma(theta.sigma, u));
            multiset[sys.key_of(d)] += 1;
            ++rep.chambers_visited;
            for (int s = 0; s < sys.rank(); ++s) {
                if (u.perm[s] >= static_cast<RootIndex>(N)) continue;
                Element y = sys.multiply(u, sys.generator(s));
                if (!seen.insert(sys.key_of(y)).second) continue;
                if (seen.size() > max_elements) throw ClassTooLarge(max_elements);
                next.push_back(std::move(y));
            }
        }
        frontier.swap(next);
    }
    finalize_report(sys, theta.sigma, multiset, true, rep);
    // thin oracle: the spectrum is exactly the twisted class of the base
    TwistedClass c = enumerate_class(sys, theta.base, theta.sigma);
    if (c.size() != multiset.size())
        throw InternalContradiction("thin spectrum differs from the twisted class");
    return rep;
}

SpectrumReport spectrum(const FlagBuilding& b, const BuildingAutomorphism& theta,
                        const SpectrumOptions& opts) {
    const CoxeterSystem& sys = b.weyl();
    SpectrumReport rep;
    rep.model = "A" + std::to_string(b.n()) + ":F" + std::to_string(b.field().q());
    rep.automorphism = theta.description;
    rep.exhaustive = opts.exhaustive;

    std::map<ElementKey, mpz_class> multiset;
    if (opts.exhaustive) {
        auto chambers = b.all_chambers(opts.exhaustive_cap);
        rep.chambers_visited = chambers.size();
        const int nthreads = std::max(1, opts.threads);
        std::vector<std::map<ElementKey, mpz_class>> parts(nthreads);
        auto work = [&](int tid) {
            auto& part = parts[tid];
            for (std::size_t i = tid; i < chambers.size(); i += nthreads) {
                Element w = b.weyl_distance(chambers[i], theta.apply(b, chambers[i]));
                part[sys.key_of(w)] += 1;
            }
        };
        if (nthreads == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
            for (auto& th : pool) th.join();
        }
        for (const auto& part : parts)
            for (const auto& [k, c] : part) multiset[k] += c;
    } else {
        rep.seed = opts.seed;
        std::mt19937_64 rng(opts.seed);
        for (std::size_t i = 0; i < opts.samples; ++i) {
            auto c = b.random_chamber(rng);
            Element w = b.weyl_distance(c, theta.apply(b, c));
            multiset[sys.key_of(w)] += 1;
        }
        rep.chambers_visited = opts.samples;
    }
    finalize_report(sys, theta.sigma, multiset, opts.exhaustive, rep);
    return rep;
}

RecursionCheck counting_recursion_check(const FlagBuilding& b, const SpectrumReport& report,
                                        const DiagramAutomorphism& sigma) {
    const CoxeterSystem& sys = b.weyl();
    if (!report.exhaustive) throw InvalidType("recursion check needs an exhaustive spectrum");
    auto multiset = spectrum_multiset(sys, report);
    auto count = [&](const Element& w) -> mpz_class {
        auto it = multiset.find(sys.key_of(w));
        return it == multiset.end() ? mpz_class(0) : it->second;
    };
    const long q = b.field().q();

    RecursionCheck out;
    // exhaustive over W (A_n with n <= 7 stays comfortably small)
    std::unordered_set<ElementKey, ElementKeyHash> seen;
    std::vector<Element> frontier{sys.identity()};
    seen.insert(sys.key_of(frontier[0]));
    std::vector<Element> next;
    while (!frontier.empty() && out.holds) {
        next.clear();
        for (const Element& w : frontier) {
            int lw = sys.length(w);
            for (int s = 0; s < sys.rank(); ++s) {
                Element sw = sys.multiply(sys.generator(s), w);
                Element wst = sys.multiply(w, sys.generator(sigma.node_perm[s]));
                Element sws = sys.multiply(sys.generator(s), wst);
                if (sys.length(sws) == lw + 2) {
                    if (count(wst) != count(sw) ||
                        count(sws) != q * count(w) + (q - 1) * count(sw)) {
                        out.holds = false;
                        out.counterexample = "w = [" + sys.word_string(w) + "], s = " +
                                             std::to_string(s + 1);
                        break;
                    }
                }
                if (!seen.count(sys.key_of(sw))) {
                    seen.insert(sys.key_of(sw));
                    next.push_back(sw);
                }
            }
            if (!out.holds) break;
        }
        frontier.swap(next);
    }
    return out;
}

}  // namespace weyldisp
