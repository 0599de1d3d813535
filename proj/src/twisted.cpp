#include "weyldisp/twisted.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "weyldisp/diagrams.hpp"
#include "weyldisp/errors.hpp"

namespace weyldisp {

std::vector<Element> TwistedClass::min_elements() const {
    std::vector<Element> out;
    for (const auto& e : elements_) {
        if (e.len != elements_.front().len) break;
        out.push_back(sys_->element_of(e.key));
    }
    return out;
}

std::vector<Element> TwistedClass::max_elements() const {
    std::vector<Element> out;
    for (auto it = elements_.rbegin(); it != elements_.rend() && it->len == elements_.back().len; ++it)
        out.push_back(sys_->element_of(it->key));
    return out;
}

bool TwistedClass::contains(const Element& w) const {
    ElementKey k = sys_->key_of(w);
    int l = sys_->length(w);
    auto lo = std::lower_bound(elements_.begin(), elements_.end(), l,
                               [](const ClassElement& e, int v) { return e.len < v; });
    for (; lo != elements_.end() && lo->len == l; ++lo)
        if (lo->key == k) return true;
    return false;
}

std::vector<std::tuple<int, int, std::size_t>> TwistedClass::strata() const {
    std::vector<std::tuple<int, int, std::size_t>> out;
    std::map<std::pair<int, int>, std::size_t> acc;
    for (const auto& e : elements_) ++acc[{e.len, e.deg2}];
    for (const auto& [k, v] : acc) out.emplace_back(k.first, k.second, v);
    return out;
}

TwistedClass enumerate_class(const CoxeterSystem& sys, const Element& w,
                             const DiagramAutomorphism& sigma, std::size_t max_elements) {
    const int n = sys.rank();
    const int N = sys.positive_count();

    TwistedClass out;
    out.sys_ = &sys;
    out.sigma_ = sigma;

    auto cls1 = [&](int s) { return sys.generator_class_of(s) != 0 ? 1 : 0; };
    auto len_of = [&](const Element& x) { return sys.length(x); };
    int deg2_0 = 0;
    for (int s : sys.reduced_word(w)) deg2_0 += cls1(s - 1);

    struct Node {
        Element el;
        std::uint16_t len;
        std::uint16_t deg2;
    };
    std::unordered_set<ElementKey, ElementKeyHash> seen;
    std::vector<Node> frontier;
    frontier.push_back(Node{w, static_cast<std::uint16_t>(len_of(w)), static_cast<std::uint16_t>(deg2_0)});
    seen.insert(sys.key_of(w));
    out.elements_.push_back(ClassElement{sys.key_of(w), frontier[0].len, frontier[0].deg2});

    std::vector<Node> next;
    Element scratch;
    scratch.perm.resize(2 * N);
    while (!frontier.empty()) {
        next.clear();
        for (const Node& node : frontier) {
            for (int s = 0; s < n; ++s) {
                const int t = sigma.node_perm[s];
                const auto& gs = sys.generator(s).perm;
                const auto& gt = sys.generator(t).perm;
                // y = s . x . t
                for (int r = 0; r < 2 * N; ++r) scratch.perm[r] = gs[node.el.perm[gt[r]]];
                ElementKey k = sys.key_of(scratch);
                if (!seen.insert(k).second) continue;
                if (seen.size() > max_elements) throw ClassTooLarge(max_elements);
                int ylen = len_of(scratch);
                // x(alpha_t) sign gives l(x t) = l(x) +- 1; the rest is forced
                int e1 = node.el.perm[t] < static_cast<RootIndex>(N) ? 1 : -1;
                int e2 = ylen - (node.len + e1);
                int deg2 = node.deg2 + e1 * cls1(t) + e2 * cls1(s);
                Node y{scratch, static_cast<std::uint16_t>(ylen), static_cast<std::uint16_t>(deg2)};
                out.elements_.push_back(ClassElement{k, y.len, y.deg2});
                next.push_back(std::move(y));
            }
        }
        frontier.swap(next);
    }
    std::sort(out.elements_.begin(), out.elements_.end(), [](const ClassElement& a, const ClassElement& b) {
        return a.len != b.len ? a.len < b.len : a.key < b.key;
    });
    out.involutions_ = is_sigma_involution(sys, w, sigma);
    return out;
}

bool is_sigma_involution(const CoxeterSystem& sys, const Element& w,
                         const DiagramAutomorphism& sigma) {
    if (sigma.order > 2) return false;
    return sys.multiply(w, sys.apply_sigma(sigma, w)) == sys.identity();
}

DownwardClosure downward_closure(const CoxeterSystem& sys, const Element& w,
                                 const DiagramAutomorphism& sigma) {
    if (!is_sigma_involution(sys, w, sigma)) throw NotTwistedInvolution();
    const int n = sys.rank();
    const int N = sys.positive_count();

    DownwardClosure out;
    Element x = w;
    int len = sys.length(x);
    for (;;) {
        Element xi = sys.invert(x);
        std::vector<int> K;
        for (int s = 0; s < n; ++s) {
            if (xi.perm[s] < static_cast<RootIndex>(N)) continue;  // not a left descent
            if (sys.multiply(sys.generator(s), x) ==
                sys.multiply(x, sys.generator(sigma.node_perm[s])))
                K.push_back(s);
        }
        Element wK = sys.longest_element(K);
        if (x == wK) {
            out.J = K;
            break;
        }
        Element z = sys.multiply(wK, x);
        int t = -1;
        Element zi = sys.invert(z);
        for (int s = 0; s < n; ++s)
            if (zi.perm[s] >= static_cast<RootIndex>(N)) {
                t = s;
                break;
            }
        if (t < 0) throw InternalContradiction("downward closure: no descent in w_K w");
        x = sys.multiply(sys.multiply(sys.generator(t), x), sys.generator(sigma.node_perm[t]));
        int nl = sys.length(x);
        if (nl != len - 2) throw InternalContradiction("downward closure step did not drop length by 2");
        len = nl;
        out.trace.push_back(t);
    }
    out.minimum = x;
    Element v = sys.identity();
    for (int t : out.trace) v = sys.multiply(v, sys.generator(t));
    out.conjugator = v;
    if (sys.length(v) != static_cast<int>(out.trace.size()) ||
        !(sys.multiply(sys.multiply(sys.invert(v), w), sys.apply_sigma(sigma, v)) == x))
        throw InternalContradiction("downward closure conjugator check failed");
    return out;
}

namespace {

// J recovered from a minimal element m = w_J: the left descents commuting with
// m through sigma.
std::vector<int> rigid_set_of_minimum(const CoxeterSystem& sys, const Element& m,
                                      const DiagramAutomorphism& sigma) {
    const int N = sys.positive_count();
    Element mi = sys.invert(m);
    std::vector<int> J;
    for (int s = 0; s < sys.rank(); ++s) {
        if (mi.perm[s] < static_cast<RootIndex>(N)) continue;
        if (sys.multiply(sys.generator(s), m) == sys.multiply(m, sys.generator(sigma.node_perm[s])))
            J.push_back(s);
    }
    if (!(sys.longest_element(J) == m))
        throw InternalContradiction("minimal element is not a parabolic longest element");
    return J;
}

}  // namespace

CapCertificate cap_certificate(const TwistedClass& c) {
    if (!c.all_involutions()) throw NotInvolutionClass();
    const CoxeterSystem& sys = c.system();
    const DiagramAutomorphism& sigma = c.sigma();
    CapCertificate out;

    auto mins = c.min_elements();
    out.min_unique = mins.size() == 1;
    std::vector<int> J = rigid_set_of_minimum(sys, mins.front(), sigma);
    if (out.min_unique) out.lower_J = J;

    // dual minima via downward closure of x w0 under sigma sigma0
    DiagramAutomorphism s2 = sys.compose(sigma, sys.opposition());
    Element xw0 = sys.multiply(mins.front(), sys.longest_element());
    DownwardClosure down = downward_closure(sys, xw0, s2);
    TwistedClass dual = enumerate_class(sys, down.minimum, s2);
    auto dual_mins = dual.min_elements();
    out.max_unique = dual_mins.size() == 1;
    std::vector<int> Jp = rigid_set_of_minimum(sys, dual_mins.front(), s2);
    if (out.max_unique) {
        out.upper_Jprime = Jp;
        // the unique maximum of c is w_{J'} w0
        auto maxs = c.max_elements();
        if (maxs.size() != 1 ||
            !(maxs.front() == sys.multiply(sys.longest_element(Jp), sys.longest_element())))
            throw InternalContradiction("upper cap does not match w_{J'} w0");
    }

    std::vector<int> SmJ, SmJp;
    for (int s = 0; s < sys.rank(); ++s) {
        if (std::find(J.begin(), J.end(), s) == J.end()) SmJ.push_back(s);
        if (std::find(Jp.begin(), Jp.end(), s) == Jp.end()) SmJp.push_back(s);
    }
    out.fix_rank = static_cast<int>(sys.orbits(sigma, SmJ).size());
    out.opp_rank = static_cast<int>(sys.orbits(s2, SmJp).size());
    return out;
}

TwistedClass dual_class(const TwistedClass& c) {
    const CoxeterSystem& sys = c.system();
    DiagramAutomorphism s2 = sys.compose(c.sigma(), sys.opposition());
    Element w0 = sys.longest_element();
    Element seed = sys.multiply(sys.element_of(c.elements().front().key), w0);
    TwistedClass dual = enumerate_class(sys, seed, s2);
    if (dual.size() != c.size()) throw InternalContradiction("dual class size mismatch");
    // set equality {v w0 : v in c} == dual, using key arithmetic
    DiagramAutomorphism s0 = sys.opposition();
    const int N = sys.positive_count();
    for (const auto& e : c.elements()) {
        ElementKey k;
        k.img.fill(kNoRoot);
        for (int j = 0; j < sys.rank(); ++j) {
            RootIndex img = e.key.img[s0.node_perm[j]];  // v(w0(alpha_j)) = -v(alpha_{s0(j)})
            k.img[j] = static_cast<RootIndex>((img + N) % (2 * N));
        }
        Element vw0 = sys.element_of(k);
        if (!dual.contains(vw0)) throw InternalContradiction("dual class misses an element");
    }
    return dual;
}

std::vector<BicappedClassRow> classify_bicapped(const CoxeterSystem& sys, std::size_t max_elements) {
    const int n = sys.rank();
    std::vector<BicappedClassRow> rows;
    std::set<std::pair<std::vector<int>, ElementKey>> seen_classes;

    for (const DiagramAutomorphism& sigma : sys.diagram_automorphisms()) {
        if (sigma.order > 2) continue;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> J;
            for (int s = 0; s < n; ++s)
                if (mask >> s & 1) J.push_back(s);
            Element wJ = sys.longest_element(J);
            bool rigid_cond = true;
            for (int s : J)
                if (!(sys.multiply(sys.generator(s), wJ) ==
                      sys.multiply(wJ, sys.generator(sigma.node_perm[s])))) {
                    rigid_cond = false;
                    break;
                }
            if (!rigid_cond) continue;

            TwistedClass c = enumerate_class(sys, wJ, sigma, max_elements);
            auto cls_id = std::make_pair(sigma.node_perm, c.elements().front().key);
            if (!seen_classes.insert(cls_id).second) continue;
            CapCertificate cert = cap_certificate(c);
            if (!cert.bicapped()) continue;

            BicappedClassRow row;
            row.sigma_nodes = sigma.node_perm;
            row.lower_J = *cert.lower_J;
            row.upper_Jprime = *cert.upper_Jprime;
            row.size = c.size();
            row.min_length = c.min_length();
            row.max_length = c.max_length();
            row.fix_rank = cert.fix_rank;
            row.opp_rank = cert.opp_rank;

            std::vector<int> enc, enc_dual;
            for (int s = 0; s < n; ++s) {
                if (std::find(row.lower_J.begin(), row.lower_J.end(), s) == row.lower_J.end())
                    enc.push_back(s);
                if (std::find(row.upper_Jprime.begin(), row.upper_Jprime.end(), s) ==
                    row.upper_Jprime.end())
                    enc_dual.push_back(s);
            }
            DiagramAutomorphism s2 = sys.compose(sigma, sys.opposition());
            AdmissibleDiagram fix{&sys, enc, sigma};
            AdmissibleDiagram opp{&sys, enc_dual, s2};
            row.symbol = symbol_of(fix);
            row.dual_symbol = symbol_of(opp);
            row.relative_type = relative_type(fix).name;
            row.dual_relative_type = relative_type(opp).name;
            rows.push_back(std::move(row));
        }
    }
    // dedupe by symbol (D4 relabellings), keep deterministic order
    std::sort(rows.begin(), rows.end(), [](const BicappedClassRow& a, const BicappedClassRow& b) {
        if (a.fix_rank != b.fix_rank) return a.fix_rank > b.fix_rank;
        return a.symbol < b.symbol;
    });
    std::vector<BicappedClassRow> out;
    for (auto& r : rows) {
        bool dup = false;
        for (const auto& o : out)
            if (o.symbol == r.symbol) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(std::move(r));
    }
    return out;
}

}  // namespace weyldisp
