#include "weyldisp/coxeter.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "weyldisp/errors.hpp"

namespace weyldisp {

namespace {

// Pairing matrix P[i][j] = <alpha_j, alpha_i^vee>: the reflection formula is
// s_i(beta)_i = beta_i - sum_j P[i][j] beta_j. Integer Cartan matrices for the
// crystallographic types; for H3/H4 the unit-root form with -2cos(pi/5) = -tau.
std::vector<std::vector<QuadInt>> pairing_matrix(const TypeSpec& t) {
    const int n = t.rank;
    std::vector<std::vector<QuadInt>> P(n, std::vector<QuadInt>(n, QuadInt(0)));
    for (int i = 0; i < n; ++i) P[i][i] = QuadInt(2);
    auto simple = [&](int i, int j) { P[i][j] = P[j][i] = QuadInt(-1); };
    switch (t.family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) simple(i, i + 1);
            break;
        case Family::B:
            for (int i = 0; i + 2 < n; ++i) simple(i, i + 1);
            P[n - 2][n - 1] = QuadInt(-1);  // <alpha_n, alpha_{n-1}^vee>
            P[n - 1][n - 2] = QuadInt(-2);  // alpha_n short
            break;
        case Family::D:
            for (int i = 0; i + 2 < n; ++i) simple(i, i + 1);
            simple(n - 3, n - 1);
            break;
        case Family::E:
            simple(0, 2);
            simple(2, 3);
            simple(3, 4);
            simple(4, 5);
            if (n >= 7) simple(5, 6);
            if (n == 8) simple(6, 7);
            simple(1, 3);
            break;
        case Family::F:
            simple(0, 1);
            P[1][2] = QuadInt(-1);
            P[2][1] = QuadInt(-2);  // alpha_3, alpha_4 short
            simple(2, 3);
            break;
        case Family::H: {
            const QuadInt mtau(0, -1);  // -2cos(pi/5) = -tau
            P[0][1] = P[1][0] = mtau;
            simple(1, 2);
            if (n == 4) simple(2, 3);
            break;
        }
        case Family::I2:
            if (t.m == 3) {
                simple(0, 1);
            } else if (t.m == 4) {
                P[0][1] = QuadInt(-1);
                P[1][0] = QuadInt(-2);
            } else if (t.m == 6) {
                P[0][1] = QuadInt(-3);
                P[1][0] = QuadInt(-1);
            } else {
                return {};  // combinatorial dihedral model instead
            }
            break;
    }
    return P;
}

}  // namespace

std::size_t CoxeterSystem::coord_hash(const std::vector<QuadInt>& c) {
    std::uint64_t h = 0x51ed270b7a14c253ULL;
    for (const QuadInt& q : c) {
        h ^= static_cast<std::uint64_t>(q.a) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= static_cast<std::uint64_t>(q.b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

CoxeterSystem CoxeterSystem::build(const TypeSpec& spec) {
    CoxeterSystem sys;
    sys.spec_ = spec;
    sys.n_ = spec.rank;
    sys.cox_m_ = coxeter_matrix(spec);
    auto P = pairing_matrix(spec);
    if (P.empty()) {
        sys.build_dihedral(spec.m);
    } else {
        sys.enumerate_roots(P);
    }
    if (sys.N_ != static_cast<int>(positive_root_count(spec)))
        throw InternalContradiction("root enumeration for " + spec.name() + " found " +
                                    std::to_string(sys.N_) + " positive roots");
    sys.finish_setup();
    return sys;
}

void CoxeterSystem::enumerate_roots(const std::vector<std::vector<QuadInt>>& pairing) {
    const int n = n_;
    auto reflect = [&](std::vector<QuadInt> c, int i) {
        QuadInt p(0);
        for (int j = 0; j < n; ++j) p = p + pairing[i][j] * c[j];
        c[i] = c[i] - p;
        return c;
    };
    // closure of the simple roots under simple reflections, positives only
    for (int i = 0; i < n; ++i) {
        std::vector<QuadInt> c(n, QuadInt(0));
        c[i] = QuadInt(1);
        root_coords_.push_back(c);
        coord_index_[coord_hash(c)] = static_cast<RootIndex>(i);
    }
    for (std::size_t head = 0; head < root_coords_.size(); ++head) {
        for (int i = 0; i < n; ++i) {
            auto c = reflect(root_coords_[head], i);
            bool pos = false;
            for (const QuadInt& q : c)
                if (!q.is_zero()) {
                    pos = q.positive();
                    break;
                }
            if (!pos) continue;
            auto h = coord_hash(c);
            auto it = coord_index_.find(h);
            if (it == coord_index_.end()) {
                coord_index_[h] = static_cast<RootIndex>(root_coords_.size());
                root_coords_.push_back(c);
            }
        }
    }
    N_ = static_cast<int>(root_coords_.size());
    // generator permutations on all 2N roots
    gens_.assign(n, Element{});
    for (int i = 0; i < n; ++i) {
        auto& perm = gens_[i].perm;
        perm.assign(2 * N_, kNoRoot);
        for (int r = 0; r < N_; ++r) {
            auto c = reflect(root_coords_[r], i);
            bool pos = false;
            for (const QuadInt& q : c)
                if (!q.is_zero()) {
                    pos = q.positive();
                    break;
                }
            RootIndex img;
            if (pos) {
                img = root_index(c);
            } else {
                for (QuadInt& q : c) q = -q;
                img = negate(root_index(c));
            }
            perm[r] = img;
            perm[r + N_] = negate(img);
        }
    }
}

namespace {

// Dihedral root labels: geometrically the roots are 2m directions
// u_0..u_{2m-1} with u_{j+m} = -u_j, alpha_1 = u_0, alpha_2 = u_{m-1}. Our
// indexing needs the simple roots at positions 0 and 1, so the positives are
// relabelled as (u_0, u_{m-1}, u_1, u_2, ..., u_{m-2}).
int dihedral_new_of_old(int j, int m) {
    if (j >= m) return dihedral_new_of_old(j - m, m) + m;
    if (j == 0) return 0;
    if (j == m - 1) return 1;
    return j + 1;
}
int dihedral_old_of_new(int i, int m) {
    if (i >= m) return dihedral_old_of_new(i - m, m) + m;
    if (i == 0) return 0;
    if (i == 1) return m - 1;
    return i - 1;
}

}  // namespace

void CoxeterSystem::build_dihedral(int m) {
    N_ = m;
    gens_.assign(2, Element{});
    auto& s1 = gens_[0].perm;
    auto& s2 = gens_[1].perm;
    s1.resize(2 * m);
    s2.resize(2 * m);
    for (int j = 0; j < 2 * m; ++j) {
        int i1 = ((m - j) % (2 * m) + 2 * m) % (2 * m);          // reflection at u_0
        int i2 = ((3 * m - 2 - j) % (2 * m) + 2 * m) % (2 * m);  // reflection at u_{m-1}
        s1[dihedral_new_of_old(j, m)] = static_cast<RootIndex>(dihedral_new_of_old(i1, m));
        s2[dihedral_new_of_old(j, m)] = static_cast<RootIndex>(dihedral_new_of_old(i2, m));
    }
}

void CoxeterSystem::finish_setup() {
    // generator conjugacy classes: orbits under odd-bond adjacency
    gen_class_of_.assign(n_, -1);
    for (int s = 0; s < n_; ++s) {
        if (gen_class_of_[s] >= 0) continue;
        int c = static_cast<int>(gen_classes_.size());
        std::vector<int> cls{s};
        gen_class_of_[s] = c;
        for (std::size_t head = 0; head < cls.size(); ++head) {
            for (int t = 0; t < n_; ++t) {
                if (gen_class_of_[t] < 0 && cox_m_[cls[head]][t] % 2 == 1 && cox_m_[cls[head]][t] > 1) {
                    gen_class_of_[t] = c;
                    cls.push_back(t);
                }
            }
        }
        std::sort(cls.begin(), cls.end());
        gen_classes_.push_back(std::move(cls));
    }
}

RootIndex CoxeterSystem::root_index(const std::vector<QuadInt>& coords) const {
    auto it = coord_index_.find(coord_hash(coords));
    if (it == coord_index_.end() || root_coords_[it->second] != coords)
        throw InternalContradiction("root coordinate lookup failed");
    return it->second;
}

Element CoxeterSystem::identity() const {
    Element e;
    e.perm.resize(2 * N_);
    for (int r = 0; r < 2 * N_; ++r) e.perm[r] = static_cast<RootIndex>(r);
    return e;
}

Element CoxeterSystem::multiply(const Element& a, const Element& b) const {
    Element c;
    c.perm.resize(2 * N_);
    for (int r = 0; r < 2 * N_; ++r) c.perm[r] = a.perm[b.perm[r]];
    return c;
}

Element CoxeterSystem::invert(const Element& a) const {
    Element c;
    c.perm.resize(2 * N_);
    for (int r = 0; r < 2 * N_; ++r) c.perm[a.perm[r]] = static_cast<RootIndex>(r);
    return c;
}

Element CoxeterSystem::from_word(const std::vector<int>& word) const {
    Element w = identity();
    for (int s : word) {
        if (s < 1 || s > n_) throw InvalidType("generator index " + std::to_string(s));
        w = multiply(w, gens_[s - 1]);
    }
    return w;
}

Element CoxeterSystem::reflection(RootIndex r) const {
    if (r >= static_cast<RootIndex>(N_)) r = negate(r);
    if (!has_coordinates()) {
        // dihedral: the reflection negating u_j sends u_x to u_{2j + m - x}
        const int m = N_;
        const int j = dihedral_old_of_new(r, m);
        Element w;
        w.perm.resize(2 * m);
        for (int x = 0; x < 2 * m; ++x)
            w.perm[dihedral_new_of_old(x, m)] = static_cast<RootIndex>(
                dihedral_new_of_old(((2 * j + m - x) % (2 * m) + 2 * m) % (2 * m), m));
        return w;
    }
    if (r < static_cast<RootIndex>(n_)) return gens_[r];
    // write root r as s_i(r') with r' of smaller index (the BFS enumeration
    // orders roots by depth, so a discovery parent always exists), recurse
    for (int i = 0; i < n_; ++i) {
        RootIndex r2 = gens_[i].perm[r];
        if (r2 < r) return multiply(multiply(gens_[i], reflection(r2)), gens_[i]);
    }
    throw InternalContradiction("reflection: no descent from root");
}

int CoxeterSystem::length(const Element& w) const {
    int l = 0;
    for (int r = 0; r < N_; ++r)
        if (w.perm[r] >= static_cast<RootIndex>(N_)) ++l;
    return l;
}

std::vector<int> CoxeterSystem::right_descents(const Element& w) const {
    std::vector<int> d;
    for (int s = 0; s < n_; ++s)
        if (w.perm[s] >= static_cast<RootIndex>(N_)) d.push_back(s);
    return d;
}

std::vector<int> CoxeterSystem::left_descents(const Element& w) const {
    return right_descents(invert(w));
}

std::vector<int> CoxeterSystem::reduced_word(const Element& w) const {
    std::vector<int> word;
    Element x = w;
    Element xi = invert(w);
    for (;;) {
        int s = -1;
        for (int t = 0; t < n_; ++t)
            if (xi.perm[t] >= static_cast<RootIndex>(N_)) {
                s = t;
                break;
            }
        if (s < 0) break;
        word.push_back(s + 1);
        x = multiply(gens_[s], x);
        xi = multiply(xi, gens_[s]);
    }
    if (!x.perm.empty() && x != identity())
        throw InternalContradiction("descent stripping did not reach the identity");
    return word;
}

int CoxeterSystem::element_order(const Element& w) const {
    Element x = w;
    Element e = identity();
    int k = 1;
    while (!(x == e)) {
        x = multiply(x, w);
        ++k;
        if (k > 4 * N_ + 8) throw InternalContradiction("element order overflow");
    }
    return k;
}

Element CoxeterSystem::longest_element(const std::vector<int>& J) const {
    Element w = identity();
    for (;;) {
        int asc = -1;
        for (int s : J)
            if (w.perm[s] < static_cast<RootIndex>(N_)) {
                asc = s;
                break;
            }
        if (asc < 0) break;
        w = multiply(w, gens_[asc]);
    }
    return w;
}

Element CoxeterSystem::longest_element() const {
    std::vector<int> all(n_);
    for (int i = 0; i < n_; ++i) all[i] = i;
    return longest_element(all);
}

ElementKey CoxeterSystem::key_of(const Element& w) const {
    ElementKey k;
    k.img.fill(kNoRoot);
    for (int s = 0; s < n_; ++s) k.img[s] = w.perm[s];
    return k;
}

Element CoxeterSystem::element_of(const ElementKey& k) const {
    if (!has_coordinates()) {
        // dihedral: the key determines rotation-or-reflection directly
        const int m = N_;
        int a = dihedral_old_of_new(k.img[0], m);
        int b = dihedral_old_of_new(k.img[1], m);
        Element w = identity();
        auto set = [&](int j, int img) {
            w.perm[dihedral_new_of_old(j, m)] =
                static_cast<RootIndex>(dihedral_new_of_old(img, m));
        };
        if ((a + m - 1) % (2 * m) == b) {
            for (int j = 0; j < 2 * m; ++j) set(j, (j + a) % (2 * m));
        } else if ((a - (m - 1) + 4 * m) % (2 * m) == b) {
            for (int j = 0; j < 2 * m; ++j) set(j, ((a - j) % (2 * m) + 2 * m) % (2 * m));
        } else {
            throw InternalContradiction("dihedral key is not a group element");
        }
        return w;
    }
    // linear action: w(root) = sum c_j * w(alpha_j)
    Element w;
    w.perm.assign(2 * N_, kNoRoot);
    for (int r = 0; r < N_; ++r) {
        std::vector<QuadInt> img(n_, QuadInt(0));
        const auto& c = root_coords_[r];
        for (int j = 0; j < n_; ++j) {
            if (c[j].is_zero()) continue;
            RootIndex t = k.img[j];
            bool neg = t >= static_cast<RootIndex>(N_);
            const auto& tc = root_coords_[neg ? negate(t) : t];
            for (int i = 0; i < n_; ++i) img[i] = img[i] + (neg ? -(c[j] * tc[i]) : c[j] * tc[i]);
        }
        bool pos = false;
        for (const QuadInt& q : img)
            if (!q.is_zero()) {
                pos = q.positive();
                break;
            }
        RootIndex ri;
        if (pos) {
            ri = root_index(img);
        } else {
            for (QuadInt& q : img) q = -q;
            ri = negate(root_index(img));
        }
        w.perm[r] = ri;
        w.perm[r + N_] = negate(ri);
    }
    return w;
}

std::vector<RootIndex> CoxeterSystem::sigma_root_perm(const std::vector<int>& node_perm) const {
    // sigma acts on reflections by conjugating words; positive roots map to
    // positive roots. Built from reduced words so it also covers the
    // length-rescaling flips (F4, I2(even)).
    std::vector<RootIndex> sig(2 * N_, kNoRoot);
    for (int r = 0; r < N_; ++r) {
        Element refl = reflection(static_cast<RootIndex>(r));
        std::vector<int> word = reduced_word(refl);
        for (int& s : word) s = node_perm[s - 1] + 1;
        Element mapped = from_word(word);
        RootIndex img = kNoRoot;
        for (int t = 0; t < N_; ++t)
            if (mapped.perm[t] == negate(static_cast<RootIndex>(t))) {
                img = static_cast<RootIndex>(t);
                break;
            }
        if (img == kNoRoot) throw InternalContradiction("sigma image is not a reflection");
        sig[r] = img;
        sig[r + N_] = negate(img);
    }
    return sig;
}

DiagramAutomorphism CoxeterSystem::automorphism_from_nodes(const std::vector<int>& node_perm) const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (cox_m_[node_perm[i]][node_perm[j]] != cox_m_[i][j])
                throw InvalidType("node permutation is not a graph automorphism");
    DiagramAutomorphism a;
    a.node_perm = node_perm;
    std::vector<int> p = node_perm;
    a.order = 1;
    auto is_id = [&](const std::vector<int>& q) {
        for (int i = 0; i < n_; ++i)
            if (q[i] != i) return false;
        return true;
    };
    while (!is_id(p)) {
        std::vector<int> q(n_);
        for (int i = 0; i < n_; ++i) q[i] = node_perm[p[i]];
        p = q;
        ++a.order;
    }
    a.root_perm = sigma_root_perm(node_perm);
    // conjugation sanity: sig s_i sig^-1 == s_{sigma(i)}
    std::vector<RootIndex> sig_inv(2 * N_);
    for (int r = 0; r < 2 * N_; ++r) sig_inv[a.root_perm[r]] = static_cast<RootIndex>(r);
    for (int i = 0; i < n_; ++i) {
        for (int r = 0; r < 2 * N_; ++r) {
            if (a.root_perm[gens_[i].perm[sig_inv[r]]] != gens_[node_perm[i]].perm[r])
                throw InternalContradiction("diagram automorphism root action mismatch");
        }
    }
    return a;
}

DiagramAutomorphism CoxeterSystem::identity_automorphism() const {
    std::vector<int> id(n_);
    for (int i = 0; i < n_; ++i) id[i] = i;
    return automorphism_from_nodes(id);
}

std::vector<DiagramAutomorphism> CoxeterSystem::diagram_automorphisms() const {
    std::vector<int> p(n_);
    for (int i = 0; i < n_; ++i) p[i] = i;
    std::vector<DiagramAutomorphism> out;
    // brute force over node permutations preserving the Coxeter matrix
    std::sort(p.begin(), p.end());
    do {
        bool ok = true;
        for (int i = 0; i < n_ && ok; ++i)
            for (int j = 0; j < n_ && ok; ++j)
                if (cox_m_[p[i]][p[j]] != cox_m_[i][j]) ok = false;
        if (ok) out.push_back(automorphism_from_nodes(p));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

DiagramAutomorphism CoxeterSystem::opposition() const {
    Element w0 = longest_element();
    std::vector<int> p(n_);
    for (int s = 0; s < n_; ++s) {
        RootIndex img = w0.perm[s];  // w0(alpha_s) = -alpha_t
        if (img < static_cast<RootIndex>(N_) || img >= static_cast<RootIndex>(N_ + n_))
            throw InternalContradiction("w0 does not negate the simple roots");
        p[s] = img - N_;
    }
    return automorphism_from_nodes(p);
}

DiagramAutomorphism CoxeterSystem::compose(const DiagramAutomorphism& a,
                                           const DiagramAutomorphism& b) const {
    // s -> (s^b)^a, matching w^{ab} = (w^b)^a ... chosen so that
    // compose(sigma, sigma0) realizes the class map of psi.
    std::vector<int> p(n_);
    for (int i = 0; i < n_; ++i) p[i] = a.node_perm[b.node_perm[i]];
    return automorphism_from_nodes(p);
}

Element CoxeterSystem::apply_sigma(const DiagramAutomorphism& sigma, const Element& w) const {
    std::vector<RootIndex> sig_inv(2 * N_);
    for (int r = 0; r < 2 * N_; ++r) sig_inv[sigma.root_perm[r]] = static_cast<RootIndex>(r);
    Element out;
    out.perm.resize(2 * N_);
    for (int r = 0; r < 2 * N_; ++r) out.perm[r] = sigma.root_perm[w.perm[sig_inv[r]]];
    return out;
}

std::vector<std::vector<int>> CoxeterSystem::orbits(const DiagramAutomorphism& sigma,
                                                    const std::vector<int>& subset) const {
    std::vector<bool> in(n_, false), seen(n_, false);
    for (int s : subset) in[s] = true;
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n_; ++s) {
        if (!in[s] || seen[s]) continue;
        std::vector<int> orb;
        int t = s;
        do {
            if (!in[t]) throw InvalidType("subset is not sigma-stable");
            seen[t] = true;
            orb.push_back(t);
            t = sigma.node_perm[t];
        } while (t != s);
        std::sort(orb.begin(), orb.end());
        out.push_back(std::move(orb));
    }
    return out;
}

CoxeterSystem::PolarCheck CoxeterSystem::polar_check() const {
    if (!crystallographic()) throw NonCrystallographic();
    // highest root: maximal coordinate-sum (height)
    QuadInt best(-1);
    RootIndex phi = 0;
    for (int r = 0; r < N_; ++r) {
        QuadInt h(0);
        for (const QuadInt& c : root_coords_[r]) h = h + c;
        if ((h - best).positive()) {
            best = h;
            phi = static_cast<RootIndex>(r);
        }
    }
    Element sphi = reflection(phi);
    PolarCheck out;
    out.highest_root = phi;
    for (int s = 0; s < n_; ++s)
        if (sphi.perm[s] != static_cast<RootIndex>(s)) out.polar_set.push_back(s);
    std::vector<int> rest;
    for (int s = 0; s < n_; ++s)
        if (std::find(out.polar_set.begin(), out.polar_set.end(), s) == out.polar_set.end())
            rest.push_back(s);
    out.identity_holds = multiply(longest_element(), sphi) == longest_element(rest);
    return out;
}

std::string CoxeterSystem::word_string(const Element& w) const {
    auto word = reduced_word(w);
    std::ostringstream os;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) os << ' ';
        os << word[i];
    }
    return os.str();
}

Element CoxeterSystem::parse_word(const std::string& s) const {
    std::istringstream is(s);
    std::vector<int> word;
    int x;
    while (is >> x) word.push_back(x);
    if (!is.eof()) throw InvalidType("word: " + s);
    return from_word(word);
}

}  // namespace weyldisp
