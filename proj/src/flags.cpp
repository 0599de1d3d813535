#include "weyldisp/flags.hpp"

#include <algorithm>

#include "weyldisp/errors.hpp"

namespace weyldisp {

FlagBuilding::FlagBuilding(int n, int q) : dim_(n + 1), F_(q) {
    if (n < 1 || n > 7) throw InvalidType("flag building rank " + std::to_string(n));
    W_ = std::make_shared<CoxeterSystem>(CoxeterSystem::build(TypeSpec{Family::A, n}));
}

FlagBuilding::Chamber FlagBuilding::canonicalize(GFMatrix m) const {
    const int n = dim_;
    std::vector<int> pivots;
    for (int i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            std::uint8_t c = m.at(i, pivots[k]);
            if (!c) continue;
            for (int j = 0; j < n; ++j)
                m.at(i, j) = F_.sub(m.at(i, j), F_.mul(c, m.at(static_cast<int>(k), j)));
        }
        int lead = -1;
        for (int j = 0; j < n; ++j)
            if (m.at(i, j)) {
                lead = j;
                break;
            }
        if (lead < 0) throw NotAFlag();
        std::uint8_t inv = F_.inv(m.at(i, lead));
        for (int j = 0; j < n; ++j) m.at(i, j) = F_.mul(m.at(i, j), inv);
        pivots.push_back(lead);
    }
    return Chamber{m};
}

FlagBuilding::Chamber FlagBuilding::standard_chamber() const {
    return Chamber{GFMatrix::eye(dim_)};
}

mpz_class FlagBuilding::chamber_count() const {
    mpz_class out = 1;
    for (int i = 2; i <= dim_; ++i) {
        mpz_class f = 0, p = 1;
        for (int e = 0; e < i; ++e) {
            f += p;
            p *= F_.q();
        }
        out *= f;
    }
    return out;
}

std::vector<FlagBuilding::Chamber> FlagBuilding::all_chambers(std::size_t max_count) const {
    if (chamber_count() > static_cast<unsigned long>(max_count))
        throw ClassTooLarge(max_count);
    const int n = dim_;
    std::vector<Chamber> out;
    GFMatrix m = GFMatrix::zero(n, n);
    std::vector<int> pivots;
    // canonical matrices enumerated row by row: choose a fresh pivot, then
    // free entries to its right avoiding earlier pivot columns
    std::function<void(int)> rec = [&](int row) {
        if (row == n) {
            out.push_back(Chamber{m});
            return;
        }
        for (int p = 0; p < n; ++p) {
            if (std::find(pivots.begin(), pivots.end(), p) != pivots.end()) continue;
            std::vector<int> free_cols;
            for (int j = p + 1; j < n; ++j)
                if (std::find(pivots.begin(), pivots.end(), j) == pivots.end())
                    free_cols.push_back(j);
            for (int j = 0; j < n; ++j) m.at(row, j) = 0;
            m.at(row, p) = 1;
            pivots.push_back(p);
            std::function<void(std::size_t)> fill = [&](std::size_t k) {
                if (k == free_cols.size()) {
                    rec(row + 1);
                    return;
                }
                for (int v = 0; v < F_.q(); ++v) {
                    m.at(row, free_cols[k]) = static_cast<std::uint8_t>(v);
                    fill(k + 1);
                }
                m.at(row, free_cols[k]) = 0;
            };
            fill(0);
            pivots.pop_back();
        }
    };
    rec(0);
    return out;
}

FlagBuilding::Chamber FlagBuilding::random_chamber(std::mt19937_64& rng) const {
    const int n = dim_;
    std::uniform_int_distribution<int> dist(0, F_.q() - 1);
    for (;;) {
        GFMatrix m = GFMatrix::zero(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = static_cast<std::uint8_t>(dist(rng));
        if (gf_rank(F_, m) == n) return canonicalize(m);
    }
}

Element FlagBuilding::weyl_distance(const Chamber& c, const Chamber& d) const {
    const int n = dim_;
    // dims[i][j] = dim(V_i cap U_j) = i + j - rank(stack(C[:i], D[:j]))
    int dims[9][9];
    GFMatrix stack = GFMatrix::zero(2 * n, n);
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
            stack.rows = i + j;
            for (int r = 0; r < i; ++r)
                for (int col = 0; col < n; ++col) stack.at(r, col) = c.basis.at(r, col);
            for (int r = 0; r < j; ++r)
                for (int col = 0; col < n; ++col) stack.at(i + r, col) = d.basis.at(r, col);
            dims[i][j] = i + j - gf_rank(F_, stack);
        }
    }
    // jump positions give the permutation w(j) = i; factor into adjacent
    // transpositions by bubble sort and map through the generators
    std::vector<int> w(n);
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
            if (dims[i][j] - dims[i - 1][j] - dims[i][j - 1] + dims[i - 1][j - 1] == 1) w[j - 1] = i;
    std::vector<int> word;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int k = 0; k + 1 < n; ++k)
            if (w[k] > w[k + 1]) {
                std::swap(w[k], w[k + 1]);
                word.push_back(k + 1);
                changed = true;
            }
    }
    std::reverse(word.begin(), word.end());
    return W_->from_word(word);
}

FlagBuilding::Chamber BuildingAutomorphism::apply(const FlagBuilding& b,
                                                  const FlagBuilding::Chamber& c) const {
    const GFq& F = b.field();
    const int n = b.dim();
    GFMatrix m = gf_mul(F, c.basis, g);
    if (!correlation) return b.canonicalize(m);
    // flag of perps: V'_j = (V_{n-j})^perp w.r.t. the gram form
    GFMatrix basis = GFMatrix::zero(n, n);
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        GFMatrix prefix = GFMatrix::zero(n - j, n);
        for (int r = 0; r < n - j; ++r)
            for (int col = 0; col < n; ++col) prefix.at(r, col) = m.at(r, col);
        GFMatrix ker = gf_kernel(F, gf_mul(F, prefix, gram));
        if (ker.rows != j) throw InternalContradiction("perp dimension");
        // extend the assembled nested basis inside this perp
        for (int r = 0; r < ker.rows && filled < j; ++r) {
            GFMatrix test = GFMatrix::zero(filled + 1, n);
            for (int x = 0; x < filled; ++x)
                for (int col = 0; col < n; ++col) test.at(x, col) = basis.at(x, col);
            for (int col = 0; col < n; ++col) test.at(filled, col) = ker.at(r, col);
            if (gf_rank(F, test) == filled + 1) {
                for (int col = 0; col < n; ++col) basis.at(filled, col) = ker.at(r, col);
                ++filled;
            }
        }
        if (filled != j) throw InternalContradiction("perp chain is not nested");
    }
    for (int e = 0; e < n && filled < n; ++e) {
        GFMatrix test = GFMatrix::zero(filled + 1, n);
        for (int x = 0; x < filled; ++x)
            for (int col = 0; col < n; ++col) test.at(x, col) = basis.at(x, col);
        test.at(filled, e) = 1;
        if (gf_rank(F, test) == filled + 1) {
            basis.at(filled, e) = 1;
            ++filled;
        }
    }
    basis.rows = n;
    basis.cols = n;
    return b.canonicalize(basis);
}

BuildingAutomorphism identity_automorphism(const FlagBuilding& b) {
    BuildingAutomorphism a;
    a.description = "identity";
    a.g = GFMatrix::eye(b.dim());
    a.sigma = b.weyl().identity_automorphism();
    return a;
}

BuildingAutomorphism collineation(const FlagBuilding& b, const GFMatrix& g) {
    if (gf_rank(b.field(), g) != b.dim()) throw InvalidType("collineation matrix is singular");
    BuildingAutomorphism a;
    a.description = "collineation";
    a.g = g;
    a.sigma = b.weyl().identity_automorphism();
    return a;
}

BuildingAutomorphism correlation(const FlagBuilding& b, const GFMatrix& gram) {
    if (gf_rank(b.field(), gram) != b.dim()) throw InvalidType("degenerate form");
    BuildingAutomorphism a;
    a.description = "correlation";
    a.g = GFMatrix::eye(b.dim());
    a.correlation = true;
    a.gram = gram;
    std::vector<int> flip(b.n());
    for (int i = 0; i < b.n(); ++i) flip[i] = b.n() - 1 - i;
    a.sigma = b.weyl().automorphism_from_nodes(flip);
    return a;
}

BuildingAutomorphism symplectic_polarity(const FlagBuilding& b) {
    if (b.dim() % 2) throw EvenDimension();
    GFMatrix gram = GFMatrix::zero(b.dim(), b.dim());
    for (int i = 0; i + 1 < b.dim(); i += 2) {
        gram.at(i, i + 1) = 1;
        gram.at(i + 1, i) = b.field().neg(1);
    }
    BuildingAutomorphism a = correlation(b, gram);
    a.description = "symplectic-polarity";
    return a;
}

BuildingAutomorphism spread_collineation(const FlagBuilding& b) {
    if (b.dim() % 2) throw EvenDimension();
    const GFq& F = b.field();
    const int q = F.q();
    // primitive quadratic x^2 = c1 x + c0 over GF(q): companion matrix powers
    // must first hit the scalars at exponent q+1 and generate all of GF(q^2)*
    auto order_of = [&](std::uint8_t c0, std::uint8_t c1) {
        GFMatrix C = GFMatrix::zero(2, 2);
        C.at(0, 1) = c0;
        C.at(1, 0) = 1;
        C.at(1, 1) = c1;
        GFMatrix p = C;
        int k = 1;
        GFMatrix I = GFMatrix::eye(2);
        while (!(p == I)) {
            // scalar non-identity is fine to pass through; detect singular
            p = gf_mul(F, p, C);
            ++k;
            if (k > q * q) return -1;  // singular companion (c0 = 0)
        }
        return k;
    };
    for (int c0 = 1; c0 < q; ++c0)
        for (int c1 = 0; c1 < q; ++c1) {
            // irreducible iff no root in GF(q)
            bool has_root = false;
            for (int x = 0; x < q; ++x) {
                std::uint8_t lhs = F.mul(static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(x));
                std::uint8_t rhs = F.add(F.mul(static_cast<std::uint8_t>(c1), static_cast<std::uint8_t>(x)),
                                         static_cast<std::uint8_t>(c0));
                if (lhs == rhs) {
                    has_root = true;
                    break;
                }
            }
            if (has_root) continue;
            if (order_of(static_cast<std::uint8_t>(c0), static_cast<std::uint8_t>(c1)) != q * q - 1)
                continue;
            BuildingAutomorphism a;
            a.description = "spread-collineation";
            a.g = GFMatrix::zero(b.dim(), b.dim());
            for (int blk = 0; blk < b.dim() / 2; ++blk) {
                a.g.at(2 * blk + 0, 2 * blk + 1) = static_cast<std::uint8_t>(c0);
                a.g.at(2 * blk + 1, 2 * blk + 0) = 1;
                a.g.at(2 * blk + 1, 2 * blk + 1) = static_cast<std::uint8_t>(c1);
            }
            a.sigma = b.weyl().identity_automorphism();
            return a;
        }
    throw NoSuchGenerator("no primitive quadratic over GF(" + std::to_string(q) + ")");
}

BuildingAutomorphism sl3_example(const FlagBuilding& b, int a_param) {
    if (b.dim() != 3) throw InvalidType("sl3 example needs a projective plane");
    const GFq& F = b.field();
    std::uint8_t a = static_cast<std::uint8_t>(a_param % F.q());
    for (int x = 0; x < F.q(); ++x) {
        std::uint8_t xx = static_cast<std::uint8_t>(x);
        std::uint8_t v = F.add(F.mul(F.mul(xx, xx), xx),
                               F.sub(F.mul(a, F.mul(xx, xx)), 1));
        if (v == 0)
            throw ReduciblePolynomial("X^3+" + std::to_string(a_param) + "X^2-1 has the root " +
                                      std::to_string(x));
    }
    // theta = [[-a,0,1],[-1,0,0],[0,-1,0]]
    BuildingAutomorphism out;
    out.description = "sl3:" + std::to_string(a_param);
    out.g = GFMatrix::zero(3, 3);
    out.g.at(0, 0) = F.neg(a);
    out.g.at(0, 2) = 1;
    out.g.at(1, 0) = F.neg(1);
    out.g.at(2, 1) = F.neg(1);
    out.sigma = b.weyl().identity_automorphism();
    return out;
}

}  // namespace weyldisp
