#include "weyldisp/gfq.hpp"

#include "weyldisp/errors.hpp"

namespace weyldisp {

GFq::GFq(int q) : q_(q) {
    if (q == 4) {
        // elements 0, 1, w, w^2 encoded 0..3; w^2 = w + 1
        auto x4 = [](std::uint8_t a, std::uint8_t b) {  // bitwise addition of polynomials
            return static_cast<std::uint8_t>(a ^ b);
        };
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) add_[a][b] = x4(a, b);
        auto pm = [](int a, int b) {
            // multiply polynomials a1*x+a0, b1*x+b0 mod x^2+x+1, bit encoding (a1,a0)
            int a1 = a >> 1, a0 = a & 1, b1 = b >> 1, b0 = b & 1;
            int c2 = a1 & b1, c1 = (a1 & b0) ^ (a0 & b1), c0 = a0 & b0;
            c1 ^= c2;
            c0 ^= c2;  // x^2 = x + 1
            return (c1 << 1) | c0;
        };
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) mul_[a][b] = static_cast<std::uint8_t>(pm(a, b));
        for (int a = 0; a < 4; ++a) neg_[a] = static_cast<std::uint8_t>(a);
    } else if (q == 2 || q == 3 || q == 5) {
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                add_[a][b] = static_cast<std::uint8_t>((a + b) % q);
                mul_[a][b] = static_cast<std::uint8_t>((a * b) % q);
            }
        for (int a = 0; a < q; ++a) neg_[a] = static_cast<std::uint8_t>((q - a) % q);
    } else {
        throw InvalidType("unsupported field order " + std::to_string(q));
    }
    inv_[0] = 0;
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[a][b] == 1) inv_[a] = static_cast<std::uint8_t>(b);
}

GFMatrix GFMatrix::zero(int r, int c) {
    GFMatrix m;
    m.rows = r;
    m.cols = c;
    return m;
}

GFMatrix GFMatrix::eye(int n) {
    GFMatrix m = zero(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

GFMatrix gf_mul(const GFq& F, const GFMatrix& x, const GFMatrix& y) {
    GFMatrix out = GFMatrix::zero(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            std::uint8_t v = x.at(i, k);
            if (!v) continue;
            for (int j = 0; j < y.cols; ++j)
                out.at(i, j) = F.add(out.at(i, j), F.mul(v, y.at(k, j)));
        }
    return out;
}

int gf_rank(const GFq& F, GFMatrix m) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col)) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        for (int c = 0; c < m.cols; ++c) std::swap(m.a[rank * m.cols + c], m.a[piv * m.cols + c]);
        std::uint8_t inv = F.inv(m.at(rank, col));
        for (int c = 0; c < m.cols; ++c) m.at(rank, c) = F.mul(m.at(rank, c), inv);
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank || !m.at(r, col)) continue;
            std::uint8_t f = m.at(r, col);
            for (int c = 0; c < m.cols; ++c)
                m.at(r, c) = F.sub(m.at(r, c), F.mul(f, m.at(rank, c)));
        }
        ++rank;
    }
    return rank;
}

GFMatrix gf_inverse(const GFq& F, const GFMatrix& m) {
    const int n = m.rows;
    GFMatrix aug = GFMatrix::zero(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    int rank = 0;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (aug.at(r, col)) {
                piv = r;
                break;
            }
        if (piv < 0) throw InvalidType("singular matrix");
        for (int c = 0; c < 2 * n; ++c) std::swap(aug.a[rank * 2 * n + c], aug.a[piv * 2 * n + c]);
        std::uint8_t inv = F.inv(aug.at(rank, col));
        for (int c = 0; c < 2 * n; ++c) aug.at(rank, c) = F.mul(aug.at(rank, c), inv);
        for (int r = 0; r < n; ++r) {
            if (r == rank || !aug.at(r, col)) continue;
            std::uint8_t f = aug.at(r, col);
            for (int c = 0; c < 2 * n; ++c)
                aug.at(r, c) = F.sub(aug.at(r, c), F.mul(f, aug.at(rank, c)));
        }
        ++rank;
    }
    GFMatrix out = GFMatrix::zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
}

GFMatrix gf_kernel(const GFq& F, const GFMatrix& m) {
    GFMatrix r = m;
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < r.cols && rank < r.rows; ++col) {
        int piv = -1;
        for (int row = rank; row < r.rows; ++row)
            if (r.at(row, col)) {
                piv = row;
                break;
            }
        if (piv < 0) continue;
        for (int c = 0; c < r.cols; ++c) std::swap(r.a[rank * r.cols + c], r.a[piv * r.cols + c]);
        std::uint8_t inv = F.inv(r.at(rank, col));
        for (int c = 0; c < r.cols; ++c) r.at(rank, c) = F.mul(r.at(rank, c), inv);
        for (int row = 0; row < r.rows; ++row) {
            if (row == rank || !r.at(row, col)) continue;
            std::uint8_t f = r.at(row, col);
            for (int c = 0; c < r.cols; ++c)
                r.at(row, c) = F.sub(r.at(row, c), F.mul(f, r.at(rank, c)));
        }
        pivot_col.push_back(col);
        ++rank;
    }
    GFMatrix ker = GFMatrix::zero(r.cols - rank, r.cols);
    int k = 0;
    for (int col = 0; col < r.cols; ++col) {
        if (std::find(pivot_col.begin(), pivot_col.end(), col) != pivot_col.end()) continue;
        ker.at(k, col) = 1;
        for (int row = 0; row < rank; ++row)
            ker.at(k, pivot_col[row]) = F.neg(r.at(row, col));
        ++k;
    }
    return ker;
}

}  // namespace weyldisp
