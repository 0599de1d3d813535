#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace weyldisp {

// GF(q) for q in {2,3,4,5}: table-driven throughout (GF(4) from the
// polynomial model x^2 = x + 1, prime fields from modular arithmetic).
class GFq {
  public:
    explicit GFq(int q);
    int q() const { return q_; }
    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a][b]; }
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add_[a][neg_[b]]; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a][b]; }
    std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
    std::uint8_t inv(std::uint8_t a) const { return inv_[a]; }

  private:
    int q_;
    std::array<std::array<std::uint8_t, 5>, 5> add_{};
    std::array<std::array<std::uint8_t, 5>, 5> mul_{};
    std::array<std::uint8_t, 5> neg_{};
    std::array<std::uint8_t, 5> inv_{};
};

// Dense row-major matrix over GF(q); dimensions stay <= 8, except for the
// 16-row stacks and augmented matrices used inside rank and inverse.
struct GFMatrix {
    int rows{0};
    int cols{0};
    std::array<std::uint8_t, 128> a{};

    std::uint8_t& at(int r, int c) { return a[r * cols + c]; }
    std::uint8_t at(int r, int c) const { return a[r * cols + c]; }
    static GFMatrix zero(int r, int c);
    static GFMatrix eye(int n);
    bool operator==(const GFMatrix& o) const = default;
};

GFMatrix gf_mul(const GFq& F, const GFMatrix& x, const GFMatrix& y);
int gf_rank(const GFq& F, GFMatrix m);
GFMatrix gf_inverse(const GFq& F, const GFMatrix& m);  // throws on singular
// Basis of the right kernel {x : m x^T = 0}, rows of the result.
GFMatrix gf_kernel(const GFq& F, const GFMatrix& m);

}  // namespace weyldisp
