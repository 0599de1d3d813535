#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace weyldisp {

// Exact number of the form sum c_d sqrt(d), d squarefree positive, c_d
// arbitrary-precision integers. d = 1 carries the rational part. Zero
// coefficients are never stored.
class RadicalNumber {
  public:
    RadicalNumber() = default;
    RadicalNumber(long v) { *this = RadicalNumber(mpz_class(v)); }
    explicit RadicalNumber(const mpz_class& v) {
        if (v != 0) terms_[1] = v;
    }
    static RadicalNumber sqrt_of(long d, const mpz_class& coeff = 1);

    const std::map<long, mpz_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_integer() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1); }
    mpz_class integer_value() const;  // requires is_integer()

    RadicalNumber operator+(const RadicalNumber&) const;
    RadicalNumber operator-(const RadicalNumber&) const;
    RadicalNumber operator-() const;
    RadicalNumber operator*(const RadicalNumber&) const;
    RadicalNumber& operator+=(const RadicalNumber& o) { return *this = *this + o; }
    RadicalNumber& operator*=(const RadicalNumber& o) { return *this = *this * o; }
    bool operator==(const RadicalNumber& o) const { return terms_ == o.terms_; }
    bool operator!=(const RadicalNumber& o) const { return terms_ != o.terms_; }

    // Exact division in the ring: throws NotDivisible when the quotient does
    // not have integer coordinates over the occurring radicals. That failure
    // is meaningful output, not an error state.
    RadicalNumber div_exact(const RadicalNumber& b) const;

    std::string str() const;  // e.g. "17*sqrt(2)", "105", "3+2*sqrt(5)"

  private:
    std::map<long, mpz_class> terms_;
    void add_term(long d, const mpz_class& c);
    friend RadicalNumber sqrt_times(long d, const mpz_class& c);
};

}  // namespace weyldisp
