#include "weyldisp/radical.hpp"

#include <sstream>

#include "weyldisp/errors.hpp"

namespace weyldisp {

namespace {

// squarefree decomposition n = s^2 * f by trial division; radicands here are
// small products of building parameters.
void squarefree_split(long n, long& square_root, long& free_part) {
    square_root = 1;
    free_part = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) square_root *= p;
        if (e % 2) free_part *= p;
    }
    free_part *= n;
}

}  // namespace

void RadicalNumber::add_term(long d, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        terms_[d] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

RadicalNumber RadicalNumber::sqrt_of(long d, const mpz_class& coeff) {
    if (d <= 0) throw InvalidType("sqrt of non-positive radicand");
    long s, f;
    squarefree_split(d, s, f);
    RadicalNumber out;
    out.add_term(f, coeff * s);
    return out;
}

mpz_class RadicalNumber::integer_value() const {
    if (terms_.empty()) return 0;
    if (terms_.size() != 1 || terms_.begin()->first != 1)
        throw InternalContradiction("radical is not rational: " + str());
    return terms_.begin()->second;
}

RadicalNumber RadicalNumber::operator+(const RadicalNumber& o) const {
    RadicalNumber out = *this;
    for (const auto& [d, c] : o.terms_) out.add_term(d, c);
    return out;
}

RadicalNumber RadicalNumber::operator-(const RadicalNumber& o) const {
    RadicalNumber out = *this;
    for (const auto& [d, c] : o.terms_) out.add_term(d, -c);
    return out;
}

RadicalNumber RadicalNumber::operator-() const {
    RadicalNumber out;
    for (const auto& [d, c] : terms_) out.terms_[d] = -c;
    return out;
}

RadicalNumber RadicalNumber::operator*(const RadicalNumber& o) const {
    RadicalNumber out;
    for (const auto& [d1, c1] : terms_) {
        for (const auto& [d2, c2] : o.terms_) {
            long s, f;
            squarefree_split(d1 * d2, s, f);
            out.add_term(f, c1 * c2 * s);
        }
    }
    return out;
}

RadicalNumber RadicalNumber::div_exact(const RadicalNumber& b) const {
    if (b.is_zero()) throw NotDivisible("division by zero");
    RadicalNumber num = *this;
    RadicalNumber den = b;
    // Rationalize: while the denominator has a radical term, conjugate at one
    // of its primes (sqrt(p) -> -sqrt(p) on every term containing p).
    while (!(den.terms_.size() == 1 && den.terms_.begin()->first == 1)) {
        long p = 0;
        for (const auto& [d, c] : den.terms_)
            if (d > 1) {
                for (long q = 2; q * q <= d; ++q)
                    if (d % q == 0) {
                        p = q;
                        break;
                    }
                if (!p) p = d;
                break;
            }
        RadicalNumber conj;
        for (const auto& [d, c] : den.terms_) conj.add_term(d, d % p == 0 ? -c : c);
        num = num * conj;
        den = den * conj;
        if (den.is_zero()) throw InternalContradiction("conjugate norm vanished");
    }
    if (den.terms_.begin()->second < 0) {
        den = -den;
        num = -num;
    }
    const mpz_class q = den.terms_.begin()->second;
    RadicalNumber out;
    for (const auto& [d, c] : num.terms_) {
        if (!mpz_divisible_p(c.get_mpz_t(), q.get_mpz_t())) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), q.get_mpz_t());
            std::ostringstream os;
            os << (c / g) << "/" << (q / g);
            if (d != 1) os << "*sqrt(" << d << ")";
            throw NotDivisible(os.str());
        }
        out.add_term(d, c / q);
    }
    if (!(out * b == *this)) throw InternalContradiction("exact division check failed");
    return out;
}

std::string RadicalNumber::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first && c > 0) os << "+";
        first = false;
        if (d == 1) {
            os << c;
        } else {
            if (c == -1) os << "-";
            else if (c != 1) os << c << "*";
            os << "sqrt(" << d << ")";
        }
    }
    return os.str();
}

}  // namespace weyldisp
