#include "weyldisp/counting.hpp"

#include <algorithm>
#include <unordered_set>

#include "weyldisp/errors.hpp"

namespace weyldisp {

namespace {

mpz_class pow_z(long q, int e) {
    mpz_class out = 1;
    for (int i = 0; i < e; ++i) out *= q;
    return out;
}

mpz_class product_formula(const TypeSpec& t, long q) {
    mpz_class out = 1;
    for (int d : degrees(t)) {
        mpz_class num = pow_z(q, d) - 1;
        mpz_class den = q - 1;
        if (q == 1) {
            out *= d;  // limit q->1 gives the degree
        } else {
            out *= num / den;
        }
    }
    return out;
}

// B_n(q,Q) = [n]_q! * prod_{i=0}^{n-1} (1 + q^i Q), q on the long simple
// roots s_1..s_{n-1}, Q on s_n.
mpz_class bn_two_variable(int n, long q, long Q) {
    mpz_class out = 1;
    for (int i = 1; i <= n; ++i) {
        mpz_class f = 0;
        for (int e = 0; e < i; ++e) f += pow_z(q, e);
        out *= f;
    }
    for (int i = 0; i < n; ++i) out *= 1 + pow_z(q, i) * Q;
    return out;
}

}  // namespace

mpz_class poincare_summation(const CoxeterSystem& sys, const ParameterMap& params,
                             const std::vector<int>& J, std::size_t max_elements) {
    const int N = sys.positive_count();
    std::unordered_set<ElementKey, ElementKeyHash> seen;
    struct Node {
        Element el;
        mpz_class qw;
    };
    std::vector<Node> frontier;
    frontier.push_back(Node{sys.identity(), 1});
    seen.insert(sys.key_of(frontier[0].el));
    mpz_class total = 0;
    std::vector<Node> next;
    while (!frontier.empty()) {
        next.clear();
        for (const Node& node : frontier) {
            total += node.qw;
            for (int s : J) {
                if (node.el.perm[s] >= static_cast<RootIndex>(N)) continue;  // descent: seen before
                Element y = sys.multiply(node.el, sys.generator(s));
                if (!seen.insert(sys.key_of(y)).second) continue;
                if (seen.size() > max_elements) throw ClassTooLarge(max_elements);
                next.push_back(Node{std::move(y), node.qw * params.q(s)});
            }
        }
        frontier.swap(next);
    }
    return total;
}

mpz_class poincare_summation(const CoxeterSystem& sys, const ParameterMap& params,
                             std::size_t max_elements) {
    std::vector<int> all(sys.rank());
    for (int i = 0; i < sys.rank(); ++i) all[i] = i;
    return poincare_summation(sys, params, all, max_elements);
}

mpz_class poincare(const CoxeterSystem& sys, const ParameterMap& params) {
    long q;
    if (params.uniform_value(q)) return product_formula(sys.spec(), q);
    const TypeSpec& t = sys.spec();
    if (t.family == Family::B) {
        return bn_two_variable(t.rank, params.q(0), params.q(t.rank - 1));
    }
    // remaining unequal-parameter cases (F4, I2(even)) are small groups
    if (group_order(t) > 10000000ULL)
        throw InvalidType("no product formula for unequal parameters on " + t.name());
    return poincare_summation(sys, params);
}

RadicalNumber class_sum(const TwistedClass& c, const ParameterMap& params) {
    auto class_q = params.class_values(c.system());
    RadicalNumber out;
    for (const auto& [len, deg2, count] : c.strata()) {
        RadicalNumber qh = q_half_from_degrees(class_q, len, deg2);
        out += qh * RadicalNumber(mpz_class(static_cast<unsigned long>(count)));
    }
    return out;
}

CountReport counts_uniclass(const TwistedClass& c, const ParameterMap& params) {
    if (!c.all_involutions()) throw NotInvolutionClass();
    if (!params.sigma_compatible(c.sigma()))
        throw InvalidType("parameters are not sigma-compatible");
    const CoxeterSystem& sys = c.system();
    auto class_q = params.class_values(sys);

    CountReport rep;
    rep.total_chambers = poincare(sys, params);
    rep.class_sum_value = class_sum(c, params);

    mpz_class check_total = 0;
    for (const auto& [len, deg2, count] : c.strata()) {
        CountStratum st;
        st.length = len;
        st.deg2 = deg2;
        st.elements = count;
        st.q_half = q_half_from_degrees(class_q, len, deg2);
        try {
            st.count = (RadicalNumber(rep.total_chambers) * st.q_half)
                           .div_exact(rep.class_sum_value);
            if (!st.count.is_integer()) {
                rep.integral = false;
                if (rep.witness.empty())
                    rep.witness = "|Delta_w| = " + st.count.str() + " at length " +
                                  std::to_string(len) + " is not an integer";
            } else {
                check_total += st.count.integer_value() * static_cast<unsigned long>(count);
            }
        } catch (const NotDivisible& e) {
            rep.integral = false;
            if (rep.witness.empty())
                rep.witness = "|Delta_w| = " + e.witness + " at length " + std::to_string(len);
        }
        rep.strata.push_back(std::move(st));
    }
    if (rep.integral && check_total != rep.total_chambers)
        throw InternalContradiction("sum of counts over the class differs from W(q)");
    return rep;
}

std::vector<CountReport::Row> count_rows(const TwistedClass& c, const ParameterMap& params,
                                         const CountReport& report) {
    const CoxeterSystem& sys = c.system();
    auto class_q = params.class_values(sys);
    std::vector<CountReport::Row> rows;
    for (const ClassElement& e : c.elements()) {
        CountReport::Row row;
        row.word = sys.word_string(sys.element_of(e.key));
        row.length = e.len;
        RadicalNumber qh = q_half_from_degrees(class_q, e.len, e.deg2);
        row.q_half = qh.str();
        for (const CountStratum& st : report.strata)
            if (st.length == e.len && st.deg2 == e.deg2) {
                row.count = st.count.str();
                break;
            }
        rows.push_back(std::move(row));
    }
    return rows;
}

SubstructureCounts counts_substructure(const TwistedClass& c, const ParameterMap& params,
                                       const CoxeterSystem& sub_system,
                                       const ParameterMap& sub_params) {
    const CoxeterSystem& sys = c.system();
    CapCertificate cert = cap_certificate(c);
    if (!cert.lower_J) throw CapMissing();
    const std::vector<int>& J = *cert.lower_J;
    Element wJ = sys.longest_element(J);

    mpz_class WJ = poincare_summation(sys, params, J);
    mpz_class Wsub = poincare(sub_system, sub_params);
    auto class_q = params.class_values(sys);

    int lenJ = sys.length(wJ), deg2J = 0;
    for (int s : sys.reduced_word(wJ)) deg2J += sys.generator_class_of(s - 1) != 0 ? 1 : 0;
    RadicalNumber qJ_half = q_half_from_degrees(class_q, lenJ, deg2J);

    SubstructureCounts out;
    out.report.total_chambers = poincare(sys, params);
    out.report.class_sum_value = class_sum(c, params);
    mpz_class check_total = 0;
    for (const auto& [len, deg2, count] : c.strata()) {
        CountStratum st;
        st.length = len;
        st.deg2 = deg2;
        st.elements = count;
        st.q_half = q_half_from_degrees(class_q, len, deg2);
        RadicalNumber ratio = st.q_half.div_exact(qJ_half);  // q_v, an integer
        st.count = RadicalNumber(WJ * Wsub) * ratio;
        if (!st.count.is_integer())
            throw InternalContradiction("substructure count is not an integer");
        check_total += st.count.integer_value() * static_cast<unsigned long>(count);
        out.report.strata.push_back(std::move(st));
    }
    out.derived_class_sum =
        (RadicalNumber(out.report.total_chambers) * qJ_half).div_exact(RadicalNumber(WJ * Wsub));
    if (out.derived_class_sum != out.report.class_sum_value)
        throw InternalContradiction("derived class sum " + out.derived_class_sum.str() +
                                    " differs from the enumerated class sum " +
                                    out.report.class_sum_value.str());
    if (check_total != out.report.total_chambers)
        throw InternalContradiction("substructure counts do not sum to W(q)");
    out.report.integral = true;
    return out;
}

std::vector<WeylSubstructureRow> finite_ws_rows(const CoxeterSystem& sys,
                                                const ParameterMap& params) {
    const TypeSpec& t = sys.spec();
    const int n = t.rank;
    std::vector<WeylSubstructureRow> rows;
    long qu = 0;
    const bool uniform = params.uniform_value(qu);
    auto odd_power_of = [](long q, long p) {
        if (q < p) return false;
        int e = 0;
        while (q % p == 0) {
            q /= p;
            ++e;
        }
        return q == 1 && e % 2 == 1;
    };
    auto vec = [](std::initializer_list<long> v) { return std::vector<long>(v); };

    switch (t.family) {
        case Family::A:
            if (uniform && n >= 3 && n % 2 == 1) {
                long m = (n + 1) / 2;
                rows.push_back({"B" + std::to_string(m), std::vector<long>(m, qu), "symplectic polar space"});
                if (m >= 2)
                    rows.push_back({m - 1 == 1 ? "A1" : "A" + std::to_string(m - 1),
                                    std::vector<long>(m - 1, qu * qu), "composition line spread"});
            }
            break;
        case Family::B: {
            long qs = params.q(0), qt = params.q(n - 1);
            if (qs == qt && qs % 2 == 1) {
                std::vector<long> p(n - 1, qs);
                if (!p.empty()) p.back() = qs * qs;
                rows.push_back({n - 1 == 1 ? "A1" : "B" + std::to_string(n - 1), p,
                                "parabolic ideal subspace, q odd"});
            }
            if (n % 2 == 0 && qs == qt && qs % 2 == 1) {
                rows.push_back({"B" + std::to_string(n / 2), std::vector<long>(n / 2, qs * qs),
                                "symplectic composition line spread, q odd"});
            }
            if (n % 2 == 0 && qt == qs * qs) {
                std::vector<long> p(n / 2, qs * qs);
                p.back() = qs * qs * qs;
                rows.push_back({"B" + std::to_string(n / 2), p, "elliptic composition line spread"});
            }
            break;
        }
        case Family::D:
            if (uniform) {
                std::vector<long> p(n - 1, qu);
                rows.push_back({"B" + std::to_string(n - 1), p, "parabolic ideal subspace"});
                if (n >= 3) {
                    std::vector<long> p2(n - 2, qu);
                    if (!p2.empty()) p2.back() = qu * qu;
                    rows.push_back({n - 2 == 1 ? "A1" : "B" + std::to_string(n - 2), p2,
                                    "elliptic ideal subspace"});
                }
                if (n % 2 == 0) {
                    std::vector<long> p3(n / 2, qu * qu);
                    p3.back() = qu;
                    rows.push_back({"B" + std::to_string(n / 2), p3, "composition line spread"});
                }
            }
            break;
        case Family::E:
            if (uniform && n == 6)
                rows.push_back({"F4", vec({qu, qu, qu, qu}), "standard split metasymplectic space (polarity)"});
            if (uniform && n == 7)
                rows.push_back({"F4", vec({qu, qu, qu * qu, qu * qu}), "partial composition spread"});
            break;
        case Family::F:
            if (uniform && odd_power_of(qu, 2))
                rows.push_back({"I2(8)", vec({qu, qu * qu}), "Ree-Tits octagon (polarity)"});
            break;
        case Family::I2:
            // the Suzuki ovoid has q^2 + 1 points, so the fixed rank-1
            // structure carries the parameter q^2
            if (t.m == 4 && uniform && odd_power_of(qu, 2))
                rows.push_back({"A1", vec({qu * qu}), "Suzuki ovoid-spread pairing (polarity)"});
            if (t.m == 6 && uniform) {
                if (qu % 3 == 2)
                    rows.push_back({"A1", vec({qu * qu * qu}), "hexagon ovoid or spread, q = 2 mod 3"});
                if (odd_power_of(qu, 3))
                    rows.push_back({"A1", vec({qu * qu * qu}), "Ree hexagon ovoid-spread pairing (polarity)"});
            }
            break;
        case Family::H:
            break;
    }
    return rows;
}

}  // namespace weyldisp
