#include "weyldisp/params.hpp"

#include "weyldisp/errors.hpp"

namespace weyldisp {

ParameterMap::ParameterMap(const CoxeterSystem& sys, std::vector<long> q_per_gen)
    : q_(std::move(q_per_gen)) {
    if (static_cast<int>(q_.size()) != sys.rank()) throw InvalidType("parameter count");
    for (long v : q_)
        if (v < 1) throw InvalidType("parameters must be positive");
    for (const auto& cls : sys.generator_classes())
        for (int s : cls)
            if (q_[s] != q_[cls.front()])
                throw InvalidType("parameters must be constant on generator conjugacy classes");
}

ParameterMap ParameterMap::uniform(const CoxeterSystem& sys, long q) {
    return ParameterMap(sys, std::vector<long>(sys.rank(), q));
}

bool ParameterMap::uniform_value(long& q_out) const {
    for (long v : q_)
        if (v != q_.front()) return false;
    q_out = q_.front();
    return true;
}

bool ParameterMap::sigma_compatible(const DiagramAutomorphism& sigma) const {
    for (std::size_t s = 0; s < q_.size(); ++s)
        if (q_[s] != q_[sigma.node_perm[s]]) return false;
    return true;
}

std::vector<long> ParameterMap::class_values(const CoxeterSystem& sys) const {
    std::vector<long> out;
    for (const auto& cls : sys.generator_classes()) out.push_back(q_[cls.front()]);
    return out;
}

RadicalNumber q_power_half(const CoxeterSystem& sys, const Element& w,
                           const ParameterMap& params) {
    int deg2 = 0;
    auto word = sys.reduced_word(w);
    for (int s : word) deg2 += sys.generator_class_of(s - 1) != 0 ? 1 : 0;
    return q_half_from_degrees(params.class_values(sys), static_cast<int>(word.size()), deg2);
}

RadicalNumber q_half_from_degrees(const std::vector<long>& class_q, int len, int deg2) {
    const int deg1 = len - deg2;
    mpz_class rat = 1;
    long rad = 1;
    auto mul_pow = [&](long q, int e) {
        for (int i = 0; i < e / 2; ++i) rat *= q;
        if (e % 2) rad *= q;
    };
    mul_pow(class_q[0], deg1);
    if (deg2) mul_pow(class_q.size() > 1 ? class_q[1] : class_q[0], deg2);
    return RadicalNumber::sqrt_of(rad, rat);
}

}  // namespace weyldisp
