#pragma once

#include <vector>

#include "weyldisp/coxeter.hpp"
#include "weyldisp/radical.hpp"

namespace weyldisp {

// Per-generator positive integer parameters q_s, constant on generator
// conjugacy classes (otherwise q_w is ill-defined).
class ParameterMap {
  public:
    ParameterMap(const CoxeterSystem& sys, std::vector<long> q_per_gen);
    static ParameterMap uniform(const CoxeterSystem& sys, long q);

    long q(int s) const { return q_[s]; }
    const std::vector<long>& values() const { return q_; }
    bool uniform_value(long& q_out) const;

    // q_s = q_{s^sigma} for every generator.
    bool sigma_compatible(const DiagramAutomorphism& sigma) const;

    // q_{c} per generator class, ordered like CoxeterSystem::generator_classes().
    std::vector<long> class_values(const CoxeterSystem& sys) const;

  private:
    std::vector<long> q_;
};

// sqrt(q_w) from the (length, deg2) data of a class element.
RadicalNumber q_half_from_degrees(const std::vector<long>& class_q, int len, int deg2);

// sqrt(q_w) for an element, via a reduced word (well-defined because the
// parameters are constant on generator conjugacy classes).
RadicalNumber q_power_half(const CoxeterSystem& sys, const Element& w, const ParameterMap& params);

}  // namespace weyldisp
