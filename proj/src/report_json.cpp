#include "weyldisp/report_json.hpp"

#include <sstream>

#include "weyldisp/errors.hpp"

namespace weyldisp {

namespace {
std::string sigma_name(const CoxeterSystem& sys, const DiagramAutomorphism& sigma) {
    if (sigma.is_identity()) return "id";
    std::ostringstream os;
    for (std::size_t i = 0; i < sigma.node_perm.size(); ++i) {
        if (i) os << ',';
        os << sigma.node_perm[i] + 1;
    }
    return os.str();
}

std::vector<int> one_based(const std::vector<int>& v) {
    std::vector<int> out;
    for (int x : v) out.push_back(x + 1);
    return out;
}
}  // namespace

nlohmann::json class_report_json(const TwistedClass& c) {
    const CoxeterSystem& sys = c.system();
    nlohmann::json j;
    j["type"] = sys.spec().name();
    j["sigma"] = sigma_name(sys, c.sigma());
    j["size"] = c.size();
    j["min_length"] = c.min_length();
    j["max_length"] = c.max_length();
    j["involution_class"] = c.all_involutions();
    if (c.all_involutions()) {
        CapCertificate cert = cap_certificate(c);
        j["bicapped"] = cert.bicapped();
        j["fix_rank"] = cert.fix_rank;
        j["opp_rank"] = cert.opp_rank;
        j["lower_J"] = cert.lower_J ? nlohmann::json(one_based(*cert.lower_J)) : nlohmann::json();
        j["upper_Jprime"] =
            cert.upper_Jprime ? nlohmann::json(one_based(*cert.upper_Jprime)) : nlohmann::json();
    } else {
        j["bicapped"] = false;
        j["lower_J"] = nullptr;
        j["upper_Jprime"] = nullptr;
    }
    return j;
}

nlohmann::json count_report_json(const CountReport& rep,
                                 const std::vector<CountReport::Row>* rows) {
    nlohmann::json j;
    j["class"] = rep.class_description;
    j["integral"] = rep.integral;
    j["witness"] = rep.witness;
    j["chambers"] = rep.total_chambers.get_str();
    j["class_sum"] = rep.class_sum_value.str();
    j["strata"] = nlohmann::json::array();
    for (const auto& st : rep.strata) {
        j["strata"].push_back({{"length", st.length},
                               {"elements", st.elements},
                               {"q_half", st.q_half.str()},
                               {"count", st.count.str()}});
    }
    if (rows) {
        j["rows"] = nlohmann::json::array();
        for (const auto& r : *rows)
            j["rows"].push_back({{"word", r.word},
                                 {"length", r.length},
                                 {"q_half", r.q_half},
                                 {"count", r.count}});
    }
    return j;
}

std::string count_report_csv(const std::vector<CountReport::Row>& rows) {
    std::ostringstream os;
    os << "word,length,q_w_half,count\n";
    for (const auto& r : rows)
        os << '"' << r.word << "\"," << r.length << ',' << r.q_half << ',' << r.count << '\n';
    return os.str();
}

nlohmann::json spectrum_report_json(const SpectrumReport& rep) {
    nlohmann::json j;
    j["model"] = rep.model;
    j["automorphism"] = rep.automorphism;
    j["exhaustive"] = rep.exhaustive;
    if (rep.seed) j["seed"] = *rep.seed;
    j["chambers"] = rep.chambers_visited;
    j["spectrum"] = nlohmann::json::array();
    for (const auto& e : rep.spectrum)
        j["spectrum"].push_back(
            {{"word", e.word}, {"length", e.length}, {"count", e.count.get_str()}});
    j["verdicts"] = {{"upward_closed", rep.verdicts.upward_closed},
                     {"union_of_classes", rep.verdicts.union_of_classes},
                     {"uniclass", rep.verdicts.uniclass},
                     {"contains_involution", rep.verdicts.contains_involution},
                     {"contains_sigma_involution", rep.verdicts.contains_sigma_involution},
                     {"fixed_diagram", rep.verdicts.fixed_diagram},
                     {"opposition_diagram", rep.verdicts.opposition_diagram},
                     {"opp_equals_psi_fix", rep.verdicts.opp_equals_psi_fix}};
    return j;
}

nlohmann::json classify_rows_json(const CoxeterSystem& sys,
                                  const std::vector<BicappedClassRow>& rows) {
    nlohmann::json j;
    j["type"] = sys.spec().name();
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
        j["rows"].push_back({{"symbol", r.symbol},
                             {"dual_symbol", r.dual_symbol},
                             {"relative_type", r.relative_type},
                             {"dual_relative_type", r.dual_relative_type},
                             {"fix_rank", r.fix_rank},
                             {"opp_rank", r.opp_rank},
                             {"size", r.size},
                             {"min_length", r.min_length},
                             {"max_length", r.max_length},
                             {"lower_J", one_based(r.lower_J)},
                             {"upper_Jprime", one_based(r.upper_Jprime)}});
    }
    return j;
}

}  // namespace weyldisp
