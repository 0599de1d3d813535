#pragma once

#include <json.hpp>

#include "weyldisp/counting.hpp"
#include "weyldisp/spectrum.hpp"
#include "weyldisp/twisted.hpp"

namespace weyldisp {

// {type, sigma, size, min_length, max_length, lower_J, upper_Jprime,
//  fix_rank, opp_rank, bicapped}
nlohmann::json class_report_json(const TwistedClass& c);

nlohmann::json count_report_json(const CountReport& rep,
                                 const std::vector<CountReport::Row>* rows = nullptr);
std::string count_report_csv(const std::vector<CountReport::Row>& rows);

nlohmann::json spectrum_report_json(const SpectrumReport& rep);

nlohmann::json classify_rows_json(const CoxeterSystem& sys,
                                  const std::vector<BicappedClassRow>& rows);

}  // namespace weyldisp
