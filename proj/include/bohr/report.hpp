#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bohr/bohr_sum.hpp"
#include "bohr/radius_solver.hpp"
#include "bohr/subordination.hpp"

namespace bohr {

/// 12 significant digits, "%.12g".
std::string format_number(double x);
/// x rounded to 12 significant digits, for JSON output.
double round12(double x);

nlohmann::json to_json(const RadiusProblem& p);
nlohmann::json to_json(const RootCertificate& c);
nlohmann::json to_json(const BohrProfile& p);
nlohmann::json to_json(const std::vector<CampaignEntry>& entries);

/// Columns r, partial_sum, tail_bound, bound, verdict.
std::string profile_csv(const BohrProfile& p);

/// One line: "theorem=<id> K=<K> ..." with only the parameters the kind uses.
std::string describe(const RadiusProblem& p);

}  // namespace bohr
