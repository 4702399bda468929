#include "bohr/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace bohr {

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round12(double x) { return std::strtod(format_number(x).c_str(), nullptr); }

nlohmann::json to_json(const RadiusProblem& p) {
  nlohmann::json j;
  j["theorem"] = std::string(radius_id(p.kind));
  if (p.uses_K()) j["K"] = round12(p.K);
  if (p.uses_k()) j["k"] = round12(p.k);
  if (p.uses_n()) j["n"] = p.n;
  if (p.uses_a()) j["a"] = round12(p.a);
  return j;
}

nlohmann::json to_json(const RootCertificate& c) {
  nlohmann::json j;
  j["problem"] = c.problem ? to_json(*c.problem) : nlohmann::json(nullptr);
  j["lo"] = round12(c.lo);
  j["hi"] = round12(c.hi);
  j["root"] = round12(c.root);
  j["residual"] = round12(c.residual);
  j["iterations"] = c.iterations;
  j["monotone_checked"] = c.monotone_checked;
  return j;
}

nlohmann::json to_json(const BohrProfile& p) {
  nlohmann::json j;
  j["map_id"] = p.map_id;
  j["bound"] = round12(p.bound);
  auto rounded = [](const std::vector<double>& xs) {
    nlohmann::json arr = nlohmann::json::array();
    for (double x : xs) arr.push_back(round12(x));
    return arr;
  };
  j["r_grid"] = rounded(p.r_grid);
  j["partial_sums"] = rounded(p.partial_sums);
  j["tail_bounds"] = rounded(p.tail_bounds);
  nlohmann::json verdicts = nlohmann::json::array();
  for (bool v : p.verdicts) verdicts.push_back(v ? "pass" : "fail");
  j["verdicts"] = verdicts;
  return j;
}

nlohmann::json to_json(const std::vector<CampaignEntry>& entries) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : entries)
    arr.push_back({{"seed", e.seed}, {"map", e.map_id}, {"psi", e.psi}, {"worst_margin", round12(e.worst_margin)}});
  return arr;
}

std::string profile_csv(const BohrProfile& p) {
  std::ostringstream out;
  out << "r,partial_sum,tail_bound,bound,verdict\n";
  for (std::size_t i = 0; i < p.size(); ++i)
    out << format_number(p.r_grid[i]) << ',' << format_number(p.partial_sums[i]) << ','
        << format_number(p.tail_bounds[i]) << ',' << format_number(p.bound) << ','
        << (p.verdicts[i] ? "pass" : "fail") << '\n';
  return out.str();
}

std::string describe(const RadiusProblem& p) {
  std::string s = "theorem=" + std::string(radius_id(p.kind));
  if (p.uses_K()) s += " K=" + format_number(p.K);
  if (p.uses_k()) s += " k=" + format_number(p.k);
  if (p.uses_n()) s += " n=" + std::to_string(p.n);
  if (p.uses_a()) s += " a=" + format_number(p.a);
  return s;
}

}  // namespace bohr
