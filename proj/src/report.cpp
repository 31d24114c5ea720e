#include "cyclab/report.hpp"

#include "cyclab/errors.hpp"

namespace cyclab {

void CheckReport::absorb(const CheckReport& sub) {
  if (!sub.verdict) verdict = false;
  for (const auto& d : sub.details) details.push_back(sub.check + ": " + d);
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json out;
  out["check"] = r.check;
  out["params"] = r.params;
  out["lhs_dims"] = r.lhs_dims;
  out["rhs_dims"] = r.rhs_dims;
  out["verdict"] = r.verdict;
  out["seed"] = r.seed;
  out["details"] = r.details;
  return out;
}

CheckReport report_from_json(const nlohmann::json& j) {
  try {
    CheckReport r;
    r.check = j.at("check").get<std::string>();
    r.params = j.value("params", nlohmann::json::object());
    r.lhs_dims = j.value("lhs_dims", std::vector<long long>{});
    r.rhs_dims = j.value("rhs_dims", std::vector<long long>{});
    r.verdict = j.at("verdict").get<bool>();
    r.seed = j.value("seed", std::uint64_t{0});
    r.details = j.value("details", std::vector<std::string>{});
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
}

}  // namespace cyclab
