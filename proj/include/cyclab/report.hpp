#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace cyclab {

/// Outcome of a verification. Serializes to
/// {"check","params","lhs_dims","rhs_dims","verdict","seed","details"}.
struct CheckReport {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  std::vector<long long> lhs_dims;
  std::vector<long long> rhs_dims;
  bool verdict = true;
  std::uint64_t seed = 0;
  std::vector<std::string> details;

  /// Records a failure with a witness message.
  void fail(std::string why) {
    verdict = false;
    details.push_back(std::move(why));
  }
  /// Folds a sub-check into this one.
  void absorb(const CheckReport& sub);
};

nlohmann::json to_json(const CheckReport& r);
CheckReport report_from_json(const nlohmann::json& j);

}  // namespace cyclab
