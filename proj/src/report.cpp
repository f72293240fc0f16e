#include "spinsec/report.hpp"

namespace spinsec {

bool RunReport::all_passed() const {
  for (const auto& c : checks)
    if (c.status == "fail") return false;
  return true;
}

void RunReport::add(const std::string& name, bool ok, const std::string& detail,
                    double seconds) {
  checks.push_back({name, ok ? "pass" : "fail", detail, seconds});
}

void RunReport::skip(const std::string& name, const std::string& reason) {
  checks.push_back({name, "skip", reason, 0.0});
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json payload;
  payload["command"] = command;
  payload["seed"] = seed;
  payload["config"] = config;
  auto arr = nlohmann::json::array();
  for (const auto& c : checks)
    arr.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
  payload["checks"] = std::move(arr);
  payload["passed"] = all_passed();

  nlohmann::json timings;
  timings["total_seconds"] = total_seconds;
  auto tarr = nlohmann::json::array();
  for (const auto& c : checks)
    tarr.push_back({{"name", c.name}, {"seconds", c.seconds}});
  timings["checks"] = std::move(tarr);

  nlohmann::json j;
  j["payload"] = std::move(payload);
  j["threads"] = threads;
  j["timings"] = std::move(timings);
  return j;
}

}  // namespace spinsec
