#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

namespace spinsec {

// Aggregated result of a verification run; exit code 0 iff nothing failed.
struct RunReport {
  struct Check {
    std::string name;
    std::string status;  // "pass" | "fail" | "skip"
    std::string detail;
    double seconds = 0.0;
  };

  std::string command;
  unsigned long long seed = 0;
  int threads = 1;
  nlohmann::json config;
  std::vector<Check> checks;
  double total_seconds = 0.0;

  bool all_passed() const;
  void add(const std::string& name, bool ok, const std::string& detail = "",
           double seconds = 0.0);
  void skip(const std::string& name, const std::string& reason);
  // payload section is byte-stable for a fixed seed; timings live apart
  nlohmann::json to_json() const;
};

class CheckTimer {
 public:
  CheckTimer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace spinsec
