#pragma once

#include "spinsec/report.hpp"

namespace spinsec {

// Named verification suites behind the command line `verify` command:
// pfaffian | beta | cubics | quartics | freudenthal | toy | all.
RunReport run_suite(const std::string& suite, int max_rank, int trials,
                    unsigned long long seed, int threads);

// One acceptance criterion (1..12); prints one pass/fail line and returns
// true on pass. `detail` receives the full explanation.
bool run_acceptance_criterion(int criterion, std::ostream& out);

inline constexpr int kAcceptanceCriteria = 12;

}  // namespace spinsec
