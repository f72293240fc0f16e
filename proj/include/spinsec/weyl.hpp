#pragma once

#include <vector>

#include "spinsec/exact.hpp"

namespace spinsec {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

// Weights in doubled epsilon coordinates: every entry is twice the true
// coordinate, so spin weights stay integral. Type A is realized on rank+1
// coordinates (weights defined up to the all-ones vector; we keep the
// representative the construction hands us, which is constant on each
// module).
using Weight = std::vector<int>;

Weight weight_add(const Weight& a, const Weight& b);
Weight weight_sub(const Weight& a, const Weight& b);
Weight weight_scale(int k, const Weight& a);
long long weight_ip(const Weight& a, const Weight& b);
std::string weight_str(const Weight& w);

struct RootDatum {
  Family family;
  int rank;

  bool operator==(const RootDatum&) const = default;
  int ncoords() const { return family == Family::A ? rank + 1 : rank; }

  Weight zero() const { return Weight(ncoords(), 0); }
  // fundamental weight (doubled), 1-based index
  Weight fundamental(int i) const;
  // theta_i = e_1 + ... + e_i (doubled); theta_0 = 0
  Weight theta(int i) const;
  Weight rho() const;
  std::vector<Weight> positive_roots() const;

  bool is_dominant(const Weight& w) const;
  Weight dominate(const Weight& w) const;
  Int orbit_size(const Weight& dominant) const;
  std::vector<Weight> orbit(const Weight& dominant) const;

  // lambda - mu lies in the nonnegative span of the simple roots
  bool dominates(const Weight& lambda, const Weight& mu) const;

  // weight of the mirrored module under the outer flip (type D: negate
  // the last coordinate); identity for other families
  Weight mirror(const Weight& w) const;
};

}  // namespace spinsec
