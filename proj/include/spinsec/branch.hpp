#pragma once

#include "spinsec/character.hpp"

namespace spinsec {

enum class BranchRule {
  DToD,  // so(2n) -> so(2n-2): drop the last coordinate
  DToB,  // so(2n+2) -> so(2n+1): drop the last coordinate
  BToD,  // so(2n+1) -> so(2n): same coordinates, smaller Weyl group
};

// Weight-level restriction of a character along the given rule.
DominantCharacter branch(const DominantCharacter& c, BranchRule rule);

// Restriction of V_{theta_i + theta_j} (i <= j) by the partition rule:
// the four partitions (2^i 1^{j-i}), (2^{i-1} 1^{j-i+1}), (2^i 1^{j-i-1}),
// (2^{i-1} 1^{j-i}), dropping over-length ones; for B->D a result of
// length n acquires its mirror as well. Returns the multiset of highest
// weights over the target datum.
std::vector<Weight> branch_partition_rule(int i, int j, int target_rank,
                                          BranchRule rule);

}  // namespace spinsec
