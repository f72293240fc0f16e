#include "spinsec/branch.hpp"

#include <algorithm>

namespace spinsec {

namespace {

RootDatum target_datum(const RootDatum& src, BranchRule rule) {
  switch (rule) {
    case BranchRule::DToD:
      if (src.family != Family::D || src.rank < 3)
        throw std::invalid_argument("branch: need D_n with n >= 3");
      return {Family::D, src.rank - 1};
    case BranchRule::DToB:
      if (src.family != Family::D || src.rank < 2)
        throw std::invalid_argument("branch: need D_{n+1} with n >= 1");
      return {Family::B, src.rank - 1};
    case BranchRule::BToD:
      if (src.family != Family::B || src.rank < 2)
        throw std::invalid_argument("branch: need B_n with n >= 2");
      return {Family::D, src.rank};
  }
  throw std::logic_error("unreachable");
}

}  // namespace

DominantCharacter branch(const DominantCharacter& c, BranchRule rule) {
  const RootDatum tgt = target_datum(c.datum, rule);
  DominantCharacter r(tgt);
  const bool drop_last = rule != BranchRule::BToD;
  for (const auto& [lam, m] : c.mults) {
    for (const Weight& x : c.datum.orbit(lam)) {
      Weight y = x;
      if (drop_last) y.pop_back();
      if (tgt.is_dominant(y)) r.add(y, m);
    }
  }
  return r;
}

std::vector<Weight> branch_partition_rule(int i, int j, int target_rank,
                                          BranchRule rule) {
  if (rule == BranchRule::DToD)
    throw std::invalid_argument("branch_partition_rule: use DToB or BToD");
  if (i < 0 || j < i)
    throw std::invalid_argument("branch_partition_rule: need 0 <= i <= j");
  const RootDatum tgt{rule == BranchRule::DToB ? Family::B : Family::D,
                      target_rank};

  // candidate partitions (#2s, #1s)
  const std::pair<int, int> cands[4] = {
      {i, j - i}, {i - 1, j - i + 1}, {i, j - i - 1}, {i - 1, j - i}};
  std::vector<Weight> out;
  for (const auto& [twos, ones] : cands) {
    if (twos < 0 || ones < 0) continue;
    const int len = twos + ones;
    if (len > target_rank) continue;
    Weight w(target_rank, 0);
    for (int t = 0; t < twos; ++t) w[t] = 4;
    for (int t = twos; t < len; ++t) w[t] = 2;
    out.push_back(w);
    if (rule == BranchRule::BToD && len == target_rank) {
      Weight mw = tgt.mirror(w);
      if (mw != w) out.push_back(mw);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace spinsec
