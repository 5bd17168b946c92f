#pragma once

#include <cstdint>
#include <functional>

#include "permloc/caps.hpp"
#include "permloc/erased_view.hpp"
#include "permloc/perm_set.hpp"

namespace permloc {

// Members split into n/h consecutive position blocks; block b holds some
// value block {vh, ..., vh+h-1}, ordered freely, and the block-to-value
// assignment is a free bijection.  (h!)^(n/h) * (n/h)! members, and an
// erased symbol is the one value its block's survivors miss.
struct BlockConcatSpec {
  int n;
  int h;
  BlockConcatSpec(int n, int h);
  int blocks() const { return n / h; }
  // h == 1 and h == n both degenerate to all of S_n.
  int claimed_locality() const { return (h == 1 || h == n) ? n - 1 : h - 1; }
};

std::uint64_t block_concat_size(const BlockConcatSpec& spec);
void block_concat_for_each(const BlockConcatSpec& spec,
                           const std::function<void(const Permutation&)>& visit);
PermSet block_concat_generate(const BlockConcatSpec& spec, const Caps& caps = {});
bool block_concat_contains(const Permutation& p, const BlockConcatSpec& spec);

// Repairs position j from the surviving h-1 cells of its block.  Other
// blocks may carry erasures of their own; j's block must not.
RepairOutcome block_concat_repair(const ErasedView& view, const BlockConcatSpec& spec, int j);

struct Q2Result {
  int position = 0;
  int queries = 0;
};

// Locates a value by probing one cell per block, then scanning the block
// whose value set matched: at most n/h + h reads.
Q2Result block_concat_q2(int value, const BlockConcatSpec& spec,
                         const std::function<int(int)>& read);

// Every member fixes one value block in the first h positions and permutes
// the rest freely behind it: n/h * h! * (n-h)! members with locality n-h-1.
struct RangeRestrictedSpec {
  int n;
  int h;
  RangeRestrictedSpec(int n, int h);  // h | n, 2 <= h <= n/2
  int claimed_locality() const { return n - h - 1; }
};

std::uint64_t range_restricted_size(const RangeRestrictedSpec& spec);
PermSet range_restricted_generate(const RangeRestrictedSpec& spec, const Caps& caps = {});
bool range_restricted_contains(const Permutation& p, const RangeRestrictedSpec& spec);

// Prefix erasures close over the prefix block; suffix erasures find the one
// value block entirely absent from the observed suffix (the gap) and return
// its complement's missing element.
RepairOutcome range_restricted_repair(const ErasedView& view, const RangeRestrictedSpec& spec,
                                      int j);

}  // namespace permloc
