#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <utility>
#include <vector>

#include "permloc/caps.hpp"
#include "permloc/erased_view.hpp"
#include "permloc/perm_set.hpp"

namespace permloc {

// A sequence over 0..l-1 in which every value appears exactly twice.
class MultiPermutation {
 public:
  explicit MultiPermutation(std::vector<int> symbols);

  int ell() const { return static_cast<int>(symbols_.size()) / 2; }
  int length() const { return static_cast<int>(symbols_.size()); }
  int operator[](int j) const { return symbols_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& symbols() const { return symbols_; }
  int position(int value, int occurrence) const;  // occurrence 0 or 1
  friend bool operator==(const MultiPermutation&, const MultiPermutation&) = default;

 private:
  std::vector<int> symbols_;
  std::vector<int> pos_;  // pos_[2v + r] holds the r-th occurrence of v
};

// Largest gap between a value's two positions; at least 1, at most 2l-1.
int spread(const MultiPermutation& mp);

// Number of multi-permutations with spread at most t, exact.
std::uint64_t count_bt(int ell, int t, const Caps& caps = {});

// All of them, in lexicographic order.
std::vector<MultiPermutation> enumerate_bt(int ell, int t, const Caps& caps = {});

// One of the two orderings of each value pair {2i, 2i+1}.
struct PairAssignment {
  std::vector<char> swapped;

  static PairAssignment from_mask(std::uint64_t mask, int ell);
  int ell() const { return static_cast<int>(swapped.size()); }
  int gamma(int i, int r) const;
  friend bool operator==(const PairAssignment&, const PairAssignment&) = default;
};

// Position j holding the r-th occurrence of value i receives gamma_i(r).
Permutation assign(const MultiPermutation& mp, const PairAssignment& g);

// Inverse of assign: the pair of symbol v is v/2, appearance order gives r.
std::pair<MultiPermutation, PairAssignment> extract(const Permutation& p);

// The permutations whose pair pattern has spread at most t.  Every value
// pair straddles at most t positions, so a 4t window pins any erasure.
struct AtSpec {
  int n;
  int t;

  AtSpec(int n, int t);
  int ell() const { return n / 2; }
  int claimed_locality() const { return 4 * t; }
};

std::uint64_t at_size(const AtSpec& spec, const Caps& caps = {});
PermSet build_at(const AtSpec& spec, const Caps& caps = {});
bool at_contains(const Permutation& p, const AtSpec& spec);

// Reads [j-2t, j+2t] minus j, clipped.  Among values seen within t of j,
// exactly one has its pair mate absent from the whole window; that absent
// mate is the erased symbol.
RepairOutcome at_repair(const ErasedView& view, const AtSpec& spec, int j);

struct RateRow {
  int n;
  int t;
  mpz_class members;
  double rate;  // log |A_t| / log n!
};

std::vector<RateRow> rate_table(const std::vector<int>& ns, const std::vector<int>& ts,
                                const Caps& caps = {});

}  // namespace permloc
