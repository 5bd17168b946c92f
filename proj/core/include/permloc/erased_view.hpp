#pragma once

#include <optional>
#include <vector>

#include "permloc/permutation.hpp"

namespace permloc {

// A stored member with some cells erased.  Known symbols stay pairwise
// distinct; repair procedures read through at() and report what they read.
class ErasedView {
 public:
  explicit ErasedView(std::vector<std::optional<int>> cells);
  static ErasedView of(const Permutation& p, const std::vector<int>& erased);

  int n() const { return static_cast<int>(cells_.size()); }
  bool is_erased(int i) const;
  int at(int i) const;  // throws CellErased on an erased cell
  const std::vector<int>& erased_positions() const { return erased_; }
  int known_count() const { return n() - static_cast<int>(erased_.size()); }

 private:
  std::vector<std::optional<int>> cells_;
  std::vector<int> erased_;
};

// Result of one repair: the recovered symbol plus every position read.
struct RepairOutcome {
  int symbol = 0;
  std::vector<int> accessed;
};

}  // namespace permloc
