#pragma once

#include <cstdint>
#include <optional>

#include "permloc/caps.hpp"
#include "permloc/perm_set.hpp"

namespace permloc {

// Backtracking search for a locality-d subset of S_n with target_size
// members.  An empty witness together with normal return certifies that no
// such subset exists; running out of budget raises SearchBudgetExceeded
// instead of guessing.
struct MaxSearchResult {
  std::optional<PermSet> witness;
  std::uint64_t nodes = 0;
};

MaxSearchResult max_set_search(int n, int d, std::size_t target_size, const Caps& caps = {});

}  // namespace permloc
