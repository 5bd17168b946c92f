#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "permloc/caps.hpp"
#include "permloc/errors.hpp"
#include "permloc/permutation.hpp"

namespace permloc {

// Visits all n! permutations in lexicographic order starting from the
// identity.  Guarded by caps.sn_n_max; factorial growth makes anything
// beyond that cap a configuration decision, not a default.
template <typename F>
void for_each_permutation(int n, const Caps& caps, F&& visit) {
  if (n < 1) raise(Errc::EmptyInput, "enumeration needs n >= 1");
  if (n > caps.sn_n_max)
    raise(Errc::CapExceeded, "n=" + std::to_string(n) + " exceeds S_n enumeration cap " +
                                 std::to_string(caps.sn_n_max));
  std::vector<int> symbols(static_cast<std::size_t>(n));
  std::iota(symbols.begin(), symbols.end(), 0);
  do {
    visit(Permutation(symbols));
  } while (std::next_permutation(symbols.begin(), symbols.end()));
}

std::vector<Permutation> all_permutations(int n, const Caps& caps = {});

}  // namespace permloc
