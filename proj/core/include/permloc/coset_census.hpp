#pragma once

#include <cstdint>
#include <vector>

#include "permloc/caps.hpp"

namespace permloc {

// Distribution of S_n over the cosets of the parity-check code on Z_n^n
// whose last n/(d+1) coordinates each sum a disjoint block of d consecutive
// information coordinates (mod n).  Some coset collects at least
// n!/n^(n/(d+1)) permutations; the census exhibits one.
struct CosetCensus {
  int n = 0;
  int d = 0;
  std::uint64_t num_cosets = 0;
  std::vector<std::uint64_t> histogram;  // indexed by syndrome, base-n digits
  std::uint64_t max_count = 0;
  std::uint64_t total = 0;  // n!
};

CosetCensus coset_census(int n, int d, const Caps& caps = {});

}  // namespace permloc
