#pragma once

#include <cstdint>

namespace permloc {

// Resource limits for exhaustive operations.  Every enumeration or search
// that can blow up takes a Caps argument; nothing hides a constant.
// PERMLOC_CAP=<k> raises the three size caps (sn_n_max, coset_n_max,
// bt_len_max) at once for desk experiments.
struct Caps {
  int sn_n_max = 10;        // largest n for full S_n enumeration
  int coset_n_max = 7;      // largest n for the coset census
  int bt_len_max = 14;      // largest 2*ell for multi-permutation enumeration
  int pp_brute_n_max = 64;  // largest field for brute-force polynomial scans
  int pp_normalized_n_max = 128;
  std::uint64_t materialize_max = 20'000'000;  // members held in memory
  std::uint64_t search_budget = 400'000'000;   // elementary search steps

  static Caps from_env();
};

}  // namespace permloc
