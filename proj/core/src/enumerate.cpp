#include "permloc/enumerate.hpp"

namespace permloc {

std::vector<Permutation> all_permutations(int n, const Caps& caps) {
  std::vector<Permutation> out;
  for_each_permutation(n, caps, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

}  // namespace permloc
