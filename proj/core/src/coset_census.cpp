#include "permloc/coset_census.hpp"

#include <algorithm>
#include <string>

#include "permloc/enumerate.hpp"
#include "permloc/errors.hpp"

namespace permloc {

CosetCensus coset_census(int n, int d, const Caps& caps) {
  if (n < 2) raise(Errc::OutOfRange, "census needs n >= 2");
  if (d < 1 || d > n - 1)
    raise(Errc::OutOfRange, "locality d=" + std::to_string(d) + " outside 1.." + std::to_string(n - 1));
  if (n % (d + 1) != 0)
    raise(Errc::DivisibilityViolation,
          "d+1=" + std::to_string(d + 1) + " must divide n=" + std::to_string(n));
  if (n > caps.coset_n_max)
    raise(Errc::CapExceeded,
          "n=" + std::to_string(n) + " exceeds census cap " + std::to_string(caps.coset_n_max));

  const int blocks = n / (d + 1);
  const int k = n - blocks;  // information coordinates

  CosetCensus census;
  census.n = n;
  census.d = d;
  census.num_cosets = 1;
  for (int b = 0; b < blocks; ++b) census.num_cosets *= static_cast<std::uint64_t>(n);
  census.histogram.assign(census.num_cosets, 0);

  Caps local = caps;
  local.sn_n_max = std::max(local.sn_n_max, n);
  for_each_permutation(n, local, [&](const Permutation& w) {
    std::uint64_t syndrome = 0;
    for (int b = blocks - 1; b >= 0; --b) {
      int sum = 0;
      for (int j = 0; j < d; ++j) sum += w[b * d + j];
      const int s = ((w[k + b] - sum) % n + n) % n;
      syndrome = syndrome * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(s);
    }
    ++census.histogram[syndrome];
    ++census.total;
  });

  census.max_count = *std::max_element(census.histogram.begin(), census.histogram.end());
  return census;
}

}  // namespace permloc
