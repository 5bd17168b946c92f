#pragma once

#include <gmpxx.h>

#include <optional>

namespace permloc {

mpz_class factorial(int n);
mpz_class double_factorial(int n);  // n(n-2)(n-4)... down to 1 or 2

// Size limits for locality-d sets of permutations of length n.  All values
// exact; doubles appear only when a rate is reported.
struct BoundReport {
  int n = 0;
  int d = 0;
  mpz_class upper_general;               // n! / ceil(n/(d+1))!
  std::optional<mpz_class> upper_d1;     // n!! when d == 1
  mpq_class lower_existential;           // n! / n^ceil(n/(d+1))
  mpq_class lrc_rate_bound;              // d/(d+1)
  bool adapted = false;                  // ceiling exponent used, (d+1) does not divide n
  std::optional<mpz_class> set_size;
  std::optional<double> rate() const;    // log|S| / log(n!)
};

BoundReport bounds(int n, int d, std::optional<mpz_class> set_size = std::nullopt);

}  // namespace permloc
