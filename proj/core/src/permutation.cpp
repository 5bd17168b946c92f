#include "permloc/permutation.hpp"

#include <numeric>
#include <string>

#include "permloc/errors.hpp"

namespace permloc {

Permutation::Permutation(std::vector<int> symbols) : symbols_(std::move(symbols)) {
  const int n = static_cast<int>(symbols_.size());
  if (n == 0) raise(Errc::EmptyInput, "permutation must have length >= 1");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : symbols_) {
    if (v < 0 || v >= n)
      raise(Errc::OutOfRange, "symbol " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
    if (seen[static_cast<std::size_t>(v)])
      raise(Errc::DuplicateSymbol, "symbol " + std::to_string(v) + " appears twice");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) raise(Errc::EmptyInput, "identity needs n >= 1");
  std::vector<int> s(static_cast<std::size_t>(n));
  std::iota(s.begin(), s.end(), 0);
  return Permutation(std::move(s));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> inv(static_cast<std::size_t>(p.n()));
  for (int i = 0; i < p.n(); ++i) inv[static_cast<std::size_t>(p[i])] = i;
  return Permutation(std::move(inv));
}

std::vector<int> cycle_containing(const Permutation& p, int i) {
  if (i < 0 || i >= p.n())
    raise(Errc::OutOfRange, "cycle start " + std::to_string(i) + " outside 0.." + std::to_string(p.n() - 1));
  std::vector<int> cycle{i};
  for (int j = p[i]; j != i; j = p[j]) cycle.push_back(j);
  return cycle;
}

}  // namespace permloc
