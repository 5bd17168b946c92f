#pragma once

#include <compare>
#include <vector>

namespace permloc {

// A permutation of {0, ..., n-1} stored as the sequence of its values.
// Construction validates; every instance is well formed.
class Permutation {
 public:
  explicit Permutation(std::vector<int> symbols);
  static Permutation identity(int n);

  int n() const { return static_cast<int>(symbols_.size()); }
  int operator[](int i) const { return symbols_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& symbols() const { return symbols_; }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> symbols_;
};

Permutation inverse(const Permutation& p);

// Positions visited when following j -> p[j] from i until i reappears.
// The returned list starts at i; its length is the cycle length.
std::vector<int> cycle_containing(const Permutation& p, int i);

}  // namespace permloc
