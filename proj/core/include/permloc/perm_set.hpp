#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "permloc/permutation.hpp"

namespace permloc {

enum class ConstructionId {
  None,
  BlockConcat,
  RangeRestricted,
  InfBall,
  Media,
  Extend,
  Multiperm,
};

const char* to_string(ConstructionId id);
ConstructionId construction_from_string(const std::string& s);

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// An ordered, duplicate-free collection of same-length permutations,
// tagged with how it was built and what repair locality it claims.
// Insertion order is preserved; the text format round-trips bit exactly.
class PermSet {
 public:
  explicit PermSet(int n, ConstructionId id = ConstructionId::None,
                   std::optional<int> claimed_locality = std::nullopt);

  // False if the member was already present.
  bool insert(Permutation p);

  int n() const { return n_; }
  std::size_t size() const { return members_.size(); }
  const Permutation& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Permutation>& members() const { return members_; }

  bool contains(const std::vector<int>& symbols) const;
  bool contains(const Permutation& p) const { return contains(p.symbols()); }
  std::optional<std::size_t> index_of(const std::vector<int>& symbols) const;

  ConstructionId construction() const { return construction_; }
  std::optional<int> claimed_locality() const { return claimed_locality_; }
  void set_claimed_locality(std::optional<int> d) { claimed_locality_ = d; }

 private:
  int n_;
  ConstructionId construction_;
  std::optional<int> claimed_locality_;
  std::vector<Permutation> members_;
  std::unordered_map<std::vector<int>, std::size_t, VectorHash> index_;
};

// Text format, one member per line after a two-line header:
//   PERMSET 1
//   n=<n> d=<d or -> construction=<id>
//   <s0> <s1> ... <s n-1>
// Zero-based decimal symbols, single spaces, "\n" endings, no padding.
void write_permset(const PermSet& set, std::ostream& out);
void write_permset_file(const PermSet& set, const std::string& path);
PermSet read_permset(std::istream& in);
PermSet read_permset_file(const std::string& path);

}  // namespace permloc
