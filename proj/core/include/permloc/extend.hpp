#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "permloc/caps.hpp"
#include "permloc/distinct_code.hpp"
#include "permloc/erased_view.hpp"
#include "permloc/locality.hpp"
#include "permloc/perm_set.hpp"

namespace permloc {

// The symbol replacement induced by a word e of t distinct symbols from
// 0..n-1: values outside e map to themselves, values of e that collide with
// the low range 0..n-t-1 slide, in order, onto the unused tail symbols.
class ReplacementMap {
 public:
  ReplacementMap(std::vector<int> e, int n);

  int n() const { return n_; }
  int t() const { return static_cast<int>(e_.size()); }
  const std::vector<int>& e() const { return e_; }
  int apply(int s) const;                 // domain 0..n-t-1
  std::optional<int> invert(int y) const; // empty when y is not in the image

 private:
  std::vector<int> e_;
  int n_;
  std::vector<int> fwd_;
  std::unordered_map<int, int> back_;
};

ReplacementMap build_f(const std::vector<int>& e, int n);

// p over n-t symbols, pushed through the replacement map and suffixed by e.
Permutation odot(const Permutation& p, const std::vector<int>& e, int n);

// A locality-d inner set crossed with a distinct-symbol code: members are
// s (x) e, locality grows only to d + t - delta + 1.
struct ExtendedSpec {
  PermSet inner;           // over n - t symbols
  RepairMap inner_repair;  // certified helper sets for the inner set
  int inner_locality;
  DistinctCode code;

  int n() const { return inner.n() + code.t(); }
  int locality() const { return inner_locality + code.t() - code.delta() + 1; }
};

ExtendedSpec make_extended_spec(PermSet inner, int d, DistinctCode code, const Caps& caps = {});

std::uint64_t extended_size(const ExtendedSpec& spec);
void extended_for_each(const ExtendedSpec& spec,
                       const std::function<void(const Permutation&)>& visit);
PermSet extend_set(const ExtendedSpec& spec, const Caps& caps = {});
bool extended_contains(const Permutation& p, const ExtendedSpec& spec);

// Splits a member back into its inner permutation and codeword; raises
// NotAMember when either half fails to check out.
std::pair<Permutation, std::vector<int>> decompose(const Permutation& p, const ExtendedSpec& spec);

// Suffix cells re-interpolate the codeword from k = t - delta + 1 reads;
// prefix cells additionally pull the inner helpers back through the
// replacement map, for d + k reads total.
RepairOutcome extended_repair(const ErasedView& view, const ExtendedSpec& spec, int j);

// Symbol relabelings: injective maps preserve locality wholesale.
PermSet relabel_set(const PermSet& set, const std::vector<int>& f);  // f permutes 0..n-1
std::vector<std::vector<int>> relabel_rows(const std::vector<std::vector<int>>& rows,
                                           const std::vector<int>& f);
RepairMap relabel_repair_map(const RepairMap& map, const std::vector<int>& f);

}  // namespace permloc
