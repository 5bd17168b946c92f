#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "permloc/caps.hpp"
#include "permloc/gf.hpp"
#include "permloc/perm_poly.hpp"
#include "permloc/perm_set.hpp"

namespace permloc {

// Evaluations of the degree-<=4 permutation polynomials at t fixed points.
// Injectivity keeps every codeword's symbols pairwise distinct, and two
// distinct polynomials agree on at most 4 < t points, so any t-4-1 erasures
// leave the codeword recoverable by interpolation.
class DistinctCode {
 public:
  DistinctCode(FieldSpec field, int t, std::vector<int> eval_points,
               std::vector<FieldPoly> polys);

  const FieldSpec& field() const { return field_; }
  int t() const { return t_; }
  int k() const { return k_; }              // interpolation threshold, deg cap + 1
  int delta() const { return t_ - k_ + 1; }  // erasure margin + 1
  const std::vector<int>& eval_points() const { return eval_points_; }
  const std::vector<FieldPoly>& polys() const { return polys_; }
  const std::vector<std::vector<int>>& codewords() const { return codewords_; }
  std::size_t size() const { return codewords_.size(); }
  bool contains(const std::vector<int>& word) const;

 private:
  FieldSpec field_;
  int t_;
  int k_;
  std::vector<int> eval_points_;
  std::vector<FieldPoly> polys_;
  std::vector<std::vector<int>> codewords_;
  std::unordered_set<std::vector<int>, VectorHash> index_;
};

DistinctCode build_distinct_code(const FieldSpec& field, int t,
                                 std::optional<std::vector<int>> eval_points = std::nullopt,
                                 int max_deg = 4, const Caps& caps = {});

// Degree <= points-1 polynomial through the given (x, y) pairs, low-to-high.
std::vector<int> lagrange_fit(const FieldSpec& field,
                              const std::vector<std::pair<int, int>>& points);

// Fills the erased coordinates of a partial codeword; reads exactly the
// first k known symbols and cross-checks the rest.
std::vector<int> erasure_interpolate(const DistinctCode& code,
                                     const std::vector<std::optional<int>>& partial);

}  // namespace permloc
