#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "permloc/caps.hpp"
#include "permloc/erased_view.hpp"
#include "permloc/errors.hpp"
#include "permloc/perm_set.hpp"

namespace permloc {

// A set has symbol locality d when every position i can be recomputed
// from a fixed helper set J_i of at most d other positions, uniformly
// over all members.  verify_locality searches for such helper sets and,
// on success, returns the lookup tables that realize the repairs.

inline int row_length(const Permutation& p) { return p.n(); }
inline int row_length(const std::vector<int>& r) { return static_cast<int>(r.size()); }
inline int row_symbol(const Permutation& p, int i) { return p[i]; }
inline int row_symbol(const std::vector<int>& r, int i) { return r[static_cast<std::size_t>(i)]; }

// True when no two rows agree on all helper positions yet differ at target.
template <typename Rows>
bool determines(const Rows& rows, const std::vector<int>& helpers, int target) {
  if (rows.empty()) raise(Errc::EmptyInput, "determines needs at least one row");
  const int n = row_length(rows[0]);
  if (target < 0 || target >= n) raise(Errc::OutOfRange, "target position outside row");
  for (int h : helpers) {
    if (h < 0 || h >= n) raise(Errc::OutOfRange, "helper position outside row");
    if (h == target) raise(Errc::OutOfRange, "helper set must exclude the target");
  }

  // Projections pack into one word when small; relabeled alphabets can
  // exceed a byte, so fall back to exact keys when they do.
  bool packable = helpers.size() <= 8;
  if (packable) {
    for (const auto& row : rows) {
      for (int h : helpers) {
        const int v = row_symbol(row, h);
        if (v < 0 || v > 255) {
          packable = false;
          break;
        }
      }
      if (!packable) break;
    }
  }

  if (packable) {
    std::unordered_map<std::uint64_t, int> seen;
    seen.reserve(rows.size() * 2);
    for (const auto& row : rows) {
      std::uint64_t key = 0;
      for (int h : helpers) key = (key << 8) | static_cast<std::uint64_t>(row_symbol(row, h));
      auto [it, fresh] = seen.try_emplace(key, row_symbol(row, target));
      if (!fresh && it->second != row_symbol(row, target)) return false;
    }
    return true;
  }

  std::map<std::vector<int>, int> seen;
  std::vector<int> key(helpers.size());
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < helpers.size(); ++j) key[j] = row_symbol(row, helpers[j]);
    auto [it, fresh] = seen.try_emplace(key, row_symbol(row, target));
    if (!fresh && it->second != row_symbol(row, target)) return false;
  }
  return true;
}

// Per-position helper sets plus the projection -> symbol lookup tables.
class RepairMap {
 public:
  struct Rule {
    std::vector<int> helpers;               // ascending
    std::map<std::vector<int>, int> table;  // projection in helper order
  };

  RepairMap(int n, std::vector<Rule> rules);

  int n() const { return n_; }
  const Rule& rule(int i) const;
  int max_helpers() const;
  RepairOutcome recover(const ErasedView& view, int i) const;

 private:
  int n_;
  std::vector<Rule> rules_;
};

struct LocalityResult {
  std::optional<RepairMap> repair;
  std::optional<int> failed_position;  // smallest position with no valid helper set
  bool ok() const { return repair.has_value(); }
};

namespace detail {

template <typename Rows>
RepairMap::Rule build_rule(const Rows& rows, std::vector<int> helpers, int target) {
  RepairMap::Rule rule;
  rule.helpers = std::move(helpers);
  for (const auto& row : rows) {
    std::vector<int> key(rule.helpers.size());
    for (std::size_t j = 0; j < rule.helpers.size(); ++j)
      key[j] = row_symbol(row, rule.helpers[j]);
    rule.table.emplace(std::move(key), row_symbol(row, target));
  }
  return rule;
}

// Candidate helper sets are tried smallest first, ties broken
// lexicographically, so certified maps are reproducible.
template <typename Rows>
LocalityResult verify_locality_rows(const Rows& rows, int n, int d, const Caps& caps) {
  if (rows.empty()) raise(Errc::EmptyInput, "verification needs at least one member");
  if (d < 0) raise(Errc::OutOfRange, "locality must be nonnegative");
  for (const auto& row : rows)
    if (row_length(row) != n) raise(Errc::OutOfRange, "rows of unequal length");

  const int max_size = std::min(d, n - 1);
  std::uint64_t spent = 0;
  std::vector<RepairMap::Rule> rules;
  rules.reserve(static_cast<std::size_t>(n));

  for (int i = 0; i < n; ++i) {
    std::vector<int> others;
    others.reserve(static_cast<std::size_t>(n - 1));
    for (int p = 0; p < n; ++p)
      if (p != i) others.push_back(p);

    std::optional<std::vector<int>> found;
    for (int s = 0; s <= max_size && !found; ++s) {
      std::vector<int> idx(static_cast<std::size_t>(s));
      for (int j = 0; j < s; ++j) idx[static_cast<std::size_t>(j)] = j;
      while (true) {
        spent += rows.size() + 1;
        if (spent > caps.search_budget)
          raise(Errc::SearchBudgetExceeded,
                "helper search exceeded budget " + std::to_string(caps.search_budget));
        std::vector<int> helpers(static_cast<std::size_t>(s));
        for (int j = 0; j < s; ++j) helpers[static_cast<std::size_t>(j)] = others[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
        if (determines(rows, helpers, i)) {
          found = std::move(helpers);
          break;
        }
        // next lexicographic combination
        int j = s - 1;
        while (j >= 0 && idx[static_cast<std::size_t>(j)] == static_cast<int>(others.size()) - s + j) --j;
        if (j < 0) break;
        ++idx[static_cast<std::size_t>(j)];
        for (int l = j + 1; l < s; ++l)
          idx[static_cast<std::size_t>(l)] = idx[static_cast<std::size_t>(l - 1)] + 1;
      }
    }
    if (!found) return LocalityResult{std::nullopt, i};
    rules.push_back(build_rule(rows, std::move(*found), i));
  }
  return LocalityResult{RepairMap(n, std::move(rules)), std::nullopt};
}

}  // namespace detail

LocalityResult verify_locality(const PermSet& set, int d, const Caps& caps = {});
LocalityResult verify_locality(const std::vector<std::vector<int>>& rows, int d,
                               const Caps& caps = {});

}  // namespace permloc
