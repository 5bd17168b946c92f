#include "permloc/max_search.hpp"

#include <string>
#include <vector>

#include "permloc/enumerate.hpp"
#include "permloc/errors.hpp"
#include "permloc/locality.hpp"

namespace permloc {

namespace {

// Locality feasibility is anti-monotone: growing a set only removes valid
// helper sets, so a branch whose chosen prefix is infeasible is dead.
//
// For d == 1 the search keeps, per ordered pair (i, j), the partial function
// symbol-at-j -> symbol-at-i induced by the chosen members, and drops the
// pair on the first conflict.  General d rechecks positions from scratch;
// the exhaustive workloads live at d == 1.
struct PairState {
  int n;
  std::vector<char> valid;    // (i, j) pair still functional
  std::vector<int> map;       // value at j -> value at i, -1 unset
  std::vector<char> const_ok; // position still constant across chosen
  std::vector<int> const_val;

  struct Undo {
    std::vector<int> map_set;       // indices into map that were set
    std::vector<int> pair_killed;   // indices into valid
    std::vector<int> const_killed;  // positions
    std::vector<int> const_set;     // positions whose const_val was set
  };

  explicit PairState(int n_)
      : n(n_),
        valid(static_cast<std::size_t>(n_) * n_, 1),
        map(static_cast<std::size_t>(n_) * n_ * n_, -1),
        const_ok(static_cast<std::size_t>(n_), 1),
        const_val(static_cast<std::size_t>(n_), -1) {}

  std::size_t pair_idx(int i, int j) const { return static_cast<std::size_t>(i) * n + j; }
  std::size_t map_idx(int i, int j, int v) const {
    return (static_cast<std::size_t>(i) * n + j) * n + v;
  }

  void add(const Permutation& p, Undo& undo) {
    for (int i = 0; i < n; ++i) {
      if (const_ok[static_cast<std::size_t>(i)]) {
        if (const_val[static_cast<std::size_t>(i)] == -1) {
          const_val[static_cast<std::size_t>(i)] = p[i];
          undo.const_set.push_back(i);
        } else if (const_val[static_cast<std::size_t>(i)] != p[i]) {
          const_ok[static_cast<std::size_t>(i)] = 0;
          undo.const_killed.push_back(i);
        }
      }
      for (int j = 0; j < n; ++j) {
        if (i == j || !valid[pair_idx(i, j)]) continue;
        const std::size_t m = map_idx(i, j, p[j]);
        if (map[m] == -1) {
          map[m] = p[i];
          undo.map_set.push_back(static_cast<int>(m));
        } else if (map[m] != p[i]) {
          valid[pair_idx(i, j)] = 0;
          undo.pair_killed.push_back(static_cast<int>(pair_idx(i, j)));
        }
      }
    }
  }

  void rollback(const Undo& undo) {
    for (int m : undo.map_set) map[static_cast<std::size_t>(m)] = -1;
    for (int pk : undo.pair_killed) valid[static_cast<std::size_t>(pk)] = 1;
    for (int i : undo.const_killed) const_ok[static_cast<std::size_t>(i)] = 1;
    for (int i : undo.const_set) const_val[static_cast<std::size_t>(i)] = -1;
  }

  bool feasible() const {
    for (int i = 0; i < n; ++i) {
      if (const_ok[static_cast<std::size_t>(i)]) continue;
      bool any = false;
      for (int j = 0; j < n && !any; ++j)
        if (i != j && valid[pair_idx(i, j)]) any = true;
      if (!any) return false;
    }
    return true;
  }
};

struct Searcher {
  int n = 0;
  int d = 0;
  std::size_t target = 0;
  std::uint64_t budget = 0;
  std::uint64_t spent = 0;
  std::uint64_t nodes = 0;
  std::vector<Permutation> pool;
  std::vector<Permutation> chosen;
  PairState pairs;

  Searcher(int n_, int d_, std::size_t target_, std::uint64_t budget_)
      : n(n_), d(d_), target(target_), budget(budget_), pairs(n_) {}

  void charge(std::uint64_t units) {
    spent += units;
    if (spent > budget)
      raise(Errc::SearchBudgetExceeded, "search exceeded budget " + std::to_string(budget));
  }

  bool feasible_general() {
    const int max_size = std::min(d, n - 1);
    for (int i = 0; i < n; ++i) {
      std::vector<int> others;
      for (int p = 0; p < n; ++p)
        if (p != i) others.push_back(p);
      bool found = false;
      for (int s = 0; s <= max_size && !found; ++s) {
        std::vector<int> idx(static_cast<std::size_t>(s));
        for (int j = 0; j < s; ++j) idx[static_cast<std::size_t>(j)] = j;
        while (true) {
          charge(chosen.size() + 1);
          std::vector<int> helpers(static_cast<std::size_t>(s));
          for (int j = 0; j < s; ++j)
            helpers[static_cast<std::size_t>(j)] = others[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
          if (determines(chosen, helpers, i)) {
            found = true;
            break;
          }
          int j = s - 1;
          while (j >= 0 && idx[static_cast<std::size_t>(j)] == static_cast<int>(others.size()) - s + j) --j;
          if (j < 0) break;
          ++idx[static_cast<std::size_t>(j)];
          for (int l = j + 1; l < s; ++l)
            idx[static_cast<std::size_t>(l)] = idx[static_cast<std::size_t>(l - 1)] + 1;
        }
      }
      if (!found) return false;
    }
    return true;
  }

  bool dfs(std::size_t next) {
    ++nodes;
    charge(1);
    if (chosen.size() == target) return true;
    if (chosen.size() + (pool.size() - next) < target) return false;

    // include pool[next]
    PairState::Undo undo;
    bool ok;
    if (d == 1) {
      charge(static_cast<std::uint64_t>(n) * n);
      pairs.add(pool[next], undo);
      ok = pairs.feasible();
    } else {
      chosen.push_back(pool[next]);
      ok = feasible_general();
      chosen.pop_back();
    }
    if (ok) {
      chosen.push_back(pool[next]);
      if (dfs(next + 1)) return true;
      chosen.pop_back();
    }
    if (d == 1) pairs.rollback(undo);

    // exclude pool[next]
    return dfs(next + 1);
  }
};

}  // namespace

MaxSearchResult max_set_search(int n, int d, std::size_t target_size, const Caps& caps) {
  if (n < 1) raise(Errc::EmptyInput, "search needs n >= 1");
  if (d < 0 || d > n - 1)
    raise(Errc::OutOfRange, "locality d=" + std::to_string(d) + " outside 0.." + std::to_string(n - 1));
  if (target_size < 1) raise(Errc::OutOfRange, "target size must be >= 1");

  Searcher search(n, d, target_size, caps.search_budget);
  search.pool = all_permutations(n, caps);

  MaxSearchResult result;
  if (target_size <= search.pool.size() && search.dfs(0)) {
    PermSet witness(n, ConstructionId::None, d);
    for (const Permutation& p : search.chosen) witness.insert(p);
    result.witness = std::move(witness);
  }
  result.nodes = search.nodes;
  return result;
}

}  // namespace permloc
