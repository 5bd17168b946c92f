#include "permloc/multiperm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "permloc/errors.hpp"

namespace permloc {

MultiPermutation::MultiPermutation(std::vector<int> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) raise(Errc::EmptyInput, "multi-permutation needs symbols");
  if (symbols_.size() % 2 != 0)
    raise(Errc::DivisibilityViolation, "multi-permutation length must be even");
  const int l = ell();
  pos_.assign(static_cast<std::size_t>(2 * l), -1);
  for (int j = 0; j < length(); ++j) {
    const int v = symbols_[static_cast<std::size_t>(j)];
    if (v < 0 || v >= l)
      raise(Errc::OutOfRange, "value " + std::to_string(v) + " outside 0.." + std::to_string(l - 1));
    if (pos_[static_cast<std::size_t>(2 * v)] < 0)
      pos_[static_cast<std::size_t>(2 * v)] = j;
    else if (pos_[static_cast<std::size_t>(2 * v + 1)] < 0)
      pos_[static_cast<std::size_t>(2 * v + 1)] = j;
    else
      raise(Errc::DuplicateSymbol, "value " + std::to_string(v) + " appears more than twice");
  }
  for (int v = 0; v < l; ++v)
    if (pos_[static_cast<std::size_t>(2 * v + 1)] < 0)
      raise(Errc::DuplicateSymbol, "value " + std::to_string(v) + " must appear exactly twice");
}

int MultiPermutation::position(int value, int occurrence) const {
  if (value < 0 || value >= ell()) raise(Errc::OutOfRange, "value " + std::to_string(value));
  if (occurrence < 0 || occurrence > 1)
    raise(Errc::OutOfRange, "occurrence index must be 0 or 1");
  return pos_[static_cast<std::size_t>(2 * value + occurrence)];
}

int spread(const MultiPermutation& mp) {
  int w = 0;
  for (int v = 0; v < mp.ell(); ++v)
    w = std::max(w, mp.position(v, 1) - mp.position(v, 0));
  return w;
}

namespace {

struct BtCounter {
  int ell;
  int t;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<int> open;  // first positions of currently open values
  int used = 0;

  // Patterns label values by first appearance; every pattern stands for
  // exactly ell! members, one per relabeling.
  std::uint64_t dfs(int p) {
    if (++nodes > budget)
      raise(Errc::SearchBudgetExceeded,
            "pattern count exceeded budget " + std::to_string(budget));
    if (p == 2 * ell) return 1;

    int forced = -1;
    for (std::size_t k = 0; k < open.size(); ++k) {
      if (p - open[k] == t) {
        if (forced >= 0) return 0;  // two values due at once
        forced = static_cast<int>(k);
      }
    }

    std::uint64_t total = 0;
    if (forced >= 0) {
      const int saved = open[static_cast<std::size_t>(forced)];
      open.erase(open.begin() + forced);
      total = dfs(p + 1);
      open.insert(open.begin() + forced, saved);
      return total;
    }
    for (std::size_t k = 0; k < open.size(); ++k) {
      const int saved = open[k];
      open.erase(open.begin() + static_cast<long>(k));
      total += dfs(p + 1);
      open.insert(open.begin() + static_cast<long>(k), saved);
    }
    if (used < ell) {
      ++used;
      open.push_back(p);
      total += dfs(p + 1);
      open.pop_back();
      --used;
    }
    return total;
  }
};

std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) {
    if (f > ~std::uint64_t{0} / static_cast<std::uint64_t>(i))
      raise(Errc::CapExceeded, "factorial overflows 64 bits");
    f *= static_cast<std::uint64_t>(i);
  }
  return f;
}

}  // namespace

std::uint64_t count_bt(int ell, int t, const Caps& caps) {
  if (ell < 1) raise(Errc::OutOfRange, "need at least one value");
  if (t < 0) raise(Errc::OutOfRange, "spread bound must be nonnegative");
  if (t == 0) return 0;
  BtCounter counter{ell, std::min(t, 2 * ell - 1), caps.search_budget, 0, {}, 0};
  const std::uint64_t patterns = counter.dfs(0);
  const std::uint64_t relabelings = factorial_u64(ell);
  if (patterns != 0 && relabelings > ~std::uint64_t{0} / patterns)
    raise(Errc::CapExceeded, "count overflows 64 bits");
  return patterns * relabelings;
}

namespace {

struct BtEnumerator {
  int ell;
  int t;
  std::vector<MultiPermutation>* out;
  std::vector<int> seq;
  std::vector<int> first;  // -1 unopened, position once open, -2 closed

  void dfs(int p) {
    if (p == 2 * ell) {
      out->emplace_back(seq);
      return;
    }
    int forced = -1;
    for (int v = 0; v < ell; ++v) {
      if (first[static_cast<std::size_t>(v)] >= 0 &&
          p - first[static_cast<std::size_t>(v)] == t) {
        if (forced >= 0) return;
        forced = v;
      }
    }
    for (int v = 0; v < ell; ++v) {
      if (forced >= 0 && v != forced) continue;
      auto& st = first[static_cast<std::size_t>(v)];
      if (st == -2) continue;
      if (st >= 0) {
        if (p - st > t) continue;
        const int saved = st;
        st = -2;
        seq.push_back(v);
        dfs(p + 1);
        seq.pop_back();
        st = saved;
      } else {
        st = p;
        seq.push_back(v);
        dfs(p + 1);
        seq.pop_back();
        st = -1;
      }
    }
  }
};

}  // namespace

std::vector<MultiPermutation> enumerate_bt(int ell, int t, const Caps& caps) {
  if (ell < 1) raise(Errc::OutOfRange, "need at least one value");
  if (2 * ell > caps.bt_len_max)
    raise(Errc::CapExceeded, "length " + std::to_string(2 * ell) + " exceeds the cap " +
                                 std::to_string(caps.bt_len_max) + "; raise PERMLOC_CAP to enumerate");
  const std::uint64_t count = count_bt(ell, t, caps);
  if (count > caps.materialize_max)
    raise(Errc::CapExceeded, std::to_string(count) + " members exceed the materialize cap");
  std::vector<MultiPermutation> out;
  out.reserve(count);
  BtEnumerator en{ell, std::min(t, 2 * ell - 1), &out, {},
                  std::vector<int>(static_cast<std::size_t>(ell), -1)};
  if (t >= 1) en.dfs(0);
  return out;
}

PairAssignment PairAssignment::from_mask(std::uint64_t mask, int ell) {
  if (ell < 1 || ell > 63) raise(Errc::OutOfRange, "pair count " + std::to_string(ell));
  if (mask >> ell)
    raise(Errc::OutOfRange, "mask has bits beyond pair " + std::to_string(ell - 1));
  PairAssignment g;
  g.swapped.resize(static_cast<std::size_t>(ell));
  for (int i = 0; i < ell; ++i) g.swapped[static_cast<std::size_t>(i)] = (mask >> i) & 1;
  return g;
}

int PairAssignment::gamma(int i, int r) const {
  if (i < 0 || i >= ell()) raise(Errc::OutOfRange, "pair " + std::to_string(i));
  if (r < 0 || r > 1) raise(Errc::OutOfRange, "occurrence index must be 0 or 1");
  return 2 * i + (swapped[static_cast<std::size_t>(i)] ? 1 - r : r);
}

Permutation assign(const MultiPermutation& mp, const PairAssignment& g) {
  if (g.ell() != mp.ell())
    raise(Errc::OutOfRange, "assignment covers " + std::to_string(g.ell()) + " pairs, pattern has " +
                                std::to_string(mp.ell()));
  std::vector<int> out(static_cast<std::size_t>(mp.length()));
  for (int j = 0; j < mp.length(); ++j) {
    const int v = mp[j];
    const int r = mp.position(v, 0) == j ? 0 : 1;
    out[static_cast<std::size_t>(j)] = g.gamma(v, r);
  }
  return Permutation(std::move(out));
}

std::pair<MultiPermutation, PairAssignment> extract(const Permutation& p) {
  if (p.n() % 2 != 0) raise(Errc::DivisibilityViolation, "extract needs an even length");
  std::vector<int> pattern;
  pattern.reserve(static_cast<std::size_t>(p.n()));
  for (int j = 0; j < p.n(); ++j) pattern.push_back(p[j] / 2);
  MultiPermutation mp(std::move(pattern));
  PairAssignment g;
  g.swapped.resize(static_cast<std::size_t>(mp.ell()));
  for (int i = 0; i < mp.ell(); ++i)
    g.swapped[static_cast<std::size_t>(i)] = p[mp.position(i, 0)] == 2 * i + 1;
  return {std::move(mp), std::move(g)};
}

AtSpec::AtSpec(int n_, int t_) : n(n_), t(t_) {
  if (n < 2) raise(Errc::OutOfRange, "alphabet must have at least two symbols");
  if (n % 2 != 0) raise(Errc::DivisibilityViolation, "pair patterns need an even n");
  if (t < 1) raise(Errc::OutOfRange, "spread bound must be at least 1");
}

std::uint64_t at_size(const AtSpec& spec, const Caps& caps) {
  const std::uint64_t count = count_bt(spec.ell(), spec.t, caps);
  if (spec.ell() >= 64 || (count != 0 && count > (~std::uint64_t{0} >> spec.ell())))
    raise(Errc::CapExceeded, "set size overflows 64 bits");
  return count << spec.ell();
}

PermSet build_at(const AtSpec& spec, const Caps& caps) {
  const std::uint64_t size = at_size(spec, caps);
  if (size > caps.materialize_max)
    raise(Errc::CapExceeded, std::to_string(size) + " members exceed the materialize cap");
  PermSet set(spec.n, ConstructionId::Multiperm, spec.claimed_locality());
  const auto patterns = enumerate_bt(spec.ell(), spec.t, caps);
  const std::uint64_t masks = std::uint64_t{1} << spec.ell();
  for (const auto& mp : patterns)
    for (std::uint64_t mask = 0; mask < masks; ++mask)
      set.insert(assign(mp, PairAssignment::from_mask(mask, spec.ell())));
  return set;
}

bool at_contains(const Permutation& p, const AtSpec& spec) {
  if (p.n() != spec.n) return false;
  return spread(extract(p).first) <= spec.t;
}

RepairOutcome at_repair(const ErasedView& view, const AtSpec& spec, int j) {
  if (view.n() != spec.n)
    raise(Errc::OutOfRange, "view length " + std::to_string(view.n()) + " for an n=" +
                                std::to_string(spec.n) + " set");
  if (j < 0 || j >= view.n()) raise(Errc::OutOfRange, "position " + std::to_string(j));
  if (!view.is_erased(j)) raise(Errc::UsageError, "position " + std::to_string(j) + " is not erased");
  if (view.erased_positions().size() != 1)
    raise(Errc::MultipleErasure, "repair handles a single erasure");

  const int n = spec.n;
  const int t = spec.t;
  const int lo  = std::max(0, j - 2 * t);
  const int hi  = std::min(n - 1, j + 2 * t);

  RepairOutcome out;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int pos = lo; pos <= hi; ++pos) {
    if (pos == j) continue;
    seen[static_cast<std::size_t>(view.at(pos))] = 1;
    out.accessed.push_back(pos);
  }

  // The erased symbol's mate sits within t of j, and the erased symbol
  // itself appears nowhere else, so its mate is the one near value whose
  // partner the window never shows.
  int found = -1;
  for (int pos = std::max(0, j - t); pos <= std::min(n - 1, j + t); ++pos) {
    if (pos == j) continue;
    const int u = view.at(pos);
    const int mate = u ^ 1;
    if (seen[static_cast<std::size_t>(mate)]) continue;
    if (found >= 0 && found != mate)
      raise(Errc::Ambiguous, "two values lost their mates near position " + std::to_string(j));
    found = mate;
  }
  if (found < 0) raise(Errc::NotAMember, "no value near position " + std::to_string(j) +
                                             " is missing its mate");
  out.symbol = found;
  return out;
}

namespace {

double log2_mpz(const mpz_class& z) {
  signed long exp = 0;
  const double d = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log2(d) + static_cast<double>(exp);
}

}  // namespace

std::vector<RateRow> rate_table(const std::vector<int>& ns, const std::vector<int>& ts,
                                const Caps& caps) {
  if (ns.empty() || ts.empty()) raise(Errc::EmptyInput, "rate table needs n and t values");
  std::vector<RateRow> rows;
  rows.reserve(ns.size() * ts.size());
  for (int n : ns) {
    mpz_class total;
    mpz_fac_ui(total.get_mpz_t(), static_cast<unsigned long>(n));
    for (int t : ts) {
      AtSpec spec(n, t);
      mpz_class members(static_cast<unsigned long>(count_bt(spec.ell(), t, caps)));
      mpz_mul_2exp(members.get_mpz_t(), members.get_mpz_t(),
                   static_cast<mp_bitcnt_t>(spec.ell()));
      const double rate = n == 1 ? 1.0 : log2_mpz(members) / log2_mpz(total);
      rows.push_back(RateRow{n, t, std::move(members), rate});
    }
  }
  return rows;
}

}  // namespace permloc
