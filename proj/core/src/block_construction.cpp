#include "permloc/block_construction.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "permloc/errors.hpp"

namespace permloc {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 wide = static_cast<unsigned __int128>(a) * b;
  if (wide > UINT64_MAX) raise(Errc::CapExceeded, "set size overflows 64 bits");
  return static_cast<std::uint64_t>(wide);
}

std::uint64_t fact_u64(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r = checked_mul(r, static_cast<std::uint64_t>(i));
  return r;
}

void check_materialize(std::uint64_t size, const Caps& caps) {
  if (size > caps.materialize_max)
    raise(Errc::CapExceeded, "set of " + std::to_string(size) + " members exceeds cap " +
                                 std::to_string(caps.materialize_max));
}

}  // namespace

BlockConcatSpec::BlockConcatSpec(int n_, int h_) : n(n_), h(h_) {
  if (n < 1) raise(Errc::EmptyInput, "block construction needs n >= 1");
  if (h < 1 || h > n)
    raise(Errc::OutOfRange, "block size h=" + std::to_string(h) + " outside 1.." + std::to_string(n));
  if (n % h != 0)
    raise(Errc::DivisibilityViolation, "h=" + std::to_string(h) + " must divide n=" + std::to_string(n));
}

std::uint64_t block_concat_size(const BlockConcatSpec& spec) {
  std::uint64_t size = fact_u64(spec.blocks());
  const std::uint64_t per_block = fact_u64(spec.h);
  for (int b = 0; b < spec.blocks(); ++b) size = checked_mul(size, per_block);
  return size;
}

void block_concat_for_each(const BlockConcatSpec& spec,
                           const std::function<void(const Permutation&)>& visit) {
  const int B = spec.blocks();
  std::vector<int> assignment(static_cast<std::size_t>(B));
  std::iota(assignment.begin(), assignment.end(), 0);
  std::vector<int> member(static_cast<std::size_t>(spec.n));
  do {
    // Odometer over per-block contents, rightmost block fastest; together
    // with the assignment loop this emits members in lexicographic order.
    std::vector<std::vector<int>> content(static_cast<std::size_t>(B));
    for (int b = 0; b < B; ++b) {
      content[static_cast<std::size_t>(b)].resize(static_cast<std::size_t>(spec.h));
      std::iota(content[static_cast<std::size_t>(b)].begin(), content[static_cast<std::size_t>(b)].end(),
                assignment[static_cast<std::size_t>(b)] * spec.h);
    }
    while (true) {
      for (int b = 0; b < B; ++b)
        std::copy(content[static_cast<std::size_t>(b)].begin(), content[static_cast<std::size_t>(b)].end(),
                  member.begin() + static_cast<std::ptrdiff_t>(b) * spec.h);
      visit(Permutation(member));
      int b = B - 1;
      while (b >= 0 && !std::next_permutation(content[static_cast<std::size_t>(b)].begin(),
                                              content[static_cast<std::size_t>(b)].end()))
        --b;
      if (b < 0) break;
      for (int r = b + 1; r < B; ++r)
        std::sort(content[static_cast<std::size_t>(r)].begin(), content[static_cast<std::size_t>(r)].end());
    }
  } while (std::next_permutation(assignment.begin(), assignment.end()));
}

PermSet block_concat_generate(const BlockConcatSpec& spec, const Caps& caps) {
  check_materialize(block_concat_size(spec), caps);
  PermSet set(spec.n, ConstructionId::BlockConcat, spec.claimed_locality());
  block_concat_for_each(spec, [&](const Permutation& p) { set.insert(p); });
  return set;
}

bool block_concat_contains(const Permutation& p, const BlockConcatSpec& spec) {
  if (p.n() != spec.n) return false;
  for (int b = 0; b < spec.blocks(); ++b) {
    const int v = p[b * spec.h] / spec.h;
    for (int j = 1; j < spec.h; ++j)
      if (p[b * spec.h + j] / spec.h != v) return false;
  }
  return true;
}

RepairOutcome block_concat_repair(const ErasedView& view, const BlockConcatSpec& spec, int j) {
  if (view.n() != spec.n) raise(Errc::OutOfRange, "view length does not match spec");
  if (j < 0 || j >= spec.n) raise(Errc::OutOfRange, "position outside 0.." + std::to_string(spec.n - 1));
  if (!view.is_erased(j)) raise(Errc::UsageError, "position " + std::to_string(j) + " is not erased");

  const int start = (j / spec.h) * spec.h;
  RepairOutcome out;
  std::vector<char> present(static_cast<std::size_t>(spec.h), 0);
  int value_block = -1;
  for (int p = start; p < start + spec.h; ++p) {
    if (p == j) continue;
    if (view.is_erased(p))
      raise(Errc::SameBlockDoubleErasure, "positions " + std::to_string(j) + " and " +
                                              std::to_string(p) + " erased in one block");
    const int v = view.at(p);
    out.accessed.push_back(p);
    value_block = v / spec.h;
    present[static_cast<std::size_t>(v % spec.h)] = 1;
  }
  if (value_block < 0) {
    // h == 1: no survivors exist; only the trivial n == 1 array is decidable.
    if (spec.n == 1) {
      out.symbol = 0;
      return out;
    }
    raise(Errc::Ambiguous, "single-cell blocks leave no survivors to read");
  }
  for (int r = 0; r < spec.h; ++r) {
    if (!present[static_cast<std::size_t>(r)]) {
      out.symbol = value_block * spec.h + r;
      return out;
    }
  }
  raise(Errc::NotAMember, "block survivors already cover the whole value block");
}

Q2Result block_concat_q2(int value, const BlockConcatSpec& spec,
                         const std::function<int(int)>& read) {
  if (value < 0 || value >= spec.n)
    raise(Errc::OutOfRange, "value outside 0.." + std::to_string(spec.n - 1));
  const int target_block = value / spec.h;
  Q2Result result;
  for (int b = 0; b < spec.blocks(); ++b) {
    const int first = read(b * spec.h);
    ++result.queries;
    if (first == value) {
      result.position = b * spec.h;
      return result;
    }
    if (first / spec.h != target_block) continue;
    for (int p = b * spec.h + 1; p < (b + 1) * spec.h; ++p) {
      const int v = read(p);
      ++result.queries;
      if (v == value) {
        result.position = p;
        return result;
      }
    }
    raise(Errc::NotAMember, "value block located but value missing");
  }
  raise(Errc::NotAMember, "no block holds the requested value");
}

RangeRestrictedSpec::RangeRestrictedSpec(int n_, int h_) : n(n_), h(h_) {
  if (n < 4) raise(Errc::EmptyInput, "range-restricted construction needs n >= 4");
  if (h < 2 || h > n / 2)
    raise(Errc::OutOfRange, "block size h=" + std::to_string(h) + " outside 2.." + std::to_string(n / 2));
  if (n % h != 0)
    raise(Errc::DivisibilityViolation, "h=" + std::to_string(h) + " must divide n=" + std::to_string(n));
}

std::uint64_t range_restricted_size(const RangeRestrictedSpec& spec) {
  return checked_mul(static_cast<std::uint64_t>(spec.n / spec.h),
                     checked_mul(fact_u64(spec.h), fact_u64(spec.n - spec.h)));
}

PermSet range_restricted_generate(const RangeRestrictedSpec& spec, const Caps& caps) {
  check_materialize(range_restricted_size(spec), caps);
  PermSet set(spec.n, ConstructionId::RangeRestricted, spec.claimed_locality());
  std::vector<int> member(static_cast<std::size_t>(spec.n));
  for (int i = 0; i < spec.n / spec.h; ++i) {
    std::vector<int> prefix(static_cast<std::size_t>(spec.h));
    std::iota(prefix.begin(), prefix.end(), i * spec.h);
    do {
      std::vector<int> suffix;
      suffix.reserve(static_cast<std::size_t>(spec.n - spec.h));
      for (int v = 0; v < spec.n; ++v)
        if (v / spec.h != i) suffix.push_back(v);
      do {
        std::copy(prefix.begin(), prefix.end(), member.begin());
        std::copy(suffix.begin(), suffix.end(), member.begin() + spec.h);
        set.insert(Permutation(member));
      } while (std::next_permutation(suffix.begin(), suffix.end()));
    } while (std::next_permutation(prefix.begin(), prefix.end()));
  }
  return set;
}

bool range_restricted_contains(const Permutation& p, const RangeRestrictedSpec& spec) {
  if (p.n() != spec.n) return false;
  const int i = p[0] / spec.h;
  for (int j = 1; j < spec.h; ++j)
    if (p[j] / spec.h != i) return false;
  return true;
}

RepairOutcome range_restricted_repair(const ErasedView& view, const RangeRestrictedSpec& spec,
                                      int j) {
  if (view.n() != spec.n) raise(Errc::OutOfRange, "view length does not match spec");
  if (j < 0 || j >= spec.n) raise(Errc::OutOfRange, "position outside 0.." + std::to_string(spec.n - 1));
  if (!view.is_erased(j)) raise(Errc::UsageError, "position " + std::to_string(j) + " is not erased");
  if (view.erased_positions().size() != 1)
    raise(Errc::MultipleErasure, "repair handles a single erasure");

  RepairOutcome out;
  if (j < spec.h) {
    std::vector<char> present(static_cast<std::size_t>(spec.h), 0);
    int block = -1;
    for (int p = 0; p < spec.h; ++p) {
      if (p == j) continue;
      const int v = view.at(p);
      out.accessed.push_back(p);
      block = v / spec.h;
      present[static_cast<std::size_t>(v % spec.h)] = 1;
    }
    for (int r = 0; r < spec.h; ++r) {
      if (!present[static_cast<std::size_t>(r)]) {
        out.symbol = block * spec.h + r;
        return out;
      }
    }
    raise(Errc::NotAMember, "prefix survivors already cover the whole value block");
  }

  // Gap rule: h >= 2 observed-suffix symbols survive from every non-prefix
  // value block, so the one block with zero survivors is the prefix's.
  const int blocks = spec.n / spec.h;
  std::vector<int> seen_in_block(static_cast<std::size_t>(blocks), 0);
  std::vector<char> seen_value(static_cast<std::size_t>(spec.n), 0);
  for (int p = spec.h; p < spec.n; ++p) {
    if (p == j) continue;
    const int v = view.at(p);
    out.accessed.push_back(p);
    ++seen_in_block[static_cast<std::size_t>(v / spec.h)];
    seen_value[static_cast<std::size_t>(v)] = 1;
  }
  int gap = -1;
  for (int b = 0; b < blocks; ++b) {
    if (seen_in_block[static_cast<std::size_t>(b)] == 0) {
      if (gap >= 0) raise(Errc::Ambiguous, "two value blocks absent from the suffix");
      gap = b;
    }
  }
  if (gap < 0) raise(Errc::NotAMember, "no value block is absent from the suffix");
  for (int v = 0; v < spec.n; ++v) {
    if (v / spec.h == gap || seen_value[static_cast<std::size_t>(v)]) continue;
    out.symbol = v;
    return out;
  }
  raise(Errc::NotAMember, "observed suffix already complete");
}

}  // namespace permloc
