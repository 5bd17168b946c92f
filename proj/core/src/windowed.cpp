#include "permloc/windowed.hpp"

#include <algorithm>
#include <string>

#include "permloc/errors.hpp"

namespace permloc {

InfBallSpec::InfBallSpec(int n_, int r_) : n(n_), r(r_) {
  if (n < 1) raise(Errc::EmptyInput, "ball needs n >= 1");
  if (r < 0 || r > n - 1)
    raise(Errc::OutOfRange, "radius r=" + std::to_string(r) + " outside 0.." + std::to_string(n - 1));
}

namespace {

template <typename Sink>
void inf_ball_walk(const InfBallSpec& spec, Sink&& sink) {
  std::vector<int> member(static_cast<std::size_t>(spec.n), -1);
  std::vector<char> used(static_cast<std::size_t>(spec.n), 0);
  auto rec = [&](auto&& self, int j) -> void {
    if (j == spec.n) {
      sink(member);
      return;
    }
    const int lo = std::max(0, j - spec.r);
    const int hi = std::min(spec.n - 1, j + spec.r);
    for (int v = lo; v <= hi; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = 1;
      member[static_cast<std::size_t>(j)] = v;
      self(self, j + 1);
      used[static_cast<std::size_t>(v)] = 0;
    }
  };
  rec(rec, 0);
}

}  // namespace

std::uint64_t inf_ball_size(const InfBallSpec& spec, const Caps& caps) {
  std::uint64_t count = 0;
  inf_ball_walk(spec, [&](const std::vector<int>&) {
    if (++count > caps.materialize_max)
      raise(Errc::CapExceeded, "ball count exceeds cap " + std::to_string(caps.materialize_max));
  });
  return count;
}

PermSet inf_ball_generate(const InfBallSpec& spec, const Caps& caps) {
  PermSet set(spec.n, ConstructionId::InfBall, spec.claimed_locality());
  inf_ball_walk(spec, [&](const std::vector<int>& member) {
    if (set.size() >= caps.materialize_max)
      raise(Errc::CapExceeded, "ball exceeds cap " + std::to_string(caps.materialize_max));
    set.insert(Permutation(member));
  });
  return set;
}

bool inf_ball_contains(const Permutation& p, const InfBallSpec& spec) {
  if (p.n() != spec.n) return false;
  for (int j = 0; j < spec.n; ++j)
    if (std::abs(p[j] - j) > spec.r) return false;
  return true;
}

RepairOutcome inf_ball_repair(const ErasedView& view, const InfBallSpec& spec, int j) {
  if (view.n() != spec.n) raise(Errc::OutOfRange, "view length does not match spec");
  if (j < 0 || j >= spec.n) raise(Errc::OutOfRange, "position outside 0.." + std::to_string(spec.n - 1));
  if (!view.is_erased(j)) raise(Errc::UsageError, "position " + std::to_string(j) + " is not erased");
  if (view.erased_positions().size() != 1)
    raise(Errc::MultipleErasure, "repair handles a single erasure");

  RepairOutcome out;
  std::vector<char> observed(static_cast<std::size_t>(spec.n), 0);
  const int lo = std::max(0, j - 2 * spec.r);
  const int hi = std::min(spec.n - 1, j + 2 * spec.r);
  for (int p = lo; p <= hi; ++p) {
    if (p == j) continue;
    observed[static_cast<std::size_t>(view.at(p))] = 1;
    out.accessed.push_back(p);
  }
  // Any candidate value other than the erased one lives within r of its own
  // index, hence inside the window and observed; exactly one is left.
  int found = -1;
  for (int v = std::max(0, j - spec.r); v <= std::min(spec.n - 1, j + spec.r); ++v) {
    if (observed[static_cast<std::size_t>(v)]) continue;
    if (found >= 0) raise(Errc::Ambiguous, "window leaves two candidate values");
    found = v;
  }
  if (found < 0) raise(Errc::NotAMember, "window already covers every candidate value");
  out.symbol = found;
  return out;
}

MediaSetSpec::MediaSetSpec(int n_) : n(n_) {
  if (n < 2) raise(Errc::EmptyInput, "media set needs n >= 2");
}

PermSet media_generate(const MediaSetSpec& spec, const Caps& caps) {
  const int n = spec.n;
  if (n - 1 >= 63 || (std::uint64_t{1} << n) - 2 > caps.materialize_max)
    raise(Errc::CapExceeded, "media set exceeds cap " + std::to_string(caps.materialize_max));
  PermSet set(n, ConstructionId::Media, spec.claimed_locality());

  // Each member grows an interval of values one endpoint at a time; the
  // bit at step s picks the lower extension.  popcount fixes the start.
  std::vector<int> member(static_cast<std::size_t>(n));
  for (int pass = 0; pass < 2; ++pass) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
      int lo = __builtin_popcountll(mask);
      int hi = lo;
      member[0] = lo;
      for (int s = 0; s < n - 1; ++s)
        member[static_cast<std::size_t>(s + 1)] = (mask >> s) & 1 ? --lo : ++hi;
      if (pass == 1) std::reverse(member.begin(), member.end());
      set.insert(Permutation(member));
    }
  }
  return set;
}

namespace {

bool prefix_consecutive(const Permutation& p) {
  int lo = p[0], hi = p[0];
  for (int j = 1; j < p.n(); ++j) {
    lo = std::min(lo, p[j]);
    hi = std::max(hi, p[j]);
    if (hi - lo != j) return false;
  }
  return true;
}

}  // namespace

bool media_contains(const Permutation& p, const MediaSetSpec& spec) {
  if (p.n() != spec.n) return false;
  if (prefix_consecutive(p)) return true;
  std::vector<int> rev(p.symbols().rbegin(), p.symbols().rend());
  return prefix_consecutive(Permutation(rev));
}

MediaRepairContext make_media_repair_context(const MediaSetSpec& spec, const Caps& caps) {
  return MediaRepairContext{spec, media_generate(spec, caps), std::nullopt};
}

RepairOutcome media_repair(const ErasedView& view, MediaRepairContext& ctx, int j,
                           const Caps& caps) {
  const int n = ctx.spec.n;
  if (view.n() != n) raise(Errc::OutOfRange, "view length does not match spec");
  if (j < 0 || j >= n) raise(Errc::OutOfRange, "position outside 0.." + std::to_string(n - 1));
  if (!view.is_erased(j)) raise(Errc::UsageError, "position " + std::to_string(j) + " is not erased");
  if (view.erased_positions().size() != 1)
    raise(Errc::MultipleErasure, "repair handles a single erasure");

  std::vector<int> helpers;
  for (int h : {j - 1, j + 1, 0, n - 1})
    if (h >= 0 && h < n && h != j &&
        std::find(helpers.begin(), helpers.end(), h) == helpers.end())
      helpers.push_back(h);
  std::sort(helpers.begin(), helpers.end());

  RepairOutcome out;
  std::vector<int> symbols;
  for (int h : helpers) {
    symbols.push_back(view.at(h));
    out.accessed.push_back(h);
  }

  int candidate = -1;
  bool ambiguous = false;
  for (const Permutation& member : ctx.set.members()) {
    bool match = true;
    for (std::size_t idx = 0; idx < helpers.size() && match; ++idx)
      match = member[helpers[idx]] == symbols[idx];
    if (!match) continue;
    if (candidate < 0)
      candidate = member[j];
    else if (candidate != member[j])
      ambiguous = true;
  }
  if (candidate >= 0 && !ambiguous) {
    out.symbol = candidate;
    return out;
  }

  // Default cells were not decisive; fall back to a certified helper set.
  if (!ctx.fallback) {
    LocalityResult res = verify_locality(ctx.set, ctx.spec.claimed_locality(), caps);
    if (!res.ok()) raise(Errc::Ambiguous, "media set failed locality certification");
    ctx.fallback = std::move(res.repair);
  }
  return ctx.fallback->recover(view, j);
}

RepairOutcome media_repair(const ErasedView& view, const MediaSetSpec& spec, int j,
                           const Caps& caps) {
  MediaRepairContext ctx = make_media_repair_context(spec, caps);
  return media_repair(view, ctx, j, caps);
}

}  // namespace permloc
