#pragma once

#include <cstdint>
#include <optional>

#include "permloc/caps.hpp"
#include "permloc/erased_view.hpp"
#include "permloc/locality.hpp"
#include "permloc/perm_set.hpp"

namespace permloc {

// Permutations that displace every value by at most r.  Whatever value an
// erased position held, the competitors for it all sit within 2r cells, so
// reading the window [j-2r, j+2r] pins the missing value: locality 4r.
struct InfBallSpec {
  int n;
  int r;
  InfBallSpec(int n, int r);
  int claimed_locality() const { return 4 * r; }
};

std::uint64_t inf_ball_size(const InfBallSpec& spec, const Caps& caps = {});
PermSet inf_ball_generate(const InfBallSpec& spec, const Caps& caps = {});
bool inf_ball_contains(const Permutation& p, const InfBallSpec& spec);
RepairOutcome inf_ball_repair(const ErasedView& view, const InfBallSpec& spec, int j);

// Permutations whose every prefix, or every suffix, is an interval of
// consecutive values: 2^n - 2 members, repairable from at most 4 cells.
struct MediaSetSpec {
  int n;
  explicit MediaSetSpec(int n);
  int claimed_locality() const { return 4; }
};

PermSet media_generate(const MediaSetSpec& spec, const Caps& caps = {});
bool media_contains(const Permutation& p, const MediaSetSpec& spec);

// Repair filters the member set against the default helper cells
// {j-1, j+1, 0, n-1}; if those ever fail to single out the value, the
// helper set certified by verify_locality takes over.
struct MediaRepairContext {
  MediaSetSpec spec;
  PermSet set;
  std::optional<RepairMap> fallback;
};

MediaRepairContext make_media_repair_context(const MediaSetSpec& spec, const Caps& caps = {});
RepairOutcome media_repair(const ErasedView& view, MediaRepairContext& ctx, int j,
                           const Caps& caps = {});
RepairOutcome media_repair(const ErasedView& view, const MediaSetSpec& spec, int j,
                           const Caps& caps = {});

}  // namespace permloc
