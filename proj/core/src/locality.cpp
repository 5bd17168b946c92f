#include "permloc/locality.hpp"

#include <algorithm>

namespace permloc {

RepairMap::RepairMap(int n, std::vector<Rule> rules) : n_(n), rules_(std::move(rules)) {
  if (static_cast<int>(rules_.size()) != n)
    raise(Errc::OutOfRange, "repair map needs one rule per position");
}

const RepairMap::Rule& RepairMap::rule(int i) const {
  if (i < 0 || i >= n_) raise(Errc::OutOfRange, "no rule for position " + std::to_string(i));
  return rules_[static_cast<std::size_t>(i)];
}

int RepairMap::max_helpers() const {
  std::size_t m = 0;
  for (const Rule& r : rules_) m = std::max(m, r.helpers.size());
  return static_cast<int>(m);
}

RepairOutcome RepairMap::recover(const ErasedView& view, int i) const {
  const Rule& r = rule(i);
  RepairOutcome out;
  std::vector<int> key;
  key.reserve(r.helpers.size());
  for (int h : r.helpers) {
    if (view.is_erased(h))
      raise(Errc::MultipleErasure, "helper position " + std::to_string(h) + " is erased too");
    key.push_back(view.at(h));
    out.accessed.push_back(h);
  }
  auto it = r.table.find(key);
  if (it == r.table.end())
    raise(Errc::NotAMember, "projection not produced by any certified member");
  out.symbol = it->second;
  return out;
}

LocalityResult verify_locality(const PermSet& set, int d, const Caps& caps) {
  return detail::verify_locality_rows(set.members(), set.n(), d, caps);
}

LocalityResult verify_locality(const std::vector<std::vector<int>>& rows, int d,
                               const Caps& caps) {
  if (rows.empty()) raise(Errc::EmptyInput, "verification needs at least one member");
  return detail::verify_locality_rows(rows, row_length(rows[0]), d, caps);
}

}  // namespace permloc
