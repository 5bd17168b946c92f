#include "permloc/erased_view.hpp"

#include <string>
#include <unordered_set>

#include "permloc/errors.hpp"

namespace permloc {

ErasedView::ErasedView(std::vector<std::optional<int>> cells) : cells_(std::move(cells)) {
  if (cells_.empty()) raise(Errc::EmptyInput, "view must have length >= 1");
  std::unordered_set<int> seen;
  for (int i = 0; i < n(); ++i) {
    if (!cells_[static_cast<std::size_t>(i)]) {
      erased_.push_back(i);
      continue;
    }
    const int v = *cells_[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n())
      raise(Errc::OutOfRange, "symbol " + std::to_string(v) + " outside 0.." + std::to_string(n() - 1));
    if (!seen.insert(v).second)
      raise(Errc::DuplicateSymbol, "symbol " + std::to_string(v) + " appears twice");
  }
}

ErasedView ErasedView::of(const Permutation& p, const std::vector<int>& erased) {
  std::vector<std::optional<int>> cells(static_cast<std::size_t>(p.n()));
  for (int i = 0; i < p.n(); ++i) cells[static_cast<std::size_t>(i)] = p[i];
  for (int e : erased) {
    if (e < 0 || e >= p.n())
      raise(Errc::OutOfRange, "erased position " + std::to_string(e) + " outside 0.." +
                                  std::to_string(p.n() - 1));
    cells[static_cast<std::size_t>(e)].reset();
  }
  return ErasedView(std::move(cells));
}

bool ErasedView::is_erased(int i) const {
  if (i < 0 || i >= n())
    raise(Errc::OutOfRange, "position " + std::to_string(i) + " outside 0.." + std::to_string(n() - 1));
  return !cells_[static_cast<std::size_t>(i)].has_value();
}

int ErasedView::at(int i) const {
  if (is_erased(i)) raise(Errc::CellErased, "position " + std::to_string(i) + " is erased");
  return *cells_[static_cast<std::size_t>(i)];
}

}  // namespace permloc
