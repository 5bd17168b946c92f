#include "permloc/storage_sim.hpp"

#include <algorithm>
#include <string>

#include "permloc/errors.hpp"

namespace permloc {

NodeArray::NodeArray(RepairBackend backend, Caps caps)
    : backend_(std::move(backend)), caps_(caps) {}

namespace {

struct ContainsVisitor {
  const Permutation& p;

  bool operator()(const std::monostate&) const { return true; }
  bool operator()(const BlockConcatSpec& s) const { return block_concat_contains(p, s); }
  bool operator()(const RangeRestrictedSpec& s) const { return range_restricted_contains(p, s); }
  bool operator()(const InfBallSpec& s) const { return inf_ball_contains(p, s); }
  bool operator()(const MediaRepairContext& c) const { return media_contains(p, c.spec); }
  bool operator()(const ExtendedSpec& s) const { return extended_contains(p, s); }
  bool operator()(const AtSpec& s) const { return at_contains(p, s); }
  bool operator()(const RepairMap& m) const { return p.n() == m.n(); }
};

struct RepairVisitor {
  const ErasedView& view;
  int i;
  const Caps& caps;

  RepairOutcome operator()(std::monostate&) const {
    raise(Errc::UsageError, "no repair backend registered");
  }
  RepairOutcome operator()(BlockConcatSpec& s) const { return block_concat_repair(view, s, i); }
  RepairOutcome operator()(RangeRestrictedSpec& s) const {
    return range_restricted_repair(view, s, i);
  }
  RepairOutcome operator()(InfBallSpec& s) const { return inf_ball_repair(view, s, i); }
  RepairOutcome operator()(MediaRepairContext& c) const { return media_repair(view, c, i, caps); }
  RepairOutcome operator()(ExtendedSpec& s) const { return extended_repair(view, s, i); }
  RepairOutcome operator()(AtSpec& s) const { return at_repair(view, s, i); }
  RepairOutcome operator()(RepairMap& m) const { return m.recover(view, i); }
};

}  // namespace

void NodeArray::store(const Permutation& member) {
  if (!std::visit(ContainsVisitor{member}, backend_))
    raise(Errc::NotAMember, "member is not in the backend's set");
  original_ = member;
  cells_ = member.symbols();
  erased_.assign(cells_.size(), 0);
  counter_ = 0;
}

void NodeArray::require_stored() const {
  if (!original_) raise(Errc::EmptyInput, "no member stored");
}

void NodeArray::erase(const std::vector<int>& positions) {
  require_stored();
  for (int i : positions) {
    if (i < 0 || i >= n()) raise(Errc::OutOfRange, "position " + std::to_string(i));
    erased_[static_cast<std::size_t>(i)] = 1;
  }
}

int NodeArray::node_read(int i) {
  require_stored();
  if (i < 0 || i >= n()) raise(Errc::OutOfRange, "position " + std::to_string(i));
  ++counter_;
  if (erased_[static_cast<std::size_t>(i)])
    raise(Errc::CellErased, "cell " + std::to_string(i) + " is erased");
  return cells_[static_cast<std::size_t>(i)];
}

bool NodeArray::is_erased(int i) const {
  require_stored();
  if (i < 0 || i >= n()) raise(Errc::OutOfRange, "position " + std::to_string(i));
  return erased_[static_cast<std::size_t>(i)];
}

int NodeArray::n() const {
  require_stored();
  return original_->n();
}

RepairOutcome NodeArray::repair(int i) {
  require_stored();
  if (i < 0 || i >= n()) raise(Errc::OutOfRange, "position " + std::to_string(i));
  counter_ = 0;
  if (!erased_[static_cast<std::size_t>(i)])
    return RepairOutcome{cells_[static_cast<std::size_t>(i)], {}};

  std::vector<int> erased;
  for (int p = 0; p < n(); ++p)
    if (erased_[static_cast<std::size_t>(p)]) erased.push_back(p);
  const ErasedView view = ErasedView::of(*original_, erased);

  RepairOutcome out = std::visit(RepairVisitor{view, i, caps_}, backend_);
  cells_[static_cast<std::size_t>(i)] = out.symbol;
  erased_[static_cast<std::size_t>(i)] = 0;
  counter_ = static_cast<int>(out.accessed.size());
  return out;
}

std::vector<RepairOutcome> NodeArray::repair_all() {
  require_stored();
  std::vector<int> todo;
  for (int p = 0; p < n(); ++p)
    if (erased_[static_cast<std::size_t>(p)]) todo.push_back(p);
  std::vector<RepairOutcome> outcomes;
  outcomes.reserve(todo.size());
  int total = 0;
  for (int p : todo) {
    outcomes.push_back(repair(p));
    total += counter_;
  }
  counter_ = total;
  return outcomes;
}

NodeArray::QueryResult NodeArray::q1(int i) {
  require_stored();
  counter_ = 0;
  return QueryResult{node_read(i), counter_};
}

NodeArray::QueryResult NodeArray::q2(int value) {
  require_stored();
  if (value < 0 || value >= n()) raise(Errc::OutOfRange, "value " + std::to_string(value));
  counter_ = 0;
  int pos = value;
  for (int steps = 0; steps < n(); ++steps) {
    const int s = node_read(pos);
    if (s == value) return QueryResult{pos, counter_};
    pos = s;
  }
  raise(Errc::NotAMember, "cycle walk did not close; storage is corrupt");
}

NodeArray::QueryResult NodeArray::q2_block_probe(int value) {
  require_stored();
  auto* spec = std::get_if<BlockConcatSpec>(&backend_);
  if (!spec) raise(Errc::UsageError, "block probing needs a block construction backend");
  counter_ = 0;
  const Q2Result r = block_concat_q2(value, *spec, [this](int i) { return node_read(i); });
  return QueryResult{r.position, counter_};
}

}  // namespace permloc
