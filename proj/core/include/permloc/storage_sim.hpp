#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "permloc/block_construction.hpp"
#include "permloc/caps.hpp"
#include "permloc/erased_view.hpp"
#include "permloc/extend.hpp"
#include "permloc/locality.hpp"
#include "permloc/multiperm.hpp"
#include "permloc/perm_set.hpp"
#include "permloc/windowed.hpp"

namespace permloc {

// Who answers repair calls: a construction with its own procedure, or a
// generic certified RepairMap, or nobody (queries only).
using RepairBackend = std::variant<std::monostate, BlockConcatSpec, RangeRestrictedSpec,
                                   InfBallSpec, MediaRepairContext, ExtendedSpec, AtSpec,
                                   RepairMap>;

// An array of storage nodes holding one member, one symbol per node.
// Every repair and query reports exactly how many cells it touched.
class NodeArray {
 public:
  explicit NodeArray(RepairBackend backend = std::monostate{}, Caps caps = {});

  void store(const Permutation& member);  // rejects non-members of the backend's set
  void erase(const std::vector<int>& positions);
  int node_read(int i);  // counts one access; erased cells raise
  bool is_erased(int i) const;
  int n() const;
  bool stored() const { return original_.has_value(); }
  int last_accesses() const { return counter_; }

  // Recovers cell i through the backend and writes the symbol back.
  // Repairing an intact cell is a no-op with zero accesses.
  RepairOutcome repair(int i);
  std::vector<RepairOutcome> repair_all();  // ascending positions

  struct QueryResult {
    int result = 0;
    int queries = 0;
  };

  QueryResult q1(int i);         // where does value order put position i: one read
  QueryResult q2(int value);     // position of a value: follow the cycle
  QueryResult q2_block_probe(int value);  // block construction shortcut

 private:
  void require_stored() const;

  RepairBackend backend_;
  Caps caps_;
  std::optional<Permutation> original_;
  std::vector<int> cells_;
  std::vector<char> erased_;
  int counter_ = 0;
};

}  // namespace permloc
