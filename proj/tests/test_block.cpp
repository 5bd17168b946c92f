#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "permloc/block_construction.hpp"
#include "permloc/bounds.hpp"
#include "permloc/enumerate.hpp"
#include "permloc/errors.hpp"
#include "permloc/locality.hpp"

using namespace permloc;

static std::uint64_t fact(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

static std::uint64_t bc_formula(int n, int h) {
  std::uint64_t r = fact(n / h);
  for (int b = 0; b < n / h; ++b) r *= fact(h);
  return r;
}

TEST_CASE("block concatenation sizes match the closed form") {
  for (auto [n, h] : {std::pair{4, 2}, {6, 2}, {6, 3}, {8, 2}, {8, 4}, {9, 3}}) {
    BlockConcatSpec spec(n, h);
    CHECK(block_concat_size(spec) == bc_formula(n, h));
    PermSet s = block_concat_generate(spec);
    CHECK(s.size() == bc_formula(n, h));
    CHECK(s.n() == n);
    CHECK(s.construction() == ConstructionId::BlockConcat);
    CHECK(s.claimed_locality() == spec.claimed_locality());
  }
  CHECK(block_concat_size(BlockConcatSpec(4, 2)) == 8);  // equals 4!!
  CHECK(block_concat_size(BlockConcatSpec(6, 3)) == 72);
}

TEST_CASE("block concatenation members are exactly the blockwise ones") {
  BlockConcatSpec spec(6, 2);
  PermSet s = block_concat_generate(spec);
  std::set<std::vector<int>> got;
  for (const auto& p : s.members()) got.insert(p.symbols());
  CHECK(got.size() == s.size());

  std::uint64_t matching = 0;
  for (const auto& p : all_permutations(6)) {
    bool member = true;
    for (int b = 0; b < 3 && member; ++b) {
      int lo = std::min({p[2 * b], p[2 * b + 1]});
      int hi = std::max({p[2 * b], p[2 * b + 1]});
      if (lo % 2 != 0 || hi != lo + 1) member = false;
    }
    CHECK(member == block_concat_contains(p, spec));
    CHECK(member == s.contains(p));
    if (member) ++matching;
  }
  CHECK(matching == s.size());
}

TEST_CASE("block concatenation generation is ordered and bounded") {
  PermSet s = block_concat_generate(BlockConcatSpec(4, 2));
  CHECK(s[0].symbols() == std::vector<int>{0, 1, 2, 3});
  CHECK(s[s.size() - 1].symbols() == std::vector<int>{3, 2, 1, 0});
  CHECK(std::is_sorted(s.members().begin(), s.members().end(),
                       [](const auto& a, const auto& b) { return a.symbols() < b.symbols(); }));

  Caps tiny;
  tiny.materialize_max = 7;
  CHECK_THROWS_WITH_AS(block_concat_generate(BlockConcatSpec(4, 2), tiny),
                       doctest::Contains("CapExceeded"), Error);
}

TEST_CASE("degenerate block lengths give the whole group") {
  for (int h : {1, 4}) {
    BlockConcatSpec spec(4, h);
    CHECK(block_concat_size(spec) == 24);
    CHECK(spec.claimed_locality() == 3);
    PermSet s = block_concat_generate(spec);
    CHECK(s.size() == 24);
    for (const auto& p : all_permutations(4)) CHECK(block_concat_contains(p, spec));
  }
}

TEST_CASE("block spec validation") {
  CHECK_THROWS_WITH_AS(BlockConcatSpec(6, 4), doctest::Contains("DivisibilityViolation"), Error);
  CHECK_THROWS_AS(BlockConcatSpec(6, 0), Error);
  CHECK_THROWS_AS(BlockConcatSpec(6, 7), Error);
  CHECK_THROWS_AS(BlockConcatSpec(0, 1), Error);
}

TEST_CASE("block repair reads only the home block") {
  for (auto [n, h] : {std::pair{4, 2}, {6, 2}, {6, 3}, {8, 4}}) {
    BlockConcatSpec spec(n, h);
    PermSet s = block_concat_generate(spec);
    for (const auto& p : s.members()) {
      for (int j = 0; j < n; ++j) {
        ErasedView v = ErasedView::of(p, {j});
        auto out = block_concat_repair(v, spec, j);
        CHECK(out.symbol == p[j]);
        CHECK(static_cast<int>(out.accessed.size()) == h - 1);
        for (int a : out.accessed) {
          CHECK(a / h == j / h);
          CHECK(a != j);
        }
      }
    }
  }
}

TEST_CASE("block repair tolerates erasures in other blocks only") {
  BlockConcatSpec spec(6, 2);
  PermSet s = block_concat_generate(spec);
  const Permutation& p = s[5];

  ErasedView cross = ErasedView::of(p, {0, 2, 4});
  for (int j : {0, 2, 4}) CHECK(block_concat_repair(cross, spec, j).symbol == p[j]);

  ErasedView same = ErasedView::of(p, {2, 3});
  CHECK_THROWS_WITH_AS(block_concat_repair(same, spec, 2),
                       doctest::Contains("SameBlockDoubleErasure"), Error);
  ErasedView intact = ErasedView::of(p, {0});
  CHECK_THROWS_AS(block_concat_repair(intact, spec, 1), Error);
}

TEST_CASE("verify_locality certifies the claimed block locality") {
  for (auto [n, h] : {std::pair{4, 2}, {6, 2}, {6, 3}}) {
    PermSet s = block_concat_generate(BlockConcatSpec(n, h));
    CHECK(verify_locality(s, h - 1).ok());
    if (h > 2) CHECK(!verify_locality(s, h - 2).ok());
  }
}

TEST_CASE("value search by block probing") {
  for (auto [n, h] : {std::pair{8, 2}, {6, 3}, {8, 4}}) {
    BlockConcatSpec spec(n, h);
    PermSet s = block_concat_generate(spec);
    for (const auto& p : s.members()) {
      for (int value = 0; value < n; ++value) {
        int reads = 0;
        auto res = block_concat_q2(value, spec, [&](int i) {
          ++reads;
          return p[i];
        });
        CHECK(p[res.position] == value);
        CHECK(res.queries == reads);
        CHECK(res.queries <= n / h + h);
      }
    }
  }
}

TEST_CASE("range restricted sizes match the closed form") {
  for (auto [n, h] : {std::pair{4, 2}, {6, 2}, {6, 3}, {8, 2}, {8, 4}}) {
    RangeRestrictedSpec spec(n, h);
    std::uint64_t expect = static_cast<std::uint64_t>(n / h) * fact(h) * fact(n - h);
    CHECK(range_restricted_size(spec) == expect);
    PermSet s = range_restricted_generate(spec);
    CHECK(s.size() == expect);
    CHECK(s.construction() == ConstructionId::RangeRestricted);
    CHECK(s.claimed_locality() == n - h - 1);
  }
  CHECK(range_restricted_size(RangeRestrictedSpec(6, 2)) == 144);
}

TEST_CASE("range restricted membership") {
  RangeRestrictedSpec spec(6, 2);
  PermSet s = range_restricted_generate(spec);
  for (const auto& p : all_permutations(6)) {
    // members start with a full value block in the first h positions
    int lo = std::min(p[0], p[1]);
    bool member = (lo % 2 == 0) && (std::max(p[0], p[1]) == lo + 1);
    CHECK(member == range_restricted_contains(p, spec));
    CHECK(member == s.contains(p));
  }
}

TEST_CASE("range restricted repair") {
  for (auto [n, h] : {std::pair{4, 2}, {6, 2}, {6, 3}}) {
    RangeRestrictedSpec spec(n, h);
    PermSet s = range_restricted_generate(spec);
    for (const auto& p : s.members()) {
      for (int j = 0; j < n; ++j) {
        ErasedView v = ErasedView::of(p, {j});
        auto out = range_restricted_repair(v, spec, j);
        CHECK(out.symbol == p[j]);
        int budget = j < h ? h - 1 : n - h - 1;
        CHECK(static_cast<int>(out.accessed.size()) <= budget);
      }
    }
  }
}

TEST_CASE("range restricted repair wants a single erasure") {
  RangeRestrictedSpec spec(6, 2);
  PermSet s = range_restricted_generate(spec);
  ErasedView v = ErasedView::of(s[0], {2, 4});
  CHECK_THROWS_WITH_AS(range_restricted_repair(v, spec, 2), doctest::Contains("MultipleErasure"),
                       Error);
}

TEST_CASE("range restricted spec validation") {
  CHECK_THROWS_AS(RangeRestrictedSpec(6, 4), Error);   // 4 does not divide 6
  CHECK_THROWS_AS(RangeRestrictedSpec(6, 1), Error);   // h < 2
  CHECK_THROWS_AS(RangeRestrictedSpec(6, 6), Error);   // h > n/2
  CHECK(RangeRestrictedSpec(6, 3).claimed_locality() == 2);
}

TEST_CASE("verify_locality certifies the range restricted claim") {
  for (auto [n, h] : {std::pair{4, 2}, {6, 2}, {6, 3}}) {
    PermSet s = range_restricted_generate(RangeRestrictedSpec(n, h));
    CHECK(verify_locality(s, n - h - 1).ok());
  }
}

TEST_CASE("construction sizes respect the counting bound") {
  for (auto [n, h] : {std::pair{4, 2}, {6, 2}, {6, 3}, {8, 2}}) {
    PermSet s = block_concat_generate(BlockConcatSpec(n, h));
    auto b = bounds(n, *s.claimed_locality(), mpz_class(static_cast<unsigned long>(s.size())));
    CHECK(mpz_class(static_cast<unsigned long>(s.size())) <= b.upper_general);
  }
}
