#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "permloc/enumerate.hpp"
#include "permloc/erased_view.hpp"
#include "permloc/errors.hpp"
#include "permloc/perm_set.hpp"
#include "permloc/permutation.hpp"

using namespace permloc;

static std::uint64_t fact(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

TEST_CASE("permutation validation") {
  CHECK(Permutation({0, 1, 2}).n() == 3);
  CHECK(Permutation({1, 2, 0})[0] == 1);
  CHECK_THROWS_WITH_AS(Permutation({0, 0, 2}), doctest::Contains("DuplicateSymbol"), Error);
  CHECK_THROWS_AS(Permutation({0, 1, 3}), Error);
  CHECK_THROWS_AS(Permutation({-1, 0, 1}), Error);
  CHECK_THROWS_AS(Permutation({}), Error);
  CHECK(Permutation::identity(4).symbols() == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("inverse") {
  CHECK(inverse(Permutation({1, 2, 0})).symbols() == std::vector<int>{2, 0, 1});
  CHECK(inverse(Permutation::identity(5)) == Permutation::identity(5));

  // inverse is an involution
  std::mt19937 rng(7);
  std::vector<int> s(8);
  std::iota(s.begin(), s.end(), 0);
  for (int trial = 0; trial < 100; ++trial) {
    std::shuffle(s.begin(), s.end(), rng);
    Permutation p(s);
    CHECK(inverse(inverse(p)) == p);
    // p[inverse(p)[v]] == v
    Permutation q = inverse(p);
    for (int v = 0; v < 8; ++v) CHECK(p[q[v]] == v);
  }
}

TEST_CASE("cycle containing a position") {
  CHECK(cycle_containing(Permutation({1, 2, 0}), 0) == std::vector<int>{0, 1, 2});
  CHECK(cycle_containing(Permutation::identity(3), 1) == std::vector<int>{1});
  CHECK(cycle_containing(Permutation({1, 0, 2}), 2) == std::vector<int>{2});

  // cycles partition the positions
  std::mt19937 rng(11);
  std::vector<int> s(9);
  std::iota(s.begin(), s.end(), 0);
  for (int trial = 0; trial < 50; ++trial) {
    std::shuffle(s.begin(), s.end(), rng);
    Permutation p(s);
    std::vector<char> seen(9, 0);
    int covered = 0;
    for (int i = 0; i < 9; ++i) {
      if (seen[static_cast<std::size_t>(i)]) continue;
      auto cyc = cycle_containing(p, i);
      CHECK(cyc.front() == i);
      for (std::size_t j = 0; j < cyc.size(); ++j) {
        int a = cyc[j];
        int b = cyc[(j + 1) % cyc.size()];
        CHECK(p[a] == b);
        CHECK(!seen[static_cast<std::size_t>(a)]);
        seen[static_cast<std::size_t>(a)] = 1;
        ++covered;
      }
    }
    CHECK(covered == 9);
  }
  CHECK_THROWS_AS(cycle_containing(Permutation({0, 1}), 2), Error);
}

TEST_CASE("enumeration is lexicographic and complete") {
  auto all3 = all_permutations(3);
  REQUIRE(all3.size() == 6);
  CHECK(all3.front().symbols() == std::vector<int>{0, 1, 2});
  CHECK(all3.back().symbols() == std::vector<int>{2, 1, 0});
  CHECK(std::is_sorted(all3.begin(), all3.end(), [](const auto& a, const auto& b) {
    return a.symbols() < b.symbols();
  }));

  for (int n = 1; n <= 7; ++n) CHECK(all_permutations(n).size() == fact(n));
  CHECK(all_permutations(1).front() == Permutation::identity(1));

  Caps tight;
  tight.sn_n_max = 5;
  CHECK_THROWS_WITH_AS(all_permutations(6, tight), doctest::Contains("CapExceeded"), Error);
  CHECK_THROWS_AS(all_permutations(0), Error);
}

TEST_CASE("perm set dedup and lookup") {
  PermSet s(3);
  CHECK(s.insert(Permutation({0, 1, 2})));
  CHECK(s.insert(Permutation({1, 2, 0})));
  CHECK(!s.insert(Permutation({0, 1, 2})));
  CHECK(s.size() == 2);
  CHECK(s.contains({1, 2, 0}));
  CHECK(!s.contains({2, 1, 0}));
  CHECK(s.index_of({1, 2, 0}) == 1);
  CHECK(!s.index_of({2, 1, 0}).has_value());
  CHECK(s[0] == Permutation({0, 1, 2}));
  CHECK_THROWS_AS(s.insert(Permutation({0, 1, 2, 3})), Error);
}

TEST_CASE("permset text format round trip") {
  PermSet s(3, ConstructionId::BlockConcat, 1);
  s.insert(Permutation({0, 1, 2}));
  s.insert(Permutation({2, 0, 1}));

  std::ostringstream out;
  write_permset(s, out);
  CHECK(out.str() == "PERMSET 1\nn=3 d=1 construction=block-concat\n0 1 2\n2 0 1\n");

  std::istringstream in(out.str());
  PermSet back = read_permset(in);
  CHECK(back.n() == 3);
  CHECK(back.size() == 2);
  CHECK(back.construction() == ConstructionId::BlockConcat);
  CHECK(back.claimed_locality() == 1);
  CHECK(back[0] == s[0]);
  CHECK(back[1] == s[1]);

  std::ostringstream again;
  write_permset(back, again);
  CHECK(again.str() == out.str());
}

TEST_CASE("permset format without locality claim") {
  PermSet s(2);
  s.insert(Permutation({1, 0}));
  std::ostringstream out;
  write_permset(s, out);
  CHECK(out.str() == "PERMSET 1\nn=2 d=- construction=none\n1 0\n");
  std::istringstream in(out.str());
  PermSet back = read_permset(in);
  CHECK(!back.claimed_locality().has_value());
  CHECK(back.construction() == ConstructionId::None);
}

TEST_CASE("permset reader is strict") {
  auto rejects = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_WITH_AS(read_permset(in), doctest::Contains("FormatError"), Error);
  };
  rejects("PERMSET 2\nn=2 d=- construction=none\n0 1\n");
  rejects("PERMSET 1\r\nn=2 d=- construction=none\n0 1\n");
  rejects("PERMSET 1\nn=2 d=- construction=none\n0  1\n");
  rejects("PERMSET 1\nn=2 d=- construction=none\n0 1 \n");
  rejects("PERMSET 1\nn=2 d=- construction=none\n0 1\n0 1\n");
  rejects("PERMSET 1\nn=2 d=- construction=bogus\n0 1\n");
  rejects("PERMSET 1\nn=2 construction=none\n0 1\n");
  rejects("PERMSET 1\nn=2 d=x construction=none\n0 1\n");
  rejects("PERMSET 1\nn=2 d=- construction=none\n0 1 2\n");
  rejects("");

  // well-formed text carrying an invalid symbol fails symbol validation instead
  std::istringstream bad_symbol("PERMSET 1\nn=2 d=- construction=none\n0 2\n");
  CHECK_THROWS_WITH_AS(read_permset(bad_symbol), doctest::Contains("OutOfRange"), Error);
}

TEST_CASE("construction ids round trip") {
  for (auto id : {ConstructionId::None, ConstructionId::BlockConcat,
                  ConstructionId::RangeRestricted, ConstructionId::InfBall,
                  ConstructionId::Media, ConstructionId::Extend, ConstructionId::Multiperm})
    CHECK(construction_from_string(to_string(id)) == id);
  CHECK_THROWS_AS(construction_from_string("nope"), Error);
}

TEST_CASE("erased view") {
  Permutation p({3, 0, 2, 1});
  ErasedView v = ErasedView::of(p, {1, 3});
  CHECK(v.n() == 4);
  CHECK(v.known_count() == 2);
  CHECK(v.is_erased(1));
  CHECK(!v.is_erased(0));
  CHECK(v.at(0) == 3);
  CHECK(v.at(2) == 2);
  CHECK_THROWS_WITH_AS(v.at(1), doctest::Contains("CellErased"), Error);
  CHECK(v.erased_positions() == std::vector<int>{1, 3});

  CHECK_THROWS_AS(ErasedView::of(p, {4}), Error);
  CHECK_THROWS_AS(ErasedView::of(p, {-1}), Error);
  // duplicate erasure positions collapse
  ErasedView w = ErasedView::of(p, {2, 2});
  CHECK(w.erased_positions() == std::vector<int>{2});
}
