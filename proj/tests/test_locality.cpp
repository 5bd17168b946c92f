#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "permloc/block_construction.hpp"
#include "permloc/bounds.hpp"
#include "permloc/coset_census.hpp"
#include "permloc/enumerate.hpp"
#include "permloc/errors.hpp"
#include "permloc/locality.hpp"
#include "permloc/max_search.hpp"

using namespace permloc;

static PermSet whole_sn(int n) {
  PermSet s(n);
  for (const auto& p : all_permutations(n)) s.insert(p);
  return s;
}

static PermSet alternating(int n) {
  PermSet s(n);
  for (const auto& p : all_permutations(n)) {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inv;
    if (inv % 2 == 0) s.insert(p);
  }
  return s;
}

TEST_CASE("determines") {
  std::vector<std::vector<int>> s3;
  for (const auto& p : all_permutations(3)) s3.push_back(p.symbols());

  CHECK(determines(s3, {0, 1}, 2));   // last symbol forced by the other two
  CHECK(!determines(s3, {0}, 2));     // (0,1,2) vs (0,2,1)
  CHECK(determines(s3, {}, 2) == false);
  std::vector<std::vector<int>> singleton{{0, 2, 1}};
  CHECK(determines(singleton, {}, 0));  // one row determines everything

  CHECK_THROWS_AS(determines(s3, {2}, 2), Error);   // helper equals target
  CHECK_THROWS_AS(determines(s3, {3}, 2), Error);
  CHECK_THROWS_AS(determines(std::vector<std::vector<int>>{}, {0}, 1), Error);
}

TEST_CASE("verify_locality on block concatenation pairs positions") {
  PermSet s = block_concat_generate(BlockConcatSpec(4, 2));
  auto res = verify_locality(s, 1);
  REQUIRE(res.ok());
  const RepairMap& map = *res.repair;
  CHECK(map.max_helpers() == 1);
  CHECK(map.rule(0).helpers == std::vector<int>{1});
  CHECK(map.rule(1).helpers == std::vector<int>{0});
  CHECK(map.rule(2).helpers == std::vector<int>{3});
  CHECK(map.rule(3).helpers == std::vector<int>{2});
}

TEST_CASE("full symmetric group has locality n-1 and no less") {
  for (int n : {3, 4, 5}) {
    PermSet s = whole_sn(n);
    CHECK(verify_locality(s, n - 1).ok());
    auto res = verify_locality(s, n - 2);
    CHECK(!res.ok());
    CHECK(res.failed_position == 0);
  }
}

TEST_CASE("alternating group of S_4 needs exactly two helpers") {
  PermSet a4 = alternating(4);
  CHECK(a4.size() == 12);
  CHECK(verify_locality(a4, 2).ok());
  CHECK(!verify_locality(a4, 1).ok());
}

TEST_CASE("repair maps reconstruct every member at every position") {
  PermSet sets[] = {block_concat_generate(BlockConcatSpec(4, 2)), alternating(4), whole_sn(4)};
  int ds[] = {1, 2, 3};
  for (int k = 0; k < 3; ++k) {
    auto res = verify_locality(sets[k], ds[k]);
    REQUIRE(res.ok());
    for (const auto& p : sets[k].members()) {
      for (int i = 0; i < sets[k].n(); ++i) {
        ErasedView v = ErasedView::of(p, {i});
        auto out = res.repair->recover(v, i);
        CHECK(out.symbol == p[i]);
        CHECK(static_cast<int>(out.accessed.size()) <= ds[k]);
        for (int a : out.accessed) CHECK(a != i);
      }
    }
  }
}

TEST_CASE("locality is monotone in d") {
  PermSet a4 = alternating(4);
  for (int d = 2; d <= 3; ++d) CHECK(verify_locality(a4, d).ok());
}

TEST_CASE("verification budget") {
  Caps tight;
  tight.search_budget = 10;
  PermSet s = whole_sn(5);
  CHECK_THROWS_WITH_AS(verify_locality(s, 4, tight), doctest::Contains("SearchBudgetExceeded"),
                       Error);
}

TEST_CASE("verify_locality input validation") {
  PermSet empty(3);
  CHECK_THROWS_AS(verify_locality(empty, 1), Error);
  PermSet s = whole_sn(3);
  CHECK_THROWS_AS(verify_locality(s, -1), Error);
  // d = 0 succeeds only for a single member
  CHECK(!verify_locality(s, 0).ok());
  PermSet one(3);
  one.insert(Permutation({2, 0, 1}));
  CHECK(verify_locality(one, 0).ok());
}

TEST_CASE("bounds golden values") {
  auto b = bounds(4, 1);
  CHECK(b.upper_general == 12);
  REQUIRE(b.upper_d1.has_value());
  CHECK(*b.upper_d1 == 8);
  CHECK(b.lower_existential == mpq_class(3, 2));
  CHECK(b.lrc_rate_bound == mpq_class(1, 2));
  CHECK(!b.adapted);

  auto c = bounds(6, 2);
  CHECK(c.upper_general == 360);
  CHECK(!c.upper_d1.has_value());
  CHECK(c.lower_existential == 20);
  CHECK(!c.adapted);

  // d = n-1 gives the whole group
  for (int n : {3, 5, 8}) CHECK(bounds(n, n - 1).upper_general == factorial(n));

  // ceiling exponent kicks in when d+1 does not divide n
  auto e = bounds(5, 1);
  CHECK(e.adapted);
  CHECK(e.upper_general == 20);                       // 120/3!
  CHECK(e.lower_existential == mpq_class(24, 25));  // 120/5^3 reduced

  auto f = bounds(16, 1);
  REQUIRE(f.upper_d1.has_value());
  CHECK(*f.upper_d1 == 10321920);  // 16*14*12*10*8*6*4*2
}

TEST_CASE("bounds rate reporting") {
  auto b = bounds(6, 5, mpz_class(720));
  REQUIRE(b.rate().has_value());
  CHECK(*b.rate() == doctest::Approx(1.0).epsilon(1e-12));
  auto c = bounds(6, 1);
  CHECK(!c.rate().has_value());
}

TEST_CASE("bounds argument validation") {
  CHECK_THROWS_AS(bounds(4, 0), Error);
  CHECK_THROWS_AS(bounds(4, 4), Error);
  CHECK_THROWS_AS(bounds(1, 1), Error);
}

TEST_CASE("double factorial") {
  CHECK(double_factorial(4) == 8);
  CHECK(double_factorial(5) == 15);
  CHECK(double_factorial(10) == 3840);
  CHECK(double_factorial(1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK_THROWS_AS(double_factorial(-1), Error);
}

namespace {

// Independent recount: classify S_n by the tuple of block-parity residues
// built directly, map-keyed, no base-n packing.
std::map<std::vector<int>, std::uint64_t> census_oracle(int n, int d) {
  const int blocks = n / (d + 1);
  const int k = n - blocks;
  std::map<std::vector<int>, std::uint64_t> hist;
  for (const auto& w : all_permutations(n)) {
    std::vector<int> syn(static_cast<std::size_t>(blocks));
    for (int b = 0; b < blocks; ++b) {
      int sum = 0;
      for (int j = 0; j < d; ++j) sum += w[b * d + j];
      syn[static_cast<std::size_t>(b)] = ((w[k + b] - sum) % n + n) % n;
    }
    ++hist[syn];
  }
  return hist;
}

}  // namespace

TEST_CASE("coset census golden values") {
  auto c41 = coset_census(4, 1);
  CHECK(c41.num_cosets == 16);
  CHECK(c41.max_count == 8);
  CHECK(c41.total == 24);
  CHECK(c41.max_count >= 2);  // ceil(24/16)

  auto c62 = coset_census(6, 2);
  CHECK(c62.num_cosets == 36);
  CHECK(c62.max_count >= 20);
  CHECK(c62.max_count == 48);
  CHECK(c62.total == 720);
}

TEST_CASE("coset census agrees with an independent classification") {
  for (auto [n, d] : {std::pair{4, 1}, std::pair{6, 2}, std::pair{6, 1}}) {
    auto census = coset_census(n, d);
    auto oracle = census_oracle(n, d);
    std::uint64_t sum = 0;
    std::uint64_t omax = 0;
    for (const auto& [syn, cnt] : oracle) {
      std::uint64_t packed = 0;
      for (std::size_t b = syn.size(); b-- > 0;)
        packed = packed * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(syn[b]);
      CHECK(census.histogram[packed] == cnt);
      sum += cnt;
      omax = std::max(omax, cnt);
    }
    CHECK(sum == census.total);
    CHECK(omax == census.max_count);
    std::uint64_t histsum = 0;
    for (auto h : census.histogram) histsum += h;
    CHECK(histsum == census.total);
    CHECK(census.max_count * census.num_cosets >= census.total);  // pigeonhole
  }
}

TEST_CASE("coset census argument validation") {
  CHECK_THROWS_WITH_AS(coset_census(5, 1), doctest::Contains("DivisibilityViolation"), Error);
  CHECK_THROWS_WITH_AS(coset_census(8, 1), doctest::Contains("CapExceeded"), Error);
  Caps wide;
  wide.coset_n_max = 8;
  wide.sn_n_max = 8;
  CHECK(coset_census(8, 3, wide).num_cosets == 8 * 8);
}

TEST_CASE("max set search") {
  auto hit = max_set_search(4, 1, 8);
  REQUIRE(hit.witness.has_value());
  CHECK(hit.witness->size() == 8);
  CHECK(verify_locality(*hit.witness, 1).ok());

  auto miss = max_set_search(4, 1, 9);
  CHECK(!miss.witness.has_value());
  CHECK(miss.nodes > 0);

  auto s3 = max_set_search(3, 2, 6);
  REQUIRE(s3.witness.has_value());
  CHECK(s3.witness->size() == 6);

  CHECK(max_set_search(3, 1, 3).witness.has_value());
  CHECK(!max_set_search(3, 1, 4).witness.has_value());

  Caps tight;
  tight.search_budget = 5;
  CHECK_THROWS_AS(max_set_search(4, 1, 9, tight), Error);
}
