// Acceptance gate: twelve checks, one PASS/FAIL line each, nonzero exit on
// any failure.  Each check recomputes its expectations from scratch inside
// its own try block so a throw turns into a FAIL line, not an abort.
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "permloc/block_construction.hpp"
#include "permloc/bounds.hpp"
#include "permloc/coset_census.hpp"
#include "permloc/distinct_code.hpp"
#include "permloc/enumerate.hpp"
#include "permloc/errors.hpp"
#include "permloc/extend.hpp"
#include "permloc/locality.hpp"
#include "permloc/max_search.hpp"
#include "permloc/multiperm.hpp"
#include "permloc/perm_poly.hpp"
#include "permloc/storage_sim.hpp"
#include "permloc/windowed.hpp"

using namespace permloc;

namespace {

int failures = 0;

void report(int k, const std::string& label, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " " << k << ": " << label;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

void criterion(int k, const std::string& label, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("threw: ") + e.what();
    ok = false;
  }
  report(k, label, ok, detail);
}

std::uint64_t fact_u64(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

ExtendedSpec make_spec8() {
  return make_extended_spec(block_concat_generate(BlockConcatSpec(2, 2)), 1,
                            build_distinct_code(FieldSpec::standard(3), 6));
}

// Constructed sets audited by the final bound-consistency criterion.
struct Audit {
  std::string name;
  int n;
  int claimed;
  std::uint64_t size;
};
std::vector<Audit> audits;

void audit(const std::string& name, const PermSet& s) {
  if (s.n() <= 8 && s.claimed_locality())
    audits.push_back({name, s.n(), *s.claimed_locality(), s.size()});
}

}  // namespace

int main() {
  criterion(1, "pairing bound is tight at n=4", [](std::string& detail) {
    PermSet s = block_concat_generate(BlockConcatSpec(4, 2));
    audit("block-concat(4,2)", s);
    bool ok = s.size() == 8 && double_factorial(4) == 8;
    ok = ok && verify_locality(s, 1).ok();
    auto nine = max_set_search(4, 1, 9);
    ok = ok && !nine.witness.has_value();
    auto eight = max_set_search(4, 1, 8);
    ok = ok && eight.witness.has_value() && verify_locality(*eight.witness, 1).ok();
    std::ostringstream ss;
    ss << "size=" << s.size() << " nine_member_witness=" << (nine.witness ? "found" : "none");
    detail = ss.str();
    return ok;
  });

  criterion(2, "closed-form sizes for both block families", [](std::string& detail) {
    bool ok = true;
    int checked = 0;
    for (auto [n, h] : {std::pair{4, 2}, {6, 2}, {6, 3}, {8, 2}, {8, 4}}) {
      PermSet s = block_concat_generate(BlockConcatSpec(n, h));
      audit("block-concat", s);
      std::uint64_t expect = fact_u64(n / h);
      for (int b = 0; b < n / h; ++b) expect *= fact_u64(h);
      ok = ok && s.size() == expect;
      ++checked;
      if (h <= n / 2) {
        PermSet r = range_restricted_generate(RangeRestrictedSpec(n, h));
        audit("range-restricted", r);
        std::uint64_t expect_r =
            static_cast<std::uint64_t>(n) * fact_u64(h - 1) * fact_u64(n - h);
        ok = ok && r.size() == expect_r;
        ++checked;
      }
    }
    detail = std::to_string(checked) + " size formulas";
    return ok;
  });

  criterion(3, "generic verifier certifies every claimed locality", [](std::string& detail) {
    bool ok = true;
    int certified = 0;
    auto certify = [&](const PermSet& s) {
      int d = std::min(*s.claimed_locality(), s.n() - 1);
      ok = ok && verify_locality(s, d).ok();
      ++certified;
    };
    for (auto [n, h] : {std::pair{4, 2}, {6, 2}, {6, 3}, {8, 2}, {8, 4}}) {
      PermSet s = block_concat_generate(BlockConcatSpec(n, h));
      certify(s);
      if (h >= 2 && h <= n / 2) {
        PermSet r = range_restricted_generate(RangeRestrictedSpec(n, h));
        certify(r);
      }
    }
    for (auto [n, r] : {std::pair{4, 1}, {5, 1}, {6, 1}, {7, 1}, {8, 1}, {8, 2}}) {
      PermSet s = inf_ball_generate(InfBallSpec(n, r));
      audit("inf-ball", s);
      certify(s);
    }
    for (int n = 3; n <= 8; ++n) {
      PermSet s = media_generate(MediaSetSpec(n));
      audit("media", s);
      certify(s);
    }
    for (auto [n, t] : {std::pair{4, 1}, {6, 1}, {6, 2}, {8, 1}, {8, 2}}) {
      PermSet s = build_at(AtSpec(n, t));
      audit("multiperm", s);
      certify(s);
    }
    ExtendedSpec spec = make_spec8();
    PermSet ext = extend_set(spec);
    audit("extend(8)", ext);
    certify(ext);
    std::ostringstream ss;
    ss << certified << " sets certified, extended n=8 set has " << ext.size() << " members";
    detail = ss.str();
    return ok;
  });

  criterion(4, "polynomial census reaches the closed-form floor", [](std::string& detail) {
    bool ok = true;
    std::ostringstream ss;
    for (int m : {3, 4}) {
      FieldSpec f = FieldSpec::standard(m);
      auto brute = enumerate_pp(f, 4, PpMode::Brute);         // full tuple scan
      auto normalized = enumerate_pp(f, 4, PpMode::Normalized);
      ok = ok && brute == normalized;
      ok = ok && brute.size() >= pp_count_lower_bound(f.n());
      for (const auto& p : brute) {
        if (!is_permutation_poly(f, p.coeffs) || p.degree() > 4) {
          ok = false;
          break;
        }
      }
      ss << "GF(" << f.n() << ")=" << brute.size() << ">=" << pp_count_lower_bound(f.n()) << " ";
    }
    detail = ss.str();
    return ok;
  });

  criterion(5, "symbol replacement golden example", [](std::string& detail) {
    ReplacementMap f = build_f({2, 3, 6}, 7);
    bool ok = f.apply(0) == 0 && f.apply(1) == 1 && f.apply(2) == 4 && f.apply(3) == 5;
    Permutation got = odot(Permutation({0, 1, 2, 3}), {2, 3, 6}, 7);
    ok = ok && got.symbols() == std::vector<int>{0, 1, 4, 5, 2, 3, 6};
    std::ostringstream ss;
    ss << "one-based (";
    for (int j = 0; j < 7; ++j) ss << (j ? "," : "") << got[j] + 1;
    ss << ")";
    detail = ss.str();
    return ok;
  });

  criterion(6, "extended repair stays within its access budget", [](std::string& detail) {
    ExtendedSpec spec = make_spec8();
    PermSet s = extend_set(spec);
    const int budget = spec.locality();  // d + t - delta + 1 = 6
    bool ok = budget == 6;
    std::uint64_t cases = 0;
    int worst = 0;
    for (const auto& p : s.members()) {
      for (int j = 0; j < 8; ++j) {
        ErasedView v = ErasedView::of(p, {j});
        auto out = extended_repair(v, spec, j);
        ok = ok && out.symbol == p[j] &&
             static_cast<int>(out.accessed.size()) <= budget;
        worst = std::max(worst, static_cast<int>(out.accessed.size()));
        ++cases;
      }
    }
    std::ostringstream ss;
    ss << cases << " repairs, max accesses " << worst << " of " << budget;
    detail = ss.str();
    return ok;
  });

  criterion(7, "pair assignment golden example and generalization", [](std::string& detail) {
    Permutation sigma =
        assign(MultiPermutation({0, 0, 1, 2, 1, 2}), PairAssignment::from_mask(0b110, 3));
    bool ok = sigma.symbols() == std::vector<int>{0, 1, 3, 5, 2, 4};
    for (int n : {4, 6, 8}) {
      PermSet a1 = build_at(AtSpec(n, 1));
      PermSet bc = block_concat_generate(BlockConcatSpec(n, 2));
      ok = ok && a1.size() == bc.size();
      for (const auto& p : a1.members()) ok = ok && bc.contains(p);
    }
    ok = ok && count_bt(3, 1) == 6 && count_bt(3, 5) == 90;
    for (auto [n, t] : {std::pair{6, 1}, {6, 2}, {8, 1}, {8, 2}})
      ok = ok && build_at(AtSpec(n, t)).size() ==
                     (std::uint64_t{1} << (n / 2)) * count_bt(n / 2, t);
    std::ostringstream ss;
    ss << "one-based sigma (";
    for (int j = 0; j < 6; ++j) ss << (j ? "," : "") << sigma[j] + 1;
    ss << ")";
    detail = ss.str();
    return ok;
  });

  criterion(8, "window repair over the spread families", [](std::string& detail) {
    bool ok = true;
    std::uint64_t cases = 0;
    for (auto [n, t] : {std::pair{6, 1}, {6, 2}, {8, 1}, {8, 2}, {10, 1}, {10, 2}}) {
      AtSpec spec(n, t);
      PermSet s = build_at(spec);
      for (const auto& p : s.members()) {
        for (int j = 0; j < n; ++j) {
          ErasedView v = ErasedView::of(p, {j});
          auto out = at_repair(v, spec, j);  // raises Ambiguous if the mate rule breaks
          ok = ok && out.symbol == p[j] &&
               static_cast<int>(out.accessed.size()) <= 4 * t;
          ++cases;
        }
      }
    }
    detail = std::to_string(cases) + " window repairs";
    return ok;
  });

  criterion(9, "census exhibits the pigeonhole cosets", [](std::string& detail) {
    auto c41 = coset_census(4, 1);
    auto c62 = coset_census(6, 2);
    bool ok = c41.max_count >= 2 && c62.max_count >= 20;
    std::uint64_t sum41 = 0, sum62 = 0;
    for (auto h : c41.histogram) sum41 += h;
    for (auto h : c62.histogram) sum62 += h;
    ok = ok && sum41 == fact_u64(4) && sum62 == fact_u64(6);
    ok = ok && c41.total == 24 && c62.total == 720;
    std::ostringstream ss;
    ss << "max(4,1)=" << c41.max_count << " max(6,2)=" << c62.max_count;
    detail = ss.str();
    return ok;
  });

  criterion(10, "windowed family counts against brute filters", [](std::string& detail) {
    bool ok = true;
    for (int n = 3; n <= 12; ++n) {
      MediaSetSpec spec(n);
      ok = ok && media_generate(spec).size() == (std::uint64_t{1} << n) - 2;
    }
    for (int n = 3; n <= 7; ++n) {
      MediaSetSpec spec(n);
      PermSet s = media_generate(spec);
      std::uint64_t brute = 0;
      for (const auto& p : all_permutations(n))
        if (media_contains(p, spec)) ++brute;
      ok = ok && brute == s.size();
    }
    std::uint64_t ball_checks = 0;
    for (int n = 2; n <= 8; ++n) {
      for (int r = 0; r <= std::min(3, n - 1); ++r) {
        InfBallSpec spec(n, r);
        std::uint64_t brute = 0;
        for (const auto& p : all_permutations(n))
          if (inf_ball_contains(p, spec)) ++brute;
        ok = ok && inf_ball_size(spec) == brute;
        ++ball_checks;
      }
    }
    detail = std::to_string(ball_checks) + " ball counts, media 3..12";
    return ok;
  });

  criterion(11, "query costs match the access model", [](std::string& detail) {
    bool ok = true;
    std::mt19937 rng(2024);
    std::vector<int> sym(10);
    std::iota(sym.begin(), sym.end(), 0);
    int worst_q2 = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      std::shuffle(sym.begin(), sym.end(), rng);
      Permutation p(sym);
      NodeArray arr;
      arr.store(p);
      int longest = 0;
      for (int i = 0; i < 10; ++i)
        longest = std::max(longest, static_cast<int>(cycle_containing(p, i).size()));
      for (int i = 0; i < 10; ++i) {
        auto q1 = arr.q1(i);
        ok = ok && q1.queries == 1 && q1.result == p[i];
      }
      for (int v = 0; v < 10; ++v) {
        auto q2 = arr.q2(v);
        ok = ok && p[q2.result] == v && q2.queries <= longest;
        ok = ok && q2.queries == static_cast<int>(cycle_containing(p, q2.result).size());
        worst_q2 = std::max(worst_q2, q2.queries);
      }
    }
    BlockConcatSpec spec(8, 2);
    PermSet s = block_concat_generate(spec);
    for (const auto& p : s.members()) {
      NodeArray arr(spec);
      arr.store(p);
      for (int v = 0; v < 8; ++v) {
        auto probe = arr.q2_block_probe(v);
        ok = ok && p[probe.result] == v && probe.queries <= 8 / 2 + 2;
      }
    }
    detail = "worst q2 walk " + std::to_string(worst_q2) + " of 10";
    return ok;
  });

  criterion(12, "sizes respect the counting bound; the extension wins at n=16",
            [](std::string& detail) {
    bool ok = !audits.empty();
    for (const auto& a : audits) {
      auto b = bounds(a.n, std::min(a.claimed, a.n - 1), mpz_class(static_cast<unsigned long>(a.size)));
      if (mpz_class(static_cast<unsigned long>(a.size)) > b.upper_general) {
        ok = false;
        detail = a.name + " breaks the bound";
      }
    }
    DistinctCode code16 = build_distinct_code(FieldSpec::standard(4), 6);
    ExtendedSpec spec16 = make_extended_spec(block_concat_generate(BlockConcatSpec(10, 2)), 1,
                                             std::move(code16));
    mpz_class product = mpz_class(static_cast<unsigned long>(spec16.inner.size())) *
                        mpz_class(static_cast<unsigned long>(spec16.code.size()));
    ok = ok && product == extended_size(spec16);
    ok = ok && product > double_factorial(16);
    if (detail.empty()) {
      std::ostringstream ss;
      ss << audits.size() << " sets audited; " << product.get_str() << " > "
         << double_factorial(16).get_str();
      detail = ss.str();
    }
    return ok;
  });

  std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
            << 12 - failures << "/12)\n";
  return failures == 0 ? 0 : 1;
}
