#include <CLI11.hpp>

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "permloc/block_construction.hpp"
#include "permloc/bounds.hpp"
#include "permloc/caps.hpp"
#include "permloc/coset_census.hpp"
#include "permloc/distinct_code.hpp"
#include "permloc/errors.hpp"
#include "permloc/extend.hpp"
#include "permloc/gf.hpp"
#include "permloc/locality.hpp"
#include "permloc/max_search.hpp"
#include "permloc/multiperm.hpp"
#include "permloc/perm_poly.hpp"
#include "permloc/perm_set.hpp"
#include "permloc/storage_sim.hpp"
#include "permloc/windowed.hpp"

namespace {

using namespace permloc;

std::string fmt_rate(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", r);
  return buf;
}

void report_set(const PermSet& set, const std::string& out) {
  std::cout << "construction=" << to_string(set.construction()) << "\n";
  std::cout << "n=" << set.n() << "\n";
  std::cout << "members=" << set.size() << "\n";
  if (set.claimed_locality())
    std::cout << "claimed_locality=" << *set.claimed_locality() << "\n";
  std::cout << "out=" << out << "\n";
}

int parse_inner_h(const std::string& inner) {
  const std::string prefix = "block-concat:h=";
  if (inner.rfind(prefix, 0) != 0)
    raise(Errc::UsageError, "--inner supports only block-concat:h=<h>, got " + inner);
  try {
    std::size_t used = 0;
    const int h = std::stoi(inner.substr(prefix.size()), &used);
    if (used != inner.size() - prefix.size()) throw std::invalid_argument("trailing");
    return h;
  } catch (const std::exception&) {
    raise(Errc::UsageError, "bad --inner value " + inner);
  }
}

// Rebuilds the repair backend a PERMSET file implies.  The construction id
// plus n and the claimed locality pin the parameters: h = d+1 for block
// concatenation, h = n-d-1 for range restriction, r = d/4 for the ball,
// t = d/4 for pair patterns, and the shipped t=6 code over GF(n) for the
// extension.  --generic ignores the id and certifies a fresh repair map.
RepairBackend backend_for(const PermSet& set, bool generic, std::optional<int> d_override,
                          const Caps& caps) {
  std::optional<int> d = d_override ? d_override : set.claimed_locality();
  if (generic || set.construction() == ConstructionId::None) {
    if (!d) raise(Errc::UsageError, "the file claims no locality; pass --d");
    auto res = verify_locality(set, *d, caps);
    if (!res.ok())
      raise(Errc::UsageError, "set lacks locality " + std::to_string(*d) + " at position " +
                                  std::to_string(*res.failed_position));
    return std::move(*res.repair);
  }
  const int n = set.n();
  switch (set.construction()) {
    case ConstructionId::BlockConcat:
      if (!d) raise(Errc::UsageError, "block-concat file claims no locality; pass --d");
      return BlockConcatSpec(n, *d + 1);
    case ConstructionId::RangeRestricted:
      if (!d) raise(Errc::UsageError, "range-restricted file claims no locality; pass --d");
      return RangeRestrictedSpec(n, n - *d - 1);
    case ConstructionId::InfBall:
      if (!d) raise(Errc::UsageError, "inf-ball file claims no locality; pass --d");
      if (*d % 4 != 0) raise(Errc::UsageError, "inf-ball locality must be a multiple of 4");
      return InfBallSpec(n, *d / 4);
    case ConstructionId::Media:
      return make_media_repair_context(MediaSetSpec(n), caps);
    case ConstructionId::Extend: {
      if (!d) raise(Errc::UsageError, "extend file claims no locality; pass --d");
      int m = 0;
      while ((1 << m) < n) ++m;
      if ((1 << m) != n) raise(Errc::UsageError, "extend needs n to be a power of two");
      const int t = 6;
      const int h = *d - 4;
      DistinctCode code = build_distinct_code(FieldSpec::standard(m), t, std::nullopt, 4, caps);
      BlockConcatSpec inner_spec(n - t, h);
      PermSet inner = block_concat_generate(inner_spec, caps);
      return make_extended_spec(std::move(inner), inner_spec.claimed_locality(), std::move(code),
                                caps);
    }
    case ConstructionId::Multiperm:
      if (!d) raise(Errc::UsageError, "multiperm file claims no locality; pass --d");
      if (*d % 4 != 0) raise(Errc::UsageError, "multiperm locality must be a multiple of 4");
      return AtSpec(n, *d / 4);
    default:
      raise(Errc::UsageError, "file has no repair backend; pass --generic");
  }
}

struct Options {
  Caps caps;
  std::uint64_t seed = 0;
  bool pretty = false;
};

void run_construct_block(Options& o, int n, int h, const std::string& out) {
  PermSet set = block_concat_generate(BlockConcatSpec(n, h), o.caps);
  write_permset_file(set, out);
  report_set(set, out);
}

void run_construct_range(Options& o, int n, int h, const std::string& out) {
  PermSet set = range_restricted_generate(RangeRestrictedSpec(n, h), o.caps);
  write_permset_file(set, out);
  report_set(set, out);
}

void run_construct_ball(Options& o, int n, int r, const std::string& out) {
  PermSet set = inf_ball_generate(InfBallSpec(n, r), o.caps);
  write_permset_file(set, out);
  report_set(set, out);
}

void run_construct_media(Options& o, int n, const std::string& out) {
  PermSet set = media_generate(MediaSetSpec(n), o.caps);
  write_permset_file(set, out);
  report_set(set, out);
}

void run_construct_extend(Options& o, int n, int t, int m, const std::string& inner,
                          const std::string& out) {
  if ((1 << m) != n)
    raise(Errc::UsageError, "--m must satisfy 2^m = n, got m=" + std::to_string(m) + " for n=" +
                                std::to_string(n));
  const int h = parse_inner_h(inner);
  DistinctCode code = build_distinct_code(FieldSpec::standard(m), t, std::nullopt, 4, o.caps);
  BlockConcatSpec inner_spec(n - t, h);
  PermSet inner_set = block_concat_generate(inner_spec, o.caps);
  ExtendedSpec spec = make_extended_spec(std::move(inner_set), inner_spec.claimed_locality(),
                                         std::move(code), o.caps);
  PermSet set = extend_set(spec, o.caps);
  write_permset_file(set, out);
  report_set(set, out);
}

void run_construct_multiperm(Options& o, int n, int t, const std::string& out) {
  PermSet set = build_at(AtSpec(n, t), o.caps);
  write_permset_file(set, out);
  report_set(set, out);
}

void run_verify(Options& o, const std::string& file, int d) {
  PermSet set = read_permset_file(file);
  auto res = verify_locality(set, d, o.caps);
  std::cout << "file=" << file << "\n";
  std::cout << "n=" << set.n() << "\n";
  std::cout << "members=" << set.size() << "\n";
  std::cout << "construction=" << to_string(set.construction()) << "\n";
  std::cout << "d=" << d << "\n";
  std::cout << "ok=" << (res.ok() ? "true" : "false") << "\n";
  if (res.ok())
    std::cout << "max_helpers=" << res.repair->max_helpers() << "\n";
  else
    std::cout << "failed_position=" << *res.failed_position << "\n";
  if (!res.ok()) std::exit(2);
}

void run_bounds(Options& o, int n, int d) {
  BoundReport r = bounds(n, d);
  if (o.pretty) {
    std::cout << "size limits for locality-" << d << " subsets of S_" << n << "\n";
    std::cout << "  upper (general)   " << r.upper_general.get_str() << "\n";
    if (r.upper_d1) std::cout << "  upper (d=1)       " << r.upper_d1->get_str() << "\n";
    std::cout << "  lower (existence) " << r.lower_existential.get_str()
              << (r.adapted ? "  (rounded block count)" : "") << "\n";
    std::cout << "  rate cap d/(d+1)  " << r.lrc_rate_bound.get_str() << "\n";
    return;
  }
  std::cout << "n=" << n << "\n";
  std::cout << "d=" << d << "\n";
  std::cout << "upper_general=" << r.upper_general.get_str() << "\n";
  if (r.upper_d1) std::cout << "upper_d1=" << r.upper_d1->get_str() << "\n";
  std::cout << "lower=" << r.lower_existential.get_str() << "\n";
  std::cout << "lrc_rate_bound=" << r.lrc_rate_bound.get_str() << "\n";
  std::cout << "adapted=" << (r.adapted ? "true" : "false") << "\n";
}

void run_census(Options& o, int n, int d) {
  CosetCensus c = coset_census(n, d, o.caps);
  if (o.pretty) {
    std::cout << "cosets of the Z_" << n << " parity code, S_" << n << " census\n";
    std::cout << "  cosets    " << c.num_cosets << "\n";
    std::cout << "  largest   " << c.max_count << "\n";
    std::cout << "  total     " << c.total << "\n";
    return;
  }
  std::cout << "n=" << n << "\n";
  std::cout << "d=" << d << "\n";
  std::cout << "cosets=" << c.num_cosets << "\n";
  std::cout << "max_count=" << c.max_count << "\n";
  std::cout << "total=" << c.total << "\n";
}

void run_max_search(Options& o, int n, int d, std::uint64_t target) {
  MaxSearchResult r = max_set_search(n, d, target, o.caps);
  std::cout << "n=" << n << "\n";
  std::cout << "d=" << d << "\n";
  std::cout << "target=" << target << "\n";
  std::cout << "found=" << (r.witness ? "true" : "false") << "\n";
  if (r.witness) std::cout << "size=" << r.witness->size() << "\n";
  std::cout << "nodes=" << r.nodes << "\n";
}

void run_pp_count(Options& o, int m, const std::string& mode) {
  FieldSpec field = FieldSpec::standard(m);
  PpMode pm = mode == "brute" ? PpMode::Brute : mode == "normalized" ? PpMode::Normalized
                                                                     : PpMode::Auto;
  auto polys = enumerate_pp(field, 4, pm, o.caps);
  std::cout << "m=" << m << "\n";
  std::cout << "n=" << field.n() << "\n";
  std::cout << "count=" << polys.size() << "\n";
  std::cout << "bound=" << pp_count_lower_bound(field.n()) << "\n";
}

void run_pp_list(Options& o, int m, const std::string& mode, const std::string& out) {
  FieldSpec field = FieldSpec::standard(m);
  PpMode pm = mode == "brute" ? PpMode::Brute : mode == "normalized" ? PpMode::Normalized
                                                                     : PpMode::Auto;
  auto polys = enumerate_pp(field, 4, pm, o.caps);
  std::ofstream f(out);
  if (!f) raise(Errc::UsageError, "cannot open " + out);
  for (const auto& p : polys) {
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
      if (i) f << ' ';
      f << p.coeffs[i];
    }
    f << '\n';
  }
  std::cout << "m=" << m << "\n";
  std::cout << "n=" << field.n() << "\n";
  std::cout << "count=" << polys.size() << "\n";
  std::cout << "out=" << out << "\n";
}

void run_repair_sim(Options& o, const std::string& pset, std::size_t row, std::vector<int> erase,
                    bool generic, std::optional<int> d_override, bool one_based) {
  PermSet set = read_permset_file(pset);
  if (row >= set.size())
    raise(Errc::OutOfRange, "row " + std::to_string(row) + " of " + std::to_string(set.size()) +
                                " members");
  if (erase.empty()) raise(Errc::UsageError, "--erase needs at least one position");
  if (one_based)
    for (int& p : erase) --p;

  const Permutation member = set[row];
  NodeArray array(backend_for(set, generic, d_override, o.caps), o.caps);
  array.store(member);
  array.erase(erase);
  auto outcomes = array.repair_all();
  const int accesses = array.last_accesses();

  std::sort(erase.begin(), erase.end());
  erase.erase(std::unique(erase.begin(), erase.end()), erase.end());
  const int off = one_based ? 1 : 0;
  bool ok = true;
  std::cout << "n=" << set.n() << "\n";
  std::cout << "construction=" << to_string(set.construction()) << "\n";
  std::cout << "member=" << row << "\n";
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    std::cout << "repaired_" << erase[i] + off << "=" << outcomes[i].symbol + off << "\n";
    if (outcomes[i].symbol != member[erase[i]]) ok = false;
  }
  std::cout << "accesses=" << accesses << "\n";
  std::cout << "ok=" << (ok ? "true" : "false") << "\n";
  if (!ok) std::exit(2);
}

void run_query(Options& o, const std::string& pset, std::size_t row, std::optional<int> q1,
               std::optional<int> q2, const std::string& strategy, bool one_based) {
  PermSet set = read_permset_file(pset);
  if (row >= set.size())
    raise(Errc::OutOfRange, "row " + std::to_string(row) + " of " + std::to_string(set.size()) +
                                " members");
  if (q1.has_value() == q2.has_value())
    raise(Errc::UsageError, "pass exactly one of --q1 and --q2");
  const int off = one_based ? 1 : 0;

  RepairBackend backend = std::monostate{};
  if (strategy == "block") {
    if (!q2) raise(Errc::UsageError, "--strategy block applies to --q2 only");
    if (set.construction() != ConstructionId::BlockConcat || !set.claimed_locality())
      raise(Errc::UsageError, "--strategy block needs a block-concat file");
    backend = BlockConcatSpec(set.n(), *set.claimed_locality() + 1);
  }
  NodeArray array(std::move(backend), o.caps);
  array.store(set[row]);

  NodeArray::QueryResult r{};
  if (q1) {
    r = array.q1(*q1 - off);
    std::cout << "q1=" << *q1 << "\n";
    std::cout << "result=" << r.result + off << "\n";
  } else {
    const int value = *q2 - off;
    r = strategy == "block" ? array.q2_block_probe(value) : array.q2(value);
    std::cout << "q2=" << *q2 << "\n";
    std::cout << "result=" << r.result + off << "\n";
  }
  std::cout << "queries=" << r.queries << "\n";
  std::cout << "accesses=" << r.queries << "\n";
}

void run_rates(Options& o, const std::vector<int>& ns, const std::vector<int>& ts) {
  auto rows = rate_table(ns, ts, o.caps);
  if (o.pretty) {
    std::printf("%6s %4s %20s %10s\n", "n", "t", "members", "rate");
    for (const auto& row : rows)
      std::printf("%6d %4d %20s %10s\n", row.n, row.t, row.members.get_str().c_str(),
                  fmt_rate(row.rate).c_str());
    return;
  }
  for (const auto& row : rows)
    std::cout << "n=" << row.n << " t=" << row.t << " members=" << row.members.get_str()
              << " rate=" << fmt_rate(row.rate) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  try {
    Options opt;
    opt.caps = Caps::from_env();

    CLI::App app{"permutation sets with low-locality repair: constructions, bounds, simulation"};
    // --h is a documented flag, so help lives on --help alone.
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);
    app.add_option("--seed", opt.seed, "seed for any sampled sweep (reserved, output is deterministic)");
    app.add_flag("--pretty", opt.pretty, "human-readable tables instead of key=value lines");

    auto* construct = app.add_subcommand("construct", "build a permutation set and write it");
    construct->require_subcommand(1);
    int n = 0, h = 0, r = 0, t = 0, m = 0, d = 0;
    std::string out, inner = "block-concat:h=2", mode = "auto", strategy = "cycle";

    auto* cb = construct->add_subcommand("block-concat", "blocks of h consecutive values");
    cb->add_option("--n", n)->required();
    cb->add_option("--h", h)->required();
    cb->add_option("--out", out)->required();
    cb->callback([&] { run_construct_block(opt, n, h, out); });

    auto* cr = construct->add_subcommand("range-restricted", "one value block fixed up front");
    cr->add_option("--n", n)->required();
    cr->add_option("--h", h)->required();
    cr->add_option("--out", out)->required();
    cr->callback([&] { run_construct_range(opt, n, h, out); });

    auto* ci = construct->add_subcommand("inf-ball", "displacement at most r");
    ci->add_option("--n", n)->required();
    ci->add_option("--r", r)->required();
    ci->add_option("--out", out)->required();
    ci->callback([&] { run_construct_ball(opt, n, r, out); });

    auto* cm = construct->add_subcommand("media", "prefix- or suffix-consecutive values");
    cm->add_option("--n", n)->required();
    cm->add_option("--out", out)->required();
    cm->callback([&] { run_construct_media(opt, n, out); });

    auto* ce = construct->add_subcommand("extend", "inner set crossed with a distinct-symbol code");
    ce->add_option("--n", n)->required();
    ce->add_option("--t", t)->default_val(6);
    ce->add_option("--m", m)->required();
    ce->add_option("--inner", inner, "inner construction, block-concat:h=<h>");
    ce->add_option("--out", out)->required();
    ce->callback([&] { run_construct_extend(opt, n, t, m, inner, out); });

    auto* cp = construct->add_subcommand("multiperm", "pair patterns of bounded spread, assigned");
    cp->add_option("--n", n)->required();
    cp->add_option("--t", t)->required();
    cp->add_option("--out", out)->required();
    cp->callback([&] { run_construct_multiperm(opt, n, t, out); });

    auto* verify = app.add_subcommand("verify", "certify a set's locality with repair tables");
    std::string file;
    verify->add_option("file", file)->required();
    verify->add_option("--d", d)->required();
    verify->callback([&] { run_verify(opt, file, d); });

    auto* bounds_cmd = app.add_subcommand("bounds", "size limits for locality-d sets");
    bounds_cmd->add_option("--n", n)->required();
    bounds_cmd->add_option("--d", d)->required();
    bounds_cmd->callback([&] { run_bounds(opt, n, d); });

    auto* census = app.add_subcommand("coset-census", "distribute S_n over parity-code cosets");
    census->add_option("--n", n)->required();
    census->add_option("--d", d)->required();
    census->callback([&] { run_census(opt, n, d); });

    auto* search = app.add_subcommand("max-search", "hunt for a locality-d subset of a target size");
    std::uint64_t target = 0;
    search->add_option("--n", n)->required();
    search->add_option("--d", d)->required();
    search->add_option("--target", target)->required();
    search->callback([&] { run_max_search(opt, n, d, target); });

    auto* ppc = app.add_subcommand("pp-count", "count degree-<=4 field-permuting polynomials");
    ppc->add_option("--m", m)->required();
    ppc->add_option("--mode", mode)->check(CLI::IsMember({"auto", "brute", "normalized"}));
    ppc->callback([&] { run_pp_count(opt, m, mode); });

    auto* ppl = app.add_subcommand("pp-list", "write them out, coefficients low to high");
    ppl->add_option("--m", m)->required();
    ppl->add_option("--mode", mode)->check(CLI::IsMember({"auto", "brute", "normalized"}));
    ppl->add_option("--out", out)->required();
    ppl->callback([&] { run_pp_list(opt, m, mode, out); });

    auto* sim = app.add_subcommand("repair-sim", "erase cells of a stored member and repair them");
    std::string pset;
    std::size_t member = 0;
    std::vector<int> erase;
    bool generic = false, one_based = false;
    std::optional<int> d_opt;
    sim->add_option("--pset", pset)->required();
    sim->add_option("--member", member, "row index in the file")->required();
    sim->add_option("--erase", erase, "positions to erase")->required()->delimiter(',');
    sim->add_flag("--generic", generic, "certify a repair map instead of the construction rule");
    sim->add_option("--d", d_opt, "locality override when the file claims none");
    sim->add_flag("--one-based", one_based, "positions and symbols rendered 1-based");
    sim->callback([&] { run_repair_sim(opt, pset, member, erase, generic, d_opt, one_based); });

    auto* query = app.add_subcommand("query", "ask a stored member for a symbol or a position");
    std::optional<int> q1, q2;
    query->add_option("--pset", pset)->required();
    query->add_option("--member", member, "row index in the file")->required();
    query->add_option("--q1", q1, "position to read");
    query->add_option("--q2", q2, "value to locate");
    query->add_option("--strategy", strategy)->check(CLI::IsMember({"cycle", "block"}));
    query->add_flag("--one-based", one_based, "positions and symbols rendered 1-based");
    query->callback([&] { run_query(opt, pset, member, q1, q2, strategy, one_based); });

    auto* rates = app.add_subcommand("rates", "exact rate table");
    auto* rates_mp = rates->add_subcommand("multiperm", "pair-pattern sets by n and t");
    rates->require_subcommand(1);
    std::vector<int> ns_list, ts_list;
    rates_mp->add_option("--n", ns_list)->required()->delimiter(',');
    rates_mp->add_option("--t", ts_list)->required()->delimiter(',');
    rates_mp->callback([&] { run_rates(opt, ns_list, ts_list); });

    std::function<void(CLI::App*)> help_on_long = [&](CLI::App* a) {
      a->set_help_flag("--help", "print help");
      for (CLI::App* sc : a->get_subcommands([](CLI::App*) { return true; })) help_on_long(sc);
    };
    help_on_long(&app);

    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      std::cout << "error=UsageError\n";
      std::cerr << e.what() << "\n";
      return 1;
    }
    return 0;
  } catch (const permloc::Error& e) {
    std::cout << "error=" << permloc::name(e.code()) << "\n";
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cout << "error=Internal\n";
    std::cerr << e.what() << "\n";
    return 1;
  }
}
