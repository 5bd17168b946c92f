#include "permloc/extend.hpp"

#include <algorithm>
#include <string>

#include "permloc/errors.hpp"

namespace permloc {

ReplacementMap::ReplacementMap(std::vector<int> e, int n) : e_(std::move(e)), n_(n) {
  if (n_ <= 0) raise(Errc::EmptyInput, "replacement map needs a positive alphabet");
  const int t = static_cast<int>(e_.size());
  if (t > n_) raise(Errc::OutOfRange, "suffix longer than the alphabet");
  std::vector<char> in_e(static_cast<std::size_t>(n_), 0);
  for (int s : e_) {
    if (s < 0 || s >= n_) raise(Errc::OutOfRange, "suffix symbol " + std::to_string(s));
    if (in_e[static_cast<std::size_t>(s)])
      raise(Errc::DuplicateSymbolInE, "suffix symbol " + std::to_string(s) + " repeats");
    in_e[static_cast<std::size_t>(s)] = 1;
  }

  // Displaced low symbols slide, in order, onto the unclaimed high ones.
  std::vector<int> spare;
  for (int y = n_ - t; y < n_; ++y)
    if (!in_e[static_cast<std::size_t>(y)]) spare.push_back(y);

  fwd_.resize(static_cast<std::size_t>(n_ - t));
  std::size_t next = 0;
  for (int s = 0; s < n_ - t; ++s) {
    fwd_[static_cast<std::size_t>(s)] = in_e[static_cast<std::size_t>(s)] ? spare[next++] : s;
    back_.emplace(fwd_[static_cast<std::size_t>(s)], s);
  }
}

int ReplacementMap::apply(int s) const {
  if (s < 0 || s >= n_ - t())
    raise(Errc::OutOfRange, "symbol " + std::to_string(s) + " outside the map's domain");
  return fwd_[static_cast<std::size_t>(s)];
}

std::optional<int> ReplacementMap::invert(int y) const {
  auto it = back_.find(y);
  if (it == back_.end()) return std::nullopt;
  return it->second;
}

ReplacementMap build_f(const std::vector<int>& e, int n) { return ReplacementMap(e, n); }

Permutation odot(const Permutation& p, const std::vector<int>& e, int n) {
  const int t = static_cast<int>(e.size());
  if (p.n() != n - t)
    raise(Errc::OutOfRange, "prefix length " + std::to_string(p.n()) + " does not fit " +
                                std::to_string(n) + " minus suffix " + std::to_string(t));
  ReplacementMap f(e, n);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < p.n(); ++j) out.push_back(f.apply(p[j]));
  out.insert(out.end(), e.begin(), e.end());
  return Permutation(std::move(out));
}

ExtendedSpec make_extended_spec(PermSet inner, int d, DistinctCode code, const Caps& caps) {
  if (code.field().n() != inner.n() + code.t())
    raise(Errc::OutOfRange, "code alphabet " + std::to_string(code.field().n()) +
                                " must equal inner alphabet " + std::to_string(inner.n()) +
                                " plus suffix length " + std::to_string(code.t()));
  if (code.delta() < 2)
    raise(Errc::UsageError, "code needs erasure margin (delta >= 2) or no suffix cell is repairable");
  auto res = verify_locality(inner, d, caps);
  if (!res.ok())
    raise(Errc::UsageError, "inner set lacks locality " + std::to_string(d) + " at position " +
                                std::to_string(*res.failed_position));
  return ExtendedSpec{std::move(inner), std::move(*res.repair), d, std::move(code)};
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  if (r > ~std::uint64_t{0}) raise(Errc::CapExceeded, "set size overflows 64 bits");
  return static_cast<std::uint64_t>(r);
}

}  // namespace

std::uint64_t extended_size(const ExtendedSpec& spec) {
  return checked_mul(spec.inner.size(), spec.code.size());
}

void extended_for_each(const ExtendedSpec& spec,
                       const std::function<void(const Permutation&)>& visit) {
  const int n = spec.n();
  std::vector<ReplacementMap> maps;
  maps.reserve(spec.code.size());
  for (const auto& e : spec.code.codewords()) maps.emplace_back(e, n);

  std::vector<int> out(static_cast<std::size_t>(n));
  for (const auto& s : spec.inner.members()) {
    for (std::size_t w = 0; w < maps.size(); ++w) {
      const auto& e = spec.code.codewords()[w];
      for (int j = 0; j < s.n(); ++j) out[static_cast<std::size_t>(j)] = maps[w].apply(s[j]);
      std::copy(e.begin(), e.end(), out.begin() + s.n());
      visit(Permutation(out));
    }
  }
}

PermSet extend_set(const ExtendedSpec& spec, const Caps& caps) {
  const std::uint64_t size = extended_size(spec);
  if (size > caps.materialize_max)
    raise(Errc::CapExceeded, std::to_string(size) +
                                 " members exceed the materialize cap; stream with extended_for_each");
  PermSet set(spec.n(), ConstructionId::Extend, spec.locality());
  extended_for_each(spec, [&](const Permutation& p) { set.insert(p); });
  return set;
}

bool extended_contains(const Permutation& p, const ExtendedSpec& spec) {
  if (p.n() != spec.n()) return false;
  const int t = spec.code.t();
  const int prefix = p.n() - t;
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(t));
  for (int j = prefix; j < p.n(); ++j) e.push_back(p[j]);
  if (!spec.code.contains(e)) return false;
  ReplacementMap f(e, p.n());
  std::vector<int> s;
  s.reserve(static_cast<std::size_t>(prefix));
  for (int j = 0; j < prefix; ++j) {
    auto back = f.invert(p[j]);
    if (!back) return false;
    s.push_back(*back);
  }
  return spec.inner.contains(Permutation(std::move(s)));
}

std::pair<Permutation, std::vector<int>> decompose(const Permutation& p,
                                                   const ExtendedSpec& spec) {
  if (p.n() != spec.n())
    raise(Errc::OutOfRange, "length " + std::to_string(p.n()) + " member of an n=" +
                                std::to_string(spec.n()) + " set");
  const int t = spec.code.t();
  const int prefix = p.n() - t;
  std::vector<int> e(p.symbols().begin() + prefix, p.symbols().end());
  if (!spec.code.contains(e)) raise(Errc::NotAMember, "suffix is not a codeword");
  ReplacementMap f(e, p.n());
  std::vector<int> s;
  s.reserve(static_cast<std::size_t>(prefix));
  for (int j = 0; j < prefix; ++j) {
    auto back = f.invert(p[j]);
    if (!back) raise(Errc::NotAMember, "prefix symbol " + std::to_string(p[j]) +
                                           " is outside the replacement image");
    s.push_back(*back);
  }
  Permutation inner(std::move(s));
  if (!spec.inner.contains(inner)) raise(Errc::NotAMember, "prefix is not an inner member");
  return {std::move(inner), std::move(e)};
}

RepairOutcome extended_repair(const ErasedView& view, const ExtendedSpec& spec, int j) {
  if (view.n() != spec.n())
    raise(Errc::OutOfRange, "view length " + std::to_string(view.n()) + " for an n=" +
                                std::to_string(spec.n()) + " set");
  if (j < 0 || j >= view.n()) raise(Errc::OutOfRange, "position " + std::to_string(j));
  if (!view.is_erased(j)) raise(Errc::UsageError, "position " + std::to_string(j) + " is not erased");
  if (view.erased_positions().size() != 1)
    raise(Errc::MultipleErasure, "repair handles a single erasure");

  const int n = spec.n();
  const int t = spec.code.t();
  const int prefix = n - t;
  const int k = spec.code.k();

  RepairOutcome out;
  out.accessed = {};

  // Any k suffix cells pin the codeword; take the first k that survive.
  std::vector<std::optional<int>> partial(static_cast<std::size_t>(t));
  int read = 0;
  for (int pos = prefix; pos < n && read < k; ++pos) {
    if (pos == j) continue;
    partial[static_cast<std::size_t>(pos - prefix)] = view.at(pos);
    out.accessed.push_back(pos);
    ++read;
  }
  const std::vector<int> e = erasure_interpolate(spec.code, partial);

  if (j >= prefix) {
    out.symbol = e[static_cast<std::size_t>(j - prefix)];
    return out;
  }

  ReplacementMap f(e, n);
  const auto& rule = spec.inner_repair.rule(j);
  std::vector<int> key;
  key.reserve(rule.helpers.size());
  for (int h : rule.helpers) {
    const int y = view.at(h);
    out.accessed.push_back(h);
    auto back = f.invert(y);
    if (!back)
      raise(Errc::NotAMember, "helper symbol " + std::to_string(y) +
                                  " is outside the replacement image");
    key.push_back(*back);
  }
  auto it = rule.table.find(key);
  if (it == rule.table.end())
    raise(Errc::NotAMember, "helper projection unseen in the inner set");
  out.symbol = f.apply(it->second);
  return out;
}

PermSet relabel_set(const PermSet& set, const std::vector<int>& f) {
  const int n = set.n();
  if (static_cast<int>(f.size()) != n)
    raise(Errc::OutOfRange, "relabeling must cover symbols 0.." + std::to_string(n - 1));
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int y : f) {
    if (y < 0 || y >= n)
      raise(Errc::OutOfRange, "relabeled symbol " + std::to_string(y) +
                                  " leaves the alphabet; use relabel_rows for injections");
    if (hit[static_cast<std::size_t>(y)])
      raise(Errc::NonInjectiveMap, "symbol " + std::to_string(y) + " hit twice");
    hit[static_cast<std::size_t>(y)] = 1;
  }
  PermSet out(n, set.construction(), set.claimed_locality());
  std::vector<int> w(static_cast<std::size_t>(n));
  for (const auto& p : set.members()) {
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(p[i])];
    out.insert(Permutation(w));
  }
  return out;
}

std::vector<std::vector<int>> relabel_rows(const std::vector<std::vector<int>>& rows,
                                           const std::vector<int>& f) {
  std::vector<char> hit;
  for (int y : f) {
    if (y < 0) raise(Errc::OutOfRange, "relabeled symbols must be nonnegative");
    if (static_cast<std::size_t>(y) >= hit.size()) hit.resize(static_cast<std::size_t>(y) + 1, 0);
    if (hit[static_cast<std::size_t>(y)])
      raise(Errc::NonInjectiveMap, "symbol " + std::to_string(y) + " hit twice");
    hit[static_cast<std::size_t>(y)] = 1;
  }
  std::vector<std::vector<int>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<int> w;
    w.reserve(row.size());
    for (int s : row) {
      if (s < 0 || s >= static_cast<int>(f.size()))
        raise(Errc::OutOfRange, "symbol " + std::to_string(s) + " missing from the relabeling");
      w.push_back(f[static_cast<std::size_t>(s)]);
    }
    out.push_back(std::move(w));
  }
  return out;
}

RepairMap relabel_repair_map(const RepairMap& map, const std::vector<int>& f) {
  auto lift = [&](int s) {
    if (s < 0 || s >= static_cast<int>(f.size()))
      raise(Errc::OutOfRange, "symbol " + std::to_string(s) + " missing from the relabeling");
    return f[static_cast<std::size_t>(s)];
  };
  std::vector<char> hit;
  for (int y : f) {
    if (y < 0) raise(Errc::OutOfRange, "relabeled symbols must be nonnegative");
    if (static_cast<std::size_t>(y) >= hit.size()) hit.resize(static_cast<std::size_t>(y) + 1, 0);
    if (hit[static_cast<std::size_t>(y)])
      raise(Errc::NonInjectiveMap, "symbol " + std::to_string(y) + " hit twice");
    hit[static_cast<std::size_t>(y)] = 1;
  }
  std::vector<RepairMap::Rule> rules;
  rules.reserve(static_cast<std::size_t>(map.n()));
  for (int i = 0; i < map.n(); ++i) {
    const auto& src = map.rule(i);
    RepairMap::Rule dst;
    dst.helpers = src.helpers;
    for (const auto& [key, val] : src.table) {
      std::vector<int> lifted;
      lifted.reserve(key.size());
      for (int s : key) lifted.push_back(lift(s));
      dst.table.emplace(std::move(lifted), lift(val));
    }
    rules.push_back(std::move(dst));
  }
  return RepairMap(map.n(), std::move(rules));
}

}  // namespace permloc
