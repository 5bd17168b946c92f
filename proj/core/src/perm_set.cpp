#include "permloc/perm_set.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "permloc/errors.hpp"

namespace permloc {

const char* to_string(ConstructionId id) {
  switch (id) {
    case ConstructionId::None: return "none";
    case ConstructionId::BlockConcat: return "block-concat";
    case ConstructionId::RangeRestricted: return "range-restricted";
    case ConstructionId::InfBall: return "inf-ball";
    case ConstructionId::Media: return "media";
    case ConstructionId::Extend: return "extend";
    case ConstructionId::Multiperm: return "multiperm";
  }
  return "none";
}

ConstructionId construction_from_string(const std::string& s) {
  for (ConstructionId id :
       {ConstructionId::None, ConstructionId::BlockConcat, ConstructionId::RangeRestricted,
        ConstructionId::InfBall, ConstructionId::Media, ConstructionId::Extend,
        ConstructionId::Multiperm}) {
    if (s == to_string(id)) return id;
  }
  raise(Errc::FormatError, "unknown construction id '" + s + "'");
}

PermSet::PermSet(int n, ConstructionId id, std::optional<int> claimed_locality)
    : n_(n), construction_(id), claimed_locality_(claimed_locality) {
  if (n < 1) raise(Errc::EmptyInput, "permutation set needs n >= 1");
  if (claimed_locality_ && *claimed_locality_ < 0)
    raise(Errc::OutOfRange, "claimed locality must be nonnegative");
}

bool PermSet::insert(Permutation p) {
  if (p.n() != n_)
    raise(Errc::OutOfRange, "member length " + std::to_string(p.n()) +
                                " does not match set n=" + std::to_string(n_));
  auto [it, fresh] = index_.try_emplace(p.symbols(), members_.size());
  if (!fresh) return false;
  members_.push_back(std::move(p));
  return true;
}

bool PermSet::contains(const std::vector<int>& symbols) const {
  return index_.find(symbols) != index_.end();
}

std::optional<std::size_t> PermSet::index_of(const std::vector<int>& symbols) const {
  auto it = index_.find(symbols);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void write_permset(const PermSet& set, std::ostream& out) {
  out << "PERMSET 1\n";
  out << "n=" << set.n() << " d=";
  if (set.claimed_locality())
    out << *set.claimed_locality();
  else
    out << '-';
  out << " construction=" << to_string(set.construction()) << '\n';
  for (const Permutation& p : set.members()) {
    for (int i = 0; i < set.n(); ++i) {
      if (i > 0) out << ' ';
      out << p[i];
    }
    out << '\n';
  }
}

void write_permset_file(const PermSet& set, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::FormatError, "cannot open '" + path + "' for writing");
  write_permset(set, out);
  if (!out) raise(Errc::FormatError, "write to '" + path + "' failed");
}

namespace {

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    raise(Errc::FormatError, "bad " + what + " '" + text + "'");
  }
}

// Splits a strictly single-space separated line; rejects padding.
std::vector<std::string> split_fields(const std::string& line) {
  if (!line.empty() && (line.front() == ' ' || line.back() == ' '))
    raise(Errc::FormatError, "leading or trailing space in line");
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ' ') {
      if (cur.empty()) raise(Errc::FormatError, "double space in line");
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) fields.push_back(cur);
  return fields;
}

std::string expect_prefix(const std::string& field, const std::string& prefix) {
  if (field.rfind(prefix, 0) != 0)
    raise(Errc::FormatError, "expected '" + prefix + "...', got '" + field + "'");
  return field.substr(prefix.size());
}

}  // namespace

PermSet read_permset(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) raise(Errc::FormatError, "missing header");
  if (line == "PERMSET 1\r" ) raise(Errc::FormatError, "CRLF line endings are not accepted");
  if (line != "PERMSET 1") raise(Errc::FormatError, "bad magic line '" + line + "'");
  if (!std::getline(in, line)) raise(Errc::FormatError, "missing parameter line");
  auto fields = split_fields(line);
  if (fields.size() != 3) raise(Errc::FormatError, "parameter line needs n=, d=, construction=");
  const int n = parse_int(expect_prefix(fields[0], "n="), "n");
  const std::string d_text = expect_prefix(fields[1], "d=");
  std::optional<int> d;
  if (d_text != "-") d = parse_int(d_text, "d");
  const ConstructionId id = construction_from_string(expect_prefix(fields[2], "construction="));

  PermSet set(n, id, d);
  while (std::getline(in, line)) {
    auto parts = split_fields(line);
    if (static_cast<int>(parts.size()) != n)
      raise(Errc::FormatError, "member line has " + std::to_string(parts.size()) +
                                   " symbols, expected " + std::to_string(n));
    std::vector<int> symbols;
    symbols.reserve(parts.size());
    for (const std::string& p : parts) symbols.push_back(parse_int(p, "symbol"));
    if (!set.insert(Permutation(std::move(symbols))))
      raise(Errc::FormatError, "duplicate member in file");
  }
  return set;
}

PermSet read_permset_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::FormatError, "cannot open '" + path + "'");
  return read_permset(in);
}

}  // namespace permloc
