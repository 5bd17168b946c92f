#include "permloc/perm_poly.hpp"

#include <algorithm>
#include <string>

#include "permloc/errors.hpp"

namespace permloc {

namespace {

std::vector<int> trim(std::vector<int> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

bool lex_less(const FieldPoly& a, const FieldPoly& b, int width) {
  for (int i = 0; i < width; ++i) {
    const int av = i < static_cast<int>(a.coeffs.size()) ? a.coeffs[static_cast<std::size_t>(i)] : 0;
    const int bv = i < static_cast<int>(b.coeffs.size()) ? b.coeffs[static_cast<std::size_t>(i)] : 0;
    if (av != bv) return av < bv;
  }
  return false;
}

}  // namespace

bool is_permutation_poly(const FieldSpec& field, const std::vector<int>& coeffs) {
  const int n = field.n();
  if (n <= 64) {
    std::uint64_t seen = 0;
    for (int x = 0; x < n; ++x) {
      const std::uint64_t bit = std::uint64_t{1} << field.eval(coeffs, x);
      if (seen & bit) return false;
      seen |= bit;
    }
    return true;
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    const int y = field.eval(coeffs, x);
    if (seen[static_cast<std::size_t>(y)]) return false;
    seen[static_cast<std::size_t>(y)] = 1;
  }
  return true;
}

namespace {

std::vector<FieldPoly> enumerate_brute(const FieldSpec& field, int max_deg) {
  const int n = field.n();
  std::vector<FieldPoly> out;
  std::vector<int> coeffs(static_cast<std::size_t>(max_deg) + 1, 0);
  // Odometer with the highest-degree coefficient fastest emits tuples in
  // (c0, c1, ...) lexicographic order directly.
  while (true) {
    if (is_permutation_poly(field, coeffs)) out.push_back(FieldPoly{trim(coeffs)});
    int i = max_deg;
    while (i >= 0 && coeffs[static_cast<std::size_t>(i)] == n - 1) coeffs[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++coeffs[static_cast<std::size_t>(i)];
  }
  return out;
}

// Every permutation polynomial is a*g + b for a unique monic g with g(0)=0,
// and that closure preserves bijectivity both ways, so scanning the n^3-ish
// normalized representatives recovers the full list.
std::vector<FieldPoly> enumerate_normalized(const FieldSpec& field, int max_deg) {
  const int n = field.n();
  std::vector<FieldPoly> out;
  for (int deg = 1; deg <= max_deg; ++deg) {
    std::vector<int> coeffs(static_cast<std::size_t>(deg) + 1, 0);
    coeffs[static_cast<std::size_t>(deg)] = 1;
    const int free = deg - 1;  // c1..c_{deg-1}
    std::vector<int> idx(static_cast<std::size_t>(std::max(free, 1)), 0);
    while (true) {
      for (int i = 0; i < free; ++i) coeffs[static_cast<std::size_t>(i + 1)] = idx[static_cast<std::size_t>(i)];
      if (is_permutation_poly(field, coeffs)) {
        for (int a = 1; a < n; ++a) {
          std::vector<int> scaled(coeffs.size());
          for (std::size_t i = 0; i < coeffs.size(); ++i) scaled[i] = field.mul(a, coeffs[i]);
          for (int b = 0; b < n; ++b) {
            scaled[0] = b;  // a*g(0) = 0
            out.push_back(FieldPoly{trim(scaled)});
          }
        }
      }
      int i = free - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - 1) idx[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const FieldPoly& a, const FieldPoly& b) { return lex_less(a, b, max_deg + 1); });
  return out;
}

}  // namespace

std::vector<FieldPoly> enumerate_pp(const FieldSpec& field, int max_deg, PpMode mode,
                                    const Caps& caps) {
  const int n = field.n();
  if (n < 8) raise(Errc::OutOfRange, "field of size " + std::to_string(n) + " too small; need n >= 8");
  if (max_deg < 1 || max_deg > 4)
    raise(Errc::OutOfRange, "degree cap " + std::to_string(max_deg) + " outside 1..4");

  if (mode == PpMode::Auto) mode = n <= 16 ? PpMode::Brute : PpMode::Normalized;
  if (mode == PpMode::Brute) {
    if (n > caps.pp_brute_n_max)
      raise(Errc::CapExceeded, "brute-force scan refused for n=" + std::to_string(n) +
                                   "; use the normalized mode");
    return enumerate_brute(field, max_deg);
  }
  if (n > caps.pp_normalized_n_max)
    raise(Errc::CapExceeded, "normalized scan refused for n=" + std::to_string(n));
  return enumerate_normalized(field, max_deg);
}

std::uint64_t pp_count_lower_bound(int n) {
  if (n < 8) raise(Errc::OutOfRange, "bound defined for n >= 8");
  const std::uint64_t un = static_cast<std::uint64_t>(n);
  return (un - 1) * (2 * un + un * (un * un + 2) / 3);
}

}  // namespace permloc
