#include "permloc/gf.hpp"

#include <string>

#include "permloc/errors.hpp"

namespace permloc {

namespace {

int degree(std::uint64_t poly) {
  int deg = -1;
  while (poly) {
    ++deg;
    poly >>= 1;
  }
  return deg;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t mod) {
  const int dm = degree(mod);
  for (int da = degree(a); da >= dm; da = degree(a)) a ^= mod << (da - dm);
  return a;
}

bool irreducible(std::uint32_t modulus, int m) {
  if (degree(modulus) != m) return false;
  for (std::uint64_t f = 2; degree(f) <= m / 2; ++f)
    if (poly_mod(modulus, f) == 0) return false;
  return true;
}

}  // namespace

FieldSpec::FieldSpec(int m, std::uint32_t modulus) : m_(m), modulus_(modulus) {
  if (m < 1 || m > 16) raise(Errc::OutOfRange, "field degree m=" + std::to_string(m) + " outside 1..16");
  if (!irreducible(modulus, m))
    raise(Errc::ReducibleModulus,
          "0x" + [&] { char b[16]; std::snprintf(b, sizeof b, "%x", modulus); return std::string(b); }() +
              " is not an irreducible degree-" + std::to_string(m) + " polynomial");
}

FieldSpec FieldSpec::standard(int m) {
  switch (m) {
    case 1: return FieldSpec(1, 0b11);
    case 2: return FieldSpec(2, 0b111);
    case 3: return FieldSpec(3, 0b1011);         // x^3 + x + 1
    case 4: return FieldSpec(4, 0b10011);        // x^4 + x + 1
    case 5: return FieldSpec(5, 0b100101);       // x^5 + x^2 + 1
    case 6: return FieldSpec(6, 0b1000011);      // x^6 + x + 1
    case 7: return FieldSpec(7, 0b10000011);     // x^7 + x + 1
    case 8: return FieldSpec(8, 0b100011011);    // x^8 + x^4 + x^3 + x + 1
    default:
      raise(Errc::OutOfRange, "no stock modulus for m=" + std::to_string(m) + "; pass one explicitly");
  }
}

void FieldSpec::check(int a) const {
  if (a < 0 || a >= n())
    raise(Errc::OutOfRange, "element " + std::to_string(a) + " outside field of size " + std::to_string(n()));
}

int FieldSpec::add(int a, int b) const {
  check(a);
  check(b);
  return a ^ b;
}

int FieldSpec::mul(int a, int b) const {
  check(a);
  check(b);
  std::uint64_t acc = 0;
  for (int bit = 0; bit < m_; ++bit)
    if ((b >> bit) & 1) acc ^= static_cast<std::uint64_t>(a) << bit;
  return static_cast<int>(poly_mod(acc, modulus_));
}

int FieldSpec::pow(int a, std::uint64_t e) const {
  check(a);
  int base = a;
  int acc = 1;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

int FieldSpec::inv(int a) const {
  check(a);
  if (a == 0) raise(Errc::DivisionByZero, "0 has no inverse");
  return pow(a, static_cast<std::uint64_t>(n()) - 2);
}

int FieldSpec::eval(const std::vector<int>& coeffs, int x) const {
  check(x);
  int acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = add(mul(acc, x), *it);
  return acc;
}

}  // namespace permloc
