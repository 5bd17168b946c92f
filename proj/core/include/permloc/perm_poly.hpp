#pragma once

#include <cstdint>
#include <vector>

#include "permloc/caps.hpp"
#include "permloc/gf.hpp"

namespace permloc {

// Coefficients low-to-high with no trailing zeros; {} is the zero polynomial.
struct FieldPoly {
  std::vector<int> coeffs;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool operator==(const FieldPoly&) const = default;
};

bool is_permutation_poly(const FieldSpec& field, const std::vector<int>& coeffs);

enum class PpMode {
  Auto,        // brute force on small fields, normalized scan on large ones
  Brute,       // every coefficient tuple, bijectivity-tested
  Normalized,  // monic zero-constant representatives, then a*g + b closure
};

// All polynomials of degree <= max_deg that permute the field, in
// coefficient-lexicographic order (c0 most significant).
std::vector<FieldPoly> enumerate_pp(const FieldSpec& field, int max_deg = 4,
                                    PpMode mode = PpMode::Auto, const Caps& caps = {});

// Closed-form floor on that count for degree cap 4: (n-1)(2n + n(n^2+2)/3).
std::uint64_t pp_count_lower_bound(int n);

}  // namespace permloc
