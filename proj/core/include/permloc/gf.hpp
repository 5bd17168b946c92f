#pragma once

#include <cstdint>
#include <vector>

namespace permloc {

// GF(2^m) with a fixed irreducible modulus; elements are bit patterns
// 0..2^m-1 and double as the integer symbols written into codewords.
class FieldSpec {
 public:
  FieldSpec(int m, std::uint32_t modulus);  // verifies irreducibility
  static FieldSpec standard(int m);         // stock modulus per degree

  int m() const { return m_; }
  int n() const { return 1 << m_; }
  std::uint32_t modulus() const { return modulus_; }

  int add(int a, int b) const;
  int mul(int a, int b) const;
  int pow(int a, std::uint64_t e) const;
  int inv(int a) const;  // DivisionByZero on 0
  int eval(const std::vector<int>& coeffs, int x) const;  // low-to-high, Horner

 private:
  int m_;
  std::uint32_t modulus_;
  void check(int a) const;
};

}  // namespace permloc
