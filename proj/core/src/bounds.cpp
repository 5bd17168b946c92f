#include "permloc/bounds.hpp"

#include <cmath>
#include <string>

#include "permloc/errors.hpp"

namespace permloc {

mpz_class factorial(int n) {
  if (n < 0) raise(Errc::OutOfRange, "factorial of negative argument");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

mpz_class double_factorial(int n) {
  if (n < 0) raise(Errc::OutOfRange, "double factorial of negative argument");
  mpz_class r = 1;
  for (int v = n; v > 1; v -= 2) r *= v;
  return r;
}

namespace {

double log_of(const mpz_class& v) {
  signed long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace

std::optional<double> BoundReport::rate() const {
  if (!set_size || *set_size <= 0 || n < 2) return std::nullopt;
  return log_of(*set_size) / log_of(factorial(n));
}

BoundReport bounds(int n, int d, std::optional<mpz_class> set_size) {
  if (n < 2) raise(Errc::OutOfRange, "bounds need n >= 2");
  if (d < 1 || d > n - 1)
    raise(Errc::OutOfRange, "locality d=" + std::to_string(d) + " outside 1.." + std::to_string(n - 1));

  BoundReport report;
  report.n = n;
  report.d = d;
  const int q = (n + d) / (d + 1);  // ceil(n/(d+1))
  report.adapted = (n % (d + 1)) != 0;
  report.upper_general = factorial(n) / factorial(q);
  if (d == 1) report.upper_d1 = double_factorial(n);

  mpz_class denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(q));
  report.lower_existential = mpq_class(factorial(n), denom);
  report.lower_existential.canonicalize();

  report.lrc_rate_bound = mpq_class(d, d + 1);
  report.lrc_rate_bound.canonicalize();
  report.set_size = std::move(set_size);

  // Pigeonhole floor can never exceed the counting ceiling.
  if (report.lower_existential > mpq_class(report.upper_general))
    raise(Errc::OutOfRange, "inconsistent bound computation");
  return report;
}

}  // namespace permloc
