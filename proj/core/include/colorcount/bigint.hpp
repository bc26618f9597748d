#pragma once

#include <gmpxx.h>

#include <string>

namespace colorcount {

// Exact nonnegative counting value. Every count of colorings/transversals is
// carried in arbitrary precision; floating point never enters a counting path.
using ColorCount = mpz_class;

inline ColorCount ipow(unsigned long base, unsigned long exp) {
  ColorCount r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

inline ColorCount ipow(const ColorCount& base, unsigned long exp) {
  ColorCount r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline ColorCount factorial(unsigned long n) {
  ColorCount r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline ColorCount binomial(unsigned long n, unsigned long k) {
  ColorCount r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline std::string to_decimal(const ColorCount& v) { return v.get_str(); }

// value > limit; gmpxx has no long long overloads.
inline bool exceeds(const ColorCount& value, long long limit) {
  return mpz_cmp_si(value.get_mpz_t(), static_cast<long>(limit)) > 0;
}

// Reduced exact fraction with nonnegative denominator.
struct ExactFraction {
  ColorCount num;
  ColorCount den;
};

inline ExactFraction make_fraction(const ColorCount& num, const ColorCount& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return ExactFraction{q.get_num(), q.get_den()};
}

}  // namespace colorcount
