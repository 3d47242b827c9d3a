#include "ramsey/bigint.hpp"

namespace ramsey {

BigInt range_product(unsigned long lo, unsigned long hi) {
  if (lo > hi) return 1;
  if (hi - lo < 8) {
    BigInt p = lo;
    for (unsigned long v = lo + 1; v <= hi; ++v) p *= v;
    return p;
  }
  unsigned long mid = lo + (hi - lo) / 2;
  return range_product(lo, mid) * range_product(mid + 1, hi);
}

BigInt factorial(unsigned long n) {
  if (n < 2) return 1;
  return range_product(2, n);
}

BigInt multinomial(const std::vector<unsigned long>& parts) {
  unsigned long total = 0;
  for (unsigned long p : parts) {
    if (p > 0 && total > total + p) throw std::overflow_error("multinomial: part sum overflow");
    total += p;
  }
  BigInt num = factorial(total);
  BigInt den = 1;
  for (unsigned long p : parts) den *= factorial(p);
  BigInt out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

BigInt isqrt(const BigInt& v) {
  if (v < 0) throw std::domain_error("isqrt: negative argument");
  BigInt out;
  mpz_sqrt(out.get_mpz_t(), v.get_mpz_t());
  return out;
}

BigInt pow_ui(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

std::size_t decimal_digits(const BigInt& v) {
  if (v == 0) return 1;
  // get_str is exact; sizeinbase may overshoot by one.
  std::string s = v.get_str();
  return s.size() - (s[0] == '-' ? 1 : 0);
}

}  // namespace ramsey
