#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramsey {

using BigInt = mpz_class;

// Product of the integer range [lo, hi] by binary splitting. Empty range is 1.
BigInt range_product(unsigned long lo, unsigned long hi);

// n! via the product tree above.
BigInt factorial(unsigned long n);

// (sum parts)! / prod(parts[i]!), computed as a factorial quotient with exact
// division. All parts must be nonnegative (enforced by the unsigned type).
BigInt multinomial(const std::vector<unsigned long>& parts);

// Floor square root of a nonnegative integer.
BigInt isqrt(const BigInt& v);

// base^exp for small exponents of big bases.
BigInt pow_ui(const BigInt& base, unsigned long exp);

// Decimal digit count of |v| (1 for zero).
std::size_t decimal_digits(const BigInt& v);

}  // namespace ramsey
