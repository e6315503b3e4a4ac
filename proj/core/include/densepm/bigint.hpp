#pragma once

#include <gmpxx.h>

#include <string>

namespace densepm {

using BigInt = mpz_class;
using BigRational = mpq_class;

std::string to_decimal(const BigInt& value);

BigInt factorial(unsigned n);

/// binomial(n, k), zero when k < 0 or k > n.
BigInt binomial(long n, long k);

BigInt pow2(unsigned exponent);

}  // namespace densepm
