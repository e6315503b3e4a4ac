#include "densepm/bigint.hpp"

namespace densepm {

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

BigInt factorial(unsigned n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

BigInt pow2(unsigned exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 2, exponent);
  return result;
}

}  // namespace densepm
