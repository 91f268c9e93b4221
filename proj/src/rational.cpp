#include "nsphere/rational.hpp"

#include "nsphere/errors.hpp"

namespace nsphere {

std::string to_string(const BigRational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

BigRational parse_rational(const std::string& text) {
  BigRational out;
  if (text.empty() || out.set_str(text, 10) != 0 || out.get_den() == 0) {
    throw InvalidInput("not a rational number: '" + text + "'");
  }
  out.canonicalize();
  return out;
}

BigInteger int_pow(std::int64_t base, unsigned exponent) {
  BigInteger out;
  BigInteger b(static_cast<long>(base));
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exponent);
  return out;
}

BigInteger factorial(unsigned m) {
  BigInteger out;
  mpz_fac_ui(out.get_mpz_t(), m);
  return out;
}

double to_double(const BigRational& value) { return value.get_d(); }

}  // namespace nsphere
