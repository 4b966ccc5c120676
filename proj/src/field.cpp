#include "findim/field.hpp"

#include <stdexcept>
#include <utility>

namespace findim {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::domain_error("element not invertible");
  if (t < 0) t += p;
  return std::uint32_t(t);
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_number(p))
    throw std::invalid_argument("GF(p) requires a prime p < 2^31, got " + std::to_string(p));
  return Field(Kind::prime, p);
}

std::string Field::name() const {
  return is_prime() ? "GF(" + std::to_string(p_) + ")" : "Q";
}

std::uint32_t reduce_mod(const Rational& x, std::uint32_t p) {
  Integer num = boost::multiprecision::numerator(x) % p;
  Integer den = boost::multiprecision::denominator(x) % p;
  if (num < 0) num += p;
  if (den == 0) throw std::domain_error("denominator vanishes in GF(" + std::to_string(p) + ")");
  auto n = num.convert_to<std::uint64_t>();
  auto d = den.convert_to<std::uint32_t>();
  return std::uint32_t(n * mod_inverse(d, p) % p);
}

Rational Field::normalize(const Rational& x) const {
  if (!is_prime()) return x;
  return Rational(reduce_mod(x, p_));
}

}  // namespace findim
