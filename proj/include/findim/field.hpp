#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace findim {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Ground field: GF(p) for a prime p < 2^31, or the rationals.
class Field {
 public:
  enum class Kind { prime, rational };

  // Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);
  static Field rationals() { return Field(Kind::rational, 0); }

  Kind kind() const noexcept { return kind_; }
  bool is_prime() const noexcept { return kind_ == Kind::prime; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const;

  // Canonical representative: an integer in [0, p) for GF(p), the value itself for Q.
  Rational normalize(const Rational& x) const;

  bool operator==(const Field&) const = default;

 private:
  Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime_number(std::uint64_t n);
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);
// x mod p as an integer in [0, p); throws if the denominator vanishes mod p.
std::uint32_t reduce_mod(const Rational& x, std::uint32_t p);

}  // namespace findim
