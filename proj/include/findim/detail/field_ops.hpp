#pragma once

// Typed scalar kernels. Everything above the matrix layer goes through
// Matrix; only kernels that need raw speed dispatch on these.

#include <cstdint>
#include <utility>

#include "findim/field.hpp"

namespace findim::detail {

struct ModP {
  using value_type = std::uint32_t;
  std::uint64_t p;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return value_type(s >= p ? s - p : s);
  }
  value_type sub(value_type a, value_type b) const {
    return a >= b ? a - b : value_type(std::uint64_t(a) + p - b);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : value_type(p - a); }
  value_type mul(value_type a, value_type b) const {
    return value_type(std::uint64_t(a) * b % p);
  }
  value_type inv(value_type a) const { return mod_inverse(a, std::uint32_t(p)); }
  value_type from(const Rational& x) const {
    return reduce_mod(x, std::uint32_t(p));
  }
  Rational to(value_type a) const { return Rational(a); }
};

struct RatOps {
  using value_type = Rational;

  value_type zero() const { return Rational(0); }
  value_type one() const { return Rational(1); }
  bool is_zero(const value_type& a) const { return a == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const { return 1 / a; }
  value_type from(const Rational& x) const { return x; }
  Rational to(const value_type& a) const { return a; }
};

template <class Fn>
decltype(auto) visit_field(const Field& f, Fn&& fn) {
  if (f.is_prime()) return std::forward<Fn>(fn)(ModP{f.characteristic()});
  return std::forward<Fn>(fn)(RatOps{});
}

}  // namespace findim::detail
