#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "findim/complex.hpp"
#include "findim/invariants.hpp"
#include "findim/sampling.hpp"

// Sampled checks of the elementary hom-support properties. Each check
// returns an empty string on success and a description otherwise.
namespace properties {

using namespace findim;
using Support = std::map<int, std::size_t>;

// Hom(S^i x, S^n y) = Hom(x, S^{n-i} y).
inline Support shifted(const Support& s, int i) {
  Support out;
  for (const auto& [n, d] : s) out[n + i] = d;
  return out;
}

inline Support merged(const Support& a, const Support& b) {
  Support out = a;
  for (const auto& [n, d] : b) out[n] += d;
  return out;
}

inline std::size_t diameter(const Support& s) {
  return s.empty() ? 0 : static_cast<std::size_t>(s.rbegin()->first - s.begin()->first + 1);
}

inline Complex power(const Complex& x, std::size_t k) {
  std::vector<Complex> parts(k, x);
  return direct_sum(parts, x.algebra());
}

struct Sample {
  Complex x;
  Complex y;
};

inline Sample draw(const AlgebraPtr& a, std::mt19937_64& rng) {
  PerfectSampleOptions opts;
  Complex x = random_perfect_complex(a, rng, opts);
  Complex y = random_perfect_complex(a, rng, opts);
  return {x, y};
}

// (1) h = 0 iff the support is empty; (2) h <= 1 iff at most one degree.
inline std::string check_12(const Complex& x, const Complex& y) {
  HomSupport s = hom_support(x, y);
  const std::size_t h = h_value(s);
  if ((h == 0) != s.empty()) return "(1) h = 0 disagrees with empty support";
  if ((h <= 1) != (s.dims.size() <= 1)) return "(2) h <= 1 disagrees with a single support degree";
  if (h != diameter(s.dims)) return "h is not the support diameter";
  return {};
}

// (3) h(S^i x, y) = h(x, y), and the support moves by exactly i.
inline std::string check_3(const Complex& x, const Complex& y, int i) {
  HomSupport s = hom_support(x, y);
  HomSupport t = hom_support(shift(x, i), y);
  if (t.dims != shifted(s.dims, i)) return "(3) support of the shifted complex is not the shifted support";
  if (h_value(t) != h_value(s)) return "(3) h changed under shift";
  return {};
}

// (4) in_hom_p(x, y, n) <=> in_hom_p(x (+) S^i x, y, n + |i|) for n = 0 .. bound.
inline std::string check_4(const Complex& x, const Complex& y, int i, std::size_t bound) {
  HomSupport s = hom_support(x, y);
  Complex xs = direct_sum(x, shift(x, i));
  HomSupport t = hom_support(xs, y);
  if (t.dims != merged(s.dims, shifted(s.dims, i))) return "(4) support of x (+) S^i x is not S u (S + i)";
  const std::size_t ai = static_cast<std::size_t>(std::abs(i));
  for (std::size_t n = 0; n <= bound; ++n)
    if (in_hom_p(x, y, n) != in_hom_p(xs, y, n + ai)) return "(4) membership differs at n = " + std::to_string(n);
  return {};
}

// (5) support(x^k, z) = support(x, z) with dims scaled by k.
inline std::string check_5(const Complex& x, const Complex& z, std::size_t k) {
  HomSupport s = hom_support(x, z);
  HomSupport t = hom_support(power(x, k), z);
  Support expect;
  for (const auto& [n, d] : s.dims) expect[n] = d * k;
  if (t.dims != expect) return "(5) support of x^k is not k times the support of x";
  if (h_value(t) > h_value(s)) return "(5) h grew on a finite power";
  return {};
}

// (6) y an extension x^b -> y -> x^a built as cone(S^-1 x^a -> x^b):
// support(y, z) lies inside support(x, z).
inline std::string check_6(const Complex& x, const Complex& z, std::size_t a, std::size_t b, std::mt19937_64& rng) {
  ChainMap f = random_chain_map(shift(power(x, a), -1), power(x, b), rng);
  Complex y = cone(f).cone;
  HomSupport s = hom_support(x, z);
  HomSupport t = hom_support(y, z);
  for (const auto& [n, d] : t.dims)
    if (!s.dims.count(n)) return "(6) support of the extension leaves the support of x at degree " + std::to_string(n);
  for (std::size_t p = 0; p <= diameter(s.dims) + 1; ++p)
    if (in_hom_p(x, z, p) && !in_hom_p(y, z, p)) return "(6) membership not inherited at p = " + std::to_string(p);
  return {};
}

// Iterated cones y_k = cone(S^{s_k} x -> y_{k-1}) starting at y_0 = x. The
// triangle y_{k-1} -> y_k -> S^{s_k + 1} x bounds the support of y_k by
// support(x) shifted by the accumulated offsets, so h(y, z) <= h(x, z) + spread.
struct ThickSample {
  Complex y;
  int spread = 0;
};
inline ThickSample thick_sample(const Complex& x, std::size_t steps, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> sd(-2, 0);
  Complex y = x;
  int lo = 0, hi = 0;
  for (std::size_t k = 0; k < steps; ++k) {
    const int s = sd(rng);
    ChainMap f = random_chain_map(shift(x, s), y, rng);
    y = cone(f).cone;
    lo = std::min(lo, s + 1);
    hi = std::max(hi, s + 1);
  }
  return {y, hi - lo};
}

}  // namespace properties
