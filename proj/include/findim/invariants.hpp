#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "findim/complex.hpp"
#include "findim/resolution.hpp"

namespace findim {

struct PdError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The minimal resolution of m as a complex in degrees -pd .. 0.
// Throws PdError when pd is not finite within cutoff.
Complex resolve_to_perfect(const Module& m, std::size_t cutoff);
// Same, from an already computed report with finite status.
Complex resolution_complex(const ResolutionReport& r);
// (+)_i P_i^{mult[i]} in degree `degree`.
Complex projective_stalk(const AlgebraPtr& a, const std::vector<std::size_t>& mult, int degree);
// The regular module A = (+)_i P_i in degree 0.
Complex regular_complex(const AlgebraPtr& a);

// i -> dim Hom_D(x, S^i y), nonzero entries only.
struct HomSupport {
  std::map<int, std::size_t> dims;

  bool empty() const { return dims.empty(); }
  std::optional<int> min() const;
  std::optional<int> max() const;
};

HomSupport hom_support(const Complex& x, const Complex& y);
// Least n with h(x, y) <= n: 0 for empty support, else max - min + 1.
std::size_t h_value(const HomSupport& s);
std::size_t h_value(const Complex& x, const Complex& y);
bool in_hom_p(const Complex& x, const Complex& y, std::size_t p);
// max |n| over the support of Hom(x, S^n x); 0 for the zero complex.
std::size_t amplitude(const Complex& x);

struct FinitenessReport {
  bool finite = true;
  std::vector<std::size_t> h_values;  // one per probe
};
FinitenessReport is_homologically_finite(const Complex& x, const std::vector<Complex>& probes);

}  // namespace findim
