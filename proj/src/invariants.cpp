#include "findim/invariants.hpp"

#include <cstdlib>

namespace findim {

Complex resolution_complex(const ResolutionReport& r) {
  if (!r.status.finite) throw PdError("pd at least cutoff");
  const AlgebraPtr& alg = r.syzygies.front().algebra();
  if (r.terms.empty()) return Complex::zero(alg);
  const int n = static_cast<int>(r.terms.size()) - 1;
  // Degree -k holds P_k; d^{-k} : P_k -> P_{k-1}.
  std::vector<Module> terms;
  std::vector<ModuleMap> diffs;
  for (int k = n; k >= 0; --k) {
    terms.push_back(r.terms[static_cast<std::size_t>(k)]);
    if (k > 0) diffs.push_back(r.differentials[static_cast<std::size_t>(k - 1)]);
  }
  return Complex::trusted(alg, -n, std::move(terms), std::move(diffs));
}

Complex resolve_to_perfect(const Module& m, std::size_t cutoff) {
  return resolution_complex(minimal_resolution(m, cutoff, {.detect_periodicity = false}));
}

Complex projective_stalk(const AlgebraPtr& a, const std::vector<std::size_t>& mult, int degree) {
  return Complex::stalk(projective_sum(a, mult), degree);
}

Complex regular_complex(const AlgebraPtr& a) {
  return projective_stalk(a, std::vector<std::size_t>(a->vertex_count(), 1), 0);
}

std::optional<int> HomSupport::min() const {
  if (dims.empty()) return std::nullopt;
  return dims.begin()->first;
}

std::optional<int> HomSupport::max() const {
  if (dims.empty()) return std::nullopt;
  return dims.rbegin()->first;
}

HomSupport hom_support(const Complex& x, const Complex& y) { return {hom_cohomology(x, y)}; }

std::size_t h_value(const HomSupport& s) {
  if (s.empty()) return 0;
  return static_cast<std::size_t>(*s.max() - *s.min()) + 1;
}

std::size_t h_value(const Complex& x, const Complex& y) { return h_value(hom_support(x, y)); }

bool in_hom_p(const Complex& x, const Complex& y, std::size_t p) { return h_value(x, y) <= p; }

std::size_t amplitude(const Complex& x) {
  std::size_t amp = 0;
  for (const auto& [n, d] : hom_support(x, x).dims) amp = std::max<std::size_t>(amp, std::abs(n));
  return amp;
}

FinitenessReport is_homologically_finite(const Complex& x, const std::vector<Complex>& probes) {
  FinitenessReport r;
  // Bounded complexes over a finite-dimensional algebra always give a finite value.
  for (const auto& y : probes) r.h_values.push_back(h_value(x, y));
  return r;
}

}  // namespace findim
