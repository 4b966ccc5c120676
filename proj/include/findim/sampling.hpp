#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "findim/complex.hpp"

namespace findim {

// Uniform over GF(p), small integers over Q.
Rational random_scalar(const Field& f, std::mt19937_64& rng);
// Random linear combination of a basis of Hom(m, n).
ModuleMap random_hom(const Module& m, const Module& n, std::mt19937_64& rng);
// Random element of the space of chain maps x -> y.
ChainMap random_chain_map(const Complex& x, const Complex& y, std::mt19937_64& rng);

struct PerfectSampleOptions {
  int min_lo = -2;
  int max_lo = 2;
  std::size_t max_width = 3;      // number of degrees
  std::size_t max_multiplicity = 2;
};
// Terms are random sums of indecomposable projectives; each differential is
// drawn from the homomorphisms killing the previous one.
Complex random_perfect_complex(const AlgebraPtr& a, std::mt19937_64& rng, const PerfectSampleOptions& opts = {});

}  // namespace findim
