#pragma once

#include <cstddef>
#include <vector>

#include "findim/complex.hpp"

namespace findim {

struct GhostMaps {
  Complex resolution;           // Q in degrees -len .. 0, len <= 2n + 1
  std::vector<ChainMap> maps;   // phi_1 .. phi_n
  ChainMap composite;           // phi_n ... phi_1 : Q[-n-1, 0] -> Q[-2n-1, -n]
  bool all_ghost = true;        // H^*(phi_i) = 0 for every i
};

// Q[a, b]: the stupid truncation of Q to degrees a .. b.
Complex interval(const Complex& q, int a, int b);

// phi_i : Q[-n-i, -i+1] -> Q[-n-i-1, -i], the identity on degrees
// -n-i .. -i and zero elsewhere, for the minimal resolution Q of m cut after
// 2n + 2 terms. Requires n >= 1.
GhostMaps ghost_maps(const Module& m, std::size_t n);

// The composite of n + 1 ghost maps is null-homotopic exactly when pd m <= n.
bool ghost_pd_oracle(const Module& m, std::size_t n);

}  // namespace findim
