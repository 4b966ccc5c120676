#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "findim/complex.hpp"

namespace findim {

struct TheoremOptions {
  std::size_t samples = 50;
  std::size_t max_width = 3;
  std::uint64_t seed = 1;
  std::size_t max_total_dim = 3;
  std::size_t cutoff = 6;
};

struct TheoremSample {
  std::string kind;             // "extension" or "stalks"
  std::size_t width = 0;        // h(A, y)
  std::size_t level = 0;        // computed certificate level
  bool verified = false;
  bool within_bound = false;    // level <= width + d
  bool generator_shift = false; // h(A (+) S^d A, y) = width + d (or 0 when acyclic)
  std::string message;
};

struct TheoremReport {
  std::string algebra;
  std::size_t d = 0;              // findim estimate
  bool exhaustive = false;
  std::size_t amplitude = 0;      // amp(A (+) S^d A)
  std::size_t p = 0;              // max h(A', M) over module stalks
  std::size_t q = 0;              // level of A' over A
  std::vector<TheoremSample> samples;
  std::size_t failures = 0;

  bool amplitude_ok() const { return amplitude == d; }
  bool inequality_ok() const { return d < p + q; }
  bool pass() const;
};

// Cohomology width <= max_width, every H^i a module of `mods` in its degree.
// Even draws: iterated cones onto shifted resolutions (perfect). Odd draws:
// sums of module stalks, optionally with a contractible summand.
Complex theorem_sample(const AlgebraPtr& a, const std::vector<Module>& mods, std::size_t max_width,
                       std::size_t cutoff, bool extension, std::mt19937_64& rng);

TheoremReport run_theorem_suite(const AlgebraPtr& a, const TheoremOptions& opts);

}  // namespace findim
