#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "findim/complex.hpp"
#include "findim/enumerate.hpp"
#include "findim/resolution.hpp"

namespace findim {

struct ExcludedModule {
  std::size_t index = 0;  // position in enumeration order
  Module module;
  std::optional<Periodicity> periodicity;
};

struct FinDimReport {
  std::string field;
  std::string algebra;
  std::size_t max_total_dim = 0;
  std::size_t cutoff = 0;
  std::size_t enumerated = 0;
  std::size_t best = 0;
  // First module in enumeration order realizing `best`.
  std::optional<std::size_t> witness_index;
  std::optional<Module> witness;
  std::optional<ResolutionReport> witness_resolution;
  // pd_histogram[k] = number of modules with pd exactly k.
  std::vector<std::size_t> pd_histogram;
  std::vector<ExcludedModule> excluded;  // AtLeastCutoff: membership in P(A) undetermined
  bool exhaustive = true;
};

// Parallel over the enumeration, merged deterministically in enumeration order.
FinDimReport findim_estimate(const AlgebraPtr& a, std::size_t max_total_dim, std::size_t cutoff,
                             std::uint64_t budget = std::uint64_t(1) << 22);
// Single-threaded reference.
FinDimReport findim_estimate_serial(const AlgebraPtr& a, std::size_t max_total_dim, std::size_t cutoff,
                                    std::uint64_t budget = std::uint64_t(1) << 22);

struct RegularityReport {
  std::size_t enumerated = 0;
  std::size_t infinite_count = 0;  // modules with AtLeastCutoff
  bool regular_up_to_bound = true;
  PdStatus gl_dim_estimate;        // max pd over the simples
  std::vector<PdStatus> simple_pds;
};

RegularityReport regularity_check(const AlgebraPtr& a, std::size_t max_total_dim, std::size_t cutoff,
                                  bool parallel = true, std::uint64_t budget = std::uint64_t(1) << 22);
PdStatus gl_dim_estimate(const AlgebraPtr& a, std::size_t cutoff);
// top A = (+)_i S_i.
Module top_of_algebra(const AlgebraPtr& a);

// A (+) S^d A.
Complex finitistic_generator(const AlgebraPtr& a, std::size_t d);

}  // namespace findim
