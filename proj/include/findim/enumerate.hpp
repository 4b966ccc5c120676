#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "findim/module.hpp"

namespace findim {

struct BudgetError : std::runtime_error {
  BudgetError(const std::string& what, std::uint64_t size) : std::runtime_error(what), search_size(size) {}
  std::uint64_t search_size;
};

// Dimension vectors with total <= max_total_dim, by total then lexicographically.
std::vector<std::vector<std::size_t>> dimension_vectors(std::size_t vertices, std::size_t max_total_dim);

// Number of arrow-matrix tuples to visit (saturating at UINT64_MAX).
std::uint64_t enumeration_size(const Algebra& a, std::size_t max_total_dim);

// Every module over GF(p) with total dimension <= max_total_dim, one per
// tuple of arrow matrices satisfying the relations (no isomorphism dedup).
// Order: dimension vectors as above, then tuples in odometer order with the
// first matrix entry varying fastest. Throws BudgetError when the search
// space exceeds `budget` or the field is not GF(p).
void for_each_module(const AlgebraPtr& a, std::size_t max_total_dim, const std::function<void(const Module&)>& fn,
                     std::uint64_t budget = std::uint64_t(1) << 22);
std::vector<Module> enumerate_modules(const AlgebraPtr& a, std::size_t max_total_dim,
                                      std::uint64_t budget = std::uint64_t(1) << 22);

}  // namespace findim
