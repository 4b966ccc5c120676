#include "findim/enumerate.hpp"

#include <limits>

namespace findim {

namespace {

void dim_vectors_with_total(std::size_t vertices, std::size_t total, std::vector<std::size_t>& cur,
                            std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() + 1 == vertices) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  // Lexicographically increasing: the first coordinate grows slowest.
  for (std::size_t first = 0; first <= total; ++first) {
    cur.push_back(first);
    dim_vectors_with_total(vertices, total - first, cur, out);
    cur.pop_back();
  }
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

std::size_t entry_count(const Algebra& a, const std::vector<std::size_t>& dims) {
  std::size_t e = 0;
  for (const auto& arr : a.quiver().arrows()) e += dims[arr.target] * dims[arr.source];
  return e;
}

}  // namespace

std::vector<std::vector<std::size_t>> dimension_vectors(std::size_t vertices, std::size_t max_total_dim) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  for (std::size_t t = 0; t <= max_total_dim; ++t) dim_vectors_with_total(vertices, t, cur, out);
  return out;
}

std::uint64_t enumeration_size(const Algebra& a, std::size_t max_total_dim) {
  if (!a.field().is_prime()) return std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  for (const auto& dims : dimension_vectors(a.vertex_count(), max_total_dim)) {
    std::uint64_t n = saturating_pow(a.field().characteristic(), entry_count(a, dims));
    if (total > std::numeric_limits<std::uint64_t>::max() - n) return std::numeric_limits<std::uint64_t>::max();
    total += n;
  }
  return total;
}

void for_each_module(const AlgebraPtr& a, std::size_t max_total_dim, const std::function<void(const Module&)>& fn,
                     std::uint64_t budget) {
  if (!a->field().is_prime()) throw BudgetError("module enumeration needs a finite field", 0);
  const std::uint64_t size = enumeration_size(*a, max_total_dim);
  if (size > budget)
    throw BudgetError("enumeration space of " + std::to_string(size) + " tuples exceeds the budget of " +
                          std::to_string(budget),
                      size);
  const std::uint64_t p = a->field().characteristic();
  const Field& field = a->field();
  for (const auto& dims : dimension_vectors(a->vertex_count(), max_total_dim)) {
    const std::size_t e = entry_count(*a, dims);
    std::vector<std::uint64_t> digits(e, 0);
    const std::uint64_t count = saturating_pow(p, e);
    for (std::uint64_t n = 0; n < count; ++n) {
      std::vector<Matrix> arrows;
      std::size_t pos = 0;
      for (const auto& arr : a->quiver().arrows()) {
        Matrix m(field, dims[arr.target], dims[arr.source]);
        for (std::size_t r = 0; r < m.rows(); ++r)
          for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, Rational(digits[pos++]));
        arrows.push_back(std::move(m));
      }
      Module m = Module::trusted(a, dims, std::move(arrows));
      if (m.satisfies_relations()) fn(m);
      for (std::size_t i = 0; i < e; ++i) {
        if (++digits[i] < p) break;
        digits[i] = 0;
      }
    }
  }
}

std::vector<Module> enumerate_modules(const AlgebraPtr& a, std::size_t max_total_dim, std::uint64_t budget) {
  std::vector<Module> out;
  for_each_module(a, max_total_dim, [&](const Module& m) { out.push_back(m); }, budget);
  return out;
}

}  // namespace findim
