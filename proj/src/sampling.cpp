#include "findim/sampling.hpp"

namespace findim {

Rational random_scalar(const Field& f, std::mt19937_64& rng) {
  if (f.is_prime()) return Rational(static_cast<long long>(rng() % f.characteristic()));
  return Rational(static_cast<long long>(rng() % 7) - 3);
}

ModuleMap random_hom(const Module& m, const Module& n, std::mt19937_64& rng) {
  ModuleMap out = ModuleMap::zero(m, n);
  for (const auto& b : hom_space(m, n)) out = out + b.scaled(random_scalar(m.field(), rng));
  return out;
}

ChainMap random_chain_map(const Complex& x, const Complex& y, std::mt19937_64& rng) {
  ChainMap out = ChainMap::zero(x, y);
  for (const auto& b : chain_map_space(x, y)) out = out + b.scaled(random_scalar(x.algebra()->field(), rng));
  return out;
}

Complex random_perfect_complex(const AlgebraPtr& a, std::mt19937_64& rng, const PerfectSampleOptions& opts) {
  const Field& f = a->field();
  const int lo = opts.min_lo + static_cast<int>(rng() % static_cast<std::uint64_t>(opts.max_lo - opts.min_lo + 1));
  const std::size_t width = 1 + rng() % opts.max_width;
  std::vector<Module> terms;
  for (std::size_t i = 0; i < width; ++i) {
    std::vector<std::size_t> mult(a->vertex_count());
    for (auto& m : mult) m = rng() % (opts.max_multiplicity + 1);
    terms.push_back(projective_sum(a, mult));
  }
  std::vector<ModuleMap> diffs;
  for (std::size_t i = 0; i + 1 < width; ++i) {
    const Module& s = terms[i];
    const Module& t = terms[i + 1];
    auto basis = hom_space(s, t);
    if (basis.empty()) {
      diffs.push_back(ModuleMap::zero(s, t));
      continue;
    }
    // Coefficient vectors c with (sum c_j b_j) . d_prev = 0.
    Matrix k;
    if (diffs.empty()) {
      k = Matrix::identity(f, basis.size());
    } else {
      std::vector<Matrix> cols;
      for (const auto& b : basis) cols.push_back(compose(b, diffs.back()).flatten());
      k = kernel_basis(Matrix::hstack(f, cols.front().rows(), cols));
    }
    ModuleMap d = ModuleMap::zero(s, t);
    for (std::size_t c = 0; c < k.cols(); ++c) {
      Rational coeff = random_scalar(f, rng);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        Rational e = k.at(j, c);
        if (e != 0) d = d + basis[j].scaled(coeff * e);
      }
    }
    diffs.push_back(d);
  }
  return Complex(a, lo, std::move(terms), std::move(diffs));
}

}  // namespace findim
