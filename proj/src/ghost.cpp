#include "findim/ghost.hpp"

#include <stdexcept>

#include "findim/resolution.hpp"

namespace findim {

Complex interval(const Complex& q, int a, int b) {
  return stupid_truncate(stupid_truncate(q, Keep::AtLeast, a), Keep::AtMost, b);
}

GhostMaps ghost_maps(const Module& m, std::size_t n) {
  if (n == 0) throw std::invalid_argument("ghost maps need n >= 1");
  auto r = minimal_resolution(m, 2 * n + 1, {.detect_periodicity = false});
  const AlgebraPtr& alg = m.algebra();
  std::vector<Module> terms;
  std::vector<ModuleMap> diffs;
  const int len = static_cast<int>(r.terms.size()) - 1;
  for (int k = len; k >= 0; --k) {
    terms.push_back(r.terms[static_cast<std::size_t>(k)]);
    if (k > 0) diffs.push_back(r.differentials[static_cast<std::size_t>(k - 1)]);
  }
  Complex q = terms.empty() ? Complex::zero(alg) : Complex::trusted(alg, -len, terms, diffs);

  const int ni = static_cast<int>(n);
  std::vector<ChainMap> maps;
  bool all_ghost = true;
  for (int i = 1; i <= ni; ++i) {
    Complex src = interval(q, -ni - i, -i + 1);
    Complex dst = interval(q, -ni - i - 1, -i);
    std::map<int, ModuleMap> comps;
    for (int k = -ni - i; k <= -i; ++k) comps.emplace(k, ModuleMap::identity(q.term(k)));
    ChainMap phi(src, dst, std::move(comps));
    if (!phi.is_chain_map()) throw std::logic_error("ghost map is not a chain map");
    all_ghost = all_ghost && induces_zero_on_cohomology(phi);
    maps.push_back(std::move(phi));
  }
  ChainMap comp = maps.front();
  for (std::size_t i = 1; i < maps.size(); ++i) comp = compose(maps[i], comp);
  return {q, std::move(maps), std::move(comp), all_ghost};
}

bool ghost_pd_oracle(const Module& m, std::size_t n) {
  return null_homotopy(ghost_maps(m, n + 1).composite).has_value();
}

}  // namespace findim
