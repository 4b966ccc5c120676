#include "findim/theorem.hpp"

#include <algorithm>

#include "findim/certificate.hpp"
#include "findim/findim.hpp"
#include "findim/invariants.hpp"
#include "findim/sampling.hpp"

namespace findim {

bool TheoremReport::pass() const {
  return exhaustive && amplitude_ok() && inequality_ok() && failures == 0 && !samples.empty();
}

Complex theorem_sample(const AlgebraPtr& a, const std::vector<Module>& mods, std::size_t max_width,
                       std::size_t cutoff, bool extension, std::mt19937_64& rng) {
  const int width = 1 + static_cast<int>(rng() % max_width);
  const int start = static_cast<int>(rng() % 4) - 2;
  // Both ends of the window carry cohomology so the width is exact.
  std::vector<int> degrees{start};
  for (int k = start + 1; k < start + width - 1; ++k)
    if (rng() % 2) degrees.push_back(k);
  if (width > 1) degrees.push_back(start + width - 1);
  auto pick = [&]() -> const Module& { return mods[rng() % mods.size()]; };

  if (extension) {
    Complex v = shift(resolve_to_perfect(pick(), cutoff), -degrees.front());
    for (std::size_t j = 1; j < degrees.size(); ++j) {
      Complex u = shift(resolve_to_perfect(pick(), cutoff), -(degrees[j] + 1));
      v = cone(random_chain_map(u, v, rng)).cone;
    }
    return v;
  }
  std::vector<Complex> parts;
  for (int k : degrees) parts.push_back(Complex::stalk(pick(), k));
  if (rng() % 2) {
    PerfectSampleOptions o{.min_lo = start - 1, .max_lo = start + 1, .max_width = 2, .max_multiplicity = 1};
    parts.push_back(cone(ChainMap::identity(random_perfect_complex(a, rng, o))).cone);
  }
  return direct_sum(parts, a);
}

TheoremReport run_theorem_suite(const AlgebraPtr& a, const TheoremOptions& opts) {
  TheoremReport rep;
  rep.algebra = a->name();
  FinDimReport fd = findim_estimate(a, opts.max_total_dim, opts.cutoff);
  rep.d = fd.best;
  rep.exhaustive = fd.exhaustive;

  Complex gen = finitistic_generator(a, rep.d);
  rep.amplitude = amplitude(gen);

  // q: A' is a sum of shifted summands of A, certified at level 1.
  ThickCertificate gc;
  std::vector<std::size_t> leaves;
  for (int s : {0, static_cast<int>(rep.d)})
    for (std::size_t i = 0; i < a->vertex_count(); ++i) {
      leaves.push_back(gc.steps.size());
      gc.steps.push_back(LeafStep{i, s});
    }
  gc.steps.push_back(SumStep{leaves});
  gc.level = 1;
  Complex built = certificate_object(gc, a);
  if (built.total_dim() == gen.total_dim()) {
    std::map<int, ModuleMap> comps;
    for (int n = gen.lo(); n <= gen.hi(); ++n) comps.emplace(n, ModuleMap::identity(gen.term(n)));
    gc.compare = to_map_data(ChainMap(built, gen, comps));
  }
  VerifyResult gv = verify_certificate(gc, gen);
  rep.q = gv.ok ? gv.computed_level : 0;

  std::vector<Module> mods;
  for (const auto& m : enumerate_modules(a, opts.max_total_dim)) {
    if (m.is_zero()) continue;
    PdStatus s = proj_dim(m, opts.cutoff);
    if (s.finite && s.value <= rep.d) mods.push_back(m);
  }
  // p: hom^1(A) lands in hom^p(A').
  for (const auto& m : mods) rep.p = std::max(rep.p, h_value(gen, Complex::stalk(m, 0)));

  std::mt19937_64 rng(opts.seed);
  Complex reg = regular_complex(a);
  for (std::size_t i = 0; i < opts.samples; ++i) {
    TheoremSample s;
    const bool extension = i % 2 == 0;
    s.kind = extension ? "extension" : "stalks";
    try {
      Complex y = theorem_sample(a, mods, opts.max_width, opts.cutoff, extension, rng);
      s.width = h_value(reg, y);
      ThickCertificate c = certificate_for_hom_p(y, rep.d, opts.cutoff);
      VerifyResult v = verify_certificate(c, y);
      s.verified = v.ok;
      s.level = v.computed_level;
      s.within_bound = s.level <= s.width + rep.d;
      const std::size_t hg = h_value(gen, y);
      s.generator_shift = s.width == 0 ? hg == 0 : hg == s.width + rep.d;
      s.message = v.message;
    } catch (const std::exception& e) {
      s.message = e.what();
    }
    if (!(s.verified && s.within_bound && s.generator_shift)) ++rep.failures;
    rep.samples.push_back(std::move(s));
  }
  return rep;
}

}  // namespace findim
