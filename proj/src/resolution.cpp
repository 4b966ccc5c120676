#include "findim/resolution.hpp"

namespace findim {

std::string to_string(const PdStatus& s) {
  return s.finite ? "Finite(" + std::to_string(s.value) + ")" : std::string("AtLeastCutoff");
}

ResolutionReport minimal_resolution(const Module& m, std::size_t cutoff, ResolutionOptions opts) {
  ResolutionReport r;
  r.cutoff = cutoff;
  r.syzygies.push_back(m);
  if (m.is_zero()) {
    r.status = PdStatus::finite_pd(0);
    return r;
  }
  std::optional<ModuleMap> prev_inclusion;  // Omega^k -> P_{k-1}
  for (std::size_t k = 0;; ++k) {
    const Module& cur = r.syzygies.back();
    ProjectiveCover pc = projective_cover(cur);
    r.multiplicities.push_back(pc.multiplicities);
    r.terms.push_back(pc.cover.source());
    if (k == 0) r.augmentation = pc.cover;
    else r.differentials.push_back(compose(*prev_inclusion, pc.cover));
    Submodule next = kernel(pc.cover);
    if (next.module.is_zero()) {
      r.status = PdStatus::finite_pd(k);
      return r;
    }
    if (k == cutoff) {
      r.status = PdStatus::at_least(cutoff);
      r.syzygies.push_back(next.module);
      break;
    }
    prev_inclusion = next.inclusion;
    r.syzygies.push_back(next.module);
  }
  if (!opts.detect_periodicity) {
    r.periodicity_search_complete = false;
    return r;
  }
  // First witness in order of the later index, then the earlier one.
  for (std::size_t b = 1; b < r.syzygies.size(); ++b)
    for (std::size_t a = 0; a < b; ++a) {
      bool exhaustive = true;
      auto iso = find_isomorphism(r.syzygies[a], r.syzygies[b], opts.max_iso_candidates, &exhaustive);
      if (!exhaustive) r.periodicity_search_complete = false;
      if (iso) {
        r.periodicity = Periodicity{a, b, *iso};
        return r;
      }
    }
  return r;
}

PdStatus proj_dim(const Module& m, std::size_t cutoff) {
  return minimal_resolution(m, cutoff, {.detect_periodicity = false}).status;
}

PdStatus inj_dim(const Module& m, std::size_t cutoff) {
  return proj_dim(dual_module(m, m.algebra()->opposite()), cutoff);
}

}  // namespace findim
