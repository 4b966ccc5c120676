#include "findim/findim.hpp"

#include "findim/invariants.hpp"

namespace findim {

namespace {

std::vector<ResolutionReport> resolve_all(const std::vector<Module>& mods, std::size_t cutoff, bool parallel) {
  std::vector<std::optional<ResolutionReport>> slots(mods.size());
  const long n = static_cast<long>(mods.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (long i = 0; i < n; ++i) slots[static_cast<std::size_t>(i)] = minimal_resolution(mods[static_cast<std::size_t>(i)], cutoff);
  std::vector<ResolutionReport> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

FinDimReport estimate(const AlgebraPtr& a, std::size_t max_total_dim, std::size_t cutoff, std::uint64_t budget,
                      bool parallel) {
  FinDimReport rep;
  rep.field = a->field().name();
  rep.algebra = a->name();
  rep.max_total_dim = max_total_dim;
  rep.cutoff = cutoff;
  auto mods = enumerate_modules(a, max_total_dim, budget);
  auto res = resolve_all(mods, cutoff, parallel);
  rep.enumerated = mods.size();
  for (std::size_t i = 0; i < mods.size(); ++i) {
    const auto& r = res[i];
    if (!r.status.finite) {
      rep.excluded.push_back({i, mods[i], r.periodicity});
      continue;
    }
    const std::size_t pd = r.status.value;
    if (rep.pd_histogram.size() <= pd) rep.pd_histogram.resize(pd + 1, 0);
    ++rep.pd_histogram[pd];
    if (!rep.witness_index || pd > rep.best) {
      rep.best = pd;
      rep.witness_index = i;
      rep.witness = mods[i];
      rep.witness_resolution = r;
    }
  }
  return rep;
}

}  // namespace

FinDimReport findim_estimate(const AlgebraPtr& a, std::size_t max_total_dim, std::size_t cutoff,
                             std::uint64_t budget) {
  return estimate(a, max_total_dim, cutoff, budget, true);
}

FinDimReport findim_estimate_serial(const AlgebraPtr& a, std::size_t max_total_dim, std::size_t cutoff,
                                    std::uint64_t budget) {
  return estimate(a, max_total_dim, cutoff, budget, false);
}

PdStatus gl_dim_estimate(const AlgebraPtr& a, std::size_t cutoff) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < a->vertex_count(); ++i) {
    PdStatus s = proj_dim(simple(a, i), cutoff);
    if (!s.finite) return PdStatus::at_least(cutoff);
    best = std::max(best, s.value);
  }
  return PdStatus::finite_pd(best);
}

RegularityReport regularity_check(const AlgebraPtr& a, std::size_t max_total_dim, std::size_t cutoff, bool parallel,
                                  std::uint64_t budget) {
  RegularityReport rep;
  auto mods = enumerate_modules(a, max_total_dim, budget);
  std::vector<char> finite(mods.size(), 0);
  const long n = static_cast<long>(mods.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (long i = 0; i < n; ++i)
    finite[static_cast<std::size_t>(i)] = proj_dim(mods[static_cast<std::size_t>(i)], cutoff).finite;
  rep.enumerated = mods.size();
  for (char f : finite) rep.infinite_count += f ? 0 : 1;
  rep.regular_up_to_bound = rep.infinite_count == 0;
  std::size_t best = 0;
  bool all_finite = true;
  for (std::size_t i = 0; i < a->vertex_count(); ++i) {
    PdStatus s = proj_dim(simple(a, i), cutoff);
    rep.simple_pds.push_back(s);
    if (s.finite) best = std::max(best, s.value);
    else all_finite = false;
  }
  rep.gl_dim_estimate = all_finite ? PdStatus::finite_pd(best) : PdStatus::at_least(cutoff);
  return rep;
}

Module top_of_algebra(const AlgebraPtr& a) {
  Module out = Module::zero(a);
  for (std::size_t i = 0; i < a->vertex_count(); ++i) out = direct_sum(out, simple(a, i));
  return out;
}

Complex finitistic_generator(const AlgebraPtr& a, std::size_t d) {
  Complex reg = regular_complex(a);
  return direct_sum(reg, shift(reg, static_cast<int>(d)));
}

}  // namespace findim
