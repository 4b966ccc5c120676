#include <random>

#include "doctest.h"
#include "findim/enumerate.hpp"
#include "findim/resolution.hpp"
#include "fixtures.hpp"

using namespace findim;
using namespace fixtures;

namespace {

// Oracle: count vertex-wise GF(2) matrix tuples commuting with every arrow.
std::size_t gf2_hom_count(const Module& m, const Module& n) {
  const auto& alg = *m.algebra();
  std::size_t entries = 0;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) entries += m.dim(v) * n.dim(v);
  REQUIRE(entries < 20);
  std::size_t count = 0;
  for (std::size_t bits = 0; bits < (std::size_t(1) << entries); ++bits) {
    std::vector<Matrix> comps;
    std::size_t pos = 0;
    for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
      Matrix c(m.field(), n.dim(v), m.dim(v));
      for (std::size_t r = 0; r < c.rows(); ++r)
        for (std::size_t col = 0; col < c.cols(); ++col) c.set(r, col, Rational((bits >> pos++) & 1));
      comps.push_back(std::move(c));
    }
    if (ModuleMap(m, n, comps).is_homomorphism()) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("hom examples over A2") {
  auto a = a2();
  CHECK(hom_dim(projective(a, 0), simple(a, 0)) == 1);
  CHECK(hom_dim(simple(a, 0), simple(a, 1)) == 0);
  for (auto alg : all_gf2())
    for (std::size_t i = 0; i < alg->vertex_count(); ++i) {
      auto p = projective(alg, i);
      auto e = hom_space(p, p);
      CHECK(e.size() >= 1);
      for (const auto& f : e) CHECK(f.is_homomorphism());
    }
}

TEST_CASE("hom dimensions agree with brute force") {
  for (auto alg : {a2(), nakayama3(), dual_numbers(), a3_rad2()}) {
    auto mods = enumerate_modules(alg, 3);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 40; ++t) {
      const auto& m = mods[rng() % mods.size()];
      const auto& n = mods[rng() % mods.size()];
      auto basis = hom_space(m, n);
      CHECK((std::size_t(1) << basis.size()) == gf2_hom_count(m, n));
    }
  }
}

TEST_CASE("Yoneda: dim Hom(P_i, M) = dim M_i") {
  for (auto alg : all_gf2())
    for (const auto& m : enumerate_modules(alg, 3))
      for (std::size_t i = 0; i < alg->vertex_count(); ++i) CHECK(hom_dim(projective(alg, i), m) == m.dim(i));
}

TEST_CASE("projective covers, syzygies, tops") {
  auto a = a2();
  auto s1 = simple(a, 0);
  auto pc = projective_cover(s1);
  CHECK(pc.multiplicities == std::vector<std::size_t>{1, 0});
  CHECK(pc.cover.source().dims() == projective(a, 0).dims());
  auto om = syzygy(s1);
  CHECK(om.module.dims() == std::vector<std::size_t>{0, 1});
  CHECK(is_projective(om.module));
  CHECK(syzygy(projective(a, 0)).module.is_zero());
  CHECK_THROWS_AS(projective_cover(Module::zero(a)), ModuleError);

  auto d = dual_numbers();
  auto s = simple(d, 0);
  CHECK(projective_cover(s).cover.source().total_dim() == 2);
  CHECK(find_isomorphism(syzygy(s).module, s).has_value());

  for (auto alg : all_gf2()) {
    for (std::size_t i = 0; i < alg->vertex_count(); ++i) {
      auto t = top(projective(alg, i)).module;
      CHECK(t.dims() == simple(alg, i).dims());
    }
    for (const auto& m : enumerate_modules(alg, 3)) {
      if (m.is_zero()) continue;
      auto cov = projective_cover(m);
      CHECK(cov.cover.is_homomorphism());
      for (std::size_t v = 0; v < m.dims().size(); ++v) CHECK(rank(cov.cover.at(v)) == m.dim(v));
      CHECK(cov.multiplicities == top_dims(m));
      auto k = syzygy(m);
      CHECK(k.module.satisfies_relations());
      CHECK(k.module.total_dim() + m.total_dim() == cov.cover.source().total_dim());
    }
  }
}

TEST_CASE("resolutions") {
  auto a = a2();
  auto r = minimal_resolution(simple(a, 0), 5);
  CHECK(r.status == PdStatus::finite_pd(1));
  REQUIRE(r.multiplicities.size() == 2);
  CHECK(r.multiplicities[0] == std::vector<std::size_t>{1, 0});
  CHECK(r.multiplicities[1] == std::vector<std::size_t>{0, 1});
  CHECK(proj_dim(projective(a, 0), 3) == PdStatus::finite_pd(0));
  CHECK(proj_dim(Module::zero(a), 3) == PdStatus::finite_pd(0));

  auto d = dual_numbers();
  auto rd = minimal_resolution(simple(d, 0), 5);
  CHECK_FALSE(rd.status.finite);
  REQUIRE(rd.periodicity);
  CHECK(rd.periodicity->earlier == 0);
  CHECK(rd.periodicity->later == 1);
  CHECK(rd.periodicity->iso.is_isomorphism());

  CHECK(inj_dim(simple(field_k(), 0), 3) == PdStatus::finite_pd(0));
  CHECK(inj_dim(simple(a, 1), 3) == PdStatus::finite_pd(1));
  CHECK_FALSE(inj_dim(simple(d, 0), 5).finite);
}

TEST_CASE("resolution invariants on enumerated modules") {
  for (auto alg : all_gf2())
    for (const auto& m : enumerate_modules(alg, 3)) {
      auto r = minimal_resolution(m, 4, {.detect_periodicity = false});
      for (std::size_t k = 0; k + 1 < r.differentials.size(); ++k)
        CHECK(compose(r.differentials[k], r.differentials[k + 1]).is_zero());
      if (!r.differentials.empty()) CHECK(compose(*r.augmentation, r.differentials[0]).is_zero());
      // Minimality: every differential lands in the radical of its target.
      for (const auto& d : r.differentials) {
        auto rad = radical_bases(d.target());
        for (std::size_t v = 0; v < rad.size(); ++v) {
          Matrix joined = Matrix::hstack(d.at(v).field(), rad[v].rows(), std::vector<Matrix>{rad[v], d.at(v)});
          CHECK(rank(joined) == rad[v].cols());
        }
      }
      // Exactness: alternating dimension sum.
      long long alt = 0;
      for (std::size_t k = 0; k < r.terms.size(); ++k)
        alt += (k % 2 ? -1 : 1) * static_cast<long long>(r.terms[k].total_dim());
      if (r.status.finite) CHECK(alt == static_cast<long long>(m.total_dim()));
    }
}

TEST_CASE("pd of a direct sum is the max") {
  std::mt19937_64 rng(23);
  for (auto alg : {a2(), nakayama3(), a3_rad2()}) {
    auto mods = enumerate_modules(alg, 2);
    for (int t = 0; t < 30; ++t) {
      const auto& m = mods[rng() % mods.size()];
      const auto& n = mods[rng() % mods.size()];
      auto pm = proj_dim(m, 6), pn = proj_dim(n, 6), ps = proj_dim(direct_sum(m, n), 6);
      if (pm.finite && pn.finite) CHECK(ps == PdStatus::finite_pd(std::max(pm.value, pn.value)));
      else CHECK_FALSE(ps.finite);
    }
  }
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_modules(field_k(), 2).size() == 3);
  auto mods = enumerate_modules(a2(), 2);
  std::size_t with11 = 0;
  for (const auto& m : mods)
    if (m.dims() == std::vector<std::size_t>{1, 1}) ++with11;
  CHECK(with11 == 2);
  CHECK(mods.size() == 7);
  auto d = enumerate_modules(dual_numbers(), 1);
  CHECK(d.size() == 2);  // zero module and the simple
  CHECK_THROWS_AS(enumerate_modules(dual_numbers(), 6, 1000), BudgetError);
}

TEST_CASE("dual module") {
  auto a = a2();
  auto op = a->opposite();
  auto p = projective(a, 0);
  auto dp = dual_module(p, op);
  CHECK(dp.dims() == std::vector<std::size_t>{1, 1});
  CHECK(dp.satisfies_relations());
  CHECK(dual_module(Module::zero(a), op).is_zero());
  auto back = dual_module(dp, a);
  CHECK(find_isomorphism(back, p).has_value());
}
