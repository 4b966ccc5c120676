#include "doctest.h"
#include "findim/enumerate.hpp"
#include "findim/findim.hpp"
#include "findim/invariants.hpp"
#include "findim/io.hpp"
#include "findim/resolution.hpp"
#include "findim/theorem.hpp"
#include "fixtures.hpp"

using namespace findim;
using namespace fixtures;

TEST_CASE("findim_estimate examples") {
  FinDimReport k = findim_estimate(field_k(), 3, 5);
  CHECK(k.best == 0);
  CHECK(k.excluded.empty());
  CHECK(k.exhaustive);

  // Over A2 the indecomposables are S1 (pd 1), S2 = P2 and P1.
  FinDimReport a = findim_estimate(a2(), 3, 5);
  CHECK(a.best == 1);
  CHECK(a.excluded.empty());
  REQUIRE(a.witness.has_value());
  CHECK(proj_dim(*a.witness, 5) == PdStatus::finite_pd(1));
  CHECK(a.enumerated == enumerate_modules(a2(), 3).size());

  // Over k[x]/(x^2) a module is free or has a simple summand, so its pd is 0 or infinite.
  FinDimReport d = findim_estimate(dual_numbers(), 3, 8);
  CHECK(d.best == 0);
  CHECK(!d.excluded.empty());
  for (const auto& e : d.excluded) {
    REQUIRE(e.periodicity.has_value());
    CHECK(e.periodicity->later == e.periodicity->earlier + 1);
    if (e.module == simple(dual_numbers(), 0)) CHECK(e.periodicity->earlier == 0);
  }
  std::size_t free_count = 0;
  for (const auto& m : enumerate_modules(dual_numbers(), 3))
    if (m.dim(0) % 2 == 0 && rank(m.arrow(0)) == m.dim(0) / 2) ++free_count;
  CHECK(d.enumerated - d.excluded.size() == free_count);
}

TEST_CASE("findim histogram and witness bookkeeping") {
  FinDimReport r = findim_estimate(a3_rad2(), 3, 6);
  std::size_t total = 0;
  for (auto c : r.pd_histogram) total += c;
  CHECK(total + r.excluded.size() == r.enumerated);
  CHECK(r.best == 2);
  REQUIRE(r.witness_index.has_value());
  auto mods = enumerate_modules(a3_rad2(), 3);
  for (std::size_t i = 0; i < *r.witness_index; ++i) {
    PdStatus s = proj_dim(mods[i], 6);
    CHECK(!(s.finite && s.value == r.best));
  }
}

TEST_CASE("parallel and serial findim agree") {
  for (const auto& a : all_gf2()) {
    FinDimReport p = findim_estimate(a, 3, 6);
    FinDimReport s = findim_estimate_serial(a, 3, 6);
    CHECK(io::findim_to_json(p).dump() == io::findim_to_json(s).dump());
  }
}

TEST_CASE("findim is monotone in bound and cutoff") {
  for (const auto& a : all_gf2()) {
    std::size_t prev = 0;
    for (std::size_t m = 1; m <= 3; ++m) {
      std::size_t b = findim_estimate(a, m, 6).best;
      CHECK(b >= prev);
      prev = b;
    }
    CHECK(findim_estimate(a, 3, 2).best <= findim_estimate(a, 3, 6).best);
  }
}

TEST_CASE("findim budget errors") {
  CHECK_THROWS_AS(findim_estimate(nakayama3(), 9, 4), BudgetError);
  CHECK_THROWS_AS(findim_estimate(a2(Field::rationals()), 2, 4), BudgetError);
}

TEST_CASE("regularity_check examples") {
  RegularityReport k = regularity_check(field_k(), 3, 6);
  CHECK(k.regular_up_to_bound);
  CHECK(k.gl_dim_estimate == PdStatus::finite_pd(0));

  RegularityReport a = regularity_check(a2(), 3, 6);
  CHECK(a.regular_up_to_bound);
  CHECK(a.gl_dim_estimate == PdStatus::finite_pd(1));
  CHECK(a.simple_pds == std::vector<PdStatus>{PdStatus::finite_pd(1), PdStatus::finite_pd(0)});

  RegularityReport d = regularity_check(dual_numbers(), 3, 6);
  CHECK_FALSE(d.regular_up_to_bound);
  CHECK_FALSE(d.gl_dim_estimate.finite);

  for (const auto& alg : all_gf2()) {
    RegularityReport p = regularity_check(alg, 3, 6, true);
    RegularityReport s = regularity_check(alg, 3, 6, false);
    CHECK(io::regularity_to_json(p) == io::regularity_to_json(s));
  }
}

TEST_CASE("gl.dim estimate is bounded by inj.dim of the top") {
  for (const auto& a : all_gf2()) {
    PdStatus t = inj_dim(top_of_algebra(a), 8);
    PdStatus g = gl_dim_estimate(a, 8);
    if (t.finite) {
      REQUIRE(g.finite);
      CHECK(g.value <= t.value);
    }
  }
  CHECK(gl_dim_estimate(a3_rad2(), 8) == PdStatus::finite_pd(2));
  CHECK(inj_dim(top_of_algebra(a3_rad2()), 8) == PdStatus::finite_pd(2));
}

TEST_CASE("finitistic generator shape") {
  auto a = a2();
  Complex g = finitistic_generator(a, 0);
  CHECK(g.lo() == 0);
  CHECK(g.hi() == 0);
  CHECK(g.term(0).dims() == std::vector<std::size_t>{2, 4});
  Complex g2 = finitistic_generator(field_k(), 2);
  CHECK(g2.lo() == -2);
  CHECK(amplitude(g2) == 2);
}

TEST_CASE("theorem suite on small algebras") {
  TheoremOptions opts;
  opts.samples = 12;
  for (const auto& a : {field_k(), a2(), nakayama3()}) {
    TheoremReport r = run_theorem_suite(a, opts);
    CHECK(r.amplitude_ok());
    CHECK(r.inequality_ok());
    CHECK(r.q == 1);
    CHECK(r.failures == 0);
    CHECK(r.samples.size() == 12);
    for (const auto& s : r.samples) {
      CHECK(s.verified);
      CHECK(s.within_bound);
      CHECK(s.generator_shift);
      CHECK(s.width <= opts.max_width);
    }
    CHECK(r.pass());
  }
}

TEST_CASE("theorem samples are reproducible") {
  TheoremOptions opts;
  opts.samples = 6;
  opts.seed = 42;
  auto a = a2();
  CHECK(io::theorem_to_json(run_theorem_suite(a, opts)) == io::theorem_to_json(run_theorem_suite(a, opts)));
}
