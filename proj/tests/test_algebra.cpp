#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"

using namespace findim;
using namespace fixtures;

namespace {

bool contains_subpath(const Path& p, const std::vector<std::vector<std::size_t>>& monomials) {
  for (const auto& m : monomials)
    for (std::size_t s = 0; s + m.size() <= p.arrows.size(); ++s)
      if (std::equal(m.begin(), m.end(), p.arrows.begin() + static_cast<long>(s))) return true;
  return false;
}

// Oracle for monomial algebras: dim = number of paths avoiding every relation.
std::size_t monomial_dim(const Quiver& q, const std::vector<std::vector<std::size_t>>& monomials,
                         std::size_t max_len) {
  std::size_t n = 0;
  for (std::size_t len = 0; len <= max_len; ++len)
    for (const auto& p : paths_of_length(q, len))
      if (!contains_subpath(p, monomials)) ++n;
  return n;
}

}  // namespace

TEST_CASE("fixture algebra dimensions") {
  auto k = field_k();
  CHECK(k->dim() == 1);
  CHECK(k->loewy_length() == 1);
  auto a = a2();
  CHECK(a->dim() == 3);
  CHECK(a->projective_dims(0) == std::vector<std::size_t>{1, 1});
  CHECK(a->projective_dims(1) == std::vector<std::size_t>{0, 1});
  auto d = dual_numbers();
  CHECK(d->dim() == 2);
  CHECK(d->loewy_length() == 2);
  CHECK(nakayama3()->dim() == 6);
  CHECK(a3_rad2()->dim() == 5);
  CHECK(commutative_square(Field::rationals())->dim() == 9);
  CHECK(commutative_square()->dim() == 9);
}

TEST_CASE("opposite") {
  CHECK(field_k()->opposite()->dim() == 1);
  auto op = a2()->opposite();
  CHECK(op->dim() == 3);
  CHECK(op->quiver().arrow(0).source == 1);
  CHECK(op->quiver().arrow(0).target == 0);
  CHECK(dual_numbers()->opposite()->dim() == 2);
  auto sq = commutative_square();
  CHECK(sq->opposite()->opposite()->dim() == sq->dim());
  CHECK(sq->opposite()->opposite()->same_presentation(*sq));
}

TEST_CASE("non-admissible or infinite presentations are rejected") {
  Quiver loop(1, {{"x", 0, 0}});
  CHECK_THROWS_AS(Algebra::build(loop, {}, gf2(), 6), AlgebraError);
  CHECK_THROWS_AS(Algebra::build(loop, {Relation{{RelationTerm{1, {0}}}}}, gf2(), 6), AlgebraError);
  Quiver two(2, {{"a", 0, 1}, {"b", 1, 0}});
  // a b and a are not parallel.
  CHECK_THROWS_AS(Algebra::build(two, {Relation{{RelationTerm{1, {0, 1}}, RelationTerm{1, {1, 0}}}}}, gf2(), 6),
                  AlgebraError);
}

TEST_CASE("random monomial algebras agree with path counting") {
  std::mt19937_64 rng(17);
  int tested = 0;
  for (int t = 0; t < 60; ++t) {
    std::size_t v = 1 + rng() % 3;
    std::vector<Arrow> arrows;
    std::size_t na = 1 + rng() % 4;
    for (std::size_t i = 0; i < na; ++i) arrows.push_back({"x" + std::to_string(i), rng() % v, rng() % v});
    Quiver q(v, arrows);
    std::vector<std::vector<std::size_t>> monomials;
    std::vector<Relation> rels;
    for (std::size_t len = 2; len <= 3; ++len)
      for (const auto& p : paths_of_length(q, len))
        if (rng() % 3 != 0 && !contains_subpath(p, monomials)) {
          monomials.push_back(p.arrows);
          rels.push_back(Relation{{RelationTerm{1, p.arrows}}});
        }
    // Kill everything of length 4 so the algebra is finite-dimensional.
    for (const auto& p : paths_of_length(q, 4))
      if (!contains_subpath(p, monomials)) {
        monomials.push_back(p.arrows);
        rels.push_back(Relation{{RelationTerm{1, p.arrows}}});
      }
    auto alg = Algebra::build(q, rels, gf2(), 8);
    CHECK(alg->dim() == monomial_dim(q, monomials, 4));
    for (std::size_t i = 0; i < v; ++i) {
      Module p = projective(alg, i);
      CHECK(p.satisfies_relations());
    }
    ++tested;
  }
  CHECK(tested == 60);
}

TEST_CASE("products are associative on basis triples") {
  for (auto alg : {nakayama3(), commutative_square(Field::rationals()), a3_rad2()}) {
    const auto& b = alg->basis();
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        for (std::size_t k = 0; k < b.size(); ++k) {
          // (b_i b_j) b_k versus b_i (b_j b_k), expanded in coordinates.
          auto ij = alg->product(i, j);
          auto jk = alg->product(j, k);
          Matrix left(alg->field(), alg->dim(), 1), right(alg->field(), alg->dim(), 1);
          for (std::size_t s = 0; s < b.size(); ++s) {
            if (ij.at(s, 0) != 0) left = left + alg->product(s, k).scaled(ij.at(s, 0));
            if (jk.at(s, 0) != 0) right = right + alg->product(i, s).scaled(jk.at(s, 0));
          }
          CHECK(left == right);
        }
  }
}
