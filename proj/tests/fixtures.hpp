#pragma once

#include <random>

#include "findim/algebra.hpp"
#include "findim/module.hpp"

namespace fixtures {

using namespace findim;

inline Field gf2() { return Field::prime(2); }

inline AlgebraPtr field_k(Field f = gf2()) { return Algebra::build(Quiver(1, {}), {}, f, 4, "k"); }

inline AlgebraPtr a2(Field f = gf2()) {
  return Algebra::build(Quiver(2, {{"a", 0, 1}}), {}, f, 4, "A2");
}

inline AlgebraPtr dual_numbers(Field f = gf2()) {
  return Algebra::build(Quiver(1, {{"x", 0, 0}}), {Relation{{RelationTerm{1, {0, 0}}}}}, f, 4, "kx_x2");
}

// Cyclic quiver 0 -> 1 -> 2 -> 0 with all length-2 paths zero.
inline AlgebraPtr nakayama3(Field f = gf2()) {
  Quiver q(3, {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 0}});
  std::vector<Relation> rels{Relation{{RelationTerm{1, {0, 1}}}}, Relation{{RelationTerm{1, {1, 2}}}},
                             Relation{{RelationTerm{1, {2, 0}}}}};
  return Algebra::build(q, rels, f, 4, "nakayama3");
}

// Linear 0 -> 1 -> 2 with ba = 0.
inline AlgebraPtr a3_rad2(Field f = gf2()) {
  Quiver q(3, {{"a", 0, 1}, {"b", 1, 2}});
  return Algebra::build(q, {Relation{{RelationTerm{1, {0, 1}}}}}, f, 4, "a3_rad2");
}

// Commutative square 0 -> 1 -> 3, 0 -> 2 -> 3 with a b = c d (over any field).
inline AlgebraPtr commutative_square(Field f = gf2()) {
  Quiver q(4, {{"a", 0, 1}, {"b", 1, 3}, {"c", 0, 2}, {"d", 2, 3}});
  return Algebra::build(q, {Relation{{RelationTerm{1, {0, 1}}, RelationTerm{-1, {2, 3}}}}}, f, 4, "square");
}

inline std::vector<AlgebraPtr> all_gf2() {
  return {field_k(), a2(), dual_numbers(), nakayama3(), a3_rad2()};
}

}  // namespace fixtures
