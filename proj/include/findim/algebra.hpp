#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "findim/field.hpp"
#include "findim/matrix.hpp"

namespace findim {

struct Arrow {
  std::string id;
  std::size_t source = 0;
  std::size_t target = 0;
};

class Quiver {
 public:
  Quiver(std::size_t vertex_count, std::vector<Arrow> arrows);

  std::size_t vertex_count() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Arrow& arrow(std::size_t index) const { return arrows_.at(index); }
  std::size_t arrow_index(std::string_view id) const;
  Quiver opposite() const;

 private:
  std::size_t vertices_;
  std::vector<Arrow> arrows_;
};

// A path in traversal order: arrows.front() leaves `source`, arrows.back()
// enters `target`. The trivial path at i has no arrows and source = target = i.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const noexcept { return arrows.size(); }
  auto operator<=>(const Path&) const = default;
};

struct RelationTerm {
  Rational coeff;
  std::vector<std::size_t> arrows;  // arrow indices in traversal order
};

// A linear combination of parallel paths of length >= 2.
struct Relation {
  std::vector<RelationTerm> terms;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A = kQ/I for an admissible ideal I.
//
// Module convention (used everywhere): a left A-module is a representation
// with a linear map M_i -> M_j for each arrow a: i -> j. A path acts by the
// product of its arrow matrices, first arrow rightmost. The projective
// P_i = A e_i has basis at j the path classes i -> j, arrows acting by
// appending.
class Algebra {
 public:
  // Computes the path-class basis. Throws AlgebraError for non-admissible
  // relations or when no nilpotency length <= max_len exists.
  static AlgebraPtr build(Quiver quiver, std::vector<Relation> relations, Field field,
                          std::size_t max_len, std::string name = {});

  const Quiver& quiver() const noexcept { return quiver_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  const Field& field() const noexcept { return field_; }
  const std::string& name() const noexcept { return name_; }
  std::size_t max_len() const noexcept { return max_len_; }
  std::size_t vertex_count() const noexcept { return quiver_.vertex_count(); }
  std::size_t arrow_count() const noexcept { return quiver_.arrows().size(); }
  // Least L with every path of length >= L in I.
  std::size_t loewy_length() const noexcept { return loewy_; }
  std::size_t dim() const noexcept { return basis_.size(); }

  // Ordered by (source, target, length, arrows).
  const std::vector<Path>& basis() const noexcept { return basis_; }
  // Indices into basis() of the classes of paths i -> j, in basis order.
  const std::vector<std::size_t>& basis_between(std::size_t i, std::size_t j) const;

  // Coordinates (dim x 1) of the class of `path`.
  Matrix reduce(const Path& path) const;
  // Coordinates of basis[i] * basis[j] (traverse basis[i] first).
  Matrix product(std::size_t i, std::size_t j) const;

  // dims_of_projective(i)[j] = dim e_j A e_i side: number of classes i -> j.
  std::vector<std::size_t> projective_dims(std::size_t i) const;
  // Arrow matrices of P_i, one per arrow.
  const std::vector<Matrix>& projective_arrows(std::size_t i) const { return proj_arrows_.at(i); }

  // Quiver reversed, relation paths reversed.
  AlgebraPtr opposite() const;
  bool same_presentation(const Algebra& other) const;

 private:
  Algebra(Quiver quiver, std::vector<Relation> relations, Field field, std::size_t max_len,
          std::string name);
  void compute_basis();

  Quiver quiver_;
  std::vector<Relation> relations_;
  Field field_;
  std::size_t max_len_;
  std::string name_;
  std::size_t loewy_ = 0;
  std::vector<Path> basis_;
  std::vector<std::vector<std::vector<std::size_t>>> between_;
  // Sparse normal forms of every path shorter than loewy_.
  std::map<Path, std::vector<std::pair<std::size_t, Rational>>> normal_form_;
  std::vector<std::vector<Matrix>> proj_arrows_;
};

// All paths of exactly `length` arrows, in (source, arrows) lexicographic order.
std::vector<Path> paths_of_length(const Quiver& q, std::size_t length);

}  // namespace findim
