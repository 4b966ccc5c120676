#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "findim/algebra.hpp"
#include "findim/matrix.hpp"

namespace findim {

struct ModuleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite-dimensional representation: one vector space per vertex, one
// matrix (dims[target] x dims[source]) per arrow. Cheap to copy; the data is
// shared and immutable.
class Module {
 public:
  // Validates shapes and that every relation acts as zero.
  Module(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> arrows);
  static Module zero(AlgebraPtr algebra);
  // Skips the relation check; for modules derived from valid ones.
  static Module trusted(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> arrows);

  const AlgebraPtr& algebra() const noexcept { return rep_->algebra; }
  const Field& field() const noexcept { return rep_->algebra->field(); }
  const std::vector<std::size_t>& dims() const noexcept { return rep_->dims; }
  std::size_t dim(std::size_t vertex) const { return rep_->dims.at(vertex); }
  std::size_t total_dim() const noexcept;
  bool is_zero() const noexcept { return total_dim() == 0; }
  const Matrix& arrow(std::size_t index) const { return rep_->arrows.at(index); }
  const std::vector<Matrix>& arrows() const noexcept { return rep_->arrows; }

  // Action of a path: product of its arrow matrices, first arrow rightmost.
  Matrix path_action(const Path& path) const;
  bool satisfies_relations() const;

  // Same algebra, dims and arrow matrices (not isomorphism).
  bool operator==(const Module& other) const;

 private:
  struct Rep {
    AlgebraPtr algebra;
    std::vector<std::size_t> dims;
    std::vector<Matrix> arrows;
  };
  Module(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

bool same_algebra(const Module& a, const Module& b);

// A homomorphism given by one matrix per vertex (target.dim(v) x source.dim(v)).
class ModuleMap {
 public:
  ModuleMap(Module source, Module target, std::vector<Matrix> components);
  static ModuleMap zero(Module source, Module target);
  static ModuleMap identity(Module m);

  const Module& source() const noexcept { return source_; }
  const Module& target() const noexcept { return target_; }
  const Matrix& at(std::size_t vertex) const { return components_.at(vertex); }
  const std::vector<Matrix>& components() const noexcept { return components_; }

  bool is_zero() const;
  // Commutes with every arrow.
  bool is_homomorphism() const;
  bool is_isomorphism() const;
  // All vertex blocks concatenated row-major into one column.
  Matrix flatten() const;
  static ModuleMap unflatten(const Module& source, const Module& target, const Matrix& column);

  ModuleMap operator+(const ModuleMap& other) const;
  ModuleMap operator-() const;
  ModuleMap scaled(const Rational& s) const;
  bool operator==(const ModuleMap& other) const;

 private:
  Module source_;
  Module target_;
  std::vector<Matrix> components_;
};

// g after f.
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);

Module projective(const AlgebraPtr& a, std::size_t vertex);
Module simple(const AlgebraPtr& a, std::size_t vertex);
// (+)_i P_i^{mult[i]}, vertex by vertex, copies adjacent.
Module projective_sum(const AlgebraPtr& a, const std::vector<std::size_t>& multiplicities);
// Vector-space dual over the opposite algebra: same dims, transposed arrows.
Module dual_module(const Module& m, const AlgebraPtr& opposite);

Module direct_sum(const Module& a, const Module& b);
Module direct_sum(const std::vector<Module>& parts, const AlgebraPtr& algebra);
ModuleMap direct_sum(const ModuleMap& f, const ModuleMap& g);
// [f g] : A (+) B -> C and [f; g] : A -> B (+) C.
ModuleMap hjoin(const ModuleMap& f, const ModuleMap& g);
ModuleMap vjoin(const ModuleMap& f, const ModuleMap& g);
// Canonical inclusions a -> a (+) b, b -> a (+) b and the projections back.
ModuleMap inclusion_into_sum(const Module& a, const Module& b, bool second);
ModuleMap projection_from_sum(const Module& a, const Module& b, bool second);

// Basis of Hom_A(m, n) from the commutation system; throws on algebra mismatch.
std::vector<ModuleMap> hom_space(const Module& m, const Module& n);
std::size_t hom_dim(const Module& m, const Module& n);

struct Submodule {
  Module module;
  ModuleMap inclusion;
};
struct Quotient {
  Module module;
  ModuleMap projection;
  // Per vertex, the columns of the ambient space whose images form the quotient basis.
  std::vector<Matrix> section;
};

// Per-vertex column bases (independent) of an arrow-stable subspace.
Submodule submodule(const Module& m, std::vector<Matrix> bases);
Quotient quotient(const Module& m, const std::vector<Matrix>& sub_bases);
Submodule kernel(const ModuleMap& f);
// Per-vertex image bases.
std::vector<Matrix> image_bases(const ModuleMap& f);
// Per-vertex bases of rad m = sum of the images of the arrows.
std::vector<Matrix> radical_bases(const Module& m);
Quotient top(const Module& m);

struct Generator {
  std::size_t vertex;
  Matrix vector;  // column in m.dim(vertex)
};
// The map (+) P_{g.vertex} -> m sending each e_{g.vertex} to g.vector.
// The generators must be sorted by vertex.
ModuleMap map_from_generators(const Module& m, const std::vector<Generator>& gens);

struct ProjectiveCover {
  std::vector<std::size_t> multiplicities;
  ModuleMap cover;  // surjection projective_sum(multiplicities) -> m
};
// Covers the top; throws ModuleError for the zero module.
ProjectiveCover projective_cover(const Module& m);
Submodule syzygy(const Module& m);
std::vector<std::size_t> top_dims(const Module& m);
bool is_projective(const Module& m);

// Isomorphism search over GF(p): enumerates Hom(x, y) when it has at most
// `max_candidates` elements. nullopt means "not found", which is a proof of
// non-isomorphism only when `*exhaustive` is set.
std::optional<ModuleMap> find_isomorphism(const Module& x, const Module& y,
                                          std::size_t max_candidates = 4096,
                                          bool* exhaustive = nullptr);

}  // namespace findim
