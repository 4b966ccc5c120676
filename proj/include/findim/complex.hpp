#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "findim/module.hpp"

namespace findim {

struct ComplexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bounded cochain complex, d^n : X^n -> X^{n+1}. Zero terms at either end
// are trimmed, so lo()/hi() bound the nonzero support; the zero complex has
// no terms.
class Complex {
 public:
  // terms[i] sits in degree lo + i; diffs[i] : terms[i] -> terms[i+1].
  // Checks shapes, that each differential is a homomorphism and d.d = 0.
  Complex(AlgebraPtr algebra, int lo, std::vector<Module> terms, std::vector<ModuleMap> diffs);
  static Complex zero(AlgebraPtr algebra);
  static Complex stalk(const Module& m, int degree);
  // Skips the homomorphism and d.d = 0 checks.
  static Complex trusted(AlgebraPtr algebra, int lo, std::vector<Module> terms,
                         std::vector<ModuleMap> diffs);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return lo_ + static_cast<int>(terms_.size()) - 1; }
  Module term(int n) const;
  // Zero map outside the support.
  ModuleMap d(int n) const;
  bool is_perfect() const;
  std::size_t total_dim() const;

  bool operator==(const Complex& other) const;

 private:
  Complex(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}
  void trim();

  AlgebraPtr algebra_;
  int lo_ = 0;
  std::vector<Module> terms_;
  std::vector<ModuleMap> diffs_;
};

// Per-degree module maps; absent degrees are zero.
class ChainMap {
 public:
  ChainMap(Complex source, Complex target, std::map<int, ModuleMap> components);
  static ChainMap zero(Complex source, Complex target);
  static ChainMap identity(Complex x);

  const Complex& source() const noexcept { return source_; }
  const Complex& target() const noexcept { return target_; }
  ModuleMap at(int n) const;
  // Degrees where both source and target are nonzero.
  std::vector<int> degrees() const;

  bool is_chain_map() const;
  bool is_zero() const;
  ChainMap operator+(const ChainMap& other) const;
  ChainMap operator-(const ChainMap& other) const;
  ChainMap scaled(const Rational& s) const;
  bool operator==(const ChainMap& other) const;

 private:
  Complex source_;
  Complex target_;
  std::map<int, ModuleMap> components_;
};

// h^n : X^n -> Y^{n-1}.
struct Homotopy {
  Complex source;
  Complex target;
  std::map<int, ModuleMap> components;

  ModuleMap at(int n) const;
};

// Checks f - g = d h + h d in every degree.
bool is_homotopy(const Homotopy& h, const ChainMap& f, const ChainMap& g);

ChainMap compose(const ChainMap& g, const ChainMap& f);

// (S^k X)^n = X^{n+k}, differential (-1)^k d. Maps shift without sign.
Complex shift(const Complex& x, int k);
ChainMap shift(const ChainMap& f, int k);

struct Triangle {
  Complex cone;
  ChainMap to_cone;     // Y -> cone(f)
  ChainMap from_cone;   // cone(f) -> S X
};
// cone^n = Y^n (+) X^{n+1}, differential [[d_Y, f], [0, -d_X]].
Triangle cone(const ChainMap& f);

enum class Keep { AtMost, AtLeast };
// Stupid truncation: degrees <= k (AtMost) or >= k (AtLeast) are kept.
Complex stupid_truncate(const Complex& x, Keep mode, int k);
// The canonical chain map from x onto its AtMost truncation, or from the
// AtLeast truncation into x.
ChainMap truncation_map(const Complex& x, Keep mode, int k);

Complex direct_sum(const Complex& a, const Complex& b);
Complex direct_sum(const std::vector<Complex>& xs, const AlgebraPtr& algebra);
ChainMap direct_sum(const ChainMap& f, const ChainMap& g);
// [f g] : A (+) B -> C and [f; g] : A -> B (+) C.
ChainMap hjoin(const ChainMap& f, const ChainMap& g);
ChainMap vjoin(const ChainMap& f, const ChainMap& g);

struct CohomologyData {
  Submodule cycles;  // Z^n inside X^n
  Quotient quotient; // H^n = Z^n / B^n
};
CohomologyData cohomology_data(const Complex& x, int n);
Module cohomology(const Complex& x, int n);
// Per-vertex dims of H^n computed from ranks only.
std::vector<std::size_t> cohomology_dims(const Complex& x, int n);
bool is_acyclic(const Complex& x);
// H^n(f) : H^n(X) -> H^n(Y).
ModuleMap induced_on_cohomology(const ChainMap& f, int n);
bool induces_zero_on_cohomology(const ChainMap& f);
bool is_quasi_isomorphism(const ChainMap& f);

// Hom complex: degree n is (+)_k Hom_A(X^k, Y^{k+n}), each summand with a
// hom_space basis, differential delta(g) = d_Y g - (-1)^n g d_X.
class HomComplex {
 public:
  // Builds degrees [from, to]; the differentials delta^n for n in [from, to).
  HomComplex(Complex x, Complex y, int from, int to);

  const Complex& x() const noexcept { return x_; }
  const Complex& y() const noexcept { return y_; }
  int from() const noexcept { return from_; }
  int to() const noexcept { return to_; }
  std::size_t dim(int n) const;
  // delta^n : degree n -> degree n+1 as a dim(n+1) x dim(n) matrix.
  const Matrix& delta(int n) const;
  std::size_t cohomology_dim(int n) const;

  // Coordinates of the degree-n element with components g^k : X^k -> Y^{k+n}.
  Matrix coordinates(int n, const std::map<int, ModuleMap>& components) const;
  std::map<int, ModuleMap> element(int n, const Matrix& coords) const;

 private:
  struct Summand {
    int k;
    std::vector<ModuleMap> basis;
    Matrix flat;  // flattened basis maps as columns
    std::size_t offset;
  };
  struct Degree {
    std::vector<Summand> summands;
    std::size_t dim = 0;
  };
  const Degree& degree(int n) const;
  Matrix apply_delta(int n, const std::map<int, ModuleMap>& g) const;

  Complex x_, y_;
  int from_, to_;
  std::vector<Degree> degrees_;
  std::vector<Matrix> deltas_;
};

// The full Hom complex over the window where it can be nonzero; x must be perfect.
HomComplex hom_complex(const Complex& x, const Complex& y);
// {n : H^n(Hom(x, y)) != 0} with dims; x must be perfect.
std::map<int, std::size_t> hom_cohomology(const Complex& x, const Complex& y);

// Some h with f = d h + h d, or nullopt.
std::optional<Homotopy> null_homotopy(const ChainMap& f);
// Basis of the chain maps x -> y.
std::vector<ChainMap> chain_map_space(const Complex& x, const Complex& y);

}  // namespace findim
