#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "findim/field.hpp"

namespace findim {

// Dense row-major matrix over a Field. 0 x n and n x 0 shapes are legal and
// stand for maps to or from the zero space.
//
// GF(p) entries are stored as residues, rational entries as cpp_rational; the
// public accessors always speak Rational so callers never see the split.
class Matrix {
 public:
  Matrix() : Matrix(Field::rationals(), 0, 0) {}
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_rows(Field field, std::initializer_list<std::initializer_list<long long>> rows);
  static Matrix from_rows(Field field, const std::vector<std::vector<Rational>>& rows);
  // Column vector.
  static Matrix from_column(Field field, const std::vector<Rational>& entries);
  // Uniform over GF(p); small integers in [-3, 3] over Q.
  static Matrix random(Field field, std::size_t rows, std::size_t cols, std::mt19937_64& rng);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return rows_ * cols_; }

  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& value);

  bool is_zero() const;
  bool operator==(const Matrix& other) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator-() const;
  Matrix scaled(const Rational& s) const;

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  void add_block(std::size_t r0, std::size_t c0, const Matrix& m);
  Matrix column(std::size_t c) const { return block(0, c, rows_, 1); }
  Matrix select_columns(std::span<const std::size_t> cols) const;
  // Row-major reinterpretation; rows*cols must be preserved.
  Matrix reshaped(std::size_t rows, std::size_t cols) const;

  static Matrix hstack(const Field& field, std::size_t rows, std::span<const Matrix> parts);
  static Matrix vstack(const Field& field, std::size_t cols, std::span<const Matrix> parts);
  static Matrix kron(const Matrix& a, const Matrix& b);
  static Matrix direct_sum(const Matrix& a, const Matrix& b);

  std::string to_string() const;

  // Raw storage for the typed kernels (uint32 residues or Rational).
  template <class T>
  std::span<T> data() {
    if constexpr (std::is_same_v<T, std::uint32_t>) return mod_;
    else return rat_;
  }
  template <class T>
  std::span<const T> data() const {
    if constexpr (std::is_same_v<T, std::uint32_t>) return mod_;
    else return rat_;
  }

 private:
  void require_same_shape(const Matrix& other, const char* op) const;

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> mod_;
  std::vector<Rational> rat_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

// Reduced row-echelon form. Pivots are chosen as the first nonzero entry in
// row order, never by magnitude.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// Columns form a basis of the null space, one per free column in increasing order.
Matrix kernel_basis(const Matrix& a);
// Some x with a*x = b (b may have several columns), free variables pinned to
// zero; nullopt when inconsistent. Throws std::invalid_argument on shape mismatch.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
// The pivot columns of a: a basis of its column space drawn from its own columns.
Matrix image_basis(const Matrix& a);
// Standard basis vectors e_j (j increasing) completing the column span of
// `sub` to the ambient space of dimension sub.rows().
Matrix complement_basis(const Matrix& sub);
std::optional<Matrix> inverse(const Matrix& a);

// Serial kernels kept as the reference for the OpenMP ones above.
namespace reference {
RrefResult rref(const Matrix& m);
Matrix multiply(const Matrix& a, const Matrix& b);
}  // namespace reference

}  // namespace findim
