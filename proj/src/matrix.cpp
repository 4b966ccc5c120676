#include "findim/matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "findim/detail/field_ops.hpp"

namespace findim {

namespace {

using detail::ModP;
using detail::RatOps;
using detail::visit_field;

// Below this many scalar updates per elimination sweep the OpenMP region costs
// more than it saves.
constexpr std::size_t kParallelWork = std::size_t(1) << 15;

template <class Ops>
using Value = typename Ops::value_type;

// In-place RREF over the first `col_limit` columns of a rows x cols array.
template <class Ops>
std::vector<std::size_t> rref_kernel(const Ops& ops, std::span<Value<Ops>> a, std::size_t rows,
                                     std::size_t cols, std::size_t col_limit, bool parallel) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < col_limit && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && ops.is_zero(a[piv * cols + c])) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a[piv * cols + k], a[r * cols + k]);
    auto inv = ops.inv(a[r * cols + c]);
    for (std::size_t k = c; k < cols; ++k) a[r * cols + k] = ops.mul(a[r * cols + k], inv);

    const bool go_parallel = parallel && rows * (cols - c) >= kParallelWork;
    const auto rows_i = static_cast<std::int64_t>(rows);
#pragma omp parallel for schedule(static) if (go_parallel)
    for (std::int64_t i = 0; i < rows_i; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      if (ui == r) continue;
      auto f = a[ui * cols + c];
      if (ops.is_zero(f)) continue;
      for (std::size_t k = c; k < cols; ++k)
        a[ui * cols + k] = ops.sub(a[ui * cols + k], ops.mul(f, a[r * cols + k]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class Ops>
void multiply_kernel(const Ops& ops, std::span<const Value<Ops>> a, std::span<const Value<Ops>> b,
                     std::span<Value<Ops>> out, std::size_t n, std::size_t m, std::size_t p,
                     bool parallel) {
  const bool go_parallel = parallel && n * m * p >= kParallelWork;
  const auto n_i = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) if (go_parallel)
  for (std::int64_t ii = 0; ii < n_i; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t k = 0; k < m; ++k) {
      const auto& aik = a[i * m + k];
      if (ops.is_zero(aik)) continue;
      for (std::size_t j = 0; j < p; ++j)
        out[i * p + j] = ops.add(out[i * p + j], ops.mul(aik, b[k * p + j]));
    }
  }
}

RrefResult rref_impl(const Matrix& m, bool parallel) {
  Matrix out = m;
  auto pivots = visit_field(m.field(), [&](auto ops) {
    using T = Value<decltype(ops)>;
    return rref_kernel(ops, out.data<T>(), out.rows(), out.cols(), out.cols(), parallel);
  });
  return {std::move(out), std::move(pivots)};
}

Matrix multiply_impl(const Matrix& a, const Matrix& b, bool parallel) {
  if (!(a.field() == b.field())) throw std::invalid_argument("matrix product across fields");
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product shape mismatch: " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
  Matrix out(a.field(), a.rows(), b.cols());
  visit_field(a.field(), [&](auto ops) {
    using T = Value<decltype(ops)>;
    multiply_kernel(ops, a.data<T>(), b.data<T>(), out.data<T>(), a.rows(), a.cols(), b.cols(),
                    parallel);
  });
  return out;
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field_.is_prime()) mod_.assign(rows * cols, 0);
  else rat_.assign(rows * cols, Rational(0));
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(Field field, std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<std::vector<Rational>> data;
  for (const auto& row : rows) {
    data.emplace_back();
    for (long long x : row) data.back().emplace_back(x);
  }
  return from_rows(field, data);
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<Rational>>& rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr == 0 ? 0 : rows.front().size();
  Matrix m(field, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < nc; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_column(Field field, const std::vector<Rational>& entries) {
  Matrix m(field, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
  return m;
}

Matrix Matrix::random(Field field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m(field, rows, cols);
  if (field.is_prime()) {
    for (auto& x : m.mod_) x = std::uint32_t(rng() % field.characteristic());
  } else {
    for (auto& x : m.rat_) x = Rational(static_cast<long long>(rng() % 7) - 3);
  }
  return m;
}

Rational Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  return field_.is_prime() ? Rational(mod_[r * cols_ + c]) : rat_[r * cols_ + c];
}

void Matrix::set(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  if (field_.is_prime()) mod_[r * cols_ + c] = reduce_mod(value, field_.characteristic());
  else rat_[r * cols_ + c] = value;
}

bool Matrix::is_zero() const {
  if (field_.is_prime()) {
    for (auto x : mod_)
      if (x != 0) return false;
    return true;
  }
  for (const auto& x : rat_)
    if (x != 0) return false;
  return true;
}

bool Matrix::operator==(const Matrix& other) const {
  return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ &&
         mod_ == other.mod_ && rat_ == other.rat_;
}

void Matrix::require_same_shape(const Matrix& other, const char* op) const {
  if (!(field_ == other.field_) || rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument(std::string("matrix ") + op + " shape mismatch");
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  visit_field(field_, [&](auto ops) {
    using T = Value<decltype(ops)>;
    auto src = data<T>();
    auto dst = out.data<T>();
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) dst[j * rows_ + i] = src[i * cols_ + j];
  });
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const { return multiply_impl(*this, rhs, true); }

Matrix Matrix::operator+(const Matrix& rhs) const {
  require_same_shape(rhs, "sum");
  Matrix out = *this;
  out.add_block(0, 0, rhs);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const { return *this + (-rhs); }

Matrix Matrix::operator-() const {
  Matrix out = *this;
  visit_field(field_, [&](auto ops) {
    using T = Value<decltype(ops)>;
    for (auto& x : out.data<T>()) x = ops.neg(x);
  });
  return out;
}

Matrix Matrix::scaled(const Rational& s) const {
  Matrix out = *this;
  visit_field(field_, [&](auto ops) {
    using T = Value<decltype(ops)>;
    const T f = ops.from(s);
    for (auto& x : out.data<T>()) x = ops.mul(x, f);
  });
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("matrix block out of range");
  Matrix out(field_, nr, nc);
  visit_field(field_, [&](auto ops) {
    using T = Value<decltype(ops)>;
    auto src = data<T>();
    auto dst = out.data<T>();
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) dst[i * nc + j] = src[(r0 + i) * cols_ + c0 + j];
  });
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (!(m.field_ == field_)) throw std::invalid_argument("set_block across fields");
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw std::out_of_range("matrix block out of range");
  visit_field(field_, [&](auto ops) {
    using T = Value<decltype(ops)>;
    auto src = m.data<T>();
    auto dst = data<T>();
    for (std::size_t i = 0; i < m.rows_; ++i)
      for (std::size_t j = 0; j < m.cols_; ++j) dst[(r0 + i) * cols_ + c0 + j] = src[i * m.cols_ + j];
  });
}

void Matrix::add_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (!(m.field_ == field_)) throw std::invalid_argument("add_block across fields");
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw std::out_of_range("matrix block out of range");
  visit_field(field_, [&](auto ops) {
    using T = Value<decltype(ops)>;
    auto src = m.data<T>();
    auto dst = data<T>();
    for (std::size_t i = 0; i < m.rows_; ++i)
      for (std::size_t j = 0; j < m.cols_; ++j) {
        auto& d = dst[(r0 + i) * cols_ + c0 + j];
        d = ops.add(d, src[i * m.cols_ + j]);
      }
  });
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix out(field_, rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) out.set_block(0, j, column(cols[j]));
  return out;
}

Matrix Matrix::reshaped(std::size_t rows, std::size_t cols) const {
  if (rows * cols != size()) throw std::invalid_argument("reshape changes the entry count");
  Matrix out = *this;
  out.rows_ = rows;
  out.cols_ = cols;
  return out;
}

Matrix Matrix::hstack(const Field& field, std::size_t rows, std::span<const Matrix> parts) {
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw std::invalid_argument("hstack row mismatch");
    cols += p.cols();
  }
  Matrix out(field, rows, cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    out.set_block(0, c, p);
    c += p.cols();
  }
  return out;
}

Matrix Matrix::vstack(const Field& field, std::size_t cols, std::span<const Matrix> parts) {
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw std::invalid_argument("vstack column mismatch");
    rows += p.rows();
  }
  Matrix out(field, rows, cols);
  std::size_t r = 0;
  for (const auto& p : parts) {
    out.set_block(r, 0, p);
    r += p.rows();
  }
  return out;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  if (!(a.field_ == b.field_)) throw std::invalid_argument("kron across fields");
  Matrix out(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
  visit_field(a.field_, [&](auto ops) {
    using T = Value<decltype(ops)>;
    auto da = a.data<T>();
    auto db = b.data<T>();
    auto dst = out.data<T>();
    const std::size_t oc = out.cols_;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) {
        const auto& x = da[i * a.cols_ + j];
        if (ops.is_zero(x)) continue;
        for (std::size_t k = 0; k < b.rows_; ++k)
          for (std::size_t l = 0; l < b.cols_; ++l)
            dst[(i * b.rows_ + k) * oc + j * b.cols_ + l] = ops.mul(x, db[k * b.cols_ + l]);
      }
  });
  return out;
}

Matrix Matrix::direct_sum(const Matrix& a, const Matrix& b) {
  if (!(a.field_ == b.field_)) throw std::invalid_argument("direct_sum across fields");
  Matrix out(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  out.set_block(0, 0, a);
  out.set_block(a.rows_, a.cols_, b);
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

RrefResult rref(const Matrix& m) { return rref_impl(m, true); }

std::size_t rank(const Matrix& m) {
  if (m.size() == 0) return 0;
  return rref(m).pivots.size();
}

Matrix kernel_basis(const Matrix& a) {
  auto [r, pivots] = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix k(a.field(), n, free_cols.size());
  visit_field(a.field(), [&](auto ops) {
    using T = Value<decltype(ops)>;
    auto rd = r.template data<T>();
    auto kd = k.template data<T>();
    const std::size_t kc = free_cols.size();
    for (std::size_t f = 0; f < kc; ++f) {
      kd[free_cols[f] * kc + f] = ops.one();
      for (std::size_t i = 0; i < pivots.size(); ++i)
        kd[pivots[i] * kc + f] = ops.neg(rd[i * n + free_cols[f]]);
    }
  });
  return k;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("solve: rows(a) = " + std::to_string(a.rows()) +
                                " but length(b) = " + std::to_string(b.rows()));
  if (!(a.field() == b.field())) throw std::invalid_argument("solve across fields");
  const std::size_t n = a.cols(), nb = b.cols(), rows = a.rows(), w = n + nb;
  Matrix aug(a.field(), rows, w);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, b);
  return visit_field(a.field(), [&](auto ops) -> std::optional<Matrix> {
    using T = Value<decltype(ops)>;
    auto d = aug.template data<T>();
    auto pivots = rref_kernel(ops, d, rows, w, n, true);
    for (std::size_t i = pivots.size(); i < rows; ++i)
      for (std::size_t j = n; j < w; ++j)
        if (!ops.is_zero(d[i * w + j])) return std::nullopt;
    Matrix x(a.field(), n, nb);
    auto xd = x.template data<T>();
    for (std::size_t i = 0; i < pivots.size(); ++i)
      for (std::size_t j = 0; j < nb; ++j) xd[pivots[i] * nb + j] = d[i * w + n + j];
    return x;
  });
}

Matrix image_basis(const Matrix& a) {
  auto pivots = rref(a).pivots;
  return a.select_columns(pivots);
}

Matrix complement_basis(const Matrix& sub) {
  const std::size_t n = sub.rows();
  // Pivot columns of [sub | I] beyond sub's own columns pick the completing e_j.
  Matrix aug = Matrix::hstack(sub.field(), n, std::vector<Matrix>{sub, Matrix::identity(sub.field(), n)});
  std::vector<std::size_t> picked;
  for (auto p : rref(aug).pivots)
    if (p >= sub.cols()) picked.push_back(p - sub.cols());
  Matrix out(sub.field(), n, picked.size());
  for (std::size_t j = 0; j < picked.size(); ++j) out.set(picked[j], j, 1);
  return out;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  auto x = solve(a, Matrix::identity(a.field(), a.rows()));
  if (!x || rank(a) != a.rows()) return std::nullopt;
  return x;
}

namespace reference {

RrefResult rref(const Matrix& m) { return rref_impl(m, false); }

Matrix multiply(const Matrix& a, const Matrix& b) { return multiply_impl(a, b, false); }

}  // namespace reference

}  // namespace findim
