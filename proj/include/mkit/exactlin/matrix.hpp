#ifndef MKIT_EXACTLIN_MATRIX_HPP
#define MKIT_EXACTLIN_MATRIX_HPP

#include "field.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mkit::exactlin {

using Vector = std::vector<Scalar>;

inline Vector zero_vector(FieldSpec f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

inline Vector unit_vector(FieldSpec f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

inline bool is_zero(std::span<const Scalar> v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

inline Vector add(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Vector r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Vector sub(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Vector r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline Vector scale(const Scalar& c, std::span<const Scalar> v) {
  Vector r(v.begin(), v.end());
  for (auto& s : r) s *= c;
  return r;
}

inline Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  if (a.empty()) return Scalar{};
  Scalar acc = Scalar::zero(a[0].field());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) acc.add_product(a[i], b[i]);
  return acc;
}

/// e_j (x) e_k  ->  j * dim_right + k. Every module uses this "left-major" order.
constexpr std::size_t pair_index(std::size_t j, std::size_t k, std::size_t dim_right) { return j * dim_right + k; }

inline constexpr const char* kTensorConvention = "left-major";

/// Tensor product of two coordinate vectors in left-major order.
inline Vector tensor(std::span<const Scalar> a, std::span<const Scalar> b) {
  Vector r;
  r.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) r.push_back(x * y);
  return r;
}

/// Dense row-major matrix over one field.
class Matrix {
 public:
  Matrix() = default;

  Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

  Matrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
      : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) throw DimensionError("matrix entry count does not match shape");
    for (const auto& e : entries_)
      if (e.field() != field) throw FieldMismatch("matrix entry over " + e.field().name() + " in matrix over " + field.name());
  }

  /// Builds a matrix from integer rows; convenient in tests and generators.
  static Matrix from_rows(FieldSpec field, const std::vector<std::vector<long>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw DimensionError("ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(field, rows[i][j]);
    }
    return m;
  }

  static Matrix identity(FieldSpec field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
  }

  /// The matrix whose columns are the given vectors.
  static Matrix from_columns(FieldSpec field, std::size_t rows, const std::vector<Vector>& columns) {
    Matrix m(field, rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw DimensionError("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  static Matrix from_row_vectors(FieldSpec field, std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionError("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  FieldSpec field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Scalar>& entries() const { return entries_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Scalar> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
  Vector row_vector(std::size_t i) const { return Vector(row(i).begin(), row(i).end()); }

  Vector column(std::size_t j) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  bool is_zero() const { return exactlin::is_zero(entries_); }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vector operator*(std::span<const Scalar> v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
    Vector r = zero_vector(field_, rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (v[j].is_zero()) continue;
      check_field(v[j].field());
      for (std::size_t i = 0; i < rows_; ++i) {
        const Scalar& a = (*this)(i, j);
        if (!a.is_zero()) r[i].add_product(a, v[j]);
      }
    }
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.field_ != b.field_) throw FieldMismatch("matrix product over different fields");
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Scalar& y = b(k, j);
          if (!y.is_zero()) r(i, j).add_product(x, y);
        }
      }
    return r;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) a.entries_[i] += b.entries_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) a.entries_[i] -= b.entries_[i];
    return a;
  }

  friend Matrix operator*(const Scalar& c, Matrix m) {
    for (auto& e : m.entries_) e *= c;
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  void check_field(FieldSpec f) const {
    if (f != field_) throw FieldMismatch("vector over " + f.name() + " applied to matrix over " + field_.name());
  }

  void check_same_shape(const Matrix& b) const {
    if (field_ != b.field_) throw FieldMismatch("matrix sum over different fields");
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionError("matrix sum shape mismatch");
  }

  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

/// Kronecker product, left index major: (a (x) b)(i*br + k, j*bc + l) = a(i,j) b(k,l).
inline Matrix kron(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw FieldMismatch("kron over different fields");
  Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return r;
}

/// The flip e_a (x) e_b -> e_b (x) e_a on V (x) W, as a map into W (x) V.
inline Matrix flip(FieldSpec f, std::size_t dim_v, std::size_t dim_w) {
  Matrix m(f, dim_v * dim_w, dim_v * dim_w);
  for (std::size_t a = 0; a < dim_v; ++a)
    for (std::size_t b = 0; b < dim_w; ++b) m(pair_index(b, a, dim_v), pair_index(a, b, dim_w)) = Scalar::one(f);
  return m;
}

/// Dense order-3 array indexed [i][j][k], flat index (i*d1 + j)*d2 + k.
class Tensor3 {
 public:
  Tensor3() = default;

  Tensor3(FieldSpec field, std::size_t d0, std::size_t d1, std::size_t d2)
      : field_(field), d0_(d0), d1_(d1), d2_(d2), entries_(d0 * d1 * d2, Scalar::zero(field)) {}

  Tensor3(FieldSpec field, std::size_t d0, std::size_t d1, std::size_t d2, std::vector<Scalar> entries)
      : field_(field), d0_(d0), d1_(d1), d2_(d2), entries_(std::move(entries)) {
    if (entries_.size() != d0 * d1 * d2) throw DimensionError("tensor entry count does not match shape");
    for (const auto& e : entries_)
      if (e.field() != field) throw FieldMismatch("tensor entry over a different field");
  }

  FieldSpec field() const { return field_; }
  std::size_t d0() const { return d0_; }
  std::size_t d1() const { return d1_; }
  std::size_t d2() const { return d2_; }
  const std::vector<Scalar>& entries() const { return entries_; }
  std::vector<Scalar>& entries() { return entries_; }

  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return entries_[(i * d1_ + j) * d2_ + k]; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return entries_[(i * d1_ + j) * d2_ + k];
  }

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  FieldSpec field_;
  std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
  std::vector<Scalar> entries_;
};

}  // namespace mkit::exactlin

#endif  // MKIT_EXACTLIN_MATRIX_HPP
