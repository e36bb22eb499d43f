#ifndef MKIT_EXACTLIN_SYSTEM_HPP
#define MKIT_EXACTLIN_SYSTEM_HPP

#include "matrix.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace mkit::exactlin {

/// Largest number of unknowns an AffineSystem accepts.
inline constexpr std::size_t kMaxUnknowns = 4096;

/// (column, coefficient) pairs sorted by column, no zero coefficients.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

inline SparseRow sparse_from_dense(std::span<const Scalar> dense) {
  SparseRow r;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!dense[i].is_zero()) r.emplace_back(i, dense[i]);
  return r;
}

/// Sorts by column, merges duplicates, drops zeros.
inline SparseRow canonical_row(SparseRow row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow out;
  for (auto& [c, v] : row) {
    if (!out.empty() && out.back().first == c) {
      out.back().second += v;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!v.is_zero()) {
      out.emplace_back(c, std::move(v));
    }
  }
  return out;
}

/// Reduced row echelon form of a dense matrix, with its pivot columns.
inline std::pair<Matrix, std::vector<std::size_t>> rref(Matrix m) {
  const FieldSpec f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j).add_product(-factor, m(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  (void)f;
  return {std::move(m), std::move(pivots)};
}

/// A linear subspace of k^n, stored as the nonzero rows of a reduced row
/// echelon basis.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(FieldSpec f, std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix(f, 0, ambient);
    return s;
  }

  static Subspace full(FieldSpec f, std::size_t ambient) {
    return span(f, ambient, [&] {
      std::vector<Vector> vs;
      for (std::size_t i = 0; i < ambient; ++i) vs.push_back(unit_vector(f, ambient, i));
      return vs;
    }());
  }

  static Subspace span(FieldSpec f, std::size_t ambient, const std::vector<Vector>& vectors) {
    if (vectors.empty()) return zero(f, ambient);
    auto [red, pivots] = rref(Matrix::from_row_vectors(f, ambient, vectors));
    Subspace s;
    s.ambient_ = ambient;
    s.pivots_ = pivots;
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < pivots.size(); ++i) rows.push_back(red.row_vector(i));
    s.basis_ = Matrix::from_row_vectors(f, ambient, rows);
    return s;
  }

  /// Span of the columns of m.
  static Subspace column_space(const Matrix& m) {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
    return span(m.field(), m.rows(), cols);
  }

  FieldSpec field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }

  /// Residual of v after eliminating the pivot coordinates; zero iff v lies in the span.
  Vector reduce(std::span<const Scalar> v) const {
    if (v.size() != ambient_) throw DimensionError("vector length does not match subspace ambient dimension");
    Vector r(v.begin(), v.end());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const Scalar c = r[pivots_[i]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!basis_(i, j).is_zero()) r[j].add_product(-c, basis_(i, j));
    }
    return r;
  }

  bool contains(std::span<const Scalar> v) const { return is_zero(reduce(v)); }

  /// Coordinates of a member of the subspace relative to the echelon basis.
  Vector coordinates(std::span<const Scalar> v) const {
    if (!contains(v)) throw Error("vector is not in the subspace");
    Vector c;
    for (auto p : pivots_) c.push_back(v[p]);
    return c;
  }

  bool contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

inline bool membership(std::span<const Scalar> v, const Subspace& s) { return s.contains(v); }

/// Basis of {v : m v = 0}.
inline Subspace kernel(const Matrix& m) {
  auto [red, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> vs;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = unit_vector(m.field(), m.cols(), free);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red(r, free);
    vs.push_back(std::move(v));
  }
  return Subspace::span(m.field(), m.cols(), vs);
}

/// Particular solution (free variables zero) plus the homogeneous solution space.
struct AffineSolution {
  Vector particular;
  Subspace homogeneous;
};

namespace detail {

/// Incremental row echelon reduction over sparse rows. The last column is the
/// right-hand side; a pivot there means the system is inconsistent.
class EchelonReducer {
 public:
  EchelonReducer(FieldSpec f, std::size_t width) : field_(f), width_(width), pivot_of_(width, kNone) {}

  void insert(SparseRow row) {
    while (!row.empty()) {
      const std::size_t lead = row.front().first;
      const std::size_t p = pivot_of_[lead];
      if (p == kNone) {
        const Scalar inv = row.front().second.inverse();
        for (auto& e : row) e.second *= inv;
        pivot_of_[lead] = rows_.size();
        rows_.push_back(std::move(row));
        if (lead == width_ - 1) inconsistent_ = true;
        return;
      }
      row = eliminate(row, rows_[p]);
    }
  }

  bool inconsistent() const { return inconsistent_; }
  std::size_t rank() const { return rows_.size() - (inconsistent_ ? 1 : 0); }

  /// Back substitution with given values for the free columns and the rhs
  /// column scaled by rhs_scale (0 for homogeneous solutions).
  Vector back_substitute(Vector x, const Scalar& rhs_scale) const {
    const std::size_t n = width_ - 1;
    for (std::size_t c = n; c-- > 0;) {
      const std::size_t p = pivot_of_[c];
      if (p == kNone) continue;
      Scalar value = Scalar::zero(field_);
      for (std::size_t k = 1; k < rows_[p].size(); ++k) {
        const auto& [col, coef] = rows_[p][k];
        if (col == n) {
          if (!rhs_scale.is_zero()) value.add_product(coef, rhs_scale);
        } else if (!x[col].is_zero()) {
          value.add_product(-coef, x[col]);
        }
      }
      x[c] = value;
    }
    return x;
  }

  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c + 1 < width_; ++c)
      if (pivot_of_[c] == kNone) free.push_back(c);
    return free;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  static SparseRow eliminate(const SparseRow& row, const SparseRow& pivot) {
    const Scalar factor = row.front().second;
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 1, j = 1;
    while (i < row.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
        out.push_back(row[i++]);
      } else if (i == row.size() || pivot[j].first < row[i].first) {
        out.emplace_back(pivot[j].first, -(factor * pivot[j].second));
        ++j;
      } else {
        Scalar v = row[i].second;
        v.add_product(-factor, pivot[j].second);
        if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  FieldSpec field_;
  std::size_t width_;
  std::vector<std::size_t> pivot_of_;
  std::vector<SparseRow> rows_;
  bool inconsistent_ = false;
};

}  // namespace detail

/// A system of linear equations  sum_j a_ij x_j = b_i  assembled row by row.
/// Every integral, cointegral and (co)separability solver builds one of these.
class AffineSystem {
 public:
  AffineSystem() = default;

  AffineSystem(FieldSpec f, std::size_t unknowns) : field_(f), unknowns_(unknowns) {
    if (unknowns > kMaxUnknowns)
      throw DimensionError("system has " + std::to_string(unknowns) + " unknowns, limit is " +
                           std::to_string(kMaxUnknowns));
  }

  FieldSpec field() const { return field_; }
  std::size_t unknowns() const { return unknowns_; }
  std::size_t equations() const { return rows_.size(); }
  const SparseRow& row(std::size_t i) const { return rows_[i]; }
  const Scalar& rhs(std::size_t i) const { return rhs_[i]; }

  void add_equation(SparseRow coeffs, Scalar rhs) {
    coeffs = canonical_row(std::move(coeffs));
    if (!coeffs.empty() && coeffs.back().first >= unknowns_) throw DimensionError("equation references unknown out of range");
    if (coeffs.empty() && rhs.is_zero()) return;
    rows_.push_back(std::move(coeffs));
    rhs_.push_back(std::move(rhs));
  }

  void add_equation(std::span<const Scalar> dense, Scalar rhs) {
    if (dense.size() != unknowns_) throw DimensionError("equation length does not match unknown count");
    add_equation(sparse_from_dense(dense), std::move(rhs));
  }

  /// Adds the rows of  m x = b.
  void add_block(const Matrix& m, std::span<const Scalar> b) {
    if (m.cols() != unknowns_ || m.rows() != b.size()) throw DimensionError("block shape mismatch");
    for (std::size_t i = 0; i < m.rows(); ++i) add_equation(m.row(i), b[i]);
  }

  void add_homogeneous_block(const Matrix& m) { add_block(m, zero_vector(field_, m.rows())); }

  Matrix matrix() const {
    Matrix m(field_, rows_.size(), unknowns_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (const auto& [c, v] : rows_[i]) m(i, c) = v;
    return m;
  }

  Vector rhs_vector() const { return rhs_; }

  bool satisfied_by(std::span<const Scalar> x) const {
    if (x.size() != unknowns_) throw DimensionError("candidate length does not match unknown count");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Scalar acc = Scalar::zero(field_);
      for (const auto& [c, v] : rows_[i])
        if (!x[c].is_zero()) acc.add_product(v, x[c]);
      if (!(acc == rhs_[i])) return false;
    }
    return true;
  }

  /// Same as satisfied_by with every right-hand side replaced by zero.
  bool homogeneous_satisfied_by(std::span<const Scalar> x) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Scalar acc = Scalar::zero(field_);
      for (const auto& [c, v] : rows_[i])
        if (!x[c].is_zero()) acc.add_product(v, x[c]);
      if (!acc.is_zero()) return false;
    }
    return true;
  }

  std::size_t rank() const { return reduce().rank(); }

  std::optional<AffineSolution> solve() const {
    detail::EchelonReducer red = reduce();
    if (red.inconsistent()) return std::nullopt;
    AffineSolution sol;
    sol.particular = red.back_substitute(zero_vector(field_, unknowns_), Scalar::one(field_));
    std::vector<Vector> kernel_vectors;
    for (auto free : red.free_columns())
      kernel_vectors.push_back(red.back_substitute(unit_vector(field_, unknowns_, free), Scalar::zero(field_)));
    sol.homogeneous = Subspace::span(field_, unknowns_, kernel_vectors);
    return sol;
  }

  /// True iff the system has a solution.
  bool feasible() const { return !reduce().inconsistent(); }

 private:
  detail::EchelonReducer reduce() const {
    detail::EchelonReducer red(field_, unknowns_ + 1);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      SparseRow r = rows_[i];
      if (!rhs_[i].is_zero()) r.emplace_back(unknowns_, rhs_[i]);
      red.insert(std::move(r));
      if (red.inconsistent()) break;
    }
    return red;
  }

  FieldSpec field_;
  std::size_t unknowns_ = 0;
  std::vector<SparseRow> rows_;
  Vector rhs_;
};

inline std::optional<AffineSolution> solve_affine(const Matrix& m, std::span<const Scalar> b) {
  if (m.rows() != b.size()) throw DimensionError("right-hand side length does not match matrix rows");
  for (const auto& s : b)
    if (s.field() != m.field()) throw FieldMismatch("right-hand side over a different field");
  AffineSystem sys(m.field(), m.cols());
  sys.add_block(m, b);
  return sys.solve();
}

/// Builds the system  residual(x) = 0  for a map that is affine in x, by
/// evaluating it at 0 and at each unit vector.
inline AffineSystem linearize(FieldSpec f, std::size_t unknowns, const std::function<Vector(const Vector&)>& residual) {
  AffineSystem sys(f, unknowns);
  const Vector base = residual(zero_vector(f, unknowns));
  std::vector<SparseRow> rows(base.size());
  for (std::size_t j = 0; j < unknowns; ++j) {
    Vector r = residual(unit_vector(f, unknowns, j));
    if (r.size() != base.size()) throw DimensionError("residual length varies with the argument");
    for (std::size_t i = 0; i < r.size(); ++i) {
      Scalar c = r[i] - base[i];
      if (!c.is_zero()) rows[i].emplace_back(j, std::move(c));
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i) sys.add_equation(std::move(rows[i]), -base[i]);
  return sys;
}

/// Quotient of k^n by a subspace of relations, with coordinates on the
/// non-pivot columns of the relation basis.
class QuotientSpace {
 public:
  QuotientSpace() = default;

  QuotientSpace(Subspace relations) : relations_(std::move(relations)) {
    const FieldSpec f = relations_.field();
    const std::size_t n = relations_.ambient_dim();
    std::vector<long> row_of(n, -1);
    for (std::size_t r = 0; r < relations_.pivots().size(); ++r) row_of[relations_.pivots()[r]] = static_cast<long>(r);
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < n; ++c)
      if (row_of[c] < 0) free.push_back(c);
    projection_ = Matrix(f, free.size(), n);
    section_ = Matrix(f, n, free.size());
    for (std::size_t q = 0; q < free.size(); ++q) {
      projection_(q, free[q]) = Scalar::one(f);
      section_(free[q], q) = Scalar::one(f);
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (row_of[c] < 0) continue;
      for (std::size_t q = 0; q < free.size(); ++q)
        projection_(q, c) = -relations_.basis()(static_cast<std::size_t>(row_of[c]), free[q]);
    }
  }

  std::size_t ambient_dim() const { return relations_.ambient_dim(); }
  std::size_t dim() const { return projection_.rows(); }
  const Subspace& relations() const { return relations_; }
  const Matrix& projection() const { return projection_; }
  const Matrix& section() const { return section_; }

  Vector project(std::span<const Scalar> v) const { return projection_ * v; }

 private:
  Subspace relations_;
  Matrix projection_;
  Matrix section_;
};

inline QuotientSpace quotient_space(std::size_t ambient_dim, const Subspace& relations) {
  if (relations.ambient_dim() != ambient_dim) throw DimensionError("relations live in a different ambient space");
  return QuotientSpace(relations);
}

}  // namespace mkit::exactlin

#endif  // MKIT_EXACTLIN_SYSTEM_HPP
