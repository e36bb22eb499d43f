#ifndef MKIT_FINALG_PRESENTATION_HPP
#define MKIT_FINALG_PRESENTATION_HPP

#include "../exactlin.hpp"
#include "axiom_report.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mkit::finalg {

using exactlin::FieldSpec;
using exactlin::Matrix;
using exactlin::Scalar;
using exactlin::Tensor3;
using exactlin::Vector;

/// Nonzero entries of t[i][j][*] for every (i, j), flat index i*d1 + j.
struct SparseSlices {
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> slices;

  static SparseSlices of(const Tensor3& t) {
    SparseSlices s;
    s.slices.resize(t.d0() * t.d1());
    for (std::size_t i = 0; i < t.d0(); ++i)
      for (std::size_t j = 0; j < t.d1(); ++j)
        for (std::size_t k = 0; k < t.d2(); ++k)
          if (!t(i, j, k).is_zero()) s.slices[i * t.d1() + j].emplace_back(k, t(i, j, k));
    return s;
  }
};

inline std::vector<std::string> default_labels(std::size_t dim, const std::string& stem = "e") {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back(stem + std::to_string(i));
  return labels;
}

/// Finite-dimensional algebra by structure constants:
/// mult(i, j, k) is the coefficient of e_k in e_i e_j.
class AlgebraPresentation {
 public:
  AlgebraPresentation() = default;

  AlgebraPresentation(FieldSpec field, std::vector<std::string> labels, Tensor3 mult, Vector unit)
      : field_(field), labels_(std::move(labels)), mult_(std::move(mult)), unit_(std::move(unit)) {
    const std::size_t n = labels_.size();
    if (n == 0) throw DimensionError("algebra of dimension 0 has no unit");
    if (mult_.d0() != n || mult_.d1() != n || mult_.d2() != n)
      throw DimensionError("multiplication tensor must be " + std::to_string(n) + "^3");
    if (unit_.size() != n) throw DimensionError("unit vector length must equal the dimension");
    if (mult_.field() != field) throw FieldMismatch("multiplication tensor over a different field");
    for (const auto& s : unit_)
      if (s.field() != field) throw FieldMismatch("unit vector over a different field");
    if (exactlin::is_zero(unit_)) throw Error("unit vector is zero");
    sparse_ = SparseSlices::of(mult_);
  }

  FieldSpec field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Tensor3& mult() const { return mult_; }
  const Vector& unit() const { return unit_; }

  /// Nonzero coordinates of e_i e_j.
  const std::vector<std::pair<std::size_t, Scalar>>& basis_product(std::size_t i, std::size_t j) const {
    return sparse_.slices[i * dim() + j];
  }

  Vector multiply(std::span<const Scalar> x, std::span<const Scalar> y) const {
    Vector r = exactlin::zero_vector(field_, dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (y[j].is_zero()) continue;
        Scalar c = x[i] * y[j];
        for (const auto& [k, v] : basis_product(i, j)) r[k].add_product(c, v);
      }
    }
    return r;
  }

  Vector basis(std::size_t i) const { return exactlin::unit_vector(field_, dim(), i); }

  /// mu as a dim x dim^2 matrix.
  Matrix mult_matrix() const {
    Matrix m(field_, dim(), dim() * dim());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        for (const auto& [k, v] : basis_product(i, j)) m(k, i * dim() + j) = v;
    return m;
  }

  /// x |-> a x
  Matrix left_mult(std::span<const Scalar> a) const {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < dim(); ++j) cols.push_back(multiply(a, basis(j)));
    return Matrix::from_columns(field_, dim(), cols);
  }

  /// x |-> x a
  Matrix right_mult(std::span<const Scalar> a) const {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < dim(); ++j) cols.push_back(multiply(basis(j), a));
    return Matrix::from_columns(field_, dim(), cols);
  }

 private:
  FieldSpec field_;
  std::vector<std::string> labels_;
  Tensor3 mult_;
  Vector unit_;
  SparseSlices sparse_;
};

/// Finite-dimensional coalgebra: comult(i, j, k) is the coefficient of
/// e_j (x) e_k in Delta(e_i).
class CoalgebraPresentation {
 public:
  CoalgebraPresentation() = default;

  CoalgebraPresentation(FieldSpec field, std::vector<std::string> labels, Tensor3 comult, Vector counit)
      : field_(field), labels_(std::move(labels)), comult_(std::move(comult)), counit_(std::move(counit)) {
    const std::size_t n = labels_.size();
    if (n == 0) throw DimensionError("coalgebra of dimension 0 has no counit");
    if (comult_.d0() != n || comult_.d1() != n || comult_.d2() != n)
      throw DimensionError("comultiplication tensor must be " + std::to_string(n) + "^3");
    if (counit_.size() != n) throw DimensionError("counit length must equal the dimension");
    if (comult_.field() != field) throw FieldMismatch("comultiplication tensor over a different field");
    for (const auto& s : counit_)
      if (s.field() != field) throw FieldMismatch("counit over a different field");
    sparse_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (!comult_(i, j, k).is_zero()) sparse_[i].push_back({j, k, comult_(i, j, k)});
  }

  struct Term {
    std::size_t left, right;
    Scalar coef;
  };

  FieldSpec field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Tensor3& comult() const { return comult_; }
  const Vector& counit() const { return counit_; }

  /// Sweedler terms of Delta(e_i).
  const std::vector<Term>& terms(std::size_t i) const { return sparse_[i]; }

  /// Delta(x) in dim^2 coordinates (left-major).
  Vector coproduct(std::span<const Scalar> x) const {
    Vector r = exactlin::zero_vector(field_, dim() * dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i].is_zero()) continue;
      for (const auto& t : terms(i)) r[t.left * dim() + t.right].add_product(x[i], t.coef);
    }
    return r;
  }

  Scalar apply_counit(std::span<const Scalar> x) const { return exactlin::dot(counit_, x); }

  /// Delta as a dim^2 x dim matrix.
  Matrix comult_matrix() const {
    Matrix m(field_, dim() * dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
      for (const auto& t : terms(i)) m(t.left * dim() + t.right, i) = t.coef;
    return m;
  }

  Matrix counit_matrix() const { return Matrix(field_, 1, dim(), counit_); }

 private:
  FieldSpec field_;
  std::vector<std::string> labels_;
  Tensor3 comult_;
  Vector counit_;
  std::vector<std::vector<Term>> sparse_;
};

inline std::string describe(const Vector& v, const std::vector<std::string>& labels) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += (v[i].is_one() ? "" : v[i].to_string() + "*") + (i < labels.size() ? labels[i] : std::to_string(i));
  }
  return s.empty() ? "0" : s;
}

/// Associativity on every basis triple and two-sided unitality on every basis element.
inline AxiomReport check_algebra(const AlgebraPresentation& a) {
  AxiomReport report;
  const auto& L = a.labels();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vector ij = a.multiply(a.basis(i), a.basis(j));
      for (std::size_t k = 0; k < a.dim(); ++k) {
        Vector lhs = a.multiply(ij, a.basis(k));
        Vector rhs = a.multiply(a.basis(i), a.multiply(a.basis(j), a.basis(k)));
        if (lhs != rhs)
          report.fail("associativity", {L[i], L[j], L[k]}, describe(lhs, L) + " != " + describe(rhs, L));
      }
    }
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.multiply(a.unit(), a.basis(i)) != a.basis(i)) report.fail("left unit", {L[i]});
    if (a.multiply(a.basis(i), a.unit()) != a.basis(i)) report.fail("right unit", {L[i]});
  }
  return report;
}

/// Coassociativity and two-sided counitality on every basis element.
inline AxiomReport check_coalgebra(const CoalgebraPresentation& c) {
  AxiomReport report;
  const std::size_t n = c.dim();
  const FieldSpec f = c.field();
  const auto& L = c.labels();
  for (std::size_t i = 0; i < n; ++i) {
    Vector left = exactlin::zero_vector(f, n * n * n), right = left;
    for (const auto& t : c.terms(i)) {
      for (const auto& u : c.terms(t.left)) left[(u.left * n + u.right) * n + t.right].add_product(t.coef, u.coef);
      for (const auto& u : c.terms(t.right)) right[(t.left * n + u.left) * n + u.right].add_product(t.coef, u.coef);
    }
    if (left != right) report.fail("coassociativity", {L[i]});
    Vector lc = exactlin::zero_vector(f, n), rc = lc;
    for (const auto& t : c.terms(i)) {
      lc[t.right].add_product(c.counit()[t.left], t.coef);
      rc[t.left].add_product(c.counit()[t.right], t.coef);
    }
    const Vector e = exactlin::unit_vector(f, n, i);
    if (lc != e) report.fail("left counit", {L[i]}, describe(lc, L));
    if (rc != e) report.fail("right counit", {L[i]}, describe(rc, L));
  }
  return report;
}

}  // namespace mkit::finalg

#endif  // MKIT_FINALG_PRESENTATION_HPP
