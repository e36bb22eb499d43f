#ifndef MKIT_WEAKHOPF_PRESENTATION_HPP
#define MKIT_WEAKHOPF_PRESENTATION_HPP

#include "../finalg/presentation.hpp"

#include <optional>

namespace mkit::weakhopf {

using exactlin::FieldSpec;
using exactlin::Matrix;
using exactlin::Scalar;
using exactlin::Subspace;
using exactlin::Tensor3;
using exactlin::Vector;
using finalg::AlgebraPresentation;
using finalg::CoalgebraPresentation;
using finalg::describe;

/// Algebra and coalgebra on one vector space, plus an optional antipode
/// (dim x dim, column j = sigma(e_j)). The weak bialgebra axioms are checked by
/// check_weak_bialgebra, not on construction.
class WeakHopfPresentation {
 public:
  WeakHopfPresentation() = default;

  WeakHopfPresentation(AlgebraPresentation algebra, CoalgebraPresentation coalgebra,
                       std::optional<Matrix> antipode = std::nullopt)
      : algebra_(std::move(algebra)), coalgebra_(std::move(coalgebra)), antipode_(std::move(antipode)) {
    if (algebra_.field() != coalgebra_.field()) throw FieldMismatch("algebra and coalgebra over different fields");
    if (algebra_.dim() != coalgebra_.dim()) throw DimensionError("algebra and coalgebra of different dimensions");
    if (antipode_) {
      if (antipode_->field() != field()) throw FieldMismatch("antipode over a different field");
      if (antipode_->rows() != dim() || antipode_->cols() != dim()) throw DimensionError("antipode must be dim x dim");
    }
  }

  FieldSpec field() const { return algebra_.field(); }
  std::size_t dim() const { return algebra_.dim(); }
  const std::vector<std::string>& labels() const { return algebra_.labels(); }
  const AlgebraPresentation& algebra() const { return algebra_; }
  const CoalgebraPresentation& coalgebra() const { return coalgebra_; }
  const std::optional<Matrix>& antipode() const { return antipode_; }
  bool has_antipode() const { return antipode_.has_value(); }

  Vector basis(std::size_t i) const { return algebra_.basis(i); }
  Vector multiply(std::span<const Scalar> x, std::span<const Scalar> y) const { return algebra_.multiply(x, y); }
  Scalar counit(std::span<const Scalar> x) const { return coalgebra_.apply_counit(x); }

  /// Delta(1) in dim^2 coordinates.
  Vector unit_coproduct() const { return coalgebra_.coproduct(algebra_.unit()); }

 private:
  AlgebraPresentation algebra_;
  CoalgebraPresentation coalgebra_;
  std::optional<Matrix> antipode_;
};

/// Nonzero terms c e_a (x) e_b of a dim^2 coordinate vector.
struct PairTerm {
  std::size_t left, right;
  Scalar coef;
};

inline std::vector<PairTerm> pair_terms(std::span<const Scalar> v, std::size_t n) {
  std::vector<PairTerm> terms;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!v[a * n + b].is_zero()) terms.push_back({a, b, v[a * n + b]});
  return terms;
}

/// eps(e_i e_j) for all basis pairs, flat index i*dim + j.
inline Vector counit_of_products(const WeakHopfPresentation& w) {
  const std::size_t n = w.dim();
  Vector e;
  e.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar s = Scalar::zero(w.field());
      for (const auto& [k, c] : w.algebra().basis_product(i, j)) s.add_product(c, w.coalgebra().counit()[k]);
      e.push_back(std::move(s));
    }
  return e;
}

/// Factorwise product in A (x) A.
inline Vector multiply_pairs(const AlgebraPresentation& a, std::span<const Scalar> x, std::span<const Scalar> y) {
  const std::size_t n = a.dim();
  Vector r = exactlin::zero_vector(a.field(), n * n);
  for (const auto& s : pair_terms(x, n))
    for (const auto& t : pair_terms(y, n)) {
      const Scalar c = s.coef * t.coef;
      for (const auto& [l, cl] : a.basis_product(s.left, t.left))
        for (const auto& [m, cm] : a.basis_product(s.right, t.right)) r[l * n + m].add_product(c, cl * cm);
    }
  return r;
}

/// The three weak bialgebra diagrams: multiplicativity of Delta, the weak unit
/// identity for Delta^2(1) and the weak counit identity for eps(xyz).
/// Delta(1) = 1 (x) 1 is not demanded.
inline AxiomReport check_weak_bialgebra(const WeakHopfPresentation& w) {
  AxiomReport report;
  report.merge(finalg::check_algebra(w.algebra()), "algebra");
  report.merge(finalg::check_coalgebra(w.coalgebra()), "coalgebra");

  const std::size_t n = w.dim();
  const FieldSpec f = w.field();
  const auto& A = w.algebra();
  const auto& C = w.coalgebra();
  const auto& L = w.labels();

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = C.coproduct(w.multiply(w.basis(i), w.basis(j)));
      Vector rhs = multiply_pairs(A, C.coproduct(w.basis(i)), C.coproduct(w.basis(j)));
      if (lhs != rhs) report.fail("multiplicativity of comultiplication", {L[i], L[j]});
    }

  const Vector d1 = w.unit_coproduct();
  const auto d1_terms = pair_terms(d1, n);
  Vector delta2 = exactlin::zero_vector(f, n * n * n);
  for (const auto& t : d1_terms)
    for (const auto& u : C.terms(t.left)) delta2[(u.left * n + u.right) * n + t.right].add_product(t.coef, u.coef);
  Vector middle = exactlin::zero_vector(f, n * n * n), middle_op = middle;
  for (const auto& s : d1_terms)
    for (const auto& t : d1_terms) {
      const Scalar c = s.coef * t.coef;
      for (const auto& [m, cm] : A.basis_product(s.right, t.left)) middle[(s.left * n + m) * n + t.right].add_product(c, cm);
      for (const auto& [m, cm] : A.basis_product(t.left, s.right))
        middle_op[(s.left * n + m) * n + t.right].add_product(c, cm);
    }
  if (middle != delta2) report.fail("weak unit: (1 x mu x 1)(Delta(1) x Delta(1)) = Delta^2(1)", {"1"});
  if (middle_op != delta2) report.fail("weak unit: (1 x mu^op x 1)(Delta(1) x Delta(1)) = Delta^2(1)", {"1"});

  const Vector E = counit_of_products(w);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ij = w.multiply(w.basis(i), w.basis(j));
      for (std::size_t k = 0; k < n; ++k) {
        Scalar whole = Scalar::zero(f);
        for (std::size_t m = 0; m < n; ++m)
          if (!ij[m].is_zero()) whole.add_product(ij[m], E[m * n + k]);
        Scalar split = Scalar::zero(f), split_op = Scalar::zero(f);
        for (const auto& t : C.terms(j)) {
          split.add_product(t.coef, E[i * n + t.left] * E[t.right * n + k]);
          split_op.add_product(t.coef, E[i * n + t.right] * E[t.left * n + k]);
        }
        if (!(whole == split)) report.fail("weak counit: eps(x y z) = eps(x y_1) eps(y_2 z)", {L[i], L[j], L[k]});
        if (!(whole == split_op))
          report.fail("weak counit: eps(x y z) = eps(x y_2) eps(y_1 z)", {L[i], L[j], L[k]});
      }
    }
  return report;
}

}  // namespace mkit::weakhopf

#endif  // MKIT_WEAKHOPF_PRESENTATION_HPP
