#ifndef MKIT_EXAMPLES_ALGEBROIDS_HPP
#define MKIT_EXAMPLES_ALGEBROIDS_HPP

#include "../hopfalgd/presentation.hpp"
#include "algebras.hpp"

namespace mkit::examples {

using hopfalgd::CommAlgebraPresentation;
using hopfalgd::HopfAlgebroidPresentation;

/// A = R (x) R with basis index a * dim(R) + b, s(x) = x (x) 1,
/// t(y) = 1 (x) y, delta(x (x) y) lifted to (x (x) 1) (x) (1 (x) y),
/// eps(x (x) y) = xy and sigma the flip.
inline HopfAlgebroidPresentation pair_hopf_algebroid(const CommAlgebraPresentation& r) {
  const FieldSpec f = r.field();
  const std::size_t m = r.dim(), n = m * m;
  AlgebraPresentation total = hopfalgd::tensor_algebra(r.algebra(), r.algebra());
  const Vector& one = r.unit();
  Matrix src(f, n, m), tgt(f, n, m), lift(f, n * n, n), counit(f, m, n), antipode(f, n, n);
  for (std::size_t x = 0; x < m; ++x) {
    const Vector sx = exactlin::tensor(r.basis(x), one), tx = exactlin::tensor(one, r.basis(x));
    for (std::size_t i = 0; i < n; ++i) {
      src(i, x) = sx[i];
      tgt(i, x) = tx[i];
    }
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const std::size_t k = a * m + b;
      const Vector l = exactlin::tensor(exactlin::tensor(r.basis(a), one), exactlin::tensor(one, r.basis(b)));
      for (std::size_t i = 0; i < n * n; ++i) lift(i, k) = l[i];
      const Vector ab = r.multiply(r.basis(a), r.basis(b));
      for (std::size_t c = 0; c < m; ++c) counit(c, k) = ab[c];
      antipode(b * m + a, k) = Scalar::one(f);
    }
  return HopfAlgebroidPresentation(r, std::move(total), std::move(src), std::move(tgt), std::move(lift),
                                   std::move(counit), std::move(antipode));
}

/// A (weak) Hopf algebra over the ground field: s = t = unit, the
/// comultiplication as its own lift.
inline HopfAlgebroidPresentation hopf_algebroid_from_hopf_algebra(const WeakHopfPresentation& w) {
  const FieldSpec f = w.field();
  const Vector& unit = w.algebra().unit();
  Matrix s = Matrix::from_columns(f, w.dim(), {unit});
  return HopfAlgebroidPresentation(CommAlgebraPresentation(ground_field_algebra(f)), w.algebra(), s, s,
                                   w.coalgebra().comult_matrix(), w.coalgebra().counit_matrix(), w.antipode());
}

}  // namespace mkit::examples

#endif  // MKIT_EXAMPLES_ALGEBROIDS_HPP
