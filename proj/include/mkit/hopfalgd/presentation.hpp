#ifndef MKIT_HOPFALGD_PRESENTATION_HPP
#define MKIT_HOPFALGD_PRESENTATION_HPP

#include "../finalg/presentation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mkit::hopfalgd {

using exactlin::FieldSpec;
using exactlin::Matrix;
using exactlin::QuotientSpace;
using exactlin::Scalar;
using exactlin::Subspace;
using exactlin::Tensor3;
using exactlin::Vector;
using finalg::AlgebraPresentation;
using finalg::describe;

/// An algebra presentation whose multiplication has been checked to commute.
class CommAlgebraPresentation {
 public:
  CommAlgebraPresentation() = default;

  explicit CommAlgebraPresentation(AlgebraPresentation a) : a_(std::move(a)) {
    AxiomReport report = finalg::check_algebra(a_);
    const auto& L = a_.labels();
    for (std::size_t i = 0; i < a_.dim(); ++i)
      for (std::size_t j = i + 1; j < a_.dim(); ++j)
        if (a_.multiply(a_.basis(i), a_.basis(j)) != a_.multiply(a_.basis(j), a_.basis(i)))
          report.fail("commutativity", {L[i], L[j]});
    require_valid(report);
  }

  const AlgebraPresentation& algebra() const { return a_; }
  FieldSpec field() const { return a_.field(); }
  std::size_t dim() const { return a_.dim(); }
  const std::vector<std::string>& labels() const { return a_.labels(); }
  const Vector& unit() const { return a_.unit(); }
  Vector basis(std::size_t i) const { return a_.basis(i); }
  Vector multiply(std::span<const Scalar> x, std::span<const Scalar> y) const { return a_.multiply(x, y); }

 private:
  AlgebraPresentation a_;
};

/// A Hopf algebroid over a commutative base R. Maps are matrices acting on
/// coordinate columns: src and tgt are dim(A) x dim(R), counit is
/// dim(R) x dim(A), antipode is dim(A) x dim(A). The comultiplication is
/// stored as a lift A -> A (x) A (dim(A)^2 x dim(A)); only its class in
/// A (x)_R A matters.
class HopfAlgebroidPresentation {
 public:
  HopfAlgebroidPresentation() = default;

  HopfAlgebroidPresentation(CommAlgebraPresentation base, AlgebraPresentation total, Matrix src, Matrix tgt,
                            Matrix comult_lift, Matrix counit, std::optional<Matrix> antipode = std::nullopt)
      : base_(std::move(base)),
        total_(std::move(total)),
        src_(std::move(src)),
        tgt_(std::move(tgt)),
        lift_(std::move(comult_lift)),
        counit_(std::move(counit)),
        antipode_(std::move(antipode)) {
    const FieldSpec f = base_.field();
    if (total_.field() != f) throw FieldMismatch("base and total algebra over different fields");
    const std::size_t n = total_.dim(), r = base_.dim();
    auto expect = [&](const Matrix& m, std::size_t rows, std::size_t cols, const char* what) {
      if (m.field() != f) throw FieldMismatch(std::string(what) + " over a different field");
      if (m.rows() != rows || m.cols() != cols)
        throw DimensionError(std::string(what) + " must be " + std::to_string(rows) + " x " + std::to_string(cols));
    };
    expect(src_, n, r, "source map");
    expect(tgt_, n, r, "target map");
    expect(lift_, n * n, n, "comultiplication lift");
    expect(counit_, r, n, "counit");
    if (antipode_) expect(*antipode_, n, n, "antipode");
  }

  FieldSpec field() const { return base_.field(); }
  std::size_t dim() const { return total_.dim(); }
  std::size_t base_dim() const { return base_.dim(); }
  const CommAlgebraPresentation& base() const { return base_; }
  const AlgebraPresentation& total() const { return total_; }
  const std::vector<std::string>& labels() const { return total_.labels(); }
  const std::vector<std::string>& base_labels() const { return base_.labels(); }
  const Matrix& src() const { return src_; }
  const Matrix& tgt() const { return tgt_; }
  const Matrix& comult_lift() const { return lift_; }
  const Matrix& counit() const { return counit_; }
  const std::optional<Matrix>& antipode() const { return antipode_; }
  bool has_antipode() const { return antipode_.has_value(); }

  Vector basis(std::size_t i) const { return total_.basis(i); }
  Vector source(std::span<const Scalar> x) const { return src_ * x; }
  Vector target(std::span<const Scalar> x) const { return tgt_ * x; }
  Vector apply_counit(std::span<const Scalar> h) const { return counit_ * h; }
  Vector multiply(std::span<const Scalar> a, std::span<const Scalar> b) const { return total_.multiply(a, b); }

  HopfAlgebroidPresentation with_comult_lift(Matrix lift) const {
    return HopfAlgebroidPresentation(base_, total_, src_, tgt_, std::move(lift), counit_, antipode_);
  }
  HopfAlgebroidPresentation with_antipode(std::optional<Matrix> antipode) const {
    return HopfAlgebroidPresentation(base_, total_, src_, tgt_, lift_, counit_, std::move(antipode));
  }

 private:
  CommAlgebraPresentation base_;
  AlgebraPresentation total_;
  Matrix src_, tgt_, lift_, counit_;
  std::optional<Matrix> antipode_;
};

/// R (x) S with (a (x) b)(c (x) d) = ac (x) bd, basis index a * dim(S) + b.
inline AlgebraPresentation tensor_algebra(const AlgebraPresentation& r, const AlgebraPresentation& s) {
  const FieldSpec f = r.field();
  const std::size_t m = r.dim(), n = s.dim(), d = m * n;
  std::vector<std::string> labels;
  for (const auto& a : r.labels())
    for (const auto& b : s.labels()) labels.push_back(a + "|" + b);
  Tensor3 t(f, d, d, d);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t c = 0; c < m; ++c)
      for (const auto& [p, u] : r.basis_product(a, c))
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t e = 0; e < n; ++e)
            for (const auto& [q, v] : s.basis_product(b, e)) t(a * n + b, c * n + e, p * n + q) += u * v;
  return AlgebraPresentation(f, std::move(labels), std::move(t), exactlin::tensor(r.unit(), s.unit()));
}

namespace detail {

/// Nonzero coordinates of v in V (x) V as index pairs.
struct PairTerm {
  std::size_t left, right;
  Scalar coef;
};

inline std::vector<PairTerm> pair_terms(std::span<const Scalar> v, std::size_t n) {
  std::vector<PairTerm> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.push_back({i / n, i % n, v[i]});
  return out;
}

/// span{(rho_x a) (x) b - a (x) (lambda_x b)} for basis vectors a, b.
inline Subspace balanced_relations(FieldSpec f, std::size_t n, const std::vector<Matrix>& on_first,
                                   const std::vector<Matrix>& on_second) {
  std::vector<Vector> rel;
  for (std::size_t x = 0; x < on_first.size(); ++x)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Vector v = exactlin::zero_vector(f, n * n);
        for (std::size_t i = 0; i < n; ++i) v[i * n + b] += on_first[x](i, a);
        for (std::size_t j = 0; j < n; ++j) v[a * n + j] -= on_second[x](j, b);
        if (!exactlin::is_zero(v)) rel.push_back(std::move(v));
      }
  return Subspace::span(f, n * n, rel);
}

/// The same balancing imposed on both adjacent pairs of V (x) V (x) V.
inline QuotientSpace triple_balanced_quotient(FieldSpec f, std::size_t n, const std::vector<Matrix>& on_first,
                                              const std::vector<Matrix>& on_second) {
  std::vector<Vector> rel;
  for (std::size_t x = 0; x < on_first.size(); ++x)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          Vector u = exactlin::zero_vector(f, n * n * n), v = u;
          for (std::size_t i = 0; i < n; ++i) {
            u[(i * n + b) * n + c] += on_first[x](i, a);
            u[(a * n + i) * n + c] -= on_second[x](i, b);
            v[(a * n + i) * n + c] += on_first[x](i, b);
            v[(a * n + b) * n + i] -= on_second[x](i, c);
          }
          if (!exactlin::is_zero(u)) rel.push_back(std::move(u));
          if (!exactlin::is_zero(v)) rel.push_back(std::move(v));
        }
  return QuotientSpace(Subspace::span(f, n * n * n, rel));
}

inline std::vector<Matrix> left_mult_by_columns(const AlgebraPresentation& a, const Matrix& m) {
  std::vector<Matrix> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(a.left_mult(m.column(j)));
  return out;
}

/// Operators of the circ product: t(x) on the first factor, s(x) on the second.
inline std::pair<std::vector<Matrix>, std::vector<Matrix>> circ_actions(const HopfAlgebroidPresentation& h) {
  return {left_mult_by_columns(h.total(), h.tgt()), left_mult_by_columns(h.total(), h.src())};
}

/// Operators of the bullet product: s(x) t(y) on both factors, indexed x * dim(R) + y.
inline std::vector<Matrix> bullet_actions(const HopfAlgebroidPresentation& h) {
  std::vector<Matrix> ops;
  for (std::size_t x = 0; x < h.base_dim(); ++x)
    for (std::size_t y = 0; y < h.base_dim(); ++y)
      ops.push_back(h.total().left_mult(h.multiply(h.src().column(x), h.tgt().column(y))));
  return ops;
}

}  // namespace detail

/// Quotient of V (x) V by (v.x) (x) w - v (x) (x.w) over a basis x of
/// `ring`. on_first[x] is a right action on the first factor, on_second[x] a
/// left action on the second, both as n x n matrices. The action axioms are
/// checked and failures thrown as InvalidStructure.
inline QuotientSpace tensor_over_R(const AlgebraPresentation& ring, std::size_t n, const std::vector<Matrix>& on_first,
                                   const std::vector<Matrix>& on_second) {
  const FieldSpec f = ring.field();
  const std::size_t d = ring.dim();
  if (on_first.size() != d || on_second.size() != d) throw DimensionError("one operator per ring basis element");
  for (const auto* ops : {&on_first, &on_second})
    for (const auto& m : *ops) {
      if (m.field() != f) throw FieldMismatch("action matrix over a different field");
      if (m.rows() != n || m.cols() != n) throw DimensionError("action matrices must be n x n");
    }
  auto op = [&](const std::vector<Matrix>& ops, std::span<const Scalar> x) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < d; ++i)
      if (!x[i].is_zero()) m = m + x[i] * ops[i];
    return m;
  };
  AxiomReport report;
  const auto& L = ring.labels();
  const Matrix id = Matrix::identity(f, n);
  if (op(on_first, ring.unit()) != id) report.fail("right action on the first factor is unital", {});
  if (op(on_second, ring.unit()) != id) report.fail("left action on the second factor is unital", {});
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      const Vector xy = ring.multiply(ring.basis(x), ring.basis(y));
      if (op(on_first, xy) != on_first[y] * on_first[x])
        report.fail("right action on the first factor: (v.x).y = v.(xy)", {L[x], L[y]});
      if (op(on_second, xy) != on_second[x] * on_second[y])
        report.fail("left action on the second factor: x.(y.w) = (xy).w", {L[x], L[y]});
    }
  require_valid(report);
  return QuotientSpace(detail::balanced_relations(f, n, on_first, on_second));
}

/// A o A = A (x)_R A: t(x)h (x) k ~ h (x) s(x)k.
inline QuotientSpace circ_product(const HopfAlgebroidPresentation& h) {
  auto [first, second] = detail::circ_actions(h);
  return tensor_over_R(h.base().algebra(), h.dim(), first, second);
}

/// A . A = A (x)_{R (x) R} A: s(x)t(y)h (x) k ~ h (x) s(x)t(y)k.
inline QuotientSpace bullet_product(const HopfAlgebroidPresentation& h) {
  const auto ops = detail::bullet_actions(h);
  return tensor_over_R(tensor_algebra(h.base().algebra(), h.base().algebra()), h.dim(), ops, ops);
}

/// span{(s(x) - t(x)) k} over basis elements x of R and k of A.
inline Subspace ideal_subspace(const HopfAlgebroidPresentation& h) {
  std::vector<Vector> gens;
  for (std::size_t x = 0; x < h.base_dim(); ++x) {
    const Vector d = exactlin::sub(h.src().column(x), h.tgt().column(x));
    for (std::size_t k = 0; k < h.dim(); ++k) gens.push_back(h.multiply(d, h.basis(k)));
  }
  return Subspace::span(h.field(), h.dim(), gens);
}

namespace detail {

/// Product in A (x) A, factorwise.
inline Vector multiply_pairs(const AlgebraPresentation& a, std::span<const Scalar> u, std::span<const Scalar> v) {
  const std::size_t n = a.dim();
  Vector out = exactlin::zero_vector(a.field(), n * n);
  const auto tu = pair_terms(u, n), tv = pair_terms(v, n);
  for (const auto& x : tu)
    for (const auto& y : tv) {
      const Scalar c = x.coef * y.coef;
      for (const auto& [p, s] : a.basis_product(x.left, y.left))
        for (const auto& [q, t] : a.basis_product(x.right, y.right)) out[p * n + q] += c * s * t;
    }
  return out;
}

}  // namespace detail

/// Everything but the antipode: s and t central algebra maps, the counit a
/// multiplicative R-bimodule map, and the comultiplication an R-bimodule map
/// into A o A that is coassociative, counital and multiplicative. Identities
/// involving the comultiplication are compared in A o A or A o A o A.
inline AxiomReport check_bialgebroid(const HopfAlgebroidPresentation& h) {
  AxiomReport report;
  report.merge(finalg::check_algebra(h.total()), "total algebra");
  const FieldSpec f = h.field();
  const std::size_t n = h.dim(), r = h.base_dim();
  const auto& A = h.total();
  const auto& R = h.base();
  const auto& L = h.labels();
  const auto& RL = h.base_labels();

  const std::pair<const Matrix*, const char*> maps[] = {{&h.src(), "source"}, {&h.tgt(), "target"}};
  for (const auto& [m, name] : maps) {
    const std::string s = name;
    if (*m * R.unit() != A.unit()) report.fail(s + " map is unital", {});
    for (std::size_t x = 0; x < r; ++x) {
      const Vector mx = m->column(x);
      for (std::size_t y = 0; y < r; ++y)
        if (*m * R.multiply(R.basis(x), R.basis(y)) != A.multiply(mx, m->column(y)))
          report.fail(s + " map is multiplicative", {RL[x], RL[y]});
      for (std::size_t k = 0; k < n; ++k)
        if (A.multiply(mx, A.basis(k)) != A.multiply(A.basis(k), mx))
          report.fail(s + " image is central", {RL[x], L[k]});
    }
  }

  if (h.apply_counit(A.unit()) != R.unit()) report.fail("counit is unital: eps(1) = 1", {});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (h.apply_counit(A.multiply(A.basis(a), A.basis(b))) !=
          R.multiply(h.counit().column(a), h.counit().column(b)))
        report.fail("counit is multiplicative: eps(hk) = eps(h) eps(k)", {L[a], L[b]});
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t k = 0; k < n; ++k) {
      const Vector xe = R.multiply(R.basis(x), h.counit().column(k));
      if (h.apply_counit(A.multiply(h.src().column(x), A.basis(k))) != xe)
        report.fail("counit is R-linear: eps(s(x)h) = x eps(h)", {RL[x], L[k]});
      if (h.apply_counit(A.multiply(h.tgt().column(x), A.basis(k))) != xe)
        report.fail("counit is R-linear: eps(t(x)h) = eps(h) x", {RL[x], L[k]});
    }

  const auto [first, second] = detail::circ_actions(h);
  const QuotientSpace circ(detail::balanced_relations(f, n, first, second));
  const Matrix& P = circ.projection();
  const Matrix& lift = h.comult_lift();
  const Matrix id = Matrix::identity(f, n);
  for (std::size_t x = 0; x < r; ++x) {
    const Matrix Ls = A.left_mult(h.src().column(x)), Lt = A.left_mult(h.tgt().column(x));
    const Matrix lhs_s = P * (lift * Ls), rhs_s = P * (exactlin::kron(Ls, id) * lift);
    const Matrix lhs_t = P * (lift * Lt), rhs_t = P * (exactlin::kron(id, Lt) * lift);
    for (std::size_t k = 0; k < n; ++k) {
      if (lhs_s.column(k) != rhs_s.column(k))
        report.fail("comultiplication is R-linear: delta(s(x)h) = s(x)h_1 o h_2", {RL[x], L[k]});
      if (lhs_t.column(k) != rhs_t.column(k))
        report.fail("comultiplication is R-linear: delta(t(x)h) = h_1 o t(x)h_2", {RL[x], L[k]});
    }
  }

  if (P * (lift * A.unit()) != P * exactlin::tensor(A.unit(), A.unit()))
    report.fail("comultiplication is unital: delta(1) = 1 o 1", {});
  std::vector<Vector> lifts;
  for (std::size_t k = 0; k < n; ++k) lifts.push_back(lift.column(k));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (P * (lift * A.multiply(A.basis(a), A.basis(b))) != P * detail::multiply_pairs(A, lifts[a], lifts[b]))
        report.fail("comultiplication is multiplicative: delta(hk) = delta(h) delta(k)", {L[a], L[b]});

  const QuotientSpace circ3 = detail::triple_balanced_quotient(f, n, first, second);
  const Matrix left3 = circ3.projection() * (exactlin::kron(lift, id) * lift);
  const Matrix right3 = circ3.projection() * (exactlin::kron(id, lift) * lift);
  for (std::size_t k = 0; k < n; ++k)
    if (left3.column(k) != right3.column(k)) report.fail("coassociativity in A o A o A", {L[k]});

  for (std::size_t k = 0; k < n; ++k) {
    Vector left = exactlin::zero_vector(f, n), right = left;
    for (const auto& t : detail::pair_terms(lifts[k], n)) {
      const Vector a = A.basis(t.left), b = A.basis(t.right);
      left = exactlin::add(left, exactlin::scale(t.coef, A.multiply(h.source(h.apply_counit(a)), b)));
      right = exactlin::add(right, exactlin::scale(t.coef, A.multiply(h.target(h.apply_counit(b)), a)));
    }
    if (left != A.basis(k)) report.fail("left counit: s(eps(h_1)) h_2 = h", {L[k]}, describe(left, L));
    if (right != A.basis(k)) report.fail("right counit: t(eps(h_2)) h_1 = h", {L[k]}, describe(right, L));
  }
  return report;
}

/// Antipode identities alone; throws Error when no antipode is present.
inline AxiomReport check_algebroid_antipode(const HopfAlgebroidPresentation& h) {
  if (!h.has_antipode()) throw Error("presentation has no antipode");
  AxiomReport report;
  const FieldSpec f = h.field();
  const std::size_t n = h.dim();
  const auto& A = h.total();
  const Matrix& S = *h.antipode();
  const auto& L = h.labels();
  const auto& RL = h.base_labels();
  for (std::size_t x = 0; x < h.base_dim(); ++x) {
    const Vector sx = h.src().column(x), tx = h.tgt().column(x);
    for (std::size_t k = 0; k < n; ++k) {
      const Vector sk = S.column(k);
      if (S * A.multiply(sx, A.basis(k)) != A.multiply(tx, sk))
        report.fail("sigma(s(x)h) = t(x) sigma(h)", {RL[x], L[k]});
      if (S * A.multiply(tx, A.basis(k)) != A.multiply(sx, sk))
        report.fail("sigma(t(x)h) = s(x) sigma(h)", {RL[x], L[k]});
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    Vector left = exactlin::zero_vector(f, n), right = left;
    for (const auto& t : detail::pair_terms(h.comult_lift().column(k), n)) {
      left = exactlin::add(left, exactlin::scale(t.coef, A.multiply(A.basis(t.left), S.column(t.right))));
      right = exactlin::add(right, exactlin::scale(t.coef, A.multiply(S.column(t.left), A.basis(t.right))));
    }
    const Vector eps = h.counit().column(k);
    if (left != h.source(eps)) report.fail("h_1 sigma(h_2) = s(eps(h))", {L[k]}, describe(left, L));
    if (right != h.target(eps)) report.fail("sigma(h_1) h_2 = t(eps(h))", {L[k]}, describe(right, L));
  }
  return report;
}

/// The bialgebroid axioms plus, when an antipode is given, its identities.
inline AxiomReport check_hopf_algebroid(const HopfAlgebroidPresentation& h) {
  AxiomReport report = check_bialgebroid(h);
  if (h.has_antipode())
    report.merge(check_algebroid_antipode(h), "antipode");
  else
    report.warn("antipode present", {}, "no antipode given; only the bialgebroid axioms were checked");
  return report;
}

}  // namespace mkit::hopfalgd

#endif  // MKIT_HOPFALGD_PRESENTATION_HPP
