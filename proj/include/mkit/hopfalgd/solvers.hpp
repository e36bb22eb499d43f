#ifndef MKIT_HOPFALGD_SOLVERS_HPP
#define MKIT_HOPFALGD_SOLVERS_HPP

#include "../weakhopf/integrals.hpp"
#include "presentation.hpp"

#include <optional>

namespace mkit::hopfalgd {

using exactlin::AffineSolution;
using exactlin::AffineSystem;
using exactlin::SparseRow;
using weakhopf::Side;

struct HgdIntegral {
  Side side;
  bool normalized;
  Vector element;
  AffineSolution solutions;
};

/// map is dim(R) x dim(A); solutions hold the unknowns in map_index order.
struct HgdCointegral {
  Side side;
  bool normalized;
  Matrix map;
  AffineSolution solutions;
};

/// map sends A into coordinates of A . A; element is map(1) in those
/// coordinates and lifted_element a representative in A (x) A.
struct HgdSeparabilitySection {
  Matrix map;
  Vector element;
  Vector lifted_element;
};

/// map sends coordinates of A o A to A.
struct HgdCoseparabilityRetraction {
  Matrix map;
};

/// A presentation that passed check_bialgebroid, with its quotients and ideal.
class HopfAlgebroidContext {
 public:
  explicit HopfAlgebroidContext(HopfAlgebroidPresentation h) : h_(std::move(h)) {
    require_valid(check_bialgebroid(h_));
    circ_ = circ_product(h_);
    bullet_ = bullet_product(h_);
    ideal_ = ideal_subspace(h_);
    ideal_quotient_ = QuotientSpace(ideal_);
  }

  const HopfAlgebroidPresentation& presentation() const { return h_; }
  const QuotientSpace& circ() const { return circ_; }
  const QuotientSpace& bullet() const { return bullet_; }
  const Subspace& ideal() const { return ideal_; }
  const QuotientSpace& ideal_quotient() const { return ideal_quotient_; }

 private:
  HopfAlgebroidPresentation h_;
  QuotientSpace circ_, bullet_;
  Subspace ideal_;
  QuotientSpace ideal_quotient_;
};

/// Unknown n in A. Left: h n - s(eps(h)) n in the ideal; right:
/// n h - s(eps(h)) n in the ideal; normalized adds eps(n) = 1.
inline AffineSystem integral_system_hgd(const HopfAlgebroidContext& ctx, Side side, bool normalized) {
  const auto& h = ctx.presentation();
  const auto& A = h.total();
  const Matrix& P = ctx.ideal_quotient().projection();
  AffineSystem sys(h.field(), h.dim());
  for (std::size_t k = 0; k < h.dim(); ++k) {
    const Vector e = h.basis(k);
    const Matrix act = side == Side::Left ? A.left_mult(e) : A.right_mult(e);
    sys.add_homogeneous_block(P * (act - A.left_mult(h.source(h.apply_counit(e)))));
  }
  if (normalized) sys.add_block(h.counit(), h.base().unit());
  return sys;
}

/// Position of the coefficient of e_c in nu(e_k).
inline std::size_t cointegral_index(std::size_t c, std::size_t k, std::size_t base_dim) { return k * base_dim + c; }

inline Matrix cointegral_matrix(const HopfAlgebroidPresentation& h, std::span<const Scalar> x) {
  const std::size_t r = h.base_dim();
  Matrix m(h.field(), r, h.dim());
  for (std::size_t k = 0; k < h.dim(); ++k)
    for (std::size_t c = 0; c < r; ++c) m(c, k) = x[cointegral_index(c, k, r)];
  return m;
}

/// Unknown nu: A -> R. Left: nu(s(x)h) = x nu(h) and h_1 t(nu(h_2)) = s(nu(h));
/// right: nu(t(x)h) = x nu(h) and s(nu(h_1)) h_2 = t(nu(h)). Sweedler
/// components come from the stored lift. Normalized adds nu(1) = 1.
inline AffineSystem cointegral_system_hgd(const HopfAlgebroidContext& ctx, Side side, bool normalized) {
  const auto& h = ctx.presentation();
  const auto& A = h.total();
  const auto& R = h.base().algebra();
  const FieldSpec f = h.field();
  const std::size_t n = h.dim(), r = h.base_dim();
  const Matrix& linear_map = side == Side::Left ? h.src() : h.tgt();
  const Matrix& inner = side == Side::Left ? h.tgt() : h.src();
  const Matrix& outer = side == Side::Left ? h.src() : h.tgt();
  auto idx = [&](std::size_t c, std::size_t k) { return cointegral_index(c, k, r); };
  AffineSystem sys(f, n * r);

  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t k = 0; k < n; ++k) {
      const Vector xk = A.multiply(linear_map.column(x), h.basis(k));
      std::vector<SparseRow> rows(r);
      for (std::size_t j = 0; j < n; ++j)
        if (!xk[j].is_zero())
          for (std::size_t d = 0; d < r; ++d) rows[d].emplace_back(idx(d, j), xk[j]);
      for (std::size_t c = 0; c < r; ++c)
        for (const auto& [d, v] : R.basis_product(x, c)) rows[d].emplace_back(idx(c, k), -v);
      for (auto& row : rows) sys.add_equation(std::move(row), Scalar::zero(f));
    }

  // Products e_a t(e_c) (left) or s(e_c) e_b (right), cached per pair.
  std::vector<Vector> with_inner(n * r);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < r; ++c)
      with_inner[a * r + c] = side == Side::Left ? A.multiply(h.basis(a), inner.column(c))
                                                 : A.multiply(inner.column(c), h.basis(a));
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<SparseRow> rows(n);
    for (const auto& t : detail::pair_terms(h.comult_lift().column(k), n)) {
      const std::size_t fixed = side == Side::Left ? t.left : t.right;
      const std::size_t varying = side == Side::Left ? t.right : t.left;
      for (std::size_t c = 0; c < r; ++c) {
        const Vector& p = with_inner[fixed * r + c];
        for (std::size_t i = 0; i < n; ++i)
          if (!p[i].is_zero()) rows[i].emplace_back(idx(c, varying), t.coef * p[i]);
      }
    }
    for (std::size_t c = 0; c < r; ++c)
      for (std::size_t i = 0; i < n; ++i)
        if (!outer(i, c).is_zero()) rows[i].emplace_back(idx(c, k), -outer(i, c));
    for (auto& row : rows) sys.add_equation(std::move(row), Scalar::zero(f));
  }

  if (normalized) {
    const Vector& one = A.unit();
    for (std::size_t d = 0; d < r; ++d) {
      SparseRow row;
      for (std::size_t k = 0; k < n; ++k)
        if (!one[k].is_zero()) row.emplace_back(idx(d, k), one[k]);
      sys.add_equation(std::move(row), R.unit()[d]);
    }
  }
  return sys;
}

namespace detail {

/// q x q matrices of left and right multiplication by each basis element of A
/// on the quotient coordinates of A . A.
inline std::pair<std::vector<Matrix>, std::vector<Matrix>> bullet_bimodule(const HopfAlgebroidContext& ctx) {
  const auto& h = ctx.presentation();
  const Matrix id = Matrix::identity(h.field(), h.dim());
  const Matrix& P = ctx.bullet().projection();
  const Matrix& S = ctx.bullet().section();
  std::vector<Matrix> left, right;
  for (std::size_t a = 0; a < h.dim(); ++a) {
    left.push_back(P * (exactlin::kron(h.total().left_mult(h.basis(a)), id) * S));
    right.push_back(P * (exactlin::kron(id, h.total().right_mult(h.basis(a))) * S));
  }
  return {left, right};
}

}  // namespace detail

/// Unknown nabla: A -> A . A in quotient coordinates, index k * q + u for the
/// coordinate u of nabla(e_k). nabla(e_i e_j) = e_i nabla(e_j) = nabla(e_i) e_j
/// and mu(nabla(h)) = h, where mu is read through the section.
inline AffineSystem separability_system_hgd(const HopfAlgebroidContext& ctx) {
  const auto& h = ctx.presentation();
  const auto& A = h.total();
  const FieldSpec f = h.field();
  const std::size_t n = h.dim(), q = ctx.bullet().dim();
  const auto [left, right] = detail::bullet_bimodule(ctx);
  AffineSystem sys(f, n * q);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<SparseRow> lrows(q), rrows(q);
      for (std::size_t w = 0; w < q; ++w)
        for (std::size_t u = 0; u < q; ++u) {
          if (!left[i](w, u).is_zero()) lrows[w].emplace_back(j * q + u, left[i](w, u));
          if (!right[j](w, u).is_zero()) rrows[w].emplace_back(i * q + u, right[j](w, u));
        }
      for (const auto& [k, v] : A.basis_product(i, j))
        for (std::size_t w = 0; w < q; ++w) {
          lrows[w].emplace_back(k * q + w, -v);
          rrows[w].emplace_back(k * q + w, -v);
        }
      for (auto& row : lrows) sys.add_equation(std::move(row), Scalar::zero(f));
      for (auto& row : rrows) sys.add_equation(std::move(row), Scalar::zero(f));
    }
  const Matrix mu = A.mult_matrix() * ctx.bullet().section();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      SparseRow row;
      for (std::size_t u = 0; u < q; ++u)
        if (!mu(i, u).is_zero()) row.emplace_back(k * q + u, mu(i, u));
      sys.add_equation(std::move(row), i == k ? Scalar::one(f) : Scalar::zero(f));
    }
  return sys;
}

inline Matrix separability_matrix_hgd(const HopfAlgebroidContext& ctx, std::span<const Scalar> x) {
  const std::size_t n = ctx.presentation().dim(), q = ctx.bullet().dim();
  Matrix m(ctx.presentation().field(), q, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t u = 0; u < q; ++u) m(u, k) = x[k * q + u];
  return m;
}

/// Checks the section identities on lifts in A (x) A, projecting only at the end.
inline bool is_separability_section_hgd(const HopfAlgebroidContext& ctx, const Matrix& nabla) {
  const auto& h = ctx.presentation();
  const auto& A = h.total();
  const std::size_t n = h.dim();
  const Matrix& P = ctx.bullet().projection();
  const Matrix lifted = ctx.bullet().section() * nabla;
  const Matrix id = Matrix::identity(h.field(), n);
  if (A.mult_matrix() * lifted != id) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix li = P * (exactlin::kron(A.left_mult(h.basis(i)), id) * lifted);
    const Matrix ri = P * (exactlin::kron(id, A.right_mult(h.basis(i))) * lifted);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector target = nabla * A.multiply(h.basis(i), h.basis(j));
      if (li.column(j) != target) return false;
      if (ri.column(j) != nabla * A.multiply(h.basis(j), h.basis(i))) return false;
    }
  }
  return true;
}

/// Unknown pi: A o A -> A, index u * n + i for the coefficient of e_i in
/// pi(class u). pi delta = id, pi is an R-bimodule map, and
/// (1 o pi)(delta o 1) = delta pi = (pi o 1)(1 o delta), all evaluated on
/// lifts and projected back to A o A.
inline AffineSystem coseparability_system_hgd(const HopfAlgebroidContext& ctx) {
  const auto& h = ctx.presentation();
  const auto& A = h.total();
  const FieldSpec f = h.field();
  const std::size_t n = h.dim(), q = ctx.circ().dim(), r = h.base_dim();
  const Matrix& P = ctx.circ().projection();
  const Matrix& S = ctx.circ().section();
  const Matrix& lift = h.comult_lift();
  const Matrix delta = P * lift;
  const Matrix id = Matrix::identity(f, n);
  auto idx = [&](std::size_t u, std::size_t i) { return u * n + i; };
  AffineSystem sys(f, n * q);

  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      SparseRow row;
      for (std::size_t u = 0; u < q; ++u)
        if (!delta(u, k).is_zero()) row.emplace_back(idx(u, i), delta(u, k));
      sys.add_equation(std::move(row), i == k ? Scalar::one(f) : Scalar::zero(f));
    }

  for (std::size_t x = 0; x < r; ++x) {
    const Matrix Ls = A.left_mult(h.src().column(x)), Lt = A.left_mult(h.tgt().column(x));
    const std::pair<Matrix, const Matrix*> sides[] = {{P * (exactlin::kron(Ls, id) * S), &Ls},
                                                      {P * (exactlin::kron(id, Lt) * S), &Lt}};
    for (const auto& [on_classes, on_values] : sides)
      for (std::size_t u = 0; u < q; ++u)
        for (std::size_t i = 0; i < n; ++i) {
          SparseRow row;
          for (std::size_t v = 0; v < q; ++v)
            if (!on_classes(v, u).is_zero()) row.emplace_back(idx(v, i), on_classes(v, u));
          for (std::size_t j = 0; j < n; ++j)
            if (!(*on_values)(i, j).is_zero()) row.emplace_back(idx(u, j), -(*on_values)(i, j));
          sys.add_equation(std::move(row), Scalar::zero(f));
        }
  }

  // Each class u is represented by the basis tensor its section column picks.
  const Matrix left3 = exactlin::kron(lift, id) * S, right3 = exactlin::kron(id, lift) * S;
  for (int which = 0; which < 2; ++which) {
    const Matrix& t3 = which == 0 ? left3 : right3;
    for (std::size_t u = 0; u < q; ++u) {
      // sym[j] is coordinate j of the A (x) A value as a form in the unknowns.
      std::vector<SparseRow> sym(n * n);
      for (std::size_t flat = 0; flat < n * n * n; ++flat) {
        const Scalar& coef = t3(flat, u);
        if (coef.is_zero()) continue;
        const std::size_t a = flat / (n * n), b = flat / n % n, c = flat % n;
        const std::size_t pair = which == 0 ? b * n + c : a * n + b;
        for (std::size_t v = 0; v < q; ++v) {
          if (P(v, pair).is_zero()) continue;
          const Scalar w = coef * P(v, pair);
          for (std::size_t i = 0; i < n; ++i) sym[which == 0 ? a * n + i : i * n + c].emplace_back(idx(v, i), w);
        }
      }
      for (std::size_t w = 0; w < q; ++w) {
        SparseRow row;
        for (std::size_t j = 0; j < n * n; ++j) {
          if (P(w, j).is_zero()) continue;
          for (const auto& [col, v] : sym[j]) row.emplace_back(col, P(w, j) * v);
        }
        for (std::size_t i = 0; i < n; ++i)
          if (!delta(w, i).is_zero()) row.emplace_back(idx(u, i), -delta(w, i));
        sys.add_equation(std::move(row), Scalar::zero(f));
      }
    }
  }
  return sys;
}

inline Matrix coseparability_matrix_hgd(const HopfAlgebroidContext& ctx, std::span<const Scalar> x) {
  const std::size_t n = ctx.presentation().dim(), q = ctx.circ().dim();
  Matrix m(ctx.presentation().field(), n, q);
  for (std::size_t u = 0; u < q; ++u)
    for (std::size_t i = 0; i < n; ++i) m(i, u) = x[u * n + i];
  return m;
}

/// Dense check of the retraction identities with pi lifted to A (x) A as pi P.
inline bool is_coseparability_retraction_hgd(const HopfAlgebroidContext& ctx, const Matrix& pi) {
  const auto& h = ctx.presentation();
  const auto& A = h.total();
  const std::size_t n = h.dim();
  const Matrix& P = ctx.circ().projection();
  const Matrix& S = ctx.circ().section();
  const Matrix& lift = h.comult_lift();
  const Matrix id = Matrix::identity(h.field(), n);
  const Matrix piP = pi * P;
  if (pi * (P * lift) != id) return false;
  for (std::size_t x = 0; x < h.base_dim(); ++x) {
    const Matrix Ls = A.left_mult(h.src().column(x)), Lt = A.left_mult(h.tgt().column(x));
    if (piP * exactlin::kron(Ls, id) * S != Ls * pi) return false;
    if (piP * exactlin::kron(id, Lt) * S != Lt * pi) return false;
  }
  const Matrix middle = P * lift * pi;
  if (P * exactlin::kron(id, piP) * exactlin::kron(lift, id) * S != middle) return false;
  if (P * exactlin::kron(piP, id) * exactlin::kron(id, lift) * S != middle) return false;
  return true;
}

inline std::optional<HgdIntegral> solve_integral_hgd(const HopfAlgebroidContext& ctx, Side side, bool normalized) {
  const AffineSystem sys = integral_system_hgd(ctx, side, normalized);
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  Vector element = sol->particular;
  return HgdIntegral{side, normalized, std::move(element), std::move(*sol)};
}

inline std::optional<HgdIntegral> solve_integral_hgd(const HopfAlgebroidPresentation& h, Side side, bool normalized) {
  return solve_integral_hgd(HopfAlgebroidContext(h), side, normalized);
}

inline std::optional<HgdCointegral> solve_cointegral_hgd(const HopfAlgebroidContext& ctx, Side side, bool normalized) {
  const AffineSystem sys = cointegral_system_hgd(ctx, side, normalized);
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  Matrix map = cointegral_matrix(ctx.presentation(), sol->particular);
  return HgdCointegral{side, normalized, std::move(map), std::move(*sol)};
}

inline std::optional<HgdCointegral> solve_cointegral_hgd(const HopfAlgebroidPresentation& h, Side side,
                                                         bool normalized) {
  return solve_cointegral_hgd(HopfAlgebroidContext(h), side, normalized);
}

inline std::optional<HgdSeparabilitySection> solve_separability_hgd(const HopfAlgebroidContext& ctx) {
  auto sol = separability_system_hgd(ctx).solve();
  if (!sol) return std::nullopt;
  Matrix map = separability_matrix_hgd(ctx, sol->particular);
  if (!is_separability_section_hgd(ctx, map)) throw Error("separability solution failed re-verification");
  Vector element = map * ctx.presentation().total().unit();
  Vector lifted = ctx.bullet().section() * element;
  return HgdSeparabilitySection{std::move(map), std::move(element), std::move(lifted)};
}

inline std::optional<HgdSeparabilitySection> solve_separability_hgd(const HopfAlgebroidPresentation& h) {
  return solve_separability_hgd(HopfAlgebroidContext(h));
}

inline std::optional<HgdCoseparabilityRetraction> solve_coseparability_hgd(const HopfAlgebroidContext& ctx) {
  auto sol = coseparability_system_hgd(ctx).solve();
  if (!sol) return std::nullopt;
  Matrix map = coseparability_matrix_hgd(ctx, sol->particular);
  if (!is_coseparability_retraction_hgd(ctx, map)) throw Error("coseparability solution failed re-verification");
  return HgdCoseparabilityRetraction{std::move(map)};
}

inline std::optional<HgdCoseparabilityRetraction> solve_coseparability_hgd(const HopfAlgebroidPresentation& h) {
  return solve_coseparability_hgd(HopfAlgebroidContext(h));
}

}  // namespace mkit::hopfalgd

#endif  // MKIT_HOPFALGD_SOLVERS_HPP
