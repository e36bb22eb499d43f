#ifndef MKIT_WEAKHOPF_STRUCTURE_HPP
#define MKIT_WEAKHOPF_STRUCTURE_HPP

#include "presentation.hpp"

namespace mkit::weakhopf {

/// The four idempotents, as dim x dim matrices (column j = image of e_j).
/// Writing Delta(1) = 1_1 (x) 1_2:
///   piR(h) = 1_1 eps(h 1_2)       piR_bar(h) = 1_1 eps(1_2 h)
///   piL(h) = eps(1_1 h) 1_2       piL_bar(h) = eps(h 1_1) 1_2
struct ProjectionMaps {
  Matrix piR, piR_bar, piL, piL_bar;
};

namespace detail {

inline ProjectionMaps compute_projections(const WeakHopfPresentation& w) {
  const std::size_t n = w.dim();
  const FieldSpec f = w.field();
  const Vector E = counit_of_products(w);
  ProjectionMaps p{Matrix(f, n, n), Matrix(f, n, n), Matrix(f, n, n), Matrix(f, n, n)};
  for (const auto& t : pair_terms(w.unit_coproduct(), n))
    for (std::size_t h = 0; h < n; ++h) {
      p.piR(t.left, h).add_product(t.coef, E[h * n + t.right]);
      p.piR_bar(t.left, h).add_product(t.coef, E[t.right * n + h]);
      p.piL(t.right, h).add_product(t.coef, E[t.left * n + h]);
      p.piL_bar(t.right, h).add_product(t.coef, E[h * n + t.left]);
    }
  return p;
}

}  // namespace detail

/// Validates w, then computes the projections and checks they are idempotent.
inline ProjectionMaps projections(const WeakHopfPresentation& w) {
  require_valid(check_weak_bialgebra(w));
  ProjectionMaps p = detail::compute_projections(w);
  AxiomReport report;
  const std::pair<const char*, const Matrix*> named[] = {
      {"piR", &p.piR}, {"piR_bar", &p.piR_bar}, {"piL", &p.piL}, {"piL_bar", &p.piL_bar}};
  for (const auto& [name, m] : named)
    if (!(*m * *m == *m)) report.fail(std::string(name) + " is idempotent", {});
  if (!report.ok()) throw InvalidStructure("internal inconsistency in a validated weak bialgebra", report);
  return p;
}

/// The base algebra R = im(piR) with its Frobenius-separability data.
/// induced_mult is taken in the echelon basis of `subspace`;
/// frobenius_functional lists eps on that basis.
struct BaseAlgebraInfo {
  Subspace subspace;
  Subspace left_subalgebra;  // im(piL)
  Tensor3 induced_mult;
  Vector frobenius_element;
  Vector frobenius_functional;
};

namespace detail {

inline bool columns_in(const Subspace& s, const Matrix& m) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!s.contains(m.column(j))) return false;
  return true;
}

/// Checks that `forward` and `backward` restrict to mutually inverse
/// anti-isomorphisms between `from` and `to`.
inline void check_anti_isomorphism(const WeakHopfPresentation& w, const Subspace& from, const Subspace& to,
                                   const Matrix& forward, const Matrix& backward, const std::string& name,
                                   AxiomReport& report) {
  for (std::size_t i = 0; i < from.dim(); ++i) {
    const Vector x = from.basis_vector(i);
    const Vector fx = forward * x;
    if (!to.contains(fx)) report.fail(name + " maps into the opposite subalgebra", {"b" + std::to_string(i)});
    if (backward * fx != x) report.fail(name + " restrictions are mutually inverse", {"b" + std::to_string(i)});
    for (std::size_t j = 0; j < from.dim(); ++j) {
      const Vector y = from.basis_vector(j);
      if (forward * w.multiply(x, y) != w.multiply(forward * y, fx))
        report.fail(name + " is anti-multiplicative", {"b" + std::to_string(i), "b" + std::to_string(j)});
    }
  }
}

inline BaseAlgebraInfo compute_base_algebra(const WeakHopfPresentation& w, const ProjectionMaps& p) {
  const std::size_t n = w.dim();
  const FieldSpec f = w.field();
  AxiomReport report;
  BaseAlgebraInfo info;
  info.subspace = Subspace::column_space(p.piR);
  info.left_subalgebra = Subspace::column_space(p.piL);
  const Subspace& R = info.subspace;
  const Subspace& L = info.left_subalgebra;

  if (!(Subspace::column_space(p.piR_bar) == R)) report.fail("im(piR) = im(piR_bar)", {});
  if (!(Subspace::column_space(p.piL_bar) == L)) report.fail("im(piL) = im(piL_bar)", {});
  if (!R.contains(w.algebra().unit())) report.fail("base algebra contains the unit", {"1"});

  const std::size_t r = R.dim();
  info.induced_mult = Tensor3(f, r, r, r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      const Vector prod = w.multiply(R.basis_vector(a), R.basis_vector(b));
      if (!R.contains(prod)) {
        report.fail("base algebra is closed under multiplication", {"b" + std::to_string(a), "b" + std::to_string(b)});
        continue;
      }
      const Vector c = R.coordinates(prod);
      for (std::size_t k = 0; k < r; ++k) info.induced_mult(a, b, k) = c[k];
    }

  for (std::size_t a = 0; a < L.dim(); ++a)
    for (std::size_t b = 0; b < r; ++b) {
      const Vector l = L.basis_vector(a), x = R.basis_vector(b);
      if (w.multiply(l, x) != w.multiply(x, l))
        report.fail("im(piL) commutes with the base algebra", {"l" + std::to_string(a), "b" + std::to_string(b)});
    }

  check_anti_isomorphism(w, L, R, p.piR, p.piL_bar, "piR/piL_bar", report);
  check_anti_isomorphism(w, R, L, p.piL_bar, p.piR, "piL_bar/piR", report);
  check_anti_isomorphism(w, R, L, p.piL, p.piR_bar, "piL/piR_bar", report);
  check_anti_isomorphism(w, L, R, p.piR_bar, p.piL, "piR_bar/piL", report);

  // Frobenius element 1_1 (x) piR(1_2), as an n x n coefficient matrix F(a, b).
  info.frobenius_element = exactlin::zero_vector(f, n * n);
  for (const auto& t : pair_terms(w.unit_coproduct(), n))
    for (std::size_t b = 0; b < n; ++b)
      info.frobenius_element[t.left * n + b].add_product(t.coef, p.piR(b, t.right));
  const Matrix F(f, n, n, info.frobenius_element);
  if (!detail::columns_in(R, F) || !detail::columns_in(R, F.transpose()))
    report.fail("Frobenius element lies in R (x) R", {});

  for (std::size_t a = 0; a < r; ++a) info.frobenius_functional.push_back(w.counit(R.basis_vector(a)));

  Vector left_counit = exactlin::zero_vector(f, n), right_counit = left_counit;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (F(a, b).is_zero()) continue;
      left_counit[b].add_product(F(a, b), w.coalgebra().counit()[a]);
      right_counit[a].add_product(F(a, b), w.coalgebra().counit()[b]);
    }
  if (left_counit != w.algebra().unit()) report.fail("sum psi(e_i) f_i = 1", {});
  if (right_counit != w.algebra().unit()) report.fail("sum e_i psi(f_i) = 1", {});
  if (w.algebra().mult_matrix() * info.frobenius_element != w.algebra().unit())
    report.fail("sum e_i f_i = 1", {});
  for (std::size_t b = 0; b < r; ++b) {
    const Vector x = R.basis_vector(b);
    Vector lhs = exactlin::zero_vector(f, n * n), rhs = lhs;
    for (const auto& t : pair_terms(info.frobenius_element, n)) {
      const Vector xe = w.multiply(x, w.basis(t.left));
      const Vector fx = w.multiply(w.basis(t.right), x);
      for (std::size_t k = 0; k < n; ++k) {
        if (!xe[k].is_zero()) lhs[k * n + t.right].add_product(t.coef, xe[k]);
        if (!fx[k].is_zero()) rhs[t.left * n + k].add_product(t.coef, fx[k]);
      }
    }
    if (lhs != rhs) report.fail("x e_i (x) f_i = e_i (x) f_i x", {"b" + std::to_string(b)});
  }

  if (!report.ok()) throw InvalidStructure("base algebra verification failed", report);
  return info;
}

}  // namespace detail

inline BaseAlgebraInfo base_algebra(const WeakHopfPresentation& w) {
  return detail::compute_base_algebra(w, projections(w));
}

/// The two antipode diagrams are required; anti-multiplicativity,
/// anti-comultiplicativity, sigma(1) = 1, eps sigma = eps and
/// sigma(h_1) h_2 sigma(h_3) = sigma(h) are reported as warnings.
inline AxiomReport check_antipode(const WeakHopfPresentation& w) {
  if (!w.has_antipode()) throw Error("presentation has no antipode");
  AxiomReport report;
  const std::size_t n = w.dim();
  const FieldSpec f = w.field();
  const ProjectionMaps p = detail::compute_projections(w);
  const Matrix& S = *w.antipode();
  const auto& C = w.coalgebra();
  const auto& L = w.labels();

  std::vector<Vector> sigma(n);
  for (std::size_t i = 0; i < n; ++i) sigma[i] = S.column(i);

  for (std::size_t h = 0; h < n; ++h) {
    Vector left = exactlin::zero_vector(f, n), right = left;
    for (const auto& t : C.terms(h)) {
      left = exactlin::add(left, exactlin::scale(t.coef, w.multiply(w.basis(t.left), sigma[t.right])));
      right = exactlin::add(right, exactlin::scale(t.coef, w.multiply(sigma[t.left], w.basis(t.right))));
    }
    if (left != p.piL.column(h)) report.fail("mu(1 x sigma)Delta = piL", {L[h]}, describe(left, L));
    if (right != p.piR.column(h)) report.fail("mu(sigma x 1)Delta = piR", {L[h]}, describe(right, L));
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (S * w.multiply(w.basis(i), w.basis(j)) != w.multiply(sigma[j], sigma[i]))
        report.warn("sigma is an algebra anti-homomorphism", {L[i], L[j]});
  if (S * w.algebra().unit() != w.algebra().unit()) report.warn("sigma(1) = 1", {"1"});

  const Matrix SS = kron(S, S);
  const Matrix flip = exactlin::flip(f, n, n);
  const Matrix delta = C.comult_matrix();
  for (std::size_t h = 0; h < n; ++h) {
    if (delta * sigma[h] != SS * (flip * delta.column(h)))
      report.warn("sigma is a coalgebra anti-homomorphism", {L[h]});
    if (!(w.counit(sigma[h]) == C.counit()[h])) report.warn("eps sigma = eps", {L[h]});
    Vector third = exactlin::zero_vector(f, n);
    for (const auto& t : C.terms(h))
      for (const auto& u : C.terms(t.right)) {
        const Vector prod = w.multiply(w.multiply(sigma[t.left], w.basis(u.left)), sigma[u.right]);
        third = exactlin::add(third, exactlin::scale(t.coef * u.coef, prod));
      }
    if (third != sigma[h]) report.warn("sigma(h_1) h_2 sigma(h_3) = sigma(h)", {L[h]});
  }
  return report;
}

}  // namespace mkit::weakhopf

#endif  // MKIT_WEAKHOPF_STRUCTURE_HPP
