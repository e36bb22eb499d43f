#ifndef MKIT_FINALG_SEPARABILITY_HPP
#define MKIT_FINALG_SEPARABILITY_HPP

#include "presentation.hpp"

#include <optional>

namespace mkit::finalg {

using exactlin::AffineSystem;
using exactlin::SparseRow;

/// A bimodule section of the multiplication. `map` is dim^2 x dim;
/// `element` is the image of the unit, the separability element.
struct SeparabilitySection {
  Matrix map;
  Vector element;
};

/// A bicomodule retraction of the comultiplication, dim x dim^2.
struct CoseparabilityRetraction {
  Matrix map;
};

/// Unknown N(k, p, q): coefficient of e_p (x) e_q in nabla(e_k).
inline std::size_t nabla_index(std::size_t k, std::size_t p, std::size_t q, std::size_t n) { return (k * n + p) * n + q; }

/// Unknown P(i, j, l): coefficient of e_l in pi(e_i (x) e_j).
inline std::size_t pi_index(std::size_t i, std::size_t j, std::size_t l, std::size_t n) { return (i * n + j) * n + l; }

/// The linear system whose solutions are the bimodule sections nabla of mu:
///   (mu (x) 1)(1 (x) nabla) = nabla mu = (1 (x) mu)(nabla (x) 1),  mu nabla = id.
inline AffineSystem separability_system(const AlgebraPresentation& a) {
  const std::size_t n = a.dim();
  const FieldSpec f = a.field();
  AffineSystem sys(f, n * n * n);

  // by_left[i*n + r]: (p, c) with c = coefficient of e_r in e_i e_p.
  // by_right[j*n + q]: (p, c) with c = coefficient of e_q in e_p e_j.
  // by_output[l]: (p*n + q, c) with c = coefficient of e_l in e_p e_q.
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> by_left(n * n), by_right(n * n), by_output(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < n; ++p)
      for (const auto& [r, c] : a.basis_product(i, p)) {
        by_left[i * n + r].emplace_back(p, c);
        by_right[p * n + r].emplace_back(i, c);
        by_output[r].emplace_back(i * n + p, c);
      }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t q = 0; q < n; ++q) {
          SparseRow through;  // nabla(e_i e_j) at (r, q)
          for (const auto& [k, c] : a.basis_product(i, j)) through.emplace_back(nabla_index(k, r, q, n), -c);

          SparseRow left = through;  // e_i nabla(e_j)
          for (const auto& [p, c] : by_left[i * n + r]) left.emplace_back(nabla_index(j, p, q, n), c);
          sys.add_equation(std::move(left), Scalar::zero(f));

          SparseRow right = through;  // nabla(e_i) e_j
          for (const auto& [p, c] : by_right[j * n + q]) right.emplace_back(nabla_index(i, r, p, n), c);
          sys.add_equation(std::move(right), Scalar::zero(f));
        }

  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      SparseRow row;
      for (const auto& [pq, c] : by_output[l]) row.emplace_back(k * n * n + pq, c);
      sys.add_equation(std::move(row), k == l ? Scalar::one(f) : Scalar::zero(f));
    }
  return sys;
}

/// Unpacks a solution vector of separability_system into the dim^2 x dim matrix of nabla.
inline Matrix nabla_matrix(FieldSpec f, std::size_t n, std::span<const Scalar> x) {
  Matrix m(f, n * n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t pq = 0; pq < n * n; ++pq) m(pq, k) = x[k * n * n + pq];
  return m;
}

/// Checks the defining identities of a separability section directly on the
/// matrix, independently of the assembled system.
inline bool is_separability_section(const AlgebraPresentation& a, const Matrix& nabla) {
  const std::size_t n = a.dim();
  const FieldSpec f = a.field();
  if (nabla.rows() != n * n || nabla.cols() != n) return false;
  const Matrix mu = a.mult_matrix();
  const Matrix id = Matrix::identity(f, n);
  if (!(mu * nabla == id)) return false;
  const Matrix through = nabla * mu;
  return kron(mu, id) * kron(id, nabla) == through && kron(id, mu) * kron(nabla, id) == through;
}

inline std::optional<SeparabilitySection> solve_separability(const AlgebraPresentation& a) {
  require_valid(check_algebra(a));
  auto sol = separability_system(a).solve();
  if (!sol) return std::nullopt;
  SeparabilitySection s;
  s.map = nabla_matrix(a.field(), a.dim(), sol->particular);
  if (!is_separability_section(a, s.map)) throw Error("internal: separability solution failed re-verification");
  s.element = s.map * a.unit();
  return s;
}

/// The linear system whose solutions are the bicomodule retractions pi of Delta:
///   (1 (x) pi)(Delta (x) 1) = Delta pi = (pi (x) 1)(1 (x) Delta),  pi Delta = id.
inline AffineSystem coseparability_system(const CoalgebraPresentation& c) {
  const std::size_t n = c.dim();
  const FieldSpec f = c.field();
  AffineSystem sys(f, n * n * n);

  // by_pair[a*n + b]: (l, coef) with coef = coefficient of e_a (x) e_b in Delta(e_l).
  // by_left[i*n + a]: (c, coef) from Delta(e_i) = sum coef e_a (x) e_c.
  // by_right[j*n + b]: (c, coef) from Delta(e_j) = sum coef e_c (x) e_b.
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> by_pair(n * n), by_left(n * n), by_right(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : c.terms(i)) {
      by_pair[t.left * n + t.right].emplace_back(i, t.coef);
      by_left[i * n + t.left].emplace_back(t.right, t.coef);
      by_right[i * n + t.right].emplace_back(t.left, t.coef);
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          SparseRow through;  // Delta(pi(e_i (x) e_j)) at (a, b)
          for (const auto& [l, coef] : by_pair[a * n + b]) through.emplace_back(pi_index(i, j, l, n), -coef);

          SparseRow left = through;  // (1 (x) pi)(Delta(e_i) (x) e_j)
          for (const auto& [k, coef] : by_left[i * n + a]) left.emplace_back(pi_index(k, j, b, n), coef);
          sys.add_equation(std::move(left), Scalar::zero(f));

          SparseRow right = through;  // (pi (x) 1)(e_i (x) Delta(e_j))
          for (const auto& [k, coef] : by_right[j * n + b]) right.emplace_back(pi_index(i, k, a, n), coef);
          sys.add_equation(std::move(right), Scalar::zero(f));
        }

  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      SparseRow row;
      for (const auto& t : c.terms(k)) row.emplace_back(pi_index(t.left, t.right, l, n), t.coef);
      sys.add_equation(std::move(row), k == l ? Scalar::one(f) : Scalar::zero(f));
    }
  return sys;
}

inline Matrix pi_matrix(FieldSpec f, std::size_t n, std::span<const Scalar> x) {
  Matrix m(f, n, n * n);
  for (std::size_t ij = 0; ij < n * n; ++ij)
    for (std::size_t l = 0; l < n; ++l) m(l, ij) = x[ij * n + l];
  return m;
}

inline bool is_coseparability_retraction(const CoalgebraPresentation& c, const Matrix& pi) {
  const std::size_t n = c.dim();
  const FieldSpec f = c.field();
  if (pi.rows() != n || pi.cols() != n * n) return false;
  const Matrix delta = c.comult_matrix();
  const Matrix id = Matrix::identity(f, n);
  if (!(pi * delta == id)) return false;
  const Matrix through = delta * pi;
  return kron(id, pi) * kron(delta, id) == through && kron(pi, id) * kron(id, delta) == through;
}

inline std::optional<CoseparabilityRetraction> solve_coseparability(const CoalgebraPresentation& c) {
  require_valid(check_coalgebra(c));
  auto sol = coseparability_system(c).solve();
  if (!sol) return std::nullopt;
  CoseparabilityRetraction r{pi_matrix(c.field(), c.dim(), sol->particular)};
  if (!is_coseparability_retraction(c, r.map)) throw Error("internal: coseparability solution failed re-verification");
  return r;
}

}  // namespace mkit::finalg

#endif  // MKIT_FINALG_SEPARABILITY_HPP
