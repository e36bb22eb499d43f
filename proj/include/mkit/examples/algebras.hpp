#ifndef MKIT_EXAMPLES_ALGEBRAS_HPP
#define MKIT_EXAMPLES_ALGEBRAS_HPP

#include "../weakhopf/presentation.hpp"
#include "groupoids.hpp"

#include <random>

namespace mkit::examples {

using exactlin::FieldSpec;
using exactlin::Matrix;
using exactlin::Scalar;
using exactlin::Tensor3;
using exactlin::Vector;
using finalg::AlgebraPresentation;
using finalg::CoalgebraPresentation;
using weakhopf::WeakHopfPresentation;

/// Delta(b) = b (x) b and eps(b) = 1 on every basis element.
inline CoalgebraPresentation grouplike_coalgebra(FieldSpec f, std::vector<std::string> labels) {
  const std::size_t n = labels.size();
  Tensor3 d(f, n, n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i, i) = Scalar::one(f);
  return CoalgebraPresentation(f, std::move(labels), std::move(d), Vector(n, Scalar::one(f)));
}

/// kG: the Cayley table as multiplication, grouplike coalgebra, sigma(g) = g^-1.
inline WeakHopfPresentation group_algebra(const GroupPresentation& g, FieldSpec f) {
  const std::size_t n = g.order();
  Tensor3 m(f, n, n, n);
  Matrix s(f, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) m(a, b, g.multiply(a, b)) = Scalar::one(f);
    s(g.inverse(a), a) = Scalar::one(f);
  }
  AlgebraPresentation alg(f, g.labels(), std::move(m), exactlin::unit_vector(f, n, g.identity()));
  return WeakHopfPresentation(std::move(alg), grouplike_coalgebra(f, g.labels()), std::move(s));
}

/// k^G on the basis of point masses d_g: pointwise product,
/// Delta(d_g) = sum_{hk=g} d_h (x) d_k, eps(d_g) = [g = e], sigma(d_g) = d_{g^-1}.
inline WeakHopfPresentation dual_group_algebra(const GroupPresentation& g, FieldSpec f) {
  const std::size_t n = g.order();
  std::vector<std::string> labels;
  for (const auto& l : g.labels()) labels.push_back("d_" + l);
  Tensor3 m(f, n, n, n), d(f, n, n, n);
  Matrix s(f, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    m(a, a, a) = Scalar::one(f);
    s(g.inverse(a), a) = Scalar::one(f);
    for (std::size_t b = 0; b < n; ++b) d(g.multiply(a, b), a, b) = Scalar::one(f);
  }
  AlgebraPresentation alg(f, labels, std::move(m), Vector(n, Scalar::one(f)));
  CoalgebraPresentation coalg(f, labels, std::move(d), exactlin::unit_vector(f, n, g.identity()));
  return WeakHopfPresentation(std::move(alg), std::move(coalg), std::move(s));
}

/// k[groupoid]: f h = f o h when composable and 0 otherwise, 1 = sum of the
/// identities, grouplike coalgebra, sigma(f) = f^-1.
inline WeakHopfPresentation groupoid_algebra(const GroupoidPresentation& g, FieldSpec f) {
  const std::size_t n = g.morphism_count();
  Tensor3 m(f, n, n, n);
  Matrix s(f, n, n);
  Vector unit = exactlin::zero_vector(f, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (auto c = g.compose(a, b)) m(a, b, *c) = Scalar::one(f);
    s(g.inverse(a), a) = Scalar::one(f);
  }
  for (std::size_t x = 0; x < g.object_count(); ++x) unit[g.identity(x)] = Scalar::one(f);
  AlgebraPresentation alg(f, g.labels(), std::move(m), std::move(unit));
  return WeakHopfPresentation(std::move(alg), grouplike_coalgebra(f, g.labels()), std::move(s));
}

/// k[x]/(x^m) on the basis 1, x, ..., x^(m-1).
inline AlgebraPresentation truncated_polynomial_algebra(FieldSpec f, std::size_t m) {
  if (m == 0) throw Error("truncated polynomial algebra needs m >= 1");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) labels.push_back(i == 0 ? "1" : power_label("x", i));
  Tensor3 t(f, m, m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; i + j < m; ++j) t(i, j, i + j) = Scalar::one(f);
  return AlgebraPresentation(f, std::move(labels), std::move(t), exactlin::unit_vector(f, m, 0));
}

/// k^m with orthogonal idempotents p1, ..., pm.
inline AlgebraPresentation split_algebra(FieldSpec f, std::size_t m) {
  if (m == 0) throw Error("product algebra needs m >= 1");
  std::vector<std::string> labels;
  Tensor3 t(f, m, m, m);
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back("p" + std::to_string(i + 1));
    t(i, i, i) = Scalar::one(f);
  }
  return AlgebraPresentation(f, std::move(labels), std::move(t), Vector(m, Scalar::one(f)));
}

inline AlgebraPresentation ground_field_algebra(FieldSpec f) { return truncated_polynomial_algebra(f, 1); }

/// Names understood: "k", "k[x]/(x^<m>)", "k^<m>".
inline AlgebraPresentation named_commutative_algebra(const std::string& name, FieldSpec f) {
  auto count = [&](const std::string& digits) {
    if (digits.empty() || digits.size() > 2 || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("unknown commutative algebra: " + name);
    return static_cast<std::size_t>(std::stoul(digits));
  };
  if (name == "k") return ground_field_algebra(f);
  const std::string poly = "k[x]/(x^";
  if (name.rfind(poly, 0) == 0 && name.back() == ')')
    return truncated_polynomial_algebra(f, count(name.substr(poly.size(), name.size() - poly.size() - 1)));
  if (name.rfind("k^", 0) == 0) return split_algebra(f, count(name.substr(2)));
  throw ParseError("unknown commutative algebra: " + name);
}

/// One structure-constant entry of a weak Hopf presentation. Components are
/// numbered mult, unit, comult, counit, antipode, and `index` is the flat
/// row-major position inside the component.
struct Mutation {
  enum Component { Mult, Unit, Comult, Counit, Antipode };
  Component component;
  std::size_t index;
  Scalar value;
  std::uint64_t seed_used;
};

namespace detail {

inline Scalar random_scalar(FieldSpec f, std::mt19937_64& rng) {
  if (f.is_rational()) return Scalar(f, static_cast<long>(rng() % 5) - 2);
  return Scalar(f, static_cast<long>(rng() % f.characteristic()));
}

inline const Scalar& entry(const WeakHopfPresentation& w, Mutation::Component c, std::size_t i) {
  switch (c) {
    case Mutation::Mult: return w.algebra().mult().entries()[i];
    case Mutation::Unit: return w.algebra().unit()[i];
    case Mutation::Comult: return w.coalgebra().comult().entries()[i];
    case Mutation::Counit: return w.coalgebra().counit()[i];
    case Mutation::Antipode: return w.antipode()->entries()[i];
  }
  throw Error("bad mutation component");
}

}  // namespace detail

/// Picks the entry and new value for `seed`. A draw that reproduces the
/// current value, or that would make the unit zero, is discarded and redrawn
/// from seed + 1.
inline Mutation choose_mutation(const WeakHopfPresentation& w, std::uint64_t seed) {
  const std::size_t n = w.dim();
  const std::size_t sizes[] = {n * n * n, n, n * n * n, n, w.has_antipode() ? n * n : 0};
  const std::size_t total = sizes[0] + sizes[1] + sizes[2] + sizes[3] + sizes[4];
  for (std::uint64_t s = seed;; ++s) {
    std::mt19937_64 rng(s);
    std::size_t flat = rng() % total;
    int c = 0;
    while (flat >= sizes[c]) flat -= sizes[c++];
    const auto component = static_cast<Mutation::Component>(c);
    Scalar value = detail::random_scalar(w.field(), rng);
    if (value == detail::entry(w, component, flat)) continue;
    if (component == Mutation::Unit && value.is_zero()) {
      Vector unit = w.algebra().unit();
      unit[flat] = value;
      if (exactlin::is_zero(unit)) continue;
    }
    return {component, flat, value, s};
  }
}

inline WeakHopfPresentation apply_mutation(const WeakHopfPresentation& w, const Mutation& m) {
  Tensor3 mult = w.algebra().mult(), comult = w.coalgebra().comult();
  Vector unit = w.algebra().unit(), counit = w.coalgebra().counit();
  std::optional<Matrix> antipode = w.antipode();
  switch (m.component) {
    case Mutation::Mult: mult.entries()[m.index] = m.value; break;
    case Mutation::Unit: unit[m.index] = m.value; break;
    case Mutation::Comult: comult.entries()[m.index] = m.value; break;
    case Mutation::Counit: counit[m.index] = m.value; break;
    case Mutation::Antipode: (*antipode)(m.index / w.dim(), m.index % w.dim()) = m.value; break;
  }
  if (exactlin::is_zero(unit)) throw Error("mutation zeroes the unit");
  return WeakHopfPresentation(AlgebraPresentation(w.field(), w.labels(), std::move(mult), std::move(unit)),
                              CoalgebraPresentation(w.field(), w.labels(), std::move(comult), std::move(counit)),
                              std::move(antipode));
}

/// Deterministic single-entry perturbation; dimensions never change.
inline WeakHopfPresentation mutate(const WeakHopfPresentation& w, std::uint64_t seed) {
  return apply_mutation(w, choose_mutation(w, seed));
}

}  // namespace mkit::examples

#endif  // MKIT_EXAMPLES_ALGEBRAS_HPP
