#ifndef MKIT_WEAKHOPF_INTEGRALS_HPP
#define MKIT_WEAKHOPF_INTEGRALS_HPP

#include "structure.hpp"

#include <optional>

namespace mkit::weakhopf {

using exactlin::AffineSolution;
using exactlin::AffineSystem;
using exactlin::SparseRow;

enum class Side { Left, Right };

/// Primed: the base-field conditions. Duoidal: primed plus the extra
/// condition quantified over a basis of the base algebra.
enum class Variant { Primed, Duoidal };

inline const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }
inline const char* to_string(Variant v) { return v == Variant::Primed ? "primed" : "duoidal"; }

struct IntegralSolution {
  Side side;
  Variant variant;
  bool normalized;
  AffineSolution solutions;
};

/// Cointegrals are covectors: solutions hold the values tau(e_0), ..., tau(e_{n-1}).
struct CointegralSolution {
  Side side;
  Variant variant;
  bool normalized;
  AffineSolution solutions;
};

/// A validated weak bialgebra together with its projections and base algebra,
/// so that several solvers can share one validation pass.
class WeakHopfContext {
 public:
  explicit WeakHopfContext(WeakHopfPresentation w)
      : w_(std::move(w)), proj_(projections(w_)), base_(detail::compute_base_algebra(w_, proj_)) {}

  const WeakHopfPresentation& presentation() const { return w_; }
  const ProjectionMaps& proj() const { return proj_; }
  const BaseAlgebraInfo& base() const { return base_; }

 private:
  WeakHopfPresentation w_;
  ProjectionMaps proj_;
  BaseAlgebraInfo base_;
};

inline AffineSystem integral_system(const WeakHopfContext& ctx, Side side, Variant variant, bool normalized) {
  const auto& w = ctx.presentation();
  const auto& A = w.algebra();
  const auto& p = ctx.proj();
  const std::size_t n = w.dim();
  AffineSystem sys(w.field(), n);

  for (std::size_t h = 0; h < n; ++h) {
    const Vector e = w.basis(h);
    if (side == Side::Left)  // h t = piL(h) t
      sys.add_homogeneous_block(A.left_mult(e) - A.left_mult(p.piL * e));
    else  // t h = t piR(h)
      sys.add_homogeneous_block(A.right_mult(e) - A.right_mult(p.piR * e));
  }
  if (normalized) {
    if (side == Side::Left)
      sys.add_block(p.piR_bar, A.unit());
    else
      sys.add_block(p.piR, A.unit());
  }
  if (variant == Variant::Duoidal) {
    const Subspace& R = ctx.base().subspace;
    for (std::size_t b = 0; b < R.dim(); ++b) {
      const Vector x = R.basis_vector(b);
      if (side == Side::Left)  // t piL(x) = t piR_bar(piL_bar(x))
        sys.add_homogeneous_block(A.right_mult(p.piL * x) - A.right_mult(p.piR_bar * (p.piL_bar * x)));
      else  // piL_bar(x) t = piR(piL(x)) t
        sys.add_homogeneous_block(A.left_mult(p.piL_bar * x) - A.left_mult(p.piR * (p.piL * x)));
    }
  }
  return sys;
}

inline AffineSystem cointegral_system(const WeakHopfContext& ctx, Side side, Variant variant, bool normalized) {
  const auto& w = ctx.presentation();
  const auto& C = w.coalgebra();
  const auto& p = ctx.proj();
  const std::size_t n = w.dim();
  const FieldSpec f = w.field();
  AffineSystem sys(f, n);

  // Left: h_1 tau(h_2) = piL(h_1) tau(h_2). Right: tau(h_1) h_2 = tau(h_1) piR(h_2).
  const Matrix& P = side == Side::Left ? p.piL : p.piR;
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t c = 0; c < n; ++c) {
      SparseRow row;
      for (const auto& t : C.terms(h)) {
        const std::size_t moved = side == Side::Left ? t.left : t.right;
        const std::size_t paired = side == Side::Left ? t.right : t.left;
        Scalar k = (moved == c ? Scalar::one(f) : Scalar::zero(f)) - P(c, moved);
        if (!k.is_zero()) row.emplace_back(paired, t.coef * k);
      }
      sys.add_equation(std::move(row), Scalar::zero(f));
    }
  if (normalized)  // tau . piL = eps  (left),  tau . piR = eps  (right)
    sys.add_block(P.transpose(), C.counit());
  if (variant == Variant::Duoidal) {
    const Subspace& R = ctx.base().subspace;
    for (std::size_t b = 0; b < R.dim(); ++b) {
      const Vector x = R.basis_vector(b);
      for (std::size_t h = 0; h < n; ++h) {
        const Vector e = w.basis(h);
        Vector coeffs;
        if (side == Side::Left)  // tau(x h) = tau(h piR(piL(x)))
          coeffs = exactlin::sub(w.multiply(x, e), w.multiply(e, p.piR * (p.piL * x)));
        else  // tau(h piL_bar(x)) = tau(piL(x) h)
          coeffs = exactlin::sub(w.multiply(e, p.piL_bar * x), w.multiply(p.piL * x, e));
        sys.add_equation(coeffs, Scalar::zero(f));
      }
    }
  }
  return sys;
}

inline std::optional<IntegralSolution> solve_integral(const WeakHopfContext& ctx, Side side, Variant variant,
                                                      bool normalized) {
  auto sol = integral_system(ctx, side, variant, normalized).solve();
  if (!sol) return std::nullopt;
  return IntegralSolution{side, variant, normalized, std::move(*sol)};
}

inline std::optional<IntegralSolution> solve_integral(const WeakHopfPresentation& w, Side side, Variant variant,
                                                      bool normalized) {
  return solve_integral(WeakHopfContext(w), side, variant, normalized);
}

inline std::optional<CointegralSolution> solve_cointegral(const WeakHopfContext& ctx, Side side, Variant variant,
                                                          bool normalized) {
  auto sol = cointegral_system(ctx, side, variant, normalized).solve();
  if (!sol) return std::nullopt;
  return CointegralSolution{side, variant, normalized, std::move(*sol)};
}

inline std::optional<CointegralSolution> solve_cointegral(const WeakHopfPresentation& w, Side side, Variant variant,
                                                          bool normalized) {
  return solve_cointegral(WeakHopfContext(w), side, variant, normalized);
}

/// Left: t = t' 1_1 piL(piR(1_2)). Right: t = piR(piL(1_1)) 1_2 t'.
/// The input must be a normalized primed integral; the output is checked
/// against the normalized duoidal system before it is returned.
inline Vector convert_integral(const WeakHopfContext& ctx, std::span<const Scalar> t_prime, Side side) {
  const auto& w = ctx.presentation();
  const auto& p = ctx.proj();
  const std::size_t n = w.dim();
  if (t_prime.size() != n) throw DimensionError("integral has the wrong length");
  if (!integral_system(ctx, side, Variant::Primed, true).satisfied_by(t_prime))
    throw Error(std::string("input is not a normalized primed ") + to_string(side) + " integral");
  Vector t = exactlin::zero_vector(w.field(), n);
  for (const auto& d : pair_terms(w.unit_coproduct(), n)) {
    Vector term;
    if (side == Side::Left)
      term = w.multiply(w.multiply(t_prime, w.basis(d.left)), p.piL * (p.piR * w.basis(d.right)));
    else
      term = w.multiply(w.multiply(p.piR * (p.piL * w.basis(d.left)), w.basis(d.right)), t_prime);
    t = exactlin::add(t, exactlin::scale(d.coef, term));
  }
  if (!integral_system(ctx, side, Variant::Duoidal, true).satisfied_by(t))
    throw Error(std::string("converted ") + to_string(side) + " integral fails the duoidal conditions");
  return t;
}

inline Vector convert_integral(const WeakHopfPresentation& w, std::span<const Scalar> t_prime, Side side) {
  return convert_integral(WeakHopfContext(w), t_prime, side);
}

/// Left: tau(h) = tau'(1_1 h piR(1_2)). Right: tau(h) = tau'(piL(1_1) h 1_2).
/// Verified against the normalized duoidal system like convert_integral.
inline Vector convert_cointegral(const WeakHopfContext& ctx, std::span<const Scalar> tau_prime, Side side) {
  const auto& w = ctx.presentation();
  const auto& p = ctx.proj();
  const std::size_t n = w.dim();
  if (tau_prime.size() != n) throw DimensionError("cointegral has the wrong length");
  if (!cointegral_system(ctx, side, Variant::Primed, true).satisfied_by(tau_prime))
    throw Error(std::string("input is not a normalized primed ") + to_string(side) + " cointegral");
  Vector tau = exactlin::zero_vector(w.field(), n);
  const auto d1 = pair_terms(w.unit_coproduct(), n);
  for (std::size_t h = 0; h < n; ++h)
    for (const auto& d : d1) {
      Vector arg;
      if (side == Side::Left)
        arg = w.multiply(w.multiply(w.basis(d.left), w.basis(h)), p.piR * w.basis(d.right));
      else
        arg = w.multiply(w.multiply(p.piL * w.basis(d.left), w.basis(h)), w.basis(d.right));
      tau[h].add_product(d.coef, exactlin::dot(tau_prime, arg));
    }
  if (!cointegral_system(ctx, side, Variant::Duoidal, true).satisfied_by(tau))
    throw Error(std::string("converted ") + to_string(side) + " cointegral fails the duoidal conditions");
  return tau;
}

inline Vector convert_cointegral(const WeakHopfPresentation& w, std::span<const Scalar> tau_prime, Side side) {
  return convert_cointegral(WeakHopfContext(w), tau_prime, side);
}

}  // namespace mkit::weakhopf

#endif  // MKIT_WEAKHOPF_INTEGRALS_HPP
