#ifndef MKIT_HOPFCAT_SOLVERS_HPP
#define MKIT_HOPFCAT_SOLVERS_HPP

#include "../finalg/separability.hpp"
#include "../weakhopf/maschke.hpp"
#include "presentation.hpp"

#include <optional>

namespace mkit::hopfcat {

using exactlin::AffineSolution;
using exactlin::AffineSystem;
using exactlin::SparseRow;
using weakhopf::Side;

/// theta[x * |X| + y] in a(x, y).
struct IntegralFamily {
  Side side;
  std::vector<Vector> theta;
  AffineSolution solutions;
};

/// theta[x] is a covector on a(x, x).
struct RetractionFamily {
  Side side;
  std::vector<Vector> theta;
};

/// partial[(x * |X| + v) * |X| + y]: a(x,y) -> a(x,v) (x) a(v,y).
struct SeparabilityFamily {
  std::vector<Matrix> partial;
};

/// coseparable[x * |X| + y] for each hom coalgebra.
struct HomCoseparability {
  std::vector<bool> coseparable;
  bool all = true;
};

/// Retraction theta_x of eta_x as a comodule map, one system per object.
/// Left: (1 (x) theta_x) delta = eta_x theta_x; right: (theta_x (x) 1) delta = eta_x theta_x;
/// both with theta_x(eta_x) = 1.
inline AffineSystem retraction_system(const HopfCategoryPresentation& h, std::size_t x, Side side) {
  const auto& c = h.hom(x, x);
  const FieldSpec f = h.field();
  const std::size_t d = c.dim();
  const Vector& eta = h.unit(x);
  AffineSystem sys(f, d);
  for (std::size_t b = 0; b < d; ++b) {
    // Row i: coefficient of e_i in the difference, as a form in theta.
    std::vector<SparseRow> rows(d);
    for (const auto& t : c.terms(b)) {
      if (side == Side::Left)
        rows[t.left].emplace_back(t.right, t.coef);
      else
        rows[t.right].emplace_back(t.left, t.coef);
    }
    for (std::size_t i = 0; i < d; ++i)
      if (!eta[i].is_zero()) rows[i].emplace_back(b, -eta[i]);
    for (auto& row : rows) sys.add_equation(std::move(row), Scalar::zero(f));
  }
  sys.add_equation(eta, Scalar::one(f));
  return sys;
}

inline std::optional<RetractionFamily> solve_retraction_family(const HopfCategoryPresentation& h, Side side) {
  require_valid(check_hopf_category(h));
  RetractionFamily fam{side, {}};
  for (std::size_t x = 0; x < h.object_count(); ++x) {
    auto sol = retraction_system(h, x, side).solve();
    if (!sol) return std::nullopt;
    fam.theta.push_back(sol->particular);
  }
  return fam;
}

inline HomCoseparability check_hom_coseparability(const HopfCategoryPresentation& h) {
  require_valid(check_hopf_category(h));
  HomCoseparability out;
  for (const auto& c : h.homs()) {
    const bool ok = finalg::solve_coseparability(c).has_value();
    out.coseparable.push_back(ok);
    out.all = out.all && ok;
  }
  return out;
}

namespace detail {

/// Start of each hom's block in the concatenated unknown vector.
inline std::vector<std::size_t> hom_offsets(const HopfCategoryPresentation& h) {
  std::vector<std::size_t> off;
  std::size_t total = 0;
  for (const auto& c : h.homs()) {
    off.push_back(total);
    total += c.dim();
  }
  off.push_back(total);
  return off;
}

/// Start of each partial_{x,v,y} block; entry (p, b) of the block is at
/// offset + p * dim a(x,y) + b.
inline std::vector<std::size_t> partial_offsets(const HopfCategoryPresentation& h) {
  const std::size_t n = h.object_count();
  std::vector<std::size_t> off;
  std::size_t total = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t y = 0; y < n; ++y) {
        off.push_back(total);
        total += h.dim(x, v) * h.dim(v, y) * h.dim(x, y);
      }
  off.push_back(total);
  return off;
}

}  // namespace detail

/// All theta_{x,y} at once. Left: mu_{x,y,z}(b (x) theta_{y,z}) = eps(b) theta_{x,z}
/// for b in a(x,y); right: mu_{x,y,z}(theta_{x,y} (x) c) = eps(c) theta_{x,z} for
/// c in a(y,z). Always normalized: eps(theta_{x,y}) = 1.
inline AffineSystem integral_family_system(const HopfCategoryPresentation& h, Side side) {
  const std::size_t n = h.object_count();
  const FieldSpec f = h.field();
  const auto off = detail::hom_offsets(h);
  auto at = [&](std::size_t x, std::size_t y, std::size_t i) { return off[x * n + y] + i; };
  AffineSystem sys(f, off.back());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const Matrix& mu = h.comp(x, y, z);
        const std::size_t dxy = h.dim(x, y), dyz = h.dim(y, z), dxz = h.dim(x, z);
        const std::size_t fixed_dim = side == Side::Left ? dxy : dyz;
        for (std::size_t b = 0; b < fixed_dim; ++b) {
          const Scalar& eps = side == Side::Left ? h.hom(x, y).counit()[b] : h.hom(y, z).counit()[b];
          std::vector<SparseRow> rows(dxz);
          const std::size_t other_dim = side == Side::Left ? dyz : dxy;
          for (std::size_t c = 0; c < other_dim; ++c) {
            const std::size_t col = side == Side::Left ? b * dyz + c : c * dyz + b;
            const std::size_t unknown = side == Side::Left ? at(y, z, c) : at(x, y, c);
            for (std::size_t r = 0; r < dxz; ++r)
              if (!mu(r, col).is_zero()) rows[r].emplace_back(unknown, mu(r, col));
          }
          if (!eps.is_zero())
            for (std::size_t r = 0; r < dxz; ++r) rows[r].emplace_back(at(x, z, r), -eps);
          for (auto& row : rows) sys.add_equation(std::move(row), Scalar::zero(f));
        }
      }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      SparseRow row;
      const auto& eps = h.hom(x, y).counit();
      for (std::size_t i = 0; i < eps.size(); ++i)
        if (!eps[i].is_zero()) row.emplace_back(at(x, y, i), eps[i]);
      sys.add_equation(std::move(row), Scalar::one(f));
    }
  return sys;
}

inline std::optional<IntegralFamily> solve_integral_family(const HopfCategoryPresentation& h, Side side) {
  require_valid(check_hopf_category(h));
  auto sol = integral_family_system(h, side).solve();
  if (!sol) return std::nullopt;
  const auto off = detail::hom_offsets(h);
  std::vector<Vector> theta;
  for (std::size_t k = 0; k + 1 < off.size(); ++k)
    theta.emplace_back(sol->particular.begin() + static_cast<long>(off[k]),
                       sol->particular.begin() + static_cast<long>(off[k + 1]));
  return IntegralFamily{side, std::move(theta), std::move(*sol)};
}

/// For all x, y, v, z and basis tensors b (x) c of a(x,y) (x) a(y,z):
///   (1 (x) mu_{v,y,z})(partial_{x,v,y}(b) (x) c) = partial_{x,v,z}(mu_{x,y,z}(b (x) c))
///   (mu_{x,y,v} (x) 1)(b (x) partial_{y,v,z}(c)) = partial_{x,v,z}(mu_{x,y,z}(b (x) c))
/// and mu_{x,v,y} partial_{x,v,y} = id.
inline AffineSystem separability_family_system(const HopfCategoryPresentation& h) {
  const std::size_t n = h.object_count();
  const FieldSpec f = h.field();
  const auto off = detail::partial_offsets(h);
  auto block = [&](std::size_t x, std::size_t v, std::size_t y) { return off[(x * n + v) * n + y]; };
  AffineSystem sys(f, off.back());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t z = 0; z < n; ++z) {
          const std::size_t dxy = h.dim(x, y), dyz = h.dim(y, z), dxz = h.dim(x, z);
          const std::size_t dxv = h.dim(x, v), dvy = h.dim(v, y), dvz = h.dim(v, z), dyv = h.dim(y, v);
          const Matrix& mu_xyz = h.comp(x, y, z);
          const Matrix& mu_vyz = h.comp(v, y, z);
          const Matrix& mu_xyv = h.comp(x, y, v);
          const std::size_t o_xvy = block(x, v, y), o_xvz = block(x, v, z), o_yvz = block(y, v, z);
          for (std::size_t b = 0; b < dxy; ++b)
            for (std::size_t c = 0; c < dyz; ++c) {
              // rows indexed by the output coordinate p * dvz + r
              std::vector<SparseRow> top(dxv * dvz), side(dxv * dvz);
              for (std::size_t s = 0; s < dxz; ++s) {
                const Scalar& m = mu_xyz(s, b * dyz + c);
                if (m.is_zero()) continue;
                for (std::size_t pr = 0; pr < dxv * dvz; ++pr) {
                  top[pr].emplace_back(o_xvz + pr * dxz + s, -m);
                  side[pr].emplace_back(o_xvz + pr * dxz + s, -m);
                }
              }
              for (std::size_t p = 0; p < dxv; ++p)
                for (std::size_t q = 0; q < dvy; ++q)
                  for (std::size_t r = 0; r < dvz; ++r) {
                    const Scalar& m = mu_vyz(r, q * dyz + c);
                    if (!m.is_zero()) top[p * dvz + r].emplace_back(o_xvy + (p * dvy + q) * dxy + b, m);
                  }
              for (std::size_t q = 0; q < dyv; ++q)
                for (std::size_t p = 0; p < dxv; ++p) {
                  const Scalar& m = mu_xyv(p, b * dyv + q);
                  if (m.is_zero()) continue;
                  for (std::size_t r = 0; r < dvz; ++r)
                    side[p * dvz + r].emplace_back(o_yvz + (q * dvz + r) * dyz + c, m);
                }
              for (auto& row : top) sys.add_equation(std::move(row), Scalar::zero(f));
              for (auto& row : side) sys.add_equation(std::move(row), Scalar::zero(f));
            }
        }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t y = 0; y < n; ++y) {
        const Matrix& mu = h.comp(x, v, y);
        const std::size_t dxy = h.dim(x, y), pairs = h.dim(x, v) * h.dim(v, y);
        for (std::size_t b = 0; b < dxy; ++b)
          for (std::size_t t = 0; t < dxy; ++t) {
            SparseRow row;
            for (std::size_t p = 0; p < pairs; ++p)
              if (!mu(t, p).is_zero()) row.emplace_back(block(x, v, y) + p * dxy + b, mu(t, p));
            sys.add_equation(std::move(row), t == b ? Scalar::one(f) : Scalar::zero(f));
          }
      }
  return sys;
}

inline SeparabilityFamily separability_family_from(const HopfCategoryPresentation& h, std::span<const Scalar> x) {
  const std::size_t n = h.object_count();
  const auto off = detail::partial_offsets(h);
  SeparabilityFamily fam;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t rows = h.dim(a, v) * h.dim(v, y), cols = h.dim(a, y);
        const std::size_t o = off[(a * n + v) * n + y];
        fam.partial.emplace_back(h.field(), rows, cols, Vector(x.begin() + static_cast<long>(o),
                                                               x.begin() + static_cast<long>(o + rows * cols)));
      }
  return fam;
}

/// Dense check of both squares and the retraction triangle.
inline bool is_separability_family(const HopfCategoryPresentation& h, const SeparabilityFamily& fam) {
  const std::size_t n = h.object_count();
  auto partial = [&](std::size_t x, std::size_t v, std::size_t y) -> const Matrix& {
    return fam.partial[(x * n + v) * n + y];
  };
  auto id = [&](std::size_t x, std::size_t y) { return Matrix::identity(h.field(), h.dim(x, y)); };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t y = 0; y < n; ++y)
        if (h.comp(x, v, y) * partial(x, v, y) != id(x, y)) return false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t z = 0; z < n; ++z) {
          const Matrix diag = partial(x, v, z) * h.comp(x, y, z);
          if (exactlin::kron(id(x, v), h.comp(v, y, z)) * exactlin::kron(partial(x, v, y), id(y, z)) != diag) return false;
          if (exactlin::kron(h.comp(x, y, v), id(v, z)) * exactlin::kron(id(x, y), partial(y, v, z)) != diag) return false;
        }
  return true;
}

inline std::optional<SeparabilityFamily> solve_separability_family(const HopfCategoryPresentation& h) {
  require_valid(check_hopf_category(h));
  auto sol = separability_family_system(h).solve();
  if (!sol) return std::nullopt;
  SeparabilityFamily fam = separability_family_from(h, sol->particular);
  if (!is_separability_family(h, fam)) throw Error("separability family failed re-verification");
  return fam;
}

/// Integral families against the separability family, and retraction
/// families against per-hom coseparability.
inline weakhopf::MaschkeReport hopfcat_maschke_report(const HopfCategoryPresentation& h) {
  if (!h.has_antipode()) throw Error("the equivalence is only claimed for Hopf categories; no antipode given");
  require_valid(check_hopf_category(h));
  weakhopf::MaschkeReport report;
  for (Side side : {Side::Left, Side::Right}) {
    const std::string s = weakhopf::to_string(side);
    auto t = solve_integral_family(h, side);
    report.integral_side.push_back({"integral family " + s, t.has_value(), t ? t->solutions.particular : Vector{}});
    auto r = solve_retraction_family(h, side);
    Vector flat;
    if (r)
      for (const auto& v : r->theta) flat.insert(flat.end(), v.begin(), v.end());
    report.cointegral_side.push_back({"retraction family " + s, r.has_value(), flat});
  }
  auto sep = solve_separability_family(h);
  Vector flat;
  if (sep)
    for (const auto& m : sep->partial) flat.insert(flat.end(), m.entries().begin(), m.entries().end());
  report.integral_side.push_back({"separability family", sep.has_value(), flat});
  const auto cosep = check_hom_coseparability(h);
  report.cointegral_side.push_back({"hom coseparability", cosep.all, {}});
  report.integral_equivalence = weakhopf::detail::all_equal(report.integral_side);
  report.cointegral_equivalence = weakhopf::detail::all_equal(report.cointegral_side);
  return report;
}

}  // namespace mkit::hopfcat

#endif  // MKIT_HOPFCAT_SOLVERS_HPP
