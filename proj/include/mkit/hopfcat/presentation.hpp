#ifndef MKIT_HOPFCAT_PRESENTATION_HPP
#define MKIT_HOPFCAT_PRESENTATION_HPP

#include "../finalg/presentation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mkit::hopfcat {

using exactlin::FieldSpec;
using exactlin::Matrix;
using exactlin::Scalar;
using exactlin::Vector;
using finalg::CoalgebraPresentation;
using finalg::describe;

/// A category enriched in coalgebras over a finite object set X.
///
/// homs[x * |X| + y] is a(x, y). comps[(x * |X| + y) * |X| + z] is
/// mu_{x,y,z}: a(x,y) (x) a(y,z) -> a(x,z) as a dim a(x,z) by
/// dim a(x,y) * dim a(y,z) matrix; for a groupoid it sends f (x) g to g o f.
/// units[x] is eta_x in a(x,x). antipode[x * |X| + y], when present, is
/// sigma_{x,y}: a(x,y) -> a(y,x).
class HopfCategoryPresentation {
 public:
  HopfCategoryPresentation() = default;

  HopfCategoryPresentation(FieldSpec field, std::vector<std::string> objects, std::vector<CoalgebraPresentation> homs,
                           std::vector<Matrix> comps, std::vector<Vector> units,
                           std::optional<std::vector<Matrix>> antipode = std::nullopt)
      : field_(field),
        objects_(std::move(objects)),
        homs_(std::move(homs)),
        comps_(std::move(comps)),
        units_(std::move(units)),
        antipode_(std::move(antipode)) {
    const std::size_t n = objects_.size();
    if (homs_.size() != n * n) throw DimensionError("one hom coalgebra per ordered pair of objects");
    if (comps_.size() != n * n * n) throw DimensionError("one composition matrix per triple of objects");
    if (units_.size() != n) throw DimensionError("one unit per object");
    if (antipode_ && antipode_->size() != n * n) throw DimensionError("one antipode component per pair of objects");
    for (const auto& c : homs_)
      if (c.field() != field_) throw FieldMismatch("hom coalgebra over a different field");
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          const Matrix& m = comp(x, y, z);
          if (m.field() != field_) throw FieldMismatch("composition over a different field");
          if (m.rows() != dim(x, z) || m.cols() != dim(x, y) * dim(y, z))
            throw DimensionError("composition " + name(x, y, z) + " has the wrong shape");
        }
    for (std::size_t x = 0; x < n; ++x) {
      if (units_[x].size() != dim(x, x)) throw DimensionError("unit of " + objects_[x] + " has the wrong length");
      for (const auto& s : units_[x])
        if (s.field() != field_) throw FieldMismatch("unit over a different field");
    }
    if (antipode_)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          const Matrix& s = this->antipode(x, y);
          if (s.field() != field_) throw FieldMismatch("antipode over a different field");
          if (s.rows() != dim(y, x) || s.cols() != dim(x, y))
            throw DimensionError("antipode component " + name(x, y) + " has the wrong shape");
        }
  }

  FieldSpec field() const { return field_; }
  std::size_t object_count() const { return objects_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const CoalgebraPresentation& hom(std::size_t x, std::size_t y) const { return homs_[x * object_count() + y]; }
  std::size_t dim(std::size_t x, std::size_t y) const { return hom(x, y).dim(); }
  const Matrix& comp(std::size_t x, std::size_t y, std::size_t z) const {
    return comps_[(x * object_count() + y) * object_count() + z];
  }
  const Vector& unit(std::size_t x) const { return units_[x]; }
  bool has_antipode() const { return antipode_.has_value(); }
  const Matrix& antipode(std::size_t x, std::size_t y) const { return (*antipode_)[x * object_count() + y]; }
  const std::vector<CoalgebraPresentation>& homs() const { return homs_; }
  const std::vector<Matrix>& comps() const { return comps_; }
  const std::vector<Vector>& units() const { return units_; }
  const std::optional<std::vector<Matrix>>& antipodes() const { return antipode_; }

  /// mu_{x,y,z}(b (x) c) for vectors b in a(x,y), c in a(y,z).
  Vector compose(std::size_t x, std::size_t y, std::size_t z, std::span<const Scalar> b,
                 std::span<const Scalar> c) const {
    return comp(x, y, z) * exactlin::tensor(b, c);
  }

  std::string name(std::size_t x, std::size_t y) const { return "a(" + objects_[x] + "," + objects_[y] + ")"; }
  std::string name(std::size_t x, std::size_t y, std::size_t z) const {
    return "mu(" + objects_[x] + "," + objects_[y] + "," + objects_[z] + ")";
  }

 private:
  FieldSpec field_;
  std::vector<std::string> objects_;
  std::vector<CoalgebraPresentation> homs_;
  std::vector<Matrix> comps_;
  std::vector<Vector> units_;
  std::optional<std::vector<Matrix>> antipode_;
};

/// Enriched associativity and unit laws, compositions and units as coalgebra
/// maps, and the antipode identities
///   mu_{x,y,x}(1 (x) sigma_{x,y}) delta_{x,y} = eta_x eps_{x,y},
///   mu_{y,x,y}(sigma_{x,y} (x) 1) delta_{x,y} = eta_y eps_{x,y}.
/// Antipode failures carry the "external-definition check" prefix: the index
/// placement above is a convention of this library.
inline AxiomReport check_hopf_category(const HopfCategoryPresentation& h) {
  AxiomReport report;
  const std::size_t n = h.object_count();
  const FieldSpec f = h.field();
  const auto& O = h.objects();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) report.merge(finalg::check_coalgebra(h.hom(x, y)), h.name(x, y));
  if (!report.ok()) return report;

  auto label = [&](std::size_t x, std::size_t y, std::size_t i) {
    return h.hom(x, y).labels()[i] + " in " + h.name(x, y);
  };
  auto e = [&](std::size_t x, std::size_t y, std::size_t i) { return exactlin::unit_vector(h.field(), h.dim(x, y), i); };

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w)
          for (std::size_t i = 0; i < h.dim(x, y); ++i)
            for (std::size_t j = 0; j < h.dim(y, z); ++j) {
              const Vector ij = h.compose(x, y, z, e(x, y, i), e(y, z, j));
              for (std::size_t k = 0; k < h.dim(z, w); ++k)
                if (h.compose(x, z, w, ij, e(z, w, k)) != h.compose(x, y, w, e(x, y, i), h.compose(y, z, w, e(y, z, j), e(z, w, k))))
                  report.fail("associativity", {label(x, y, i), label(y, z, j), label(z, w, k)});
            }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t i = 0; i < h.dim(x, y); ++i) {
        if (h.compose(x, x, y, h.unit(x), e(x, y, i)) != e(x, y, i))
          report.fail("left unit: mu(eta_x (x) h) = h", {label(x, y, i)});
        if (h.compose(x, y, y, e(x, y, i), h.unit(y)) != e(x, y, i))
          report.fail("right unit: mu(h (x) eta_y) = h", {label(x, y, i)});
      }

  for (std::size_t x = 0; x < n; ++x) {
    const auto& c = h.hom(x, x);
    if (c.coproduct(h.unit(x)) != exactlin::tensor(h.unit(x), h.unit(x)))
      report.fail("unit is grouplike: delta(eta_x) = eta_x (x) eta_x", {O[x]});
    if (c.apply_counit(h.unit(x)) != Scalar::one(f))
      report.fail("unit is counital: eps(eta_x) = 1", {O[x]}, "eps(eta_x) = " + c.apply_counit(h.unit(x)).to_string());
  }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const auto &cxy = h.hom(x, y), &cyz = h.hom(y, z), &cxz = h.hom(x, z);
        const std::size_t dxz = h.dim(x, z);
        for (std::size_t i = 0; i < cxy.dim(); ++i)
          for (std::size_t j = 0; j < cyz.dim(); ++j) {
            const Vector ij = h.compose(x, y, z, e(x, y, i), e(y, z, j));
            if (cxz.apply_counit(ij) != cxy.counit()[i] * cyz.counit()[j])
              report.fail("composition is counital: eps(mu(b (x) c)) = eps(b) eps(c)", {label(x, y, i), label(y, z, j)});
            Vector rhs = exactlin::zero_vector(f, dxz * dxz);
            for (const auto& s : cxy.terms(i))
              for (const auto& t : cyz.terms(j)) {
                const Vector left = h.compose(x, y, z, e(x, y, s.left), e(y, z, t.left));
                const Vector right = h.compose(x, y, z, e(x, y, s.right), e(y, z, t.right));
                rhs = exactlin::add(rhs, exactlin::scale(s.coef * t.coef, exactlin::tensor(left, right)));
              }
            if (cxz.coproduct(ij) != rhs)
              report.fail("composition is comultiplicative: delta(mu(b (x) c)) = mu(b_1 (x) c_1) (x) mu(b_2 (x) c_2)",
                          {label(x, y, i), label(y, z, j)});
          }
      }

  if (!h.has_antipode()) return report;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto& c = h.hom(x, y);
      const Matrix& s = h.antipode(x, y);
      for (std::size_t i = 0; i < c.dim(); ++i) {
        Vector left = exactlin::zero_vector(f, h.dim(x, x)), right = exactlin::zero_vector(f, h.dim(y, y));
        for (const auto& t : c.terms(i)) {
          left = exactlin::add(left, exactlin::scale(t.coef, h.compose(x, y, x, e(x, y, t.left), s.column(t.right))));
          right = exactlin::add(right, exactlin::scale(t.coef, h.compose(y, x, y, s.column(t.left), e(x, y, t.right))));
        }
        if (left != exactlin::scale(c.counit()[i], h.unit(x)))
          report.fail("external-definition check: mu(1 (x) sigma) delta = eta_x eps", {label(x, y, i)},
                      describe(left, h.hom(x, x).labels()));
        if (right != exactlin::scale(c.counit()[i], h.unit(y)))
          report.fail("external-definition check: mu(sigma (x) 1) delta = eta_y eps", {label(x, y, i)},
                      describe(right, h.hom(y, y).labels()));
      }
    }
  return report;
}

}  // namespace mkit::hopfcat

#endif  // MKIT_HOPFCAT_PRESENTATION_HPP
