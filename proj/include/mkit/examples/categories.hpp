#ifndef MKIT_EXAMPLES_CATEGORIES_HPP
#define MKIT_EXAMPLES_CATEGORIES_HPP

#include "../hopfcat/presentation.hpp"
#include "algebras.hpp"

namespace mkit::examples {

using hopfcat::HopfCategoryPresentation;

/// a(x, y) = span of the morphisms x -> y, each grouplike. mu sends
/// f (x) g to g o f, eta_x = id_x and sigma(f) = f^-1. For a one-object
/// groupoid this is the opposite of kG, which g -> g^-1 identifies with kG.
inline HopfCategoryPresentation hopf_category_from_groupoid(const GroupoidPresentation& g, FieldSpec f) {
  const std::size_t n = g.object_count();
  std::vector<std::vector<std::size_t>> homs(n * n);
  // position of each morphism inside its hom
  std::vector<std::size_t> pos(g.morphism_count());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      homs[x * n + y] = g.hom(x, y);
      if (homs[x * n + y].empty())
        throw Error("hom-set " + g.objects()[x] + " -> " + g.objects()[y] + " is empty; every hom needs a counit");
      for (std::size_t i = 0; i < homs[x * n + y].size(); ++i) pos[homs[x * n + y][i]] = i;
    }
  const auto labels = g.labels();
  std::vector<CoalgebraPresentation> coalgebras;
  for (const auto& h : homs) {
    std::vector<std::string> l;
    for (auto m : h) l.push_back(labels[m]);
    coalgebras.push_back(grouplike_coalgebra(f, std::move(l)));
  }
  std::vector<Matrix> comps;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const auto &hxy = homs[x * n + y], &hyz = homs[y * n + z];
        Matrix m(f, homs[x * n + z].size(), hxy.size() * hyz.size());
        for (std::size_t i = 0; i < hxy.size(); ++i)
          for (std::size_t j = 0; j < hyz.size(); ++j)
            m(pos[*g.compose(hyz[j], hxy[i])], i * hyz.size() + j) = Scalar::one(f);
        comps.push_back(std::move(m));
      }
  std::vector<Vector> units;
  for (std::size_t x = 0; x < n; ++x)
    units.push_back(exactlin::unit_vector(f, homs[x * n + x].size(), pos[g.identity(x)]));
  std::vector<Matrix> antipode;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto& hxy = homs[x * n + y];
      Matrix s(f, homs[y * n + x].size(), hxy.size());
      for (std::size_t i = 0; i < hxy.size(); ++i) s(pos[g.inverse(hxy[i])], i) = Scalar::one(f);
      antipode.push_back(std::move(s));
    }
  return HopfCategoryPresentation(f, g.objects(), std::move(coalgebras), std::move(comps), std::move(units),
                                  std::move(antipode));
}

/// One object "*" with a(*, *) the given algebra and coalgebra.
inline HopfCategoryPresentation hopf_category_from_hopf_algebra(const WeakHopfPresentation& w) {
  std::optional<std::vector<Matrix>> antipode;
  if (w.has_antipode()) antipode = std::vector<Matrix>{*w.antipode()};
  return HopfCategoryPresentation(w.field(), {"*"}, {w.coalgebra()}, {w.algebra().mult_matrix()},
                                  {w.algebra().unit()}, std::move(antipode));
}

}  // namespace mkit::examples

#endif  // MKIT_EXAMPLES_CATEGORIES_HPP
