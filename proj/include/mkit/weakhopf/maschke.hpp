#ifndef MKIT_WEAKHOPF_MASCHKE_HPP
#define MKIT_WEAKHOPF_MASCHKE_HPP

#include "../finalg/separability.hpp"
#include "integrals.hpp"

namespace mkit::weakhopf {

/// One feasibility query. The witness is the canonical particular solution
/// (for separability: the separability element; for coseparability: the
/// row-major entries of the dim x dim^2 matrix of pi).
struct MaschkeEntry {
  std::string name;
  bool feasible = false;
  Vector witness;
};

struct MaschkeReport {
  std::vector<MaschkeEntry> integral_side;    // four integral queries, then separability
  std::vector<MaschkeEntry> cointegral_side;  // four cointegral queries, then coseparability
  bool integral_equivalence = false;
  bool cointegral_equivalence = false;

  bool pass() const { return integral_equivalence && cointegral_equivalence; }

  const MaschkeEntry& find(const std::string& name) const {
    for (const auto* group : {&integral_side, &cointegral_side})
      for (const auto& e : *group)
        if (e.name == name) return e;
    throw Error("no Maschke entry named " + name);
  }
};

namespace detail {

inline bool all_equal(const std::vector<MaschkeEntry>& v) {
  for (const auto& e : v)
    if (e.feasible != v.front().feasible) return false;
  return true;
}

}  // namespace detail

/// Runs every normalized integral and cointegral query plus separability of
/// the algebra and coseparability of the coalgebra, and compares verdicts.
inline MaschkeReport maschke_report(const WeakHopfPresentation& w) {
  if (!w.has_antipode()) throw Error("the equivalence is only claimed for weak Hopf algebras; no antipode given");
  const WeakHopfContext ctx(w);
  require_valid(check_antipode(w));

  MaschkeReport report;
  for (Side side : {Side::Left, Side::Right})
    for (Variant variant : {Variant::Primed, Variant::Duoidal}) {
      const std::string suffix = std::string(to_string(side)) + " " + to_string(variant);
      auto t = solve_integral(ctx, side, variant, true);
      report.integral_side.push_back({"integral " + suffix, t.has_value(), t ? t->solutions.particular : Vector{}});
      auto c = solve_cointegral(ctx, side, variant, true);
      report.cointegral_side.push_back(
          {"cointegral " + suffix, c.has_value(), c ? c->solutions.particular : Vector{}});
    }
  auto sep = finalg::solve_separability(w.algebra());
  report.integral_side.push_back({"separability", sep.has_value(), sep ? sep->element : Vector{}});
  auto cosep = finalg::solve_coseparability(w.coalgebra());
  report.cointegral_side.push_back({"coseparability", cosep.has_value(), cosep ? cosep->map.entries() : Vector{}});

  report.integral_equivalence = detail::all_equal(report.integral_side);
  report.cointegral_equivalence = detail::all_equal(report.cointegral_side);
  return report;
}

}  // namespace mkit::weakhopf

#endif  // MKIT_WEAKHOPF_MASCHKE_HPP
