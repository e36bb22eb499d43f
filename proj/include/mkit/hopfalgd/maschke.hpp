#ifndef MKIT_HOPFALGD_MASCHKE_HPP
#define MKIT_HOPFALGD_MASCHKE_HPP

#include "../weakhopf/maschke.hpp"
#include "solvers.hpp"

namespace mkit::hopfalgd {

using weakhopf::MaschkeEntry;
using weakhopf::MaschkeReport;

/// Normalized left and right integrals against separability over the bullet
/// product, and normalized cointegrals against coseparability over the circ
/// product.
inline MaschkeReport algebroid_maschke_report(const HopfAlgebroidPresentation& h) {
  if (!h.has_antipode()) throw Error("the equivalence is only claimed for Hopf algebroids; no antipode given");
  const HopfAlgebroidContext ctx(h);
  require_valid(check_algebroid_antipode(h));

  MaschkeReport report;
  for (Side side : {Side::Left, Side::Right}) {
    const std::string s = weakhopf::to_string(side);
    auto n = solve_integral_hgd(ctx, side, true);
    report.integral_side.push_back({"integral " + s, n.has_value(), n ? n->element : Vector{}});
    auto nu = solve_cointegral_hgd(ctx, side, true);
    report.cointegral_side.push_back({"cointegral " + s, nu.has_value(), nu ? nu->solutions.particular : Vector{}});
  }
  auto sep = solve_separability_hgd(ctx);
  report.integral_side.push_back({"separability", sep.has_value(), sep ? sep->element : Vector{}});
  auto cosep = solve_coseparability_hgd(ctx);
  report.cointegral_side.push_back({"coseparability", cosep.has_value(), cosep ? cosep->map.entries() : Vector{}});

  report.integral_equivalence = weakhopf::detail::all_equal(report.integral_side);
  report.cointegral_equivalence = weakhopf::detail::all_equal(report.cointegral_side);
  return report;
}

}  // namespace mkit::hopfalgd

#endif  // MKIT_HOPFALGD_MASCHKE_HPP
