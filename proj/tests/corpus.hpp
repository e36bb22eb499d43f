// Shared test corpus: small weak Hopf algebras from the generators.
#ifndef MKIT_TESTS_CORPUS_HPP
#define MKIT_TESTS_CORPUS_HPP

#include <mkit/examples/algebras.hpp>

#include <string>
#include <vector>

namespace corpus {

using mkit::exactlin::FieldSpec;
using mkit::weakhopf::WeakHopfPresentation;

struct Entry {
  std::string name;
  WeakHopfPresentation w;
  std::size_t group_order = 0;  // 0 when not a group algebra
};

inline std::vector<FieldSpec> fields() {
  return {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5)};
}

inline std::vector<std::string> small_groups() { return {"C1", "C2", "C3", "C4", "C5", "C6", "V4", "S3"}; }

/// Group algebras of order <= 6, their duals, and four groupoid algebras.
inline std::vector<Entry> weak_hopf(FieldSpec f) {
  using namespace mkit::examples;
  std::vector<Entry> out;
  for (const auto& g : small_groups()) {
    const GroupPresentation grp = named_group(g);
    out.push_back({"k" + g, group_algebra(grp, f), grp.order()});
    out.push_back({"k^" + g, dual_group_algebra(grp, f), 0});
  }
  out.push_back({"pair2", groupoid_algebra(pair_groupoid(2), f), 0});
  out.push_back({"pair3", groupoid_algebra(pair_groupoid(3), f), 0});
  out.push_back({"connected2:C2", groupoid_algebra(connected_groupoid(2, cyclic_group(2)), f), 0});
  out.push_back({"C2+C2", groupoid_algebra(disjoint_union(groupoid_from_group(cyclic_group(2)),
                                                          groupoid_from_group(cyclic_group(2))),
                                           f),
                 0});
  out.push_back({"C3+pair2", groupoid_algebra(disjoint_union(groupoid_from_group(cyclic_group(3)), pair_groupoid(2)), f),
                 0});
  return out;
}

}  // namespace corpus

#endif  // MKIT_TESTS_CORPUS_HPP
