#ifndef MKIT_EXAMPLES_GROUPOIDS_HPP
#define MKIT_EXAMPLES_GROUPOIDS_HPP

#include "groups.hpp"

#include <optional>
#include <set>

namespace mkit::examples {

struct Morphism {
  std::string label;
  std::size_t source = 0, target = 0;

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// A finite groupoid. compose(f, h) is f o h ("apply h first"), defined
/// exactly when target(h) = source(f).
class GroupoidPresentation {
 public:
  GroupoidPresentation() = default;

  /// composition[f][h] must hold f o h for composable pairs and nullopt otherwise.
  /// Identities and inverses are derived; every axiom failure is collected.
  GroupoidPresentation(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                       std::vector<std::vector<std::optional<std::size_t>>> composition)
      : objects_(std::move(objects)), morphisms_(std::move(morphisms)), composition_(std::move(composition)) {
    const std::size_t m = morphisms_.size();
    AxiomReport report;
    bool shape_ok = composition_.size() == m;
    for (const auto& f : morphisms_)
      if (f.source >= objects_.size() || f.target >= objects_.size()) shape_ok = false;
    for (const auto& row : composition_) {
      if (row.size() != m) shape_ok = false;
      for (const auto& c : row)
        if (c && *c >= m) shape_ok = false;
    }
    if (!shape_ok) {
      report.fail("composition table matches the morphism list", {});
      throw InvalidStructure(report);
    }
    const auto& L = labels_cache();
    for (std::size_t f = 0; f < m; ++f)
      for (std::size_t h = 0; h < m; ++h) {
        const bool composable = morphisms_[h].target == morphisms_[f].source;
        const auto& c = composition_[f][h];
        if (composable != c.has_value()) {
          report.fail("composition defined exactly on composable pairs", {L[f], L[h]});
          continue;
        }
        if (c && (morphisms_[*c].source != morphisms_[h].source || morphisms_[*c].target != morphisms_[f].target))
          report.fail("composite has source(h) and target(f)", {L[f], L[h]});
      }
    if (!report.ok()) throw InvalidStructure(report);
    for (std::size_t f = 0; f < m; ++f)
      for (std::size_t g = 0; g < m; ++g) {
        if (!composition_[f][g]) continue;
        for (std::size_t h = 0; h < m; ++h) {
          if (!composition_[g][h]) continue;
          if (*composition_[*composition_[f][g]][h] != *composition_[f][*composition_[g][h]])
            report.fail("associativity", {L[f], L[g], L[h]});
        }
      }
    identities_.assign(objects_.size(), m);
    for (std::size_t x = 0; x < objects_.size(); ++x) {
      for (std::size_t i = 0; i < m && identities_[x] == m; ++i) {
        if (morphisms_[i].source != x || morphisms_[i].target != x) continue;
        bool is_identity = true;
        for (std::size_t f = 0; f < m; ++f) {
          if (morphisms_[f].target == x && *composition_[i][f] != f) is_identity = false;
          if (morphisms_[f].source == x && *composition_[f][i] != f) is_identity = false;
        }
        if (is_identity) identities_[x] = i;
      }
      if (identities_[x] == m) report.fail("identity exists", {objects_[x]});
    }
    if (!report.ok()) throw InvalidStructure(report);
    inverses_.assign(m, m);
    for (std::size_t f = 0; f < m; ++f) {
      for (std::size_t g = 0; g < m; ++g)
        if (composition_[f][g] && composition_[g][f] && *composition_[f][g] == identities_[morphisms_[f].target] &&
            *composition_[g][f] == identities_[morphisms_[f].source])
          inverses_[f] = g;
      if (inverses_[f] == m) report.fail("inverse exists", {L[f]});
    }
    if (!report.ok()) throw InvalidStructure(report);
  }

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }
  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }
  std::optional<std::size_t> compose(std::size_t f, std::size_t h) const { return composition_[f][h]; }
  std::size_t identity(std::size_t x) const { return identities_[x]; }
  std::size_t inverse(std::size_t f) const { return inverses_[f]; }
  std::vector<std::string> labels() const { return labels_cache(); }

  /// Indices of the morphisms x -> y, in list order.
  std::vector<std::size_t> hom(std::size_t x, std::size_t y) const {
    std::vector<std::size_t> r;
    for (std::size_t f = 0; f < morphisms_.size(); ++f)
      if (morphisms_[f].source == x && morphisms_[f].target == y) r.push_back(f);
    return r;
  }

 private:
  std::vector<std::string> labels_cache() const {
    std::vector<std::string> l;
    for (const auto& f : morphisms_) l.push_back(f.label);
    return l;
  }

  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<std::vector<std::optional<std::size_t>>> composition_;
  std::vector<std::size_t> identities_;
  std::vector<std::size_t> inverses_;
};

/// Objects 1..n, one morphism x -> y for every pair, each hom group g.
/// The morphism (x, a, y) composes as (y, b, z) o (x, a, y) = (x, b a, z);
/// index order is x, then y, then a. For the trivial group the labels are
/// id<x> and f<x><y>, otherwise "<a>:<x><y>".
inline GroupoidPresentation connected_groupoid(std::size_t n, const GroupPresentation& g) {
  if (n == 0) throw Error("groupoid needs at least one object");
  const std::size_t k = g.order();
  std::vector<std::string> objects;
  for (std::size_t x = 0; x < n; ++x) objects.push_back(std::to_string(x + 1));
  std::vector<Morphism> morphisms;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t a = 0; a < k; ++a) {
        std::string label = k == 1 ? (x == y ? "id" + objects[x] : "f" + objects[x] + objects[y])
                                   : g.labels()[a] + ":" + objects[x] + objects[y];
        morphisms.push_back({label, x, y});
      }
  auto index = [&](std::size_t x, std::size_t a, std::size_t y) { return (x * n + y) * k + a; };
  const std::size_t m = morphisms.size();
  std::vector<std::vector<std::optional<std::size_t>>> comp(m, std::vector<std::optional<std::size_t>>(m));
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t h = 0; h < m; ++h) {
      // f = (y, b, z), h = (x, a, y')
      const std::size_t y = f / k / n, z = f / k % n, b = f % k;
      const std::size_t x = h / k / n, y2 = h / k % n, a = h % k;
      if (y2 == y) comp[f][h] = index(x, g.multiply(b, a), z);
    }
  return GroupoidPresentation(std::move(objects), std::move(morphisms), std::move(comp));
}

/// The pair groupoid: exactly one morphism between any two objects.
inline GroupoidPresentation pair_groupoid(std::size_t n) { return connected_groupoid(n, cyclic_group(1)); }

/// The one-object groupoid of a group, with the group's labels and order.
inline GroupoidPresentation groupoid_from_group(const GroupPresentation& g) {
  std::vector<Morphism> morphisms;
  for (const auto& l : g.labels()) morphisms.push_back({l, 0, 0});
  const std::size_t m = g.order();
  std::vector<std::vector<std::optional<std::size_t>>> comp(m, std::vector<std::optional<std::size_t>>(m));
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t h = 0; h < m; ++h) comp[f][h] = g.multiply(f, h);
  return GroupoidPresentation({"*"}, std::move(morphisms), std::move(comp));
}

/// Objects and morphisms of a followed by those of b. Clashing labels from b
/// get a trailing prime.
inline GroupoidPresentation disjoint_union(const GroupoidPresentation& a, const GroupoidPresentation& b) {
  std::vector<std::string> objects = a.objects();
  std::set<std::string> taken(objects.begin(), objects.end());
  for (auto o : b.objects()) {
    while (taken.count(o)) o += "'";
    taken.insert(o);
    objects.push_back(o);
  }
  std::vector<Morphism> morphisms = a.morphisms();
  std::set<std::string> used;
  for (const auto& f : morphisms) used.insert(f.label);
  for (auto f : b.morphisms()) {
    while (used.count(f.label)) f.label += "'";
    used.insert(f.label);
    f.source += a.object_count();
    f.target += a.object_count();
    morphisms.push_back(f);
  }
  const std::size_t ma = a.morphism_count(), m = morphisms.size();
  std::vector<std::vector<std::optional<std::size_t>>> comp(m, std::vector<std::optional<std::size_t>>(m));
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t h = 0; h < m; ++h) {
      if (f < ma && h < ma)
        comp[f][h] = a.compose(f, h);
      else if (f >= ma && h >= ma)
        if (auto c = b.compose(f - ma, h - ma)) comp[f][h] = *c + ma;
    }
  return GroupoidPresentation(std::move(objects), std::move(morphisms), std::move(comp));
}

/// Names understood: "pair<n>" and "connected<n>:<group>", for example
/// "pair2" or "connected2:C2"; a bare group name gives its one-object groupoid.
inline GroupoidPresentation named_groupoid(const std::string& name) {
  auto count = [&](const std::string& digits) {
    if (digits.empty() || digits.size() > 3 || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("unknown groupoid name: " + name);
    const auto n = static_cast<std::size_t>(std::stoul(digits));
    if (n == 0) throw ParseError("groupoid needs at least one object: " + name);
    return n;
  };
  if (name.rfind("pair", 0) == 0) return pair_groupoid(count(name.substr(4)));
  if (name.rfind("connected", 0) == 0) {
    const auto colon = name.find(':');
    if (colon == std::string::npos) throw ParseError("expected connected<n>:<group>, got " + name);
    return connected_groupoid(count(name.substr(9, colon - 9)), named_group(name.substr(colon + 1)));
  }
  return groupoid_from_group(named_group(name));
}

}  // namespace mkit::examples

#endif  // MKIT_EXAMPLES_GROUPOIDS_HPP
