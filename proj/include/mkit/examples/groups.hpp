#ifndef MKIT_EXAMPLES_GROUPS_HPP
#define MKIT_EXAMPLES_GROUPS_HPP

#include "../finalg/axiom_report.hpp"

#include <array>
#include <cstdlib>
#include <string>
#include <vector>

namespace mkit::examples {

/// A finite group by its Cayley table: table[a][b] = index of a*b.
class GroupPresentation {
 public:
  GroupPresentation() = default;

  /// Validates the table and derives the identity and inverses.
  GroupPresentation(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table)
      : labels_(std::move(labels)), table_(std::move(table)) {
    const std::size_t n = labels_.size();
    AxiomReport report;
    if (n == 0) report.fail("group is nonempty", {});
    bool shape_ok = table_.size() == n;
    for (const auto& row : table_) {
      if (row.size() != n) shape_ok = false;
      for (auto v : row)
        if (v >= n) shape_ok = false;
    }
    if (!shape_ok) report.fail("Cayley table is square with entries in range", {});
    if (!report.ok()) throw InvalidStructure(report);

    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            report.fail("associativity", {labels_[a], labels_[b], labels_[c]});
    identity_ = n;
    for (std::size_t e = 0; e < n && identity_ == n; ++e) {
      bool is_identity = true;
      for (std::size_t a = 0; a < n; ++a)
        if (table_[e][a] != a || table_[a][e] != a) is_identity = false;
      if (is_identity) identity_ = e;
    }
    if (identity_ == n) {
      report.fail("identity element exists", {});
      throw InvalidStructure(report);
    }
    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b)
        if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
      if (inverse_[a] == n) report.fail("inverse exists", {labels_[a]});
    }
    if (!report.ok()) throw InvalidStructure(report);
  }

  std::size_t order() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t identity() const { return identity_; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

inline std::string power_label(const std::string& g, std::size_t k) {
  if (k == 0) return "e";
  if (k == 1) return g;
  return g + "^" + std::to_string(k);
}

/// C_n = <g | g^n>, elements e, g, g^2, ...
inline GroupPresentation cyclic_group(std::size_t n) {
  if (n == 0) throw Error("cyclic group order must be positive");
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(power_label("g", a));
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return GroupPresentation(std::move(labels), std::move(t));
}

/// Dihedral group of order 2n: elements r^i s^j (index 2i + j),
/// with (r^a s^j)(r^b s^k) = r^(a + (-1)^j b) s^(j+k).
inline GroupPresentation dihedral_group(std::size_t n) {
  if (n == 0) throw Error("dihedral group parameter must be positive");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      std::string l = i == 0 ? "" : power_label("r", i);
      if (j == 1) l += l.empty() ? "s" : " s";
      labels.push_back(l.empty() ? "e" : l);
    }
  std::vector<std::vector<std::size_t>> t(2 * n, std::vector<std::size_t>(2 * n));
  for (std::size_t x = 0; x < 2 * n; ++x)
    for (std::size_t y = 0; y < 2 * n; ++y) {
      const std::size_t a = x / 2, j = x % 2, b = y / 2, k = y % 2;
      const std::size_t i = j == 0 ? (a + b) % n : (a + n - b) % n;
      t[x][y] = 2 * i + (j + k) % 2;
    }
  return GroupPresentation(std::move(labels), std::move(t));
}

/// Quaternion group {1, -1, i, -i, j, -j, k, -k}.
inline GroupPresentation quaternion_group() {
  // Unit quaternion basis 1, i, j, k: unit_mult[a][b] = (sign, unit) of a*b.
  const std::array<std::array<std::pair<int, int>, 4>, 4> unit_mult{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  const char* names[] = {"1", "i", "j", "k"};
  std::vector<std::string> labels;
  for (int u = 0; u < 4; ++u) {
    labels.push_back(names[u]);
    labels.push_back(std::string("-") + names[u]);
  }
  std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      const auto [s, u] = unit_mult[x / 2][y / 2];
      const bool negative = (s < 0) != ((x % 2) != (y % 2));
      t[x][y] = 2 * static_cast<std::size_t>(u) + (negative ? 1 : 0);
    }
  return GroupPresentation(std::move(labels), std::move(t));
}

/// G x H with labels "(a,b)", index a * |H| + b.
inline GroupPresentation direct_product(const GroupPresentation& g, const GroupPresentation& h) {
  const std::size_t m = h.order();
  std::vector<std::string> labels;
  for (const auto& a : g.labels())
    for (const auto& b : h.labels()) labels.push_back("(" + a + "," + b + ")");
  std::vector<std::vector<std::size_t>> t(g.order() * m, std::vector<std::size_t>(g.order() * m));
  for (std::size_t x = 0; x < g.order() * m; ++x)
    for (std::size_t y = 0; y < g.order() * m; ++y)
      t[x][y] = g.multiply(x / m, y / m) * m + h.multiply(x % m, y % m);
  return GroupPresentation(std::move(labels), std::move(t));
}

/// Names understood: C<n>, D<n> (order 2n), S3, V4, Q8, and products "AxB".
inline GroupPresentation named_group(const std::string& name) {
  if (auto x = name.find('x'); x != std::string::npos)
    return direct_product(named_group(name.substr(0, x)), named_group(name.substr(x + 1)));
  auto number = [&](std::size_t from) {
    const std::string digits = name.substr(from);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 4)
      throw ParseError("unknown group name: " + name);
    return static_cast<std::size_t>(std::stoul(digits));
  };
  if (name == "S3") return dihedral_group(3);
  if (name == "V4") return direct_product(cyclic_group(2), cyclic_group(2));
  if (name == "Q8") return quaternion_group();
  if (!name.empty() && name[0] == 'C') {
    const std::size_t n = number(1);
    if (n == 0) throw ParseError("group order must be positive: " + name);
    return cyclic_group(n);
  }
  if (!name.empty() && name[0] == 'D') {
    const std::size_t n = number(1);
    if (n == 0) throw ParseError("dihedral parameter must be positive: " + name);
    return dihedral_group(n);
  }
  throw ParseError("unknown group name: " + name);
}

}  // namespace mkit::examples

#endif  // MKIT_EXAMPLES_GROUPS_HPP
