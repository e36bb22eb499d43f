#ifndef MKIT_CLI_STRUCTURE_IO_HPP
#define MKIT_CLI_STRUCTURE_IO_HPP

#include "../examples/groupoids.hpp"
#include "../hopfalgd/presentation.hpp"
#include "../hopfcat/presentation.hpp"
#include "../weakhopf/structure.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <variant>

namespace mkit::cli {

using json = nlohmann::ordered_json;
using exactlin::FieldSpec;
using exactlin::Matrix;
using exactlin::Scalar;
using exactlin::Tensor3;
using exactlin::Vector;
using finalg::AlgebraPresentation;
using finalg::CoalgebraPresentation;
using hopfalgd::CommAlgebraPresentation;
using hopfalgd::HopfAlgebroidPresentation;
using hopfcat::HopfCategoryPresentation;
using weakhopf::WeakHopfPresentation;

inline constexpr const char* format_version = "maschke-kit/1";

enum class Kind { WeakHopf, Algebroid, HopfCat, Group, Groupoid, CommAlgebra };

inline const char* to_string(Kind k) {
  switch (k) {
    case Kind::WeakHopf: return "weakhopf";
    case Kind::Algebroid: return "algebroid";
    case Kind::HopfCat: return "hopfcat";
    case Kind::Group: return "group";
    case Kind::Groupoid: return "groupoid";
    case Kind::CommAlgebra: return "commalgebra";
  }
  return "?";
}

/// One parsed and validated structure file.
struct Structure {
  FieldSpec field;
  std::variant<WeakHopfPresentation, HopfAlgebroidPresentation, HopfCategoryPresentation, examples::GroupPresentation,
               examples::GroupoidPresentation, CommAlgebraPresentation>
      value;

  Kind kind() const { return static_cast<Kind>(value.index()); }
};

// ---------------------------------------------------------------- writing

inline json to_json(FieldSpec f) {
  json j;
  if (f.is_rational()) {
    j["kind"] = "Q";
  } else {
    j["kind"] = "Fp";
    j["p"] = f.characteristic();
  }
  return j;
}

inline json to_json(std::span<const Scalar> v) {
  json j = json::array();
  for (const auto& s : v) j.push_back(s.to_string());
  return j;
}

inline json to_json(const Matrix& m) {
  json j = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row_vector(i)));
  return j;
}

inline json to_json(const Tensor3& t) {
  json j = json::array();
  for (std::size_t a = 0; a < t.d0(); ++a) {
    json ja = json::array();
    for (std::size_t b = 0; b < t.d1(); ++b) {
      json jb = json::array();
      for (std::size_t c = 0; c < t.d2(); ++c) jb.push_back(t(a, b, c).to_string());
      ja.push_back(std::move(jb));
    }
    j.push_back(std::move(ja));
  }
  return j;
}

inline json algebra_json(const AlgebraPresentation& a) {
  return json{{"labels", a.labels()}, {"mult", to_json(a.mult())}, {"unit", to_json(a.unit())}};
}

inline json coalgebra_json(const CoalgebraPresentation& c) {
  return json{{"labels", c.labels()}, {"comult", to_json(c.comult())}, {"counit", to_json(c.counit())}};
}

inline json payload_json(const WeakHopfPresentation& w) {
  json j{{"labels", w.labels()},
         {"mult", to_json(w.algebra().mult())},
         {"unit", to_json(w.algebra().unit())},
         {"comult", to_json(w.coalgebra().comult())},
         {"counit", to_json(w.coalgebra().counit())}};
  if (w.has_antipode()) j["antipode"] = to_json(*w.antipode());
  return j;
}

inline json payload_json(const HopfAlgebroidPresentation& h) {
  json j{{"base", algebra_json(h.base().algebra())}, {"total", algebra_json(h.total())},
         {"source", to_json(h.src())},             {"target", to_json(h.tgt())},
         {"comult_lift", to_json(h.comult_lift())}, {"counit", to_json(h.counit())}};
  if (h.has_antipode()) j["antipode"] = to_json(*h.antipode());
  return j;
}

inline json payload_json(const HopfCategoryPresentation& h) {
  const std::size_t n = h.object_count();
  json homs = json::array(), comps = json::array(), units = json::array(), antipode = json::array();
  for (std::size_t x = 0; x < n; ++x) {
    json hr = json::array(), cx = json::array(), sr = json::array();
    for (std::size_t y = 0; y < n; ++y) {
      hr.push_back(coalgebra_json(h.hom(x, y)));
      json cy = json::array();
      for (std::size_t z = 0; z < n; ++z) cy.push_back(to_json(h.comp(x, y, z)));
      cx.push_back(std::move(cy));
      if (h.has_antipode()) sr.push_back(to_json(h.antipode(x, y)));
    }
    homs.push_back(std::move(hr));
    comps.push_back(std::move(cx));
    antipode.push_back(std::move(sr));
    units.push_back(to_json(h.unit(x)));
  }
  json j{{"objects", h.objects()}, {"homs", homs}, {"comps", comps}, {"units", units}};
  if (h.has_antipode()) j["antipode"] = antipode;
  return j;
}

inline json payload_json(const examples::GroupPresentation& g) {
  return json{{"labels", g.labels()}, {"table", g.table()}};
}

inline json payload_json(const examples::GroupoidPresentation& g) {
  json morphisms = json::array();
  for (const auto& m : g.morphisms()) morphisms.push_back(json{{"label", m.label}, {"source", m.source}, {"target", m.target}});
  json comp = json::array();
  for (std::size_t f = 0; f < g.morphism_count(); ++f) {
    json row = json::array();
    for (std::size_t h = 0; h < g.morphism_count(); ++h) {
      auto c = g.compose(f, h);
      row.push_back(c ? json(*c) : json(nullptr));
    }
    comp.push_back(std::move(row));
  }
  return json{{"objects", g.objects()}, {"morphisms", morphisms}, {"composition", comp}};
}

inline json payload_json(const CommAlgebraPresentation& r) { return algebra_json(r.algebra()); }

inline json to_json(const Structure& s) {
  json j{{"format_version", format_version}, {"kind", to_string(s.kind())}, {"field", to_json(s.field)}};
  j["payload"] = std::visit([](const auto& v) { return payload_json(v); }, s.value);
  return j;
}

/// Two-space indented JSON with every array of plain values on one line, so
/// tensor rows stay readable and diffable.
inline void write_pretty(const json& j, std::string& out, std::size_t indent = 0) {
  auto primitive_array = [](const json& v) {
    return v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_primitive(); });
  };
  const std::string pad(indent + 2, ' ');
  if (j.is_primitive() || j.empty()) {
    out += j.dump();
    return;
  }
  if (primitive_array(j)) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
    out += "]";
    return;
  }
  const bool object = j.is_object();
  out += object ? "{\n" : "[\n";
  std::size_t i = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++i) {
    out += pad;
    if (object) out += json(it.key()).dump() + ": ";
    write_pretty(*it, out, indent + 2);
    out += i + 1 < j.size() ? ",\n" : "\n";
  }
  out += std::string(indent, ' ') + (object ? "}" : "]");
}

inline std::string pretty(const json& j) {
  std::string out;
  write_pretty(j, out);
  return out + "\n";
}

/// Canonical text of a structure file.
inline std::string serialize(const Structure& s) { return pretty(to_json(s)); }

// ---------------------------------------------------------------- reading

/// A JSON node together with its path from the document root, so schema
/// errors can name the offending key.
class Node {
 public:
  Node(const json& j, std::string path) : j_(&j), path_(std::move(path)) {}

  const json& raw() const { return *j_; }
  const std::string& path() const { return path_; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("schema error at " + (path_.empty() ? std::string("<root>") : path_) + ": " + what);
  }

  bool has(const std::string& key) const { return j_->is_object() && j_->contains(key); }
  Node operator[](const std::string& key) const {
    if (!j_->is_object()) fail("expected an object");
    auto it = j_->find(key);
    if (it == j_->end()) fail("missing key \"" + key + "\"");
    return Node(*it, path_.empty() ? key : path_ + "." + key);
  }
  Node operator[](std::size_t i) const { return Node((*j_)[i], path_ + "[" + std::to_string(i) + "]"); }

  std::size_t size() const {
    if (!j_->is_array()) fail("expected an array");
    return j_->size();
  }
  Node array(std::size_t expected) const {
    if (size() != expected) fail("expected " + std::to_string(expected) + " entries, got " + std::to_string(size()));
    return *this;
  }
  std::string string() const {
    if (!j_->is_string()) fail("expected a string");
    return j_->get<std::string>();
  }
  std::size_t index(std::size_t bound) const {
    if (!j_->is_number_unsigned() && !(j_->is_number_integer() && j_->get<long long>() >= 0))
      fail("expected a nonnegative integer");
    const auto v = j_->get<std::size_t>();
    if (v >= bound) fail("index " + std::to_string(v) + " out of range (< " + std::to_string(bound) + ")");
    return v;
  }
  Scalar scalar(FieldSpec f) const {
    if (!j_->is_string()) fail("scalars are written as strings, e.g. \"3/2\"");
    try {
      return Scalar::parse(f, j_->get<std::string>());
    } catch (const ParseError& e) {
      fail(e.what());
    }
  }

 private:
  const json* j_;
  std::string path_;
};

inline FieldSpec read_field(const Node& n) {
  const std::string kind = n["kind"].string();
  if (kind == "Q") return FieldSpec::rationals();
  if (kind != "Fp") n["kind"].fail("expected \"Q\" or \"Fp\"");
  const Node p = n["p"];
  if (!p.raw().is_number_unsigned()) p.fail("expected a positive integer");
  try {
    return FieldSpec::prime(p.raw().get<std::uint64_t>());
  } catch (const Error& e) {
    p.fail(e.what());
  }
}

inline std::vector<std::string> read_labels(const Node& n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n.size(); ++i) out.push_back(n[i].string());
  if (out.empty()) n.fail("at least one basis label is needed");
  return out;
}

inline Vector read_vector(const Node& n, FieldSpec f, std::size_t len) {
  n.array(len);
  Vector v;
  for (std::size_t i = 0; i < len; ++i) v.push_back(n[i].scalar(f));
  return v;
}

inline Matrix read_matrix(const Node& n, FieldSpec f, std::size_t rows, std::size_t cols) {
  n.array(rows);
  Vector entries;
  for (std::size_t i = 0; i < rows; ++i) {
    Vector r = read_vector(n[i], f, cols);
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return Matrix(f, rows, cols, std::move(entries));
}

inline Tensor3 read_tensor(const Node& n, FieldSpec f, std::size_t d) {
  n.array(d);
  Vector entries;
  for (std::size_t i = 0; i < d; ++i) {
    n[i].array(d);
    for (std::size_t j = 0; j < d; ++j) {
      Vector r = read_vector(n[i][j], f, d);
      entries.insert(entries.end(), r.begin(), r.end());
    }
  }
  return Tensor3(f, d, d, d, std::move(entries));
}

inline AlgebraPresentation read_algebra(const Node& n, FieldSpec f) {
  auto labels = read_labels(n["labels"]);
  const std::size_t d = labels.size();
  return AlgebraPresentation(f, std::move(labels), read_tensor(n["mult"], f, d), read_vector(n["unit"], f, d));
}

inline CoalgebraPresentation read_coalgebra(const Node& n, FieldSpec f) {
  auto labels = read_labels(n["labels"]);
  const std::size_t d = labels.size();
  return CoalgebraPresentation(f, std::move(labels), read_tensor(n["comult"], f, d), read_vector(n["counit"], f, d));
}

inline WeakHopfPresentation read_weakhopf(const Node& n, FieldSpec f) {
  auto labels = read_labels(n["labels"]);
  const std::size_t d = labels.size();
  AlgebraPresentation a(f, labels, read_tensor(n["mult"], f, d), read_vector(n["unit"], f, d));
  CoalgebraPresentation c(f, labels, read_tensor(n["comult"], f, d), read_vector(n["counit"], f, d));
  std::optional<Matrix> s;
  if (n.has("antipode")) s = read_matrix(n["antipode"], f, d, d);
  return WeakHopfPresentation(std::move(a), std::move(c), std::move(s));
}

inline HopfAlgebroidPresentation read_algebroid(const Node& n, FieldSpec f) {
  CommAlgebraPresentation base(read_algebra(n["base"], f));
  AlgebraPresentation total = read_algebra(n["total"], f);
  const std::size_t r = base.dim(), d = total.dim();
  Matrix src = read_matrix(n["source"], f, d, r), tgt = read_matrix(n["target"], f, d, r);
  Matrix lift = read_matrix(n["comult_lift"], f, d * d, d), counit = read_matrix(n["counit"], f, r, d);
  std::optional<Matrix> s;
  if (n.has("antipode")) s = read_matrix(n["antipode"], f, d, d);
  return HopfAlgebroidPresentation(std::move(base), std::move(total), std::move(src), std::move(tgt), std::move(lift),
                                   std::move(counit), std::move(s));
}

inline HopfCategoryPresentation read_hopfcat(const Node& n, FieldSpec f) {
  const Node on = n["objects"];
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < on.size(); ++i) objects.push_back(on[i].string());
  const std::size_t k = objects.size();
  const Node hn = n["homs"].array(k);
  std::vector<CoalgebraPresentation> homs;
  for (std::size_t x = 0; x < k; ++x) {
    hn[x].array(k);
    for (std::size_t y = 0; y < k; ++y) homs.push_back(read_coalgebra(hn[x][y], f));
  }
  auto dim = [&](std::size_t x, std::size_t y) { return homs[x * k + y].dim(); };
  const Node cn = n["comps"].array(k);
  std::vector<Matrix> comps;
  for (std::size_t x = 0; x < k; ++x) {
    cn[x].array(k);
    for (std::size_t y = 0; y < k; ++y) {
      cn[x][y].array(k);
      for (std::size_t z = 0; z < k; ++z) comps.push_back(read_matrix(cn[x][y][z], f, dim(x, z), dim(x, y) * dim(y, z)));
    }
  }
  const Node un = n["units"].array(k);
  std::vector<Vector> units;
  for (std::size_t x = 0; x < k; ++x) units.push_back(read_vector(un[x], f, dim(x, x)));
  std::optional<std::vector<Matrix>> antipode;
  if (n.has("antipode")) {
    const Node sn = n["antipode"].array(k);
    antipode.emplace();
    for (std::size_t x = 0; x < k; ++x) {
      sn[x].array(k);
      for (std::size_t y = 0; y < k; ++y) antipode->push_back(read_matrix(sn[x][y], f, dim(y, x), dim(x, y)));
    }
  }
  return HopfCategoryPresentation(f, std::move(objects), std::move(homs), std::move(comps), std::move(units),
                                  std::move(antipode));
}

inline examples::GroupPresentation read_group(const Node& n) {
  auto labels = read_labels(n["labels"]);
  const std::size_t d = labels.size();
  const Node t = n["table"].array(d);
  std::vector<std::vector<std::size_t>> table(d, std::vector<std::size_t>(d));
  for (std::size_t a = 0; a < d; ++a) {
    t[a].array(d);
    for (std::size_t b = 0; b < d; ++b) table[a][b] = t[a][b].index(d);
  }
  return examples::GroupPresentation(std::move(labels), std::move(table));
}

inline examples::GroupoidPresentation read_groupoid(const Node& n) {
  const Node on = n["objects"];
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < on.size(); ++i) objects.push_back(on[i].string());
  const Node mn = n["morphisms"];
  std::vector<examples::Morphism> morphisms;
  for (std::size_t i = 0; i < mn.size(); ++i)
    morphisms.push_back({mn[i]["label"].string(), mn[i]["source"].index(objects.size()), mn[i]["target"].index(objects.size())});
  const std::size_t m = morphisms.size();
  const Node cn = n["composition"].array(m);
  std::vector<std::vector<std::optional<std::size_t>>> comp(m, std::vector<std::optional<std::size_t>>(m));
  for (std::size_t f = 0; f < m; ++f) {
    cn[f].array(m);
    for (std::size_t h = 0; h < m; ++h)
      if (!cn[f][h].raw().is_null()) comp[f][h] = cn[f][h].index(m);
  }
  return examples::GroupoidPresentation(std::move(objects), std::move(morphisms), std::move(comp));
}

/// The full validator suite for the structure's kind. Group, groupoid and
/// commutative algebra presentations validate in their constructors.
inline AxiomReport validate(const Structure& s) {
  AxiomReport report;
  if (auto w = std::get_if<WeakHopfPresentation>(&s.value)) {
    report.merge(weakhopf::check_weak_bialgebra(*w), "weak bialgebra");
    if (report.ok() && w->has_antipode()) report.merge(weakhopf::check_antipode(*w), "antipode");
  } else if (auto h = std::get_if<HopfAlgebroidPresentation>(&s.value)) {
    report = hopfalgd::check_hopf_algebroid(*h);
  } else if (auto c = std::get_if<HopfCategoryPresentation>(&s.value)) {
    report = hopfcat::check_hopf_category(*c);
  }
  return report;
}

/// Reads a structure document without running the axiom validators.
inline Structure read_structure(const json& doc) {
  const Node root(doc, "");
  const std::string version = root["format_version"].string();
  if (version != format_version) root["format_version"].fail("unsupported version \"" + version + "\"");
  const FieldSpec f = read_field(root["field"]);
  const std::string kind = root["kind"].string();
  const Node p = root["payload"];
  if (kind == "weakhopf") return {f, read_weakhopf(p, f)};
  if (kind == "algebroid") return {f, read_algebroid(p, f)};
  if (kind == "hopfcat") return {f, read_hopfcat(p, f)};
  if (kind == "group") return {f, read_group(p)};
  if (kind == "groupoid") return {f, read_groupoid(p)};
  if (kind == "commalgebra") return {f, CommAlgebraPresentation(read_algebra(p, f))};
  root["kind"].fail("unknown kind \"" + kind + "\"");
}

inline json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": not valid JSON: " + e.what());
  }
}

/// Parses and validates; axiom failures throw InvalidStructure with the
/// full report.
inline Structure parse_structure_text(const std::string& text, const std::string& source = "<input>") {
  Structure s = read_structure(parse_json_text(text, source));
  const AxiomReport report = validate(s);
  if (!report.ok()) throw InvalidStructure(report);
  return s;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Structure parse_structure_file(const std::string& path) { return parse_structure_text(read_file(path), path); }

}  // namespace mkit::cli

#endif  // MKIT_CLI_STRUCTURE_IO_HPP
