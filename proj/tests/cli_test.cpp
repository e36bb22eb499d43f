#include <gtest/gtest.h>

#include <mkit/cli.hpp>

#include <filesystem>
#include <fstream>

using namespace mkit;
using namespace mkit::exactlin;
using namespace mkit::cli;
using namespace mkit::examples;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = execute_command(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("mkit_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = (path_ / name).string();
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

std::vector<Structure> samples() {
  auto comm = [](const std::string& n, FieldSpec f) { return CommAlgebraPresentation(named_commutative_algebra(n, f)); };
  return {
      {Q, group_algebra(named_group("C2"), Q)},
      {F3, dual_group_algebra(named_group("S3"), F3)},
      {Q, groupoid_algebra(pair_groupoid(2), Q)},
      {Q, WeakHopfPresentation(group_algebra(named_group("C3"), Q).algebra(), group_algebra(named_group("C3"), Q).coalgebra())},
      {Q, pair_hopf_algebroid(comm("k[x]/(x^2)", Q))},
      {F2, hopf_algebroid_from_hopf_algebra(group_algebra(named_group("C2"), F2))},
      {Q, hopf_category_from_groupoid(named_groupoid("connected2:C2"), Q)},
      {F3, hopf_category_from_hopf_algebra(dual_group_algebra(named_group("C3"), F3))},
      {Q, named_group("Q8")},
      {Q, named_groupoid("connected2:C2")},
      {F2, comm("k^2", F2)},
  };
}

json without_timing(const std::string& text) {
  json j = json::parse(text);
  j.erase("timing_ms");
  return j;
}

std::string c3(FieldSpec f) { return serialize({f, group_algebra(named_group("C3"), f)}); }

}  // namespace

TEST(StructureFile, RoundTripIsByteStable) {
  for (const auto& s : samples()) {
    const std::string once = serialize(s);
    const Structure back = parse_structure_text(once);
    EXPECT_EQ(back.kind(), s.kind());
    EXPECT_EQ(back.field, s.field);
    EXPECT_EQ(serialize(back), once) << to_string(s.kind());
  }
}

TEST(StructureFile, ParsedWeakHopfMatchesGenerator) {
  const auto w = group_algebra(named_group("S3"), F3);
  const Structure s = parse_structure_text(serialize({F3, w}));
  const auto& p = std::get<WeakHopfPresentation>(s.value);
  EXPECT_EQ(p.labels(), w.labels());
  EXPECT_EQ(p.algebra().mult(), w.algebra().mult());
  EXPECT_EQ(p.coalgebra().comult(), w.coalgebra().comult());
  EXPECT_EQ(p.antipode(), w.antipode());
}

TEST(StructureFile, ShippedSamplesAreCanonical) {
  for (const auto& [name, f] : {std::pair{"c3_q.json", Q}, std::pair{"c3_f3.json", F3}}) {
    const std::string path = std::string(MKIT_DATA_DIR) + "/" + name;
    const std::string text = read_file(path);
    EXPECT_EQ(text, c3(f)) << name;
    EXPECT_EQ(parse_structure_file(path).kind(), Kind::WeakHopf);
  }
}

TEST(StructureFile, NonPrimeFieldRejected) {
  json j = json::parse(c3(Q));
  j["field"] = json{{"kind", "Fp"}, {"p", 4}};
  try {
    parse_structure_text(j.dump());
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("field.p"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("not prime"), std::string::npos) << e.what();
  }
}

TEST(StructureFile, SchemaErrorsNameTheKey) {
  auto error_of = [](const json& j) {
    try {
      parse_structure_text(j.dump());
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  json j = json::parse(c3(Q));
  j["payload"].erase("unit");
  EXPECT_NE(error_of(j).find("payload: missing key \"unit\""), std::string::npos) << error_of(j);
  j = json::parse(c3(Q));
  j["payload"]["mult"][1][2][0] = 1;
  EXPECT_NE(error_of(j).find("payload.mult[1][2][0]"), std::string::npos) << error_of(j);
  j = json::parse(c3(Q));
  j["payload"]["comult"][0].erase(1);
  EXPECT_NE(error_of(j).find("payload.comult[0]: expected 3 entries"), std::string::npos) << error_of(j);
  j = json::parse(c3(Q));
  j["payload"]["counit"][2] = "1/0";
  EXPECT_NE(error_of(j).find("payload.counit[2]"), std::string::npos) << error_of(j);
  j = json::parse(c3(Q));
  j["format_version"] = "maschke-kit/0";
  EXPECT_NE(error_of(j).find("format_version"), std::string::npos);
  j = json::parse(c3(Q));
  j["kind"] = "quantum group";
  EXPECT_NE(error_of(j).find("unknown kind"), std::string::npos);
  EXPECT_THROW(parse_structure_text("{ not json"), ParseError);
}

TEST(StructureFile, BrokenAssociativityNamesWitnessTriple) {
  json j = json::parse(c3(Q));
  j["payload"]["mult"][1][1] = json{"1", "0", "0"};  // g g = e
  try {
    parse_structure_text(j.dump());
    FAIL();
  } catch (const InvalidStructure& e) {
    bool found = false;
    for (const auto& f : e.report().failures)
      if (f.axiom.find("associativity") != std::string::npos && f.witness.size() == 3) found = true;
    EXPECT_TRUE(found) << e.report().summary();
  }
}

TEST(Cli, MaschkeOnRationalC3Passes) {
  TempDir dir;
  const std::string path = dir.write("c3_q.json", c3(Q));
  const CliRun r = run({"maschke", "--structure", path});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["result"]["verdict"], "Pass");
  for (const char* side : {"integral_side", "cointegral_side"})
    for (const auto& e : j["result"][side]) EXPECT_TRUE(e["feasible"].get<bool>()) << e.dump();
  EXPECT_EQ(j["tensor_basis"], "left-major");
  EXPECT_TRUE(j.contains("timing_ms"));
}

TEST(Cli, AssertExitCodes) {
  TempDir dir;
  const std::string path = dir.write("c3_f3.json", c3(F3));
  EXPECT_EQ(run({"integrals", "--structure", path, "--side", "left", "--normalized", "--assert", "infeasible"}).code, 0);
  const CliRun mismatch = run({"integrals", "--structure", path, "--side", "left", "--normalized", "--assert", "feasible"});
  EXPECT_EQ(mismatch.code, 2);
  EXPECT_FALSE(json::parse(mismatch.out)["assertion"]["met"].get<bool>());
  EXPECT_EQ(run({"cointegrals", "--structure", path, "--side", "right", "--normalized", "--assert", "feasible"}).code, 0);
  EXPECT_EQ(run({"separability", "--structure", path, "--assert", "infeasible"}).code, 0);
  EXPECT_EQ(run({"coseparability", "--structure", path, "--assert", "feasible"}).code, 0);
}

TEST(Cli, GenerateWritesCanonicalFile) {
  const CliRun r = run({"generate", "group-algebra", "--group", "C4", "--field", "Fp:2", "--out", "-"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, serialize({F2, group_algebra(named_group("C4"), F2)}));
  TempDir dir;
  const std::string out = dir.file("pair2.json");
  ASSERT_EQ(run({"generate", "hopf-category", "--groupoid", "pair2", "--field", "Fp:3", "--out", out}).code, 0);
  EXPECT_EQ(read_file(out), serialize({F3, hopf_category_from_groupoid(pair_groupoid(2), F3)}));
  for (const auto& g : std::vector<std::vector<std::string>>{{"dual-group-algebra", "--group", "S3"},
                                                             {"groupoid-algebra", "--groupoid", "pair3"},
                                                             {"group", "--group", "D4"},
                                                             {"groupoid", "--groupoid", "connected2:C2"},
                                                             {"hopf-category", "--group", "C2"},
                                                             {"pair-algebroid", "--base", "k[x]/(x^2)"},
                                                             {"commalgebra", "--base", "k^3"}}) {
    std::vector<std::string> args{"generate"};
    args.insert(args.end(), g.begin(), g.end());
    const CliRun gen = run(args);
    ASSERT_EQ(gen.code, 0) << g[0] << ": " << gen.err;
    EXPECT_EQ(serialize(parse_structure_text(gen.out)), gen.out) << g[0];
  }
}

TEST(Cli, UsageErrors) {
  TempDir dir;
  const std::string path = dir.write("c3.json", c3(Q));
  EXPECT_EQ(run({}).code, 4);
  EXPECT_EQ(run({"frobnicate"}).code, 4);
  EXPECT_EQ(run({"integrals"}).code, 4);
  EXPECT_EQ(run({"integrals", "--structure", path, "--side", "up"}).code, 4);
  EXPECT_EQ(run({"integrals", "--structure", path, "--field", "Q"}).code, 4);
  EXPECT_EQ(run({"maschke", "--structure", path, "--assert", "feasible"}).code, 4);
  EXPECT_EQ(run({"generate", "group-algebra"}).code, 4);
  EXPECT_EQ(run({"generate", "group-algebra", "--group", "Z9"}).code, 4);
  EXPECT_EQ(run({"generate", "tensor-category", "--group", "C2"}).code, 4);
  const std::string comm = dir.write("k2.json", serialize({Q, CommAlgebraPresentation(named_commutative_algebra("k^2", Q))}));
  EXPECT_EQ(run({"coseparability", "--structure", comm}).code, 4);
  EXPECT_EQ(run({"separability", "--structure", comm, "--assert", "feasible"}).code, 0);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, InvalidInputExitsThree) {
  TempDir dir;
  EXPECT_EQ(run({"integrals", "--structure", dir.file("missing.json")}).code, 3);
  EXPECT_EQ(run({"integrals", "--structure", dir.write("bad.json", "[1, 2")}).code, 3);
  json j = json::parse(c3(Q));
  j["payload"]["counit"][1] = "2";
  const std::string bad = dir.write("counit.json", j.dump());
  const CliRun v = run({"validate", "--structure", bad});
  EXPECT_EQ(v.code, 3);
  const json report = json::parse(v.out);
  EXPECT_FALSE(report["valid"].get<bool>());
  EXPECT_FALSE(report["report"]["failures"].empty());
  const CliRun q = run({"integrals", "--structure", bad});
  EXPECT_EQ(q.code, 3);
  EXPECT_EQ(json::parse(q.out)["error"]["type"], "invalid structure");
  const std::string good = dir.write("good.json", c3(Q));
  EXPECT_EQ(run({"validate", "--structure", good}).code, 0);
}

TEST(Cli, MaschkeRefusesMissingAntipode) {
  TempDir dir;
  const auto w = group_algebra(named_group("C2"), Q);
  const std::string path = dir.write("nosigma.json", serialize({Q, WeakHopfPresentation(w.algebra(), w.coalgebra())}));
  const CliRun r = run({"maschke", "--structure", path});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("only claimed for Hopf monoids"), std::string::npos);
  EXPECT_EQ(run({"integrals", "--structure", path, "--normalized"}).code, 0);
}

TEST(Cli, ReportsAreDeterministicModuloTiming) {
  TempDir dir;
  const std::string path = dir.write("cat.json", serialize({Q, hopf_category_from_groupoid(named_groupoid("connected2:C2"), Q)}));
  for (const char* cmd : {"separability", "maschke", "cointegrals"}) {
    const CliRun a = run({cmd, "--structure", path}), b = run({cmd, "--structure", path});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(without_timing(a.out), without_timing(b.out)) << cmd;
  }
}

TEST(Cli, EmbeddedSolutionsReverifyAgainstRebuiltSystems) {
  TempDir dir;
  std::size_t checked = 0;
  for (const auto& s : samples()) {
    const std::string path = dir.write("s.json", serialize(s));
    for (Query q : {Query::Integral, Query::Cointegral, Query::Separability, Query::Coseparability})
      for (const char* side : {"left", "right"})
        for (bool normalized : {false, true}) {
          std::vector<std::string> args{to_string(q), "--structure", path};
          const bool sided = q == Query::Integral || q == Query::Cointegral;
          if (!sided && (side != std::string("left") || normalized)) continue;
          if (sided) {
            args.insert(args.end(), {"--side", side});
            if (normalized) args.push_back("--normalized");
          }
          const CliRun r = run(args);
          if (s.kind() == Kind::CommAlgebra && q != Query::Separability) {
            EXPECT_EQ(r.code, 4);
            continue;
          }
          ASSERT_EQ(r.code, 0) << r.err;
          const json report = json::parse(r.out);
          const Structure back = parse_structure_file(path);
          QuerySpec spec{q, side == std::string("left") ? Side::Left : Side::Right, Variant::Primed,
                         report["result"].value("normalized", normalized)};
          const auto systems = query_systems(back, spec);
          const json& embedded = report["result"]["systems"];
          ASSERT_EQ(embedded.size(), systems.size());
          for (std::size_t i = 0; i < systems.size(); ++i) {
            EXPECT_EQ(embedded[i]["name"], systems[i].name);
            if (!embedded[i]["feasible"].get<bool>()) {
              EXPECT_FALSE(systems[i].system.solve());
              continue;
            }
            Vector x;
            for (const auto& e : embedded[i]["solution"]) x.push_back(Scalar::parse(back.field, e.get<std::string>()));
            EXPECT_TRUE(systems[i].system.satisfied_by(x)) << to_string(s.kind()) << " " << args[0];
            ++checked;
          }
        }
  }
  EXPECT_GT(checked, 50u);
}

TEST(Cli, DuoidalVariantAndTextFormat) {
  TempDir dir;
  const std::string path = dir.write("pair2.json", serialize({Q, groupoid_algebra(pair_groupoid(2), Q)}));
  const CliRun r = run({"integrals", "--structure", path, "--variant", "duoidal", "--normalized", "--format", "text"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("variant: duoidal"), std::string::npos);
  EXPECT_NE(r.out.find("feasible: true"), std::string::npos);
  EXPECT_NE(r.out.find("tensor_basis: left-major"), std::string::npos);
  const std::string out = dir.file("report.json");
  EXPECT_EQ(run({"maschke", "--structure", path, "--out", out}).code, 0);
  EXPECT_EQ(json::parse(read_file(out))["result"]["verdict"], "Pass");
}
