#include <gtest/gtest.h>

#include <fstream>
#include <random>

#include "vnumlab/commands.hpp"
#include "vnumlab/errors.hpp"
#include "vnumlab/io.hpp"

namespace vnumlab {
namespace {

const char* kCubicFamily =
    R"({"ring":{"vars":["X","Y","Z"]},"module":{"num":["1"],"den":["X^3","X*Y^4"]},)"
    R"("ideals":{"I":["X","Y^2","Z^3"]},"family":{"kind":"In_mod_In1N","I":"I","a":"1","n_max":10}})";

std::string axes_doc(int d1, int d2, int n) {
  // (XY) + (X^d1, Y^d2)^n written out generator by generator.
  std::string den = "\"X*Y\"";
  for (int j = 0; j <= n; ++j) {
    den += ",\"X^" + std::to_string(d1 * (n - j)) + "*Y^" + std::to_string(d2 * j) + "\"";
  }
  // X^0 is not valid syntax; rewrite the two pure powers.
  auto fix = [&](const std::string& from, const std::string& to) {
    auto pos = den.find(from);
    if (pos != std::string::npos) den.replace(pos, from.size(), to);
  };
  fix("\"X^" + std::to_string(d1 * n) + "*Y^0\"", "\"X^" + std::to_string(d1 * n) + "\"");
  fix("\"X^0*Y^" + std::to_string(d2 * n) + "\"", "\"Y^" + std::to_string(d2 * n) + "\"");
  return R"({"ring":{"vars":["X","Y"]},"module":{"den":[)" + den + "]}}";
}

ParseError parse_failure(const std::string& text) {
  try {
    parse_input(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "accepted: " << text;
  return ParseError("none", "");
}

std::filesystem::path fresh_dir() {
  std::random_device rd;
  auto dir = std::filesystem::temp_directory_path() / ("vnumlab-test-" + std::to_string(rd()));
  std::filesystem::remove_all(dir);
  return dir;
}

TEST(Parse, CubicFamilyDocument) {
  const auto doc = parse_input(kCubicFamily);
  EXPECT_EQ(doc.ring->names(), (std::vector<std::string>{"X", "Y", "Z"}));
  EXPECT_EQ(doc.ring->weights(), (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_TRUE(doc.num.is_unit());
  EXPECT_EQ(doc.den.to_strings(), (std::vector<std::string>{"X^3", "X*Y^4"}));
  ASSERT_TRUE(doc.family);
  EXPECT_EQ(doc.family->kind, FamilyKind::InModIn1N);
  EXPECT_EQ(doc.family->n_max, 10);
  const auto spec = doc.family_spec();
  EXPECT_EQ(spec.I.to_strings(), (std::vector<std::string>{"X", "Y^2", "Z^3"}));
  EXPECT_TRUE(spec.a.is_unit());
}

TEST(Parse, EmptyDenominatorIsZero) {
  const auto doc = parse_input(R"({"ring":{"vars":["X"]},"module":{"num":["X"],"den":[]}})");
  EXPECT_TRUE(doc.den.is_zero());
}

TEST(Parse, DiagnosticsWithPositions) {
  auto e = parse_failure("{\"ring\":{\"vars\":[\"X\"]},\n\"module\":{\"den\":[\"X^0\"]}}");
  EXPECT_EQ(e.code(), "syntax-error");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 21u);  // the 0 of X^0

  e = parse_failure(R"({"ring":{"vars":["X"]},"module":{"den":["Y"]}})");
  EXPECT_EQ(e.code(), "unknown-variable");
  EXPECT_EQ(e.column(), 42u);

  e = parse_failure(R"({"ring":{"vars":["X"],"weights":[0]}})");
  EXPECT_EQ(e.code(), "non-positive-weight");
  EXPECT_EQ(e.column(), 34u);

  e = parse_failure(R"({"ring":{"vars":["X"]},"ideals":{"I":["X"]},"family":{"I":"K"}})");
  EXPECT_EQ(e.code(), "unknown-ideal");

  e = parse_failure(R"({"ring":{"vars":["X"]},"extra":1})");
  EXPECT_EQ(e.code(), "unknown-field");
  EXPECT_EQ(e.column(), 24u);

  e = parse_failure("{\"ring\":\n  {\"vars\":[\"X\"]}");
  EXPECT_EQ(e.code(), "syntax-error");
  EXPECT_EQ(e.line(), 2u);

  EXPECT_EQ(parse_failure(R"({"ring":{"vars":["X"]},"family":{"I":"1","kind":"Bad"}})").code(), "unknown-kind");
  EXPECT_EQ(parse_failure(R"({"ring":{"vars":"X"}})").code(), "schema-error");
  EXPECT_EQ(parse_failure(R"({"module":{}})").code(), "schema-error");
  EXPECT_EQ(parse_failure(R"({"ring":{"vars":["X"]},"module":{"num":["X"],"den":["1"]}})").code(),
            "invalid-spec");
  EXPECT_EQ(parse_failure(R"({"ring":{"vars":["X"]},"ideals":{"1":["X"]}})").code(), "schema-error");
}

TEST(Parse, RoundTripIsIdentityOnCanonicalForm) {
  const char* docs[] = {
      kCubicFamily,
      R"({"ring":{"vars":["A","B"],"weights":[2,3]},"module":{"num":["A*B","B^2","A*B^2"],"shift":-1},
          "ideals":{"I":["A","B"],"J":["A"]},"family":{"kind":"M_mod_InN","I":"I","J":"J","a":"I","n_max":5},
          "operation":{"op":"power","args":["I"],"exponent":3},
          "options":{"window":4,"s_max":5,"degree_bound":12,"format":"csv","out":"x.csv"}})",
  };
  for (const char* text : docs) {
    const auto canonical = to_json(parse_input(text)).dump();
    EXPECT_EQ(to_json(parse_input(canonical)).dump(), canonical);
  }
}

TEST(Serialize, VReportFormat) {
  // M/IM for M = R/(X^3, XY^4) and I = (X, Y^2, Z^3).
  const auto doc = parse_input(R"({"ring":{"vars":["X","Y","Z"]},"module":{"den":["X^3","X*Y^4","X","Y^2","Z^3"]}})");
  const auto result = run_command(doc, "vnumber");
  EXPECT_EQ(result.json.dump(), R"({"per_prime":{"X,Y,Z":3},"v":3,"witness":{"X,Y,Z":"Y*Z^2"}})");
}

TEST(Serialize, InfinitySentinels) {
  EXPECT_EQ(to_json(ExtInt::infinity()), "inf");
  EXPECT_EQ(to_json(ExtInt::neg_infinity()), "-inf");
  EXPECT_EQ(to_json(ExtInt(4)), 4);
  EXPECT_EQ(ext_int_from_json(Json("inf")), ExtInt::infinity());
  EXPECT_EQ(ext_int_from_json(Json(-3)), ExtInt(-3));
}

TEST(Serialize, CsvQuoting) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(Serialize, SeriesRoundTrip) {
  const auto doc = parse_input(kCubicFamily);
  const auto series = evaluate_series(doc.family_spec());
  const auto j = to_json(*doc.ring, series);
  EXPECT_EQ(to_json(*doc.ring, series_from_json(*doc.ring, j)), j);
}

TEST(Commands, FamilyCsv) {
  const auto doc = parse_input(kCubicFamily);
  const auto csv = render(run_command(doc, "family"), "csv");
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n,indeg,v,ass,\"v_p:(X,Y,Z)\",colon_stable");
  std::vector<std::string> v;
  while (std::getline(in, line)) {
    const auto a = line.find(',');
    const auto b = line.find(',', a + 1);
    const auto c = line.find(',', b + 1);
    v.push_back(line.substr(b + 1, c - b - 1));
  }
  EXPECT_EQ(v, (std::vector<std::string>{"3", "4", "5", "7", "10", "13", "15", "17", "19", "21", "23"}));
}

TEST(Commands, VNumberAxesFamily) {
  const auto doc = parse_input(axes_doc(2, 3, 4));
  EXPECT_EQ(run_command(doc, "vnumber").json["v"], 7);
  EXPECT_EQ(run_command(doc, "indeg").json["end"], 11);
}

TEST(Commands, AssOfZeroModule) {
  const auto doc = parse_input(R"({"ring":{"vars":["X","Y"]},"module":{"num":["X"],"den":["X"]}})");
  EXPECT_EQ(run_command(doc, "ass").json.dump(), "[]");
}

TEST(Commands, OracleProbeCheckReductionIdeal) {
  const auto doc = parse_input(kCubicFamily);
  EXPECT_EQ(run_command(doc, "oracle").json["agree"], true);
  EXPECT_EQ(run_command(doc, "probe").json["delta_degree"], 2);
  const auto check = run_command(doc, "check");
  EXPECT_EQ(check.exit_code, kExitOk);
  EXPECT_EQ(check.json["ok"], true);

  const auto red = parse_input(
      R"({"ring":{"vars":["X","Y"]},"ideals":{"I":["X^2","X*Y","Y^2"],"J":["X^2","Y^2"],"K":["X^2"]},)"
      R"("family":{"I":"I","J":"J","n_max":5}})");
  EXPECT_EQ(run_command(red, "reduction-check").json["reduction_number"], 1);
  auto not_red = red;
  not_red.family->J = "K";
  EXPECT_EQ(run_command(not_red, "reduction-check").exit_code, kExitVerificationFailure);

  const auto op = parse_input(
      R"({"ring":{"vars":["X","Y"]},"ideals":{"A":["X^3","X*Y^4"],"B":["X"]},)"
      R"("operation":{"op":"colon","args":["A","B"]}})");
  EXPECT_EQ(run_command(op, "ideal").json["result"], Json({"X^2", "Y^4"}));
}

TEST(Commands, Errors) {
  const auto doc = parse_input(R"({"ring":{"vars":["X"]}})");
  EXPECT_THROW(run_command(doc, "family"), Error);
  EXPECT_THROW(run_command(doc, "nonsense"), Error);
  EXPECT_THROW(render(run_command(doc, "indeg"), "csv"), Error);
}

TEST(Commands, OutputIsDeterministic) {
  const auto doc = parse_input(kCubicFamily);
  EXPECT_EQ(render(run_command(doc, "family"), "json"), render(run_command(doc, "family"), "json"));
}

TEST(Cache, HitExtendAndCorruption) {
  const auto dir = fresh_dir();
  auto doc = parse_input(kCubicFamily);
  doc.family->n_max = 8;
  RunOptions run{dir};

  const auto first = cached_series(doc, dir);
  EXPECT_FALSE(first.hit);
  const auto bytes = render(run_command(doc, "family", run), "json");
  const auto second = cached_series(doc, dir);
  EXPECT_TRUE(second.hit);
  EXPECT_EQ(second.reused_points, 9);
  EXPECT_EQ(render(run_command(doc, "family", run), "json"), bytes);

  // Raising n_max reuses n = 0..8 and computes 9..12.
  doc.family->n_max = 12;
  const auto extended = cached_series(doc, dir);
  EXPECT_EQ(extended.reused_points, 9);
  EXPECT_EQ(extended.series.points.size(), 13u);
  EXPECT_EQ(extended.series.v_values(), evaluate_series(doc.family_spec()).v_values());

  // A different document has a different key.
  auto other = doc;
  other.family->kind = FamilyKind::MModIn1N;
  EXPECT_NE(cache_key(other), cache_key(doc));
  EXPECT_FALSE(cached_series(other, dir).hit);

  // Corrupt entries are ignored and rewritten.
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::ofstream(entry.path(), std::ios::trunc) << "{not json";
  }
  const auto recovered = cached_series(doc, dir);
  EXPECT_FALSE(recovered.hit);
  EXPECT_EQ(recovered.series.v_values(), extended.series.v_values());
  EXPECT_TRUE(cached_series(doc, dir).hit);
  std::filesystem::remove_all(dir);
}

TEST(Cache, KeyIgnoresNMaxAndOutputOptions) {
  auto a = parse_input(kCubicFamily);
  auto b = a;
  b.family->n_max = 20;
  b.options.format = "csv";
  b.options.window = 5;
  EXPECT_EQ(cache_key(a), cache_key(b));
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
}

TEST(Golden, AllAssertionsPass) {
  const auto result = run_verify_golden();
  EXPECT_EQ(result.exit_code, kExitOk);
  EXPECT_EQ(result.json["failed"], 0);
  EXPECT_GT(result.json["passed"].get<int>(), 600);
}

}  // namespace
}  // namespace vnumlab
