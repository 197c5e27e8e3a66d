#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "scaledim/io.hpp"
#include "support.hpp"

using namespace scaledim;
using namespace testsupport;

#ifndef SCALEDIM_DATA_DIR
#define SCALEDIM_DATA_DIR "data"
#endif

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("bundled drive context parses to the expected shape") {
  FormalContext drive = parse_cxt(slurp(std::string(SCALEDIM_DATA_DIR) + "/drive.cxt"));
  CHECK(drive == drive_context());
  CHECK(drive.object_count() == 5);
  CHECK(drive.attribute_count() == 6);
  CHECK(drive.incidence_count() == 21);
}

TEST_CASE("bundled diag3 context parses") {
  FormalContext diag = parse_cxt(slurp(std::string(SCALEDIM_DATA_DIR) + "/diag3.cxt"));
  CHECK(diag == diag3_context());
}

TEST_CASE("cxt write/parse round trip and fixpoint") {
  std::mt19937 rng(88);
  for (int round = 0; round < 40; ++round) {
    FormalContext ctx = random_context(rng, 6, 6);
    std::string bytes = write_cxt(ctx);
    FormalContext back = parse_cxt(bytes);
    CHECK(back == ctx);
    CHECK(write_cxt(back) == bytes);
  }
}

TEST_CASE("a 0x0 context has a minimal well-formed file") {
  FormalContext empty;
  std::string bytes = write_cxt(empty);
  CHECK(bytes == "B\n\n0\n0\n\n");
  CHECK(parse_cxt(bytes) == empty);
}

TEST_CASE("cxt parse errors carry line numbers") {
  // row with 5 symbols against 6 declared attributes
  std::string bad =
      "B\n\n2\n6\n\ng1\ng2\n1\n2\n3\n4\n5\n6\nXXXXX\nXXXXXX\n";
  try {
    parse_cxt(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 14);
    CHECK(std::string(e.what()).find("expected 6") != std::string::npos);
  }

  CHECK_THROWS_AS(parse_cxt("Z\n\n0\n0\n\n"), ParseError);
  CHECK_THROWS_AS(parse_cxt("B\n\nx\n0\n\n"), ParseError);
  CHECK_THROWS_AS(parse_cxt("B\n\n1\n1\n\ng1\nm1\nY\n"), ParseError);
  CHECK_THROWS_AS(parse_cxt("B\n\n2\n1\n\ng1\ng1\nm1\nX\nX\n"), ParseError);
  CHECK_THROWS_AS(parse_cxt("B\n\n1\n1\n\ng1\nm1\nX\ntrailing\n"), ParseError);
  CHECK_THROWS_AS(parse_cxt("B\n\n1\n1\n\ng1\nm1\n"), ParseError);
}

TEST_CASE("crlf input parses like lf input") {
  std::string lf = write_cxt(drive_context());
  std::string crlf;
  for (char c : lf) {
    if (c == '\n') crlf += '\r';
    crlf += c;
  }
  CHECK(parse_cxt(crlf) == drive_context());
}

TEST_CASE("bundled fig2 table parses with its scaling spec") {
  std::string csv = slurp(std::string(SCALEDIM_DATA_DIR) + "/fig2.csv");
  std::string spec = slurp(std::string(SCALEDIM_DATA_DIR) + "/fig2-scaling.json");
  MvParseResult parsed = parse_mv(csv, spec);
  CHECK(parsed.mv.object_count() == 4);
  CHECK(parsed.mv.attribute_count() == 2);
  CHECK(parsed.mv.complete());
  CHECK(parsed.kinds[0].tag == ScaleKindTag::Interordinal);
  CHECK(parsed.prescaling.domains[0].values ==
        std::vector<std::string>{"1", "2", "3", "4"});
  CHECK(*parsed.mv.value(0, 1) == "d");
}

TEST_CASE("blank cells become missing values") {
  std::string csv = "object,m\ng1,\ng2,lo\n";
  std::string spec = R"({"m": {"kind": "ordinal", "order": ["lo", "hi"]}})";
  MvParseResult parsed = parse_mv(csv, spec);
  CHECK_FALSE(parsed.mv.complete());
  CHECK_FALSE(parsed.mv.value(0, 0).has_value());
  CHECK(*parsed.mv.value(1, 0) == "lo");
}

TEST_CASE("undeclared values are rejected naming the cell") {
  std::string csv = "object,m\ng1,5\n";
  std::string spec = R"({"m": {"kind": "ordinal", "order": ["1", "2", "3", "4"]}})";
  try {
    parse_mv(csv, spec);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    std::string msg = e.what();
    CHECK(msg.find("'5'") != std::string::npos);
    CHECK(msg.find("g1") != std::string::npos);
    CHECK(msg.find("m") != std::string::npos);
  }
}

TEST_CASE("mv parse errors") {
  std::string spec = R"({"m": {"kind": "ordinal", "order": ["1"]}})";
  CHECK_THROWS_AS(parse_mv("object,m\ng1,1\ng1,1\n", spec), ParseError);  // dup object
  CHECK_THROWS_AS(parse_mv("object,m\ng1\n", spec), ParseError);          // ragged row
  CHECK_THROWS_AS(parse_mv("object,m\ng1,1\n", R"({})"), ParseError);     // undeclared attr
  CHECK_THROWS_AS(parse_mv("object,m\ng1,1\n",
                           R"({"m": {"kind": "odd", "order": ["1"]}})"),
                  ParseError);  // unknown kind
  CHECK_THROWS_AS(parse_mv("object,m\ng1,1\n",
                           R"({"m": {"kind": "ordinal", "order": ["1"]}, "n": {"kind": "ordinal", "order": ["1"]}})"),
                  ParseError);  // extra attr
  CHECK_THROWS_AS(parse_mv("object,m\ng1,1\n", "not json"), ParseError);
}

TEST_CASE("the cxt parser rejects garbage without crashing") {
  std::mt19937 rng(1414);
  const char alphabet[] = "BX. \n\r0123456789gm\"";
  for (int round = 0; round < 300; ++round) {
    std::uniform_int_distribution<std::size_t> len(0, 60);
    std::uniform_int_distribution<std::size_t> pick(0, sizeof(alphabet) - 2);
    std::string bytes;
    for (std::size_t i = 0, n = len(rng); i < n; ++i) bytes += alphabet[pick(rng)];
    try {
      FormalContext ctx = parse_cxt(bytes);
      CHECK(write_cxt(parse_cxt(write_cxt(ctx))) == write_cxt(ctx));
    } catch (const ParseError&) {
      // rejected is fine; crashing or misparsing is not
    }
  }
}

TEST_CASE("quoted csv fields survive a round trip") {
  ManyValuedContext mv({"g,1", "g\"2"}, {"m 1"},
                       {{"lo,w"}, {std::nullopt}});
  std::string csv = write_mv_csv(mv);
  std::string spec = R"({"m 1": {"kind": "nominal", "order": ["lo,w"]}})";
  MvParseResult parsed = parse_mv(csv, spec);
  CHECK(parsed.mv == mv);
}

TEST_CASE("scaling spec writer round-trips") {
  ManyValuedContext mv({"g1"}, {"m1", "m2"}, {{"a", "x"}});
  PreScaling pre;
  pre.domains.push_back({{"a", "b"}, true});
  pre.domains.push_back({{"x"}, false});
  std::vector<ScaleKind> kinds{ScaleKind::interordinal(), ScaleKind::nominal()};
  std::string spec = write_scaling_spec(mv, pre, kinds);
  MvParseResult parsed = parse_mv(write_mv_csv(mv), spec);
  CHECK(parsed.mv == mv);
  CHECK(parsed.prescaling == pre);
  CHECK(parsed.kinds == kinds);
}

TEST_CASE("biordinal splits survive the spec round trip") {
  ManyValuedContext mv({"g1", "g2"}, {"q"}, {{"poor"}, {"good"}});
  PreScaling pre;
  pre.domains.push_back({{"vpoor", "poor", "good", "vgood"}, true});
  std::vector<ScaleKind> kinds{ScaleKind::biordinal(2)};
  MvParseResult parsed = parse_mv(write_mv_csv(mv), write_scaling_spec(mv, pre, kinds));
  CHECK(parsed.kinds == kinds);
  CHECK(parsed.kinds[0].split == 2);
  FormalContext derived = derive_with_kinds(parsed.mv, parsed.prescaling, parsed.kinds);
  CHECK(derived.attribute_index("q:≤poor").has_value());
  CHECK(derived.attribute_index("q:≥good").has_value());
  CHECK(derived.column(*derived.attribute_index("q:≥good")) ==
        objects_of(derived, {"g2"}));

  // missing split is rejected
  CHECK_THROWS_AS(
      parse_mv("object,q\ng1,poor\n",
               R"({"q": {"kind": "biordinal", "order": ["poor", "good"]}})"),
      ParseError);
}

TEST_CASE("dot export") {
  ExtentLattice lat(drive_context());
  IsdResult isd = interordinal_scaling_dimension(lat);
  REQUIRE(isd.defined);
  std::string plain = export_dot(lat);
  std::string colored = export_dot(lat, &*isd.cover);

  auto count = [](const std::string& hay, const std::string& needle) {
    std::size_t c = 0, pos = 0;
    while ((pos = hay.find(needle, pos)) != std::string::npos) {
      ++c;
      pos += needle.size();
    }
    return c;
  };
  CHECK(count(plain, "label=") == 24);
  CHECK(count(plain, "fillcolor") == 0);
  CHECK(count(colored, "fillcolor") > 0);
  // one color per ladder in the minimum cover
  std::set<std::string> colors;
  std::size_t pos = 0;
  while ((pos = colored.find("fillcolor=\"", pos)) != std::string::npos) {
    colors.insert(colored.substr(pos + 11, 7));
    pos += 11;
  }
  CHECK(colors.size() == isd.cover->ladders.size());
  CHECK(colored.find("rank=same") != std::string::npos);

  ExtentLattice trivial{FormalContext{}};
  std::string tiny = export_dot(trivial);
  CHECK(count(tiny, "label=") == 1);
  CHECK(count(tiny, "->") == 0);

  // deterministic output
  CHECK(export_dot(lat, &*isd.cover) == colored);
}
