#include <doctest.h>

#include <random>

#include "scaledim/report.hpp"
#include "support.hpp"

using namespace scaledim;
using namespace testsupport;

namespace {

ObjectSet set_from_names(const FormalContext& ctx, const nlohmann::ordered_json& arr) {
  ObjectSet s(ctx.object_count());
  for (const auto& name : arr) s.set(*ctx.object_index(name.get<std::string>()));
  return s;
}

}  // namespace

TEST_CASE("drive report carries the analysis results") {
  nlohmann::ordered_json report = analyze(drive_context());
  CHECK(report.at("schema_version") == 1);
  CHECK(report.at("context").at("objects") == 5);
  CHECK(report.at("context").at("extents") == 24);
  CHECK(report.at("context").at("incidences") == 21);
  CHECK(report.at("derivability").at("interordinally_derivable") == true);
  CHECK(report.at("osd").at("value") == 4);
  CHECK(report.at("isd").at("defined") == true);
  CHECK(report.at("isd").at("value") == 2);
  CHECK(report.at("isd_bounds").at("lower") == 2);
  CHECK(report.at("isd_bounds").at("upper") == 4);
  CHECK(report.at("order_dimension").at("value") == 4);
}

TEST_CASE("reports are byte-identical across runs") {
  for (const FormalContext& ctx : {drive_context(), diag3_context(), nominal2_context()}) {
    std::string a = render_report_json(analyze(ctx));
    std::string b = render_report_json(analyze(ctx));
    CHECK(a == b);
  }
  std::mt19937 rng(99);
  for (int round = 0; round < 10; ++round) {
    FormalContext ctx = random_context(rng, 5, 5);
    CHECK(render_report_json(analyze(ctx)) == render_report_json(analyze(ctx)));
  }
}

TEST_CASE("report witnesses re-validate against the library") {
  std::mt19937 rng(111);
  std::vector<FormalContext> cases = {drive_context(), diag3_context(),
                                      nominal2_context()};
  for (int round = 0; round < 15; ++round) cases.push_back(random_context(rng, 5, 5));

  for (const FormalContext& ctx : cases) {
    nlohmann::ordered_json report = analyze(ctx);
    ExtentLattice lat(ctx);

    // OSD chains are chains covering the meet-irreducibles
    std::unordered_set<BitSet, BitSetHash> covered;
    for (const auto& chain : report.at("osd").at("chains")) {
      ObjectSet prev(ctx.object_count());
      bool first = true;
      for (const auto& entry : chain) {
        ObjectSet e = set_from_names(ctx, entry);
        CHECK(lat.is_extent(e));
        if (!first) CHECK(prev.is_proper_subset_of(e));
        prev = e;
        first = false;
        covered.insert(e);
      }
    }
    for (const auto& e : lat.meet_irreducible_extents()) CHECK(covered.count(e));
    CHECK(report.at("osd").at("chains").size() == report.at("osd").at("value"));

    // ISD ladders pass the ladder check and cover the meet-irreducibles
    if (report.at("isd").at("defined").get<bool>()) {
      std::unordered_set<BitSet, BitSetHash> members;
      for (const auto& ladder : report.at("isd").at("ladders")) {
        std::vector<ObjectSet> ms;
        for (const auto& entry : ladder.at("members"))
          ms.push_back(set_from_names(ctx, entry));
        CHECK(is_extent_ladder(lat, ms));
        for (const auto& m : ms) members.insert(m);
      }
      for (const auto& e : lat.meet_irreducible_extents()) CHECK(members.count(e));
    } else {
      ObjectSet blocker =
          set_from_names(ctx, report.at("isd").at("blocking_extent"));
      bool fails = blocker.empty() || !lat.complement_is_extent(blocker);
      CHECK(fails);
    }

    // Ferrers relations are staircases in the non-incidence
    if (report.at("order_dimension").at("exact").get<bool>()) {
      std::size_t cells = 0;
      for (const auto& rel : report.at("order_dimension").at("ferrers_relations")) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (const auto& cell : rel) {
          auto g = *ctx.object_index(cell.at(0).get<std::string>());
          auto m = *ctx.attribute_index(cell.at(1).get<std::string>());
          CHECK_FALSE(ctx.incident(g, m));
          pairs.emplace_back(g, m);
        }
        CHECK(is_staircase(pairs));
        cells += pairs.size();
      }
      (void)cells;
      CHECK(report.at("order_dimension").at("ferrers_relations").size() ==
            report.at("order_dimension").at("value"));
    }
  }
}

TEST_CASE("undefined isd is reported with its blocker") {
  nlohmann::ordered_json report = analyze(diag3_context());
  CHECK(report.at("isd").at("defined") == false);
  CHECK(report.at("isd").at("blocking_extent") ==
        nlohmann::ordered_json::array({"g1"}));
  CHECK(report.at("isd").at("blocking_reason") == "complement is not an extent");
}

TEST_CASE("text rendering mentions the headline numbers") {
  std::string text = render_report_text(analyze(drive_context()));
  CHECK(text.find("extents:      24") != std::string::npos);
  CHECK(text.find("osd:          4") != std::string::npos);
  CHECK(text.find("order dim:    4") != std::string::npos);
}
