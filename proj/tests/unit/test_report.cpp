#include <gtest/gtest.h>

#include <fstream>

#include "test_support.hpp"

using namespace qgc;
using ref::t;

TEST(Report, RoundTripIsBitExact) {
  std::vector<CodeReport> reports;
  reports.push_back(make_report(search_code(build_family(Family::kCycle, 5, 2), 2).code, "search", 0.125));
  reports.push_back(make_report(GraphCode(build_family(Family::kCycle, 5, 2), 3, {t(2, "00000"), t(2, "11111")}), "search", 0.5));
  reports.push_back(make_report(partition_code(bar_partition(build_family(Family::kBar, 4, 3))), "partition", 1e-6));
  reports.push_back(make_refusal(build_family(Family::kCycle, 4, 2), 3, "search", "diagonal-distance", 0.0));
  for (const auto& r : reports) {
    const auto text = serialize_report(r);
    EXPECT_EQ(serialize_report(parse_report(text)), text);
  }
}

TEST(Report, Fields) {
  const auto r = make_report(GraphCode(build_family(Family::kCycle, 5, 2), 3, {t(2, "00000"), t(2, "11111")}), "search");
  const auto j = nlohmann::json::parse(serialize_report(r));
  EXPECT_EQ(j["K"], 2);
  EXPECT_EQ(j["diagonal_distance"], 3);
  EXPECT_EQ(j["codewords"], nlohmann::json::array({"00000", "11111"}));
  EXPECT_EQ(j["graph"][0], "0 1 0 0 1");
  EXPECT_TRUE(j["additive"].get<bool>());
  EXPECT_EQ(j["stabilizer"]["order"], 16);
  EXPECT_TRUE(j["qs_saturated"].get<bool>());
  EXPECT_TRUE(j["reason"].is_null());

  const auto refusal = nlohmann::json::parse(serialize_report(make_refusal(build_family(Family::kCycle, 4, 2), 3, "search", "diagonal-distance")));
  EXPECT_EQ(refusal["K"], 0);
  EXPECT_EQ(refusal["reason"], "diagonal-distance");
  EXPECT_EQ(refusal["diagonal_distance"], 2);
}

TEST(Report, ToCodeRebuildsTheCode) {
  const auto code = hypercube16_code();
  const auto back = parse_report(serialize_report(make_report(code, "hypercube16"))).to_code();
  EXPECT_EQ(back.codewords(), code.codewords());
  EXPECT_EQ(back.graph(), code.graph());
  EXPECT_TRUE(back.additive());
}

TEST(Report, ShippedHypercubeFileMatches) {
  std::ifstream in(std::string(QGC_DATA_DIR) + "/hypercube16_code.json");
  ASSERT_TRUE(in);
  std::stringstream s;
  s << in.rdbuf();
  const auto r = parse_report(s.str());
  EXPECT_EQ(r.to_code().codewords(), hypercube16_code().codewords());
  EXPECT_EQ(serialize_report(r), s.str());
}

TEST(Report, MalformedInput) {
  EXPECT_THROW(parse_report("{"), InvalidArgument);
  EXPECT_THROW(parse_report("{}"), InvalidArgument);
  auto j = to_json(make_report(GraphCode(build_family(Family::kCycle, 5, 2), 3, {t(2, "00000"), t(2, "11111")}), "search"));
  auto bad_k = j;
  bad_k["K"] = 3;
  EXPECT_THROW(report_from_json(bad_k), InvalidArgument);
  auto bad_word = j;
  bad_word["codewords"][1] = "1111";
  EXPECT_THROW(report_from_json(bad_word), InvalidArgument);
  auto bad_graph = j;
  bad_graph["graph"][0] = "0 1 0 0";
  EXPECT_THROW(report_from_json(bad_graph), InvalidArgument);
  auto asym = j;
  asym["graph"][0] = "0 0 0 0 1";
  EXPECT_THROW(report_from_json(asym), InvalidArgument);
}
