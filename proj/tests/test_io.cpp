#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "frieze_lab/io.hpp"

using namespace frieze_lab;
using Q = Rational;

TEST(Json, FriezeRoundTrip) {
  auto F = diagonal_to_frieze(std::vector<Q>{Q(2, 3), Q(-5, 7), Q(4)});
  json j = to_json(F);
  EXPECT_EQ(j["width"], 3);
  EXPECT_EQ(j["period"], 6);
  auto G = frieze_from_json(json::parse(j.dump()));
  EXPECT_EQ(G, F);
}

TEST(Json, PentagonDocument) {
  json j = to_json(propagate_from_quiddity(std::vector<Q>{Q(1), Q(3), Q(1), Q(2), Q(2)}));
  EXPECT_EQ(j["quiddity"], json::parse(R"(["1","3","1","2","2"])"));
  EXPECT_EQ(j["rows"][2], json::parse(R"(["2","2","1","3","1"])"));
}

TEST(Json, IntegersAcceptedAsRationals) {
  json j = json::parse(R"({"rows": [[1,1,1,1,1],[1,3,1,2,2],["2","2","1","3","1"],[1,1,1,1,1]]})");
  auto F = frieze_from_json(j);
  EXPECT_EQ(F.width(), 2);
  EXPECT_EQ(F.at(1, 1), Q(3));
}

TEST(Json, ShapeErrors) {
  for (const char* text : {R"({"rows": 3})", R"([1,2])", R"({"rows": [[1, 1.5]]})",
                           R"({"width": 5, "rows": [[1,1,1,1],[1,1,1,1],[1,1,1,1]]})",
                           R"({"rows": [["1","x"]]})"}) {
    try {
      frieze_from_json(json::parse(text));
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument) << text;
    }
  }
}

TEST(Json, ErrorDocument) {
  json e = error_json(ErrorKind::NotClosed, "row 4 is not all ones");
  EXPECT_EQ(e["error"], "not closed");
  EXPECT_EQ(e["reason"], "not closed: row 4 is not all ones");
  EXPECT_EQ(error_json(ErrorKind::NotClosed, "not closed: x")["reason"], "not closed: x");
}

TEST(Json, Doubles) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(std::stod(format_double(M_PI)), M_PI);
  EXPECT_TRUE(json_double(std::numeric_limits<double>::quiet_NaN()).is_null());
  EXPECT_EQ(json_double(1.5), json(1.5));
}

TEST(Json, RationalLists) {
  auto v = parse_rational_list("1,-2/4,3");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[1], Q(-1, 2));
  EXPECT_EQ(rational_array(v), json::parse(R"(["1","-1/2","3"])"));
  try {
    parse_rational_list("1,,2");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
}

TEST(Csv, QuotingAndLineEnds) {
  std::ostringstream os;
  CsvWriter csv(os);
  csv.row({"x", "y", "value"});
  csv.row({"a,b", "say \"hi\"", "line\nbreak"});
  csv.row({"1", "", "2"});
  EXPECT_EQ(os.str(), "x,y,value\r\n\"a,b\",\"say \"\"hi\"\"\",\"line\nbreak\"\r\n1,,2\r\n");
}
