#include "ineq/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ineq::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

TEST(CliSeq, CsvReproducesSmallTable) {
  const auto r = run({"seq", "--from", "1", "--to", "16", "--format", "csv", "--exact-y"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 17u);
  EXPECT_EQ(ls[0], "n,z,m,r,c,x,c_minus_m,y_sign,y");
  const std::vector<std::string> y_row{"7",     "2",     "13",     "12",     "-17",    "-4",     "-17",    "-496",
                                       "-665",  "-936",  "-1267",  "-1472",  "-28433", "-38288", "-50113", "-65024"};
  for (std::size_t i = 0; i < 16; ++i) EXPECT_EQ(ls[i + 1].substr(ls[i + 1].rfind(',') + 1), y_row[i]);
  EXPECT_EQ(ls[1], "1,0,1,0,4,-1,3,1,7");
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(CliSeq, HeaderWithoutExactY) {
  const auto r = run({"seq", "--from", "436", "--to", "436", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(ls[0], "n,z,m,r,c,x,c_minus_m,y_sign");
  EXPECT_EQ(ls[1], "436,290,29,9,294,0,265,1");
}

TEST(CliSeq, JsonRecords) {
  const auto r = run({"seq", "--from", "5", "--to", "6", "--format", "json", "--exact-y"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["y"], -17);
  EXPECT_EQ(j[0]["n"], 5);
  EXPECT_EQ(j[1]["c_minus_m"], 5);
  EXPECT_EQ(run({"seq", "--from", "5", "--to", "6", "--format", "json", "--exact-y"}).out, r.out);
}

TEST(CliSeq, InvalidRange) {
  EXPECT_EQ(run({"seq", "--from", "10", "--to", "5"}).code, 2);
  EXPECT_EQ(run({"seq", "--from", "0", "--to", "5"}).code, 2);
  EXPECT_EQ(run({"seq", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
}

TEST(CliVerify, ExitCodes) {
  EXPECT_EQ(run({"verify", "theorem2", "--limit", "1000"}).code, 0);
  EXPECT_EQ(run({"verify", "theorem1", "--limit", "100"}).code, 2);
  EXPECT_EQ(run({"verify", "theorem2", "--limit", "403"}).code, 2);
  EXPECT_EQ(run({"verify", "nonsense"}).code, 2);
  EXPECT_EQ(run({"verify", "table"}).code, 0);
  EXPECT_EQ(run({"verify", "table", "--strict"}).code, 1);
  EXPECT_EQ(run({"verify", "theorem1", "--strict"}).code, 0);
}

TEST(CliVerify, AllSuitesJson) {
  const auto r = run({"verify", "all", "--limit", "5000", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  std::vector<std::string> errata;
  for (const auto& rep : j) {
    EXPECT_NE(rep["status"], "DISCREPANCY") << rep["claim_id"];
    if (rep["status"] == "KNOWN_ERRATUM") errata.push_back(rep["claim_id"]);
  }
  EXPECT_EQ(errata, (std::vector<std::string>{"exercise_1_1.x15", "exercise_1_1.x16", "construction_2_2.item41.m",
                                              "lemma_3_4.bracket", "remark_final.Y365"}));
  EXPECT_EQ(run({"verify", "all", "--limit", "5000", "--strict"}).code, 1);
}

TEST(CliVerify, TextAndCsv) {
  const auto t = run({"verify", "intervals"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("construction_2_2.item41.m"), std::string::npos);
  EXPECT_NE(t.out.find("1 known errata"), std::string::npos);
  const auto c = run({"verify", "table", "--format", "csv"});
  EXPECT_EQ(lines(c.out)[0], "claim_id,lo,hi,status,printed,computed,counterexamples,details");
  EXPECT_EQ(lines(c.out).size(), 4u);
}

TEST(CliIntervals, Csv) {
  const auto r = run({"intervals", "--limit", "8", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "index,lo,hi,r,m,x_lo,x_hi\n1,1,1,0,1,-1,-1\n2,2,2,1,2,-3,-3\n3,3,4,2,2,-5,-4\n4,5,7,3,3,-9,-8\n"
                   "5,8,8,3,4,-11,-11\n");
  EXPECT_EQ(run({"intervals", "--limit", "0"}).code, 2);
}

TEST(CliRoots, Json) {
  const auto r = run({"roots", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 4u);
  EXPECT_EQ(j[0]["name"], "x_lower");
  EXPECT_GT(j[0]["lo"].get<double>(), 560);
  EXPECT_LT(j[0]["hi"].get<double>(), 561);
  EXPECT_EQ(j[2]["grid_sign_changes"], 1);
  EXPECT_EQ(run({"roots", "--tol", "0"}).code, 2);
  EXPECT_EQ(run({"roots", "--tol", "1e-3"}).code, 0);
}

}  // namespace
