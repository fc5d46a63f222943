#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "nikulin/rational.hpp"

using nlohmann::json;

namespace {

struct Result {
  int status = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.status = nikulin::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::vector<std::string>> tsv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string c;
    while (std::getline(ls, c, '\t')) cells.push_back(c);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("profile") {
  const auto r8 = run({"profile", "8", "--format", "tsv"});
  REQUIRE(r8.status == 0);
  const auto rows = tsv(r8.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"g", "k", "p", "m", "g_m", "L_m^2", "verdict"});
  CHECK(rows.back() == std::vector<std::string>{"8", "2", "0", "2", "0", "-2", "rational-fixed-curve"});

  const auto r2 = tsv(run({"profile", "2", "--format", "tsv"}).out);
  REQUIRE(r2.size() == 3);
  CHECK(r2[1][3] == "0");
  CHECK(r2[2][3] == "1");

  const auto j11 = json::parse(run({"profile", "11"}).out);
  CHECK(j11["k"] == 2);
  CHECK(j11["p"] == 3);
  CHECK(j11["rows"].back()["m"] == 2);
  CHECK(j11["rows"].back()["verdict"] == "very-ample");

  const auto j9 = json::parse(run({"profile", "9"}).out);
  CHECK(j9["rows"].back()["verdict"] == "basepoint-free-pencil-or-more");

  const auto bad = run({"profile", "1"});
  CHECK(bad.status != 0);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("invalid-genus") != std::string::npos);
}

TEST_CASE("class") {
  const auto r = run({"class", "8", "1"});
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j["A"] == "294");
  CHECK(j["gamma"]["gamma_0"] == "2/7");
  CHECK(j["gamma"]["gamma_1"] == "-6/7");
  CHECK(j["gamma"]["gamma_2"] == "1/7");
  CHECK(j["gamma"]["gamma_3"] == "-1/7");
  CHECK(j["gamma"]["lambda"] == "11/1");
  CHECK(j["kappa"]["kappa_3_0_0"].is_string());

  const auto refused = run({"class", "8", "2"});
  CHECK(refused.status != 0);
  CHECK(refused.out.empty());
  CHECK(refused.err.find("m = k with p >= 3") != std::string::npos);
  CHECK(run({"class", "8", "5"}).status != 0);

  for (long long g = 3; g <= 40; ++g) {
    const auto c = json::parse(run({"class", std::to_string(g), "0"}).out);
    CHECK(c["gamma"]["gamma_0"] == nikulin::to_string(nikulin::make_rational(2, g + 1)));
    CHECK(c["gamma"]["gamma_1"] == "0/1");
    CHECK(c["gamma"]["gamma_2"] == "0/1");
    CHECK(c["gamma"]["gamma_3"] == "0/1");
    CHECK(c["gamma"]["lambda"] == std::to_string(2 * g - 1) + "/1");
  }
}

TEST_CASE("detdeg and expdim") {
  CHECK(run({"detdeg", "3", "7"}).out == "294\n");
  CHECK(json::parse(run({"detdeg", "5", "10", "--format", "json"}).out)["degree"] == "151008");
  CHECK(run({"detdeg", "8", "7"}).status != 0);
  const auto rows = tsv(run({"expdim", "6", "4"}).out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1] == std::vector<std::string>{"6", "4", "28", "6", "22", "6", "0"});
}

TEST_CASE("checks and searches") {
  const auto va = json::parse(run({"check", "very-ample", "8", "2"}).out);
  CHECK(va["status"] == "obstructed");
  CHECK(va["rationale"] == "fixed-rational-curve");
  CHECK(json::parse(run({"check", "very-ample", "11", "2"}).out)["status"] == "very-ample");
  CHECK(run({"check", "very-ample", "8", "3"}).status == 3);
  CHECK(json::parse(run({"check", "ample", "8", "1"}).out)["quantity"] == "35/1");
  CHECK(run({"check", "ample", "8", "0"}).status == 3);

  const auto nl = json::parse(run({"search", "nl", "5", "0", "c", "--bounds", "1,2"}).out);
  CHECK(nl["witness"]["a"] == 0);
  CHECK(nl["witness"]["t"][0] == 2);
  CHECK(json::parse(run({"search", "nl", "8", "1", "b"}).out)["witness"].is_null());

  const auto obs = json::parse(run({"search", "obstruction", "8", "1", "--bounds", "3,8"}).out);
  CHECK(obs["witness"].is_null());
  const auto all = json::parse(run({"search", "obstruction", "8", "2", "--bounds", "1,4", "--all"}).out);
  CHECK(std::find(all["witnesses"].begin(), all["witnesses"].end(),
                  json{{"a", 1}, {"t", {-2, -2, -2, -2, -2, -2, -2, -2}}}) != all["witnesses"].end());

  const auto dec = json::parse(run({"search", "decomposition", "8", "L_1", "--bounds", "2,8"}).out);
  CHECK(dec["pairs"].empty());

  CHECK(run({"search", "nl", "8", "1", "d"}).status == 2);
  CHECK(run({"search", "obstruction", "8", "1", "--bounds", "0,3"}).status == 2);
  CHECK(run({"search", "obstruction", "8", "1", "--bounds", "2"}).status == 2);
}

TEST_CASE("intersect, gram and grr") {
  CHECK(json::parse(run({"intersect", "8", "L_1", "R3"}).out)["intersection"] == 1);
  CHECK(json::parse(run({"intersect", "8", "e", "e"}).out)["intersection"] == -4);
  CHECK(run({"intersect", "8", "L", "R9"}).status == 2);
  const auto gram = tsv(run({"gram", "8", "--format", "tsv"}).out);
  REQUIRE(gram.size() == 10);
  CHECK(gram[1][1] == "14");
  CHECK(gram[2][2] == "-4");
  const auto grr = json::parse(run({"grr", "2", "1", "8"}).out);
  CHECK(grr["rank"] == 22);
  CHECK(grr["c1"]["lambda"] == "-11/1");
  CHECK(run({"grr", "1", "2", "8"}).status == 3);
}

TEST_CASE("sweep table") {
  const auto r = run({"sweep", "--genus", "8..20"});
  REQUIRE(r.status == 0);
  const auto rows = tsv(r.out);
  CHECK(rows[0] == std::vector<std::string>{"g", "k", "p", "m", "g_m", "verdict", "L_m^2",
                                            "obstruction", "decompositions", "A", "coefficients"});
  std::set<std::string> genera;
  std::size_t expected_rows = 0;
  for (long long g = 8; g <= 20; ++g) expected_rows += g < 18 ? 3 : 4;
  CHECK(rows.size() == expected_rows + 1);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    REQUIRE(row.size() == 11);
    genera.insert(row[0]);
    const long long k = std::stoll(row[1]), m = std::stoll(row[3]);
    if (m <= k - 1) {
      CHECK(row[7] == "none");
      CHECK(row[8] == "0");
    }
  }
  CHECK(genera.size() == 13);
  CHECK(run({"sweep", "--genus", "8..20"}).out == r.out);

  const auto picked = tsv(run({"sweep", "--genus", "8..9", "--m", "1"}).out);
  REQUIRE(picked.size() == 3);
  CHECK(picked[1][3] == "1");
}

TEST_CASE("sweep json round-trips") {
  const auto r = run({"sweep", "--genus", "8..12", "--format", "json", "--bounds", "2,6"});
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j.dump(2) + "\n" == r.out);
  CHECK(j["bounds"] == json::array({2, 6}));
  CHECK(j["rows"].size() == 15);
  CHECK(j["rows"][1]["A"] == "294");
  CHECK(j["rows"][1]["coefficients"] == "2/7,-6/7,1/7,-1/7,11/1");
  CHECK(json::parse(j.dump()) == j);
}

TEST_CASE("output file and errors") {
  const auto path = std::filesystem::path(NIKULIN_TEST_TMPDIR) / "cli_out.tsv";
  std::filesystem::remove(path);
  const auto r = run({"sweep", "--genus", "8", "--out", path.string()});
  REQUIRE(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream contents;
  contents << in.rdbuf();
  CHECK(contents.str() == run({"sweep", "--genus", "8"}).out);

  CHECK(run({"detdeg", "3", "7", "--out", "/nonexistent-dir/x"}).status == 4);
  CHECK(run({"sweep", "--genus", "20..8"}).status == 2);
  CHECK(run({"sweep", "--genus", "1..8"}).status == 2);
  CHECK(run({"sweep"}).status != 0);
  CHECK(run({"frobnicate"}).status != 0);
  CHECK(run({}).status != 0);
  CHECK(run({"profile", "eight"}).status == 2);
  CHECK(run({"profile", "8", "--format", "xml"}).status != 0);
}
