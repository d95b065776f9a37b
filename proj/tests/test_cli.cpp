#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qtrunc/cli.hpp"

using namespace qtrunc;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(invoke({"verify", "theorem13", "--R", "3", "--S", "1", "--kmax", "6", "--N", "200"}).code == 0);
  CHECK(invoke({"verify", "pentagonal", "--N", "-5"}).code == 2);
  CHECK(invoke({"verify", "nosuchsuite"}).code == 2);
  CHECK(invoke({"verify", "theorem13", "--R", "3", "--S", "3"}).code == 2);
  CHECK(invoke({"verify", "theorem13", "--R", "3..x"}).code == 2);
  CHECK(invoke({"verify", "theorem13", "--k", "5..2"}).code == 2);
  CHECK(invoke({"verify", "phi", "--R", "3"}).code == 2);
  CHECK(invoke({"verify", "phi", "--n", "3", "--nmax", "4"}).code == 2);
  CHECK(invoke({"verify", "gz", "--format", "xml"}).code == 2);
  CHECK(invoke({"verify", "wang-yee", "--R", "3", "--S", "2"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("theorem12 prints the worked-example counts") {
  const auto r = invoke({"verify", "theorem12", "--n", "15", "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("A_{k-1}^(2)=21") != std::string::npos);
  CHECK(r.out.find("A_{-k}^(1)=3") != std::string::npos);
  CHECK(r.out.find("difference=18") != std::string::npos);
}

TEST_CASE("grid ranges filter by the suite constraint") {
  const auto r = invoke({"verify", "pentagonal", "--R", "2..4", "--S", "1..3", "--N", "30", "--format", "json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["points"] == 6);  // (2,1) (3,1) (3,2) (4,1) (4,2) (4,3)
  CHECK(doc["reports"][2]["params"]["R"] == 3);
  CHECK(doc["reports"][2]["params"]["S"] == 2);
  CHECK(doc["pass"] == true);
  CHECK(doc["reports"][0]["violations"].empty());
}

TEST_CASE("tables") {
  const auto gz = invoke({"table", "gz", "--k", "3", "--N", "20", "--format", "csv"});
  CHECK(gz.code == 0);
  std::istringstream lines(gz.out);
  std::string line;
  int count = 0;
  std::getline(lines, line);
  CHECK(line == "k,n,coefficient");
  while (std::getline(lines, line)) ++count;
  CHECK(count == 21);

  const auto rec = invoke({"table", "recurrence117", "--nmax", "12", "--format", "json"});
  const auto doc = nlohmann::json::parse(rec.out);
  CHECK(doc["rows"].size() == 12);
  for (const auto& row : doc["rows"]) CHECK(row[1] == row[2]);

  const auto mk = invoke({"table", "mk", "--n", "15", "--kmax", "3", "--format", "json"});
  const auto mkdoc = nlohmann::json::parse(mk.out);
  CHECK(mkdoc["rows"].size() == 3);
  CHECK(mkdoc["rows"][1][2] == "18");  // M_2(15)
}

TEST_CASE("output is deterministic and --out writes a file") {
  const std::vector<std::string> args{"verify", "psi", "--nmax", "12", "--kmax", "3", "--format", "csv"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("suite,R,S,k,n,expected,actual,pass\n", 0) == 0);

  const auto path = std::filesystem::temp_directory_path() / "qtrunc_cli_test.json";
  auto with_out = std::vector<std::string>{"verify", "recurrence117", "--nmax", "30", "--format", "json", "--out", path.string()};
  const auto r = invoke(with_out);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  CHECK(doc["suite"] == "recurrence117");
  std::filesystem::remove(path);
}

TEST_CASE("CSV report rows carry violations") {
  CheckReport report("theorem13");
  report.set_param("R", 3).set_param("S", 1).set_param("k", 2).set_param("N", 10);
  CHECK(to_csv_rows(report) == std::vector<std::string>{"theorem13,3,1,2,,,,true"});
  report.add_violation({"coefficient of q^4", ">= 0", "-1", 4});
  CHECK(to_csv_rows(report) == std::vector<std::string>{"theorem13,3,1,2,4,>= 0,-1,false"});
  const auto j = to_json(report);
  CHECK(j["pass"] == false);
  CHECK(j["violations"][0]["actual"] == "-1");
}
