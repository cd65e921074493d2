#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace sb;
using json = nlohmann::json;

namespace {

struct Run {
  int rc;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sbtool");
  std::ostringstream out, err;
  int rc = run_cli(args, out, err);
  return {rc, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify") {
  auto r = run({"classify", "--n", "3", "--lambda", "-2", "--nu", "0"});
  REQUIRE(r.rc == kOk);
  auto j = json::parse(r.out);
  CHECK(j["in_Leven"] == true);
  CHECK(j["in_X"] == true);
  CHECK(j["k"] == 2);
  CHECK(j["l"] == 1);
  CHECK(j["octant"] == "I.B");

  r = run({"classify", "--n", "3", "--lambda", "1/3", "--nu", "0.25"});
  REQUIRE(r.rc == kOk);
  CHECK(r.err.find("tri-state") != std::string::npos);
  CHECK(json::parse(r.out)["in_Leven"] == "out");

  r = run({"classify", "--n", "1", "--lambda", "0", "--nu", "0"});
  CHECK(r.rc == kValidation);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("mult and basis") {
  auto j = json::parse(run({"mult", "--n", "3", "--lambda", "-2", "--nu", "0"}).out);
  CHECK(j["multiplicity"] == 2);
  j = json::parse(run({"mult", "--n", "4", "--i", "4", "--j", "2"}).out);
  CHECK((j["mTT"] == 1 && j["mTF"] == 0 && j["mFF"] == 1));
  j = json::parse(run({"mult", "--n", "3", "--lambda", "-4", "--j", "2", "--target", "T"}).out);
  CHECK(j["multiplicity"] == 1);
  CHECK(run({"mult", "--n", "3", "--i", "2"}).rc == kValidation);

  j = json::parse(run({"basis", "--n", "3", "--lambda", "-2", "--nu", "0"}).out);
  CHECK(j["basis"] == json::array({"BB", "C"}));
  CHECK(j["dim_H_sing"] == 2);
}

TEST_CASE("eval") {
  auto r = run({"eval", "A", "--n", "2", "--lambda", "1", "--nu", "5", "--spherical"});
  REQUIRE(r.rc == kOk);
  CHECK(r.out == "value: π^{1/2}\nfloat: 1.7724538509\n");

  r = run({"eval", "C", "--n", "3", "--lambda", "1", "--nu", "3", "--spherical"});
  CHECK(r.out == "value: -8\nfloat: -8\n");

  r = run({"eval", "B", "--n", "4", "--lambda", "0", "--nu", "3", "--spherical", "--format", "json"});
  REQUIRE(r.rc == kOk);
  auto j = json::parse(r.out);
  CHECK(j["str"] == "0");
  CHECK(j["value"]["zero"] == true);
  CHECK(j["kind"] == "B");

  r = run({"eval", "--kind", "A", "--n", "3", "--lambda", "4", "--nu", "1", "--kfinite", "2", "1", "--format",
           "json"});
  REQUIRE(r.rc == kOk);
  CHECK(json::parse(r.out)["N"] == 2);

  r = run({"eval", "--n", "3", "--lambda", "-2", "--nu", "0", "--residue", "C_of_A"});
  CHECK(r.out.rfind("value: 0\n", 0) == 0);

  r = run({"eval", "A", "--n", "3", "--lambda", "1", "--nu", "3", "--kernel", "--format", "json"});
  CHECK(json::parse(r.out)["support"] == "point_p+");

  r = run({"eval", "A", "--n", "3", "--lambda", "1/2", "--nu", "-2", "--image"});
  CHECK(r.out == "image: F(2)\n");

  CHECK(run({"eval", "BB", "--n", "4", "--lambda", "-2", "--nu", "0"}).rc == kDomain);
  CHECK(run({"eval", "Z", "--n", "4", "--lambda", "-2", "--nu", "0"}).rc == kValidation);
  CHECK(run({"eval", "A", "--n", "3", "--lambda", "1", "--nu", "3", "--kernel", "--image"}).rc ==
        kValidation);
}

TEST_CASE("check") {
  auto r = run({"check", "residues"});
  CHECK(r.rc == kOk);
  auto j = json::parse(r.out);
  CHECK(j["failed"] == 0);
  CHECK(j["passed"].get<int>() > 0);

  r = run({"check", "oracle", "--tol", "1e-7", "--format", "text"});
  CHECK(r.rc == kOk);
  CHECK(r.out.find(" 0 failed") != std::string::npos);

  CHECK(run({"check", "vanishing"}).rc == kOk);
  CHECK(run({"check", "nope"}).rc == kValidation);
  // an impossible tolerance makes the numeric suites fail with exit 4
  CHECK(run({"check", "oracle", "--tol", "1e-30"}).rc == kCheckFailed);
}

TEST_CASE("sweep") {
  auto r = run({"sweep", "--n", "3", "--lambda-range=-8:2", "--nu-range=-8:2", "--outputs", "mult"});
  REQUIRE(r.rc == kOk);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,lambda,nu,mult");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    int n, l, v, m;
    REQUIRE(std::sscanf(line.c_str(), "%d,%d,%d,%d", &n, &l, &v, &m) == 4);
    bool leven = l <= 0 && v <= 0 && l <= v && (v - l) % 2 == 0;
    CHECK(m == (leven ? 2 : 1));
  }
  CHECK(rows == 121);

  auto a = run({"sweep", "--n", "3", "--lambda-range=-4:4", "--nu-range=-4:4", "--outputs",
                "region,basis,octant,image_A,support_A,zero_A", "--N", "8"});
  auto b = run({"sweep", "--n", "3", "--lambda-range=-4:4", "--nu-range=-4:4", "--outputs",
                "zero_A,support_A,image_A,octant,basis,region", "--N", "8"});
  CHECK(a.rc == kOk);
  CHECK(a.out == b.out);

  auto js = run({"sweep", "--n", "4", "--lambda-range=0:1", "--nu-range=0:1", "--format", "json"});
  auto j = json::parse(js.out);
  CHECK(j["schema"] == "sweep/1");
  CHECK(j["rows"].size() == 4);

  CHECK(run({"sweep", "--schema"}).out.find("sweep schema v1") == 0);
  CHECK(run({"sweep", "--n", "3", "--lambda-range=-200:0", "--nu-range=0:1"}).rc == kValidation);
  CHECK(run({"sweep", "--n", "3", "--lambda-range=0:1", "--nu-range=0:1", "--outputs", "bogus"}).rc ==
        kValidation);
  CHECK(run({"sweep", "--n", "3", "--lambda-range=0:1", "--nu-range=0:1", "--outputs", "zero_A"}).rc ==
        kValidation);
}

TEST_CASE("output file and byte stability") {
  std::string path = "test_cli_out.csv";
  std::vector<std::string> args = {
      "sweep", "--n", "3", "--lambda-range=-3:3", "--nu-range=-3:3", "--outputs", "region,mult,octant",
      "--out", path};
  auto r = run(args);
  REQUIRE(r.rc == kOk);
  CHECK(r.out.empty());
  std::ifstream f(path, std::ios::binary);
  std::string file((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  f.close();
  std::remove(path.c_str());
  args.resize(args.size() - 2);
  CHECK(run(args).out == file);
  CHECK(run(args).out == run(args).out);
  CHECK(run({"check", "pde", "--seed", "3"}).out == run({"check", "pde", "--seed", "3"}).out);
}
