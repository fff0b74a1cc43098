#include <fstream>
#include <sstream>

#include "doctest.h"
#include "qkp/cli.hpp"
#include "qkp/qkring.hpp"

using namespace qkp;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli_run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("root info") {
  RunResult pretty = run({"root", "info", "--type", "A2"});
  CHECK(pretty.code == 0);
  CHECK(pretty.out.find("type A2") != std::string::npos);
  CHECK(pretty.out.find("theta [1,1]") != std::string::npos);

  RunResult doc = run({"root", "info", "--type", "B2", "--format", "doc"});
  CHECK(doc.code == 0);
  auto parsed = nlohmann::ordered_json::parse(doc.out);
  CHECK(parsed["rank"] == 2);
  CHECK(parsed["positive_roots"].size() == 4);
  CHECK(parsed["cartan_matrix"][0][1] == -2);
  CHECK(parsed["theta_vee"]["coroot"] == nlohmann::ordered_json::array({1, 1}));
}

TEST_CASE("weyl verbs") {
  RunResult proj = run({"weyl", "project", "--type", "A2", "--J", "2", "--element", "s2*t[0,1]"});
  CHECK(proj.code == 0);
  CHECK(proj.out == "e * t[0,0]\n");

  RunResult len = run({"weyl", "length", "--type", "A2", "--element", "t[-1,-1]"});
  CHECK(len.code == 0);
  CHECK(len.out == "4\n");

  RunResult len_doc =
      run({"weyl", "length", "--type", "B2", "--element", "s0", "--format", "doc"});
  CHECK(len_doc.code == 0);
  CHECK(nlohmann::ordered_json::parse(len_doc.out)["length"] == 1);

  // B2: s1 s2 has no descent in J = {1}, and the projection drops the
  // first translation coordinate
  RunResult b2 =
      run({"weyl", "project", "--type", "B2", "--J", "1", "--element", "s1*s2*t[1,1]"});
  CHECK(b2.code == 0);
  CHECK(b2.out == "s1*s2 * t[0,1]\n");
}

TEST_CASE("qk product") {
  RunResult prod =
      run({"qk", "product", "--type", "A2", "--J", "", "--lhs", "s1", "--rhs", "s2"});
  CHECK(prod.code == 0);
  CHECK(prod.out == "(1) [s1*s2] + (1) [s2*s1] + (-1) [s1*s2*s1]\n");

  // determinism: byte-identical across runs
  RunResult again =
      run({"qk", "product", "--type", "A2", "--J", "", "--lhs", "s1", "--rhs", "s2"});
  CHECK(again.out == prod.out);

  RunResult doc = run({"qk", "product", "--type", "A2", "--J", "2", "--lhs", "s1", "--rhs",
                       "s2*s1", "--format", "doc"});
  CHECK(doc.code == 0);
  auto parsed = nlohmann::ordered_json::parse(doc.out);
  CHECK(parsed["J"] == nlohmann::ordered_json::array({2}));
  CHECK(parsed["terms"].size() == 2);
}

TEST_CASE("qk table export and reimport") {
  std::string path = "/tmp/qkp_table_test.json";
  RunResult table = run({"qk", "table", "--type", "A2", "--J", "2", "--out", path});
  CHECK(table.code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  auto doc = nlohmann::ordered_json::parse(in);
  CHECK(doc["basis"].size() == 3);
  CHECK(doc["products"].size() == 9);

  QKRing ring = QKRing::build_a2(ParabolicSubset({1}, 2));
  auto products = QKRing::table_from_json(doc, ring.space());
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v) CHECK(products[u][v] == ring.table().product(u, v));

  RunResult full = run({"qk", "table", "--type", "A2", "--J", "1,2", "--format", "doc"});
  CHECK(full.code == 0);
  CHECK(nlohmann::ordered_json::parse(full.out)["products"].size() == 1);

  RunResult pretty = run({"qk", "table", "--type", "A2", "--J", "1,2"});
  CHECK(pretty.code == 0);
  CHECK(pretty.out == "e * e = (1) [e]\n");
}

TEST_CASE("the J={2} table matches its frozen document byte for byte") {
  std::ifstream golden(std::string(QKP_TEST_DATA_DIR) + "/a2_table_j2.json");
  REQUIRE(golden.good());
  std::ostringstream want;
  want << golden.rdbuf();
  RunResult doc = run({"qk", "table", "--type", "A2", "--J", "2", "--format", "doc"});
  CHECK(doc.code == 0);
  CHECK(doc.out == want.str());
}

TEST_CASE("qk verify") {
  RunResult golden = run({"qk", "verify", "--suite", "golden"});
  CHECK(golden.code == 0);
  CHECK(golden.out.find("suite golden") != std::string::npos);
  CHECK(golden.out.find("matched s1 * s2") != std::string::npos);

  RunResult doc = run({"qk", "verify", "--suite", "golden", "--format", "doc"});
  CHECK(doc.code == 0);
  auto parsed = nlohmann::ordered_json::parse(doc.out);
  CHECK(parsed[0]["ok"] == true);

  RunResult all = run({"qk", "verify", "--suite", "all", "--seed", "7"});
  CHECK(all.code == 0);
  CHECK(all.out.find("suite ring") != std::string::npos);
  CHECK(all.out.find("suite quotient") != std::string::npos);

  // reproducibility under a fixed seed
  RunResult q1 = run({"qk", "verify", "--suite", "quotient", "--seed", "9", "--format", "doc"});
  RunResult q2 = run({"qk", "verify", "--suite", "quotient", "--seed", "9", "--format", "doc"});
  CHECK(q1.out == q2.out);
}

TEST_CASE("gr verbs") {
  RunResult pet = run({"gr", "peterson", "--type", "A2", "--element", "s1*t[-1,-1]",
                       "--denom", "t[-1,-1]"});
  CHECK(pet.code == 0);
  CHECK(pet.out == "(1) [s1]\n");

  RunResult pet_j = run({"gr", "peterson", "--type", "A2", "--element", "s2*t[-1,-1]",
                         "--denom", "t[-1,-1]", "--J", "2"});
  CHECK(pet_j.code == 0);
  CHECK(pet_j.out == "(1) [e]\n");

  RunResult tr = run({"gr", "translate", "--type", "A2", "--element", "s1*t[-1,-1]",
                      "--by", "t[-1,-1]"});
  CHECK(tr.code == 0);
  CHECK(tr.out == "(1) [Gr s1 * t[-2,-2]]\n");
}

TEST_CASE("exit codes") {
  CHECK(run({"qk", "product", "--nonsense"}).code == 2);
  CHECK(run({"root", "info", "--type", "H3"}).code == 2);
  CHECK(run({"weyl", "length", "--type", "A2", "--element", "s7"}).code == 2);
  CHECK(run({"qk", "product", "--type", "B2", "--J", "", "--lhs", "s1", "--rhs", "s2"}).code ==
        3);
  CHECK(run({"gr", "translate", "--type", "A2", "--element", "e", "--by", "t[1,0]"}).code == 2);

  // corrupted chevalley data: verification failure with a report on stdout
  QKRing ring = QKRing::build_a2(ParabolicSubset::empty(2));
  auto doc = ring.chevalley_to_json();
  doc["columns"][0]["products"][1]["terms"][0]["coeff"] = "2";
  std::string path = "/tmp/qkp_bad_chevalley.json";
  {
    std::ofstream outf(path);
    outf << doc.dump();
  }
  RunResult bad = run({"qk", "product", "--type", "A2", "--J", "", "--lhs", "s1", "--rhs",
                       "s2", "--chevalley", path});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("invariant") != std::string::npos);

  RunResult help = run({"--help"});
  CHECK(help.code == 0);
}

TEST_CASE("external chevalley pipeline") {
  QKRing ring = QKRing::build_a2(ParabolicSubset::empty(2));
  std::string path = "/tmp/qkp_roundtrip_chevalley.json";
  {
    std::ofstream outf(path);
    outf << ring.chevalley_to_json().dump();
  }
  RunResult viaFile = run({"qk", "product", "--type", "A2", "--J", "", "--lhs", "s1", "--rhs",
                           "s2", "--chevalley", path});
  RunResult builtin =
      run({"qk", "product", "--type", "A2", "--J", "", "--lhs", "s1", "--rhs", "s2"});
  CHECK(viaFile.code == 0);
  CHECK(viaFile.out == builtin.out);

  // quotient of a full-flag external file through --J
  RunResult quot = run({"qk", "product", "--type", "A2", "--J", "2", "--lhs", "s1", "--rhs",
                        "s1", "--chevalley", path});
  RunResult quot_builtin =
      run({"qk", "product", "--type", "A2", "--J", "2", "--lhs", "s1", "--rhs", "s1"});
  CHECK(quot.code == 0);
  CHECK(quot.out == quot_builtin.out);
}
