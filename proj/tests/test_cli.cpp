#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct RunResult {
  int code;
  std::string out, err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = dessins::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path("cli_test_" + name + ".json") {
    std::ofstream(path) << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("classify cyclic table") {
  auto r = run({"classify", "cyclic", "--m", "6"});
  CHECK(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 13);
  CHECK(ls[0] == "id | pair | type | genus | graph | symmetric");
  bool found = false;
  for (const auto& l : ls) found = found || l.find("(g^1,g^5) | (6,6,1) | 0 | K_{1,1}^(6) | Yes") != std::string::npos;
  CHECK(found);
  // byte-stable across runs
  CHECK(run({"classify", "cyclic", "--m", "6"}).out == r.out);
}

TEST_CASE("classify abelian") {
  auto r = run({"classify", "abelian", "--n", "1", "--m", "6"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 13);
  auto sym = run({"classify", "abelian", "--n", "1", "--m", "6", "--symmetric-only"});
  CHECK(lines(sym.out).size() == 3);
  auto csv = run({"classify", "abelian", "--n", "2", "--m", "4", "--format", "csv"});
  CHECK(lines(csv.out)[0] == "id,pair,type,genus,graph,symmetric");
  CHECK(lines(csv.out).size() == 4);
}

TEST_CASE("enumerate") {
  auto r = run({"enumerate", "--group", "q8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("generating pairs: 24") != std::string::npos);
  CHECK(r.out.find("automorphisms: 24") != std::string::npos);
  CHECK(r.out.find("classes: 1") != std::string::npos);
  CHECK(r.out.find("(4,4,4) | 2 | K_{2,2}^(2) | Total") != std::string::npos);
}

TEST_CASE("invariants and formats") {
  TempFile f("q8", R"({"group":"q8","x":2,"y":4})");
  auto j = run({"invariants", "--dessin", f.path});
  CHECK(j.code == 0);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["genus"] == 2);
  CHECK(parsed["type"] == nlohmann::json({4, 4, 4}));
  CHECK(parsed["totally_symmetric"] == true);
  CHECK(parsed["graph"]["descriptor"] == "K_{2,2}^(2)");

  auto t = run({"invariants", "--dessin", f.path, "--format", "table"});
  CHECK(t.out.find("(i,j) | (4,4,4) | 2") != std::string::npos);

  TempFile triv("trivial", R"({"group":"cyclic:1","x":0,"y":0})");
  auto dot = run({"invariants", "--dessin", triv.path, "--format", "dot"});
  CHECK(dot.out.find("b0 -- w0;") != std::string::npos);
}

TEST_CASE("op pipeline and json round trip") {
  TempFile f("c6", R"({"group":"cyclic:6","x":1,"y":2})");
  auto d1 = run({"op", "dual", "--dessin", f.path});
  CHECK(d1.code == 0);
  CHECK(nlohmann::json::parse(d1.out) == nlohmann::json::parse(R"({"group":"cyclic:6","x":2,"y":1})"));
  TempFile g("c6dual", d1.out);
  auto d2 = run({"op", "dual", "--dessin", g.path});
  CHECK(nlohmann::json::parse(d2.out) == nlohmann::json::parse(R"({"group":"cyclic:6","x":1,"y":2})"));

  auto w = run({"op", "wilson", "--i", "5", "--j", "1", "--dessin", f.path});
  CHECK(nlohmann::json::parse(w.out)["x"] == 5);
  auto tr = run({"op", "triality", "--perm", "bw", "--dessin", f.path});
  CHECK(nlohmann::json::parse(tr.out)["x"] == 2);
  auto sh = run({"op", "shadow", "--dessin", f.path});
  CHECK(nlohmann::json::parse(sh.out)["group"]["order"] == 2);
  auto dec = run({"op", "decompose", "--dessin", f.path});
  CHECK(nlohmann::json::parse(dec.out).size() == 2);

  TempFile dip("dipole", R"({"group":"cyclic:4","x":1,"y":1})");
  auto ext = run({"op", "extend", "--dessin", dip.path});
  CHECK(nlohmann::json::parse(ext.out)["order"] == 8);

  TempFile left("left", R"({"group":"cyclic:2","x":1,"y":1})");
  TempFile right("right", R"({"group":"cyclic:3","x":1,"y":1})");
  auto join = run({"op", "join", "--left", left.path, "--right", right.path});
  CHECK(nlohmann::json::parse(join.out)["group"]["order"] == 6);
}

TEST_CASE("verify") {
  auto r = run({"verify", "c6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all 5 checks passed") != std::string::npos);
  auto bad = run({"verify", "decomposition", "--group", "sym3"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("\"failed\"") != std::string::npos);
}

TEST_CASE("census") {
  auto r = run({"census", "--max-order", "8", "--constructors", "cyclic:4;q8;dihedral:8"});
  CHECK(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 4);
  CHECK(ls[1] == "cyclic:4 | 4 | 12 | 2 | 6 | 2 | 1");
  CHECK(ls[2] == "q8 | 8 | 24 | 24 | 1 | 1 | 2");
}

TEST_CASE("exit codes") {
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"classify", "cyclic"}).code == 2);                          // missing --m
  CHECK(run({"invariants", "--dessin", "does_not_exist.json"}).code == 1);
  CHECK(run({"enumerate", "--group", "frobenius:20"}).code == 1);
  TempFile bad("bad", R"({"group":"cyclic:6","x":2,"y":4})");
  CHECK(run({"invariants", "--dessin", bad.path}).code == 1);            // non-generating pair
  TempFile c6("wilsonbad", R"({"group":"cyclic:6","x":1,"y":2})");
  CHECK(run({"op", "wilson", "--i", "2", "--j", "1", "--dessin", c6.path}).code == 1);
}

}  // TEST_SUITE
