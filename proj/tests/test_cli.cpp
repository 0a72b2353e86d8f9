#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>

#include "triding/instance.hpp"

using namespace triding;

namespace {

std::string data_path(const std::string& name) { return std::string(TRIDING_DATA_DIR) + "/" + name; }

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(TRIDING_CLI) + " " + args + " 2>/tmp/triding_cli_stderr";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string stderr_text() {
  std::ifstream in("/tmp/triding_cli_stderr");
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p.string();
}

int load_code(const Json& doc) {
  try {
    load_instance(doc);
  } catch (const InstanceError& e) {
    return e.code();
  }
  return 0;
}

const char* kDual = R"({"one": [1, 0], "products": [[0, 0, 0], [0, 1, 1], [1, 0, 1]]})";

// 1, x, y with x x = y and y x = x: (x x) x = x but x (x x) = 0.
const char* kNonAssociative =
    R"({"one": [1, 0, 0], "products": [[0,0,0],[0,1,1],[0,2,2],[1,0,1],[2,0,2],[1,1,2],[2,1,1]]})";

Json base() {
  Json doc = Json::parse(R"({"field": 2, "algebras": {}})");
  doc["algebras"]["R"] = Json::parse(kDual);
  return doc;
}

std::size_t lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST_CASE("loader accepts the bundled files") {
  for (auto f : {"kx2.json", "tr_kx2.json", "t2_gf2.json", "mixed.json"}) {
    CAPTURE(f);
    Instance inst = load_instance_file(data_path(f));
    CHECK_FALSE(inst.modules.order.empty());
  }
  Instance tr = load_instance_file(data_path("tr_kx2.json"));
  CHECK(tr.left_triples.order.size() == 7);
  CHECK(tr.right_triples.order.size() == 7);
  CHECK(tr.triple_order.front() == "S_S_id");
  CHECK(tr.rings.at("T")->t->dim() == 6);
}

TEST_CASE("loader error codes") {
  CHECK(load_code(base()) == 0);

  Json bad_assoc = base();
  bad_assoc["algebras"]["N"] = Json::parse(kNonAssociative);
  CHECK(load_code(bad_assoc) == 2);

  Json bad_field = base();
  bad_field["field"] = 4;
  CHECK(load_code(bad_field) == 2);

  Json dangling = base();
  dangling["modules"] = Json::parse(R"({"M": {"regular": "Q", "side": "left"}})");
  CHECK(load_code(dangling) == 4);

  Json bad_side = base();
  bad_side["modules"] = Json::parse(R"({"M": {"regular": "R", "side": "up"}})");
  CHECK(load_code(bad_side) == 3);

  Json not_module = base();
  not_module["modules"] = Json::parse(R"({"M": {"algebra": "R", "side": "left", "action": [[[1]], [[1]]]}})");
  CHECK(load_code(not_module) == 2);

  Json wrong_shape = base();
  wrong_shape["modules"] = Json::parse(R"({"M": {"algebra": "R", "side": "left", "action": [[[1]]]}})");
  CHECK(load_code(wrong_shape) == 2);

  Json not_object = Json::parse(R"({"field": 2, "algebras": [1]})");
  CHECK(load_code(not_object) == 3);
}

TEST_CASE("triple phi must be a module map of the right shape") {
  Json doc = Json::parse(std::ifstream(data_path("tr_kx2.json")));
  doc["triples"]["S_S_id"]["phi"] = Json::parse("[[1, 0]]");
  CHECK(load_code(doc) == 2);
  // A nonzero map R -> S composed with the wrong target is not B-linear.
  Json doc2 = Json::parse(std::ifstream(data_path("tr_kx2.json")));
  doc2["triples"]["bad"] = Json::parse(R"({"ring": "T", "side": "left", "first": "S", "second": "R", "phi": [[1], [0]]})");
  CHECK(load_code(doc2) == 2);
}

TEST_CASE("validate exit codes") {
  CHECK(run("validate " + data_path("tr_kx2.json")).code == 0);

  Json bad = base();
  bad["algebras"]["N"] = Json::parse(kNonAssociative);
  auto r = run("validate " + write_temp("triding_bad_assoc.json", bad.dump()));
  CHECK(r.code == 2);
  CHECK(stderr_text().find("associativ") != std::string::npos);

  CHECK(run("validate " + write_temp("triding_malformed.json", "{\"field\": 2,")).code == 3);
  CHECK(run("validate /nonexistent/triding.json").code == 3);
}

TEST_CASE("verify exit codes") {
  CHECK(run("verify " + data_path("tr_kx2.json") + " --theorem 3.4").code == 0);
  CHECK(run("verify " + data_path("kx2.json") + " --theorem 3.4").code == 4);
  CHECK(run("verify " + data_path("mixed.json") + " --theorem cor3.5").code == 4);
  CHECK(run("verify " + data_path("tr_kx2.json") + " --theorem 9.9").code == 3);

  auto r = run("verify " + data_path("tr_kx2.json") + " --theorem 3.9");
  CHECK(r.code == 0);
  Json rec = Json::parse(r.out.substr(0, r.out.find('\n')));
  CHECK(rec["verdict"] == "pass");
  CHECK(rec["evidence"]["estimate_interval"] == "1 <= lDPD(T) <= 1");
}

TEST_CASE("records carry the report fields in order") {
  auto r = run("verify " + data_path("t2_gf2.json") + " --theorem 3.8");
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 5);
  Json rec = Json::parse(r.out.substr(0, r.out.find('\n')));
  std::vector<std::string> keys;
  for (const auto& [k, v] : rec.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"task", "instance", "verdict", "hypothesis_ledger", "evidence"});

  auto t = run("verify " + data_path("t2_gf2.json") + " --theorem 3.8 --timings");
  Json timed = Json::parse(t.out.substr(0, t.out.find('\n')));
  CHECK(timed.contains("timings"));
}

TEST_CASE("analyze reports gated and periodic values") {
  auto r = run("analyze " + data_path("kx2.json"));
  REQUIRE(r.code == 0);
  CHECK(lines(r.out) == 6);
  const auto first = r.out.find('\n') + 1;
  Json s = Json::parse(r.out.substr(first, r.out.find('\n', first) - first));
  CHECK(s["instance"] == "S");
  CHECK(s["evidence"]["pd"] == ">32 (periodic)");
  CHECK(s["evidence"]["dpd"] == "0");
  CHECK(s["evidence"]["projective"] == false);
}

TEST_CASE("fuzz") {
  auto zero = run("fuzz " + data_path("tr_kx2.json") + " --seed 1 --count 0");
  CHECK(zero.code == 0);
  CHECK(zero.out.empty());

  auto a = run("fuzz " + data_path("tr_kx2.json") + " --seed 7 --count 10 --max-dim 2");
  auto b = run("fuzz " + data_path("tr_kx2.json") + " --seed 7 --count 10 --max-dim 2");
  CHECK(a.code == 0);
  CHECK(lines(a.out) == 40);
  CHECK(a.out == b.out);
  CHECK(a.out != run("fuzz " + data_path("tr_kx2.json") + " --seed 8 --count 10 --max-dim 2").out);

  CHECK(run("fuzz " + data_path("kx2.json") + " --seed 1 --count 1").code == 4);
  CHECK(run("fuzz " + data_path("mixed.json") + " --seed 1 --count 5 --ring M").code == 0);
}

TEST_CASE("run executes the file's tasks in order") {
  auto r = run("run " + data_path("tr_kx2.json"));
  CHECK(r.code == 0);
  std::vector<std::string> tasks;
  std::size_t pos = 0;
  while (pos < r.out.size()) {
    auto end = r.out.find('\n', pos);
    tasks.push_back(Json::parse(r.out.substr(pos, end - pos))["task"]);
    pos = end + 1;
  }
  REQUIRE(tasks.size() == 16);
  CHECK(tasks.front() == "verify:3.4");
  CHECK(tasks.back() == "verify:4.9");
}
