#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "support.hpp"
#include "tempconn/cli.hpp"
#include "tempconn/text_format.hpp"

using namespace tempconn;
using tempconn::test::data_path;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string fig1_path = data_path("fig1.tg");

std::string scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "tempconn_cli";
  std::filesystem::create_directories(dir);
  return dir.string();
}

std::string write_file(const std::string& name, const std::string& text) {
  std::string path = scratch_dir() + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("reach") {
  Run r = run({"reach", "--input", fig1_path, "--from", "a", "--to", "e", "--model", "nonstrict"});
  CHECK(r.code == 0);
  CHECK(r.out == "yes\n");
  r = run({"reach", "--input", fig1_path, "--from", "a", "--to", "f"});
  CHECK(r.code == 1);
  CHECK(r.out == "no\n");
  CHECK(run({"reach", "--input", fig1_path, "--from", "a", "--to", "a"}).out == "yes\n");
  CHECK(run({"reach", "--input", fig1_path, "--from", "a", "--to", "e", "--model", "strict"})
            .code == 1);
  CHECK(run({"reach", "--input", fig1_path, "--from", "a"}).out == "a b c d e\n");
  r = run({"reach", "--input", fig1_path, "--from", "a", "--profile"});
  CHECK(r.out.find("1: a b\n2: a b c e\n") != std::string::npos);
}

TEST_CASE("reach from standard input") {
  std::string text = serialize_temporal_graph(test::fig1());
  Run r = run({"reach", "--input", "-", "--from", "d", "--to", "e"}, text);
  CHECK(r.code == 0);
}

TEST_CASE("components") {
  Run r = run({"components", "--input", fig1_path, "--kind", "tcc", "--closed", "--model",
               "nonstrict"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# ", 0) == 0);
  CHECK(r.out.find("closed tcc (nonstrict)") != std::string::npos);
  CHECK(r.out.find("\na b c d\n") != std::string::npos);

  r = run({"components", "--input", fig1_path, "--kind", "tucc", "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  bool found = false;
  for (const auto& c : j["components"])
    found |= c == nlohmann::json::array({"a", "b", "c", "d", "e", "f"});
  CHECK(found);
  CHECK(r.out.find("\"components\"") < r.out.find("\"max_size\""));
  CHECK(r.out.find("\"max_size\"") < r.out.find("\"query\""));

  std::string static_graph = write_file("static.tg", "tg undirected 5\n0 1 1\n1 2 1\n3 4 1\n");
  r = run({"components", "--input", static_graph, "--kind", "tcc"});
  CHECK(r.out == "# 2 tcc (nonstrict), max size 3\n0 1 2\n3 4\n");
}

TEST_CASE("check") {
  auto check = [](std::string set, bool maximal) {
    std::vector<std::string> args{"check", "--input", fig1_path, "--set", set, "--kind", "tcc",
                                  "--closed"};
    if (maximal) args.push_back("--maximal");
    return run(args);
  };
  CHECK(check("a,b,c,d", true).code == 0);
  CHECK(check("a,b", true).code == 1);
  CHECK(check("a,b", false).code == 0);
  CHECK(run({"check", "--input", fig1_path, "--set", "a", "--kind", "tcc"}).out == "yes\n");
  Run bad = run({"check", "--input", fig1_path, "--set", "a,z"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("unknown vertex 'z'") != std::string::npos);
}

TEST_CASE("find") {
  Run r = run({"find", "--input", fig1_path, "--k", "5", "--kind", "tcc"});
  CHECK(r.code == 0);
  CHECK(r.out == "a b c d e\n");
  r = run({"find", "--input", fig1_path, "--k", "7", "--kind", "tcc"});
  CHECK(r.code == 1);
  CHECK(r.out == "none\n");
  r = run({"find", "--input", fig1_path, "--k", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "a\n");
  r = run({"find", "--input", fig1_path, "--k", "3", "--algo", "fpt"});
  CHECK(r.code == 2);
  r = run({"find", "--input", fig1_path, "--k", "7", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["witness"].is_null());
}

TEST_CASE("gen") {
  std::string p3 = write_file("p3.graph", "graph 3\n0 1\n1 2\n");
  std::string k3 = write_file("k3.graph", "graph 3\n0 1\n0 2\n1 2\n");

  Run r = run({"gen", "dir-tau2", "--input", p3});
  CHECK(r.code == 0);
  CHECK(parse_temporal_graph(r.out).vertex_count() == 7);

  r = run({"gen", "clique-tcc", "--input", k3});
  TemporalGraph g = parse_temporal_graph(r.out);
  CHECK(g.vertex_count() == 18);
  CHECK(g.lifetime() == 12);

  std::string prefix = scratch_dir() + "/sat";
  r = run({"gen", "sat-conn", "--nx", "2", "--ny", "2", "--clauses", "3", "--seed", "7",
           "--output", prefix});
  CHECK(r.code == 0);
  CHECK(r.out.find("12 vertices, lifetime 8") != std::string::npos);
  TemporalGraph sat = read_temporal_graph_file(prefix + ".tg");
  CHECK(sat.vertex_count() == 12);
  std::ifstream sidecar(prefix + ".json");
  auto j = nlohmann::json::parse(sidecar);
  CHECK(j["claim"] == "not_connected");
  CHECK(j["source"]["nx"] == 2);

  CHECK(run({"gen", "sat-conn", "--seed", "7"}).out ==
        run({"gen", "sat-conn", "--seed", "7"}).out);
  CHECK(run({"gen", "sat-uni", "--schedule", "separated"}).code == 0);
  CHECK(run({"gen", "sat-uni", "--schedule", "other"}).code == 2);
  CHECK(run({"gen", "nonsense"}).code == 2);
}

TEST_CASE("selftest") {
  Run r = run({"selftest", "--trials", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all suites passed") != std::string::npos);

  std::string prefix = scratch_dir() + "/ce";
  r = run({"selftest", "--trials", "3", "--inject-failure", "--dump", prefix});
  CHECK(r.code == 1);
  CHECK(r.out.find("counterexample: " + prefix + ".tg") != std::string::npos);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"reach", "--from", "a"}).code == 2);
  CHECK(run({"reach", "--input", fig1_path, "--from", "a", "--model", "lazy"}).code == 2);
  CHECK(run({"components", "--input", "/nonexistent/file.tg"}).code == 2);
  Run bad = run({"components", "--input", "-"}, "tg directed 2\n0 1\n");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 2") != std::string::npos);
  Run tight = run({"components", "--input", fig1_path, "--max-cliques", "1"});
  CHECK(tight.code == 2);
  CHECK(tight.err.find("--max-cliques") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}
