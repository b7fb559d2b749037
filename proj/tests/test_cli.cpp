#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "surplab/cli.hpp"
#include "surplab/generators.hpp"
#include "surplab/graph_io.hpp"
#include "surplab/report.hpp"

using namespace surplab;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out, err;
};

Run run(const std::vector<std::string> &args) {
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("surplab_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write(const std::string &name, const Graph &g) {
  const auto p = scratch() / name;
  write_graph_file(p.string(), g);
  return p.string();
}

std::string write_text(const std::string &name, const std::string &text) {
  const auto p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

Json read_json(const std::string &path) {
  std::ifstream f(path);
  return Json::parse(f);
}

// Subset of JSON Schema used by docs/report_schema.json.
void validate(const Json &schema, const Json &v, const std::string &path, std::vector<std::string> &errors) {
  if (schema.contains("type")) {
    auto matches = [&](const std::string &t) {
      return (t == "object" && v.is_object()) || (t == "array" && v.is_array()) || (t == "string" && v.is_string()) ||
             (t == "boolean" && v.is_boolean()) || (t == "null" && v.is_null()) ||
             (t == "integer" && v.is_number_integer()) || (t == "number" && v.is_number());
    };
    const auto &t = schema["type"];
    const bool ok = t.is_string() ? matches(t.get<std::string>())
                                  : std::any_of(t.begin(), t.end(), [&](const Json &x) { return matches(x); });
    if (!ok) {
      errors.push_back(path + ": type " + std::string(v.type_name()));
      return;
    }
  }
  if (schema.contains("const") && v != schema["const"]) {
    errors.push_back(path + ": const");
  }
  if (schema.contains("enum") && std::find(schema["enum"].begin(), schema["enum"].end(), v) == schema["enum"].end()) {
    errors.push_back(path + ": enum");
  }
  if (v.is_object()) {
    for (const auto &k : schema.value("required", Json::array())) {
      if (!v.contains(k.get<std::string>())) {
        errors.push_back(path + ": missing " + k.get<std::string>());
      }
    }
    const auto props = schema.value("properties", Json::object());
    for (const auto &[k, x] : v.items()) {
      if (props.contains(k)) {
        validate(props[k], x, path + "." + k, errors);
      } else if (schema.contains("additionalProperties") && !schema["additionalProperties"].get<bool>()) {
        errors.push_back(path + ": unexpected " + k);
      }
    }
  }
  if (v.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      validate(schema["items"], v[i], path + "[" + std::to_string(i) + "]", errors);
    }
  }
}

std::string without_timing(const std::string &path) {
  Json j = read_json(path);
  j.erase("timing");
  return j.dump();
}

} // namespace

TEST_CASE("maxcut summary") {
  const auto k3 = write("k3.txt", complete_graph(3));
  const auto r = run({"maxcut", k3});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("value 2") != std::string::npos);
  CHECK(r.out.find("surplus 0.5") != std::string::npos);
}

TEST_CASE("exit codes on a golden corpus") {
  const auto cliques = write("cliques.txt", disjoint_cliques({15, 15, 15, 15}));
  const auto noise = write("gnp.txt", gnp(60, 0.5, 1));
  const auto k5 = write("k5.txt", complete_graph(5));
  const auto bad = write_text("bad.txt", "n 3\n0 1\n1 q\n");

  struct Case {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> corpus{
      {{"stability", cliques}, cli::kOk},
      {{"stability", noise}, cli::kNotCertified},
      {{"certify", k5}, cli::kOk},
      {{"spectrum", k5}, cli::kOk},
      {{"extract", k5, "--mode", "chain"}, cli::kOk},
      {{"extract", k5, "--mode", "balanced"}, cli::kOk},
      {{"maxcut", noise}, cli::kOk},
      {{"verify", "--suite", "weyl", "--count", "20"}, cli::kOk},
      {{"maxcut", bad}, cli::kUsage},
      {{"maxcut", (scratch() / "missing.txt").string()}, cli::kUsage},
      {{"maxcut"}, cli::kUsage},
      {{"frobnicate"}, cli::kUsage},
      {{"--eps", "-1", "maxcut", k5}, cli::kUsage},
      {{"--alpha", "0.5", "extract", k5, "--mode", "increment"}, cli::kUsage},
      {{"--relaxed", "--alpha", "0.5", "extract", k5, "--mode", "increment"}, cli::kOk},
      {{"extract", k5, "--mode", "sideways"}, cli::kUsage},
      {{"verify", "--suite", "nope"}, cli::kUsage},
      {{"--help"}, cli::kOk},
  };
  for (const auto &c : corpus) {
    std::string joined;
    for (const auto &a : c.args) {
      joined += a + " ";
    }
    CAPTURE(joined);
    CHECK(run(c.args).code == c.code);
  }
}

TEST_CASE("errors name the line or the flag") {
  const auto bad = write_text("bad2.txt", "0 1\n\n2 2\n");
  auto r = run({"maxcut", bad});
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(r.err.find(bad) != std::string::npos);

  r = run({"--alpha", "0", "maxcut", write("k4.txt", complete_graph(4))});
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("alpha") != std::string::npos);
}

TEST_CASE("verify weyl at the documented size") {
  const auto r = run({"verify", "--suite", "weyl", "--count", "200", "--seed", "1"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("200/200") != std::string::npos);
}

TEST_CASE("stability report on exact cliques") {
  const auto g = write("cliques2.txt", disjoint_cliques({15, 15, 15}));
  const auto json = (scratch() / "stab.json").string();
  const auto r = run({"--json", json, "stability", g});
  CHECK(r.code == cli::kOk);
  const Json j = read_json(json);
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["command"] == "stability");
  CHECK(j["exit_code"] == 0);
  CHECK(j["input"]["n"] == 45);
  CHECK(j["findings"]["stability"]["status"] == "certified");
  CHECK(j["findings"]["stability"]["closeness"] == 0.0);
}

TEST_CASE("reports are identical apart from timing") {
  const auto g = write("det.txt", gnp(24, 0.6, 5));
  const std::vector<std::vector<std::string>> commands{
      {"certify", g},
      {"extract", g, "--mode", "chain"},
      {"stability", g},
      {"verify", "--suite", "all", "--count", "5", "--seed", "3"},
  };
  int k = 0;
  for (const auto &cmd : commands) {
    std::vector<std::string> texts;
    for (const char *w : {"1", "1", "3"}) {
      const auto json = (scratch() / ("det" + std::to_string(k++) + ".json")).string();
      std::vector<std::string> args{"--workers", w, "--json", json};
      args.insert(args.end(), cmd.begin(), cmd.end());
      run(args);
      texts.push_back(without_timing(json));
    }
    CHECK(texts[0] == texts[1]);
    CHECK(texts[0] == texts[2]);
  }
}

TEST_CASE("gen writes a readable graph and honours specs") {
  const auto path = (scratch() / "gen.txt").string();
  auto r = run({"gen", "--family", "paley", "--q", "13", "-o", path});
  CHECK(r.code == cli::kOk);
  CHECK(read_graph_file(path) == paley_graph(13));

  r = run({"gen", "--spec", R"({"family": "disjoint_cliques", "sizes": [2, 3]})", "-o", path});
  CHECK(r.code == cli::kOk);
  CHECK(read_graph_file(path) == disjoint_cliques({2, 3}));

  r = run({"gen", "--family", "paley", "--q", "7"});
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("q") != std::string::npos);
}

TEST_CASE("reports follow the shipped schema") {
  std::ifstream sf(SURPLAB_SOURCE_DIR "/docs/report_schema.json");
  REQUIRE(sf);
  const Json schema = Json::parse(sf);

  const auto dense = write("schema_dense.txt", gnp(20, 0.9, 2));
  const auto planted = write("schema_planted.txt", perturbed_clique_union({15, 15, 15, 15}, 10, 1));
  const auto noise = write("schema_noise.txt", gnp(60, 0.5, 1));
  std::vector<std::vector<std::string>> commands{
      {"maxcut", dense},
      {"maxcut", "--heuristic", noise},
      {"certify", dense},
      {"spectrum", dense},
      {"stability", planted},
      {"stability", noise},
      {"gen", "--family", "turan", "--n", "9", "--r", "3", "-o", (scratch() / "schema_gen.txt").string()},
      {"verify", "--suite", "all", "--count", "3"},
  };
  for (const std::string mode : {"step", "increment", "balanced", "cliques", "clique", "chain"}) {
    commands.push_back({"extract", dense, "--mode", mode});
  }
  int k = 0;
  for (const auto &cmd : commands) {
    const auto json = (scratch() / ("schema" + std::to_string(k++) + ".json")).string();
    std::vector<std::string> args{"--json", json};
    args.insert(args.end(), cmd.begin(), cmd.end());
    run(args);
    std::vector<std::string> errors;
    validate(schema, read_json(json), "$", errors);
    CAPTURE(cmd[0]);
    CHECK(errors == std::vector<std::string>{});
  }
}

TEST_CASE("json floats keep 17 significant digits") {
  Json j;
  j["x"] = 0.1;
  j["third"] = 1.0 / 3.0;
  j["bad"] = std::numeric_limits<double>::infinity();
  const auto text = dump_json(j);
  CHECK(text.find("0.10000000000000001") != std::string::npos);
  CHECK(text.find("0.33333333333333331") != std::string::npos);
  CHECK(text.find("\"bad\": null") != std::string::npos);
  CHECK(Json::parse(text)["third"].get<double>() == 1.0 / 3.0);
  CHECK(text.back() == '\n');
}

TEST_CASE("graph digest depends only on the graph") {
  CHECK(graph_digest(gnp(10, 0.5, 1)) == graph_digest(gnp(10, 0.5, 1)));
  CHECK(graph_digest(gnp(10, 0.5, 1)) != graph_digest(gnp(10, 0.5, 2)));
  CHECK(graph_digest(Graph(3)).size() == 16);
}
