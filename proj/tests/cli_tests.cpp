// End-to-end tests against the satdom binary. The binary path comes from
// argv[1] or the SATDOM_CLI environment variable.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "json.hpp"
#include "satdom/json_io.hpp"

namespace {

using nlohmann::json;

std::string g_cli;
int g_failures = 0;

#define EXPECT(cond)                                                         \
  do {                                                                       \
    if (!(cond)) {                                                           \
      ++g_failures;                                                          \
      std::cerr << "FAIL " << __FILE__ << ":" << __LINE__ << "  " << #cond   \
                << "\n";                                                     \
    }                                                                        \
  } while (0)

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + g_cli + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult r{-1, {}};
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json parse_doc(const RunResult& r) {
  try {
    return json::parse(r.out);
  } catch (...) {
    ++g_failures;
    std::cerr << "FAIL: output is not json: " << r.out.substr(0, 200) << "\n";
    return json::object();
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];
  if (g_cli.empty())
    if (const char* env = std::getenv("SATDOM_CLI")) g_cli = env;
  if (g_cli.empty()) {
    std::cerr << "usage: cli_tests <path-to-satdom>\n";
    return 2;
  }
  const std::string tmp = "cli_tests_tmp";

  // gamma: dp and bb agree on the motivating board
  {
    RunResult r = run("gamma --rect 7 7");
    EXPECT(r.exit_code == 0);
    json doc = parse_doc(r);
    EXPECT(doc["result"]["value"] == 12);
    EXPECT(doc["result"]["method"] == "dp");
    EXPECT(doc["schema_version"] == "1");
    // the embedded witness re-validates
    const satdom::Witness w = satdom::witness_from_json(doc["result"]["witness"]);
    EXPECT(!satdom::check_witness(w).has_value());

    RunResult rb = run("gamma --rect 7 7 --method bb");
    EXPECT(parse_doc(rb)["result"]["value"] == 12);
  }
  {
    RunResult r = run("gamma --rect 1 9");
    EXPECT(parse_doc(r)["result"]["value"] == 3);
  }

  // tile and check round trip through files
  {
    RunResult r = run("tile --rect 6 6");
    EXPECT(r.exit_code == 0);
    json doc = parse_doc(r);
    EXPECT(doc["result"]["value"] == 10);
    write_file(tmp + "_tile.json", r.out);
    EXPECT(run("check --witness " + tmp + "_tile.json").exit_code == 0);
    EXPECT(run("check --rect 6 6 --witness " + tmp + "_tile.json").exit_code == 0);
    // a different board does not match
    EXPECT(run("check --rect 5 5 --witness " + tmp + "_tile.json").exit_code == 5);
  }

  // saturate 7x7: 37 dominoes, round trip
  {
    RunResult r = run("saturate --rect 7 7");
    json doc = parse_doc(r);
    EXPECT(doc["result"]["value"] == 37);
    EXPECT(doc["result"]["fragments"] == 12);
    write_file(tmp + "_sat.json", r.out);
    EXPECT(run("check --witness " + tmp + "_sat.json").exit_code == 0);
  }

  // xcover examples
  {
    EXPECT(parse_doc(run("xcover --tri 5"))["result"]["value"] == 7);
    RunResult r = run("xcover --rect 5 5");
    json doc = parse_doc(r);
    EXPECT(doc["result"]["value"] == 7);
    write_file(tmp + "_x.json", r.out);
    EXPECT(run("check --witness " + tmp + "_x.json").exit_code == 0);
  }

  // seq
  {
    RunResult r = run("seq A193764 6 --format ascii");
    EXPECT(r.out == "2\n6\n12\n18\n26\n37\n");
    EXPECT(parse_doc(run("seq A193765 6"))["result"]["terms"] ==
           json::array({3, 7, 13, 19, 27, 38}));
    EXPECT(parse_doc(run("seq A193766 5"))["result"]["terms"] == json::array({2, 4, 6, 8, 11}));
    EXPECT(run("seq A104519 19 --verify").exit_code == 0);
    EXPECT(run("seq A000001 3").exit_code == 2);
    EXPECT(run("seq A193764 25").exit_code == 3);  // beyond the table
  }

  // regular
  {
    EXPECT(parse_doc(run("regular --rect 5 5"))["result"]["regular"] == true);
    EXPECT(parse_doc(run("regular --tri 4"))["result"]["regular"] == true);
    write_file(tmp + "_notch.txt", "##\n.#\n##\n");
    json doc = parse_doc(run("regular --board " + tmp + "_notch.txt"));
    EXPECT(doc["result"]["regular"] == false);
    EXPECT(doc["result"]["witness"] == json::array({json::array({0, 0}), json::array({2, 0})}));
  }

  // board files: ascii and cell-list
  {
    write_file(tmp + "_b.txt", "###\n#.#\n");
    EXPECT(parse_doc(run("gamma --board " + tmp + "_b.txt"))["result"]["value"] == 2);
    write_file(tmp + "_h.cells", R"({"kind":"hexagonal","cells":[[0,0],[0,1]]})");
    EXPECT(parse_doc(run("gamma --board " + tmp + "_h.cells"))["result"]["value"] == 1);
  }

  // a 2x2 board with three dominoes: check names the redundant one
  {
    write_file(tmp + "_red.json", R"({
      "type": "domino_covering",
      "board": {"kind": "square", "cells": [[0,0],[0,1],[1,0],[1,1]]},
      "dominoes": [[[0,0],[0,1]], [[0,0],[1,0]], [[1,0],[1,1]]]
    })");
    RunResult r = run("check --witness " + tmp + "_red.json");
    EXPECT(r.exit_code == 5);
    json doc = parse_doc(r);
    EXPECT(doc["result"]["valid"] == false);
    const std::string detail = doc["result"]["detail"];
    EXPECT(detail.find("redundant") != std::string::npos);
    EXPECT(detail.find("[(0,0),(1,0)]") != std::string::npos);
  }

  // a hand-edited tiling with an overlap names the overlapped cell
  {
    write_file(tmp + "_overlap.json", R"({
      "type": "fragment_tiling",
      "board": {"kind": "square", "cells": [[0,0],[0,1],[0,2]]},
      "fragments": [{"center": [0,0], "spokes": [[0,1]]},
                    {"center": [0,2], "spokes": [[0,1]]}]
    })");
    RunResult r = run("check --witness " + tmp + "_overlap.json");
    EXPECT(r.exit_code == 5);
    EXPECT(parse_doc(r)["result"]["detail"].get<std::string>().find("(0,1)") !=
           std::string::npos);
  }

  // exit codes
  {
    EXPECT(run("gamma --board does_not_exist.txt").exit_code == 2);
    EXPECT(run("gamma --rect 2 2 --rect 3 3").exit_code == 2);
    EXPECT(run("gamma").exit_code == 2);
    EXPECT(run("tile --rect 1 1").exit_code == 4);  // isolated cell
    EXPECT(run("gamma --tri 3 --method dp").exit_code == 3);
    EXPECT(run("tile --rect 6 6", "SATDOM_NODE_BUDGET=1").exit_code == 3);
    EXPECT(run("nonsense").exit_code == 2);
    json doc = parse_doc(run("tile --rect 6 6", "SATDOM_NODE_BUDGET=2"));
    EXPECT(doc["result"]["status"] == "budget_exhausted");
    EXPECT(doc["result"]["bounds"]["lower"] <= 10);
    EXPECT(doc["result"]["bounds"]["upper"] >= 10);
  }

  // ascii and svg formats
  {
    RunResult r = run("tile --rect 2 2 --format ascii");
    EXPECT(r.out == "f = 2\nAB\nAB\n");
    EXPECT(run("tile --rect 3 3 --format svg").out.find("<svg") != std::string::npos);
    EXPECT(run("saturate --rect 3 3 --format svg").out.find("<line") != std::string::npos);
    EXPECT(run("xcover --tri 5 --format svg").out.find("<polygon") != std::string::npos);
    EXPECT(run("seq A104519 3 --format svg").exit_code == 2);
  }

  std::remove((tmp + "_tile.json").c_str());
  std::remove((tmp + "_sat.json").c_str());
  std::remove((tmp + "_x.json").c_str());
  std::remove((tmp + "_notch.txt").c_str());
  std::remove((tmp + "_b.txt").c_str());
  std::remove((tmp + "_h.cells").c_str());
  std::remove((tmp + "_red.json").c_str());
  std::remove((tmp + "_overlap.json").c_str());

  if (g_failures) {
    std::cerr << g_failures << " cli test(s) failed\n";
    return 1;
  }
  std::cout << "all cli tests passed\n";
  return 0;
}
