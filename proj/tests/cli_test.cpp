// Drives the arconv executable through a shell and checks output and exit codes.

#include "doctest.h"
#include "json.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

class Workspace {
 public:
  Workspace() {
    dir_ = fs::temp_directory_path() / ("arconv_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  ~Workspace() {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
  }

  std::string read(const std::string& name) const {
    std::ifstream in(path(name), std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

  /// Runs `arconv ARGS` inside the workspace; env is prepended to the command.
  Run run(const std::string& args, const std::string& env = "") const {
    std::string err = path("stderr.txt");
    std::string cmd = "cd '" + dir_.string() + "' && " + env + " '" ARCONV_CLI "' " + args + " 2>'" + err + "'";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = ::pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, read("stderr.txt")};
  }

 private:
  fs::path dir_;
};

std::vector<std::string> values_of(const std::string& seq_json) {
  std::vector<std::string> out;
  json doc = json::parse(seq_json);
  for (const auto& v : doc["values"]) {
    std::string num = v[0], den = v[1];
    out.push_back(den == "1" ? num : num + "/" + den);
  }
  return out;
}

using Strings = std::vector<std::string>;

}  // namespace

TEST_CASE("gen") {
  Workspace w;
  Run r = w.run("gen bernoulli --depth 4");
  CHECK(r.code == 0);
  CHECK(values_of(r.out) == Strings{"1", "-1/2", "1/6", "0", "-1/30"});

  r = w.run("gen e --depth 0");
  CHECK(r.code == 0);
  CHECK(values_of(r.out) == Strings{"1"});

  r = w.run("gen norlund --p 1 --q 2 --depth 8");
  CHECK(values_of(r.out) == Strings{"1", "-1/4", "1/48", "1/64", "-3/1280", "-19/3072", "79/86016", "275/49152",
                                    "-2339/2949120"});

  r = w.run("gen eps --x 1/2 --depth 2 --format csv");
  CHECK(r.out == "k,numerator,denominator\n0,1,1\n1,1,2\n2,1,4\n");
  r = w.run("gen bernoulli --depth 2 --format bfile --part denominator");
  CHECK(r.out == "0 1\n1 2\n2 6\n");
  r = w.run("gen bernoulli-poly --depth 1 --format csv");
  CHECK(r.out == "k,polynomial\n0,1\n1,x - 1/2\n");

  CHECK(w.run("gen bernoulli --depth 3 -o b.json").code == 0);
  CHECK(values_of(w.read("b.json")).size() == 4);
}

TEST_CASE("gen errors") {
  Workspace w;
  Run r = w.run("gen nosuch");
  CHECK(r.code == 2);
  CHECK(r.err.find("nosuch") != std::string::npos);
  CHECK(w.run("gen eps --x 1/0").code == 2);
  CHECK(w.run("gen norlund").code == 2);
  CHECK(w.run("gen bernoulli --depth -1").code == 2);
  CHECK(w.run("gen bernoulli --format xml").code == 2);
  CHECK(w.run("").code == 2);
  CHECK(w.run("frobnicate").code == 2);
}

TEST_CASE("depth cap") {
  Workspace w;
  CHECK(w.run("gen e --depth 256").code == 0);
  Run r = w.run("gen e --depth 257");
  CHECK(r.code == 2);
  CHECK(r.err.find("TOOL_MAX_DEPTH") != std::string::npos);
  CHECK(w.run("gen e --depth 20", "TOOL_MAX_DEPTH=10").code == 2);
  CHECK(w.run("gen e --depth 10", "TOOL_MAX_DEPTH=10").code == 0);
  CHECK(w.run("gen e --depth 300", "TOOL_MAX_DEPTH=300").code == 0);
  CHECK(w.run("gen e --depth 1", "TOOL_MAX_DEPTH=ten").code == 2);
  w.run("gen e --depth 20 -o e.json");
  CHECK(w.run("op invert e.json", "TOOL_MAX_DEPTH=10").code == 2);
}

TEST_CASE("op") {
  Workspace w;
  w.run("gen xi1 --depth 8 -o xi1.json");
  w.run("gen bernoulli --depth 8 -o b.json");
  w.run("gen I --depth 8 -o i.json");
  w.run("gen nu --depth 8 -o nu.json");

  Run r = w.run("op invert xi1.json");
  CHECK(r.code == 0);
  CHECK(values_of(r.out) == values_of(w.read("b.json")));

  r = w.run("op root --m 2 b.json");
  CHECK(r.code == 0);
  CHECK(values_of(r.out) == values_of(w.run("gen norlund --p 1 --q 2 --depth 8").out));

  r = w.run("op bullet i.json nu.json");
  CHECK(values_of(r.out) == values_of(w.run("gen e --depth 8").out));

  r = w.run("op decompose b.json");
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  CHECK(count == 3);

  w.write("c.json", "{\"values\":[[\"2\",\"1\"],[\"1\",\"1\"]]}");
  r = w.run("op root --m 2 c.json");
  CHECK(r.code == 3);
  CHECK(r.err.find("RootNotRepresentable") != std::string::npos);
  r = w.run("op invert xi1.json --format json");
  w.write("z.json", "{\"values\":[[\"0\",\"1\"],[\"1\",\"1\"]]}");
  r = w.run("op invert z.json");
  CHECK(r.code == 3);
  CHECK(r.err.find("NotAUnit") != std::string::npos);

  w.write("short.json", "{\"values\":[[\"1\",\"1\"]]}");
  CHECK(w.run("op bullet b.json short.json").code == 2);
  w.write("bad.json", "{\"values\":");
  CHECK(w.run("op invert bad.json").code == 2);
  CHECK(w.run("op invert missing.json").code == 2);
  CHECK(w.run("op shuffle b.json").code == 2);
  CHECK(w.run("op invert b.json b.json").code == 2);
}

TEST_CASE("double inversion reproduces the input byte for byte") {
  Workspace w;
  for (const char* g : {"bernoulli", "euler1", "fact", "norlund --p 3 --q 7"}) {
    CAPTURE(g);
    w.run(std::string("gen ") + g + " --depth 20 -o a.json");
    REQUIRE(w.run("op invert a.json -o b.json").code == 0);
    REQUIRE(w.run("op invert b.json -o c.json").code == 0);
    CHECK(w.read("a.json") == w.read("c.json"));
  }
  w.run("gen bernoulli --depth 6 -o a.json");
  Run r = w.run("op invert - < a.json");
  CHECK(r.code == 0);
}

TEST_CASE("verify") {
  Workspace w;
  Run r = w.run("verify carlitz --m 1 --n 2");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["first_failure"].is_null());

  r = w.run("verify eq29 --n 6 --k 2");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["pass"] == true);

  r = w.run("verify eq22 --a 1 --b 2 --c 1");
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["first_failure"]["index"] == 0);

  CHECK(w.run("verify nosuch").code == 2);
  CHECK(w.run("verify").code == 2);
  CHECK(w.run("verify eq22 --a 1/0").code == 2);
  r = w.run("verify --list");
  CHECK(r.code == 0);
  CHECK(r.out.find("eq22-general\n") != std::string::npos);

  r = w.run("verify eq3 --depth 5");
  CHECK(json::parse(r.out)["depth"] == 5);
}

TEST_CASE("table1") {
  Workspace w;
  Run r = w.run("table1");
  CHECK(r.code == 0);
  CHECK(r.out.find("-3/1280") != std::string::npos);
  CHECK(r.out.find("15 of 36 cells agree") != std::string::npos);
  r = w.run("table1 --format json");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j.size() == 36);
}

TEST_CASE("oeis-compare") {
  Workspace w;
  w.run("gen norlund --p 1 --q 2 --depth 8 -o r.json");
  w.write("num.txt", "# numerators\n0 1\n1 -1\n2 1\n3 1\n4 -3\n5 -19\n6 79\n7 275\n8 -2339\n9 1\n");
  w.write("den.txt", "0 1\n1 4\n2 48\n3 64\n4 1280\n5 3072\n6 86016\n7 49152\n8 2949120\n");
  Run r = w.run("oeis-compare r.json num.txt");
  CHECK(r.code == 0);
  CHECK(r.out.find("0..8") != std::string::npos);
  CHECK(w.run("oeis-compare r.json den.txt --part denominator").code == 0);
  CHECK(w.run("oeis-compare r.json num.txt --part denominator").code == 1);

  w.write("far.txt", "20 1\n21 2\n");
  r = w.run("oeis-compare r.json far.txt");
  CHECK(r.code == 2);
  CHECK(r.out.find("no overlap") != std::string::npos);

  w.write("broken.txt", "0 1\n1 -1\n2 one\n");
  r = w.run("oeis-compare r.json broken.txt");
  CHECK(r.code == 2);
  CHECK(r.err.find("line 3") != std::string::npos);

  std::string fixture = std::string(ARCONV_TEST_DATA_DIR) + "/bernoulli_numerators.txt";
  w.run("gen bernoulli --depth 30 -o b.json");
  CHECK(w.run("oeis-compare b.json '" + fixture + "'").code == 0);
}
