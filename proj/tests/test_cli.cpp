#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "dilatekit/json_io.hpp"

#ifndef DILATEKIT_CLI_PATH
#error "DILATEKIT_CLI_PATH must name the CLI binary"
#endif

using namespace dilatekit;
namespace fs = std::filesystem;

namespace {

struct Workdir {
  fs::path dir;
  Workdir() {
    dir = fs::temp_directory_path() / ("dilatekit_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Workdir() { fs::remove_all(dir); }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

int run(const std::string& args, const Workdir& w) {
  const std::string cmd = std::string(DILATEKIT_CLI_PATH) + " " + args + " > " +
                          w.path("stdout.txt") + " 2> " + w.path("stderr.txt");
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("julia on a scalar writes the rotation") {
  Workdir w;
  write(w.path("a.json"), R"({"rows":1,"cols":1,"entries":[[0.5,0.0]]})");
  CHECK(run("julia --in " + w.path("a.json") + " --out " + w.path("j.json"), w) == 0);
  const Block2x2 j = block_from_json(read_json_file(w.path("j.json")));
  const ComplexMatrix m = j.assembled();
  const double c = std::sqrt(3.0) / 2.0;
  CHECK(std::abs(m(0, 0) - Complex(c)) <= 1e-15);
  CHECK(m(0, 1) == Complex(0.5));
  CHECK(m(1, 0) == Complex(-0.5));
  CHECK(std::abs(m(1, 1) - Complex(c)) <= 1e-15);
  CHECK(run("check --in " + w.path("j.json"), w) == 0);
}

TEST_CASE("check reports a non-contraction with status 2") {
  Workdir w;
  write(w.path("a.json"), R"({"rows":1,"cols":1,"entries":[[2.0,0.0]]})");
  CHECK(run("check --in " + w.path("a.json"), w) == 2);
  CHECK(slurp(w.path("stderr.txt")).find("measured norm: 2") != std::string::npos);
}

TEST_CASE("malformed input names the field and exits 2") {
  Workdir w;
  write(w.path("bad.json"), R"({"rows":2,"cols":1,"entries":[[1.0,0.0]]})");
  CHECK(run("julia --in " + w.path("bad.json"), w) == 2);
  CHECK(slurp(w.path("stderr.txt")).find(".entries") != std::string::npos);
  CHECK(run("julia", w) == 2);
  CHECK(run("power --in " + w.path("bad.json"), w) == 2);
  CHECK(run("frobnicate", w) == 2);
}

TEST_CASE("check on a contraction runs every verification and writes a report") {
  Workdir w;
  CHECK(run("gen --n 3 --kind strict --seed 5 --out " + w.path("a.json"), w) == 0);
  CHECK(run("check --in " + w.path("a.json") + " --report " + w.path("r.json"), w) == 0);
  const Json r = read_json_file(w.path("r.json"));
  CHECK(r["checks"].size() > 20);
  for (const auto& c : r["checks"]) CHECK(c["pass"] == true);
  CHECK(run("check --tol 1e-30 --in " + w.path("a.json"), w) == 1);
}

TEST_CASE("halmos, power and intertwine subcommands") {
  Workdir w;
  CHECK(run("gen --n 2 --seed 1 --out " + w.path("a.json"), w) == 0);
  CHECK(run("halmos --in " + w.path("a.json") + " --out " + w.path("h.json"), w) == 0);
  CHECK(block_from_json(read_json_file(w.path("h.json"))).rows() == 4);
  CHECK(run("power --n 3 --in " + w.path("a.json") + " --out " + w.path("p.json"), w) == 0);
  CHECK(power_dilation_from_json(read_json_file(w.path("p.json"))).u.rows() == 8);
  CHECK(run("check --in " + w.path("p.json"), w) == 0);
  CHECK(run("intertwine --in " + w.path("a.json"), w) == 0);
  CHECK(std::stod(slurp(w.path("stdout.txt"))) < 1e-12);

  CHECK(run("gen --n 2 --cols 3 --seed 1 --out " + w.path("r.json"), w) == 0);
  CHECK(run("halmos --in " + w.path("r.json"), w) == 2);
}

TEST_CASE("DILATEKIT_TOL overrides the default, --tol overrides both") {
  Workdir w;
  CHECK(run("gen --n 3 --seed 2 --out " + w.path("a.json"), w) == 0);
  CHECK(run("julia --in " + w.path("a.json"), w) == 0);
  const std::string a = w.path("a.json");
  CHECK(std::system(("DILATEKIT_TOL=1e-30 " + std::string(DILATEKIT_CLI_PATH) + " julia --in " +
                     a + " > /dev/null 2>&1").c_str()) != 0);
  CHECK(std::system(("DILATEKIT_TOL=1e-30 " + std::string(DILATEKIT_CLI_PATH) +
                     " julia --tol 1e-10 --in " + a + " > /dev/null 2>&1").c_str()) == 0);
}

TEST_CASE("suite subcommand") {
  Workdir w;
  CHECK(run("suite --trials 10 --max-dim 4 --seed 7 --report " + w.path("s.json"), w) == 0);
  const Json s = read_json_file(w.path("s.json"));
  CHECK(s["pass"] == true);
  CHECK(s["trials"] == 10);
  CHECK(run("suite --trials 0", w) == 2);
  CHECK(run("suite --trials 3 --kind nope", w) == 2);
}
