#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "qfree/json_io.hpp"

namespace fs = std::filesystem;

namespace {

  fs::path scratch() {
    static fs::path dir = [] {
      auto d = fs::temp_directory_path() / ("qfree-cli-" + std::to_string(::getpid()));
      fs::create_directories(d);
      return d;
    }();
    return dir;
  }

  fs::path write(std::string const& name, std::string const& text) {
    auto p = scratch() / name;
    std::ofstream(p) << text;
    return p;
  }

  struct Run {
    int         code;
    std::string out;
  };

  Run run(std::string const& args) {
    auto        out = scratch() / "out.json";
    std::string cmd = std::string(QFREE_CLI) + " " + args + " > " + out.string() + " 2>/dev/null";
    int         status = std::system(cmd.c_str());
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    return Run{WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
  }

}  // namespace

TEST_CASE("normalize") {
  auto eq = write("eq.txt", "x a x^-1 b = 1\n");
  auto r  = run("normalize " + eq.string());
  CHECK(r.code == 0);
  auto j = qfree::json::parse(r.out);
  CHECK(j["text"] == "z1^-1 a z1 b = 1");
  CHECK(j["chiBar"] == 2);
  CHECK(j.contains("backMap"));
}

TEST_CASE("solve exit codes") {
  CHECK(run("solve " + write("sat.txt", "x a x^-1 A = 1").string()).code == 0);
  CHECK(run("solve " + write("unsat.txt", "x a x^-1 b = 1").string()).code == 1);
  auto hard = write("hard.txt", "x a x^-1 y b y^-1 A B = 1");
  CHECK(run("solve --max-n 0 " + hard.string()).code == 2);
  CHECK(run("solve --direct --max-len 1 " + write("d.txt", "x x a a = 1").string()).code == 0);
}

TEST_CASE("usage and input errors") {
  CHECK(run("").code == 3);
  CHECK(run("solve /nonexistent/file").code == 3);
  CHECK(run("solve " + write("bad.txt", "x a = 1").string()).code == 3);
  CHECK(run("binpack frobnicate x").code == 3);
  CHECK(run("--alphabet abc normalize " + write("c.txt", "x c x^-1 C = 1").string()).code == 0);
}

TEST_CASE("binpack pipeline") {
  auto inst = write("inst.json", R"({"items":[2,2,1,1],"B":3,"N":2,"exact":true})");
  auto eq   = run("binpack to-equation " + inst.string());
  REQUIRE(eq.code == 0);
  auto eqf  = write("binpack-eq.json", eq.out);
  auto cert = run("binpack to-certificate " + inst.string());
  REQUIRE(cert.code == 0);
  auto certf = write("binpack-cert.json", cert.out);
  auto v     = run("verify " + eqf.string() + " " + certf.string());
  CHECK(v.code == 0);
  CHECK(qfree::json::parse(v.out)["accepted"] == true);
  auto back = run("binpack from-certificate " + inst.string() + " " + certf.string());
  CHECK(back.code == 0);
  CHECK(qfree::json::parse(back.out)["blocks"].size() == 2);
  CHECK(run("binpack solve " + write("no.json", R"({"items":[2,2,2],"B":3,"N":2})").string())
            .code == 1);
  auto rnd = run("random-instance --seed 4 --k 5");
  CHECK(rnd.code == 0);
  CHECK(qfree::json::parse(rnd.out)["items"].size() == 5);
}
