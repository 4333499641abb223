#include <sys/wait.h>  // for WEXITSTATUS

#include <array>   // for array
#include <cstdio>  // for popen
#include <string>  // for string

#include "catch2/catch_amalgamated.hpp"

namespace {
  struct Run {
    int         code;
    std::string out;
  };

  Run run(std::string const& args) {
    std::string cmd = std::string(DIAGCAT_CLI) + " " + args + " 2>&1";
    FILE*       p   = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string          out;
    std::array<char, 512> buf;
    while (auto n = std::fread(buf.data(), 1, buf.size(), p)) {
      out.append(buf.data(), n);
    }
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
  }
}  // namespace

TEST_CASE("eval", "[cli]") {
  auto r = run("eval --cat P \"e[1,2] ; e[1,2]\"");
  CHECK(r.code == 0);
  CHECK(r.out == "P[2,2]{ {1} {2,-2} {-1} }\nfloating: 1\n");
  auto t = run("eval --cat PT-tensor \"X ; V\"");
  CHECK(t.code == 0);
  CHECK(t.out.rfind("F[2,1]{1:1 2:1}", 0) == 0);
  // The printed diagram parses back.
  auto c = run("compose \"P[2,2]{ {1} {2,-2} {-1} }\" \"P[2,2]{ {1} {2,-2} {-1} }\"");
  CHECK(c.code == 0);
  CHECK(c.out.rfind("P[2,2]{ {1} {2,-2} {-1} }", 0) == 0);
}

TEST_CASE("count and enumerate", "[cli]") {
  CHECK(run("count --cat TL -m 0 -n 6").out == "5\n");
  CHECK(run("count --cat P -m 2 -n 2").out == "15\n");
  auto e = run("enumerate --cat B -m 1 -n 1");
  CHECK(e.code == 0);
  CHECK(e.out == "P[1,1]{ {1,-1} }\n");
}

TEST_CASE("tensor and parse", "[cli]") {
  auto t = run("tensor \"F[1,1]{1:1}\" \"F[1,0]{}\"");
  CHECK(t.code == 0);
  CHECK(t.out == "F[2,1]{1:1}\n");
  auto p = run("parse --cat P-tensor \"X   ;D\"");
  CHECK(p.code == 0);
  CHECK(p.out.find("X ; D") != std::string::npos);
}

TEST_CASE("verify exit codes", "[cli]") {
  auto ok = run("verify soundness --presentation B-tensor --n-max 5 --format lines");
  CHECK(ok.code == 0);
  CHECK(ok.out.rfind("PASS soundness", 0) == 0);
  auto budget = run("verify joinability --cat TL-tensor -m 1 -n 1 --size 4 "
                    "--depth 0 --format lines");
  CHECK(budget.code == 0);
  CHECK(budget.out.rfind("BUDGET joinability", 0) == 0);
  auto fail = run("verify surjectivity --cat P-tensor -m 2 -n 2 --size 1 "
                  "--format lines");
  CHECK(fail.code == 1);
  CHECK(fail.out.rfind("FAIL surjectivity", 0) == 0);
  CHECK(fail.out.find("counterexample: ") != std::string::npos);
}

TEST_CASE("usage and input errors", "[cli]") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("eval --cat Q X").code == 2);
  CHECK(run("eval --cat P-tensor \"X ;\"").code == 2);
  CHECK(run("count --cat P -m 1").code == 2);
}

TEST_CASE("normalize", "[cli]") {
  auto n = run("normalize --cat P \"l[1] ; s[1,2] ; r[1]\"");
  CHECK(n.code == 0);
  CHECK_FALSE(n.out.empty());
  auto tr = run("normalize --cat P --trace \"l[0] ; e[1,1] ; r[0]\"");
  CHECK(tr.code == 0);
  CHECK(tr.out.size() > n.out.size());
}
