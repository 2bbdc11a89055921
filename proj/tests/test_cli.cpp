// End-to-end checks of the folia binary: spawns the real executable, so the
// whole stack (CLI -> C API -> core) is covered, including exit codes.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#ifndef FOLIA_CLI_PATH
#error "FOLIA_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(FOLIA_CLI_PATH) + " " + args + " 2>/dev/null";
  std::FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 512> buf;
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string(CLI_TEST_TMPDIR) + "/" + name;
  std::ofstream f(path, std::ios::binary);
  f << content;
  return path;
}

std::string chomp(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

}  // namespace

TEST_CASE("group --normalize prints Z for the constant Z-cycle") {
  std::string f = write_temp("zcycle.strip", "(strip (int (cyc _)))");
  RunResult r = run("group --normalize " + f);
  CHECK(r.exit_code == 0);
  CHECK(chomp(r.out) == "Z");
}

TEST_CASE("eta") {
  std::string f = write_temp("fin2.strip", "(strip (fin _ _))");
  RunResult r = run("eta " + f);
  CHECK(r.exit_code == 0);
  CHECK(chomp(r.out) == "trivial");

  std::string g = write_temp("per2.strip", "(strip (int (cyc (strip (fin)) _)))");
  r = run("eta " + g);
  CHECK(chomp(r.out) == "2Z");
  r = run("--json eta " + g);
  CHECK(chomp(r.out) == R"({"eta":{"period":2}})");
}

TEST_CASE("group --normalize --height reports the printed representation") {
  std::string f =
      write_temp("nested.strip", "(strip (int (cyc (strip (int (cyc _))) _)))");
  RunResult r = run("group --normalize --height " + f);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "(wr Z)\nheight: 2\n");
  // The raw computed representation spells the blocks out and is taller.
  r = run("group --height " + f);
  CHECK(r.out == "(wr (x 1 Z))\nheight: 3\n");
}

TEST_CASE("validate, canon, reduce, diameter") {
  std::string f = write_temp("chain.strip", "(strip (fin (strip (fin (strip (fin))))))");
  CHECK(run("validate " + f).out == "valid\n");
  CHECK(run("reduce " + f).out == "(strip (fin))\n");
  CHECK(run("diameter " + f).out == "2\n");

  std::string g = write_temp("rot.strip", "(strip (int (cyc (strip (fin)) _)))");
  CHECK(run("canon " + g).out == "(strip (int (cyc _ (strip (fin)))))\n");
}

TEST_CASE("realize then group round trips at the CLI level") {
  std::string f = write_temp("expr.group", "(x Z (wr (x 1 1)))");
  RunResult surface = run("realize " + f);
  CHECK(surface.exit_code == 0);
  std::string sfile = write_temp("realized.strip", surface.out);
  RunResult back = run("group --normalize " + sfile);
  CHECK(back.exit_code == 0);
  CHECK(chomp(back.out) == "(x Z^2)");

  // Feeding the normalized output through realize/group again is stable.
  std::string nfile = write_temp("nf.group", back.out);
  RunResult surface2 = run("realize " + nfile);
  std::string sfile2 = write_temp("realized2.strip", surface2.out);
  CHECK(run("group --normalize " + sfile2).out == back.out);
}

TEST_CASE("elem mul and inv") {
  std::string shape = write_temp("shape.group", "(wr Z)");
  RunResult r = run("elem mul " + shape + " \"(w ((0 (w () 3))) 1)\" \"(w ((1 (w () 5))) 2)\"");
  CHECK(r.exit_code == 0);
  CHECK(chomp(r.out) == "(w ((-2 (w () 3)) (1 (w () 5))) 3)");

  r = run("elem inv " + shape + " \"(w ((0 (w () 3))) 1)\"");
  CHECK(chomp(r.out) == "(w ((1 (w () -3))) -1)");

  r = run("elem mul " + shape + " e e");
  CHECK(chomp(r.out) == "e");
}

TEST_CASE("render writes SVG with the expected rectangle count") {
  std::string f = write_temp("render.strip", "(strip (int (cyc (strip (fin)))))");
  std::string out = std::string(CLI_TEST_TMPDIR) + "/out.svg";
  RunResult r = run("render " + f + " -o " + out + " --repeat 3 --depth 4");
  CHECK(r.exit_code == 0);
  std::ifstream svg(out);
  std::string content((std::istreambuf_iterator<char>(svg)), std::istreambuf_iterator<char>());
  int rects = 0;
  for (std::size_t p = content.find("<rect"); p != std::string::npos;
       p = content.find("<rect", p + 1))
    ++rects;
  CHECK(rects == 4);
}

TEST_CASE("json output mode") {
  std::string f = write_temp("triv.strip", "(strip (fin))");
  CHECK(run("--json canon " + f).out == R"({"strip":{"fin":[]},"v":"folia/1"})" "\n");
  CHECK(run("--json diameter " + f).out == R"({"diameter":0})" "\n");
  CHECK(run("--json validate " + f).out == R"({"valid":true})" "\n");

  // JSON files are accepted as input.
  std::string jf = write_temp("triv.json", R"({"strip":{"fin":[]},"v":"folia/1"})");
  CHECK(run("diameter " + jf).out == "0\n");
}

TEST_CASE("exit codes: 2 for parse and usage errors, 1 for domain errors") {
  std::string bad = write_temp("bad.strip", "(strip (int (cyc)))");
  CHECK(run("validate " + bad).exit_code == 2);

  std::string shape = write_temp("z.group", "Z");
  CHECK(run("elem inv " + shape + " \"(p (1 e))\"").exit_code == 1);

  CHECK(run("nonsense-subcommand").exit_code == 2);
  CHECK(run("diameter /no/such/file").exit_code == 2);

  std::string dup = write_temp("dup.json",
                               R"({"strip":{"int":{"sup":[[1,{"strip":{"fin":[]}}],)"
                               R"([1,{"strip":{"fin":[]}}]]}},"v":"folia/1"})");
  RunResult r = run("validate " + dup);
  CHECK(r.exit_code == 1);
  CHECK(chomp(r.out) == "invalid");
}

TEST_CASE("selftest is deterministic for a fixed seed") {
  RunResult a = run("selftest --seed 5 --iters 10");
  RunResult b = run("selftest --seed 5 --iters 10");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("selftest passed") != std::string::npos);
}
