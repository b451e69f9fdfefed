#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "qset/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "qset");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  int code = qset::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse subcommand") {
  auto r = run({"parse", "[m:e,m:e*2]"});
  CHECK(r.code == 0);
  CHECK(r.out == "[m:e*3]\nqc=3\n");

  r = run({"parse", "[]"});
  CHECK(r.code == 0);
  CHECK(r.out == "[]\nqc=0\n");

  r = run({"parse", "[m:"});
  CHECK(r.code == 1);
  CHECK(r.err.find("offset 4") != std::string::npos);

  CHECK(run({"parse", "[m:e*0]"}).code == 1);
  CHECK(run({"parse"}).code == 1);
  CHECK(run({"parse", "m:e"}).out == "m:e\n");
}

TEST_CASE("parse --file reads one expression per line") {
  const char* path = "qset_cli_batch.txt";
  {
    std::ofstream f(path);
    f << "[m:e, m:e]\n\n[M:B, M:A]\n";
  }
  auto r = run({"parse", "--file", path});
  CHECK(r.code == 0);
  CHECK(r.out == "[m:e*2]\nqc=2\n[M:A, M:B]\nqc=2\n");
  {
    std::ofstream f(path);
    f << "[m:e]\n[m:e\n";
  }
  r = run({"parse", "--file", path});
  CHECK(r.code == 1);
  CHECK(r.err.find(":2:") != std::string::npos);
  std::remove(path);
  CHECK(run({"parse", "--file", "does/not/exist"}).code == 1);
}

TEST_CASE("eq subcommand") {
  auto r = run({"eq", "[m:e*2]", "[m:e*2]"});
  CHECK(r.code == 0);
  CHECK(r.out == "indist=true\next_eq=true\n");

  r = run({"eq", "m:e", "m:e"});
  CHECK(r.code == 0);
  CHECK(r.out == "indist=true\next_eq=ill-formed\n");

  r = run({"eq", "[m:e]", "[m:e*2]"});
  CHECK(r.code == 0);
  CHECK(r.out == "indist=false\next_eq=false\n");

  r = run({"eq", "--relation", "ext_eq", "m:e", "m:e"});
  CHECK(r.code == 2);
  CHECK(r.out == "ext_eq=ill-formed\n");

  r = run({"eq", "--relation", "indist", "m:e", "m:p"});
  CHECK(r.code == 0);
  CHECK(r.out == "indist=false\n");
}

TEST_CASE("label subcommand") {
  auto r = run({"label", "[m:e*3]"});
  CHECK(r.code == 0);
  CHECK(r.out == "1: [m:e]\n2: [m:e]\n3: [m:e]\nqc(w)=3\n");

  r = run({"label", "[]"});
  CHECK(r.code == 0);
  CHECK(r.out == "qc(w)=0\n");

  CHECK(run({"label", "[m:e,m:p]"}).code == 2);
  CHECK(run({"label", "m:e"}).code == 2);
  CHECK(run({"label", "[m:e"}).code == 1);
}

TEST_CASE("stats subcommand") {
  auto r = run({"stats", "--particles", "2", "--states", "3", "--kind", "be"});
  CHECK(r.code == 0);
  CHECK(r.out == "count=6\n");
  CHECK(run({"stats", "--particles", "3", "--states", "2", "--kind", "fd"}).out == "count=0\n");
  CHECK(run({"stats", "--particles", "2", "--states", "3", "--kind", "mb"}).out == "count=9\n");

  r = run({"stats", "--particles", "2", "--states", "2", "--kind", "mb", "--enumerate"});
  CHECK(r.out == "count=4\n(2,0) weight=1\n(1,1) weight=2\n(0,2) weight=1\n");

  r = run({"stats", "--particles", "2", "--states", "3", "--kind", "fd", "--enumerate"});
  CHECK(r.out == "count=3\n(1,1,0) weight=2\n(1,0,1) weight=2\n(0,1,1) weight=2\n");

  CHECK(run({"stats", "--particles", "20", "--states", "3", "--kind", "be", "--enumerate"}).code == 4);
  CHECK(run({"stats", "--particles", "500", "--states", "3", "--kind", "mb"}).code == 4);
  CHECK(run({"stats", "--particles", "2", "--states", "3", "--kind", "xx"}).code == 1);
  CHECK(run({"stats", "--particles", "2", "--states", "0", "--kind", "be"}).code == 1);
}

TEST_CASE("check subcommand") {
  auto r = run({"check", "--seed", "42", "--cases", "100"});
  CHECK(r.code == 0);
  CHECK(r.out.find("total properties=12 cases=1200 failures=0") != std::string::npos);
  CHECK(run({"check", "--seed", "42", "--cases", "100"}).out == r.out);

  r = run({"check", "--cases", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "total properties=0 cases=0 failures=0\n");
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("every error kind maps to one exit code") {
  using qset::ErrorKind;
  using qset::cli::ExitCode;
  CHECK(qset::cli::exit_code_for(ErrorKind::IllFormedFormula) == ExitCode::IllFormed);
  CHECK(qset::cli::exit_code_for(ErrorKind::NotPure) == ExitCode::IllFormed);
  CHECK(qset::cli::exit_code_for(ErrorKind::Syntax) == ExitCode::Usage);
  CHECK(qset::cli::exit_code_for(ErrorKind::CountZero) == ExitCode::Usage);
  CHECK(qset::cli::exit_code_for(ErrorKind::Overflow) == ExitCode::Scale);
  CHECK(qset::cli::exit_code_for(ErrorKind::ScaleExceeded) == ExitCode::Scale);
}

TEST_CASE("the installed binary uses the same exit codes") {
  auto status = [](const std::string& args) {
    int raw = std::system((std::string(QSET_BINARY) + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status("parse '[m:e*2]'") == 0);
  CHECK(status("parse '[m:'") == 1);
  CHECK(status("eq --relation ext_eq m:e m:e") == 2);
  CHECK(status("stats --particles 13 --states 2 --kind be --enumerate") == 4);
}
