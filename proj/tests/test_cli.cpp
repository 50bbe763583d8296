#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>
#include <sys/wait.h>

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

/// Run the tool with the given argument string, capturing both streams.
RunResult run_cli(const std::string& args) {
  static int serial = 0;
  fs::path errfile = fs::temp_directory_path() /
                     ("tanglerep-stderr-" + std::to_string(++serial) + ".txt");
  std::string cmd =
      std::string(CLI_BIN_PATH) + " " + args + " 2>" + errfile.string();
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  RunResult r;
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe))
    r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream ef(errfile);
  std::stringstream ss;
  ss << ef.rdbuf();
  r.err = ss.str();
  fs::remove(errfile);
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

/// Fresh scratch directory, removed on destruction.
struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("tanglerep-cli-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

} // namespace

TEST_CASE("eval prints small results as dense bracketed rows") {
  RunResult loop = run_cli("eval --m 1 \"A ; U\"");
  CHECK(loop.code == 0);
  CHECK(contains(loop.out, "1x1 matrix over generic, 1 nonzero entries"));
  CHECK(contains(loop.out, "[-q^2-q^-2]"));

  RunResult ident = run_cli("eval --m 1 I");
  CHECK(ident.code == 0);
  CHECK(contains(ident.out, "2x2 matrix over generic"));
  CHECK(contains(ident.out, "[1, 0]"));
  CHECK(contains(ident.out, "[0, 1]"));
}

TEST_CASE("eval prints large results as sparse triples") {
  RunResult r = run_cli("eval --m 2 \"X ; Xi\"");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "16x16 matrix over generic, 16 nonzero entries"));
  CHECK(contains(r.out, "0 0 1\n"));
  CHECK(contains(r.out, "15 15 1\n"));
}

TEST_CASE("eval reports parse and arity errors with positions, exit 2") {
  RunResult trailing = run_cli("eval --m 1 \"A ;\"");
  CHECK(trailing.code == 2);
  CHECK(contains(trailing.err, "position"));

  RunResult arity = run_cli("eval --m 1 \"A ; I\"");
  CHECK(arity.code == 2);
  CHECK(contains(arity.err, "arity mismatch"));
  CHECK(contains(arity.err, "position 2"));
}

TEST_CASE("bad invocations exit 2, help exits 0") {
  CHECK(run_cli("dims --bogus").code == 2);
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("check --m 1 --n 1").code == 2);   // degree too small
  CHECK(run_cli("duality --m 1 --n 2 --f 3").code == 2);
  CHECK(run_cli("dims --m 1 --n 2 --grid 1..1,2..2").code == 2);
  CHECK(run_cli("dims --grid nonsense").code == 2);
  CHECK(run_cli("dims --m 1 --n 2 --field modp:notaprime").code == 2);
}

TEST_CASE("generic size guard refuses oversized jobs unless forced") {
  RunResult r = run_cli("dims --m 2 --n 6");
  CHECK(r.code == 2);
  CHECK(contains(r.err, "--force-generic"));
  CHECK(contains(r.err, "modp:P"));

  // The same job over a specialized field is not blocked by the guard.
  RunResult allowed = run_cli("duality --m 1 --n 2 --field modp:5");
  CHECK(allowed.code == 0);
}

TEST_CASE("identical configurations produce byte-identical stdout") {
  std::string args = "dims --m 1 --n 2 --field generic --field modp:5 --out json";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
  // Timing notes live on stderr, never in the payload.
  CHECK(!contains(a.out, "timing"));
  CHECK(contains(a.err, "timing"));
}

TEST_CASE("duality JSON carries the stable report keys in order") {
  RunResult r = run_cli("duality --m 1 --n 2 --out json");
  REQUIRE(r.code == 0);
  ojson doc = ojson::parse(r.out);
  REQUIRE(doc.contains("jobs"));
  REQUIRE(doc["jobs"].size() == 1);
  const ojson& job = doc["jobs"][0];
  std::vector<std::string> keys;
  for (auto it = job.begin(); it != job.end(); ++it) keys.push_back(it.key());
  std::vector<std::string> expected = {
      "m",          "n",
      "f",          "field",
      "dim_total",  "dim_algebra",
      "dim_ideal",  "dim_W",
      "dim_quotient", "dim_HT",
      "dim_image_phi_f", "dim_commutant_quotient",
      "surjective", "truncation_match",
      "hom_vanishing"};
  CHECK(keys == expected);
  CHECK(job["m"] == 1);
  CHECK(job["n"] == 2);
  CHECK(job["f"] == 1);
  CHECK(job["field"] == "generic");
  CHECK(job["dim_total"] == 4);
  CHECK(job["dim_algebra"] == 2);
  CHECK(job["dim_ideal"] == 1);
  CHECK(job["dim_W"] == 1);
  CHECK(job["dim_quotient"] == 3);
  CHECK(job["dim_HT"] == 1);
  CHECK(job["dim_image_phi_f"] == 1);
  CHECK(job["dim_commutant_quotient"] == 1);
  CHECK(job["surjective"] == true);
  CHECK(job["truncation_match"] == true);
  CHECK(job["hom_vanishing"] == true);
}

TEST_CASE("CSV output mirrors the JSON keys") {
  RunResult dims = run_cli("dims --m 1 --n 2 --out csv");
  CHECK(dims.code == 0);
  CHECK(contains(dims.out,
                 "m,n,f,field,dim_total,dim_algebra,dim_ideal,dim_W,"
                 "dim_quotient,dim_HT\n"));
  CHECK(contains(dims.out, "1,2,0,generic,4,2,2,4,0,3\n"));
  CHECK(contains(dims.out, "1,2,1,generic,4,2,1,1,3,1\n"));

  RunResult duality = run_cli("duality --m 1 --n 2 --out csv");
  CHECK(duality.code == 0);
  CHECK(contains(duality.out,
                 "m,n,f,field,dim_total,dim_algebra,dim_ideal,dim_W,"
                 "dim_quotient,dim_HT,dim_image_phi_f,"
                 "dim_commutant_quotient,surjective,truncation_match,"
                 "hom_vanishing\n"));
  CHECK(contains(duality.out, "1,2,1,generic,4,2,1,1,3,1,1,1,true,true,true\n"));
}

TEST_CASE("check runs relation suites and reports per-point outcomes") {
  RunResult r = run_cli("check --suite all --m 1 --n 2 --field modp:5");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "relations"));
  CHECK(contains(r.out, "tangle"));
  CHECK(contains(r.out, "uq-commute"));
  CHECK(contains(r.out, "modp:5"));

  RunResult grid = run_cli("check --suite relations --grid 1..1,2..3 --out json");
  CHECK(grid.code == 0);
  ojson doc = ojson::parse(grid.out);
  REQUIRE(doc["suites"].size() == 2);
  for (const auto& suite : doc["suites"]) CHECK(suite["all_pass"] == true);
}

TEST_CASE("dims agrees across coefficient fields and says so quietly") {
  RunResult r = run_cli(
      "dims --m 1 --n 3 --field generic --field modp:7 --field zeta:2");
  CHECK(r.code == 0);
  CHECK(!contains(r.out, "mismatch"));
}

TEST_CASE("cache stores on first run, hits on second, survives corruption") {
  TempDir dir;
  std::string args =
      "duality --m 1 --n 3 --field modp:5 --out json --cache " +
      dir.path.string();

  RunResult first = run_cli(args);
  CHECK(first.code == 0);
  CHECK(contains(first.err, "cache: stored algebra-closure"));

  RunResult second = run_cli(args);
  CHECK(second.code == 0);
  CHECK(contains(second.err, "cache: hit algebra-closure"));
  CHECK(second.out == first.out);

  // Corrupt the stored entry: the run warns, recomputes, repairs, exits 0.
  int entries = 0;
  fs::path entry;
  for (const auto& e : fs::directory_iterator(dir.path)) {
    ++entries;
    entry = e.path();
  }
  REQUIRE(entries == 1);
  std::ofstream(entry) << "not a cache file\n";
  RunResult third = run_cli(args);
  CHECK(third.code == 0);
  CHECK(contains(third.err, "discarding cache entry"));
  CHECK(contains(third.err, "cache: stored algebra-closure"));
  CHECK(third.out == first.out);
  RunResult fourth = run_cli(args);
  CHECK(contains(fourth.err, "cache: hit algebra-closure"));

  // A different field is a different key, hence a second entry.
  RunResult other = run_cli(
      "duality --m 1 --n 3 --field modp:7 --out json --cache " +
      dir.path.string());
  CHECK(other.code == 0);
  CHECK(contains(other.err, "cache: stored algebra-closure"));
  int after = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir.path))
    ++after;
  CHECK(after == 2);
}
