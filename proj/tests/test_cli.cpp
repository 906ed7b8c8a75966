#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "tresyn/membership.hpp"
#include "tresyn/timed_word.hpp"
#include "tresyn/tre.hpp"

using namespace tresyn;

namespace {

const std::string kCli = TRESYN_CLI_PATH;

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::filesystem::path scratch_dir() {
    const auto dir = std::filesystem::temp_directory_path() /
                     ("tresyn_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir;
}

/* Run the CLI through the shell, capturing exit code and both streams.
 * The default prefix pins the solver so the suite is hermetic even when the
 * ambient environment exports TRESYN_SOLVER; tests that exercise the
 * environment hook pass their own prefix. */
Run run_cli(const std::string& args, const std::string& env_prefix = "TRESYN_SOLVER=builtin ") {
    static int counter = 0;
    const auto dir = scratch_dir();
    const auto out_path = dir / ("out_" + std::to_string(counter) + ".txt");
    const auto err_path = dir / ("err_" + std::to_string(counter) + ".txt");
    ++counter;
    const std::string cmd = env_prefix + kCli + " " + args + " > " + out_path.string() +
                            " 2> " + err_path.string();
    const int status = std::system(cmd.c_str());
    Run r;
    if (status != -1 && WIFEXITED(status)) r.code = WEXITSTATUS(status);
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::filesystem::remove(out_path);
    std::filesystem::remove(err_path);
    return r;
}

std::string write_words(const std::string& name, const std::string& content) {
    const auto path = scratch_dir() / name;
    std::ofstream(path) << content;
    return path.string();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

// ===========================================================================
// check
// ===========================================================================

TEST_CASE("check answers accept and reject with matching exit codes") {
    const Run yes = run_cli("check --tre 'a[0,2]' --word 'a@1.5'");
    CHECK(yes.code == 0);
    CHECK(yes.out == "accept\n");

    const Run no = run_cli("check --tre 'a[0,2]' --word 'a@2.5'");
    CHECK(no.code == 1);
    CHECK(no.out == "reject\n");
}

TEST_CASE("check --verbose lists one line per satisfied derivation") {
    const Run r = run_cli("check --tre '(a | (a b)) (b*)' --word 'a@1.5 b@2 b@3' --verbose");
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);  // accept + two distinct derivations
    CHECK(lines[0] == "accept");
    CHECK(lines[1] != lines[2]);
}

TEST_CASE("check rejects malformed input with exit 2") {
    const Run bad_tre = run_cli("check --tre 'a[' --word 'a@1'");
    CHECK(bad_tre.code == 2);
    CHECK(bad_tre.err.find("error:") != std::string::npos);

    const Run bad_word = run_cli("check --tre 'a' --word 'a@'");
    CHECK(bad_word.code == 2);
}

// ===========================================================================
// synth
// ===========================================================================

TEST_CASE("synth finds the textbook answer") {
    const std::string pos = write_words("basic.pos", "a@1.5\n");
    const std::string neg = write_words("basic.neg", "a@2.5\n");
    const Run r = run_cli("synth --pos " + pos + " --neg " + neg);
    CHECK(r.code == 0);
    CHECK(r.out == "a[0,2]\n");
}

TEST_CASE("synth --json appends the full report") {
    const std::string pos = write_words("json.pos", "a@1.5\n");
    const std::string neg = write_words("json.neg", "a@2.5\n");
    const Run r = run_cli("synth --json --pos " + pos + " --neg " + neg);
    REQUIRE(r.code == 0);
    const auto cut = r.out.find('\n');
    REQUIRE(cut != std::string::npos);
    CHECK(r.out.substr(0, cut) == "a[0,2]");
    const auto j = nlohmann::json::parse(r.out.substr(cut + 1));
    CHECK(j["outcome"] == "found");
    CHECK(j["tre"] == "a[0,2]");
}

TEST_CASE("synth reports unsolvable instances with the witness") {
    const std::string pos = write_words("obs.pos", "a@1.5 a@2.6 a@1.5\n");
    const std::string neg = write_words("obs.neg", "a@1.2 a@2.6 a@1.5\na@1.5 a@2.6 a@1.2\n");
    const Run r = run_cli("synth --pos " + pos + " --neg " + neg);
    CHECK(r.code == 1);
    CHECK(r.out == "no solution; obscured witness: a@1.5 a@2.6 a@1.5\n");
}

TEST_CASE("synth respects the length cap") {
    const std::string pos = write_words("cap.pos", "a@1 b@2\n");
    const std::string neg = write_words("cap.neg", "");
    const Run r = run_cli("synth --max-len 1 --pos " + pos + " --neg " + neg);
    CHECK(r.code == 3);
    CHECK(r.out == "length_capped\n");
}

TEST_CASE("synth strategy and solver flags are validated") {
    const std::string pos = write_words("flags.pos", "a@1\n");
    const std::string neg = write_words("flags.neg", "");
    CHECK(run_cli("synth --strategy sideways --pos " + pos + " --neg " + neg).code == 2);
    CHECK(run_cli("synth --solver gibberish --pos " + pos + " --neg " + neg).code == 2);
    CHECK(run_cli("synth --solver smtlib: --pos " + pos + " --neg " + neg).code == 2);
    CHECK(run_cli("synth --pos /nonexistent.pos --neg " + neg).code == 2);
}

TEST_CASE("the TRESYN_SOLVER environment variable supplies the default solver") {
    const std::string pos = write_words("env.pos", "a@1.5\n");
    const std::string neg = write_words("env.neg", "a@2.5\n");

    const Run bogus =
        run_cli("synth --pos " + pos + " --neg " + neg, "TRESYN_SOLVER=gibberish ");
    CHECK(bogus.code == 2);

    // a command that answers nothing is a solver failure, not an input error
    const Run broken =
        run_cli("synth --pos " + pos + " --neg " + neg, "TRESYN_SOLVER=smtlib:true ");
    CHECK(broken.code == 3);

    // an explicit flag beats the environment
    const Run overridden = run_cli("synth --solver builtin --pos " + pos + " --neg " + neg,
                                   "TRESYN_SOLVER=gibberish ");
    CHECK(overridden.code == 0);
    CHECK(overridden.out == "a[0,2]\n");
}

// ===========================================================================
// decide and naive
// ===========================================================================

TEST_CASE("decide classifies instances") {
    const std::string pos = write_words("dec.pos", "a@1.5\n");
    const std::string neg = write_words("dec.neg", "a@2.5\n");
    const Run ok = run_cli("decide --pos " + pos + " --neg " + neg);
    CHECK(ok.code == 0);
    CHECK(ok.out == "solvable\n");

    const std::string opos = write_words("odec.pos", "a@1.5 a@2.6 a@1.5\n");
    const std::string oneg = write_words("odec.neg", "a@1.2 a@2.6 a@1.5\na@1.5 a@2.6 a@1.2\n");
    const Run bad = run_cli("decide --pos " + opos + " --neg " + oneg);
    CHECK(bad.code == 1);
    CHECK(bad.out == "unsolvable; obscured witness: a@1.5 a@2.6 a@1.5\n");
}

TEST_CASE("naive prints the fallback disjunction") {
    const std::string pos = write_words("nv.pos", "a@1.2 a@2.6 a@1.5\n");
    const std::string neg = write_words("nv.neg", "a@1.5 a@2.6 a@1.5\na@1.5 a@2.6 a@1.2\n");
    const Run r = run_cli("naive --pos " + pos + " --neg " + neg);
    CHECK(r.code == 0);
    CHECK(r.out == "((a a)(3,4)) a\n");

    // the printed expression really separates the two files
    const TrePtr t = parse_tre(lines_of(r.out)[0]);
    CHECK(membership(*t, parse_timed_word("a@1.2 a@2.6 a@1.5")));
    CHECK_FALSE(membership(*t, parse_timed_word("a@1.5 a@2.6 a@1.5")));
    CHECK_FALSE(membership(*t, parse_timed_word("a@1.5 a@2.6 a@1.2")));

    const std::string opos = write_words("nvo.pos", "a@1.5 a@2.6 a@1.5\n");
    const std::string oneg = write_words("nvo.neg", "a@1.2 a@2.6 a@1.5\na@1.5 a@2.6 a@1.2\n");
    const Run bad = run_cli("naive --pos " + opos + " --neg " + oneg);
    CHECK(bad.code == 1);
    CHECK(bad.out.find("unsolvable") == 0);
}

// ===========================================================================
// sample
// ===========================================================================

TEST_CASE("sample writes labeled files plus a manifest") {
    const std::string prefix = (scratch_dir() / "drawn").string();
    const Run r = run_cli("sample --tre '(a[1,3]) (b[2,4])' -n 5 --neg 3 --seed 4 --out " + prefix);
    CHECK(r.code == 0);
    CHECK(r.out == "wrote 5 positive and 3 negative words to " + prefix + ".{pos,neg}\n");

    const TrePtr target = parse_tre("(a[1,3]) (b[2,4])");
    const auto pos = read_word_file(prefix + ".pos");
    const auto neg = read_word_file(prefix + ".neg");
    REQUIRE(pos.size() == 5);
    REQUIRE(neg.size() == 3);
    for (const auto& w : pos) CHECK(membership(*target, w));
    for (const auto& w : neg) CHECK_FALSE(membership(*target, w));

    const auto manifest = nlohmann::json::parse(slurp(prefix + ".manifest.json"));
    CHECK(manifest["target"] == "(a[1,3]) (b[2,4])");
    CHECK(manifest["seed"] == 4);
    CHECK(manifest["positives"] == 5);
    CHECK(manifest["negatives"] == 3);
}

TEST_CASE("sample runs are reproducible per seed") {
    const std::string p1 = (scratch_dir() / "rep1").string();
    const std::string p2 = (scratch_dir() / "rep2").string();
    CHECK(run_cli("sample --tre 'a[0,2] (b*)' -n 6 --neg 2 --seed 11 --out " + p1).code == 0);
    CHECK(run_cli("sample --tre 'a[0,2] (b*)' -n 6 --neg 2 --seed 11 --out " + p2).code == 0);
    CHECK(slurp(p1 + ".pos") == slurp(p2 + ".pos"));
    CHECK(slurp(p1 + ".neg") == slurp(p2 + ".neg"));
}

TEST_CASE("sample reports exhaustion without losing the partial files") {
    const std::string prefix = (scratch_dir() / "short").string();
    const Run r = run_cli("sample --tre 'a*' -n 2 --neg 2 --attempts 50 --out " + prefix);
    CHECK(r.code == 3);
    CHECK(r.err.find("attempts exhausted") != std::string::npos);
    CHECK(read_word_file(prefix + ".pos").size() == 2);
    CHECK(read_word_file(prefix + ".neg").empty());
}

TEST_CASE("sample validates the delay grid") {
    const std::string prefix = (scratch_dir() / "grid").string();
    const Run r = run_cli("sample --tre 'a' -n 1 --grid 3 --out " + prefix);
    CHECK(r.code == 2);
    CHECK(r.err.find("delay_grid") != std::string::npos);
}

// ===========================================================================
// top level
// ===========================================================================

TEST_CASE("top-level argument handling") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("warble").code == 2);
    const Run help = run_cli("--help");
    CHECK(help.code == 0);
    for (const char* sub : {"synth", "check", "decide", "naive", "sample"})
        CHECK(help.out.find(sub) != std::string::npos);
}
