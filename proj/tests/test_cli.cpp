#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

// Runs the installed binary with stderr silenced; tests assert on exit codes
// and stdout only.
CliRun run_cli(const std::string& args) {
    const std::string cmd = std::string(IPENT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliRun result;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
        result.out.append(buf, n);
    }
    const int status = pclose(pipe);
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path p = fs::temp_directory_path() /
                     ("ipent-cli-" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

std::string quoted(const fs::path& p) { return "\"" + p.string() + "\""; }

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    REQUIRE(file.good());
    file << text;
}

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

// The printed entropy may sit an ulp either side of 1.
bool entropy_prints_one(const std::string& out) {
    return contains(out, "\"entropy\":1") ||
           contains(out, "\"entropy\":0.9999999999999");
}

fs::path singlet_file() {
    static const fs::path path = [] {
        const fs::path p = scratch_dir() / "singlet.json";
        write_text(p,
                   "{\"dim\": 2, \"statistics\": \"fermion\", \"matrix\": "
                   "[[[0,0],[0.70710678118654746,0]],"
                   "[[-0.70710678118654746,0],[0,0]]]}\n");
        return p;
    }();
    return path;
}

fs::path unequal_boson_file() {
    static const fs::path path = [] {
        const fs::path p = scratch_dir() / "unequal.json";
        write_text(p,
                   "{\"dim\": 2, \"statistics\": \"boson\", \"matrix\": "
                   "[[[0.89442719099991586,0],[0,0]],"
                   "[[0,0],[0.44721359549995793,0]]]}\n");
        return p;
    }();
    return path;
}

}  // namespace

TEST_CASE("classify reports the singlet as non-entangled") {
    const CliRun run = run_cli("classify " + quoted(singlet_file()));
    CHECK(run.code == 0);
    CHECK(contains(run.out, "\"command\":\"classify\""));
    CHECK(contains(run.out, "\"statistics\":\"fermion\""));
    CHECK(contains(run.out, "\"number\":1"));
    CHECK(entropy_prints_one(run.out));
    CHECK(contains(run.out, "\"verdict\":\"non-entangled\""));
    CHECK(contains(run.out, "\"rule\":\"fermion-slater-1\""));
    CHECK(contains(run.out, "\"factorizing_pair\""));
}

TEST_CASE("classify flags an entangled boson with the unequal-pair rule") {
    const CliRun run = run_cli("classify " + quoted(unequal_boson_file()));
    CHECK(run.code == 0);
    CHECK(contains(run.out, "\"verdict\":\"entangled\""));
    CHECK(contains(run.out, "\"rule\":\"boson-schmidt-2-unequal\""));
    CHECK(contains(run.out, "\"number\":2"));
    CHECK(contains(run.out, "\"overlap\":0.33333333333333"));
}

TEST_CASE("malformed input exits with the parse failure code") {
    const fs::path bad = scratch_dir() / "garbage.json";
    write_text(bad, "this is not json {\n");
    const CliRun run = run_cli("classify " + quoted(bad));
    CHECK(run.code == 2);
    CHECK(run.out.empty());
}

TEST_CASE("missing file exits with the parse failure code") {
    const CliRun run = run_cli("classify " + quoted(scratch_dir() / "absent.json"));
    CHECK(run.code == 2);
}

TEST_CASE("symmetry mismatched against the statistics tag is rejected") {
    const fs::path bad = scratch_dir() / "wrongsym.json";
    write_text(bad,
               "{\"dim\": 2, \"statistics\": \"fermion\", \"matrix\": "
               "[[[0,0],[0.70710678118654746,0]],"
               "[[0.70710678118654746,0],[0,0]]]}\n");
    const CliRun run = run_cli("classify " + quoted(bad));
    CHECK(run.code == 3);
}

TEST_CASE("make refuses parallel factors with the invariant code") {
    const fs::path out = scratch_dir() / "parallel.json";
    const CliRun run = run_cli("make --statistics fermion --phi 1,0 --chi 1,0 --out " +
                               quoted(out));
    CHECK(run.code == 3);
}

TEST_CASE("make writes a loadable state and classify agrees") {
    const fs::path out = scratch_dir() / "made.json";
    const CliRun make = run_cli("make --statistics fermion --phi 1,0 --chi 0,1 --out " +
                                quoted(out));
    CHECK(make.code == 0);
    CHECK(contains(make.out, "\"command\":\"make\""));
    CHECK(contains(make.out, "\"output_digest\""));

    const CliRun classify = run_cli("classify " + quoted(out));
    CHECK(classify.code == 0);
    CHECK(contains(classify.out, "\"verdict\":\"non-entangled\""));
    CHECK(contains(classify.out, "\"rule\":\"fermion-slater-1\""));
}

TEST_CASE("make accepts complex component literals") {
    const fs::path out = scratch_dir() / "made_complex.json";
    const CliRun make = run_cli(
        "make --statistics boson --phi 1,i --chi \"1,-i\" --out " + quoted(out));
    CHECK(make.code == 0);
    const CliRun classify = run_cli("classify " + quoted(out));
    CHECK(classify.code == 0);
    CHECK(contains(classify.out, "\"statistics\":\"boson\""));
}

TEST_CASE("random with the same seed writes byte-identical files") {
    const fs::path a = scratch_dir() / "rand_a.json";
    const fs::path b = scratch_dir() / "rand_b.json";
    const CliRun first =
        run_cli("random --statistics boson --dim 3 --seed 9 --out " + quoted(a));
    const CliRun second =
        run_cli("random --statistics boson --dim 3 --seed 9 --out " + quoted(b));
    CHECK(first.code == 0);
    CHECK(second.code == 0);
    CHECK(read_text(a) == read_text(b));

    const fs::path c = scratch_dir() / "rand_c.json";
    const CliRun third =
        run_cli("random --statistics boson --dim 3 --seed 10 --out " + quoted(c));
    CHECK(third.code == 0);
    CHECK(read_text(a) != read_text(c));
}

TEST_CASE("entropy of the singlet prints one") {
    const CliRun run = run_cli("entropy " + quoted(singlet_file()));
    CHECK(run.code == 0);
    CHECK(contains(run.out, "\"command\":\"entropy\""));
    CHECK(entropy_prints_one(run.out));
}

TEST_CASE("decompose prints the schmidt coefficients") {
    const CliRun run = run_cli("decompose " + quoted(unequal_boson_file()));
    CHECK(run.code == 0);
    CHECK(contains(run.out, "\"kind\":\"schmidt\""));
    CHECK(contains(run.out, "\"number\":2"));
    CHECK(contains(run.out, "0.894427190999915"));
    CHECK(contains(run.out, "0.447213595499957"));
}

TEST_CASE("decompose on a fermion reports slater coefficients") {
    const CliRun run = run_cli("decompose " + quoted(singlet_file()));
    CHECK(run.code == 0);
    CHECK(contains(run.out, "\"kind\":\"slater\""));
    CHECK(contains(run.out, "\"number\":1"));
    const bool coefficient_is_one =
        contains(run.out, "\"coefficients\":[0.9999999999999") ||
        contains(run.out, "\"coefficients\":[1");
    CHECK(coefficient_is_one);
}

TEST_CASE("properties finds the attaining projector on the singlet") {
    const CliRun run = run_cli("properties " + quoted(singlet_file()));
    CHECK(run.code == 0);
    CHECK(contains(run.out, "\"attained\":true"));
    CHECK(contains(run.out, "\"restarts_used\":0"));
}

TEST_CASE("verify passes all oracle checks on reference states") {
    const CliRun fermion =
        run_cli("verify --samples 200 " + quoted(singlet_file()));
    CHECK(fermion.code == 0);
    CHECK(contains(fermion.out, "\"all_passed\":true"));

    const CliRun boson =
        run_cli("verify --samples 200 " + quoted(unequal_boson_file()));
    CHECK(boson.code == 0);
    CHECK(contains(boson.out, "\"all_passed\":true"));
}

TEST_CASE("batch classification emits one line per file in path order") {
    const fs::path dir = scratch_dir() / "batch";
    fs::create_directories(dir);
    write_text(dir / "b_unequal.json", read_text(unequal_boson_file()));
    write_text(dir / "a_singlet.json", read_text(singlet_file()));

    const CliRun run = run_cli("classify --dir " + quoted(dir));
    CHECK(run.code == 0);

    std::vector<std::string> lines;
    std::istringstream stream(run.out);
    std::string line;
    while (std::getline(stream, line)) {
        if (!line.empty()) lines.push_back(line);
    }
    REQUIRE(lines.size() == 2);
    CHECK(contains(lines[0], "a_singlet.json"));
    CHECK(contains(lines[0], "\"rule\":\"fermion-slater-1\""));
    CHECK(contains(lines[1], "b_unequal.json"));
    CHECK(contains(lines[1], "\"rule\":\"boson-schmidt-2-unequal\""));
}

TEST_CASE("usage problems exit with the usage code") {
    CHECK(run_cli("").code == 1);
    CHECK(run_cli("classify").code == 1);
    CHECK(run_cli("no-such-command").code == 1);
    CHECK(run_cli("random --statistics boson --out x.json").code == 1);
}

TEST_CASE("random rejects dimension one with the invariant code") {
    const fs::path out = scratch_dir() / "tiny.json";
    const CliRun run =
        run_cli("random --statistics fermion --dim 1 --out " + quoted(out));
    CHECK(run.code == 3);
}
