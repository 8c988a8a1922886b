#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "test_util.hpp"

#ifndef DIMERLAB_CLI_PATH
#error "DIMERLAB_CLI_PATH must point at the command-line binary"
#endif

namespace {

struct RunResult {
    int code = -1;
    std::string out, err;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

// Run the CLI through the shell, capturing exit code and both streams.
// `env_prefix` lets a test set environment variables for the child.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    std::string base = "cli_capture_" + std::to_string(counter++);
    std::string out_file = base + ".out", err_file = base + ".err";
    std::string cmd = env_prefix + "\"" DIMERLAB_CLI_PATH "\" " + args + " > " + out_file +
                      " 2> " + err_file;
    int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_file);
    r.err = slurp(err_file);
    std::remove(out_file.c_str());
    std::remove(err_file.c_str());
    return r;
}

std::string fx(const std::string& name) { return "\"" + testutil::fixture_path(name) + "\""; }

std::set<std::string> as_set(const nlohmann::json& arr) {
    std::set<std::string> s;
    for (const auto& v : arr) s.insert(v.get<std::string>());
    return s;
}

}  // namespace

TEST_CASE("validate: exit 0 on good input, 3 with a violation list on bad") {
    auto ok = run_cli("validate " + fx("conifold.quiver"));
    CHECK(ok.code == 0);
    CHECK(ok.out.find("ok: 2 vertices, 4 arrows, 2 faces") != std::string::npos);

    auto bad = run_cli("validate " + fx("broken.quiver"));
    CHECK(bad.code == 3);
    CHECK(bad.out.find("invalid:") != std::string::npos);
    CHECK(bad.out.find("- ") != std::string::npos);
}

TEST_CASE("missing input files and invalid quivers exit 3") {
    auto r = run_cli("certify no_such_file.quiver");
    CHECK(r.code == 3);
    CHECK(r.err.find("error") != std::string::npos);

    auto v = run_cli("matchings " + fx("broken.quiver"));
    CHECK(v.code == 3);
    CHECK(v.err.find("invalid quiver") != std::string::npos);
}

TEST_CASE("cancellative: exit mirrors the verdict") {
    auto c = run_cli("cancellative " + fx("conifold.quiver"));
    CHECK(c.code == 0);
    CHECK(c.out.find("verdict: cancellative") != std::string::npos);

    auto n = run_cli("cancellative " + fx("example1.quiver"));
    CHECK(n.code == 1);
    CHECK(n.out.find("verdict: non-cancellative") != std::string::npos);
    CHECK(n.out.find("witness:") != std::string::npos);
}

TEST_CASE("contract prints the maps and the target") {
    auto r = run_cli("contract " + fx("example1.quiver"));
    CHECK(r.code == 0);
    CHECK(r.out.find("contracted arrows: [4]") != std::string::npos);
    CHECK(r.out.find("tail arrows: [2]") != std::string::npos);
    CHECK(r.out.find("vertices 2") != std::string::npos);
}

TEST_CASE("matchings lists the perfect matchings") {
    auto r = run_cli("matchings " + fx("conifold.quiver"));
    CHECK(r.code == 0);
    CHECK(r.out.find("4 perfect matching(s), 4 simple") != std::string::npos);
}

TEST_CASE("decompose degrades gracefully without tail arrows") {
    auto r = run_cli("decompose " + fx("conifold.quiver"));
    CHECK(r.code == 0);
    CHECK(r.out.find("not applicable") != std::string::npos);

    auto d = run_cli("decompose " + fx("example2.quiver") + " --alias " + fx("xyzw.alias"));
    CHECK(d.code == 0);
    CHECK(d.out.find("xyzw") != std::string::npos);
    CHECK(d.out.find("decomposition verified: yes") != std::string::npos);
}

TEST_CASE("certify: verdict decides the exit code") {
    auto e1 = run_cli("certify " + fx("example1.quiver"));
    CHECK(e1.code == 0);
    CHECK(e1.out.find("verdict: NonnoetherianNCCR") != std::string::npos);

    auto e2 = run_cli("certify " + fx("example2.quiver"));
    CHECK(e2.code == 0);

    auto co = run_cli("certify " + fx("conifold.quiver"));
    CHECK(co.code == 1);
    CHECK(co.out.find("AssumptionsFail") != std::string::npos);

    auto starved = run_cli("certify " + fx("example1.quiver") + " --path-bound 4 --rewrite-bound 1");
    CHECK(starved.code == 2);
    CHECK(starved.out.find("Inconclusive") != std::string::npos);
}

TEST_CASE("certify --json carries the schema and verdict") {
    auto r = run_cli("certify " + fx("example1.quiver") + " --json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["op"] == "certify");
    CHECK(j["verdict"] == "NonnoetherianNCCR");
    CHECK(j["exit_code"] == 0);
    CHECK(j["bounds"].size() == 4);
    CHECK(j["bounds"]["truncation"] == 12);
    CHECK(j["assumptions"]["contracted_quiver_cancellative"] == "true");
    CHECK(j["coprimality"]["pairwise_coprime"] == true);
    CHECK(j["primes"].size() == 1);
    CHECK(j["principal_all_ok"] == true);
}

TEST_CASE("JSON output is byte-stable and --out matches stdout") {
    auto a = run_cli("certify " + fx("example2.quiver") + " --json");
    auto b = run_cli("certify " + fx("example2.quiver") + " --json");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    std::string out_file = "cli_out_artifact.json";
    auto c = run_cli("certify " + fx("example2.quiver") + " --json --out " + out_file);
    CHECK(c.code == 0);
    CHECK(c.out.empty());
    CHECK(slurp(out_file) == a.out);
    std::remove(out_file.c_str());
}

TEST_CASE("algebra --json with an alias table renders the generators") {
    auto r = run_cli("algebra " + fx("example1.quiver") + " --json --alias " + fx("xyzw.alias"));
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(as_set(j["cycle_algebra"]["gens"]) == std::set<std::string>{"xz", "yz", "xw", "yw"});
    CHECK(j["cycle_algebra"]["num_elements"] == 140);
    CHECK(j["cycle_algebra"]["saturated"] == true);
    CHECK(as_set(j["center"]["module_gens"]) == std::set<std::string>{"xz", "yz"});
    CHECK(j["center"]["equals_cycle_algebra"] == false);
    CHECK(j["center"]["dim_lattice"] == 3);
}

TEST_CASE("truncation comes from the environment unless the flag overrides it") {
    auto env = run_cli("algebra " + fx("conifold.quiver") + " --json", "DIMERLAB_TRUNC=6 ");
    auto je = nlohmann::json::parse(env.out);
    CHECK(je["bounds"]["truncation"] == 6);
    CHECK(je["cycle_algebra"]["num_elements"] == 30);

    auto flag = run_cli("algebra " + fx("conifold.quiver") + " --json --trunc 8", "DIMERLAB_TRUNC=6 ");
    auto jf = nlohmann::json::parse(flag.out);
    CHECK(jf["bounds"]["truncation"] == 8);
    CHECK(jf["cycle_algebra"]["num_elements"] == 55);
}

TEST_CASE("present prints the corner matrix and the localized diagonals") {
    auto r = run_cli("present " + fx("example1.quiver") + " --alias " + fx("xyzw.alias"));
    CHECK(r.code == 0);
    CHECK(r.out.find("S") != std::string::npos);
    CHECK(r.out.find("(k + ") != std::string::npos);
    CHECK(r.out.find("_loc") != std::string::npos);
}
