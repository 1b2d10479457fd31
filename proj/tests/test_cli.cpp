#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(WEYLWIT_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    const int status = pclose(p);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

std::string temp_path(const char* name) {
    return std::string("cli_test_") + name + ".json";
}

nlohmann::json parse(const std::string& text) { return nlohmann::json::parse(text); }

}  // namespace

TEST_CASE("build output is deterministic and carries the schema tag") {
    const RunResult r1 = run_cli("build-iso --a 3,1 --b 5");
    const RunResult r2 = run_cli("build-iso --a 3,1 --b 5");
    CHECK(r1.exit_code == 0);
    const bool identical = r1.out == r2.out;
    CHECK(identical);
    const nlohmann::json doc = parse(r1.out);
    CHECK(doc.at("schema") == "v1");
    CHECK(doc.at("kind") == "iso");
    CHECK(doc.contains("gram"));
    CHECK(doc.contains("g"));
    CHECK(doc.contains("lines"));
}

TEST_CASE("round trip: build, validate, normalize, isotropy") {
    const std::string f = temp_path("roundtrip");
    REQUIRE(run_cli("build-iso --a 3,1 --b 3,1 -o " + f).exit_code == 0);

    const RunResult v = run_cli("validate " + f);
    CHECK(v.exit_code == 0);
    const nlohmann::json vr = parse(v.out);
    CHECK(vr.at("ok") == true);
    CHECK(vr.at("issues").empty());

    const RunResult n = run_cli("normalize " + f);
    CHECK(n.exit_code == 0);
    const nlohmann::json nr = parse(n.out);
    CHECK(nr.contains("normalized"));
    CHECK(!nr.at("normalized").empty());

    const RunResult iso = run_cli("isotropy " + f);
    CHECK(iso.exit_code == 0);
    const nlohmann::json ir = parse(iso.out);
    CHECK(ir.at("order").get<long>() >= 1);
    CHECK(ir.at("elements").size() == ir.at("order").get<std::size_t>());

    const RunResult comp = run_cli("component " + f);
    CHECK(comp.exit_code == 0);

    std::remove(f.c_str());
}

TEST_CASE("corrupted witness fails validation with a report") {
    const std::string f = temp_path("corrupt");
    REQUIRE(run_cli("build-iso --a 3,1 --b 5 -o " + f).exit_code == 0);
    {
        std::ifstream in(f);
        nlohmann::json doc = nlohmann::json::parse(in);
        in.close();
        doc["g"][0][0] = "7";
        std::ofstream out(f);
        out << doc.dump(2) << "\n";
    }
    const RunResult v = run_cli("validate " + f);
    CHECK(v.exit_code == 1);
    const nlohmann::json vr = parse(v.out);
    CHECK(vr.at("ok") == false);
    CHECK(!vr.at("issues").empty());
    std::remove(f.c_str());
}

TEST_CASE("twisted build feeds the special-linear refinement") {
    const std::string f = temp_path("twisted");
    REQUIRE(run_cli("build-twisted --a 3 --b 2 -o " + f).exit_code == 0);
    const RunResult r = run_cli("sl-refine " + f);
    CHECK(r.exit_code == 0);
    const nlohmann::json doc = parse(r.out);
    CHECK(doc.at("det_ok") == true);
    CHECK(doc.at("class_count") == 1);
    std::remove(f.c_str());
}

TEST_CASE("exit codes distinguish usage, check, and i/o failures") {
    CHECK(run_cli("no-such-subcommand").exit_code == 2);
    CHECK(run_cli("build-iso --a 3,1 --b 2").exit_code == 2);  // mixed parity
    CHECK(run_cli("validate does_not_exist.json").exit_code == 3);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("table verification and element search run from the command line") {
    const RunResult t1 = run_cli("weyl verify-table --type G2");
    const RunResult t2 = run_cli("weyl verify-table --type G2");
    CHECK(t1.exit_code == 0);
    const bool identical = t1.out == t2.out;
    CHECK(identical);
    const nlohmann::json doc = parse(t1.out);
    CHECK(doc.at("ok") == true);
    CHECK(doc.at("rows").size() == 2);

    const RunResult f = run_cli("weyl find --type G2 --factors 3");
    CHECK(f.exit_code == 0);
    const nlohmann::json fd = parse(f.out);
    CHECK(fd.at("found") == true);
    CHECK(fd.at("min_length") == 4);
}

TEST_CASE("selftest report is byte-identical across runs and thread counts") {
    const RunResult r1 = run_cli("selftest --max-dim 8 --seed 3");
    const RunResult r2 = run_cli("selftest --max-dim 8 --seed 3");
    CHECK(r1.exit_code == 0);
    bool identical = r1.out == r2.out;
    CHECK(identical);
    setenv("WEYLWIT_THREADS", "4", 1);
    const RunResult rt = run_cli("selftest --max-dim 8 --seed 3");
    unsetenv("WEYLWIT_THREADS");
    identical = r1.out == rt.out;
    CHECK(identical);
}
