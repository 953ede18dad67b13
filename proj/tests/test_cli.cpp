#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "hodge/manifest.hpp"
#include "support/fixtures.hpp"

#ifndef HODGE_CLI_PATH
#error "HODGE_CLI_PATH must be defined by the build"
#endif

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string temp_file(const char* tag) {
    static int counter = 0;
    return "/tmp/hodge_cli_" + std::to_string(getpid()) + "_" + tag + "_" + std::to_string(counter++);
}

// env_prefix, when set, is prepended verbatim (e.g. "HODGE_MANIFEST_PATH=dir").
CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string out_path = temp_file("out");
    const std::string err_path = temp_file("err");
    std::string command;
    if (!env_prefix.empty()) command += env_prefix + " ";
    command += std::string(HODGE_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
    const int status = std::system(command.c_str());
    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = testfs::read_file(out_path);
    result.err = testfs::read_file(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

std::string catalog_arg() { return "--manifest " + testfs::fixture_path("catalog.json"); }

}  // namespace

TEST_CASE("show matches its golden output and is deterministic") {
    const CliResult first = run_cli(catalog_arg() + " show CP2");
    CHECK(first.exit_code == 0);
    CHECK(first.out == testfs::read_fixture("golden/show_cp2.txt"));
    const CliResult second = run_cli(catalog_arg() + " show CP2");
    CHECK(second.out == first.out);
}

TEST_CASE("show --json emits the canonical manifest of the model") {
    const CliResult result = run_cli("--json " + catalog_arg() + " show CP2");
    CHECK(result.exit_code == 0);
    CHECK(result.out == testfs::read_fixture("golden/show_cp2.json"));
    const hodge::ManifestDocument doc = hodge::parse_manifest(result.out);
    REQUIRE(doc.manifolds.size() == 1);
    CHECK(doc.manifolds[0].name == "CP2");
    CHECK(hodge::serialize(doc) == result.out);
}

TEST_CASE("show failure modes") {
    CHECK(run_cli(catalog_arg() + " show no_such_model").exit_code == 3);
    CHECK(run_cli("--manifest " + testfs::fixture_path("bad/frolicher.json") + " show anything").exit_code == 2);
    CHECK(run_cli("--manifest " + testfs::fixture_path("bad/syntax_error.json") + " show anything").exit_code ==
          2);
    CHECK(run_cli("--manifest /no/such/file.json show anything").exit_code == 2);
    CHECK(run_cli("show CP2").exit_code == 2);  // no manifest given
}

TEST_CASE("blowup command") {
    const CliResult result = run_cli(catalog_arg() + " blowup --ambient CP3 --center point");
    CHECK(result.exit_code == 0);
    CHECK(result.out == testfs::read_fixture("golden/blowup_cp3_point.txt"));

    const CliResult codim0 = run_cli(catalog_arg() + " blowup --ambient CP2 --center CP2");
    CHECK(codim0.exit_code == 4);
    CHECK(codim0.err.find("codimension must be >= 2") != std::string::npos);

    const CliResult divisor = run_cli(catalog_arg() + " blowup --ambient CP2 --center genus2curve");
    CHECK(divisor.exit_code == 4);
    CHECK(divisor.err.find("codimension-1") != std::string::npos);

    CHECK(run_cli(catalog_arg() + " blowup --ambient CP3 --center ghost").exit_code == 3);
}

TEST_CASE("blowup --json and --out round-trip through the parser") {
    const CliResult result = run_cli("--json " + catalog_arg() + " blowup --ambient CP3 --center genus2curve");
    CHECK(result.exit_code == 0);
    const hodge::ManifestDocument doc = hodge::parse_manifest(result.out);
    REQUIRE(doc.manifolds.size() == 1);
    CHECK(doc.manifolds[0].h(2, 1) == 2);

    const std::string out_path = temp_file("manifest");
    const CliResult written =
        run_cli(catalog_arg() + " blowup --ambient CP3 --center point --out " + out_path);
    CHECK(written.exit_code == 0);
    const hodge::ManifestDocument reloaded = hodge::parse_manifest(testfs::read_file(out_path));
    CHECK(reloaded.manifolds[0].h(1, 1) == 2);
    std::remove(out_path.c_str());
}

TEST_CASE("multiple centers are blown up component-wise") {
    const CliResult result =
        run_cli("--json " + catalog_arg() + " blowup --ambient CP4 --center point --center point");
    CHECK(result.exit_code == 0);
    const hodge::ManifestDocument doc = hodge::parse_manifest(result.out);
    REQUIRE(doc.manifolds.size() == 1);
    CHECK(doc.manifolds[0].h(1, 1) == 3);  // 1 + two components
}

TEST_CASE("factor command") {
    const CliResult round_trip = run_cli(catalog_arg() + " factor --script pt_up_down --audit");
    CHECK(round_trip.exit_code == 0);
    CHECK(round_trip.out.find("count_delta: 0") != std::string::npos);

    const CliResult twice = run_cli(catalog_arg() + " factor --script pt_up_up --audit");
    CHECK(twice.exit_code == 0);
    CHECK(twice.out == testfs::read_fixture("golden/factor_pt_up_up.txt"));

    const CliResult infeasible = run_cli(catalog_arg() + " factor --script infeasible");
    CHECK(infeasible.exit_code == 4);
    CHECK(infeasible.err.find("step 0") != std::string::npos);

    CHECK(run_cli(catalog_arg() + " factor --script ghost").exit_code == 3);

    const CliResult json = run_cli("--json " + catalog_arg() + " factor --script pt_up_up");
    CHECK(json.exit_code == 0);
    const hodge::ManifestDocument trace = hodge::parse_manifest(json.out);
    REQUIRE(trace.manifolds.size() == 3);
    CHECK(trace.manifolds[0].name == "X0");
    CHECK(trace.manifolds[2].h(1, 1) == 3);
}

TEST_CASE("balanced script cancels its blow-ups against its blow-downs") {
    const CliResult result = run_cli(catalog_arg() + " factor --script balanced --audit");
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("count_delta: 0") != std::string::npos);
    CHECK(result.out.find("DIFFER") == std::string::npos);
}

TEST_CASE("color is off by default and opt-in") {
    const CliResult plain = run_cli(catalog_arg() + " check CP2");
    CHECK(plain.out.find("\x1b[") == std::string::npos);
    const CliResult colored = run_cli("--color always " + catalog_arg() + " check CP2");
    CHECK(colored.exit_code == 0);
    CHECK(colored.out.find("\x1b[32m") != std::string::npos);
}

TEST_CASE("check command") {
    const CliResult catalog = run_cli(catalog_arg() + " check");
    CHECK(catalog.exit_code == 0);
    CHECK(catalog.out.find("valid: no") == std::string::npos);

    const CliResult iwasawa = run_cli("--manifest " + testfs::fixture_path("iwasawa.json") + " check");
    CHECK(iwasawa.exit_code == 0);
    CHECK(iwasawa.out == testfs::read_fixture("golden/check_iwasawa.txt"));
    CHECK(iwasawa.out.find("e1_degenerate: no (first failing k = 1)") != std::string::npos);

    const CliResult single = run_cli(catalog_arg() + " check CP3");
    CHECK(single.exit_code == 0);
    CHECK(single.out.find("model: CP3") != std::string::npos);
    CHECK(single.out.find("model: CP2") == std::string::npos);

    CHECK(run_cli(catalog_arg() + " check ghost").exit_code == 3);

    const CliResult invalid = run_cli("--manifest " + testfs::fixture_path("bad/frolicher.json") + " check");
    CHECK(invalid.exit_code == 2);
    CHECK(invalid.out.find("valid: no") != std::string::npos);
    CHECK(invalid.out.find("Frölicher inequality violated at k=1") != std::string::npos);
}

TEST_CASE("lenient parsing is an explicit opt-in") {
    const std::string manifest = "--manifest " + testfs::fixture_path("bad/unknown_key.json");
    CHECK(run_cli(manifest + " show oddball").exit_code == 2);
    CHECK(run_cli("--lenient " + manifest + " show oddball").exit_code == 0);
}

TEST_CASE("HODGE_MANIFEST_PATH supplies search directories") {
    const std::string env = "HODGE_MANIFEST_PATH=/nonexistent:" + std::string(HODGE_FIXTURE_DIR);
    const CliResult result = run_cli("--manifest catalog.json show CP2", env);
    CHECK(result.exit_code == 0);
    const CliResult missing = run_cli("--manifest catalog.json show CP2", "HODGE_MANIFEST_PATH=/nonexistent");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("later manifests may reference earlier ones") {
    const std::string args =
        catalog_arg() + " --manifest " + testfs::fixture_path("extra.json") + " factor --script cross_file";
    const CliResult result = run_cli(args);
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("count_delta: 1") != std::string::npos);
}
