#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

#ifndef COLLABNET_CLI_PATH
#define COLLABNET_CLI_PATH "build/tools/collabnet"
#endif
#ifndef COLLABNET_FIXTURE_DIR
#define COLLABNET_FIXTURE_DIR "tests/fixtures"
#endif

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Runs the CLI with the given arguments; stderr is folded into the output
// when capture_stderr is set, dropped otherwise.
RunResult run_cli(const std::string& args, const std::string& env = "",
                  bool capture_stderr = false) {
    std::string cmd = env.empty() ? "" : env + " ";
    cmd += std::string(COLLABNET_CLI_PATH) + " " + args;
    cmd += capture_stderr ? " 2>&1" : " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    size_t n;
    while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.output.append(buffer, n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string corpus_args() {
    const std::string dir = COLLABNET_FIXTURE_DIR;
    return "--input " + dir + "/corpus20.jsonl --aliases " + dir + "/aliases.csv --countries " +
           dir + "/institute_countries.csv --regions " + dir + "/regions.csv";
}

}  // namespace

TEST_CASE("no arguments prints usage and exits 1") {
    RunResult result = run_cli("", "", true);
    CHECK(result.exit_code == 1);
    CHECK(result.output.find("Usage") != std::string::npos);
}

TEST_CASE("unknown subcommands and flags are usage errors") {
    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("metrics --no-such-flag " + corpus_args()).exit_code == 1);
    CHECK(run_cli("metrics --level galaxy " + corpus_args()).exit_code == 1);
    CHECK(run_cli("metrics").exit_code == 1);  // neither --input nor --graph
}

TEST_CASE("a nonexistent input path is a data error naming the path") {
    RunResult result = run_cli("stats --input /no/such/corpus.jsonl", "", true);
    CHECK(result.exit_code == 2);
    CHECK(result.output.find("/no/such/corpus.jsonl") != std::string::npos);
}

TEST_CASE("stats reports the fixture corpus") {
    RunResult result = run_cli("stats " + corpus_args());
    REQUIRE(result.exit_code == 0);
    json stats = json::parse(result.output);
    CHECK(stats["papers"] == 20);
    CHECK(stats["authors"] == 14);
    CHECK(stats["institutes"] == 9);
    CHECK(stats["countries"] == 6);
    CHECK(stats["cleaning"]["rewritten_fields"] == 8);
    CHECK(stats["cleaning"]["inferred_countries"] == 2);
    CHECK(stats["cleaning"]["unresolved_affiliations"] == 1);
}

TEST_CASE("metrics reports the fixture country network") {
    RunResult result = run_cli("metrics --level country " + corpus_args());
    REQUIRE(result.exit_code == 0);
    json report = json::parse(result.output);
    CHECK(report["nodes"] == 6);
    CHECK(report["links"] == 10);
    CHECK(report["total_weight"] == 18);
    CHECK(report["component_count"] == 1);
    CHECK(report["giant_size"] == 6);
    CHECK(std::abs(report["density_binary"].get<double>() - 2.0 / 3.0) < 1e-9);
    CHECK(std::abs(report["average_distance"].get<double>() - 4.0 / 3.0) < 1e-9);
}

TEST_CASE("undefined metrics are data errors at the CLI boundary") {
    // a window with no records leaves fewer than 3 nodes
    RunResult result =
        run_cli("metrics --level country --from 1900 --to 1901 " + corpus_args(), "", true);
    CHECK(result.exit_code == 2);
    CHECK(result.output.find("fewer than 3 nodes") != std::string::npos);
}

TEST_CASE("output is byte-identical across thread settings") {
    const std::string args = "metrics --level author " + corpus_args();
    RunResult serial = run_cli(args, "COLLABNET_THREADS=1");
    RunResult parallel = run_cli(args, "COLLABNET_THREADS=4");
    RunResult auto_threads = run_cli(args, "COLLABNET_THREADS=0");
    REQUIRE(serial.exit_code == 0);
    CHECK(serial.output == parallel.output);
    CHECK(serial.output == auto_threads.output);
}

TEST_CASE("garbage COLLABNET_THREADS is rejected") {
    RunResult result =
        run_cli("metrics --level country " + corpus_args(), "COLLABNET_THREADS=banana", true);
    CHECK(result.exit_code == 2);
    CHECK(result.output.find("COLLABNET_THREADS") != std::string::npos);
}

TEST_CASE("build writes an edge list that metrics can consume via --graph") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "collabnet_cli_test";
    fs::create_directories(dir);
    const std::string edges = (dir / "edges.csv").string();
    const std::string nodes = (dir / "nodes.csv").string();

    RunResult built = run_cli("build --level country " + corpus_args() + " --out " + edges +
                              " --nodes-out " + nodes);
    REQUIRE(built.exit_code == 0);

    RunResult direct = run_cli("metrics --level country " + corpus_args());
    RunResult imported =
        run_cli("metrics --level country --graph " + edges + " --graph-nodes " + nodes);
    REQUIRE(imported.exit_code == 0);

    json a = json::parse(direct.output), b = json::parse(imported.output);
    // same structure; the imported graph has no window/policy provenance
    for (const char* key : {"nodes", "links", "total_weight", "density_binary",
                            "connectedness", "clustering_avg", "average_distance",
                            "centralization_degree", "centralization_closeness",
                            "centralization_betweenness"})
        CHECK(a[key] == b[key]);
    fs::remove_all(dir);
}

TEST_CASE("export formats are well-formed") {
    RunResult dot = run_cli("export --level country --format dot " + corpus_args());
    REQUIRE(dot.exit_code == 0);
    CHECK(dot.output.starts_with("graph country_collaboration {"));
    CHECK(dot.output.find("penwidth=5") != std::string::npos);  // Australia -- China
    CHECK(dot.output.find("region=\"Oceania\"") != std::string::npos);

    RunResult graphml = run_cli("export --level country --format graphml " + corpus_args());
    REQUIRE(graphml.exit_code == 0);
    CHECK(graphml.output.starts_with("<?xml"));

    RunResult csv = run_cli("export --level country --format csv " + corpus_args());
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.output.starts_with("source,target,weight\n"));

    CHECK(run_cli("export --format pdf " + corpus_args()).exit_code == 1);
}

TEST_CASE("json mirrors exist for the table subcommands") {
    RunResult top = run_cli("top --level country --top 3 --format json " + corpus_args());
    REQUIRE(top.exit_code == 0);
    json top_json = json::parse(top.output);
    CHECK(top_json["rows"].size() == 3);
    CHECK(top_json["rows"][0]["entity"] == "China");

    RunResult series = run_cli("series --level country --format json " + corpus_args());
    REQUIRE(series.exit_code == 0);
    CHECK(json::parse(series.output)["rows"].size() == 14);

    RunResult growth = run_cli(
        "growth --level country --early 1998:2003 --recent 2004:2009 --format json " +
        corpus_args());
    REQUIRE(growth.exit_code == 0);
    json growth_json = json::parse(growth.output);
    CHECK(growth_json["rows"].size() == 6);
    CHECK(growth_json["new_entrants"].empty());

    RunResult links = run_cli("links --level country --top 2 --format json " + corpus_args());
    REQUIRE(links.exit_code == 0);
    CHECK(json::parse(links.output)["concentration"].get<double>() > 0.0);

    RunResult dist = run_cli("dist --axis countries --format json " + corpus_args());
    REQUIRE(dist.exit_code == 0);
    CHECK(json::parse(dist.output)["axis"] == "countries_per_pub");

    RunResult metrics_csv = run_cli("metrics --level country --format csv " + corpus_args());
    REQUIRE(metrics_csv.exit_code == 0);
    CHECK(metrics_csv.output.starts_with("measure,value\n"));
    CHECK(metrics_csv.output.find("total_weight,18") != std::string::npos);
}

TEST_CASE("csv corpus input is accepted through format inference") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "collabnet_cli_csv";
    fs::create_directories(dir);
    const std::string path = (dir / "tiny.csv").string();
    {
        std::ofstream out(path);
        out << "id,title,year,journal,author,institute,country\n"
               "R1,T,2001,J,Ann,Inst A,Aland\n"
               "R1,T,2001,J,Ben,Inst B,Bland\n"
               "R2,U,2002,J,Ann,Inst A,Aland\n"
               "R2,U,2002,J,Cleo,Inst C,Cland\n"
               "R3,V,2003,J,Ben,Inst B,Bland\n"
               "R3,V,2003,J,Cleo,Inst C,Cland\n";
    }
    RunResult result = run_cli("metrics --level country --input " + path);
    REQUIRE(result.exit_code == 0);
    json report = json::parse(result.output);
    CHECK(report["nodes"] == 3);
    CHECK(report["links"] == 3);
    fs::remove_all(dir);
}
