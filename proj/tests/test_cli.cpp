#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / "mdim_cli_test";
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = mdim::cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

}  // namespace

TEST_CASE("gen is deterministic and honors the edge probability extremes") {
    TempDir dir;
    auto a = dir.file("a.json"), b = dir.file("b.json");
    CHECK(run({"gen", "--seed", "7", "--n1", "3", "--n2", "4", "--edge-prob", "0.5", "-o", a}).code == 0);
    CHECK(run({"gen", "--seed", "7", "--n1", "3", "--n2", "4", "--edge-prob", "0.5", "-o", b}).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(!slurp(a).empty());

    auto empty = run({"gen", "--seed", "1", "--n1", "2", "--n2", "2", "--edge-prob", "0", "-o",
                      dir.file("e.json")});
    CHECK(empty.out.find("m=0") != std::string::npos);
    auto full = run({"gen", "--seed", "1", "--n1", "2", "--n2", "2", "--edge-prob", "1", "-o",
                     dir.file("f.json")});
    CHECK(full.out.find("m=4") != std::string::npos);
}

TEST_CASE("reduce prints the derived parameters and validates y") {
    TempDir dir;
    auto inst = dir.file("inst.json");
    // edgeless 6-vertex instance: no normalization, y = 10 * 36 = 360
    CHECK(run({"gen", "--seed", "3", "--n1", "3", "--n2", "3", "--edge-prob", "0", "--budget", "6",
               "-o", inst}).code == 0);
    auto reduced = run({"reduce", "-i", inst, "-o", dir.file("g.gr"), "--labels",
                        dir.file("labels.json")});
    CHECK(reduced.code == 0);
    CHECK(reduced.out.find("n=6 y=360 k=10") == 0);
    CHECK(fs::exists(dir.file("g.gr")));
    CHECK(fs::exists(dir.file("labels.json")));

    auto odd = run({"reduce", "-i", inst, "-o", dir.file("g2.gr"), "--y", "57"});
    CHECK(odd.code == 2);
    CHECK(odd.err.find("even") != std::string::npos);

    // k = h + 4 follows the (possibly normalized) budget
    auto k2 = dir.file("k2.json");
    write_file(k2, R"({"v1": ["a"], "v2": ["b"], "edges": [["a","b"]], "h": 1})");
    auto red2 = run({"reduce", "-i", k2, "-o", dir.file("k2.gr"), "--y", "min"});
    CHECK(red2.code == 0);
    CHECK(red2.out.find("n=4 y=42 k=7") == 0);
}

TEST_CASE("solve-md modes and exit codes") {
    TempDir dir;
    auto p4 = dir.file("p4.gr");
    write_file(p4, "p 4 3\ne 1 2\ne 2 3\ne 3 4\n");

    auto naive = run({"solve-md", "-i", p4, "--mode", "naive"});
    CHECK(naive.code == 0);
    CHECK(naive.out.find("\"size\":1") != std::string::npos);
    CHECK(naive.out.find("\"witness\":[1]") != std::string::npos);

    auto cover = run({"solve-md", "-i", p4, "--mode", "cover"});
    CHECK(cover.code == 0);
    CHECK(cover.out.find("\"size\":1") != std::string::npos);

    auto greedy = run({"solve-md", "-i", p4, "--mode", "greedy"});
    CHECK(greedy.code == 0);
    CHECK(greedy.out.find("\"size\":1") != std::string::npos);

    auto k2 = dir.file("k2.gr");
    write_file(k2, "p 2 1\ne 1 2\n");
    CHECK(run({"solve-md", "-i", k2, "--max-k", "0"}).code == 1);
    CHECK(run({"solve-md", "-i", k2, "--max-k", "1"}).code == 0);

    CHECK(run({"solve-md", "-i", dir.file("absent.gr")}).code == 2);
    CHECK(run({"solve-md", "-i", p4, "--mode", "bogus"}).code == 2);
}

TEST_CASE("solve-ds decides against the instance budget") {
    TempDir dir;
    auto inst = dir.file("inst.json");
    write_file(inst, R"({"v1": ["a"], "v2": ["x","y","z"],
                         "edges": [["a","x"],["a","y"],["a","z"]], "h": 1})");
    auto yes = run({"solve-ds", "-i", inst});
    CHECK(yes.code == 0);
    CHECK(yes.out.find("\"size\":1") != std::string::npos);
    CHECK(yes.out.find("\"witness\":[\"a\"]") != std::string::npos);

    auto tight = dir.file("tight.json");
    write_file(tight, R"({"v1": ["a","b"], "v2": [], "edges": [], "h": 1})");
    CHECK(run({"solve-ds", "-i", tight}).code == 1);  // two isolated vertices need 2
}

TEST_CASE("rbds subcommand") {
    TempDir dir;
    auto p3 = dir.file("p3.gr");
    write_file(p3, "p 3 2\ne 1 2\ne 2 3\n");
    auto dump = dir.file("rbds.json");
    auto result = run({"rbds", "-i", p3, "--dump", dump});
    CHECK(result.code == 0);
    CHECK(result.out.find("\"size\":1") != std::string::npos);
    CHECK(slurp(dump).find("\"red_count\": 3") != std::string::npos);

    CHECK(run({"rbds", "-i", p3, "--budget", "0"}).code == 1);
}

TEST_CASE("verify single instance and usage errors") {
    TempDir dir;
    auto k2 = dir.file("k2.json");
    write_file(k2, R"({"v1": ["a"], "v2": ["b"], "edges": [["a","b"]], "h": 1})");
    auto result = run({"verify", "-i", k2});
    CHECK(result.code == 0);
    CHECK(result.out.find("ok") != std::string::npos);
    CHECK(result.out.find("FAIL") == std::string::npos);

    auto jsonl = dir.file("report.jsonl");
    CHECK(run({"verify", "-i", k2, "--jsonl", jsonl}).code == 0);
    CHECK(slurp(jsonl).find("\"passed\":true") != std::string::npos);

    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
