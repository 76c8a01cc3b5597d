#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "higher_jones/cli.hpp"

using namespace hj;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("hj_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
};

}  // namespace

TEST_CASE("dim examples") {
    auto a = run({"dim", "--algebra", "hecke", "--ell", "12", "--r", "6", "--weight", "4,2"});
    CHECK(a.code == 0);
    CHECK(a.out == "9\n");
    CHECK(run({"dim", "--algebra", "symmetric", "--p", "3", "--r", "9", "--weight", "5,4"}).out == "1\n");
    CHECK(run({"dim", "--algebra", "brauer", "--delta", "5", "--p", "7", "--r", "10", "--weight", "4"}).out == "66\n");
}

TEST_CASE("dim with a label outside the weight set lists the valid ones") {
    auto a = run({"dim", "--algebra", "hecke", "--ell", "12", "--r", "6", "--weight", "6,0,0,0,0,0,0"});
    CHECK(a.code == kExitUsage);
    CHECK(a.out.empty());
    CHECK(a.err.find("valid:") != std::string::npos);
    CHECK(a.err.find("(4,2)") != std::string::npos);
    CHECK(run({"dim", "--algebra", "hecke", "--ell", "12", "--r", "6", "--weight", "x"}).code == kExitUsage);
}

TEST_CASE("table csv for the symmetric group at p=5") {
    auto a = run({"table", "--algebra", "symmetric", "--p", "5", "--rmax", "10", "--format", "csv"});
    REQUIRE(a.code == 0);
    CHECK(a.out.rfind("r,weight,dim\n", 0) == 0);
    CHECK(a.out.find("\n10,6.4,55\n") != std::string::npos);
    CHECK(a.out.find("\n10,3.3.2.2,1\n") != std::string::npos);
    // deterministic
    CHECK(run({"table", "--algebra", "symmetric", "--p", "5", "--rmax", "10", "--format", "csv"}).out == a.out);
}

TEST_CASE("table json keeps big integers as strings") {
    auto a = run({"table", "--algebra", "bmw", "--n", "2", "--ell", "10", "--rmax", "3", "--format", "json"});
    REQUIRE(a.code == 0);
    auto j = nlohmann::json::parse(a.out);
    REQUIRE(j["rows"].size() == 3);
    CHECK(j["rows"][1]["r"] == 2);
    for (const auto& row : j["rows"])
        for (const auto& e : row["entries"]) CHECK(e["dim"].is_string());
    CHECK(j["rows"][1]["entries"].size() == 3);  // (2,0) (1,1) (0,0)

    auto big = run({"table", "--algebra", "brauer", "--delta", "10", "--p", "11", "--rmax", "50", "--format", "json"});
    REQUIRE(big.code == 0);
    auto jb = nlohmann::json::parse(big.out);
    bool huge = false;
    for (const auto& e : jb["rows"][49]["entries"]) huge |= e["dim"].get<std::string>().size() > 19;
    CHECK(huge);
}

TEST_CASE("odd Brauer delta=1 column is all ones") {
    auto a = run({"table", "--algebra", "brauer", "--delta", "1", "--p", "7", "--rmax", "5", "--format", "csv"});
    REQUIRE(a.code == 0);
    std::istringstream in(a.out);
    std::string line;
    std::getline(in, line);
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(line.substr(line.rfind(',') + 1) == "1");
    }
    CHECK(rows >= 5);
}

TEST_CASE("text format aligns columns") {
    auto a = run({"table", "--algebra", "hecke", "--ell", "12", "--rmax", "4"});
    REQUIRE(a.code == 0);
    CHECK(a.out.rfind("# ", 0) == 0);
    CHECK(count_lines(a.out) > 4);
}

TEST_CASE("usage errors exit 2 and print nothing to stdout") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {},
             {"table"},
             {"table", "--algebra", "hecke", "--ell", "6"},
             {"table", "--algebra", "hecke", "--ell", "4"},
             {"table", "--algebra", "symmetric", "--p", "9"},
             {"table", "--algebra", "symmetric", "--p", "5", "--ell", "10"},
             {"table", "--algebra", "brauer", "--p", "7"},
             {"table", "--algebra", "brauer", "--delta", "9", "--p", "7"},
             {"table", "--algebra", "brauer-b", "--m", "3", "--p", "7"},
             {"table", "--algebra", "bmw", "--n", "2", "--ell", "1"},
             {"table", "--algebra", "nope", "--p", "5"},
             {"table", "--algebra", "symmetric", "--p", "5", "--format", "xml"},
             {"decompose", "--algebra", "hecke", "--ell", "12", "--r", "4"},
             {"verify", "everything"},
             {"fixtures", "diff", "/nonexistent/hj/tables"},
         }) {
        CAPTURE(args.size());
        auto a = run(args);
        CHECK(a.code == kExitUsage);
        CHECK(a.out.empty());
        CHECK_FALSE(a.err.empty());
    }
    auto e = run({"table", "--algebra", "hecke", "--ell", "6"});
    CHECK(e.err.find("6") != std::string::npos);
}

TEST_CASE("decompose") {
    auto a = run({"decompose", "--algebra", "brauer", "--delta", "3", "--p", "7", "--r", "2"});
    REQUIRE(a.code == 0);
    CHECK(a.out.find("total ") != std::string::npos);
    auto b = run({"decompose", "--algebra", "symmetric", "--p", "5", "--r", "3", "--rank", "2"});
    REQUIRE(b.code == 0);
    // kS_3 at p=5 with two rows: blocks (3) and (2,1) of sizes 1 and 2
    CHECK(b.out.find("total 5") != std::string::npos);
}

TEST_CASE("fixtures round trip and mutation") {
    TempDir tmp;
    auto dir = tmp.path.string();
    REQUIRE(run({"fixtures", "emit", dir}).code == 0);
    for (int t = 1; t <= 6; ++t) CHECK(std::filesystem::exists(tmp.path / ("T" + std::to_string(t) + ".csv")));
    CHECK(std::filesystem::exists(tmp.path / "errata.txt"));
    auto clean = run({"fixtures", "diff", dir});
    CHECK(clean.code == 0);

    // emit is byte-identical across runs
    TempDir tmp2;
    REQUIRE(run({"fixtures", "emit", tmp2.path.string()}).code == 0);
    for (const auto& f : std::filesystem::directory_iterator(tmp.path)) {
        std::ifstream a(f.path()), b(tmp2.path / f.path().filename());
        std::stringstream sa, sb;
        sa << a.rdbuf();
        sb << b.rdbuf();
        CHECK(sa.str() == sb.str());
    }

    // corrupt T5 row 6 weight 4.2 (printed 9)
    auto path = tmp.path / "T5.csv";
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    in.close();
    std::string text = ss.str();
    auto pos = text.find("\n6,4.2,9\n");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 9, "\n6,4.2,8\n");
    std::ofstream(path, std::ios::binary) << text;
    auto bad = run({"fixtures", "diff", dir});
    CHECK(bad.code == kExitVerifyFailed);
    CHECK(bad.out.find("T5 row 6 weight 4.2") != std::string::npos);

    // schema damage is an I/O-class error
    std::ofstream(path, std::ios::binary) << "r;weight;dim\n";
    CHECK(run({"fixtures", "diff", dir}).code == kExitUsage);
}

TEST_CASE("verify fixtures reports the errata count") {
    auto a = run({"verify", "fixtures"});
    CHECK(a.code == 0);
    CHECK(a.out.find("6/6 tables match (51 errata entries applied)") != std::string::npos);
}

TEST_CASE("verify oracles and laws list each check") {
    auto o = run({"verify", "oracles"});
    CHECK(o.code == 0);
    CHECK(o.out.find("altsum==walk, family C rank 2, r<=8: ok") != std::string::npos);
    auto l = run({"verify", "laws"});
    CHECK(l.out.find("fibonacci p=5 r<=30: ok") != std::string::npos);
    // the literal 2^s law fails at ell=8, so the suite exits 1
    CHECK(l.out.find("2^s") != std::string::npos);
    CHECK(l.code == kExitVerifyFailed);
}
