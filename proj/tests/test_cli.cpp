#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(TRIGZERO_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json run_json(const std::string& args, int expected_code = 0) {
    auto r = run(args);
    EXPECT_EQ(r.code, expected_code) << args << "\n" << r.out;
    try {
        return json::parse(r.out);
    } catch (const json::parse_error&) {
        ADD_FAILURE() << "not JSON: " << r.out;
        return {};
    }
}

std::string data(const char* name) { return std::string(TRIGZERO_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Cli, Count) {
    auto j = run_json("count --coeffs 0,0,0,1");
    EXPECT_EQ(j["Z"], 6);
    EXPECT_EQ(j["certification"], "exact");
    EXPECT_EQ(j["K"], 3);

    EXPECT_EQ(run_json("count --coeffs 2,1 --method exact")["Z"], 0);
    EXPECT_EQ(run_json("count --coeffs 1/2,-1/3,1/6 --method exact")["certification"], "exact");

    auto m = run_json("count --coeffs 0,1 --kind mixed --X 1");
    EXPECT_EQ(m["Z"], 2);
    EXPECT_EQ(m["certification"], "numerical");
    EXPECT_EQ(run_json("count --coeffs 0,0,1 --kind mixed --X inf")["Z"], 4);
    EXPECT_EQ(run_json("count --coeffs 0,0,1 --kind sine")["Z"], 4);
    EXPECT_EQ(run_json("count --file " + data("cubic.txt"))["Z"], 6);
}

TEST(Cli, CountErrors) {
    EXPECT_EQ(run("count --coeffs 0,0").code, 1);
    EXPECT_EQ(run("count --coeffs 1,x").code, 1);
    EXPECT_EQ(run("count").code, 1);
    EXPECT_EQ(run("count --coeffs 1,1 --kind mixed --X 1 --method exact").code, 1);
    EXPECT_EQ(run("count --coeffs 1,1 --kind tangent").code, 1);
    EXPECT_EQ(run("frobnicate").code, 1);
}

TEST(Cli, Pair) {
    auto j = run_json("pair --coeffs 2,1");
    EXPECT_EQ(j, (json{{"Z_a", 0}, {"Z_rev", 2}, {"sum", 2}, {"bound", 2}, {"holds", true}}));
    EXPECT_EQ(run_json("pair --coeffs 1,2,3,4,5")["holds"], true);
    EXPECT_EQ(run_json("pair --coeffs 1,2,3,4,5 --method numeric")["holds"], true);
}

TEST(Cli, Cert) {
    auto j = run_json("cert --coeffs 0,1");
    EXPECT_EQ(j["lambda"], (json{2.0, 2.0, 2.0}));
    EXPECT_EQ(j["lb_forward"], 2);
    EXPECT_EQ(j["lb_reverse"], 0);
    EXPECT_EQ(run("cert --coeffs 0,0").code, 1);
    EXPECT_EQ(run("cert --coeffs 4").code, 1);
}

TEST(Cli, MonteCarlo) {
    auto csv = run("mc --spec " + data("point_mass.json") + " --seed 7 --n 50");
    EXPECT_EQ(csv.code, 0);
    EXPECT_EQ(csv.out, "seed,n,n_zero,n_counted,mean_Z,stderr_Z,violations,K,L,M,dist\n"
                       "7,50,0,50,6,0,0,3,0,3,point_mass(c=1)\n");

    auto j = run_json("mc --spec " + data("gaussian_window.json") + " --seed 3 --n 40 --format json");
    EXPECT_EQ(j["n_counted"], 40);
    EXPECT_EQ(j["violations"], 0);
    EXPECT_EQ(j["L"], 2);
    EXPECT_EQ(j["M"], 6);

    // same seed, same bytes
    auto a = run("mc --spec " + data("gaussian_window.json") + " --seed 3 --n 40");
    auto b = run("mc --spec " + data("gaussian_window.json") + " --seed 3 --n 40");
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, MonteCarloErrors) {
    EXPECT_EQ(run("mc --spec " + data("all_zero.json") + " --n 10").code, 1);
    EXPECT_EQ(run("mc --spec " + data("broken.json") + " --n 10").code, 1);
    EXPECT_EQ(run("mc --spec /nonexistent.json --n 10").code, 1);
    EXPECT_EQ(run("mc --spec " + data("point_mass.json") + " --n 0").code, 1);
    EXPECT_EQ(run("mc --spec " + data("point_mass.json") + " --format xml").code, 1);
}

TEST(Cli, OutFileWrittenOnlyOnSuccess) {
    const auto dir = std::filesystem::temp_directory_path() / "trigzero_cli_test";
    std::filesystem::create_directories(dir);
    const auto good = dir / "good.csv";
    const auto bad = dir / "bad.csv";
    std::filesystem::remove(good);
    std::filesystem::remove(bad);
    EXPECT_EQ(run("mc --spec " + data("point_mass.json") + " --n 5 --out " + good.string()).code, 0);
    std::ifstream in(good);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_NE(ss.str().find("point_mass(c=1)"), std::string::npos);
    EXPECT_EQ(run("mc --spec " + data("all_zero.json") + " --n 5 --out " + bad.string()).code, 1);
    EXPECT_FALSE(std::filesystem::exists(bad));
}

TEST(Cli, Sweep) {
    auto r = run("sweep --spec " + data("bernoulli_window.json") + " --ps 0.5,0.2 --n 200 --seed 2");
    EXPECT_EQ(r.code, 0);
    std::istringstream lines(r.out);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) ++rows;
    EXPECT_EQ(rows, 3);
    auto j = run_json("sweep --spec " + data("gaussian_window.json") + " --Ks 6,8 --n 20 --format json");
    ASSERT_TRUE(j.is_array());
    EXPECT_EQ(j.size(), 2u);
    EXPECT_EQ(run("sweep --spec " + data("gaussian_window.json") + " --n 5").code, 1);
}

TEST(Cli, Lemma) {
    auto j = run_json("lemma --n 500 --length 9");
    EXPECT_EQ(j["passed"], 500);
    EXPECT_EQ(j["failed"], 0);
    auto e = run_json("lemma --exhaustive --length 7");
    EXPECT_EQ(e["n"], 2187);
    EXPECT_EQ(e["failed"], 0);
    EXPECT_EQ(run("lemma --length 8").code, 1);
}
