#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "commands.hpp"
#include "mtg/chain_certificate.hpp"
#include "mtg/graph.hpp"
#include "mtg/graph_io.hpp"
#include "mtg/representation.hpp"

using namespace mtg;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("mtg_cli_" + std::to_string(std::random_device{}()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) {
        const auto p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

} // namespace

TEST_F(CliTest, ConstructFourCycle) {
    const auto r = run({"construct", "cycle", "4", "-o", path("c4.json")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "theta(C4) = 2\n");
    const auto rep = representation_from_json(slurp(path("c4.json")));
    const std::vector<Rational> expected{Rational(9, 10), Rational(11, 10)};
    EXPECT_TRUE(std::ranges::equal(rep.thresholds(), expected));
}

TEST_F(CliTest, ConstructToStdout) {
    const auto r = run({"construct", "cycle", "7"});
    EXPECT_EQ(r.code, 0);
    const auto rep = representation_from_json(r.out);
    EXPECT_EQ(rep.threshold_count(), 4);
    EXPECT_TRUE(verify(cycle_graph(7), rep).ok);
    EXPECT_NE(r.err.find("theta(C7) = 4"), std::string::npos);
}

TEST_F(CliTest, ConstructRejectsSmallOrUnknown) {
    EXPECT_EQ(run({"construct", "cycle", "2"}).code, 2);
    EXPECT_EQ(run({"construct", "path", "5"}).code, 2);
    EXPECT_EQ(run({"construct", "cycle", "five"}).code, 2);
}

TEST_F(CliTest, OutputReingestsLosslessly) {
    for (int n : {3, 4, 5, 6, 11, 40}) {
        const auto rep_path = path("c.json");
        ASSERT_EQ(run({"construct", "cycle", std::to_string(n), "-o", rep_path}).code, 0);
        const auto graph_path = write("c.txt", to_edge_list(cycle_graph(n)));
        const auto r = run({"verify", graph_path, rep_path});
        EXPECT_EQ(r.code, 0) << n;
        EXPECT_EQ(r.out, "ok\n");
    }
}

TEST_F(CliTest, VerifyReportsViolations) {
    const auto g = write("c4.txt", to_edge_list(cycle_graph(4)));
    const auto rep = write("one.json", R"({"n":4,"ranks":["0","1","0","1"],"thresholds":["9/10"]})");
    const auto r = run({"verify", g, rep});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("pair 1 3  sum 2  region 1  expected even"), std::string::npos);
    const auto d = run({"verify", g, rep, "--decimal"});
    EXPECT_NE(d.out.find("2 (~2.000000)"), std::string::npos);
}

TEST_F(CliTest, VerifyUsageErrors) {
    const auto c5 = write("c5.txt", to_edge_list(cycle_graph(5)));
    const auto c4 = write("c4.txt", to_edge_list(cycle_graph(4)));
    const auto c4rep = path("c4.json");
    ASSERT_EQ(run({"construct", "cycle", "4", "-o", c4rep}).code, 0);
    EXPECT_EQ(run({"verify", c5, c4rep}).code, 2);
    const auto decreasing = write("dec.json", R"({"n":4,"ranks":["0","1","0","1"],"thresholds":["11/10","9/10"]})");
    EXPECT_EQ(run({"verify", c4, decreasing}).code, 2);
    const auto broken = write("broken.txt", "4 1\n0 9\n");
    const auto r = run({"verify", broken, c4rep});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 2"), std::string::npos);
    EXPECT_EQ(run({"verify", path("missing.txt"), c4rep}).code, 2);
    EXPECT_EQ(run({"verify", c4, write("junk.json", "{")}).code, 2);
}

TEST_F(CliTest, VerboseVerifyDrawsNumberLine) {
    const auto g = write("c5.txt", to_edge_list(cycle_graph(5)));
    const auto rep = path("c5.json");
    ASSERT_EQ(run({"construct", "cycle", "5", "-o", rep}).code, 0);
    const auto r = run({"verify", g, rep, "-v"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("t4 = 28/5"), std::string::npos);
    EXPECT_NE(r.out.find("s(0,4) = 11/2  edge"), std::string::npos);
    EXPECT_LT(r.out.find("t3 = 27/5"), r.out.find("s(0,4)"));
}

TEST_F(CliTest, Theta) {
    const auto c6 = write("c6.txt", to_edge_list(cycle_graph(6)));
    const auto witness = path("w.json");
    const auto r = run({"theta", c6, "--emit", witness});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, 10), "theta = 4\n");
    EXPECT_TRUE(verify(cycle_graph(6), representation_from_json(slurp(witness))).ok);

    const auto p5 = write("p5.txt", to_edge_list(path_graph(5)));
    EXPECT_EQ(run({"theta", p5}).out.substr(0, 10), "theta = 2\n");

    const auto c7 = write("c7.txt", to_edge_list(cycle_graph(7)));
    const auto exceeded = run({"theta", c7, "--kmax", "3"});
    EXPECT_EQ(exceeded.code, 1);
    EXPECT_NE(exceeded.out.find("exceeded"), std::string::npos);
    EXPECT_EQ(run({"theta", c7, "--kmax", "0"}).code, 2);
}

TEST_F(CliTest, ThetaGraph6Batch) {
    const auto g6 = write("all.g6", "C~\n" + to_graph6(cycle_graph(5)) + "\n\nC]\n");
    const auto r = run({"theta", g6, "--format", "g6"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "C~  theta = 1\nDhc  theta = 4\nC]  theta = 2\n");
    EXPECT_EQ(run({"theta", g6, "--format", "g6", "--emit", path("x.json")}).code, 2);
    const auto bad = run({"theta", write("bad.g6", "C~\nC\n"), "--format", "g6"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("line 2"), std::string::npos);
    EXPECT_EQ(run({"theta", g6, "--format", "dot"}).code, 2);
}

TEST_F(CliTest, ThetaOutputIndependentOfJobs) {
    const auto g = write("g.txt", to_edge_list(cycle_graph(8).with_toggled(0, 4)));
    const auto one = run({"theta", g, "--jobs", "1"});
    const auto four = run({"theta", g, "--jobs", "4"});
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(one.out, four.out);
}

TEST_F(CliTest, RefuteChain) {
    const auto cert_path = path("cert.json");
    const auto r = run({"refute", "cycle", "9", "--k", "2", "--style", "chain", "--out", cert_path});
    EXPECT_EQ(r.code, 0);
    const auto cert = chain_certificate_from_json(slurp(cert_path));
    EXPECT_EQ(cert.n, 9);
    EXPECT_TRUE(check_chain_certificate(cert));
    EXPECT_EQ(run({"refute", "cycle", "5", "--k", "3", "--style", "chain"}).code, 2);
    EXPECT_EQ(run({"refute", "cycle", "4", "--k", "2", "--style", "chain"}).code, 2);
    const auto to_stdout = run({"refute", "cycle", "8", "--k", "2", "--style", "chain"});
    EXPECT_EQ(to_stdout.code, 0);
    EXPECT_EQ(chain_certificate_from_json(to_stdout.out), two_threshold_refutation_chain(8));
}

TEST_F(CliTest, RefuteSearch) {
    EXPECT_EQ(run({"refute", "cycle", "5", "--k", "3", "--style", "search"}).code, 0);
    const auto found = path("found.json");
    EXPECT_EQ(run({"refute", "cycle", "4", "--k", "2", "--style", "search", "--out", found}).code, 1);
    EXPECT_TRUE(verify(cycle_graph(4), representation_from_json(slurp(found))).ok);
    EXPECT_EQ(run({"refute", "cycle", "5", "--k", "3", "--style", "guess"}).code, 2);
    EXPECT_EQ(run({"refute", "cycle", "5", "--style", "search"}).code, 2);
}

TEST_F(CliTest, UsageAndHelp) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    const auto help = run({"--help"});
    EXPECT_EQ(help.code, 0);
    EXPECT_NE(help.out.find("refute"), std::string::npos);
    EXPECT_EQ(run({"theta", "--help"}).code, 0);
}
