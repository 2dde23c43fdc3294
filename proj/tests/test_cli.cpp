// Runs the planes executable and checks output and exit status.
#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <regex>
#include <string>

namespace {

struct CliRun {
    int status = -1;
    std::string out;
};

CliRun run(const std::string& args) {
    const std::string cmd = std::string(PLANES_CLI) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string strip_elapsed(const std::string& s) {
    static const std::regex elapsed("\"elapsed_ms\":[0-9.eE+-]+");
    return std::regex_replace(s, elapsed, "\"elapsed_ms\":_");
}

}  // namespace

TEST(Cli, Order) {
    const CliRun r = run("order PSL 2 13");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "|PSL(2,13)| = 1092 = 2^2*3*7*13\n");
}

TEST(Cli, Factor) {
    const CliRun r = run("factor 273");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "273 = 3*7*13\n");
}

TEST(Cli, Index) {
    const CliRun r = run("index PSU 6 2 --parabolic 1");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "|PSU(6,2):P_1| = 693 = 3^2*7*11\n");
    EXPECT_EQ(run("index E6 7 - --parabolic 1").status, 2);
    EXPECT_EQ(run("index PSL 3 4 --parabolic 3").status, 2);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("frobnicate").status, 2);
    EXPECT_EQ(run("verify NO-SUCH-CASE").status, 2);
    EXPECT_EQ(run("order PSL 2 6").status, 2);
    EXPECT_EQ(run("order PSL 2 2048").status, 2);
    EXPECT_EQ(run("order PSL 51 2").status, 2);
    EXPECT_EQ(run("order E6 7").status, 2);
    EXPECT_EQ(run("scan --u-min 1 --u-max 5").status, 2);
    EXPECT_EQ(run("scan --u-min 2 --u-max 1000001").status, 2);
    EXPECT_EQ(run("verify-all --q-max 2048").status, 2);
    EXPECT_EQ(run("verify-all --jobs 0").status, 2);
    EXPECT_EQ(run("verify-all --format xml").status, 2);
    EXPECT_EQ(run("factor -5").status, 2);
}

TEST(Cli, HelpDocumentsCapsAndExitCodes) {
    const CliRun r = run("--help");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("u <= 1000000"), std::string::npos);
    EXPECT_NE(r.out.find("q <= 1024"), std::string::npos);
    EXPECT_NE(r.out.find("n <= 50"), std::string::npos);
    EXPECT_NE(r.out.find("3 internal error"), std::string::npos);
}

TEST(Cli, VerifyOneCase) {
    const CliRun ok = run("verify PSL2-Q13");
    EXPECT_EQ(ok.status, 0);
    EXPECT_NE(ok.out.find("n_g=91, r_g=7, ratio=13, u=4, d_g=21, v=273"), std::string::npos);
    const CliRun tight = run("verify LJUNGGREN-SCAN --u-max 1000");
    EXPECT_EQ(tight.status, 1);
    EXPECT_NE(tight.out.find("INCONCLUSIVE"), std::string::npos);
}

TEST(Cli, VerifyAllStructuredIsDeterministic) {
    const CliRun a = run("verify-all --format structured");
    const CliRun b = run("verify-all --format structured --jobs 4");
    const CliRun c = run("verify-all --format structured");
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(b.status, 0);
    EXPECT_EQ(strip_elapsed(a.out), strip_elapsed(b.out));
    EXPECT_EQ(strip_elapsed(a.out), strip_elapsed(c.out));
    std::size_t lines = 0;
    for (char ch : a.out) lines += ch == '\n';
    EXPECT_GE(lines, 27u);  // case records plus the summary
    EXPECT_NE(a.out.find("\"record\":\"summary\""), std::string::npos);
}

TEST(Cli, ScanStreamsRowsAndSummary) {
    const CliRun r = run("scan --u-min 2 --u-max 20 --candidates \"PSL 2 13,G2 7\" --format structured");
    EXPECT_EQ(r.status, 0);
    std::size_t rows = 0;
    for (std::size_t pos = 0; (pos = r.out.find("\"record\":\"row\"", pos)) != std::string::npos; ++pos) ++rows;
    EXPECT_EQ(rows, 19u);
    EXPECT_NE(r.out.find("\"rows\":19"), std::string::npos);
}

TEST(Cli, Catalog) {
    const CliRun r = run("catalog --format structured");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("\"label\":\"psl2-half-q(q+1)\""), std::string::npos);
}
