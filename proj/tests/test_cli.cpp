#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// End-to-end checks of the installed binary (path injected by the build).

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(RMSCAT_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) {
        r.output.append(buf, n);
    }
    const int status = pclose(pipe);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("help and version exit cleanly") {
    CHECK(run("--help").exit_code == 0);
    const RunResult v = run("--version");
    CHECK(v.exit_code == 0);
    CHECK(v.output.find("rmscat") != std::string::npos);
}

TEST_CASE("coefficients: CSV to stdout with comment headers") {
    const RunResult r =
        run("coefficients --alpha 1.3 --beta 0.25 --k-min 1.5 --k-max 4 --n 6");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("# artifact", 0) == 0);
    CHECK(r.output.find("k,R,T,") != std::string::npos);
}

TEST_CASE("coefficients: byte-identical across runs") {
    const std::string args =
        "coefficients --alpha 0.7 --beta 0.5 --k-min 1.6 --k-max 5 --n 17";
    CHECK(run(args).output == run(args).output);
}

TEST_CASE("JSON format and file output") {
    const std::string path = "cli_test_measure.json";
    const RunResult r = run("measure --alpha 1 --k-min 1 --k-max 2 --n 3 "
                            "--format json --out " +
                            path);
    CHECK(r.exit_code == 0);
    const std::string body = slurp(path);
    CHECK(body.find("\"metadata\"") != std::string::npos);
    CHECK(body.find("\"columns\"") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("spectrum subcommand") {
    const RunResult r = run("spectrum --alpha 2.5 --beta 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("n,energy,mu,eta") != std::string::npos);
}

TEST_CASE("state subcommand") {
    const RunResult r = run("state --alpha 1 --k 2 --x-min -3 --x-max 3 --n 7");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("x,re_psi,im_psi,abs_psi") != std::string::npos);
}

TEST_CASE("config errors exit with code 2") {
    CHECK(run("coefficients --alpha -3").exit_code == 2);   // invalid parameter
    CHECK(run("coefficients --format yaml").exit_code == 2);  // unknown format
    CHECK(run("state --alpha 1 --beta 1 --k 2.0").exit_code == 2);  // threshold
    CHECK(run("--no-such-flag").exit_code == 2);
}

TEST_CASE("validate: fast preset passes and writes a report") {
    const std::string path = "cli_test_report.txt";
    const RunResult r = run("validate --preset fast --out " + path);
    CHECK(r.exit_code == 0);
    const std::string body = slurp(path);
    CHECK(body.find("[PASS]") != std::string::npos);
    CHECK(body.find("[FAIL]") == std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("show-config prints the effective configuration") {
    const RunResult r = run("--show-config");
    CHECK(r.exit_code == 0);
    CHECK(!r.output.empty());
}

TEST_CASE("flags override config-file values") {
    const std::string cfg = "cli_test_config.toml";
    {
        std::ofstream f(cfg);
        f << "[coefficients]\nalpha = 2.0\nn = 4\n";
    }
    const RunResult r = run("--config " + cfg +
                            " coefficients --alpha 1.0 --k-min 1 --k-max 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("# alpha = 1\n") != std::string::npos);
    // n came from the file: 4 data rows
    std::istringstream is(r.output);
    std::string line;
    int rows = 0;
    while (std::getline(is, line)) {
        if (!line.empty() && line[0] != '#' && line.find("k,") != 0) ++rows;
    }
    CHECK(rows == 4);
    std::remove(cfg.c_str());
}
