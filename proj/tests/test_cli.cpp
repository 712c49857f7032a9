#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(GJTRIG_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("verify determinism and exit codes") {
    const std::string args = "verify --suite vector-products --trials 40 --seed 42";
    const RunResult a = run(args), b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out); // byte-identical reports
    CHECK(a.out.find("\"schema\": 1") != std::string::npos);
    CHECK(a.out.find("\"pass\": true") != std::string::npos);

    // unknown flag is a usage error
    CHECK(run("verify --nonsense").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    // unknown suite is an execution failure
    CHECK(run("verify --suite no-such-suite --trials 2").exit_code == 1);
}

TEST_CASE("eval subcommands") {
    const RunResult gj = run("eval gj --u 0 --k1 0.8 --k2 0.3");
    CHECK(gj.exit_code == 0);
    CHECK(gj.out.find("\"s\": 0.0") != std::string::npos);
    CHECK(gj.out.find("\"c\": 1.0") != std::string::npos);
    CHECK(gj.out.find("\"d1\": 1.0") != std::string::npos);
    CHECK(gj.out.find("\"d2\": 1.0") != std::string::npos);

    const RunResult kk = run("eval K --k 0");
    CHECK(kk.exit_code == 0);
    CHECK(kk.out.find("1.5707963267948966") != std::string::npos);

    CHECK(run("eval jacobi --u 0.7 --k 0.8").exit_code == 0);
    CHECK(run("eval F --phi 0.5 --k 0.6").exit_code == 0);
}

TEST_CASE("simulate top3 and closed-form error column") {
    const std::string params = "/tmp/gjtrig_top3_params.json";
    {
        std::ofstream f(params);
        f << R"({"I":[1,2,3],"M0":[0,1,1]})";
    }
    const std::string out = "/tmp/gjtrig_top3.csv";
    const RunResult r =
        run("simulate top3 --params " + params + " --t1 10 --rel-tol 1e-10 --out " + out);
    CHECK(r.exit_code == 0);
    std::ifstream csv(out);
    REQUIRE(csv.good());
    std::string header;
    std::getline(csv, header);
    CHECK(header == "t,M1,M2,M3,H1,H2,closed_form_error");
    double max_err = 0.0;
    std::string line;
    int rows = 0;
    while (std::getline(csv, line)) {
        const auto pos = line.rfind(',');
        max_err = std::max(max_err, std::stod(line.substr(pos + 1)));
        ++rows;
    }
    CHECK(rows > 100);
    CHECK(max_err < 1e-6);
}

TEST_CASE("sample emits a configuration record") {
    const RunResult r = run("sample --m 4 --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"m\": 4") != std::string::npos);
    CHECK(r.out.find("\"cos\"") != std::string::npos);
    // deterministic given the seed
    CHECK(run("sample --m 4 --seed 7").out == r.out);
}
