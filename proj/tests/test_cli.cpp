#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef SPHEROID_CLI_PATH
#error "SPHEROID_CLI_PATH must point at the command-line binary"
#endif

namespace {

namespace fs = std::filesystem;

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Runs the binary through the shell, capturing stdout/stderr and the exit
// code. `env_prefix` may carry VAR=value assignments.
CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    const fs::path dir = fs::temp_directory_path() / "spheroid_cli_tests";
    fs::create_directories(dir);
    const fs::path out_path = dir / ("out" + std::to_string(counter) + ".txt");
    const fs::path err_path = dir / ("err" + std::to_string(counter) + ".txt");
    ++counter;

    std::string cmd = env_prefix;
    if (!cmd.empty()) cmd += ' ';
    cmd += std::string(SPHEROID_CLI_PATH) + " " + args + " > " + out_path.string() +
           " 2> " + err_path.string();
    const int status = std::system(cmd.c_str());

    CliResult r;
    r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    return r;
}

fs::path scratch_file(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "spheroid_cli_tests";
    fs::create_directories(dir);
    return dir / name;
}

int count_lines(const std::string& text) {
    int n = 0;
    for (char c : text) {
        if (c == '\n') ++n;
    }
    return n;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("free subcommand emits the closed-form table") {
    const auto r = run_cli("free --n-max 3 --lambda 1 --eps 0.1");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("n,l,E0,dE1,E,dE1_err_est\n", 0) == 0);
    CHECK(r.out.find("\n0,,0,0.025,0.025,") != std::string::npos);
    CHECK(r.out.find("\n1,,1,-0.05,0.95,") != std::string::npos);
    CHECK(r.out.find("\n2,,3,-0.225,2.775,") != std::string::npos);
    CHECK(r.out.find("\n3,,6,-0.5,5.5,") != std::string::npos);
}

TEST_CASE("osc subcommand with a preset") {
    const auto r = run_cli("osc --preset fig2b --n-max 3");
    REQUIRE(r.exit_code == 0);
    CHECK(count_lines(r.out) == 11);  // header + 1 + 2 + 3 + 4 rows
    // n = 3 splits into 4 rows with 2 distinct energies.
    CHECK(r.out.find("3,-3,") != std::string::npos);
    CHECK(r.out.find("3,-1,") != std::string::npos);
    CHECK(r.out.find("3,1,") != std::string::npos);
    CHECK(r.out.find("3,3,") != std::string::npos);
    CHECK(r.out.find("11.436953479") != std::string::npos);
    CHECK(r.out.find("11.6448917913") != std::string::npos);
    // Unperturbed column carries the closed-form sphere energy.
    CHECK(r.out.find("0,0,1.61803398875,") != std::string::npos);

    SUBCASE("byte-identical across runs") {
        const auto again = run_cli("osc --preset fig2b --n-max 3");
        REQUIRE(again.exit_code == 0);
        CHECK(again.out == r.out);
    }
    SUBCASE("explicit flags override the preset") {
        const auto tweaked = run_cli("osc --preset fig2b --omega 1.4 --n-max 3");
        const auto direct = run_cli("osc --lambda 1 --eps 0.1 --omega 1.4 --n-max 3");
        REQUIRE(tweaked.exit_code == 0);
        CHECK(tweaked.out == direct.out);
        CHECK(tweaked.out != r.out);
    }
}

TEST_CASE("levels subcommand writes the table and the diagram") {
    const auto csv = scratch_file("levels.csv");
    const auto svg = scratch_file("levels.svg");
    fs::remove(csv);
    fs::remove(svg);
    const auto r = run_cli("levels --preset fig2a --n-max 2 --out " + csv.string() +
                           " --svg " + svg.string());
    REQUIRE(r.exit_code == 0);
    REQUIRE(fs::exists(csv));
    REQUIRE(fs::exists(svg));
    const std::string table = slurp(csv);
    CHECK(table.rfind("n,l,E0,dE1,E,dE1_err_est\n", 0) == 0);
    CHECK(count_lines(table) == 7);  // header + 1 + 2 + 3
    const std::string diagram = slurp(svg);
    CHECK(diagram.rfind("<svg", 0) == 0);
    CHECK(diagram.find("E0 (sphere)") != std::string::npos);
    CHECK(diagram.find("E0 + dE1 (spheroid)") != std::string::npos);
    CHECK(diagram.find("l=0") != std::string::npos);
    CHECK(diagram.find("</svg>") != std::string::npos);
}

TEST_CASE("validate subcommand reports suites as json") {
    const auto r = run_cli("validate --suite specfun --suite numerics");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("pass").get<bool>());
    REQUIRE(doc.at("suites").size() == 2);
    CHECK(doc.at("suites").at(0).at("suite").get<std::string>() == "specfun");
    CHECK(doc.at("suites").at(1).at("suite").get<std::string>() == "numerics");
    for (const auto& suite : doc.at("suites")) {
        CHECK(suite.at("pass").get<bool>());
        CHECK(suite.at("checks").size() >= 4);
    }
    SUBCASE("unknown suite is a usage error") {
        const auto bad = run_cli("validate --suite nonsense");
        CHECK(bad.exit_code == 2);
        CHECK(bad.err.find("nonsense") != std::string::npos);
    }
}

TEST_CASE("geometry subcommand emits diagnostics") {
    const auto r = run_cli("geometry --lambda 1 --eps 0.1");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("pass").get<bool>());
    CHECK(doc.at("surface").at("lambda").get<double>() == doctest::Approx(1.0));
    CHECK(doc.at("surface").at("eps").get<double>() == doctest::Approx(0.1));
    REQUIRE(doc.at("points").size() == 8);
    CHECK(doc.at("worst").at("metric_dev").get<double>() <= 1e-12);
    CHECK(doc.at("worst").at("round_trip_err").get<double>() <= 1e-12);
    SUBCASE("deterministic sample points") {
        const auto again = run_cli("geometry --lambda 1 --eps 0.1");
        CHECK(again.out == r.out);
    }
}

TEST_CASE("config file and environment feed the precedence chain") {
    const auto cfg = scratch_file("config.json");
    {
        std::ofstream f(cfg);
        f << R"({"preset": "fig2b", "omega": 1.4, "n_max": 2})";
    }
    SUBCASE("config file resolves preset then scalars") {
        const auto via_config = run_cli("osc --config " + cfg.string());
        const auto direct = run_cli("osc --lambda 1 --eps 0.1 --omega 1.4 --n-max 2");
        REQUIRE(via_config.exit_code == 0);
        CHECK(via_config.out == direct.out);
    }
    SUBCASE("flags beat the config file") {
        const auto r = run_cli("osc --config " + cfg.string() + " --omega 1.0");
        const auto direct = run_cli("osc --preset fig2b --n-max 2");
        REQUIRE(r.exit_code == 0);
        CHECK(r.out == direct.out);
    }
    SUBCASE("malformed config is a usage error") {
        const auto bad_cfg = scratch_file("bad.json");
        {
            std::ofstream f(bad_cfg);
            f << "{not json";
        }
        const auto r = run_cli("osc --config " + bad_cfg.string());
        CHECK(r.exit_code == 2);
    }
    SUBCASE("environment overrides the quadrature tolerance") {
        const auto r = run_cli("osc --preset fig2b --n-max 2", "SPHEROID_QUAD_TOL=1e-6");
        REQUIRE(r.exit_code == 0);
        CHECK(r.out.rfind("n,l,", 0) == 0);
        const auto bad = run_cli("osc --preset fig2b --n-max 2", "SPHEROID_QUAD_TOL=banana");
        CHECK(bad.exit_code == 2);
        CHECK(bad.err.find("SPHEROID_QUAD_TOL") != std::string::npos);
    }
}

TEST_CASE("usage and domain errors exit with code 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("osc --preset fig9").exit_code == 2);
    CHECK(run_cli("free --lambda not-a-number").exit_code == 2);
    CHECK(run_cli("free --lambda -1").exit_code == 2);   // lambda must be positive
    CHECK(run_cli("free --eps -1.5").exit_code == 2);    // eps must exceed -1
    CHECK(run_cli("osc --omega -3").exit_code == 2);     // omega must be nonnegative
    CHECK(run_cli("free --n-max -2").exit_code == 2);    // n_max must be nonnegative
    SUBCASE("help exits cleanly") {
        const auto r = run_cli("--help");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("osc") != std::string::npos);
    }
    SUBCASE("unwritable output path exits with code 1") {
        const auto r = run_cli("free --n-max 1 --out /nonexistent-dir/out.csv");
        CHECK(r.exit_code == 1);
    }
}

}  // TEST_SUITE
