#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <ptre/version.hpp>

namespace {

struct Run
{
    int status = -1;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(PTRE_CLI_PATH) + " " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe))
        r.out += buf.data();
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("version")
    {
        const Run r = run("--version");
        CHECK(r.status == 0);
        CHECK(r.out.find(ptre::version_string) != std::string::npos);
    }

    TEST_CASE("a subcommand is required")
    {
        CHECK(run("").status != 0);
        CHECK(run("frobnicate").status != 0);
    }

    TEST_CASE("point prints every column")
    {
        const Run r = run("point --alpha 1");
        CHECK(r.status == 0);
        CHECK(r.out.find("alpha=1\n") != std::string::npos);
        CHECK(r.out.find("kappa=0.5765489187091") != std::string::npos);
        CHECK(r.out.find("eta=0.858") != std::string::npos);
        CHECK(r.out.find("flags=\n") != std::string::npos);
    }

    TEST_CASE("decoupled point is lossless")
    {
        const Run r = run("point --alpha 0");
        CHECK(r.status == 0);
        const auto at = r.out.find("\neta=");
        REQUIRE(at != std::string::npos);
        CHECK(std::stod(r.out.substr(at + 5)) == doctest::Approx(1.0).epsilon(1e-12));
    }

    TEST_CASE("point reports failure through the exit code")
    {
        const Run r = run("point --alpha -1");
        CHECK(r.status == 2);
        CHECK(r.out.find("alpha") != std::string::npos);
    }

    TEST_CASE("limits")
    {
        const Run r = run("limits");
        CHECK(r.status == 0);
        CHECK(r.out.find("eta0=0.9") != std::string::npos);
        CHECK(r.out.find("tau_z_strong=-0.2449186624") != std::string::npos);
        CHECK(r.out.find("n_p=9.508") != std::string::npos);
    }

    TEST_CASE("bad configuration exits with 2")
    {
        {
            std::ofstream cfg("ptre_cli_bad.cfg");
            cfg << "nonsense = 1\n";
        }
        const Run r = run("point --config ptre_cli_bad.cfg");
        CHECK(r.status == 2);
        CHECK(r.out.find("unknown key 'nonsense'") != std::string::npos);
        std::remove("ptre_cli_bad.cfg");
        CHECK(run("point --config missing.cfg").status == 2);
    }

    TEST_CASE("sweep writes the configured grid")
    {
        {
            std::ofstream cfg("ptre_cli_sweep.cfg");
            cfg << "alpha_grid = 0.1, 1\nbeta_v_grid = 0.5, 1\ncolumns = alpha, beta_v, eta\n";
        }
        const Run r = run("sweep --config ptre_cli_sweep.cfg --out ptre_cli_sweep.csv --threads 2");
        CHECK(r.status == 0);
        CHECK(r.out.find("wrote 4 rows") != std::string::npos);
        const std::string csv = slurp("ptre_cli_sweep.csv");
        CHECK(csv.find("\nalpha,beta_v,eta\n0.10000000000000001,0.5,") != std::string::npos);
        CHECK(csv.find("# output = ptre_cli_sweep.csv") != std::string::npos);
        std::remove("ptre_cli_sweep.cfg");
        std::remove("ptre_cli_sweep.csv");
        CHECK(run("sweep --alpha 1").status == 2);
    }
}
