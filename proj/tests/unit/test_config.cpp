#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <ptre/config.hpp>
#include <ptre/error.hpp>

using namespace ptre;

namespace {

SweepConfig parse(const std::string& text)
{
    std::istringstream in(text);
    return parse_config(in, "test.cfg");
}

std::string error_of(const std::string& text)
{
    try {
        parse(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_SUITE("config")
{
    TEST_CASE("defaults")
    {
        const SweepConfig cfg = default_config();
        CHECK(cfg.system.epsilon1 == 5.0);
        CHECK(cfg.system.epsilon2 == 4.5);
        CHECK(cfg.system.J == 1.0);
        CHECK(cfg.phonon.omega_c == 5.0);
        CHECK(cfg.phonon.beta_v == 1.0);
        CHECK(cfg.beta_p == 0.02);
        CHECK(cfg.beta_t == 1.0);
        CHECK(cfg.gamma_p == 0.01);
        CHECK(cfg.gamma_t == 0.01);
        REQUIRE(cfg.alpha_grid.size() == 60);
        CHECK(cfg.alpha_grid.front() == 1e-3);
        CHECK(cfg.alpha_grid.back() == 50.0);
        CHECK(cfg.beta_v_grid.empty());
        CHECK_NOTHROW(cfg.validate());
        const auto b = default_beta_v_grid();
        REQUIRE(b.size() == 20);
        CHECK(b.front() == 0.1);
        CHECK(b.back() == 2.0);
    }

    TEST_CASE("grids")
    {
        const auto g = log_grid(1e-2, 1e2, 5);
        CHECK(g[2] == doctest::Approx(1.0));
        CHECK(g.back() == 1e2);
        CHECK(log_grid(3.0, 3.0, 1).size() == 1);
        CHECK_THROWS_AS(log_grid(0.0, 1.0, 3), ConfigError);
        const auto l = linear_grid(0.0, 1.0, 5);
        CHECK(l[1] == doctest::Approx(0.25));
        CHECK_THROWS_AS(linear_grid(1.0, 0.0, 3), ConfigError);
    }

    TEST_CASE("parsing keys, comments and lists")
    {
        const SweepConfig cfg = parse("# engine\n"
                                      "epsilon1 = 6   # pump level\n"
                                      "  J=0.5\n"
                                      "\n"
                                      "alpha_grid = 0.1, 1, 10\n"
                                      "beta_v_grid = 0.5,1\n"
                                      "gamma_t = 0.02\n"
                                      "n_p_override = 3\n"
                                      "columns = alpha, eta, flags\n"
                                      "output = out.csv\n"
                                      "quad_rel_tol = 1e-8\n");
        CHECK(cfg.system.epsilon1 == 6.0);
        CHECK(cfg.system.J == 0.5);
        CHECK(cfg.alpha_grid == std::vector<double>{0.1, 1.0, 10.0});
        CHECK(cfg.beta_v_grid == std::vector<double>{0.5, 1.0});
        CHECK(cfg.gamma_t == 0.02);
        CHECK(cfg.pump().n == 3.0);
        CHECK(cfg.trap().n == doctest::Approx(1.0 / std::expm1(4.5)));
        CHECK(cfg.columns == std::vector<std::string>{"alpha", "eta", "flags"});
        CHECK(cfg.output == "out.csv");
        CHECK(cfg.quadrature.rel_tol == 1e-8);
    }

    TEST_CASE("grid triples")
    {
        const SweepConfig cfg = parse("alpha_min = 0.01\nalpha_max = 10\nalpha_points = 4\n"
                                      "beta_v_min = 0.5\nbeta_v_points = 4\n");
        REQUIRE(cfg.alpha_grid.size() == 4);
        CHECK(cfg.alpha_grid[1] == doctest::Approx(0.1));
        REQUIRE(cfg.beta_v_grid.size() == 4);
        CHECK(cfg.beta_v_grid.front() == 0.5);
        CHECK(cfg.beta_v_grid.back() == 2.0);
    }

    TEST_CASE("errors carry the source and line")
    {
        CHECK(error_of("alpha = 1\nfoo = 2\n").find("test.cfg:2") != std::string::npos);
        CHECK(error_of("foo = 2\n").find("unknown key 'foo'") != std::string::npos);
        CHECK(error_of("alpha = one\n").find("finite number") != std::string::npos);
        CHECK(error_of("alpha 1\n").find("key = value") != std::string::npos);
        CHECK(error_of("alpha_points = 2.5\n").find("positive integer") != std::string::npos);
        CHECK(error_of("alpha_grid = 1, 2\nalpha_max = 5\n").find("conflicts")
              != std::string::npos);
        CHECK(error_of("beta_v_grid = 1\nbeta_v_min = 0.5\n").find("conflicts")
              != std::string::npos);
        CHECK(error_of("alpha_grid = 2, 1\n").find("strictly increasing") != std::string::npos);
        CHECK(error_of("alpha_grid = -1, 1\n").find(">= 0") != std::string::npos);
        CHECK(error_of("beta_v_grid = 0, 1\n").find("> 0") != std::string::npos);
        CHECK(error_of("columns = alpha, bogus\n").find("bogus") != std::string::npos);
        CHECK(error_of("beta_p = 0\n").find("config:") != std::string::npos);
        CHECK(error_of("omega_c = -1\n").find("omega_c") != std::string::npos);
        CHECK(error_of("quad_rel_tol = 0\n").find("rel_tol") != std::string::npos);
        CHECK(error_of("epsilon1 = 1e999\n").find("finite number") != std::string::npos);
    }

    TEST_CASE("describe round-trips")
    {
        SweepConfig cfg = parse("alpha_grid = 0.1, 0.30000000000000004, 7\nbeta_v_grid = 0.5\n"
                                "n_t_override = 0.25\ncolumns = alpha, eta\n");
        std::string text;
        for (const auto& line : cfg.describe())
            text += line + "\n";
        const SweepConfig again = parse(text);
        CHECK(again.describe() == cfg.describe());
        CHECK(again.alpha_grid == cfg.alpha_grid);
        CHECK(again.n_t_override == cfg.n_t_override);
    }

    TEST_CASE("load from file")
    {
        const std::string path = "ptre_test_config.cfg";
        {
            std::ofstream out(path);
            out << "alpha = 2\nalpha_grid = 1\n";
        }
        CHECK(load_config(path).phonon.alpha == 2.0);
        std::remove(path.c_str());
        CHECK_THROWS_AS(load_config("does/not/exist.cfg"), ConfigError);
    }
}
