#include "doctest.h"

#include <pollyanna/certificate.hh>
#include <pollyanna/cli.hh>
#include <pollyanna/constructions.hh>
#include <pollyanna/dimacs.hh>
#include <pollyanna/provider.hh>

#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace pollyanna;
namespace fs = std::filesystem;

namespace
{
    struct Outcome
    {
        int code;
        std::string out;
        std::string err;
    };

    auto run_cli(const std::vector<std::string> & args) -> Outcome
    {
        std::ostringstream out, err;
        auto code = cli::run(args, out, err);
        return {code, out.str(), err.str()};
    }

    auto slurp(const fs::path & path) -> std::string
    {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    struct Workspace
    {
        fs::path dir;

        Workspace() :
            dir(fs::temp_directory_path() / ("pollyanna-cli-" + std::to_string(std::random_device{}())))
        {
            fs::create_directories(dir);
        }

        ~Workspace()
        {
            std::error_code ec;
            fs::remove_all(dir, ec);
        }

        auto operator/(const std::string & name) const -> std::string { return (dir / name).string(); }
    };
}

TEST_CASE("gen and solve")
{
    Workspace ws;

    auto gen = run_cli({"gen", "tower", "--r", "4", "-o", ws / "t4.col"});
    CHECK(gen.code == cli::success);
    auto t4 = read_dimacs_file(ws / "t4.col");
    CHECK(t4.order() == 11);
    CHECK(t4 == mycielski_tower(4).graph);
    auto claims = read_claims(ws / "t4.claims");
    CHECK(claims.r == 2);
    CHECK(claims.m == 4);
    CHECK(claims.claimed_omega == 2);
    CHECK(claims.claimed_chi_lb == 4);

    auto chi = run_cli({"solve", "chi", ws / "t4.col"});
    CHECK(chi.code == cli::success);
    CHECK(chi.out.rfind("chi 4\n", 0) == 0);
    std::istringstream cert(chi.out);
    CHECK(check_certificate(t4, read_certificate(cert)));

    auto omega = run_cli({"solve", "omega", ws / "t4.col", "-o", ws / "t4.omega"});
    CHECK(omega.code == cli::success);
    std::ifstream omega_in(ws / "t4.omega");
    auto omega_cert = read_certificate(omega_in);
    CHECK(std::get<CliqueCert>(omega_cert).vertices.size() == 2);

    auto k3 = run_cli({"solve", "k-color", "--k", "3", ws / "t4.col"});
    CHECK(k3.code == cli::success);
    CHECK(k3.out == "not-colorable 3\n");
    auto k4 = run_cli({"solve", "k-color", "--k", "4", ws / "t4.col"});
    CHECK(k4.code == cli::success);
    CHECK(k4.out.rfind("colorable 4\n", 0) == 0);

    auto chi_n = run_cli({"solve", "chi-n", "--n", "1", ws / "t4.col"});
    CHECK(chi_n.code == cli::success);
    CHECK(chi_n.out.rfind("chi-n 1 1\n", 0) == 0);

    auto oracle = run_cli({"oracle", "chi", ws / "t4.col"});
    CHECK(oracle.code == cli::success);
    CHECK(oracle.out.find('4') != std::string::npos);

    run_cli({"solve", "chi", ws / "t4.col", "-o", ws / "t4.chi"});
    auto valid = run_cli({"verify", "certificate", ws / "t4.col", ws / "t4.chi"});
    CHECK(valid.code == cli::success);
}

TEST_CASE("gen mycielski and block")
{
    Workspace ws;
    write_dimacs_file(ws / "c5.col", cycle_graph(5));
    CHECK(run_cli({"gen", "mycielski", ws / "c5.col", "-o", ws / "g.col"}).code == cli::success);
    CHECK(read_dimacs_file(ws / "g.col").order() == 11);

    CHECK(run_cli({"gen", "block", "--r", "2", "--m", "3", "-o", ws / "x23.col"}).code == cli::success);
    auto x = read_dimacs_file(ws / "x23.col");
    CHECK(x == build_block(make_block_spec(2, 3)).graph);
    CHECK(read_claims(ws / "x23.claims").claimed_chi_lb == 3);

    write_dimacs_file(ws / "k3.col", complete_graph(3));
    CHECK(run_cli({"gen", "block", "--r", "3", "--m", "1", "--provider-file", ws / "k3.col", "-o", ws / "x31.col"}).code == cli::success);
    CHECK(read_dimacs_file(ws / "x31.col").order() == 8);
}

TEST_CASE("verify subcommands")
{
    SUBCASE("nonpoly with p(x) = x^3")
    {
        auto r = run_cli({"verify", "nonpoly", "--r", "2", "--poly", "0,0,0,1"});
        CHECK(r.code == cli::success);
        auto j = nlohmann::json::parse(r.out);
        auto & values = j["checks"][0]["values"];
        bool saw_m = false, saw_claim = false;
        for (auto & v : values) {
            if (v["name"] == "m") {
                saw_m = true;
                CHECK(v["value"] == 9);
            }
            if (v["name"] == "chi")
                saw_claim = v["provenance"] == "CLAIM";
        }
        CHECK(saw_m);
        CHECK(saw_claim);
    }

    SUBCASE("table format")
    {
        auto r = run_cli({"verify", "block", "--r", "2", "--m", "3", "--format", "table"});
        CHECK(r.code == cli::success);
        CHECK(r.out.find("block-observation") != std::string::npos);
        CHECK(r.out.find("overall pass") != std::string::npos);
    }

    SUBCASE("goodness, pollyanna, lemma and all")
    {
        Workspace ws;
        write_dimacs_file(ws / "c5.col", cycle_graph(5));
        CHECK(run_cli({"verify", "mycielski-lemma", ws / "c5.col"}).code == cli::success);
        CHECK(run_cli({"verify", "goodness", "--r", "2", "--m-min", "1", "--m-max", "3"}).code == cli::success);

        auto polly = run_cli({"verify", "pollyanna", "--phi", "1,3,7,9"});
        CHECK(polly.code == cli::success);
        CHECK(polly.out.find("\"M_F\"") != std::string::npos);

        CHECK(run_cli({"verify", "all", "--r", "2", "--m-min", "1", "--m-max", "3"}).code == cli::success);
    }

    SUBCASE("slice file")
    {
        Workspace ws;
        write_dimacs_file(ws / "k3.col", complete_graph(3));
        std::ofstream(ws / "slice.json") << R"({"ranges": [{"r": 2, "m_min": 1, "m_max": 2}, {"r": 3, "m_min": 1, "m_max": 1}],
            "providers": [{"r": 3, "m": 1, "file": "k3.col"}], "polynomials": {"2": "0,0,1", "3": "0"}, "phi": [1, 3, 7]})";
        auto r = run_cli({"verify", "all", "--slice", ws / "slice.json"});
        CHECK(r.code == cli::success);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["status"] == "pass");
        CHECK(j["checks"].back()["check"] == "pollyanna-bound");
    }
}

TEST_CASE("exit codes")
{
    Workspace ws;

    SUBCASE("usage and parse errors give 2")
    {
        CHECK(run_cli({}).code == cli::usage_error);
        CHECK(run_cli({"frobnicate"}).code == cli::usage_error);
        CHECK(run_cli({"gen", "tower"}).code == cli::usage_error);
        CHECK(run_cli({"gen", "tower", "--r", "1", "-o", ws / "x.col"}).code == cli::usage_error);
        CHECK(run_cli({"solve", "chi", "--budget", "0", ws / "x.col"}).code == cli::usage_error);
        std::ofstream(ws / "bad.col") << "p edge 2 1\ne 1 3\n";
        auto bad = run_cli({"solve", "chi", ws / "bad.col"});
        CHECK(bad.code == cli::usage_error);
        CHECK(bad.err.find("line 2") != std::string::npos);
        CHECK(run_cli({"verify", "pollyanna", "--phi", "1,5,2"}).code == cli::usage_error);
        CHECK(run_cli({"verify", "nonpoly", "--r", "2", "--poly", "1,-1"}).code == cli::usage_error);
        write_dimacs_file(ws / "k3.col", complete_graph(3));
        CHECK(run_cli({"verify", "mycielski-lemma", ws / "k3.col"}).code == cli::usage_error);
    }

    SUBCASE("claim mismatch and violations give 1")
    {
        write_dimacs_file(ws / "k4.col", complete_graph(4));
        auto mismatch = run_cli({"verify", "block", "--r", "3", "--m", "1", "--provider-file", ws / "k4.col"});
        CHECK(mismatch.code == cli::violated);
        CHECK_FALSE(mismatch.err.empty());

        write_dimacs_file(ws / "k2.col", complete_graph(2));
        std::ofstream(ws / "bad.chi") << "chi 1\ncolor 0 1\ncolor 1 1\n";
        CHECK(run_cli({"verify", "certificate", ws / "k2.col", ws / "bad.chi"}).code == cli::violated);
    }

    SUBCASE("timeouts give 3")
    {
        write_dimacs_file(ws / "t7.col", mycielski_tower(7).graph);
        auto r = run_cli({"solve", "chi", "--budget", "0.2", ws / "t7.col"});
        CHECK(r.code == cli::inconclusive);
        CHECK(r.err.find("timed out") != std::string::npos);
        std::istringstream cert(r.out);
        CHECK(check_certificate(mycielski_tower(7).graph, read_certificate(cert)));
    }

    SUBCASE("budget from the environment")
    {
        write_dimacs_file(ws / "t7.col", mycielski_tower(7).graph);
        ::setenv(cli::budget_variable, "0.2", 1);
        auto r = run_cli({"solve", "k-color", "--k", "6", ws / "t7.col"});
        ::unsetenv(cli::budget_variable);
        CHECK(r.code == cli::inconclusive);
        CHECK(r.out == "unknown 6\n");
    }

    CHECK(run_cli({"--help"}).code == cli::success);
}

TEST_CASE("round trip of generated graphs")
{
    Workspace ws;
    for (long r = 2; r <= 7; ++r) {
        auto path = ws / ("t" + std::to_string(r) + ".col");
        REQUIRE(run_cli({"gen", "tower", "--r", std::to_string(r), "-o", path}).code == cli::success);
        auto g = read_dimacs_file(path);
        CHECK(g == mycielski_tower(r).graph);
        auto again = ws / "again.col";
        write_dimacs_file(again, g);
        CHECK(slurp(again).find("p edge " + std::to_string(g.order()) + " " + std::to_string(g.size())) != std::string::npos);
        CHECK(read_dimacs_file(again) == g);
    }
}

TEST_CASE("deterministic mode is byte-identical")
{
    Workspace ws;
    run_cli({"gen", "block", "--r", "2", "--m", "4", "-o", ws / "x24.col"});

    auto a = run_cli({"solve", "chi", "--deterministic", ws / "x24.col"});
    auto b = run_cli({"solve", "chi", "--deterministic", ws / "x24.col"});
    CHECK(a.out == b.out);

    auto args = std::vector<std::string>{"verify", "goodness", "--r", "2", "--m-min", "1", "--m-max", "4",
        "--strategy", "random", "--limit", "50", "--seed", "9", "--deterministic"};
    auto g1 = run_cli(args);
    auto g2 = run_cli(args);
    CHECK(g1.code == cli::success);
    CHECK(g1.out == g2.out);
    CHECK(g1.out.find("\"seed\": 9") != std::string::npos);

    auto v1 = run_cli({"verify", "all", "--r", "2", "--m-min", "1", "--m-max", "3", "--deterministic"});
    auto v2 = run_cli({"verify", "all", "--r", "2", "--m-min", "1", "--m-max", "3", "--deterministic"});
    CHECK(v1.out == v2.out);
}

TEST_CASE("installed binary")
{
    Workspace ws;
    auto out = ws / "t3.col";
    auto command = std::string(POLLYANNA_BINARY) + " gen tower --r 3 -o " + out;
    CHECK(std::system(command.c_str()) == 0);
    CHECK(read_dimacs_file(out).order() == 5);

    auto status = std::system((std::string(POLLYANNA_BINARY) + " solve chi " + ws / "missing.col" + " 2>/dev/null").c_str());
    CHECK(WEXITSTATUS(status) == cli::usage_error);
}
