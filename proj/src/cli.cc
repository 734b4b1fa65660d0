#include <pollyanna/cli.hh>
#include <pollyanna/constructions.hh>
#include <pollyanna/dimacs.hh>
#include <pollyanna/errors.hh>
#include <pollyanna/verification.hh>

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <thread>

using nlohmann::json;
using std::function;
using std::ostream;
using std::string;
using std::to_string;
using std::vector;

namespace fs = std::filesystem;

namespace pollyanna::cli
{
    namespace
    {
        struct CommandConfig
        {
            string input, output, certificate, slice_file;
            long r = 2, m = 1, n = 1, k = 3, m_min = 1, m_max = 1;
            double budget = 120.0;
            string format = "json";
            bool deterministic = false;
            unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
            std::uint64_t seed = default_seed;
            string poly = "0,1";
            string phi;
            string strategy = "exhaustive";
            string provider_file;
            vector<string> providers;
            std::size_t limit = 1000;
            long max_exact_tower = 5;
        };

        auto default_budget() -> double
        {
            if (auto env = std::getenv(budget_variable)) {
                try {
                    auto value = std::stod(env);
                    if (value > 0)
                        return value;
                }
                catch (const std::exception &) {
                }
            }
            return 120.0;
        }

        auto options_from(const CommandConfig & c) -> VerifyOptions
        {
            VerifyOptions o;
            o.budget_seconds = c.budget;
            o.jobs = c.deterministic ? 1 : c.jobs;
            o.seed = c.seed;
            o.sample_limit = c.limit;
            o.max_exact_tower = c.max_exact_tower;
            return o;
        }

        auto parse_table(const string & text) -> BoundingTable
        {
            BoundingTable table;
            std::stringstream ss(text);
            for (string item; std::getline(ss, item, ',');) {
                try {
                    size_t used = 0;
                    table.values.push_back(std::stoll(item, &used));
                    if (used != item.size())
                        throw InvalidParameter("bad entry");
                }
                catch (const std::exception &) {
                    throw InvalidParameter("bounding table entry '" + item + "' is not an integer");
                }
            }
            return table;
        }

        /// "R:M:FILE"
        auto add_provider(ProviderRegistry & registry, const string & text, const fs::path & base = {}) -> void
        {
            auto first = text.find(':');
            auto second = first == string::npos ? string::npos : text.find(':', first + 1);
            if (second == string::npos)
                throw InvalidParameter("provider '" + text + "' is not of the form R:M:FILE");
            try {
                auto r = std::stol(text.substr(0, first));
                auto m = std::stol(text.substr(first + 1, second - first - 1));
                fs::path file = text.substr(second + 1);
                registry.add_file(r, m, file.is_absolute() || base.empty() ? file : base / file);
            }
            catch (const std::logic_error &) {
                throw InvalidParameter("provider '" + text + "' is not of the form R:M:FILE");
            }
        }

        auto registry_from(const CommandConfig & c) -> ProviderRegistry
        {
            ProviderRegistry registry;
            for (auto & p : c.providers)
                add_provider(registry, p);
            if (! c.provider_file.empty())
                registry.add_file(c.r, c.m, c.provider_file);
            return registry;
        }

        auto emit(ostream & out, const CommandConfig & c, Summary summary) -> int
        {
            summary.context["seed"] = c.seed;
            summary.context["budget_seconds"] = c.budget;
            summary.context["jobs"] = c.deterministic ? 1u : c.jobs;
            if (c.format == "table")
                render_table(out, summary);
            else
                out << to_json(summary).dump(2) << '\n';
            return exit_code(summary.status());
        }

        auto single(CheckReport report) -> Summary
        {
            Summary s;
            s.checks.push_back(std::move(report));
            return s;
        }

        auto write_graph(const CommandConfig & c, const Graph & g, const vector<string> & comments, const ProviderClaims & claims) -> void
        {
            write_dimacs_file(c.output, g, comments);
            write_claims(claims_path_for(c.output), claims);
        }

        auto write_output(const CommandConfig & c, ostream & out, const function<void(ostream &)> & write) -> void
        {
            if (c.output.empty())
                write(out);
            else {
                std::ofstream f(c.output);
                if (! f)
                    throw ParseError("cannot open '" + c.output + "' for writing");
                write(f);
            }
        }

        auto read_slice(const fs::path & path) -> VerifyAllConfig
        {
            std::ifstream in(path);
            if (! in)
                throw ParseError("cannot open '" + path.string() + "'");
            VerifyAllConfig config;
            try {
                auto j = json::parse(in);
                auto ranges = j.value("ranges", json::array());
                for (auto & range : ranges)
                    config.slice.ranges.push_back(ClassSpec::Range{range.at("r").get<long>(),
                            range.at("m_min").get<long>(), range.at("m_max").get<long>()});
                auto providers = j.value("providers", json::array());
                for (auto & p : providers)
                    add_provider(config.slice.providers, to_string(p.at("r").get<long>()) + ":" +
                            to_string(p.at("m").get<long>()) + ":" + p.at("file").get<string>(), path.parent_path());
                auto polynomials = j.value("polynomials", json::object());
                for (auto & [r, poly] : polynomials.items())
                    config.polynomials.emplace(std::stol(r), Polynomial::parse(poly.get<string>()));
                if (j.contains("phi"))
                    config.table = BoundingTable{j.at("phi").get<vector<std::int64_t>>()};
            }
            catch (const json::exception & e) {
                throw ParseError(path.string() + ": " + e.what());
            }
            catch (const std::logic_error & e) {
                throw ParseError(path.string() + ": " + e.what());
            }
            return config;
        }

        auto build_app(CLI::App & app, CommandConfig & c, function<int()> & action, ostream & out, ostream & err) -> void
        {
            app.require_subcommand(1);

            auto budget_opt = [&](CLI::App * cmd) {
                cmd->add_option("--budget", c.budget, "Seconds per exact solve")->check(CLI::PositiveNumber);
            };
            auto report_opts = [&](CLI::App * cmd) {
                budget_opt(cmd);
                cmd->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"json", "table"}));
                cmd->add_flag("--deterministic", c.deterministic, "Single worker, reproducible output");
                cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
                cmd->add_option("--seed", c.seed, "Seed for random sampling");
                cmd->add_option("--max-exact-tower", c.max_exact_tower, "Largest tower level whose chi is re-solved");
            };
            auto provider_opts = [&](CLI::App * cmd) {
                cmd->add_option("--provider", c.providers, "Core graph file for r >= 3 as R:M:FILE");
            };

            // gen
            auto gen = app.add_subcommand("gen", "Generate graphs (DIMACS plus a .claims sidecar)");
            gen->require_subcommand(1);

            auto gen_mycielski = gen->add_subcommand("mycielski", "Mycielskian of a graph");
            gen_mycielski->add_option("input", c.input)->required()->check(CLI::ExistingFile);
            gen_mycielski->add_option("-o,--output", c.output)->required();
            budget_opt(gen_mycielski);
            gen_mycielski->callback([&] {
                action = [&] {
                    auto g = read_dimacs_file(c.input);
                    auto m = mycielskian(g).graph;
                    auto omega = clique_number(m, Budget::seconds(c.budget));
                    auto chi = chromatic_number(g, Budget::seconds(c.budget));
                    ProviderClaims claims{static_cast<long>(omega.value), static_cast<long>(chi.lower_bound + 1),
                        static_cast<long>(omega.value), static_cast<long>(chi.lower_bound + 1), "Mycielskian of " + c.input};
                    write_graph(c, m, {"Mycielskian of " + c.input}, claims);
                    return success;
                };
            });

            auto gen_tower = gen->add_subcommand("tower", "Mycielski tower T_r");
            gen_tower->add_option("--r", c.r)->required();
            gen_tower->add_option("-o,--output", c.output)->required();
            gen_tower->callback([&] {
                action = [&] {
                    auto t = mycielski_tower(c.r);
                    write_graph(c, t.graph, {"Mycielski tower T_" + to_string(c.r)},
                            ProviderClaims{2, c.r, 2, c.r, "Mycielski tower T_" + to_string(c.r)});
                    return success;
                };
            });

            auto gen_block = gen->add_subcommand("block", "Tagged block X_{r,m}");
            gen_block->add_option("--r", c.r)->required();
            gen_block->add_option("--m", c.m)->required();
            gen_block->add_option("--provider-file", c.provider_file, "Core graph for r >= 3");
            gen_block->add_option("-o,--output", c.output)->required();
            budget_opt(gen_block);
            gen_block->callback([&] {
                action = [&] {
                    auto registry = registry_from(c);
                    auto x = build_block(make_block_spec(c.r, c.m, registry.resolve(c.r, c.m)), Budget::seconds(c.budget));
                    auto name = "X_{" + to_string(c.r) + "," + to_string(c.m) + "}";
                    write_graph(c, x.graph, {"block " + name + ", core " + x.core_source + ", tag T_" + to_string(c.r) +
                            " on vertices " + to_string(x.core.size() + 1) + ".." + to_string(x.graph.order())},
                            ProviderClaims{c.r, c.m, c.r, c.m, name + " = core + T_" + to_string(c.r)});
                    return success;
                };
            });

            // solve
            auto solve = app.add_subcommand("solve", "Exact solvers with certificates");
            solve->require_subcommand(1);

            auto solve_output = [&](CLI::App * cmd) {
                cmd->add_option("input", c.input)->required()->check(CLI::ExistingFile);
                cmd->add_option("-o,--output", c.output, "Write the certificate here instead of stdout");
                budget_opt(cmd);
            };
            auto to_output = [&c, &out](const function<void(ostream &)> & write) {
                write_output(c, out, write);
            };

            auto solve_chi = solve->add_subcommand("chi", "Chromatic number");
            solve_output(solve_chi);
            solve_chi->callback([&, to_output] {
                action = [&, to_output] {
                    auto g = read_dimacs_file(c.input);
                    auto result = chromatic_number(g, Budget::seconds(c.budget));
                    to_output([&](ostream & o) { write_certificate(o, result.coloring); });
                    if (! result.exact()) {
                        err << "timed out: " << result.lower_bound << " <= chi <= " << result.value << '\n';
                        return inconclusive;
                    }
                    return success;
                };
            });

            auto solve_omega = solve->add_subcommand("omega", "Clique number");
            solve_output(solve_omega);
            solve_omega->callback([&, to_output] {
                action = [&, to_output] {
                    auto g = read_dimacs_file(c.input);
                    auto result = clique_number(g, Budget::seconds(c.budget));
                    to_output([&](ostream & o) { write_certificate(o, result.clique); });
                    if (result.stats.timed_out) {
                        err << "timed out: omega >= " << result.value << '\n';
                        return inconclusive;
                    }
                    return success;
                };
            });

            auto solve_chi_n = solve->add_subcommand("chi-n", "Largest chi over induced subgraphs with clique number <= n");
            solve_output(solve_chi_n);
            solve_chi_n->add_option("--n", c.n)->required();
            solve_chi_n->callback([&, to_output] {
                action = [&, to_output] {
                    auto g = read_dimacs_file(c.input);
                    auto result = chi_restricted(g, c.n, Budget::seconds(c.budget));
                    to_output([&](ostream & o) {
                        o << "chi-n " << c.n << ' ' << result.value << '\n';
                        for (auto v : result.witness)
                            o << "member " << v << '\n';
                    });
                    if (result.stats.timed_out) {
                        err << "timed out: chi-n >= " << result.value << '\n';
                        return inconclusive;
                    }
                    return success;
                };
            });

            auto solve_k = solve->add_subcommand("k-color", "Decide k-colourability");
            solve_output(solve_k);
            solve_k->add_option("--k", c.k)->required();
            solve_k->callback([&, to_output] {
                action = [&, to_output] {
                    auto g = read_dimacs_file(c.input);
                    auto result = k_colorable(g, c.k, Budget::seconds(c.budget));
                    to_output([&](ostream & o) {
                        switch (result.status) {
                            case Colourability::colourable:
                                o << "colorable " << c.k << '\n';
                                for (std::size_t v = 0; v < result.coloring->assignment.size(); ++v)
                                    o << "color " << v << ' ' << result.coloring->assignment[v] << '\n';
                                break;
                            case Colourability::not_colourable: o << "not-colorable " << c.k << '\n'; break;
                            case Colourability::unknown: o << "unknown " << c.k << '\n'; break;
                        }
                    });
                    return result.status == Colourability::unknown ? inconclusive : success;
                };
            });

            // oracle
            auto oracle = app.add_subcommand("oracle", "Brute-force oracles (at most 12 vertices)");
            oracle->require_subcommand(1);
            for (string which : {"chi", "omega"}) {
                auto cmd = oracle->add_subcommand(which, "Brute-force " + which);
                cmd->add_option("input", c.input)->required()->check(CLI::ExistingFile);
                cmd->callback([&, which] {
                    action = [&, which] {
                        auto g = read_dimacs_file(c.input);
                        out << which << ' ' << (which == "chi" ? brute_force_chi(g) : brute_force_omega(g)) << '\n';
                        return success;
                    };
                });
            }

            // verify
            auto verify = app.add_subcommand("verify", "Check properties of the construction");
            verify->require_subcommand(1);

            auto v_lemma = verify->add_subcommand("mycielski-lemma", "M(G) is triangle-free with chi one higher");
            v_lemma->add_option("input", c.input)->required()->check(CLI::ExistingFile);
            report_opts(v_lemma);
            v_lemma->callback([&] {
                action = [&] {
                    auto g = read_dimacs_file(c.input);
                    return emit(out, c, single(check_mycielski_lemma(g, options_from(c))));
                };
            });

            auto v_block = verify->add_subcommand("block", "Properties of one block X_{r,m}");
            v_block->add_option("--r", c.r)->required();
            v_block->add_option("--m", c.m)->required();
            v_block->add_option("--provider-file", c.provider_file, "Core graph for r >= 3");
            report_opts(v_block);
            v_block->callback([&] {
                action = [&] {
                    auto registry = registry_from(c);
                    auto options = options_from(c);
                    auto x = build_block(make_block_spec(c.r, c.m, registry.resolve(c.r, c.m)), options.budget());
                    return emit(out, c, single(check_block_observation(x, options)));
                };
            });

            auto v_good = verify->add_subcommand("goodness", "chi^(r-1) <= W_r over sampled induced subgraphs");
            v_good->add_option("--r", c.r)->required();
            v_good->add_option("--m-min", c.m_min);
            v_good->add_option("--m-max", c.m_max);
            v_good->add_option("--strategy", c.strategy)->check(CLI::IsMember({"exhaustive", "random"}));
            v_good->add_option("--limit", c.limit, "Random samples per block");
            provider_opts(v_good);
            report_opts(v_good);
            v_good->callback([&] {
                action = [&] {
                    auto strategy = c.strategy == "random" ? SamplingStrategy::random : SamplingStrategy::exhaustive;
                    auto report = check_goodness(c.r, c.m_min, c.m_max, registry_from(c), strategy, options_from(c));
                    return emit(out, c, single(std::move(report.report)));
                };
            });

            auto v_nonpoly = verify->add_subcommand("nonpoly", "Witness that polynomial p does not bound the block family");
            v_nonpoly->add_option("--r", c.r)->required();
            v_nonpoly->add_option("--poly", c.poly, "Coefficients c0,c1,...,cd");
            provider_opts(v_nonpoly);
            report_opts(v_nonpoly);
            v_nonpoly->callback([&] {
                action = [&] {
                    auto witness = find_nonpoly_witness(c.r, Polynomial::parse(c.poly), registry_from(c), options_from(c));
                    return emit(out, c, single(std::move(witness.report)));
                };
            });

            auto v_polly = verify->add_subcommand("pollyanna", "R_F and M_F for a tabulated bounding function");
            v_polly->add_option("--phi", c.phi, "phi(1),phi(2),...")->required();
            v_polly->add_option("--r", c.r, "Also check blocks X_{r,m} for m in [m-min, m-max]");
            v_polly->add_option("--m-min", c.m_min);
            v_polly->add_option("--m-max", c.m_max);
            provider_opts(v_polly);
            report_opts(v_polly);
            v_polly->callback([&] {
                action = [&] {
                    auto table = parse_table(c.phi);
                    auto options = options_from(c);
                    vector<TaggedGraph> blocks;
                    auto registry = registry_from(c);
                    for (long m = c.m_min; m <= c.m_max; ++m)
                        blocks.push_back(build_block(make_block_spec(c.r, m, registry.resolve(c.r, m)), options.budget()));
                    return emit(out, c, single(check_pollyanna_implication(table, blocks, options)));
                };
            });

            auto v_all = verify->add_subcommand("all", "Every check on a finite slice");
            v_all->add_option("--slice", c.slice_file, "JSON slice description")->check(CLI::ExistingFile);
            v_all->add_option("--r", c.r);
            v_all->add_option("--m-min", c.m_min);
            v_all->add_option("--m-max", c.m_max);
            v_all->add_option("--poly", c.poly, "Coefficients c0,c1,...,cd");
            v_all->add_option("--phi", c.phi, "phi(1),phi(2),...");
            provider_opts(v_all);
            report_opts(v_all);
            v_all->callback([&] {
                action = [&] {
                    VerifyAllConfig config;
                    if (! c.slice_file.empty())
                        config = read_slice(c.slice_file);
                    else {
                        config.slice.ranges.push_back(ClassSpec::Range{c.r, c.m_min, c.m_max});
                        config.polynomials.emplace(c.r, Polynomial::parse(c.poly));
                    }
                    for (auto & p : c.providers)
                        add_provider(config.slice.providers, p);
                    if (! c.phi.empty())
                        config.table = parse_table(c.phi);
                    return emit(out, c, verify_all(config, options_from(c)));
                };
            });

            auto v_cert = verify->add_subcommand("certificate", "Check a chi or omega certificate against a graph");
            v_cert->add_option("input", c.input)->required()->check(CLI::ExistingFile);
            v_cert->add_option("certificate", c.certificate)->required()->check(CLI::ExistingFile);
            v_cert->callback([&] {
                action = [&] {
                    auto g = read_dimacs_file(c.input);
                    std::ifstream in(c.certificate);
                    auto cert = read_certificate(in);
                    bool ok = check_certificate(g, cert);
                    out << (ok ? "valid" : "invalid") << '\n';
                    return ok ? success : violated;
                };
            });
        }
    }

    auto run(const vector<string> & args, ostream & out, ostream & err) -> int
    {
        CLI::App app{"Mycielski towers, tagged blocks, and exact chromatic verification"};
        app.name("pollyanna");
        CommandConfig config;
        config.budget = default_budget();
        function<int()> action;
        build_app(app, config, action, out, err);

        try {
            vector<string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::ParseError & e) {
            auto code = app.exit(e, out, err);
            return code == 0 ? success : usage_error;
        }

        try {
            return action ? action() : usage_error;
        }
        catch (const ClaimMismatch & e) {
            err << "claim mismatch: " << e.what() << '\n';
            return violated;
        }
        catch (const Error & e) {
            err << "error: " << e.what() << '\n';
            return usage_error;
        }
    }
}
