#include <pollyanna/errors.hh>
#include <pollyanna/parallel.hh>
#include <pollyanna/verification.hh>

#include <algorithm>
#include <limits>
#include <random>

using nlohmann::json;
using std::int64_t;
using std::optional;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace pollyanna
{
    namespace
    {
        auto block_name(const BlockSpec & spec) -> string
        {
            return "X(" + to_string(spec.r) + "," + to_string(spec.m) + ")";
        }

        auto big_to_json(const BigInt & x) -> json
        {
            if (x <= std::numeric_limits<int64_t>::max())
                return x.convert_to<int64_t>();
            return x.str();
        }

        auto tower_core_level(const TaggedGraph & x) -> optional<long>
        {
            if (x.spec.provider.kind == ProviderRef::Kind::mycielski_tower)
                return std::max(x.spec.m, 2L);
            return std::nullopt;
        }

        /// Whether an exact chromatic solve of the whole block is expected to
        /// finish: tower-built parts are only solved up to max_exact_tower,
        /// file cores are always attempted within the budget.
        auto chi_attemptable(const TaggedGraph & x, const VerifyOptions & options) -> bool
        {
            if (x.spec.r > options.max_exact_tower)
                return false;
            auto level = tower_core_level(x);
            return ! level || *level <= options.max_exact_tower;
        }

        struct ChiEvidence
        {
            size_t value = 0; // exact value, proven lower bound, or claim
            Provenance provenance = Provenance::claim;
            bool known = false;
        };

        /// Evidence that chi(X) >= target: an exact solve where feasible, else
        /// a solver bound, else the construction claim.
        auto chi_evidence(const TaggedGraph & x, long target, const VerifyOptions & options) -> ChiEvidence
        {
            ChiEvidence e;
            optional<long> claim;
            if (auto level = tower_core_level(x))
                claim = std::max(*level, x.spec.r);
            else if (x.core_chi_claim)
                claim = std::max(*x.core_chi_claim, x.spec.r);

            if (chi_attemptable(x, options)) {
                auto chi = chromatic_number(x.graph, options.budget());
                if (chi.exact())
                    return ChiEvidence{chi.value, Provenance::exact, true};
                if (static_cast<long>(chi.lower_bound) >= target || ! claim)
                    return ChiEvidence{chi.lower_bound, Provenance::bound, true};
            }
            if (claim)
                return ChiEvidence{static_cast<size_t>(*claim), Provenance::claim, true};
            return e;
        }
    }

    auto check_mycielski_lemma(const Graph & g, const VerifyOptions & options) -> CheckReport
    {
        if (! is_triangle_free(g))
            throw PreconditionFailed("the base graph contains a triangle");

        CheckReport report;
        report.check = "mycielski-lemma";
        report.anchor = "triangle-free G with chi(G) = q >= 2 gives triangle-free M(G) with chi(M(G)) = q + 1";
        report.inputs = {{"order", g.order()}, {"edges", g.size()}};

        auto base = chromatic_number(g, options.budget());
        if (base.exact() && base.value < 2)
            throw PreconditionFailed("the base graph has chromatic number " + to_string(base.value) + " < 2");
        report.set("q", base.exact() ? base.value : base.lower_bound, base.exact() ? Provenance::exact : Provenance::bound);
        if (! base.exact()) {
            report.inconclusive("chi(G) not solved within budget");
            return report;
        }

        auto [m, layout] = mycielskian(g);
        report.set("order_M", m.order());

        bool triangle_free = is_triangle_free(m);
        report.set("triangle_free_M", triangle_free);
        if (! triangle_free)
            report.fail("M(G) contains a triangle");

        // The upper bound certificate: shadows copy their original's colour
        // and the apex takes a fresh one.
        Coloring lifted{base.value + 1, vector<size_t>(m.order(), 0)};
        for (Vertex i = 0; i < g.order(); ++i) {
            lifted.assignment[layout.original(i)] = base.coloring.assignment[i];
            lifted.assignment[layout.shadow(i)] = base.coloring.assignment[i];
        }
        lifted.assignment[layout.apex()] = base.value + 1;
        bool upper_ok = verify_coloring(m, lifted);
        report.set("lifted_coloring_verified", upper_ok);
        if (! upper_ok)
            report.fail("the lifted (q+1)-colouring is not proper");

        auto lower = k_colorable(m, static_cast<long>(base.value), options.budget());
        report.set("q_colorable_M", lower.status == Colourability::colourable ? json(true)
                : lower.status == Colourability::not_colourable ? json(false) : json("unknown"));

        switch (lower.status) {
            case Colourability::not_colourable:
                report.set("chi_M", base.value + 1, Provenance::exact);
                break;
            case Colourability::colourable:
                report.set("chi_M", base.value, Provenance::bound);
                report.fail("M(G) admits a q-colouring");
                break;
            case Colourability::unknown:
                report.set("chi_M", base.value + 1, Provenance::bound);
                report.inconclusive("q-colourability of M(G) not decided within budget");
                break;
        }

        if (is_connected(g) && g.size() > 0) {
            bool connected = is_connected(m);
            report.set("connected_M", connected);
            if (! connected)
                report.fail("M(G) of a connected graph is disconnected");
        }
        return report;
    }

    auto validate_block(const TaggedGraph & x) -> vector<string>
    {
        vector<string> issues;
        auto n = x.graph.order();

        Bitset core(n), tag(n);
        try {
            core = to_bitset(n, x.core);
            tag = to_bitset(n, x.tag);
        }
        catch (const IndexOutOfRange &) {
            issues.push_back("core or tag lists a vertex outside the graph");
            return issues;
        }
        if (core.count() != x.core.size() || tag.count() != x.tag.size())
            issues.push_back("core or tag lists a vertex twice");
        if (core.intersects(tag))
            issues.push_back("core and tag overlap");
        if ((core | tag).count() != n)
            issues.push_back("core and tag do not cover the vertex set");

        for (auto v : x.core)
            if (x.graph.neighbours(v).intersects(tag)) {
                issues.push_back("an edge joins the core to the tag");
                break;
            }

        auto tag_graph = induced_subgraph(x.graph, x.tag).graph;
        if (! is_triangle_free(tag_graph))
            issues.push_back("the tag contains a triangle");
        if (tag_graph.size() == 0)
            issues.push_back("the tag has no edge");
        if (! is_connected(tag_graph))
            issues.push_back("the tag is not connected");

        if (x.spec.r >= 2 && x.spec.r <= max_tower_level) {
            if (tag_graph != mycielski_tower(x.spec.r).graph)
                issues.push_back("the tag is not T_" + to_string(x.spec.r) + " in its canonical layout");
        }
        return issues;
    }

    auto check_block_observation(const TaggedGraph & x, const VerifyOptions & options) -> CheckReport
    {
        CheckReport report;
        report.check = "block-observation";
        report.anchor = "X = G_{r,m} + T_r has omega(X) = r, chi(X) >= m, and contains T_r (omega 2, chi r) as an induced subgraph";
        report.inputs = {{"block", block_name(x.spec)}, {"r", x.spec.r}, {"m", x.spec.m},
            {"provider", x.spec.provider.name()}, {"core", x.core_source}};
        report.set("order", x.graph.order());

        for (auto & issue : validate_block(x))
            report.fail(issue);

        auto omega = clique_number(x.graph, options.budget());
        report.set("omega", omega.value, omega.stats.timed_out ? Provenance::bound : Provenance::exact);
        if (static_cast<long>(omega.value) > x.spec.r)
            report.fail("omega(X) = " + to_string(omega.value) + " exceeds r");
        else if (omega.stats.timed_out)
            report.inconclusive("omega(X) not solved within budget");
        else if (static_cast<long>(omega.value) != x.spec.r)
            report.fail("omega(X) = " + to_string(omega.value) + " differs from r");
        if (! verify_clique(x.graph, omega.clique.vertices))
            report.fail("clique certificate does not verify");

        auto chi = chi_evidence(x, x.spec.m, options);
        report.set("m", x.spec.m);
        if (! chi.known)
            report.inconclusive("no evidence for chi(X) >= m: solve not attempted and no claim available");
        else {
            report.set("chi", chi.value, chi.provenance);
            if (static_cast<long>(chi.value) < x.spec.m) {
                if (chi.provenance == Provenance::exact)
                    report.fail("chi(X) = " + to_string(chi.value) + " < m");
                else
                    report.inconclusive("chi(X) >= m not established");
            }
            if (chi.provenance == Provenance::claim)
                report.note("chi(X) taken from the construction claim, not re-solved");

            // For tower cores the claim is the exact core value, so the
            // disjoint-union law can be checked against it.
            if (auto level = tower_core_level(x); level && chi.provenance == Provenance::exact &&
                    static_cast<long>(chi.value) != std::max(*level, x.spec.r))
                report.fail("chi(X) differs from max(chi(core), chi(tag))");
        }

        auto tag_graph = induced_subgraph(x.graph, x.tag).graph;
        auto tag_omega = clique_number(tag_graph, options.budget());
        report.set("tag_omega", tag_omega.value, tag_omega.stats.timed_out ? Provenance::bound : Provenance::exact);
        if (tag_omega.value != 2)
            report.fail("tag clique number is " + to_string(tag_omega.value) + ", not 2");
        report.set("tag_triangle_free", is_triangle_free(tag_graph));

        if (x.spec.r <= options.max_exact_tower) {
            auto tag_chi = chromatic_number(tag_graph, options.budget());
            report.set("tag_chi", tag_chi.exact() ? tag_chi.value : tag_chi.lower_bound,
                    tag_chi.exact() ? Provenance::exact : Provenance::bound);
            if (! verify_coloring(tag_graph, tag_chi.coloring))
                report.fail("tag colouring certificate does not verify");
            if (! tag_chi.exact())
                report.inconclusive("chi(T_r) not solved within budget");
            else if (static_cast<long>(tag_chi.value) != x.spec.r)
                report.fail("chi(tag) = " + to_string(tag_chi.value) + ", not r");
        }
        else
            report.set("tag_chi", x.spec.r, Provenance::claim);

        bool disconnected = components(x.graph).size() >= 2;
        bool tag_connected = is_connected(tag_graph);
        report.set("disconnected", disconnected);
        report.set("tag_connected", tag_connected);
        if (! disconnected)
            report.fail("X is connected");
        if (! tag_connected)
            report.fail("the tag is disconnected");

        return report;
    }

    SamplePlan::SamplePlan(size_t order, SamplingStrategy requested, size_t limit, std::uint64_t seed, size_t exhaustive_limit) :
        _order(order),
        _exhaustive(requested == SamplingStrategy::exhaustive && order <= exhaustive_limit && order < 63),
        _seed(seed)
    {
        if (_exhaustive)
            return;
        if (limit == 0)
            throw InvalidParameter("random sampling needs a positive limit");

        std::mt19937_64 rng(seed);
        std::bernoulli_distribution coin(0.5);
        for (size_t i = 0; i < limit; ++i) {
            VertexSet s;
            for (Vertex v = 0; v < order; ++v)
                if (coin(rng))
                    s.push_back(v);
            _random.push_back(std::move(s));
        }
        for (Vertex deleted = 0; deleted < order; ++deleted) {
            VertexSet s;
            for (Vertex v = 0; v < order; ++v)
                if (v != deleted)
                    s.push_back(v);
            _random.push_back(std::move(s));
        }
    }

    auto SamplePlan::size() const -> size_t
    {
        return _exhaustive ? (size_t{1} << _order) : _random.size();
    }

    auto SamplePlan::operator[](size_t i) const -> VertexSet
    {
        if (! _exhaustive)
            return _random.at(i);
        VertexSet s;
        for (Vertex v = 0; v < _order; ++v)
            if (i & (size_t{1} << v))
                s.push_back(v);
        return s;
    }

    auto SamplePlan::describe() const -> string
    {
        if (_exhaustive)
            return "exhaustive (all 2^" + to_string(_order) + " subsets)";
        return "random (" + to_string(_random.size() - _order) + " uniform subsets + " + to_string(_order) +
            " single-vertex deletions, seed " + to_string(_seed) + ")";
    }

    auto hereditary_closure_sample(const TaggedGraph & x, SamplingStrategy strategy, size_t limit, std::uint64_t seed,
            size_t exhaustive_limit) -> vector<VertexSet>
    {
        SamplePlan plan(x.graph.order(), strategy, limit, seed, exhaustive_limit);
        vector<VertexSet> result;
        result.reserve(plan.size());
        for (size_t i = 0; i < plan.size(); ++i)
            result.push_back(plan[i]);
        return result;
    }

    auto check_goodness(long r, std::span<const TaggedGraph> blocks, SamplingStrategy strategy, const VerifyOptions & options) -> GoodnessReport
    {
        GoodnessReport g;
        g.r = r;
        g.bound = goodness_bound(r);

        auto & report = g.report;
        report.check = "goodness";
        report.anchor = "every induced subgraph Y of a block X_{r,m} has chi^(r-1)(Y) <= W_r = max(B_r, r)";
        report.inputs = {{"r", r}, {"blocks", json::array()}};
        for (auto & x : blocks)
            report.inputs["blocks"].push_back(block_name(x.spec));

        json per_block = json::array();
        vector<string> strategies;
        size_t timeouts = 0;
        optional<size_t> argmax;

        for (auto & x : blocks) {
            auto issues = validate_block(x);
            if (x.spec.r != r)
                issues.push_back("block has r = " + to_string(x.spec.r));
            for (auto & issue : issues)
                g.malformed.push_back(block_name(x.spec) + ": " + issue);

            auto seed = options.seed + 1000003ULL * static_cast<std::uint64_t>(x.spec.r) + static_cast<std::uint64_t>(x.spec.m);
            SamplePlan plan(x.graph.order(), strategy, options.sample_limit, seed, options.exhaustive_limit);
            strategies.push_back(block_name(x.spec) + ": " + plan.describe());

            vector<GoodnessSample> samples(plan.size());
            parallel_for(plan.size(), options.jobs, [&](size_t i) {
                auto s = plan[i];
                auto sub = induced_subgraph(x.graph, s);
                auto res = chi_restricted(sub.graph, r - 1, options.budget());
                samples[i] = GoodnessSample{block_name(x.spec), std::move(s), res.value, res.stats.timed_out};
            });

            size_t block_max = 0;
            for (auto & s : samples) {
                block_max = std::max(block_max, s.value);
                if (s.timed_out)
                    ++timeouts;
                if (! argmax || s.value > g.samples[*argmax].value)
                    argmax = g.samples.size();
                g.samples.push_back(std::move(s));
            }
            g.max_observed = std::max(g.max_observed, block_max);
            per_block.push_back({{"block", block_name(x.spec)}, {"order", x.graph.order()}, {"samples", samples.size()},
                    {"max_chi_restricted", block_max}});
        }

        g.strategy = strategies.empty() ? "none" : strategies.front();
        for (size_t i = 1; i < strategies.size(); ++i)
            g.strategy += "; " + strategies[i];

        report.set("W_r", g.bound);
        report.set("samples", g.samples.size());
        report.set("max_observed", g.max_observed, timeouts ? Provenance::bound : Provenance::exact);
        report.set("per_block", per_block);
        report.set("strategy", g.strategy);
        if (argmax)
            report.set("max_witness", {{"block", g.samples[*argmax].block}, {"vertices", g.samples[*argmax].vertices}});

        for (auto & m : g.malformed)
            report.error("malformed block, bound not applicable: " + m);
        if (static_cast<int64_t>(g.max_observed) > g.bound)
            report.fail("chi^(r-1) = " + to_string(g.max_observed) + " exceeds W_r = " + to_string(g.bound));
        else if (timeouts)
            report.inconclusive(to_string(timeouts) + " samples timed out");
        report.note("verified on slice");

        g.pass = report.passed();
        return g;
    }

    auto check_goodness(long r, long m_min, long m_max, const ProviderRegistry & providers, SamplingStrategy strategy,
            const VerifyOptions & options) -> GoodnessReport
    {
        vector<TaggedGraph> blocks;
        for (long m = m_min; m <= m_max; ++m)
            blocks.push_back(build_block(make_block_spec(r, m, providers.resolve(r, m)), options.budget()));
        return check_goodness(r, blocks, strategy, options);
    }

    auto find_nonpoly_witness(long r, const Polynomial & p, const ProviderRegistry & providers, const VerifyOptions & options) -> NonpolyWitness
    {
        if (r < 2)
            throw InvalidParameter("r must be at least 2, got " + to_string(r));

        NonpolyWitness w;
        w.p_of_r = p(BigInt(r));
        w.m = w.p_of_r + 1;

        auto & report = w.report;
        report.check = "nonpoly-witness";
        report.anchor = "for m = p(r) + 1, chi(X_{r,m}) >= m > p(r) = p(omega(X_{r,m})), so p does not bound the block family";
        report.inputs = {{"r", r}, {"poly", p.encode()}, {"p", p.to_string()}};
        report.set("p(r)", big_to_json(w.p_of_r));
        report.set("m", big_to_json(w.m));

        bool fits = w.m <= std::numeric_limits<long>::max();
        long m = fits ? w.m.convert_to<long>() : std::numeric_limits<long>::max();

        // Towers beyond the materialisation limit are represented by their claim alone.
        if (r == 2 && (! fits || std::max(m, 2L) > max_tower_level)) {
            providers.resolve(r, 2);
            report.set("omega", 2, Provenance::claim);
            report.set("chi", big_to_json(w.m), Provenance::claim);
            report.set("chi_exceeds_p", true, Provenance::claim);
            report.note("X_{2,m} not materialised; chi(T_m) = m holds by the tower construction");
            return w;
        }
        if (! fits)
            throw ProviderUnavailable("m = " + w.m.str() + " is beyond any provider file");

        auto spec = make_block_spec(r, m, providers.resolve(r, m));
        w.block = build_block(spec, options.budget());
        auto & x = *w.block;
        report.set("order", x.graph.order());

        auto omega = clique_number(x.graph, options.budget());
        report.set("omega", omega.value, omega.stats.timed_out ? Provenance::bound : Provenance::exact);
        if (omega.stats.timed_out)
            report.inconclusive("omega(X) not solved within budget");
        else if (static_cast<long>(omega.value) != r)
            report.fail("omega(X) = " + to_string(omega.value) + ", not r");

        auto chi = chi_evidence(x, m, options);
        if (! chi.known) {
            report.inconclusive("no evidence for chi(X) >= m");
            return w;
        }
        report.set("chi", chi.value, chi.provenance);
        bool exceeds = BigInt(chi.value) > w.p_of_r;
        report.set("chi_exceeds_p", exceeds, chi.provenance);
        if (! exceeds) {
            if (chi.provenance == Provenance::exact)
                report.fail("chi(X) = " + to_string(chi.value) + " does not exceed p(r)");
            else
                report.inconclusive("chi(X) > p(r) not established");
        }
        if (chi.provenance == Provenance::claim)
            report.note("chi(X) taken from the construction claim, not re-solved");
        return w;
    }

    auto BoundingTable::at(int64_t s) const -> int64_t
    {
        if (s < 1 || static_cast<size_t>(s) > values.size())
            throw TableTooShort("phi(" + to_string(s) + ") is not tabulated (table covers 1.." + to_string(values.size()) + ")");
        return values[static_cast<size_t>(s - 1)];
    }

    auto pollyanna_bound(const BoundingTable & table) -> PollyannaConstants
    {
        for (auto v : table.values)
            if (v < 1)
                throw InvalidParameter("bounding table entries must be positive");

        PollyannaConstants c;
        c.r_f = std::max<int64_t>(2, table.at(2));
        if (static_cast<size_t>(c.r_f) > table.values.size())
            throw TableTooShort("R_F = " + to_string(c.r_f) + " but the table only covers 1.." + to_string(table.values.size()));
        for (int64_t s = 1; s <= c.r_f; ++s)
            c.m_f = std::max(c.m_f, table.at(s));
        return c;
    }

    auto check_pollyanna_implication(const BoundingTable & table, std::span<const TaggedGraph> blocks, const VerifyOptions & options) -> CheckReport
    {
        CheckReport report;
        report.check = "pollyanna-bound";
        report.anchor = "a block satisfying phi has r = chi(T_r) <= phi(2), hence chi(X) <= phi(r) <= M_F = max phi(1..R_F), R_F = max(2, phi(2))";
        report.inputs = {{"phi", table.values}};

        auto constants = pollyanna_bound(table);
        report.set("R_F", constants.r_f);
        report.set("M_F", constants.m_f);

        json per_block = json::array();
        for (auto & x : blocks) {
            json entry = {{"block", block_name(x.spec)}};
            auto phi2 = table.at(2);
            if (x.spec.r > phi2) {
                entry["in_class"] = false;
                entry["reason"] = "tag T_r has omega 2 and chi r > phi(2)";
                per_block.push_back(entry);
                continue;
            }

            // Membership: every sampled induced subgraph, plus X itself, obeys phi.
            auto seed = options.seed + 7919ULL * static_cast<std::uint64_t>(x.spec.r) + static_cast<std::uint64_t>(x.spec.m);
            SamplePlan plan(x.graph.order(), SamplingStrategy::exhaustive, options.sample_limit, seed, options.exhaustive_limit);
            vector<int> verdicts(plan.size() + 1, 1); // 1 obeys, 0 violates or uncovered, -1 undecided
            vector<size_t> chi_values(plan.size() + 1, 0);
            parallel_for(plan.size() + 1, options.jobs, [&](size_t i) {
                auto s = i < plan.size() ? plan[i] : all_vertices(x.graph);
                auto sub = induced_subgraph(x.graph, s).graph;
                auto omega = clique_number(sub, options.budget());
                auto chi = chromatic_number(sub, options.budget());
                chi_values[i] = chi.value;
                if (omega.stats.timed_out || ! chi.exact())
                    verdicts[i] = -1;
                else if (omega.value == 0)
                    verdicts[i] = 1;
                else if (static_cast<size_t>(omega.value) > table.values.size())
                    verdicts[i] = 0;
                else
                    verdicts[i] = static_cast<int64_t>(chi.value) <= table.at(static_cast<int64_t>(omega.value)) ? 1 : 0;
            });

            bool undecided = std::count(verdicts.begin(), verdicts.end(), -1) > 0;
            bool obeys = std::count(verdicts.begin(), verdicts.end(), 0) == 0;
            auto chi_x = chi_values.back();
            entry["samples"] = plan.size() + 1;
            entry["chi"] = chi_x;
            if (! obeys) {
                entry["in_class"] = false;
                entry["reason"] = "some induced subgraph violates phi";
            }
            else if (undecided) {
                entry["in_class"] = "undecided";
                report.inconclusive(block_name(x.spec) + ": membership not decided within budget");
            }
            else {
                entry["in_class"] = true;
                if (static_cast<int64_t>(chi_x) > constants.m_f)
                    report.fail(block_name(x.spec) + ": chi = " + to_string(chi_x) + " exceeds M_F");
            }
            per_block.push_back(entry);
        }
        report.set("blocks", per_block);
        return report;
    }

    auto chi_max_of_class(std::span<const Graph> graphs, long n, const VerifyOptions & options) -> ChiMaxResult
    {
        ChiMaxResult result;
        vector<optional<size_t>> values(graphs.size());
        vector<char> timed_out(graphs.size(), 0);

        parallel_for(graphs.size(), options.jobs, [&](size_t i) {
            auto omega = clique_number(graphs[i], options.budget());
            if (omega.stats.timed_out) {
                timed_out[i] = 1;
                return;
            }
            if (static_cast<long>(omega.value) != n)
                return;
            auto chi = chromatic_number(graphs[i], options.budget());
            timed_out[i] = ! chi.exact();
            values[i] = chi.lower_bound;
        });

        for (size_t i = 0; i < graphs.size(); ++i) {
            if (values[i])
                result.value = std::max(result.value.value_or(0), *values[i]);
            if (timed_out[i])
                result.timed_out = true;
        }
        return result;
    }

    auto verify_all(const VerifyAllConfig & config, const VerifyOptions & options) -> Summary
    {
        validate(config.slice);

        Summary summary;
        json ranges = json::array();
        for (auto & range : config.slice.ranges)
            ranges.push_back({{"r", range.r}, {"m_min", range.m_min}, {"m_max", range.m_max}});
        summary.context = {
            {"scope", "verified on slice"},
            {"slice", ranges},
            {"seed", options.seed},
            {"budget_seconds", options.budget_seconds},
            {"max_exact_tower", options.max_exact_tower}};

        vector<TaggedGraph> all_blocks;

        for (auto & range : config.slice.ranges) {
            auto r = range.r;
            vector<TaggedGraph> blocks;

            for (long m = range.m_min; m <= range.m_max; ++m) {
                try {
                    auto spec = make_block_spec(r, m, config.slice.providers.resolve(r, m));
                    blocks.push_back(build_block(spec, options.budget()));
                    summary.checks.push_back(check_block_observation(blocks.back(), options));
                }
                catch (const Error & e) {
                    CheckReport failed;
                    failed.check = "block-observation";
                    failed.anchor = "X_{r,m} could not be built";
                    failed.inputs = {{"r", r}, {"m", m}};
                    failed.error(e.what());
                    summary.checks.push_back(std::move(failed));
                }
            }

            if (! blocks.empty()) {
                auto goodness = check_goodness(r, blocks, SamplingStrategy::exhaustive, options);
                summary.checks.push_back(std::move(goodness.report));
            }

            try {
                auto p = config.polynomials.contains(r) ? config.polynomials.at(r) : Polynomial({0, 1});
                summary.checks.push_back(find_nonpoly_witness(r, p, config.slice.providers, options).report);
            }
            catch (const Error & e) {
                CheckReport failed;
                failed.check = "nonpoly-witness";
                failed.anchor = "witness block could not be built";
                failed.inputs = {{"r", r}};
                failed.error(e.what());
                summary.checks.push_back(std::move(failed));
            }

            CheckReport hereditary;
            hereditary.check = "non-hereditary";
            hereditary.anchor = "every block is disconnected while T_r is connected, so T_r is an induced subgraph of a member but not a member";
            hereditary.inputs = {{"r", r}};
            json per_block = json::array();
            for (auto & x : blocks) {
                bool disconnected = components(x.graph).size() >= 2;
                bool tag_connected = is_connected(induced_subgraph(x.graph, x.tag).graph);
                per_block.push_back({{"block", block_name(x.spec)}, {"disconnected", disconnected}, {"tag_connected", tag_connected}});
                if (! disconnected)
                    hereditary.fail(block_name(x.spec) + " is connected");
                if (! tag_connected)
                    hereditary.fail(block_name(x.spec) + " has a disconnected tag");
            }
            hereditary.set("blocks", per_block);
            if (blocks.empty())
                hereditary.inconclusive("no block was built");
            summary.checks.push_back(std::move(hereditary));

            for (auto & x : blocks)
                all_blocks.push_back(std::move(x));
        }

        if (config.table) {
            try {
                summary.checks.push_back(check_pollyanna_implication(*config.table, all_blocks, options));
            }
            catch (const Error & e) {
                CheckReport failed;
                failed.check = "pollyanna-bound";
                failed.anchor = "bounding table rejected";
                failed.error(e.what());
                summary.checks.push_back(std::move(failed));
            }
        }

        return summary;
    }
}
