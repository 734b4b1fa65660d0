#include <pollyanna/dimacs.hh>
#include <pollyanna/errors.hh>
#include <pollyanna/provider.hh>

#include "json.hpp"

#include <fstream>

using nlohmann::json;
using std::string;
using std::to_string;

namespace fs = std::filesystem;

namespace pollyanna
{
    auto claims_path_for(const fs::path & graph_file) -> fs::path
    {
        auto result = graph_file;
        result.replace_extension(".claims");
        return result;
    }

    auto read_claims(const fs::path & path) -> ProviderClaims
    {
        std::ifstream in(path);
        if (! in)
            throw ParseError("cannot open '" + path.string() + "'");
        try {
            auto j = json::parse(in);
            ProviderClaims c;
            c.r = j.at("r").get<long>();
            c.m = j.at("m").get<long>();
            c.claimed_omega = j.at("claimed_omega").get<long>();
            c.claimed_chi_lb = j.at("claimed_chi_lb").get<long>();
            c.source = j.value("source", "");
            return c;
        }
        catch (const json::exception & e) {
            throw ParseError(path.string() + ": " + e.what());
        }
    }

    auto write_claims(const fs::path & path, const ProviderClaims & c) -> void
    {
        std::ofstream out(path);
        if (! out)
            throw ParseError("cannot open '" + path.string() + "' for writing");
        json j = {
            {"r", c.r},
            {"m", c.m},
            {"claimed_omega", c.claimed_omega},
            {"claimed_chi_lb", c.claimed_chi_lb},
            {"source", c.source}};
        out << j.dump(2) << '\n';
    }

    auto ProviderRef::name() const -> string
    {
        if (kind == Kind::mycielski_tower)
            return "mycielski-tower";
        return "file:" + file.string();
    }

    auto load_provider_graph(long r, long m, const fs::path & file, const Budget & budget) -> ProviderGraph
    {
        if (r < 3)
            throw InvalidParameter("file providers are for r >= 3, got r = " + to_string(r));
        if (m < 1)
            throw InvalidParameter("m must be at least 1, got " + to_string(m));

        ProviderGraph result;
        result.graph = read_dimacs_file(file);
        result.source = file.string();

        auto sidecar = claims_path_for(file);
        if (fs::exists(sidecar)) {
            result.claims = read_claims(sidecar);
            auto & c = *result.claims;
            if (c.r != r || c.m != m)
                throw ClaimMismatch(sidecar.string() + " describes (r, m) = (" + to_string(c.r) + ", " + to_string(c.m) +
                        ") but was loaded as (" + to_string(r) + ", " + to_string(m) + ")");
            if (c.claimed_chi_lb < m)
                throw ClaimMismatch(sidecar.string() + " claims chi >= " + to_string(c.claimed_chi_lb) + ", below m = " + to_string(m));
            if (! c.source.empty())
                result.source += " (" + c.source + ")";
        }

        result.omega = clique_number(result.graph, budget);
        auto omega = static_cast<long>(result.omega.value);
        bool exact = ! result.omega.stats.timed_out;

        if (omega > r || (exact && omega != r))
            throw ClaimMismatch(file.string() + " has clique number " + (exact ? "" : "at least ") + to_string(omega) +
                    ", expected exactly r = " + to_string(r));
        if (result.claims && (omega > result.claims->claimed_omega || (exact && omega != result.claims->claimed_omega)))
            throw ClaimMismatch(sidecar.string() + " claims clique number " + to_string(result.claims->claimed_omega) +
                    " but the solver found " + to_string(omega));

        return result;
    }

    auto ProviderRegistry::add_file(long r, long m, fs::path file) -> void
    {
        _files[{r, m}] = std::move(file);
    }

    auto ProviderRegistry::resolve(long r, long m) const -> ProviderRef
    {
        if (auto it = _files.find({r, m}); it != _files.end())
            return ProviderRef{ProviderRef::Kind::file, it->second};
        if (r == 2)
            return ProviderRef{};
        throw ProviderUnavailable("no provider graph registered for (r, m) = (" + to_string(r) + ", " + to_string(m) + ")");
    }
}
