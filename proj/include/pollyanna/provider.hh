#pragma once

#include <pollyanna/budget.hh>
#include <pollyanna/graph.hh>
#include <pollyanna/solvers.hh>

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace pollyanna
{
    /// Contents of a `<name>.claims` sidecar next to a provider graph file.
    struct ProviderClaims
    {
        long r = 0;
        long m = 0;
        long claimed_omega = 0;
        long claimed_chi_lb = 0;
        std::string source;
    };

    auto claims_path_for(const std::filesystem::path & graph_file) -> std::filesystem::path;
    auto read_claims(const std::filesystem::path & path) -> ProviderClaims;
    auto write_claims(const std::filesystem::path & path, const ProviderClaims & claims) -> void;

    /// Where the core graph of a block comes from: the built-in tower family
    /// (clique number 2 only) or a user-supplied DIMACS file.
    struct ProviderRef
    {
        enum class Kind
        {
            mycielski_tower,
            file
        };

        Kind kind = Kind::mycielski_tower;
        std::filesystem::path file;

        auto name() const -> std::string;
    };

    /// A core graph read from a file. Its clique number is solved exactly on
    /// load; a chromatic lower bound is only ever taken from the sidecar.
    struct ProviderGraph
    {
        Graph graph;
        std::optional<ProviderClaims> claims;
        CliqueResult omega;
        std::string source;
    };

    /// Requires r >= 3 and m >= 1. Throws ParseError, or ClaimMismatch if the
    /// graph's clique number is not r or disagrees with the sidecar.
    auto load_provider_graph(long r, long m, const std::filesystem::path & file, const Budget & budget = {}) -> ProviderGraph;

    class ProviderRegistry
    {
        public:
            auto add_file(long r, long m, std::filesystem::path file) -> void;

            /// r = 2 falls back to the tower family; r >= 3 needs a registered
            /// file. Throws ProviderUnavailable.
            auto resolve(long r, long m) const -> ProviderRef;

        private:
            std::map<std::pair<long, long>, std::filesystem::path> _files;
    };
}
