#pragma once

#include "json.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pollyanna
{
    /// How a reported chromatic value is known.
    enum class Provenance
    {
        exact, // proved by an exact solve
        bound, // a solver bound from a search that ran out of budget
        claim  // holds by construction, not re-proved here
    };

    /// Ordered by severity; combining two statuses keeps the worse one.
    enum class Status
    {
        pass,
        inconclusive,
        fail,
        error
    };

    auto name_of(Provenance p) -> std::string;
    auto name_of(Status s) -> std::string;
    auto worst(Status a, Status b) -> Status;

    /// 0 pass, 1 property violated or error, 3 inconclusive.
    auto exit_code(Status s) -> int;

    struct ReportValue
    {
        std::string name;
        nlohmann::json value;
        std::optional<Provenance> provenance;
    };

    struct CheckReport
    {
        std::string check;
        std::string anchor; // the property being checked, stated in words
        nlohmann::json inputs = nlohmann::json::object();
        std::vector<ReportValue> values;
        Status status = Status::pass;
        std::vector<std::string> notes;

        auto set(const std::string & name, nlohmann::json value, std::optional<Provenance> provenance = std::nullopt) -> void;
        auto get(const std::string & name) const -> const ReportValue *;

        /// Records a violated property.
        auto fail(const std::string & note) -> void;
        auto inconclusive(const std::string & note) -> void;
        auto error(const std::string & note) -> void;
        auto note(const std::string & note) -> void;

        auto passed() const -> bool { return status == Status::pass; }
    };

    auto to_json(const CheckReport & report) -> nlohmann::json;

    struct Summary
    {
        nlohmann::json context = nlohmann::json::object();
        std::vector<CheckReport> checks;

        auto status() const -> Status;
    };

    auto to_json(const Summary & summary) -> nlohmann::json;

    /// Aligned plain-text rendering of the same content as to_json.
    auto render_table(std::ostream & out, const Summary & summary) -> void;
}
