#include <pollyanna/report.hh>

#include <algorithm>
#include <iomanip>
#include <ostream>

using nlohmann::json;
using std::optional;
using std::string;

namespace pollyanna
{
    auto name_of(Provenance p) -> string
    {
        switch (p) {
            case Provenance::exact: return "EXACT";
            case Provenance::bound: return "BOUND";
            case Provenance::claim: return "CLAIM";
        }
        return "?";
    }

    auto name_of(Status s) -> string
    {
        switch (s) {
            case Status::pass: return "pass";
            case Status::inconclusive: return "inconclusive";
            case Status::fail: return "fail";
            case Status::error: return "error";
        }
        return "?";
    }

    auto worst(Status a, Status b) -> Status
    {
        return std::max(a, b);
    }

    auto exit_code(Status s) -> int
    {
        switch (s) {
            case Status::pass: return 0;
            case Status::inconclusive: return 3;
            case Status::fail:
            case Status::error: return 1;
        }
        return 1;
    }

    auto CheckReport::set(const string & name, json value, optional<Provenance> provenance) -> void
    {
        for (auto & v : values)
            if (v.name == name) {
                v.value = std::move(value);
                v.provenance = provenance;
                return;
            }
        values.push_back(ReportValue{name, std::move(value), provenance});
    }

    auto CheckReport::get(const string & name) const -> const ReportValue *
    {
        for (auto & v : values)
            if (v.name == name)
                return &v;
        return nullptr;
    }

    auto CheckReport::fail(const string & n) -> void
    {
        status = worst(status, Status::fail);
        notes.push_back("FAIL: " + n);
    }

    auto CheckReport::inconclusive(const string & n) -> void
    {
        status = worst(status, Status::inconclusive);
        notes.push_back("INCONCLUSIVE: " + n);
    }

    auto CheckReport::error(const string & n) -> void
    {
        status = worst(status, Status::error);
        notes.push_back("ERROR: " + n);
    }

    auto CheckReport::note(const string & n) -> void
    {
        notes.push_back(n);
    }

    auto to_json(const CheckReport & report) -> json
    {
        json values = json::array();
        for (auto & v : report.values) {
            json entry = {{"name", v.name}, {"value", v.value}};
            if (v.provenance)
                entry["provenance"] = name_of(*v.provenance);
            values.push_back(std::move(entry));
        }
        return json{
            {"check", report.check},
            {"anchor", report.anchor},
            {"inputs", report.inputs},
            {"values", std::move(values)},
            {"status", name_of(report.status)},
            {"notes", report.notes}};
    }

    auto Summary::status() const -> Status
    {
        Status result = Status::pass;
        for (auto & c : checks)
            result = worst(result, c.status);
        return result;
    }

    auto to_json(const Summary & summary) -> json
    {
        json checks = json::array();
        for (auto & c : summary.checks)
            checks.push_back(to_json(c));
        return json{
            {"context", summary.context},
            {"checks", std::move(checks)},
            {"status", name_of(summary.status())}};
    }

    auto render_table(std::ostream & out, const Summary & summary) -> void
    {
        for (auto & [key, value] : summary.context.items())
            out << key << ": " << (value.is_string() ? value.get<string>() : value.dump()) << '\n';

        for (auto & c : summary.checks) {
            out << '\n' << std::left << std::setw(24) << c.check << ' ' << name_of(c.status) << '\n';
            out << "  " << c.anchor << '\n';
            if (! c.inputs.empty())
                out << "  inputs " << c.inputs.dump() << '\n';

            std::size_t width = 0;
            for (auto & v : c.values)
                width = std::max(width, v.name.size());
            for (auto & v : c.values) {
                out << "  " << std::setw(static_cast<int>(width)) << v.name << "  "
                    << (v.value.is_string() ? v.value.get<string>() : v.value.dump());
                if (v.provenance)
                    out << "  [" << name_of(*v.provenance) << "]";
                out << '\n';
            }
            for (auto & n : c.notes)
                out << "  - " << n << '\n';
        }
        out << "\noverall " << name_of(summary.status()) << '\n';
    }
}
