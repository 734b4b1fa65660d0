#include <pollyanna/certificate.hh>
#include <pollyanna/errors.hh>

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

using std::getline;
using std::istream;
using std::istringstream;
using std::ostream;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace pollyanna
{
    auto verify_coloring(const Graph & g, const Coloring & c) -> bool
    {
        if (c.assignment.size() != g.order())
            return false;

        vector<bool> used(c.colors_used + 1, false);
        for (auto colour : c.assignment) {
            if (colour < 1 || colour > c.colors_used)
                return false;
            used[colour] = true;
        }
        if (std::count(used.begin() + 1, used.end(), false) != 0)
            return false;

        for (auto & [u, v] : g.edges())
            if (c.assignment[u] == c.assignment[v])
                return false;
        return true;
    }

    auto verify_clique(const Graph & g, const VertexSet & s) -> bool
    {
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] >= g.order())
                return false;
            for (size_t j = 0; j < i; ++j)
                if (s[i] == s[j] || ! g.adjacent(s[i], s[j]))
                    return false;
        }
        return true;
    }

    auto normalise(const Coloring & c) -> Coloring
    {
        std::map<size_t, size_t> relabel;
        Coloring result{c.colors_used, {}};
        result.assignment.reserve(c.assignment.size());
        for (auto colour : c.assignment) {
            auto [it, _] = relabel.try_emplace(colour, relabel.size() + 1);
            result.assignment.push_back(it->second);
        }
        return result;
    }

    auto write_certificate(ostream & out, const Coloring & c) -> void
    {
        out << "chi " << c.colors_used << '\n';
        for (size_t v = 0; v < c.assignment.size(); ++v)
            out << "color " << v << ' ' << c.assignment[v] << '\n';
    }

    auto write_certificate(ostream & out, const CliqueCert & c) -> void
    {
        out << "omega " << c.vertices.size() << '\n';
        for (auto v : c.vertices)
            out << "member " << v << '\n';
    }

    auto read_certificate(istream & in) -> Certificate
    {
        string line, kind;
        long line_number = 0;
        long declared = -1;
        bool is_chi = false;
        std::map<long, long> colours;
        VertexSet members;

        while (getline(in, line)) {
            ++line_number;
            istringstream iss(line);
            if (! (iss >> kind))
                continue;
            auto bad = [&](const string & what) {
                return ParseError("certificate line " + to_string(line_number) + ": " + what);
            };

            if (kind == "chi" || kind == "omega") {
                if (declared >= 0)
                    throw bad("duplicate header");
                if (! (iss >> declared) || declared < 0)
                    throw bad("malformed header");
                is_chi = (kind == "chi");
            }
            else if (kind == "color") {
                long v, c;
                if (declared < 0 || ! is_chi)
                    throw bad("color line outside a chi certificate");
                if (! (iss >> v >> c) || v < 0 || c < 1)
                    throw bad("malformed color line");
                if (! colours.emplace(v, c).second)
                    throw bad("vertex " + to_string(v) + " coloured twice");
            }
            else if (kind == "member") {
                long v;
                if (declared < 0 || is_chi)
                    throw bad("member line outside an omega certificate");
                if (! (iss >> v) || v < 0)
                    throw bad("malformed member line");
                members.push_back(static_cast<Vertex>(v));
            }
            else
                throw bad("unknown line type '" + kind + "'");
        }

        if (declared < 0)
            throw ParseError("certificate has no header");

        if (is_chi) {
            Coloring c{static_cast<size_t>(declared), {}};
            long expected = 0;
            for (auto & [v, colour] : colours) {
                if (v != expected++)
                    throw ParseError("certificate does not colour vertex " + to_string(expected - 1));
                c.assignment.push_back(static_cast<size_t>(colour));
            }
            return c;
        }

        if (members.size() != static_cast<size_t>(declared))
            throw ParseError("omega certificate declares " + to_string(declared) + " but lists " + to_string(members.size()) + " members");
        return CliqueCert{members};
    }

    auto check_certificate(const Graph & g, const Certificate & c) -> bool
    {
        if (auto colouring = std::get_if<Coloring>(&c))
            return verify_coloring(g, *colouring);
        return verify_clique(g, std::get<CliqueCert>(c).vertices);
    }
}
