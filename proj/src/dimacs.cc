#include <pollyanna/dimacs.hh>
#include <pollyanna/errors.hh>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

using std::getline;
using std::ifstream;
using std::istream;
using std::istringstream;
using std::ofstream;
using std::ostream;
using std::string;
using std::to_string;
using std::vector;

namespace pollyanna
{
    namespace
    {
        auto fail(long line_number, const string & what) -> ParseError
        {
            return ParseError("line " + to_string(line_number) + ": " + what);
        }
    }

    auto read_dimacs(istream & in) -> Graph
    {
        bool got_header = false;
        long declared_order = 0, declared_edges = 0;
        vector<Edge> edges;

        long line_number = 0;
        for (string line; getline(in, line);) {
            ++line_number;
            if (! line.empty() && line.back() == '\r')
                line.pop_back();
            istringstream iss(line);
            string kind;
            if (! (iss >> kind) || kind == "c")
                continue;

            if (kind == "p") {
                string format;
                if (got_header)
                    throw fail(line_number, "duplicate problem line");
                if (! (iss >> format >> declared_order >> declared_edges))
                    throw fail(line_number, "malformed problem line");
                if (format != "edge" && format != "edges" && format != "col")
                    throw fail(line_number, "unsupported format '" + format + "'");
                if (declared_order < 0 || declared_edges < 0)
                    throw fail(line_number, "negative counts in problem line");
                got_header = true;
            }
            else if (kind == "e") {
                long u = 0, v = 0;
                if (! got_header)
                    throw fail(line_number, "edge before problem line");
                if (! (iss >> u >> v))
                    throw fail(line_number, "malformed edge line");
                if (u < 1 || v < 1 || u > declared_order || v > declared_order)
                    throw fail(line_number, "endpoint out of range 1.." + to_string(declared_order));
                if (u == v)
                    throw fail(line_number, "self-loop at vertex " + to_string(u));
                edges.push_back(Edge{static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
            }
            else
                throw fail(line_number, "unknown line type '" + kind + "'");

            string trailing;
            if (iss >> trailing)
                throw fail(line_number, "trailing text '" + trailing + "'");
        }

        if (! got_header)
            throw ParseError("missing problem line");

        return make_graph(static_cast<std::size_t>(declared_order), edges);
    }

    auto read_dimacs_file(const std::filesystem::path & path) -> Graph
    {
        ifstream in(path);
        if (! in)
            throw ParseError("cannot open '" + path.string() + "'");
        try {
            return read_dimacs(in);
        }
        catch (const ParseError & e) {
            throw ParseError(path.string() + ": " + e.what());
        }
    }

    auto write_dimacs(ostream & out, const Graph & g, const vector<string> & comments) -> void
    {
        for (auto & c : comments)
            out << "c " << c << '\n';
        out << "p edge " << g.order() << ' ' << g.size() << '\n';
        for (auto & [u, v] : g.edges())
            out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
    }

    auto write_dimacs_file(const std::filesystem::path & path, const Graph & g, const vector<string> & comments) -> void
    {
        ofstream out(path);
        if (! out)
            throw ParseError("cannot open '" + path.string() + "' for writing");
        write_dimacs(out, g, comments);
    }
}
