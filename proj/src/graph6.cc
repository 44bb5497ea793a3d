/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <locdom/graph6.hh>
#include <locdom/errors.hh>

#include <numeric>
#include <vector>

using std::optional;
using std::span;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace locdom
{
    namespace
    {
        auto encode(const Graph & g, span<const Vertex> order) -> string
        {
            int n = g.order();
            string result;
            if (n <= graph6_short_form_max_order)
                result.push_back(char(n + 63));
            else {
                result.push_back('~');
                result.push_back(char(((n >> 12) & 63) + 63));
                result.push_back(char(((n >> 6) & 63) + 63));
                result.push_back(char((n & 63) + 63));
            }

            int value = 0, bits = 0;
            for (int j = 1 ; j < n ; ++j)
                for (int i = 0 ; i < j ; ++i) {
                    value = (value << 1) | (g.adjacent(order[i], order[j]) ? 1 : 0);
                    if (++bits == 6) {
                        result.push_back(char(value + 63));
                        value = bits = 0;
                    }
                }
            if (bits > 0)
                result.push_back(char((value << (6 - bits)) + 63));
            return result;
        }
    }

    auto graph6_of_ordering(const Graph & g, span<const Vertex> order) -> string
    {
        return encode(g, order);
    }

    auto write_graph6(const Graph & g) -> string
    {
        if (g.order() > graph6_short_form_max_order)
            throw PreconditionError("graph6 short form supports at most 62 vertices, got " + to_string(g.order()));
        vector<Vertex> identity(g.order());
        std::iota(identity.begin(), identity.end(), 0);
        return encode(g, identity);
    }

    auto read_graph6(string_view text) -> Graph
    {
        while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
            text.remove_suffix(1);
        if (text.empty())
            throw ParseError("empty graph6 string");
        for (char c : text)
            if (c < 63 || c > 126)
                throw ParseError("graph6 byte out of range: " + to_string(int(static_cast<unsigned char>(c))));
        if (text[0] == '~')
            throw ParseError("graph6 long form (n > 62) is not supported");

        int n = text[0] - 63;
        if (n < 1)
            throw ParseError("graph6 order must be positive");
        long pairs = long(n) * (n - 1) / 2;
        long expected = 1 + (pairs + 5) / 6;
        if (long(text.size()) != expected)
            throw ParseError("graph6 string for n=" + to_string(n) + " must have " + to_string(expected)
                    + " bytes, got " + to_string(text.size()));

        GraphBuilder builder(n);
        long k = 0;
        for (int j = 1 ; j < n ; ++j)
            for (int i = 0 ; i < j ; ++i, ++k) {
                int byte = text[1 + k / 6] - 63;
                if ((byte >> (5 - k % 6)) & 1)
                    builder.add_edge(i, j);
            }

        // Padding bits must be zero for the encoding to be canonical.
        if (pairs % 6 != 0) {
            int last = text.back() - 63;
            int padding = int(6 - pairs % 6);
            if (last & ((1 << padding) - 1))
                throw ParseError("graph6 padding bits are not zero");
        }
        return builder.build();
    }

    Graph6Reader::Graph6Reader(std::istream & in) :
        _in(in)
    {
    }

    auto Graph6Reader::next() -> optional<Graph>
    {
        string line;
        while (std::getline(_in, line)) {
            ++_line;
            if (! line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.starts_with(">>graph6<<"))
                line.erase(0, 10);
            if (line.empty())
                continue;
            _text = line;
            try {
                return read_graph6(line);
            }
            catch (const ParseError & e) {
                throw ParseError("line " + to_string(_line) + ": " + e.what());
            }
        }
        return std::nullopt;
    }
}
