/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef LOCDOM_GUARD_GRAPH6_HH
#define LOCDOM_GUARD_GRAPH6_HH 1

#include <locdom/graph.hh>

#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace locdom
{
    inline constexpr int graph6_short_form_max_order = 62;

    /**
     * Standard graph6 encoding: one byte n + 63, then the upper triangle
     * x(0,1) x(0,2) x(1,2) x(0,3) ... packed six bits per byte, most
     * significant bit first, each byte offset by 63. Only the short form
     * (n <= 62) is supported; larger graphs throw PreconditionError.
     */
    auto write_graph6(const Graph & g) -> std::string;

    /// Inverse of write_graph6. Throws ParseError on malformed input,
    /// including the long form.
    auto read_graph6(std::string_view text) -> Graph;

    /// graph6 bytes of g relabelled so that position i holds vertex order[i].
    /// Used for canonical forms; falls back to the 4-byte long-form header for
    /// n > 62 so that every order has an encoding.
    auto graph6_of_ordering(const Graph & g, std::span<const Vertex> order) -> std::string;

    /**
     * Newline-delimited graph6 reader. Blank lines and a leading
     * ">>graph6<<" header are skipped.
     */
    class Graph6Reader
    {
        public:
            explicit Graph6Reader(std::istream & in);

            /// Next graph, or nullopt at end of input. ParseError messages
            /// carry the offending line number.
            auto next() -> std::optional<Graph>;

            /// 1-based number of the line the last graph came from.
            auto line_number() const -> int { return _line; }
            auto last_text() const -> const std::string & { return _text; }

        private:
            std::istream & _in;
            int _line = 0;
            std::string _text;
    };
}

#endif
