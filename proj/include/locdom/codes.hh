/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef LOCDOM_GUARD_CODES_HH
#define LOCDOM_GUARD_CODES_HH 1

#include <locdom/graph.hh>

#include <span>
#include <string>
#include <vector>

namespace locdom
{
    /**
     * An ordered set of distinct vertices. The order is fixed at construction
     * and defines the coordinate order of metric vectors.
     */
    class Code
    {
        public:
            Code() = default;

            /// Throws PreconditionError on negative or repeated vertices.
            explicit Code(std::vector<Vertex> members);
            Code(std::initializer_list<Vertex> members);

            auto members() const -> std::span<const Vertex> { return _members; }
            auto size() const -> int { return int(_members.size()); }
            auto empty() const -> bool { return _members.empty(); }
            auto contains(Vertex v) const -> bool;

            /// Members as a bitset over 0..n-1; throws if any member >= n.
            auto as_set(int n) const -> VertexSet;

            /// Same members, ascending.
            auto sorted() const -> Code;

            /// "{1,4}" in construction order.
            auto to_string() const -> std::string;

            friend auto operator== (const Code &, const Code &) -> bool = default;

        private:
            std::vector<Vertex> _members;
    };

    auto operator| (const Code & a, const Code & b) -> Code;

    using MetricVector = std::vector<Distance>;

    /// (d(v, x_1), ..., d(v, x_k)) for S = (x_1, ..., x_k).
    auto metric_vector(const Graph & g, const Code & s, Vertex v) -> MetricVector;

    // The four code properties. Every one requires a connected graph and
    // throws PreconditionError otherwise (or on members out of range).
    //
    // Locating compares metric vectors of vertices outside S only: a member
    // of S is the unique vertex at distance 0 from itself, so it is always
    // told apart. Consequences for the empty code: it dominates no graph
    // with n >= 1, and it locates only graphs with n <= 1.

    auto is_dominating(const Graph & g, const Code & s) -> bool;
    auto is_locating(const Graph & g, const Code & s) -> bool;
    auto is_mld(const Graph & g, const Code & s) -> bool;
    auto is_ld(const Graph & g, const Code & s) -> bool;

    /**
     * Reusable evaluator for many codes on one graph. Holds scratch buffers,
     * so an instance must not be shared between threads; make one per worker.
     * Member lists are trusted (distinct, in range) for speed.
     */
    class CodeChecker
    {
        public:
            /// Throws PreconditionError unless g is connected.
            explicit CodeChecker(const Graph & g);

            auto dominating(std::span<const Vertex> members) -> bool;
            auto locating(std::span<const Vertex> members) -> bool;
            auto mld(std::span<const Vertex> members) -> bool { return dominating(members) && locating(members); }
            auto ld(std::span<const Vertex> members) -> bool;

            auto graph() const -> const Graph & { return _g; }

        private:
            const Graph & _g;
            const DistanceMatrix & _d;
            int _n, _words;
            std::vector<Word> _mask;
            std::vector<Word> _scratch;
            std::vector<int> _index;
            std::vector<Vertex> _outside;

            auto load(std::span<const Vertex> members) -> void;
            auto in_mask(Vertex v) const -> bool
            {
                return (_mask[v / bits_per_word] >> (v % bits_per_word)) & 1;
            }
    };
}

#endif
