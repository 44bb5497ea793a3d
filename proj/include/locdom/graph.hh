/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef LOCDOM_GUARD_GRAPH_HH
#define LOCDOM_GUARD_GRAPH_HH 1

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace locdom
{
    using Vertex = int;
    using Edge = std::pair<Vertex, Vertex>;
    using Distance = std::uint16_t;
    using Word = std::uint64_t;

    inline constexpr int bits_per_word = 64;

    inline constexpr auto words_for(int n) -> int
    {
        return (n + bits_per_word - 1) / bits_per_word;
    }

    /**
     * A subset of {0, ..., n-1}, stored as packed words. The universe size is
     * part of the value: two sets over different universes never compare
     * equal.
     */
    class VertexSet
    {
        public:
            VertexSet() = default;
            explicit VertexSet(int universe);

            static auto from_members(int universe, std::span<const Vertex> members) -> VertexSet;

            auto universe() const -> int { return _universe; }
            auto contains(Vertex v) const -> bool
            {
                return (_words[v / bits_per_word] >> (v % bits_per_word)) & 1;
            }
            auto insert(Vertex v) -> void { _words[v / bits_per_word] |= Word{1} << (v % bits_per_word); }
            auto erase(Vertex v) -> void { _words[v / bits_per_word] &= ~(Word{1} << (v % bits_per_word)); }

            auto count() const -> int;
            auto empty() const -> bool;
            auto intersects(const VertexSet & other) const -> bool;
            auto members() const -> std::vector<Vertex>;
            auto words() const -> std::span<const Word> { return _words; }

            auto operator&= (const VertexSet & other) -> VertexSet &;
            auto operator|= (const VertexSet & other) -> VertexSet &;

            friend auto operator== (const VertexSet &, const VertexSet &) -> bool = default;

        private:
            int _universe = 0;
            std::vector<Word> _words;
    };

    /**
     * All-pairs hop distances. Entries for vertices in different components
     * hold DistanceMatrix::unreachable.
     */
    class DistanceMatrix
    {
        public:
            static constexpr Distance unreachable = 0xffff;

            DistanceMatrix() = default;
            DistanceMatrix(int n, std::vector<Distance> entries);

            auto order() const -> int { return _n; }
            auto operator() (Vertex u, Vertex v) const -> Distance { return _entries[std::size_t(u) * _n + v]; }
            auto row(Vertex u) const -> std::span<const Distance>
            {
                return std::span<const Distance>{ _entries }.subspan(std::size_t(u) * _n, _n);
            }

            /// True iff every entry is finite, i.e. the graph is connected.
            auto all_finite() const -> bool;

            /// Largest finite entry (0 for n <= 1).
            auto max_finite() const -> Distance;

        private:
            int _n = 0;
            std::vector<Distance> _entries;
    };

    /**
     * Immutable simple undirected graph on vertices 0..n-1 with dense
     * bit-matrix adjacency. Distances are computed on first request and then
     * shared by all copies; this is safe across threads.
     */
    class Graph
    {
        public:
            /// The graph on zero vertices. Only useful as a placeholder.
            Graph();

            /// Throws PreconditionError on n < 1, out-of-range endpoints or
            /// loops. Duplicate edges collapse.
            static auto from_edge_list(int n, std::span<const Edge> edges) -> Graph;

            auto order() const -> int { return _n; }
            auto size() const -> int;

            auto adjacent(Vertex u, Vertex v) const -> bool
            {
                return (_rows[std::size_t(u) * _words + v / bits_per_word] >> (v % bits_per_word)) & 1;
            }
            auto degree(Vertex v) const -> int;
            auto neighbourhood(Vertex v) const -> VertexSet;

            /// Packed open neighbourhood of v, words_for(order()) words long.
            auto row(Vertex v) const -> std::span<const Word>
            {
                return std::span<const Word>{ _rows }.subspan(std::size_t(v) * _words, _words);
            }
            auto words_per_row() const -> int { return _words; }

            auto edges() const -> std::vector<Edge>;

            auto distances() const -> const DistanceMatrix &;
            auto is_connected() const -> bool;
            auto is_tree() const -> bool;

            /// Same labelled graph (not isomorphism).
            friend auto operator== (const Graph & a, const Graph & b) -> bool
            {
                return a._n == b._n && a._rows == b._rows;
            }

        private:
            friend class GraphBuilder;
            struct DistanceCache;

            int _n = 0;
            int _words = 0;
            std::vector<Word> _rows;
            std::shared_ptr<DistanceCache> _cache;
    };

    /// Mutable adjacency accumulator; the only way to make a Graph besides
    /// from_edge_list.
    class GraphBuilder
    {
        public:
            explicit GraphBuilder(int n);

            auto order() const -> int { return _n; }
            auto add_edge(Vertex u, Vertex v) -> GraphBuilder &;
            auto adjacent(Vertex u, Vertex v) const -> bool;
            auto build() const -> Graph;

        private:
            int _n;
            int _words;
            std::vector<Word> _rows;
    };

    struct TreeProfile
    {
        int leaves = 0;
        int supports = 0;
        VertexSet support_vertices;
        VertexSet strong_support_vertices;
    };

    /// Throws PreconditionError on a disconnected graph.
    auto diameter(const Graph & g) -> int;

    /// Strong product, vertex (i, j) numbered i * h.order() + j.
    auto strong_product(const Graph & g, const Graph & h) -> Graph;

    /// Vertices of g first, then those of h shifted by g.order().
    auto disjoint_union(const Graph & g, const Graph & h) -> Graph;
    auto join(const Graph & g, const Graph & h) -> Graph;
    auto complement(const Graph & g) -> Graph;

    /// Subgraph induced by the given vertices, renumbered in the given order.
    auto induced_subgraph(const Graph & g, std::span<const Vertex> keep) -> Graph;

    /// g with vertex v deleted; later vertices shift down by one.
    auto remove_vertex(const Graph & g, Vertex v) -> Graph;

    /// Image of g under the bijection v -> image[v].
    auto relabel(const Graph & g, std::span<const Vertex> image) -> Graph;

    /// Vertices whose removal disconnects g (g assumed connected).
    auto cut_vertices(const Graph & g) -> VertexSet;

    /// Throws PreconditionError unless g is a tree.
    auto tree_profile(const Graph & g) -> TreeProfile;
}

#endif
