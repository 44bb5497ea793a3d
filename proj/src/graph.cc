/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <locdom/graph.hh>
#include <locdom/errors.hh>

#include <algorithm>
#include <bit>
#include <mutex>
#include <string>

using std::size_t;
using std::span;
using std::string;
using std::to_string;
using std::vector;

namespace locdom
{
    VertexSet::VertexSet(int universe) :
        _universe(universe),
        _words(words_for(universe), 0)
    {
    }

    auto VertexSet::from_members(int universe, span<const Vertex> members) -> VertexSet
    {
        VertexSet result(universe);
        for (auto v : members) {
            if (v < 0 || v >= universe)
                throw PreconditionError("vertex " + to_string(v) + " out of range for order " + to_string(universe));
            result.insert(v);
        }
        return result;
    }

    auto VertexSet::count() const -> int
    {
        int result = 0;
        for (auto w : _words)
            result += std::popcount(w);
        return result;
    }

    auto VertexSet::empty() const -> bool
    {
        return std::all_of(_words.begin(), _words.end(), [] (Word w) { return w == 0; });
    }

    auto VertexSet::intersects(const VertexSet & other) const -> bool
    {
        for (size_t i = 0 ; i < _words.size() ; ++i)
            if (_words[i] & other._words[i])
                return true;
        return false;
    }

    auto VertexSet::members() const -> vector<Vertex>
    {
        vector<Vertex> result;
        for (size_t i = 0 ; i < _words.size() ; ++i)
            for (Word w = _words[i] ; w ; w &= w - 1)
                result.push_back(int(i) * bits_per_word + std::countr_zero(w));
        return result;
    }

    auto VertexSet::operator&= (const VertexSet & other) -> VertexSet &
    {
        for (size_t i = 0 ; i < _words.size() ; ++i)
            _words[i] &= other._words[i];
        return *this;
    }

    auto VertexSet::operator|= (const VertexSet & other) -> VertexSet &
    {
        for (size_t i = 0 ; i < _words.size() ; ++i)
            _words[i] |= other._words[i];
        return *this;
    }

    DistanceMatrix::DistanceMatrix(int n, vector<Distance> entries) :
        _n(n),
        _entries(std::move(entries))
    {
    }

    auto DistanceMatrix::all_finite() const -> bool
    {
        return std::none_of(_entries.begin(), _entries.end(), [] (Distance d) { return d == unreachable; });
    }

    auto DistanceMatrix::max_finite() const -> Distance
    {
        Distance result = 0;
        for (auto d : _entries)
            if (d != unreachable)
                result = std::max(result, d);
        return result;
    }

    struct Graph::DistanceCache
    {
        std::once_flag once;
        DistanceMatrix matrix;
    };

    namespace
    {
        auto bfs_distances(const Graph & g) -> DistanceMatrix
        {
            int n = g.order(), words = g.words_per_row();
            vector<Distance> entries(size_t(n) * n, DistanceMatrix::unreachable);
            vector<Word> seen(words), frontier(words), next(words);

            for (Vertex s = 0 ; s < n ; ++s) {
                std::fill(seen.begin(), seen.end(), 0);
                std::fill(frontier.begin(), frontier.end(), 0);
                seen[s / bits_per_word] |= Word{1} << (s % bits_per_word);
                frontier[s / bits_per_word] |= Word{1} << (s % bits_per_word);
                Distance depth = 0;
                bool any = true;
                while (any) {
                    std::fill(next.begin(), next.end(), 0);
                    for (int i = 0 ; i < words ; ++i)
                        for (Word w = frontier[i] ; w ; w &= w - 1) {
                            Vertex v = i * bits_per_word + std::countr_zero(w);
                            entries[size_t(s) * n + v] = depth;
                            auto r = g.row(v);
                            for (int j = 0 ; j < words ; ++j)
                                next[j] |= r[j];
                        }
                    any = false;
                    for (int j = 0 ; j < words ; ++j) {
                        next[j] &= ~seen[j];
                        seen[j] |= next[j];
                        any = any || next[j];
                    }
                    std::swap(frontier, next);
                    ++depth;
                }
            }

            return DistanceMatrix{ n, std::move(entries) };
        }
    }

    Graph::Graph() :
        _cache(std::make_shared<DistanceCache>())
    {
    }

    auto Graph::from_edge_list(int n, span<const Edge> edges) -> Graph
    {
        if (n < 1)
            throw PreconditionError("graph order must be positive, got " + to_string(n));
        GraphBuilder builder(n);
        for (auto [u, v] : edges)
            builder.add_edge(u, v);
        return builder.build();
    }

    auto Graph::size() const -> int
    {
        int twice = 0;
        for (auto w : _rows)
            twice += std::popcount(w);
        return twice / 2;
    }

    auto Graph::degree(Vertex v) const -> int
    {
        int result = 0;
        for (auto w : row(v))
            result += std::popcount(w);
        return result;
    }

    auto Graph::neighbourhood(Vertex v) const -> VertexSet
    {
        VertexSet result(_n);
        for (Vertex u = 0 ; u < _n ; ++u)
            if (adjacent(v, u))
                result.insert(u);
        return result;
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        for (Vertex u = 0 ; u < _n ; ++u)
            for (Vertex v = u + 1 ; v < _n ; ++v)
                if (adjacent(u, v))
                    result.emplace_back(u, v);
        return result;
    }

    auto Graph::distances() const -> const DistanceMatrix &
    {
        std::call_once(_cache->once, [&] { _cache->matrix = bfs_distances(*this); });
        return _cache->matrix;
    }

    auto Graph::is_connected() const -> bool
    {
        return _n > 0 && distances().all_finite();
    }

    auto Graph::is_tree() const -> bool
    {
        return is_connected() && size() == _n - 1;
    }

    GraphBuilder::GraphBuilder(int n) :
        _n(n),
        _words(words_for(n)),
        _rows(size_t(n) * words_for(n), 0)
    {
    }

    auto GraphBuilder::add_edge(Vertex u, Vertex v) -> GraphBuilder &
    {
        if (u < 0 || v < 0 || u >= _n || v >= _n)
            throw PreconditionError("edge (" + to_string(u) + "," + to_string(v) + ") out of range for order " + to_string(_n));
        if (u == v)
            throw PreconditionError("loop edge at vertex " + to_string(u));
        _rows[size_t(u) * _words + v / bits_per_word] |= Word{1} << (v % bits_per_word);
        _rows[size_t(v) * _words + u / bits_per_word] |= Word{1} << (u % bits_per_word);
        return *this;
    }

    auto GraphBuilder::adjacent(Vertex u, Vertex v) const -> bool
    {
        return (_rows[size_t(u) * _words + v / bits_per_word] >> (v % bits_per_word)) & 1;
    }

    auto GraphBuilder::build() const -> Graph
    {
        Graph g;
        g._n = _n;
        g._words = _words;
        g._rows = _rows;
        return g;
    }

    auto diameter(const Graph & g) -> int
    {
        if (! g.is_connected())
            throw PreconditionError("diameter requires a connected graph");
        return g.distances().max_finite();
    }

    auto strong_product(const Graph & g, const Graph & h) -> Graph
    {
        int m = h.order();
        GraphBuilder builder(g.order() * m);
        for (Vertex i = 0 ; i < g.order() ; ++i)
            for (Vertex j = 0 ; j < m ; ++j)
                for (Vertex k = 0 ; k < g.order() ; ++k)
                    for (Vertex l = 0 ; l < m ; ++l) {
                        bool first = (i == k) || g.adjacent(i, k);
                        bool second = (j == l) || h.adjacent(j, l);
                        if (first && second && ! (i == k && j == l))
                            builder.add_edge(i * m + j, k * m + l);
                    }
        return builder.build();
    }

    auto disjoint_union(const Graph & g, const Graph & h) -> Graph
    {
        int shift = g.order();
        GraphBuilder builder(g.order() + h.order());
        for (auto [u, v] : g.edges())
            builder.add_edge(u, v);
        for (auto [u, v] : h.edges())
            builder.add_edge(u + shift, v + shift);
        return builder.build();
    }

    auto join(const Graph & g, const Graph & h) -> Graph
    {
        int shift = g.order();
        GraphBuilder builder(g.order() + h.order());
        for (auto [u, v] : g.edges())
            builder.add_edge(u, v);
        for (auto [u, v] : h.edges())
            builder.add_edge(u + shift, v + shift);
        for (Vertex u = 0 ; u < g.order() ; ++u)
            for (Vertex v = 0 ; v < h.order() ; ++v)
                builder.add_edge(u, v + shift);
        return builder.build();
    }

    auto complement(const Graph & g) -> Graph
    {
        GraphBuilder builder(g.order());
        for (Vertex u = 0 ; u < g.order() ; ++u)
            for (Vertex v = u + 1 ; v < g.order() ; ++v)
                if (! g.adjacent(u, v))
                    builder.add_edge(u, v);
        return builder.build();
    }

    auto induced_subgraph(const Graph & g, span<const Vertex> keep) -> Graph
    {
        int m = int(keep.size());
        GraphBuilder builder(m);
        for (int a = 0 ; a < m ; ++a)
            for (int b = a + 1 ; b < m ; ++b)
                if (g.adjacent(keep[a], keep[b]))
                    builder.add_edge(a, b);
        return builder.build();
    }

    auto remove_vertex(const Graph & g, Vertex v) -> Graph
    {
        vector<Vertex> keep;
        keep.reserve(g.order() - 1);
        for (Vertex u = 0 ; u < g.order() ; ++u)
            if (u != v)
                keep.push_back(u);
        return induced_subgraph(g, keep);
    }

    auto relabel(const Graph & g, span<const Vertex> image) -> Graph
    {
        if (int(image.size()) != g.order())
            throw PreconditionError("relabelling has the wrong length");
        GraphBuilder builder(g.order());
        for (auto [u, v] : g.edges())
            builder.add_edge(image[u], image[v]);
        return builder.build();
    }

    auto cut_vertices(const Graph & g) -> VertexSet
    {
        // Hopcroft-Tarjan low-link, iterative so deep paths cannot blow the stack.
        int n = g.order();
        VertexSet result(n);
        if (n < 3)
            return result;

        vector<int> disc(n, -1), low(n, 0), parent(n, -1), next_neighbour(n, 0);
        vector<Vertex> stack;
        int time = 0;
        int root_children = 0;

        disc[0] = low[0] = time++;
        stack.push_back(0);
        while (! stack.empty()) {
            Vertex v = stack.back();
            if (next_neighbour[v] < n) {
                Vertex u = next_neighbour[v]++;
                if (! g.adjacent(v, u))
                    continue;
                if (disc[u] == -1) {
                    parent[u] = v;
                    disc[u] = low[u] = time++;
                    if (v == 0)
                        ++root_children;
                    stack.push_back(u);
                }
                else if (u != parent[v])
                    low[v] = std::min(low[v], disc[u]);
            }
            else {
                stack.pop_back();
                Vertex p = parent[v];
                if (p != -1) {
                    low[p] = std::min(low[p], low[v]);
                    if (p != 0 && low[v] >= disc[p])
                        result.insert(p);
                }
            }
        }

        if (root_children > 1)
            result.insert(0);
        return result;
    }

    auto tree_profile(const Graph & g) -> TreeProfile
    {
        if (! g.is_tree())
            throw PreconditionError("tree_profile requires a tree");

        int n = g.order();
        TreeProfile result;
        result.support_vertices = VertexSet(n);
        result.strong_support_vertices = VertexSet(n);

        vector<int> leaf_neighbours(n, 0);
        for (Vertex v = 0 ; v < n ; ++v)
            if (g.degree(v) == 1) {
                ++result.leaves;
                for (Vertex u = 0 ; u < n ; ++u)
                    if (g.adjacent(v, u))
                        ++leaf_neighbours[u];
            }

        for (Vertex v = 0 ; v < n ; ++v) {
            if (leaf_neighbours[v] >= 1)
                result.support_vertices.insert(v);
            if (leaf_neighbours[v] >= 2)
                result.strong_support_vertices.insert(v);
        }
        result.supports = result.support_vertices.count();
        return result;
    }
}
