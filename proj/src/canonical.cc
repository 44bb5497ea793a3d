/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <locdom/canonical.hh>
#include <locdom/graph6.hh>

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace locdom
{
    namespace
    {
        using Cells = vector<vector<Vertex>>;

        auto neighbours_in(const Graph & g, Vertex v, const vector<Word> & mask) -> int
        {
            auto r = g.row(v);
            int result = 0;
            for (size_t i = 0 ; i < mask.size() ; ++i)
                result += std::popcount(r[i] & mask[i]);
            return result;
        }

        // Split every cell by the number of neighbours in each splitter cell,
        // repeating until the partition is equitable. Subcells replace their
        // parent in place, ordered by ascending count, so a singleton keeps
        // its position once created.
        auto refine(const Graph & g, Cells & cells) -> void
        {
            int n = g.order();
            vector<Word> mask(g.words_per_row());
            vector<int> count(n);
            vector<std::pair<int, Vertex>> keyed;

            bool changed = true;
            while (changed) {
                changed = false;
                for (size_t s = 0 ; s < cells.size() ; ++s) {
                    std::fill(mask.begin(), mask.end(), 0);
                    for (auto v : cells[s])
                        mask[v / bits_per_word] |= Word{1} << (v % bits_per_word);

                    Cells next;
                    next.reserve(cells.size() + 1);
                    bool split_here = false;
                    for (auto & cell : cells) {
                        if (cell.size() == 1) {
                            next.push_back(std::move(cell));
                            continue;
                        }
                        keyed.clear();
                        for (auto v : cell)
                            keyed.emplace_back(neighbours_in(g, v, mask), v);
                        std::sort(keyed.begin(), keyed.end());
                        if (keyed.front().first == keyed.back().first) {
                            next.push_back(std::move(cell));
                            continue;
                        }
                        split_here = true;
                        vector<Vertex> current;
                        for (size_t i = 0 ; i < keyed.size() ; ++i) {
                            if (i > 0 && keyed[i].first != keyed[i - 1].first) {
                                next.push_back(std::move(current));
                                current.clear();
                            }
                            current.push_back(keyed[i].second);
                        }
                        next.push_back(std::move(current));
                    }
                    cells = std::move(next);
                    if (split_here)
                        changed = true;
                }
            }
        }

        auto find_root(vector<Vertex> & parent, Vertex v) -> Vertex
        {
            while (parent[v] != v)
                v = parent[v] = parent[parent[v]];
            return v;
        }

        class Search
        {
            public:
                explicit Search(const Graph & g) :
                    _g(g)
                {
                }

                auto run() -> Canonical
                {
                    Cells cells;
                    vector<Vertex> all(_g.order());
                    std::iota(all.begin(), all.end(), 0);
                    cells.push_back(std::move(all));
                    refine(_g, cells);
                    vector<Vertex> path;
                    explore(cells, path);
                    return Canonical{ std::move(_best_order), CanonicalForm{ std::move(_best_code) } };
                }

            private:
                struct Leaf
                {
                    string code;
                    vector<Vertex> order;
                    vector<Vertex> path;
                };

                const Graph & _g;
                optional<Leaf> _first;
                string _best_code;
                vector<Vertex> _best_order;
                vector<Vertex> _best_path;
                vector<vector<Vertex>> _automorphisms;

                static auto common_prefix(const vector<Vertex> & a, const vector<Vertex> & b) -> int
                {
                    size_t i = 0;
                    while (i < a.size() && i < b.size() && a[i] == b[i])
                        ++i;
                    return int(i);
                }

                auto record_automorphism(const vector<Vertex> & from, const vector<Vertex> & to) -> void
                {
                    vector<Vertex> image(_g.order());
                    for (size_t i = 0 ; i < from.size() ; ++i)
                        image[from[i]] = to[i];
                    _automorphisms.push_back(std::move(image));
                }

                // Returns the depth at which exploration resumes.
                auto leaf(const Cells & cells, const vector<Vertex> & path) -> int
                {
                    int depth = int(path.size());
                    vector<Vertex> order;
                    order.reserve(_g.order());
                    for (auto & c : cells)
                        order.push_back(c.front());
                    string code = graph6_of_ordering(_g, order);

                    if (! _first) {
                        _first = Leaf{ code, order, path };
                        _best_code = code;
                        _best_order = order;
                        _best_path = path;
                        return depth - 1;
                    }

                    if (code == _first->code) {
                        record_automorphism(_first->order, order);
                        return common_prefix(_first->path, path);
                    }

                    if (code == _best_code) {
                        record_automorphism(_best_order, order);
                        return common_prefix(_best_path, path);
                    }

                    if (code < _best_code) {
                        _best_code = std::move(code);
                        _best_order = std::move(order);
                        _best_path = path;
                    }
                    return depth - 1;
                }

                auto explore(const Cells & cells, vector<Vertex> & path) -> int
                {
                    int depth = int(path.size());
                    auto target = std::find_if(cells.begin(), cells.end(), [] (const auto & c) { return c.size() > 1; });
                    if (target == cells.end())
                        return leaf(cells, path);

                    size_t target_index = target - cells.begin();
                    vector<Vertex> candidates = *target;
                    std::sort(candidates.begin(), candidates.end());

                    vector<Vertex> explored;
                    for (auto v : candidates) {
                        if (! explored.empty() && same_orbit_as_explored(v, explored, path))
                            continue;

                        Cells child;
                        child.reserve(cells.size() + 1);
                        for (size_t i = 0 ; i < cells.size() ; ++i) {
                            if (i != target_index) {
                                child.push_back(cells[i]);
                                continue;
                            }
                            child.push_back({ v });
                            vector<Vertex> rest;
                            for (auto u : cells[i])
                                if (u != v)
                                    rest.push_back(u);
                            child.push_back(std::move(rest));
                        }
                        refine(_g, child);

                        path.push_back(v);
                        int resume = explore(child, path);
                        path.pop_back();
                        explored.push_back(v);

                        if (resume < depth)
                            return resume;
                    }
                    return depth - 1;
                }

                // Orbits of the group generated by the stored automorphisms
                // that fix the current path pointwise.
                auto same_orbit_as_explored(Vertex v, const vector<Vertex> & explored, const vector<Vertex> & path) -> bool
                {
                    if (_automorphisms.empty())
                        return false;

                    vector<Vertex> parent(_g.order());
                    std::iota(parent.begin(), parent.end(), 0);
                    bool any = false;
                    for (auto & gamma : _automorphisms) {
                        if (! std::all_of(path.begin(), path.end(), [&] (Vertex p) { return gamma[p] == p; }))
                            continue;
                        any = true;
                        for (Vertex x = 0 ; x < _g.order() ; ++x) {
                            Vertex a = find_root(parent, x), b = find_root(parent, gamma[x]);
                            if (a != b)
                                parent[a] = b;
                        }
                    }
                    if (! any)
                        return false;

                    Vertex root = find_root(parent, v);
                    return std::any_of(explored.begin(), explored.end(), [&] (Vertex u) { return find_root(parent, u) == root; });
                }
        };
    }

    auto canonicalise(const Graph & g) -> Canonical
    {
        if (g.order() == 0)
            return Canonical{ {}, CanonicalForm{ graph6_of_ordering(g, {}) } };
        return Search{ g }.run();
    }

    auto canonical_form(const Graph & g) -> CanonicalForm
    {
        return canonicalise(g).form;
    }

    auto are_isomorphic(const Graph & g, const Graph & h) -> bool
    {
        if (g.order() != h.order() || g.size() != h.size())
            return false;
        return canonical_form(g) == canonical_form(h);
    }
}
