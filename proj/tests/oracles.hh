/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef LOCDOM_GUARD_TESTS_ORACLES_HH
#define LOCDOM_GUARD_TESTS_ORACLES_HH 1

// Slow, definition-level reimplementations used only to check the library.
// Nothing here calls library algorithms; graphs enter as adjacency matrices.

#include <locdom/graph.hh>

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle
{
    using Matrix = std::vector<std::vector<int>>;
    using Set = std::vector<int>;

    inline constexpr int inf = INT_MAX / 4;

    inline auto adjacency(const locdom::Graph & g) -> Matrix
    {
        int n = g.order();
        Matrix a(n, std::vector<int>(n, 0));
        for (int u = 0 ; u < n ; ++u)
            for (int v = 0 ; v < n ; ++v)
                a[u][v] = g.adjacent(u, v) ? 1 : 0;
        return a;
    }

    inline auto from_matrix(const Matrix & a) -> locdom::Graph
    {
        int n = int(a.size());
        std::vector<locdom::Edge> edges;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (a[u][v])
                    edges.emplace_back(u, v);
        return locdom::Graph::from_edge_list(n, edges);
    }

    inline auto floyd_warshall(const Matrix & a) -> Matrix
    {
        int n = int(a.size());
        Matrix d(n, std::vector<int>(n, inf));
        for (int u = 0 ; u < n ; ++u)
            for (int v = 0 ; v < n ; ++v)
                d[u][v] = u == v ? 0 : a[u][v] ? 1 : inf;
        for (int k = 0 ; k < n ; ++k)
            for (int i = 0 ; i < n ; ++i)
                for (int j = 0 ; j < n ; ++j)
                    d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
        return d;
    }

    inline auto connected(const Matrix & a) -> bool
    {
        auto d = floyd_warshall(a);
        for (auto & row : d)
            for (auto x : row)
                if (x >= inf)
                    return false;
        return true;
    }

    inline auto member(const Set & s, int v) -> bool
    {
        return std::find(s.begin(), s.end(), v) != s.end();
    }

    inline auto dominating(const Matrix & a, const Set & s) -> bool
    {
        int n = int(a.size());
        for (int v = 0 ; v < n ; ++v) {
            if (member(s, v))
                continue;
            bool hit = false;
            for (auto x : s)
                hit = hit || a[v][x];
            if (! hit)
                return false;
        }
        return true;
    }

    /// All-vertex reading: every pair of distinct vertices, inside S or not.
    inline auto locating(const Matrix & a, const Set & s) -> bool
    {
        auto d = floyd_warshall(a);
        int n = int(a.size());
        std::set<std::vector<int>> seen;
        for (int v = 0 ; v < n ; ++v) {
            std::vector<int> vec;
            for (auto x : s)
                vec.push_back(d[v][x]);
            if (! seen.insert(vec).second)
                return false;
        }
        return true;
    }

    inline auto mld(const Matrix & a, const Set & s) -> bool
    {
        return dominating(a, s) && locating(a, s);
    }

    inline auto ld(const Matrix & a, const Set & s) -> bool
    {
        int n = int(a.size());
        std::set<Set> traces;
        for (int v = 0 ; v < n ; ++v) {
            if (member(s, v))
                continue;
            Set trace;
            for (int x = 0 ; x < n ; ++x)
                if (a[v][x] && member(s, x))
                    trace.push_back(x);
            if (trace.empty() || ! traces.insert(trace).second)
                return false;
        }
        return true;
    }

    struct Minimum
    {
        int value;
        Set witness;
    };

    /// Smallest satisfying subset over all 2^n; ties go to the
    /// lexicographically least ascending member list.
    template <typename Pred>
    auto brute_minimum(const Matrix & a, Pred && pred) -> std::optional<Minimum>
    {
        int n = int(a.size());
        std::optional<Minimum> best;
        for (std::uint32_t mask = 0 ; mask < (1u << n) ; ++mask) {
            Set s;
            for (int v = 0 ; v < n ; ++v)
                if ((mask >> v) & 1)
                    s.push_back(v);
            if (best && int(s.size()) > best->value)
                continue;
            if (! pred(a, s))
                continue;
            if (! best || int(s.size()) < best->value || s < best->witness)
                best = Minimum{ int(s.size()), s };
        }
        return best;
    }

    inline auto brute_gamma(const Matrix & a) { return brute_minimum(a, dominating); }
    inline auto brute_beta(const Matrix & a) { return brute_minimum(a, locating); }
    inline auto brute_eta(const Matrix & a) { return brute_minimum(a, mld); }
    inline auto brute_lambda(const Matrix & a) { return brute_minimum(a, ld); }

    /// Lexicographically least upper-triangle bit string over all n!
    /// relabellings.
    inline auto brute_canonical(const Matrix & a) -> std::string
    {
        int n = int(a.size());
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::string best;
        do {
            std::string bits;
            for (int j = 1 ; j < n ; ++j)
                for (int i = 0 ; i < j ; ++i)
                    bits += a[p[i]][p[j]] ? '1' : '0';
            if (best.empty() || bits < best)
                best = bits;
        } while (std::next_permutation(p.begin(), p.end()));
        return std::to_string(n) + ":" + best;
    }

    inline auto brute_isomorphic(const Matrix & a, const Matrix & b) -> bool
    {
        return a.size() == b.size() && brute_canonical(a) == brute_canonical(b);
    }

    /// Every labelled graph on n vertices, connected ones kept, one per
    /// class by brute_canonical. Practical for n <= 6.
    inline auto labelled_connected_classes(int n) -> std::map<std::string, Matrix>
    {
        std::vector<std::pair<int, int>> slots;
        for (int j = 1 ; j < n ; ++j)
            for (int i = 0 ; i < j ; ++i)
                slots.emplace_back(i, j);

        std::map<std::string, Matrix> classes;
        for (std::uint64_t mask = 0 ; mask < (std::uint64_t{ 1 } << slots.size()) ; ++mask) {
            Matrix a(n, std::vector<int>(n, 0));
            for (std::size_t k = 0 ; k < slots.size() ; ++k)
                if ((mask >> k) & 1)
                    a[slots[k].first][slots[k].second] = a[slots[k].second][slots[k].first] = 1;
            if (! connected(a))
                continue;
            classes.emplace(brute_canonical(a), a);
        }
        return classes;
    }

    /// graph6 straight from the format description.
    inline auto graph6(const Matrix & a) -> std::string
    {
        int n = int(a.size());
        std::string bits;
        for (int j = 1 ; j < n ; ++j)
            for (int i = 0 ; i < j ; ++i)
                bits += a[i][j] ? '1' : '0';
        while (bits.size() % 6)
            bits += '0';
        std::string out(1, char(n + 63));
        for (std::size_t k = 0 ; k < bits.size() ; k += 6)
            out += char(std::stoi(bits.substr(k, 6), nullptr, 2) + 63);
        return out;
    }

    /// Connected G(n, p) sample: a random spanning tree plus extra edges.
    inline auto random_connected(int n, double p, std::mt19937 & rng) -> Matrix
    {
        Matrix a(n, std::vector<int>(n, 0));
        for (int v = 1 ; v < n ; ++v) {
            int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
            a[u][v] = a[v][u] = 1;
        }
        std::bernoulli_distribution coin(p);
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (coin(rng))
                    a[u][v] = a[v][u] = 1;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Matrix b(n, std::vector<int>(n, 0));
        for (int u = 0 ; u < n ; ++u)
            for (int v = 0 ; v < n ; ++v)
                b[perm[u]][perm[v]] = a[u][v];
        return b;
    }

    inline auto random_permutation(int n, std::mt19937 & rng) -> std::vector<locdom::Vertex>
    {
        std::vector<locdom::Vertex> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        return p;
    }
}

#endif
