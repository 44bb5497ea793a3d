/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <locdom/codes.hh>
#include <locdom/errors.hh>

#include <algorithm>
#include <numeric>

using std::size_t;
using std::span;
using std::string;
using std::to_string;
using std::vector;

namespace locdom
{
    Code::Code(vector<Vertex> members) :
        _members(std::move(members))
    {
        vector<Vertex> sorted = _members;
        std::sort(sorted.begin(), sorted.end());
        if (! sorted.empty() && sorted.front() < 0)
            throw PreconditionError("code contains negative vertex " + std::to_string(sorted.front()));
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw PreconditionError("code contains a repeated vertex");
    }

    Code::Code(std::initializer_list<Vertex> members) :
        Code(vector<Vertex>(members))
    {
    }

    auto Code::contains(Vertex v) const -> bool
    {
        return std::find(_members.begin(), _members.end(), v) != _members.end();
    }

    auto Code::as_set(int n) const -> VertexSet
    {
        return VertexSet::from_members(n, _members);
    }

    auto Code::sorted() const -> Code
    {
        vector<Vertex> m = _members;
        std::sort(m.begin(), m.end());
        return Code{ std::move(m) };
    }

    auto Code::to_string() const -> string
    {
        string result = "{";
        for (size_t i = 0 ; i < _members.size() ; ++i) {
            if (i > 0)
                result += ",";
            result += std::to_string(_members[i]);
        }
        return result + "}";
    }

    auto operator| (const Code & a, const Code & b) -> Code
    {
        vector<Vertex> m(a.members().begin(), a.members().end());
        for (auto v : b.members())
            if (! a.contains(v))
                m.push_back(v);
        return Code{ std::move(m) };
    }

    namespace
    {
        auto require_connected(const Graph & g) -> void
        {
            if (! g.is_connected())
                throw PreconditionError("code predicates require a connected graph");
        }

        auto require_in_range(const Graph & g, const Code & s) -> void
        {
            for (auto v : s.members())
                if (v >= g.order())
                    throw PreconditionError("code vertex " + std::to_string(v) + " out of range for order " + std::to_string(g.order()));
        }
    }

    auto metric_vector(const Graph & g, const Code & s, Vertex v) -> MetricVector
    {
        require_connected(g);
        require_in_range(g, s);
        if (v < 0 || v >= g.order())
            throw PreconditionError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(g.order()));
        MetricVector result;
        result.reserve(s.size());
        for (auto x : s.members())
            result.push_back(g.distances()(v, x));
        return result;
    }

    auto is_dominating(const Graph & g, const Code & s) -> bool
    {
        require_in_range(g, s);
        return CodeChecker{ g }.dominating(s.members());
    }

    auto is_locating(const Graph & g, const Code & s) -> bool
    {
        require_in_range(g, s);
        return CodeChecker{ g }.locating(s.members());
    }

    auto is_mld(const Graph & g, const Code & s) -> bool
    {
        require_in_range(g, s);
        return CodeChecker{ g }.mld(s.members());
    }

    auto is_ld(const Graph & g, const Code & s) -> bool
    {
        require_in_range(g, s);
        return CodeChecker{ g }.ld(s.members());
    }

    CodeChecker::CodeChecker(const Graph & g) :
        _g((require_connected(g), g)),
        _d(g.distances()),
        _n(g.order()),
        _words(g.words_per_row()),
        _mask(_words)
    {
    }

    auto CodeChecker::load(span<const Vertex> members) -> void
    {
        std::fill(_mask.begin(), _mask.end(), 0);
        for (auto v : members)
            _mask[v / bits_per_word] |= Word{1} << (v % bits_per_word);
        _outside.clear();
        for (Vertex v = 0 ; v < _n ; ++v)
            if (! in_mask(v))
                _outside.push_back(v);
    }

    auto CodeChecker::dominating(span<const Vertex> members) -> bool
    {
        load(members);
        for (auto v : _outside) {
            auto r = _g.row(v);
            bool hit = false;
            for (int i = 0 ; i < _words && ! hit ; ++i)
                hit = (r[i] & _mask[i]) != 0;
            if (! hit)
                return false;
        }
        return true;
    }

    auto CodeChecker::locating(span<const Vertex> members) -> bool
    {
        load(members);
        if (_outside.size() < 2)
            return true;

        if (members.size() <= 4) {
            // Distances fit in 16 bits, so up to four coordinates pack into one word.
            _scratch.clear();
            for (auto v : _outside) {
                Word key = 0;
                for (auto x : members)
                    key = (key << 16) | _d(v, x);
                _scratch.push_back(key);
            }
            std::sort(_scratch.begin(), _scratch.end());
            return std::adjacent_find(_scratch.begin(), _scratch.end()) == _scratch.end();
        }

        _index.resize(_outside.size());
        std::iota(_index.begin(), _index.end(), 0);
        auto less = [&] (int a, int b) {
            for (auto x : members) {
                auto da = _d(_outside[a], x), db = _d(_outside[b], x);
                if (da != db)
                    return da < db;
            }
            return false;
        };
        std::sort(_index.begin(), _index.end(), less);
        for (size_t i = 1 ; i < _index.size() ; ++i)
            if (! less(_index[i - 1], _index[i]))
                return false;
        return true;
    }

    auto CodeChecker::ld(span<const Vertex> members) -> bool
    {
        load(members);
        size_t m = _outside.size();

        _scratch.resize(m * _words);
        for (size_t i = 0 ; i < m ; ++i) {
            auto r = _g.row(_outside[i]);
            bool any = false;
            for (int w = 0 ; w < _words ; ++w) {
                _scratch[i * _words + w] = r[w] & _mask[w];
                any = any || _scratch[i * _words + w];
            }
            if (! any)
                return false;
        }

        if (_words == 1) {
            std::sort(_scratch.begin(), _scratch.end());
            return std::adjacent_find(_scratch.begin(), _scratch.end()) == _scratch.end();
        }

        _index.resize(m);
        std::iota(_index.begin(), _index.end(), 0);
        auto less = [&] (int a, int b) {
            return std::lexicographical_compare(
                    _scratch.begin() + a * _words, _scratch.begin() + (a + 1) * _words,
                    _scratch.begin() + b * _words, _scratch.begin() + (b + 1) * _words);
        };
        std::sort(_index.begin(), _index.end(), less);
        for (size_t i = 1 ; i < m ; ++i)
            if (! less(_index[i - 1], _index[i]))
                return false;
        return true;
    }
}
