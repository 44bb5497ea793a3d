/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <locdom/enumeration.hh>
#include <locdom/errors.hh>
#include <locdom/graph6.hh>
#include <locdom/parallel.hh>

#include <algorithm>
#include <numeric>
#include <random>
#include <regex>
#include <set>
#include <unordered_set>

using std::optional;
using std::string;
using std::string_view;
using std::vector;

namespace locdom
{
    namespace
    {
        struct InvariantKey
        {
            int degree;
            int neighbour_degrees;

            friend auto operator<=> (const InvariantKey &, const InvariantKey &) = default;
        };

        /// Non-cut vertices of maximum InvariantKey.
        auto deletion_candidates(const Graph & g) -> vector<Vertex>
        {
            auto cut = cut_vertices(g);
            vector<Vertex> best;
            optional<InvariantKey> best_key;
            for (Vertex v = 0 ; v < g.order() ; ++v) {
                if (cut.contains(v))
                    continue;
                InvariantKey key{ g.degree(v), 0 };
                for (auto u : g.neighbourhood(v).members())
                    key.neighbour_degrees += g.degree(u);
                if (! best_key || key > *best_key) {
                    best_key = key;
                    best.clear();
                }
                if (key == *best_key)
                    best.push_back(v);
            }
            return best;
        }

        /// Children of parent, as canonical forms, that pass the canonical
        /// deletion test. The new vertex is always the last one.
        auto augment(const Graph & parent, const vector<vector<Vertex>> & neighbourhoods) -> vector<CanonicalForm>
        {
            int m = parent.order();
            auto parent_edges = parent.edges();
            auto parent_form = canonical_form(parent);

            std::set<CanonicalForm> accepted;
            for (auto & nbhd : neighbourhoods) {
                GraphBuilder b(m + 1);
                for (auto & [u, v] : parent_edges)
                    b.add_edge(u, v);
                for (auto u : nbhd)
                    b.add_edge(u, m);
                Graph child = b.build();

                auto candidates = deletion_candidates(child);
                if (std::find(candidates.begin(), candidates.end(), m) == candidates.end())
                    continue;

                auto canon = canonicalise(child);
                if (accepted.contains(canon.form))
                    continue;

                if (candidates.size() > 1) {
                    vector<int> position(m + 1);
                    for (int i = 0 ; i <= m ; ++i)
                        position[canon.order[i]] = i;
                    Vertex w = *std::max_element(candidates.begin(), candidates.end(),
                            [&] (Vertex a, Vertex b) { return position[a] < position[b]; });
                    if (w != m && canonical_form(remove_vertex(child, w)) != parent_form)
                        continue;
                }

                accepted.insert(std::move(canon.form));
            }
            return { accepted.begin(), accepted.end() };
        }

        auto all_neighbourhoods(int m) -> vector<vector<Vertex>>
        {
            vector<vector<Vertex>> result;
            for (unsigned mask = 1 ; mask < (1u << m) ; ++mask) {
                vector<Vertex> nbhd;
                for (Vertex v = 0 ; v < m ; ++v)
                    if ((mask >> v) & 1)
                        nbhd.push_back(v);
                result.push_back(std::move(nbhd));
            }
            return result;
        }

        auto single_neighbourhoods(int m) -> vector<vector<Vertex>>
        {
            vector<vector<Vertex>> result;
            for (Vertex v = 0 ; v < m ; ++v)
                result.push_back({ v });
            return result;
        }

        auto next_level(const vector<Graph> & parents, bool trees_only, const EnumerationOptions & options) -> vector<Graph>
        {
            vector<Graph> work = parents;
            std::mt19937_64 rng;
            if (options.shuffle_seed) {
                rng.seed(*options.shuffle_seed + work.front().order());
                std::shuffle(work.begin(), work.end(), rng);
            }

            int m = work.front().order();
            auto neighbourhoods = trees_only ? single_neighbourhoods(m) : all_neighbourhoods(m);

            vector<vector<Vertex>> images(work.size());
            vector<vector<vector<Vertex>>> orders(work.size(), neighbourhoods);
            if (options.shuffle_seed)
                for (size_t i = 0 ; i < work.size() ; ++i) {
                    images[i].resize(m);
                    std::iota(images[i].begin(), images[i].end(), 0);
                    std::shuffle(images[i].begin(), images[i].end(), rng);
                    std::shuffle(orders[i].begin(), orders[i].end(), rng);
                }

            vector<vector<CanonicalForm>> children(work.size());
            parallel_for(work.size(), options.jobs, [&] (size_t i) {
                Graph parent = options.shuffle_seed ? relabel(work[i], images[i]) : work[i];
                children[i] = augment(parent, orders[i]);
            });

            vector<Graph> result;
            for (auto & forms : children)
                for (auto & f : forms)
                    result.push_back(read_graph6(f.bytes));
            return result;
        }

        auto generate(int n, bool trees_only, const EnumerationOptions & options) -> vector<vector<Graph>>
        {
            vector<vector<Graph>> levels{ { GraphBuilder(1).build() } };
            while (int(levels.size()) < n)
                levels.push_back(next_level(levels.back(), trees_only, options));
            return levels;
        }
    }

    auto connected_graphs_up_to(int n_max, const EnumerationOptions & options) -> vector<vector<Graph>>
    {
        if (n_max < 1 || n_max > max_enumeration_order)
            throw PreconditionError("connected graph enumeration supports orders 1.." + std::to_string(max_enumeration_order)
                    + ", got " + std::to_string(n_max));
        return generate(n_max, false, options);
    }

    auto connected_graphs(int n, const EnumerationOptions & options) -> vector<Graph>
    {
        return connected_graphs_up_to(n, options).back();
    }

    auto trees(int n, const EnumerationOptions & options) -> vector<Graph>
    {
        if (n < 1 || n > 16)
            throw PreconditionError("tree enumeration supports orders 1..16, got " + std::to_string(n));
        return generate(n, true, options).back();
    }

    namespace
    {
        auto entry_for(const Graph & canonical_graph) -> CensusEntry
        {
            vector<Vertex> identity(canonical_graph.order());
            std::iota(identity.begin(), identity.end(), 0);
            auto g6 = graph6_of_ordering(canonical_graph, identity);
            return CensusEntry{ canonical_graph.order(), CanonicalForm{ g6 }, g6 };
        }

        auto evaluate(const vector<const Graph *> & graphs, const GraphPredicate & predicate, int jobs) -> vector<char>
        {
            vector<char> keep(graphs.size(), 0);
            parallel_for(graphs.size(), jobs, [&] (size_t i) {
                keep[i] = predicate(*graphs[i]) ? 1 : 0;
            });
            return keep;
        }
    }

    auto census(int n_from, int n_to, const GraphPredicate & predicate, string filter, int jobs) -> CensusReport
    {
        if (n_from > n_to)
            throw PreconditionError("empty order range " + std::to_string(n_from) + ".." + std::to_string(n_to));
        if (n_from < 1)
            throw PreconditionError("census orders start at 1");

        auto levels = connected_graphs_up_to(n_to, EnumerationOptions{ jobs, std::nullopt });

        CensusReport report;
        report.filter = std::move(filter);
        vector<const Graph *> graphs;
        for (int n = n_from ; n <= n_to ; ++n) {
            report.counts[n] = 0;
            for (auto & g : levels[n - 1])
                graphs.push_back(&g);
        }

        auto keep = evaluate(graphs, predicate, jobs);
        for (size_t i = 0 ; i < graphs.size() ; ++i)
            if (keep[i]) {
                ++report.counts[graphs[i]->order()];
                ++report.total;
                report.representatives.push_back(entry_for(*graphs[i]));
            }
        return report;
    }

    auto census(const vector<Graph> & input, const GraphPredicate & predicate, string filter, int jobs) -> CensusReport
    {
        vector<Canonical> canon(input.size());
        parallel_for(input.size(), jobs, [&] (size_t i) {
            if (! input[i].is_connected())
                throw PreconditionError("census input graph " + std::to_string(i + 1) + " is not connected");
            canon[i] = canonicalise(input[i]);
        });

        vector<Graph> distinct;
        std::unordered_set<CanonicalForm> seen;
        for (auto & c : canon)
            if (seen.insert(c.form).second)
                distinct.push_back(induced_subgraph(input[&c - canon.data()], c.order));

        vector<const Graph *> graphs;
        for (auto & g : distinct)
            graphs.push_back(&g);
        auto keep = evaluate(graphs, predicate, jobs);

        CensusReport report;
        report.filter = std::move(filter);
        for (size_t i = 0 ; i < graphs.size() ; ++i)
            if (keep[i]) {
                ++report.counts[graphs[i]->order()];
                ++report.total;
                report.representatives.push_back(entry_for(*graphs[i]));
            }
        return report;
    }
}

namespace locdom
{
    namespace
    {
        constexpr std::pair<FilterField, string_view> field_names[] = {
            { FilterField::gamma, "gamma" }, { FilterField::beta, "beta" }, { FilterField::eta, "eta" },
            { FilterField::lambda, "lambda" }, { FilterField::n, "n" }, { FilterField::diam, "diam" } };

        constexpr std::pair<FilterOp, string_view> op_names[] = {
            { FilterOp::eq, "=" }, { FilterOp::ne, "!=" }, { FilterOp::lt, "<" },
            { FilterOp::le, "<=" }, { FilterOp::gt, ">" }, { FilterOp::ge, ">=" } };

        auto compare(int lhs, FilterOp op, int rhs) -> bool
        {
            switch (op) {
                case FilterOp::eq: return lhs == rhs;
                case FilterOp::ne: return lhs != rhs;
                case FilterOp::lt: return lhs < rhs;
                case FilterOp::le: return lhs <= rhs;
                case FilterOp::gt: return lhs > rhs;
                case FilterOp::ge: return lhs >= rhs;
            }
            return false;
        }

        auto as_parameter(FilterField f) -> optional<Parameter>
        {
            switch (f) {
                case FilterField::gamma:  return Parameter::gamma;
                case FilterField::beta:   return Parameter::beta;
                case FilterField::eta:    return Parameter::eta;
                case FilterField::lambda: return Parameter::lambda;
                default:                  return std::nullopt;
            }
        }
    }

    Filter::Filter(vector<Comparison> terms) :
        _terms(std::move(terms))
    {
    }

    auto Filter::parse(string_view text) -> Filter
    {
        static const std::regex blank{ R"(\s*)" };
        static const std::regex separator{ R"(\s+and\s+)" };
        static const std::regex term{ R"(\s*(gamma|beta|eta|lambda|n|diam)\s*(==|!=|<=|>=|=|<|>)\s*(-?[0-9]+)\s*)" };

        string s(text);
        vector<Comparison> terms;
        if (std::regex_match(s, blank))
            return Filter{};

        std::sregex_token_iterator it(s.begin(), s.end(), separator, -1), end;
        for ( ; it != end ; ++it) {
            string piece = *it;
            std::smatch m;
            if (! std::regex_match(piece, m, term))
                throw ParseError("bad filter term '" + piece + "'; expected e.g. eta=2 or n<=6");

            Comparison c{};
            for (auto & [f, name] : field_names)
                if (m[1].str() == name)
                    c.field = f;
            string op = m[2].str() == "==" ? "=" : m[2].str();
            for (auto & [o, name] : op_names)
                if (op == name)
                    c.op = o;
            try {
                c.value = std::stoi(m[3].str());
            }
            catch (const std::out_of_range &) {
                throw ParseError("filter value out of range in '" + piece + "'");
            }
            terms.push_back(c);
        }
        return Filter{ std::move(terms) };
    }

    auto Filter::to_string() const -> string
    {
        if (_terms.empty())
            return "all";
        string result;
        for (auto & c : _terms) {
            if (! result.empty())
                result += " and ";
            for (auto & [f, name] : field_names)
                if (f == c.field)
                    result += name;
            for (auto & [o, name] : op_names)
                if (o == c.op)
                    result += name;
            result += std::to_string(c.value);
        }
        return result;
    }

    auto Filter::operator() (const Graph & g) const -> bool
    {
        for (auto & c : _terms) {
            int value;
            if (auto p = as_parameter(c.field)) {
                if (*p != Parameter::gamma && g.order() < 2)
                    return false;
                // Knowing the value exactly up to c.value + 1 decides every operator.
                int limit = std::max(c.value + 1, 1);
                auto found = minimum_code(g, *p, SearchBounds{ 1, limit });
                value = found ? found->value : limit + 1;
            }
            else if (c.field == FilterField::n)
                value = g.order();
            else
                value = diameter(g);

            if (! compare(value, c.op, c.value))
                return false;
        }
        return true;
    }
}
