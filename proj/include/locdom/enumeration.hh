/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef LOCDOM_GUARD_ENUMERATION_HH
#define LOCDOM_GUARD_ENUMERATION_HH 1

#include <locdom/canonical.hh>
#include <locdom/graph.hh>
#include <locdom/solvers.hh>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace locdom
{
    inline constexpr int max_enumeration_order = 9;

    struct EnumerationOptions
    {
        /// Worker threads; 0 means one per hardware thread.
        int jobs = 1;

        /// If set, parents are randomly relabelled and the augmentation order
        /// is shuffled. The resulting set of classes must not change.
        std::optional<std::uint64_t> shuffle_seed;
    };

    /**
     * One graph per isomorphism class of connected graphs of order n, each
     * labelled canonically. Built by canonical augmentation: every connected
     * graph of order n-1 is extended by a new vertex joined to each nonempty
     * subset of its vertices, and a child is kept only when the new vertex is
     * its canonical deletion vertex (a non-cut vertex chosen by invariants,
     * ties broken by canonical position) up to automorphism.
     *
     * Without a shuffle seed the output order is deterministic and does not
     * depend on jobs. Throws PreconditionError unless 1 <= n <= 9.
     */
    auto connected_graphs(int n, const EnumerationOptions & options = {}) -> std::vector<Graph>;

    /// connected_graphs for every order 1..n_max, index i holding order i+1.
    auto connected_graphs_up_to(int n_max, const EnumerationOptions & options = {}) -> std::vector<std::vector<Graph>>;

    /// Free trees of order n, the same way with one-vertex neighbourhoods.
    /// Supports 1 <= n <= 16.
    auto trees(int n, const EnumerationOptions & options = {}) -> std::vector<Graph>;

    struct CensusEntry
    {
        int order = 0;
        CanonicalForm form;
        std::string graph6;
    };

    struct CensusReport
    {
        std::string filter;
        std::map<int, int> counts;
        int total = 0;
        std::vector<CensusEntry> representatives;
    };

    /// Must be safe to call concurrently on different graphs.
    using GraphPredicate = std::function<auto (const Graph &) -> bool>;

    /// Connected classes with order in [n_from, n_to] satisfying the predicate.
    /// Every order in range appears in counts, possibly with zero.
    auto census(int n_from, int n_to, const GraphPredicate & predicate, std::string filter, int jobs = 1) -> CensusReport;

    /// The same over externally supplied graphs, merging isomorphic copies.
    auto census(const std::vector<Graph> & graphs, const GraphPredicate & predicate, std::string filter, int jobs = 1) -> CensusReport;

    enum class FilterField
    {
        gamma, beta, eta, lambda, n, diam
    };

    enum class FilterOp
    {
        eq, ne, lt, le, gt, ge
    };

    struct Comparison
    {
        FilterField field;
        FilterOp op;
        int value;
    };

    /**
     * Conjunction of comparisons such as "eta=2 and n<=6". Fields are gamma,
     * beta, eta, lambda, n, diam; operators are = != < <= > >=. An empty
     * filter accepts everything. Parameters are found with a search bounded
     * just past the compared value, so a filter like eta=2 stays cheap on
     * graphs whose eta is large. beta, eta and lambda are undefined on K_1,
     * and any comparison on them is false there.
     */
    class Filter
    {
        public:
            Filter() = default;
            explicit Filter(std::vector<Comparison> terms);

            /// Throws ParseError on malformed text.
            static auto parse(std::string_view text) -> Filter;

            auto terms() const -> const std::vector<Comparison> & { return _terms; }
            auto to_string() const -> std::string;

            /// g must be connected.
            auto operator() (const Graph & g) const -> bool;

        private:
            std::vector<Comparison> _terms;
    };
}

#endif
