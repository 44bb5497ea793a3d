/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef LOCDOM_GUARD_SOLVERS_HH
#define LOCDOM_GUARD_SOLVERS_HH 1

#include <locdom/codes.hh>
#include <locdom/graph.hh>

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace locdom
{
    enum class Parameter
    {
        gamma,   ///< domination number
        beta,    ///< metric dimension
        eta,     ///< metric-location-domination number
        lambda   ///< location-domination number
    };

    inline constexpr std::array all_parameters{ Parameter::gamma, Parameter::beta, Parameter::eta, Parameter::lambda };

    auto to_string(Parameter p) -> std::string_view;

    /// Accepts "gamma", "beta", "eta", "lambda". Throws ParseError.
    auto parse_parameter(std::string_view name) -> Parameter;

    /// Whether members form a code of the given kind.
    auto satisfies(CodeChecker & checker, Parameter p, std::span<const Vertex> members) -> bool;

    struct Optimum
    {
        int value = 0;
        Code witness;
    };

    struct SearchBounds
    {
        /// Smallest cardinality examined. Callers passing more than 1 must
        /// already know that no smaller code exists.
        int min_size = 1;

        /// Largest cardinality examined; -1 means the order of the graph.
        int max_size = -1;
    };

    /**
     * Minimum code by increasing cardinality: for k = min_size, min_size+1,
     * ..., every k-subset is tried in lexicographic order and the first hit
     * is returned. The returned witness is therefore the lexicographically
     * least code of minimum size, and every smaller size in range was
     * exhausted. Returns nullopt if nothing within max_size qualifies.
     *
     * Preconditions: connected; n >= 1 for gamma, n >= 2 otherwise.
     */
    auto minimum_code(const Graph & g, Parameter p, SearchBounds bounds = {}) -> std::optional<Optimum>;

    auto domination_number(const Graph & g) -> Optimum;
    auto metric_dimension(const Graph & g) -> Optimum;
    auto mld_number(const Graph & g) -> Optimum;
    auto ld_number(const Graph & g) -> Optimum;

    struct ParameterReport
    {
        int order = 0;
        int diameter = 0;
        Optimum gamma, beta, eta, lambda;

        auto get(Parameter p) const -> const Optimum &;
    };

    struct ReportOptions
    {
        /// Start the eta search at max(gamma, beta). Turning this off makes
        /// the lower half of the inequality chain an actual test rather than
        /// a consequence of the search order.
        bool seed_eta_from_bounds = true;
    };

    /**
     * All four parameters with witnesses. Before returning, checks
     * max(gamma, beta) <= eta <= min(gamma + beta, lambda) and that every
     * witness has its property and size; throws InvariantViolation if not.
     */
    auto full_report(const Graph & g, ReportOptions options = {}) -> ParameterReport;
}

#endif
