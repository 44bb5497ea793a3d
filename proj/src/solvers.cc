/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <locdom/solvers.hh>
#include <locdom/errors.hh>

#include <algorithm>
#include <numeric>

using std::optional;
using std::span;
using std::string;
using std::string_view;
using std::vector;

namespace locdom
{
    auto to_string(Parameter p) -> string_view
    {
        switch (p) {
            case Parameter::gamma:  return "gamma";
            case Parameter::beta:   return "beta";
            case Parameter::eta:    return "eta";
            case Parameter::lambda: return "lambda";
        }
        return "?";
    }

    auto parse_parameter(string_view name) -> Parameter
    {
        for (auto p : all_parameters)
            if (to_string(p) == name)
                return p;
        throw ParseError("unknown parameter '" + string(name) + "'");
    }

    auto satisfies(CodeChecker & checker, Parameter p, span<const Vertex> members) -> bool
    {
        switch (p) {
            case Parameter::gamma:  return checker.dominating(members);
            case Parameter::beta:   return checker.locating(members);
            case Parameter::eta:    return checker.mld(members);
            case Parameter::lambda: return checker.ld(members);
        }
        return false;
    }

    auto minimum_code(const Graph & g, Parameter p, SearchBounds bounds) -> optional<Optimum>
    {
        int n = g.order();
        if (! g.is_connected())
            throw PreconditionError("parameter " + string(to_string(p)) + " requires a connected graph");
        if (p != Parameter::gamma && n < 2)
            throw PreconditionError("parameter " + string(to_string(p)) + " requires at least two vertices");

        CodeChecker checker{ g };
        int hi = bounds.max_size < 0 ? n : std::min(bounds.max_size, n);
        vector<Vertex> subset;
        for (int k = std::max(bounds.min_size, 1) ; k <= hi ; ++k) {
            subset.resize(k);
            std::iota(subset.begin(), subset.end(), 0);
            while (true) {
                if (satisfies(checker, p, subset))
                    return Optimum{ k, Code{ subset } };

                // Next k-subset in lexicographic order.
                int i = k - 1;
                while (i >= 0 && subset[i] == n - k + i)
                    --i;
                if (i < 0)
                    break;
                ++subset[i];
                for (int j = i + 1 ; j < k ; ++j)
                    subset[j] = subset[j - 1] + 1;
            }
        }
        return std::nullopt;
    }

    namespace
    {
        auto solve_exactly(const Graph & g, Parameter p, int min_size = 1) -> Optimum
        {
            auto result = minimum_code(g, p, SearchBounds{ min_size, -1 });
            // The whole vertex set always qualifies on a connected graph.
            if (! result)
                throw InvariantViolation("no " + string(to_string(p)) + " code found, not even V");
            return *result;
        }
    }

    auto domination_number(const Graph & g) -> Optimum
    {
        return solve_exactly(g, Parameter::gamma);
    }

    auto metric_dimension(const Graph & g) -> Optimum
    {
        return solve_exactly(g, Parameter::beta);
    }

    auto mld_number(const Graph & g) -> Optimum
    {
        return solve_exactly(g, Parameter::eta);
    }

    auto ld_number(const Graph & g) -> Optimum
    {
        return solve_exactly(g, Parameter::lambda);
    }

    auto ParameterReport::get(Parameter p) const -> const Optimum &
    {
        switch (p) {
            case Parameter::gamma:  return gamma;
            case Parameter::beta:   return beta;
            case Parameter::eta:    return eta;
            case Parameter::lambda: return lambda;
        }
        throw InvariantViolation("bad parameter");
    }

    auto full_report(const Graph & g, ReportOptions options) -> ParameterReport
    {
        if (! g.is_connected())
            throw PreconditionError("full_report requires a connected graph");
        if (g.order() < 2)
            throw PreconditionError("full_report requires at least two vertices");

        ParameterReport r;
        r.order = g.order();
        r.diameter = diameter(g);
        r.gamma = domination_number(g);
        r.beta = metric_dimension(g);
        r.eta = solve_exactly(g, Parameter::eta, options.seed_eta_from_bounds ? std::max(r.gamma.value, r.beta.value) : 1);
        r.lambda = ld_number(g);

        CodeChecker checker{ g };
        for (auto p : all_parameters) {
            auto & o = r.get(p);
            if (o.witness.size() != o.value || ! satisfies(checker, p, o.witness.members()))
                throw InvariantViolation("witness for " + string(to_string(p)) + " does not certify its value");
        }

        if (std::max(r.gamma.value, r.beta.value) > r.eta.value
                || r.eta.value > std::min(r.gamma.value + r.beta.value, r.lambda.value))
            throw InvariantViolation("max(gamma,beta) <= eta <= min(gamma+beta,lambda) violated: gamma="
                    + std::to_string(r.gamma.value) + " beta=" + std::to_string(r.beta.value)
                    + " eta=" + std::to_string(r.eta.value) + " lambda=" + std::to_string(r.lambda.value));
        return r;
    }
}
