/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <locdom/theorems.hh>
#include <locdom/canonical.hh>
#include <locdom/errors.hh>
#include <locdom/graph6.hh>
#include <locdom/parallel.hh>
#include <locdom/solvers.hh>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

using std::span;
using std::string;
using std::string_view;
using std::vector;

namespace locdom
{
    using std::to_string;

    auto to_string(Status s) -> string_view
    {
        switch (s) {
            case Status::holds:   return "holds";
            case Status::fails:   return "fails";
            case Status::skipped: return "skipped";
        }
        return "?";
    }

    auto graph6_any(const Graph & g) -> string
    {
        vector<Vertex> identity(g.order());
        std::iota(identity.begin(), identity.end(), 0);
        return graph6_of_ordering(g, identity);
    }

    namespace
    {
        auto verdict_for(string theorem, const Graph & g) -> Verdict
        {
            Verdict v;
            v.theorem = std::move(theorem);
            v.scope = graph6_any(g);
            return v;
        }

        auto fail(Verdict & v, string graph6, string detail) -> void
        {
            v.status = Status::fails;
            v.counterexamples.push_back(Counterexample{ std::move(graph6), std::move(detail) });
        }

        auto skip(Verdict & v, string reason) -> Verdict
        {
            v.status = Status::skipped;
            v.skip_reason = std::move(reason);
            return v;
        }

        auto require_connected(const Graph & g, int min_order, string_view what) -> void
        {
            if (! g.is_connected())
                throw PreconditionError(string(what) + " requires a connected graph");
            if (g.order() < min_order)
                throw PreconditionError(string(what) + " requires at least " + to_string(min_order) + " vertices");
        }

        auto value_of(const Graph & g, Parameter p) -> int
        {
            return minimum_code(g, p)->value;
        }

        /// base^exponent, saturating at limit + 1.
        auto bounded_power(long long base, int exponent, long long limit) -> long long
        {
            long long result = 1;
            for (int i = 0 ; i < exponent && result <= limit ; ++i)
                result *= base;
            return std::min(result, limit + 1);
        }

        auto values_text(std::initializer_list<std::pair<string_view, int>> values) -> string
        {
            string result;
            for (auto & [name, value] : values)
                result += (result.empty() ? "" : " ") + string(name) + "=" + to_string(value);
            return result;
        }
    }

    auto check_inequality_chain(const Graph & g) -> Verdict
    {
        require_connected(g, 2, "prop1");
        auto v = verdict_for("prop1", g);
        int gamma = value_of(g, Parameter::gamma), beta = value_of(g, Parameter::beta);
        int eta = value_of(g, Parameter::eta), lambda = value_of(g, Parameter::lambda);
        if (std::max(gamma, beta) > eta || eta > std::min(gamma + beta, lambda))
            fail(v, v.scope, "max(gamma,beta) <= eta <= min(gamma+beta,lambda) violated: "
                    + values_text({ { "gamma", gamma }, { "beta", beta }, { "eta", eta }, { "lambda", lambda } }));
        return v;
    }

    auto check_eta_bounds(const Graph & g) -> Verdict
    {
        require_connected(g, 2, "eta-bounds");
        auto v = verdict_for("eta-bounds", g);
        int n = g.order(), d = diameter(g);
        if (d < 3)
            return skip(v, "diameter " + to_string(d) + " < 3");

        int eta = value_of(g, Parameter::eta);
        int lower = eta + (2 * d + 2) / 3;
        long long upper = eta + eta * bounded_power(3, eta - 1, n);
        auto text = values_text({ { "n", n }, { "D", d }, { "eta", eta } });
        if (lower > n)
            fail(v, v.scope, "eta + ceil(2D/3) = " + to_string(lower) + " > n; " + text);
        if (n > upper)
            fail(v, v.scope, "n > eta + eta*3^(eta-1) = " + to_string(upper) + "; " + text);
        if (lower == n)
            v.notes.push_back("lower bound tight");
        if (upper == n)
            v.notes.push_back("upper bound tight");
        return v;
    }

    auto check_lambda_bounds(const Graph & g) -> Verdict
    {
        require_connected(g, 2, "lambda-bounds");
        auto v = verdict_for("lambda-bounds", g);
        int n = g.order(), d = diameter(g);
        int lambda = value_of(g, Parameter::lambda);
        auto text = values_text({ { "n", n }, { "D", d }, { "lambda", lambda } });

        long long upper = lambda + bounded_power(2, lambda, n) - 1;
        if (n > upper)
            fail(v, v.scope, "n > lambda + 2^lambda - 1 = " + to_string(upper) + "; " + text);
        if (upper == n)
            v.notes.push_back("upper bound tight");

        if (d >= 3) {
            int lower = lambda + (3 * d + 3) / 5;
            if (lower > n)
                fail(v, v.scope, "lambda + ceil((3D-1)/5) = " + to_string(lower) + " > n; " + text);
            if (lower == n)
                v.notes.push_back("lower bound tight");
        }
        else
            v.notes.push_back("lower bound not applicable: diameter " + to_string(d) + " < 3");
        return v;
    }

    auto check_tree_bounds(const Graph & t) -> Verdict
    {
        if (! t.is_tree())
            throw PreconditionError("tree-bounds requires a tree");
        if (t.order() < 3)
            throw PreconditionError("tree-bounds requires at least 3 vertices");

        auto v = verdict_for("tree-bounds", t);
        int eta = value_of(t, Parameter::eta), lambda = value_of(t, Parameter::lambda);
        auto text = values_text({ { "eta", eta }, { "lambda", lambda } });

        if (t.order() == 6 && are_isomorphic(t, path_graph(6))) {
            v.notes.push_back("P6: " + text + (lambda > 2 * eta - 2 ? ", lambda > 2eta-2 so the exception is genuine"
                        : ", within the bounds"));
            return skip(v, "P6 is excluded");
        }

        if (eta > lambda)
            fail(v, v.scope, "eta > lambda; " + text);
        if (lambda > 2 * eta - 2)
            fail(v, v.scope, "lambda > 2eta-2; " + text);
        if (eta == lambda)
            v.notes.push_back("lower bound attained");
        if (lambda == 2 * eta - 2)
            v.notes.push_back("upper bound attained");
        return v;
    }

    auto check_eta_equals_lambda_conditions(const Graph & g) -> Verdict
    {
        require_connected(g, 2, "eta-lambda");
        auto v = verdict_for("eta-lambda", g);
        int n = g.order(), d = diameter(g), beta = value_of(g, Parameter::beta);
        if (d != 2 && beta < n - 3)
            return skip(v, "diameter " + to_string(d) + " != 2 and beta " + to_string(beta) + " < n-3");

        int eta = value_of(g, Parameter::eta), lambda = value_of(g, Parameter::lambda);
        if (eta != lambda)
            fail(v, v.scope, "eta != lambda; " + values_text({ { "n", n }, { "D", d }, { "beta", beta },
                        { "eta", eta }, { "lambda", lambda } }));
        return v;
    }

    auto isometric_embedding_check(const Graph & g, const Graph & h, span<const Vertex> map) -> bool
    {
        if (int(map.size()) != g.order())
            throw PreconditionError("embedding map has " + to_string(map.size()) + " entries for "
                    + to_string(g.order()) + " vertices");
        std::set<Vertex> image;
        for (auto x : map) {
            if (x < 0 || x >= h.order())
                throw PreconditionError("embedding map sends a vertex outside the target graph");
            if (! image.insert(x).second)
                throw PreconditionError("embedding map is not injective");
        }

        auto & dg = g.distances();
        auto & dh = h.distances();
        for (Vertex x = 0 ; x < g.order() ; ++x)
            for (Vertex y = x + 1 ; y < g.order() ; ++y)
                if (dg(x, y) != dh(map[x], map[y]))
                    return false;
        return true;
    }

    auto king_grid_coordinates(const Graph & g, Vertex u, Vertex v) -> vector<Vertex>
    {
        auto & d = g.distances();
        vector<Vertex> result;
        for (Vertex x = 0 ; x < g.order() ; ++x) {
            if (d(x, u) > 4 || d(x, v) > 4)
                return {};
            result.push_back(5 * d(x, u) + d(x, v));
        }
        return result;
    }

    auto check_eta2_membership(const Graph & g) -> Verdict
    {
        require_connected(g, 2, "eta2-embedding");
        auto v = verdict_for("eta2-embedding", g);
        int n = g.order();
        auto eta = minimum_code(g, Parameter::eta, SearchBounds{ 1, 2 });
        if (! eta || eta->value != 2)
            return skip(v, "eta != 2");

        if (n < 3 || n > 8)
            fail(v, v.scope, "order " + to_string(n) + " outside 3..8");

        static const Graph king = [] {
            std::array dims{ 5, 5 };
            return strong_grid(dims);
        }();

        CodeChecker checker{ g };
        auto & d = g.distances();
        bool some_isometric = false;
        for (Vertex a = 0 ; a < n ; ++a)
            for (Vertex b = a + 1 ; b < n ; ++b) {
                std::array code{ a, b };
                if (! checker.mld(code))
                    continue;
                string name = "{" + to_string(a) + "," + to_string(b) + "}";
                if (d(a, b) > 3)
                    fail(v, v.scope, "eta-code " + name + " has d(u,v) = " + to_string(d(a, b)) + " > 3");

                auto map = king_grid_coordinates(g, a, b);
                bool isometric = ! map.empty() && isometric_embedding_check(g, king, map);
                bool edges_to_edges = ! map.empty();
                for (auto [x, y] : g.edges())
                    edges_to_edges = edges_to_edges && king.adjacent(map[x], map[y]);
                some_isometric = some_isometric || isometric;
                v.notes.push_back("eta-code " + name + ": d=" + to_string(d(a, b))
                        + " isometric=" + (isometric ? "yes" : "no")
                        + " edges-to-edges=" + (edges_to_edges ? "yes" : "no"));
            }

        if (! some_isometric)
            fail(v, v.scope, "no eta-code gives an isometric embedding into P5xP5");
        return v;
    }

    auto check_lambda_extremal(const Graph & g) -> Verdict
    {
        require_connected(g, 3, "lambda-extremal");
        auto v = verdict_for("lambda-extremal", g);
        int n = g.order(), d = diameter(g);
        int eta = value_of(g, Parameter::eta), lambda = value_of(g, Parameter::lambda);
        auto text = values_text({ { "n", n }, { "D", d }, { "eta", eta }, { "lambda", lambda } });

        if (lambda >= n - 2) {
            v.notes.push_back("(a) applies");
            if (d > 3)
                fail(v, v.scope, "(a) lambda >= n-2 but D > 3; " + text);
        }

        if ((lambda == n - 2) != (eta == n - 2))
            fail(v, v.scope, "(b) lambda = n-2 and eta = n-2 disagree; " + text);

        if (lambda == n - 2) {
            auto form = canonical_form(g);
            bool found = false;
            for (auto & f : eta_n_minus_2_instances(n))
                if (canonical_form(f.graph) == form) {
                    v.notes.push_back("(c) member of " + f.name);
                    found = true;
                    break;
                }
            if (! found)
                fail(v, v.scope, "(c) lambda = n-2 but not in the family list; " + text);
        }

        if (eta == n - 3) {
            v.notes.push_back("(d) applies");
            if (lambda != n - 3)
                fail(v, v.scope, "(d) eta = n-3 but lambda != n-3; " + text);
        }
        else if (lambda == n - 3)
            v.notes.push_back("lambda = n-3 with eta = " + to_string(eta) + ", so the converse of (d) fails here");

        return v;
    }

    auto verify_realization(int a, int b, int c) -> Verdict
    {
        if (a < 1 || b < 1 || c < std::max(a, b) || c > a + b)
            throw PreconditionError("realization needs positive a, b with max(a,b) <= c <= a+b");

        Verdict v;
        v.theorem = "realization";
        v.scope = "(" + to_string(a) + "," + to_string(b) + "," + to_string(c) + ")";

        if (b == 1 && a > 1 && c == a + 1) {
            try {
                auto f = realization_graph(a, b, c);
                fail(v, graph6_any(f.graph), "excluded triple was constructed");
            }
            catch (const PreconditionError &) {
                v.notes.push_back("excluded triple correctly rejected");
            }
            return v;
        }

        auto f = realization_graph(a, b, c);
        auto r = full_report(f.graph);
        if (r.gamma.value != a || r.beta.value != b || r.eta.value != c)
            fail(v, graph6_any(f.graph), "measured " + values_text({ { "gamma", r.gamma.value },
                        { "beta", r.beta.value }, { "eta", r.eta.value } }));
        v.notes.push_back(f.name + ": n=" + to_string(f.graph.order()));
        return v;
    }

    auto verify_tree_realization(int a, int b) -> Verdict
    {
        if (! (3 <= a && a <= b && b <= 2 * a - 2))
            throw PreconditionError("tree realization needs 3 <= a <= b <= 2a-2");

        Verdict v;
        v.theorem = "tree-realization";
        v.scope = "(" + to_string(a) + "," + to_string(b) + ")";
        auto f = realization_tree(a, b);
        if (! f.graph.is_tree())
            fail(v, graph6_any(f.graph), "construction is not a tree");
        int eta = value_of(f.graph, Parameter::eta), lambda = value_of(f.graph, Parameter::lambda);
        if (eta != a || lambda != b)
            fail(v, graph6_any(f.graph), "measured " + values_text({ { "eta", eta }, { "lambda", lambda } }));
        v.notes.push_back(f.name + ": n=" + to_string(f.graph.order()));
        return v;
    }

    auto check_family_claims(const FamilyInstance & f) -> Verdict
    {
        Verdict v;
        v.theorem = "family";
        v.scope = f.name;
        if (f.claimed_values.empty()) {
            v.notes.push_back("no closed-form claims for these parameters");
            return v;
        }

        try {
            check_claimed_codes(f);
        }
        catch (const InvariantViolation & e) {
            fail(v, graph6_any(f.graph), e.what());
        }

        for (auto & [p, claimed] : f.claimed_values) {
            int measured = value_of(f.graph, p);
            if (measured != claimed)
                fail(v, graph6_any(f.graph), string(to_string(p)) + ": claimed " + to_string(claimed)
                        + ", measured " + to_string(measured));
            else
                v.notes.push_back(string(to_string(p)) + "=" + to_string(measured));
        }
        return v;
    }

    auto summarise(string theorem, string scope, vector<Verdict> verdicts) -> SweepReport
    {
        SweepReport report;
        report.verdicts = std::move(verdicts);
        report.summary.theorem = std::move(theorem);
        report.summary.scope = std::move(scope);
        for (auto & v : report.verdicts) {
            ++report.checked;
            switch (v.status) {
                case Status::holds:
                    ++report.held;
                    break;
                case Status::fails:
                    ++report.failed;
                    for (auto & c : v.counterexamples)
                        report.summary.counterexamples.push_back(c);
                    break;
                case Status::skipped:
                    ++report.skipped;
                    ++report.skip_reasons[v.skip_reason];
                    break;
            }
        }

        if (report.failed > 0)
            report.summary.status = Status::fails;
        else if (report.checked > 0 && report.skipped == report.checked) {
            report.summary.status = Status::skipped;
            report.summary.skip_reason = "every case was outside the hypothesis";
        }
        report.summary.notes.push_back(to_string(report.checked) + " checked, " + to_string(report.held) + " held, "
                + to_string(report.failed) + " failed, " + to_string(report.skipped) + " skipped");
        return report;
    }

    auto sweep(string theorem, string scope, const vector<Graph> & graphs, const Checker & checker, int jobs) -> SweepReport
    {
        vector<Verdict> verdicts(graphs.size());
        parallel_for(graphs.size(), jobs, [&] (size_t i) {
            verdicts[i] = checker(graphs[i]);
        });
        return summarise(std::move(theorem), std::move(scope), std::move(verdicts));
    }
}
