/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef LOCDOM_GUARD_THEOREMS_HH
#define LOCDOM_GUARD_THEOREMS_HH 1

#include <locdom/codes.hh>
#include <locdom/families.hh>
#include <locdom/graph.hh>

#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace locdom
{
    enum class Status
    {
        holds,
        fails,
        skipped
    };

    auto to_string(Status s) -> std::string_view;

    struct Counterexample
    {
        std::string graph6;
        std::string detail;
    };

    /**
     * Outcome of one checker on one graph (or of a sweep). fails exactly
     * when counterexamples is nonempty; skipped carries the hypothesis that
     * was not met in skip_reason.
     */
    struct Verdict
    {
        std::string theorem;
        std::string scope;
        Status status = Status::holds;
        std::string skip_reason;
        std::vector<Counterexample> counterexamples;
        std::vector<std::string> notes;
    };

    /// graph6, using the long form above 62 vertices.
    auto graph6_any(const Graph & g) -> std::string;

    /// max(gamma, beta) <= eta <= min(gamma + beta, lambda). The eta search
    /// is not seeded, so the lower half is genuinely tested.
    /// Requires connected, n >= 2.
    auto check_inequality_chain(const Graph & g) -> Verdict;

    /// eta + ceil(2D/3) <= n <= eta + eta 3^(eta-1); skipped when D < 3.
    /// Notes record which bounds are tight.
    auto check_eta_bounds(const Graph & g) -> Verdict;

    /// n <= lambda + 2^lambda - 1 always; lambda + ceil((3D-1)/5) <= n when D >= 3.
    auto check_lambda_bounds(const Graph & g) -> Verdict;

    /// eta <= lambda <= 2 eta - 2 for trees of order >= 3. P_6 is skipped,
    /// with a note recording its (eta, lambda). Throws PreconditionError
    /// for non-trees and order < 3.
    auto check_tree_bounds(const Graph & t) -> Verdict;

    /// D = 2 or beta >= n - 3 implies eta = lambda; skipped otherwise.
    auto check_eta_equals_lambda_conditions(const Graph & g) -> Verdict;

    /**
     * For eta = 2: 3 <= n <= 8, every eta-code {u, v} has d(u, v) <= 3, and
     * for some eta-code the map x -> (d(x,u), d(x,v)) is an isometric
     * embedding into P_5 x P_5 (strong product). Skipped when eta != 2.
     * Notes give, per eta-code, the distance, whether the map is isometric,
     * and whether it at least sends edges to edges.
     */
    auto check_eta2_membership(const Graph & g) -> Verdict;

    /// d_G(x, y) = d_H(map[x], map[y]) for all pairs. Throws
    /// PreconditionError unless map is an injection V(G) -> V(H).
    auto isometric_embedding_check(const Graph & g, const Graph & h, std::span<const Vertex> map) -> bool;

    /// The metric-coordinate map of a two-vertex code into P_5 x P_5, with
    /// (i, j) numbered 5i + j; empty if some distance exceeds 4.
    auto king_grid_coordinates(const Graph & g, Vertex u, Vertex v) -> std::vector<Vertex>;

    /**
     * Requires connected, n >= 3. Parts, each prefixed on counterexamples
     * and noted when the hypothesis applies:
     *   (a) lambda >= n-2 implies D <= 3
     *   (b) lambda = n-2 iff eta = n-2
     *   (c) lambda = n-2 implies G is one of eta_n_minus_2_instances(n)
     *   (d) eta = n-3 implies lambda = n-3
     */
    auto check_lambda_extremal(const Graph & g) -> Verdict;

    /// Builds realization_graph(a, b, c) and compares brute-force
    /// (gamma, beta, eta). The excluded triples hold when construction is
    /// refused. Throws PreconditionError outside max(a,b) <= c <= a+b.
    auto verify_realization(int a, int b, int c) -> Verdict;

    /// realization_tree(a, b) is a tree with (eta, lambda) = (a, b). Throws
    /// PreconditionError unless 3 <= a <= b <= 2a-2.
    auto verify_tree_realization(int a, int b) -> Verdict;

    /// Brute-force values against a family's claimed values and codes.
    auto check_family_claims(const FamilyInstance & f) -> Verdict;

    struct SweepReport
    {
        /// Aggregate: fails if any graph failed, skipped if every graph was.
        Verdict summary;
        int checked = 0, held = 0, failed = 0, skipped = 0;
        std::map<std::string, int> skip_reasons;

        /// Per-graph verdicts, in input order.
        std::vector<Verdict> verdicts;
    };

    /// Aggregates already computed verdicts.
    auto summarise(std::string theorem, std::string scope, std::vector<Verdict> verdicts) -> SweepReport;

    using Checker = std::function<auto (const Graph &) -> Verdict>;

    auto sweep(std::string theorem, std::string scope, const std::vector<Graph> & graphs,
            const Checker & checker, int jobs = 1) -> SweepReport;
}

#endif
