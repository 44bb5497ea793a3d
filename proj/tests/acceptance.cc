/* vim: set sw=4 sts=4 et foldmethod=syntax : */

// Acceptance suite. With no arguments every criterion runs; otherwise only
// the listed numbers. One PASS/FAIL line per criterion; exit status is
// nonzero if any selected criterion fails.

#include "oracles.hh"

#include <locdom/canonical.hh>
#include <locdom/codes.hh>
#include <locdom/enumeration.hh>
#include <locdom/errors.hh>
#include <locdom/families.hh>
#include <locdom/graph6.hh>
#include <locdom/parallel.hh>
#include <locdom/solvers.hh>
#include <locdom/theorems.hh>

#include <array>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace locdom;

namespace
{
    struct Outcome
    {
        bool pass = true;
        std::vector<std::string> problems;
        std::vector<std::string> facts;

        auto require(bool condition, const std::string & what) -> void
        {
            if (! condition) {
                pass = false;
                problems.push_back(what);
            }
        }
    };

    int jobs = 1;

    auto ceil_div(int a, int b) -> int
    {
        return (a + b - 1) / b;
    }

    auto all_connected(int n_from, int n_to) -> std::vector<Graph>
    {
        std::vector<Graph> result;
        for (int n = n_from ; n <= n_to ; ++n)
            for (auto & g : connected_graphs(n, { .jobs = jobs }))
                result.push_back(g);
        return result;
    }

    auto first_counterexample(const SweepReport & r) -> std::string
    {
        if (r.summary.counterexamples.empty())
            return "";
        auto & c = r.summary.counterexamples.front();
        return c.graph6 + " (" + c.detail + ")";
    }

    /// Zero failures required; the count checked is recorded.
    auto require_sweep(Outcome & o, const SweepReport & r, int expected_checked) -> void
    {
        o.facts.push_back(r.summary.theorem + ": " + std::to_string(r.checked) + " checked, "
                + std::to_string(r.held) + " held, " + std::to_string(r.skipped) + " skipped, "
                + std::to_string(r.failed) + " failed");
        o.require(r.checked == expected_checked, r.summary.theorem + " checked " + std::to_string(r.checked)
                + " graphs, expected " + std::to_string(expected_checked));
        o.require(r.failed == 0, r.summary.theorem + " has " + std::to_string(r.failed)
                + " failures, first " + first_counterexample(r));
    }

    auto has_note(const Verdict & v, const std::string & text) -> bool
    {
        for (auto & n : v.notes)
            if (n.find(text) != std::string::npos)
                return true;
        return false;
    }

    auto census_eta2() -> Outcome
    {
        Outcome o;
        auto r = census(3, 8, Filter::parse("eta=2"), "eta=2", jobs);
        std::map<int, int> expected{ { 3, 2 }, { 4, 4 }, { 5, 10 }, { 6, 15 }, { 7, 17 }, { 8, 3 } };
        std::ostringstream counts;
        for (auto & [n, c] : r.counts)
            counts << (n == 3 ? "" : "/") << c;
        o.facts.push_back("total " + std::to_string(r.total) + ", per order " + counts.str());
        o.require(r.total == 51, "total is " + std::to_string(r.total));
        o.require(r.counts == expected, "per-order counts are " + counts.str());

        std::set<CanonicalForm> forms;
        for (auto & e : r.representatives)
            forms.insert(e.form);
        o.require(forms.size() == r.representatives.size(), "representatives are not pairwise non-isomorphic");
        return o;
    }

    auto census_lambda2() -> Outcome
    {
        Outcome o;
        auto r = census(3, 5, Filter::parse("lambda=2"), "lambda=2", jobs);
        o.facts.push_back("total " + std::to_string(r.total));
        o.require(r.total == 16, "total is " + std::to_string(r.total));
        for (auto & e : r.representatives) {
            int eta = mld_number(read_graph6(e.graph6)).value;
            o.require(eta == 2, e.graph6 + " has eta " + std::to_string(eta));
        }
        return o;
    }

    auto table1() -> Outcome
    {
        Outcome o;
        int cases = 0;
        auto compare = [&] (const std::string & name, const Graph & g, std::array<int, 4> expected) {
            ++cases;
            auto r = full_report(g);
            std::array<int, 4> got{ r.gamma.value, r.beta.value, r.eta.value, r.lambda.value };
            if (got != expected) {
                std::ostringstream s;
                s << name << " measured (" << got[0] << "," << got[1] << "," << got[2] << "," << got[3]
                    << ") expected (" << expected[0] << "," << expected[1] << "," << expected[2] << "," << expected[3] << ")";
                o.require(false, s.str());
            }
        };

        for (int n = 4 ; n <= 15 ; ++n)
            compare("P" + std::to_string(n), path_graph(n), { ceil_div(n, 3), 1, ceil_div(n, 3), ceil_div(2 * n, 5) });
        for (int n = 7 ; n <= 15 ; ++n)
            compare("C" + std::to_string(n), cycle_graph(n), { ceil_div(n, 3), 2, ceil_div(n, 3), ceil_div(2 * n, 5) });
        for (int n = 2 ; n <= 9 ; ++n)
            compare("K" + std::to_string(n), complete_graph(n), { 1, n - 1, n - 1, n - 1 });
        for (int n = 3 ; n <= 9 ; ++n)
            compare("K1," + std::to_string(n - 1), star_graph(n), { 1, n - 2, n - 1, n - 1 });
        for (int n = 4 ; n <= 10 ; ++n)
            for (int r = 2 ; r <= n - r ; ++r)
                compare("K" + std::to_string(r) + "," + std::to_string(n - r), complete_bipartite_graph(r, n - r), { 2, n - 2, n - 2, n - 2 });
        for (int n = 8 ; n <= 12 ; ++n)
            compare("W1," + std::to_string(n - 1), wheel_graph(n), { 1, 2 * n / 5, ceil_div(2 * n - 2, 5), ceil_div(2 * n - 2, 5) });

        o.facts.push_back(std::to_string(cases) + " graphs");
        return o;
    }

    auto prop1() -> Outcome
    {
        Outcome o;
        auto graphs = all_connected(2, 7);
        require_sweep(o, sweep("prop1", "2..7", graphs, check_inequality_chain, jobs), 995);
        return o;
    }

    auto eta_bounds() -> Outcome
    {
        Outcome o;
        auto graphs = all_connected(2, 7);
        auto r = sweep("eta-bounds", "2..7", graphs, check_eta_bounds, jobs);
        require_sweep(o, r, 995);
        o.require(r.held + r.skipped == 995, "unexpected statuses in the eta bound sweep");

        for (int k = 2 ; k <= 4 ; ++k) {
            auto v = check_eta_bounds(path_graph(3 * k));
            o.require(v.status == Status::holds && has_note(v, "lower bound tight"),
                    "P" + std::to_string(3 * k) + " does not attain the lower bound");
        }

        auto g2 = g_eta_construction(2);
        int eta2 = mld_number(g2.graph).value;
        o.require(g2.graph.order() == 8 && eta2 == 2, "G_2 has n=" + std::to_string(g2.graph.order()) + " eta=" + std::to_string(eta2));
        o.require(has_note(check_eta_bounds(g2.graph), "upper bound tight"), "G_2 does not attain the upper bound");

        auto g3 = g_eta_construction(3);
        auto & a0 = g3.claimed_codes.at(Parameter::eta);
        int eta3 = mld_number(g3.graph).value;
        o.require(g3.graph.order() == 30, "G_3 has order " + std::to_string(g3.graph.order()));
        o.require(a0.size() == 3 && is_mld(g3.graph, a0), "A_0 is not an MLD set of size 3 in G_3");
        o.require(eta3 == 3, "G_3 has eta " + std::to_string(eta3));
        o.require(g3.graph.order() == eta3 + eta3 * 9, "G_3 does not attain the upper bound");
        o.facts.push_back("tight: P6 P9 P12 lower, G_2 (n=8) and G_3 (n=30) upper");
        return o;
    }

    auto lambda_bounds() -> Outcome
    {
        Outcome o;
        auto graphs = all_connected(2, 7);
        require_sweep(o, sweep("lambda-bounds", "2..7", graphs, check_lambda_bounds, jobs), 995);
        auto p5 = check_lambda_bounds(path_graph(5));
        o.require(has_note(p5, "lower bound tight"), "P5 does not attain the lower bound");
        return o;
    }

    auto tree_bounds() -> Outcome
    {
        Outcome o;
        std::vector<Graph> all;
        int expected = 0;
        for (int n = 3 ; n <= 12 ; ++n)
            for (auto & t : trees(n, { .jobs = jobs })) {
                all.push_back(t);
                ++expected;
            }
        auto r = sweep("tree-bounds", "trees 3..12", all, check_tree_bounds, jobs);
        o.facts.push_back(std::to_string(r.checked) + " trees, " + std::to_string(r.held) + " held, "
                + std::to_string(r.skipped) + " skipped, " + std::to_string(r.failed) + " failed");
        o.require(r.checked == expected, "tree count mismatch");
        o.require(r.skipped == 1 && r.skip_reasons.count("P6 is excluded") == 1, "only P6 may be skipped");
        for (auto & c : r.summary.counterexamples)
            o.require(false, "counterexample " + c.graph6 + " (" + c.detail + ")");

        auto p6 = full_report(path_graph(6));
        o.require(p6.eta.value == 2 && p6.lambda.value == 3, "P6 measured (" + std::to_string(p6.eta.value)
                + "," + std::to_string(p6.lambda.value) + ")");
        o.require(p6.lambda.value > 2 * p6.eta.value - 2, "P6 does not violate the upper bound");

        for (int k = 2 ; k <= 4 ; ++k) {
            auto a = check_tree_bounds(spider_k3(k).graph);
            auto b = check_tree_bounds(spider_k4(k).graph);
            o.require(has_note(a, "lower bound attained"), "S_{" + std::to_string(k) + ",3} misses the lower bound");
            o.require(has_note(b, "upper bound attained"), "S_{" + std::to_string(k) + ",4} misses the upper bound");
        }
        return o;
    }

    auto lambda_extremal() -> Outcome
    {
        Outcome o;
        auto graphs = all_connected(3, 7);
        auto r = sweep("lambda-extremal", "3..7", graphs, check_lambda_extremal, jobs);
        require_sweep(o, r, 994);
        int a = 0, c = 0, d = 0;
        for (auto & v : r.verdicts) {
            a += has_note(v, "(a) applies");
            c += has_note(v, "(c) member of");
            d += has_note(v, "(d) applies");
        }
        o.facts.push_back("(a) applied " + std::to_string(a) + ", (c) matched " + std::to_string(c)
                + ", (d) applied " + std::to_string(d));
        return o;
    }

    auto eta_lambda() -> Outcome
    {
        Outcome o;
        auto graphs = all_connected(2, 7);
        require_sweep(o, sweep("eta-lambda", "2..7", graphs, check_eta_equals_lambda_conditions, jobs), 995);
        return o;
    }

    auto king_grid() -> Outcome
    {
        Outcome o;
        auto c = census(3, 8, Filter::parse("eta=2"), "eta=2", jobs);
        std::vector<Graph> graphs;
        for (auto & e : c.representatives)
            graphs.push_back(read_graph6(e.graph6));
        auto r = sweep("eta2-embedding", "eta=2 census", graphs, check_eta2_membership, jobs);
        require_sweep(o, r, 51);
        return o;
    }

    auto realization() -> Outcome
    {
        Outcome o;
        int triples = 0, rejected = 0, tree_cases = 0;
        for (int a = 1 ; a <= 3 ; ++a)
            for (int b = 1 ; b <= 3 ; ++b)
                for (int c = std::max(a, b) ; c <= a + b ; ++c) {
                    auto v = verify_realization(a, b, c);
                    ++triples;
                    bool excluded = b == 1 && a < c && c == a + 1 && a > 1;
                    if (excluded) {
                        ++rejected;
                        o.require(has_note(v, "excluded triple correctly rejected"), v.scope + " was not rejected");
                    }
                    o.require(v.status == Status::holds, "realization " + v.scope + " "
                            + (v.counterexamples.empty() ? "" : v.counterexamples.front().detail));
                }
        for (int a = 3 ; a <= 5 ; ++a)
            for (int b = a ; b <= 2 * a - 2 ; ++b) {
                auto v = verify_tree_realization(a, b);
                ++tree_cases;
                o.require(v.status == Status::holds, "tree realization " + v.scope);
            }
        o.facts.push_back(std::to_string(triples) + " triples (" + std::to_string(rejected) + " excluded and rejected), "
                + std::to_string(tree_cases) + " tree pairs");
        return o;
    }

    auto infrastructure() -> Outcome
    {
        Outcome o;
        std::vector<int> expected{ 1, 1, 2, 6, 21, 112 };
        for (int n = 1 ; n <= 6 ; ++n) {
            auto graphs = connected_graphs(n, { .jobs = jobs });
            auto classes = oracle::labelled_connected_classes(n);
            o.require(int(graphs.size()) == expected[n - 1] && graphs.size() == classes.size(),
                    "order " + std::to_string(n) + ": " + std::to_string(graphs.size()) + " classes, oracle "
                    + std::to_string(classes.size()));

            std::vector<std::string> brute;
            std::vector<CanonicalForm> forms;
            std::set<std::string> brute_set;
            for (auto & g : graphs) {
                auto back = read_graph6(write_graph6(g));
                o.require(back == g && oracle::brute_isomorphic(oracle::adjacency(back), oracle::adjacency(g)),
                        "graph6 round trip fails on " + write_graph6(g));
                brute.push_back(oracle::brute_canonical(oracle::adjacency(g)));
                brute_set.insert(brute.back());
                forms.push_back(canonical_form(g));
            }
            o.require(brute_set.size() == classes.size(), "order " + std::to_string(n) + ": classes do not cover the oracle");
            for (auto & b : brute_set)
                o.require(classes.count(b) == 1, "order " + std::to_string(n) + ": class missing from the oracle");

            for (size_t i = 0 ; i < graphs.size() ; ++i)
                for (size_t j = 0 ; j < graphs.size() ; ++j)
                    if ((forms[i] == forms[j]) != (brute[i] == brute[j]))
                        o.require(false, "canonical form disagrees on " + write_graph6(graphs[i]) + " vs " + write_graph6(graphs[j]));

            // Relabelled copies of every oracle class land on the right form.
            std::mt19937 rng(n);
            for (auto & [key, matrix] : classes) {
                auto g = oracle::from_matrix(matrix);
                auto h = relabel(g, oracle::random_permutation(n, rng));
                o.require(canonical_form(g) == canonical_form(h), "relabelled copy changes the canonical form");
            }
        }
        o.facts.push_back("counts 1/1/2/6/21/112");
        return o;
    }

    struct Criterion
    {
        int number;
        std::string title;
        std::function<auto () -> Outcome> run;
    };
}

auto main(int argc, char * argv[]) -> int
{
    std::vector<Criterion> criteria{
        { 1, "census eta=2 on n=3..8", census_eta2 },
        { 2, "census lambda=2 on n=3..5", census_lambda2 },
        { 3, "basic family table", table1 },
        { 4, "inequality chain on all connected graphs 2..7", prop1 },
        { 5, "eta bounds and their tightness", eta_bounds },
        { 6, "lambda bounds", lambda_bounds },
        { 7, "tree bounds eta <= lambda <= 2eta-2", tree_bounds },
        { 8, "extremal lambda", lambda_extremal },
        { 9, "eta = lambda conditions", eta_lambda },
        { 10, "king grid embedding of the eta=2 census", king_grid },
        { 11, "realization theorems", realization },
        { 12, "infrastructure oracles", infrastructure }
    };

    std::set<int> selected;
    for (int i = 1 ; i < argc ; ++i) {
        std::string arg = argv[i];
        if (arg.rfind("--jobs=", 0) == 0)
            jobs = resolve_jobs(std::stoi(arg.substr(7)));
        else
            selected.insert(std::stoi(arg));
    }

    bool all_pass = true;
    for (auto & c : criteria) {
        if (! selected.empty() && ! selected.count(c.number))
            continue;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        }
        catch (const std::exception & e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        std::ostringstream line;
        line << (o.pass ? "PASS" : "FAIL") << " criterion " << std::setw(2) << std::setfill('0') << c.number
            << " " << c.title << std::setfill(' ');
        for (auto & f : o.facts)
            line << "; " << f;
        line << " [" << std::fixed << std::setprecision(2) << seconds << "s]";
        std::cout << line.str() << std::endl;
        for (auto & p : o.problems)
            std::cout << "    " << p << std::endl;
        all_pass = all_pass && o.pass;
    }
    return all_pass ? 0 : 1;
}
