/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "cli.hh"

#include <locdom/canonical.hh>
#include <locdom/enumeration.hh>
#include <locdom/errors.hh>
#include <locdom/families.hh>
#include <locdom/graph6.hh>
#include <locdom/parallel.hh>
#include <locdom/solvers.hh>
#include <locdom/theorems.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <optional>
#include <regex>
#include <sstream>

#ifndef LOCDOM_VERSION
#define LOCDOM_VERSION "unknown"
#endif

using nlohmann::json;
using std::optional;
using std::string;
using std::vector;

namespace locdom::cli
{
    namespace
    {
        using Clock = std::chrono::steady_clock;

        auto sha256_hex(const string & bytes) -> string
        {
            unsigned char digest[EVP_MAX_MD_SIZE];
            unsigned int length = 0;
            if (! EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr))
                throw InvariantViolation("SHA-256 computation failed");
            std::ostringstream s;
            for (unsigned i = 0 ; i < length ; ++i)
                s << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
            return s.str();
        }

        struct RunManifest
        {
            string command_line;
            string version = LOCDOM_VERSION;
            Clock::time_point started = Clock::now();
            optional<string> input_sha256;

            auto to_json() const -> json
            {
                auto elapsed = std::chrono::duration<double>(Clock::now() - started).count();
                return json{ { "command_line", command_line }, { "version", version }, { "wall_seconds", elapsed },
                    { "input_sha256", input_sha256 ? json(*input_sha256) : json(nullptr) } };
            }
        };

        auto join_command_line(const vector<string> & args) -> string
        {
            string result = "locdom";
            for (auto & a : args) {
                result += ' ';
                if (a.empty() || a.find_first_of(" \t\"'") != string::npos)
                    result += json(a).dump();
                else
                    result += a;
            }
            return result;
        }

        struct Context
        {
            std::istream & in;
            std::ostream & out;
            std::ostream & err;
            RunManifest manifest;
            int jobs = 0;
            bool table = false;
        };

        auto emit(Context & ctx, const json & record) -> void
        {
            ctx.out << record.dump() << '\n';
        }

        auto emit_footer(Context & ctx, string command, json extra = json::object()) -> void
        {
            extra["record"] = "footer";
            extra["command"] = std::move(command);
            extra["manifest"] = ctx.manifest.to_json();
            if (ctx.table)
                ctx.err << "# " << extra.dump() << '\n';
            else
                emit(ctx, extra);
        }

        // Input.

        struct ParsedGraph
        {
            Graph graph;
            int line;
        };

        auto read_all(Context & ctx, const string & path) -> string
        {
            if (path == "-")
                return string(std::istreambuf_iterator<char>(ctx.in), {});
            std::ifstream f(path, std::ios::binary);
            if (! f)
                throw PreconditionError("cannot open input file '" + path + "'");
            return string(std::istreambuf_iterator<char>(f), {});
        }

        auto looks_like_edge_list(const string & bytes) -> bool
        {
            std::istringstream s(bytes);
            string line;
            static const std::regex count{ R"(\s*[0-9]+\s*)" };
            while (std::getline(s, line)) {
                if (line.find_first_not_of(" \t\r") == string::npos)
                    continue;
                return std::regex_match(line, count);
            }
            return false;
        }

        auto parse_edge_list(const string & bytes) -> vector<ParsedGraph>
        {
            std::istringstream s(bytes);
            string line;
            int line_number = 0, n = -1, first_line = 0;
            vector<Edge> edges;
            while (std::getline(s, line)) {
                ++line_number;
                if (! line.empty() && line.back() == '\r')
                    line.pop_back();
                if (line.find_first_not_of(" \t") == string::npos)
                    continue;
                std::istringstream fields(line);
                auto where = "edge list line " + std::to_string(line_number);
                if (n < 0) {
                    if (! (fields >> n) || n < 1)
                        throw ParseError(where + ": expected a positive vertex count");
                    first_line = line_number;
                }
                else {
                    Vertex u, v;
                    if (! (fields >> u >> v))
                        throw ParseError(where + ": expected two vertex numbers");
                    if (u < 0 || v < 0 || u >= n || v >= n)
                        throw ParseError(where + ": vertex out of range 0.." + std::to_string(n - 1));
                    if (u == v)
                        throw ParseError(where + ": loops are not allowed");
                    edges.emplace_back(u, v);
                }
                string rest;
                if (fields >> rest)
                    throw ParseError(where + ": unexpected trailing text '" + rest + "'");
            }
            if (n < 0)
                throw ParseError("edge list is empty");
            return { ParsedGraph{ Graph::from_edge_list(n, edges), first_line } };
        }

        auto parse_graph6_stream(const string & bytes) -> vector<ParsedGraph>
        {
            std::istringstream s(bytes);
            Graph6Reader reader(s);
            vector<ParsedGraph> result;
            while (auto g = reader.next())
                result.push_back(ParsedGraph{ std::move(*g), reader.line_number() });
            return result;
        }

        auto load_graphs(Context & ctx, const string & path, const string & format) -> vector<ParsedGraph>
        {
            auto bytes = read_all(ctx, path);
            ctx.manifest.input_sha256 = sha256_hex(bytes);
            bool edge_list = format == "edgelist" || (format == "auto" && looks_like_edge_list(bytes));
            return edge_list ? parse_edge_list(bytes) : parse_graph6_stream(bytes);
        }

        auto require_connected(const vector<ParsedGraph> & graphs) -> void
        {
            for (auto & p : graphs)
                if (! p.graph.is_connected())
                    throw PreconditionError("graph on input line " + std::to_string(p.line) + " is not connected");
        }

        auto code_json(const Code & c) -> json
        {
            return json(vector<Vertex>(c.members().begin(), c.members().end()));
        }

        auto optimum_json(const Optimum & o) -> json
        {
            return json{ { "value", o.value }, { "witness", code_json(o.witness) } };
        }

        auto verdict_json(const Verdict & v) -> json
        {
            json j{ { "record", "verdict" }, { "theorem", v.theorem }, { "scope", v.scope },
                { "status", string(to_string(v.status)) } };
            if (v.status == Status::skipped)
                j["skip_reason"] = v.skip_reason;
            json cx = json::array();
            for (auto & c : v.counterexamples)
                cx.push_back(json{ { "graph6", c.graph6 }, { "detail", c.detail } });
            j["counterexamples"] = cx;
            j["notes"] = v.notes;
            return j;
        }

        auto column(std::ostream & out, const string & text, int width) -> void
        {
            out << std::left << std::setw(width) << text << ' ';
        }

        // compute

        auto parse_parameters(const string & text) -> vector<Parameter>
        {
            if (text == "all")
                return { all_parameters.begin(), all_parameters.end() };
            vector<Parameter> result;
            std::istringstream s(text);
            string item;
            while (std::getline(s, item, ','))
                if (! item.empty()) {
                    auto p = parse_parameter(item);
                    if (std::find(result.begin(), result.end(), p) == result.end())
                        result.push_back(p);
                }
            if (result.empty())
                throw ParseError("no parameters requested");
            return result;
        }

        auto cmd_compute(Context & ctx, const string & input, const string & format, const string & params_text) -> int
        {
            auto params = parse_parameters(params_text);
            auto graphs = load_graphs(ctx, input, format);
            require_connected(graphs);
            bool needs_two = std::any_of(params.begin(), params.end(), [] (Parameter p) { return p != Parameter::gamma; });
            for (auto & p : graphs)
                if (needs_two && p.graph.order() < 2)
                    throw PreconditionError("graph on input line " + std::to_string(p.line)
                            + " has one vertex; only gamma is defined there");

            bool all_four = params.size() == all_parameters.size();
            vector<json> records(graphs.size());
            parallel_for(graphs.size(), ctx.jobs, [&] (size_t i) {
                auto & g = graphs[i].graph;
                json r{ { "record", "graph" }, { "index", i }, { "line", graphs[i].line },
                    { "graph6", graph6_any(g) }, { "n", g.order() }, { "diameter", diameter(g) } };
                if (all_four) {
                    auto report = full_report(g);
                    for (auto p : params)
                        r[string(to_string(p))] = optimum_json(report.get(p));
                }
                else
                    for (auto p : params)
                        r[string(to_string(p))] = optimum_json(*minimum_code(g, p));
                records[i] = std::move(r);
            });

            if (ctx.table) {
                column(ctx.out, "graph6", 14);
                column(ctx.out, "n", 4);
                column(ctx.out, "D", 3);
                for (auto p : params)
                    column(ctx.out, string(to_string(p)), 7);
                ctx.out << "witnesses\n";
            }
            for (auto & r : records) {
                if (ctx.table) {
                    column(ctx.out, r["graph6"].get<string>(), 14);
                    column(ctx.out, std::to_string(r["n"].get<int>()), 4);
                    column(ctx.out, std::to_string(r["diameter"].get<int>()), 3);
                    string witnesses;
                    for (auto p : params) {
                        auto & o = r[string(to_string(p))];
                        column(ctx.out, std::to_string(o["value"].get<int>()), 7);
                        witnesses += string(to_string(p)) + "=" + o["witness"].dump() + " ";
                    }
                    ctx.out << witnesses << '\n';
                }
                else
                    emit(ctx, r);
            }
            emit_footer(ctx, "compute", json{ { "graphs", records.size() } });
            return exit_ok;
        }

        // enumerate

        auto parse_range(const string & text) -> std::pair<int, int>
        {
            static const std::regex pattern{ R"(\s*([0-9]+)\s*(?:\.\.\s*([0-9]+)\s*)?)" };
            std::smatch m;
            if (! std::regex_match(text, m, pattern))
                throw ParseError("bad order range '" + text + "'; expected A..B or N");
            int from = std::stoi(m[1].str());
            int to = m[2].matched ? std::stoi(m[2].str()) : from;
            if (from > to)
                throw PreconditionError("empty order range '" + text + "'");
            return { from, to };
        }

        auto cmd_enumerate(Context & ctx, const string & range, const string & filter_text, const string & output,
                const string & input, const string & format) -> int
        {
            auto [from, to] = parse_range(range);
            auto filter = Filter::parse(filter_text);
            if (input.empty() && (from < 1 || to > max_enumeration_order))
                throw PreconditionError("enumeration supports orders 1.." + std::to_string(max_enumeration_order));

            CensusReport report;
            if (input.empty())
                report = census(from, to, filter, filter.to_string(), ctx.jobs);
            else {
                auto parsed = load_graphs(ctx, input, format);
                require_connected(parsed);
                vector<Graph> graphs;
                for (auto & p : parsed)
                    if (p.graph.order() >= from && p.graph.order() <= to)
                        graphs.push_back(std::move(p.graph));
                report = census(graphs, filter, filter.to_string(), ctx.jobs);
                for (int n = from ; n <= to ; ++n)
                    report.counts.try_emplace(n, 0);
            }

            if (output == "graph6") {
                for (auto & e : report.representatives)
                    ctx.out << e.graph6 << '\n';
                ctx.err << json{ { "record", "footer" }, { "command", "enumerate" }, { "total", report.total },
                    { "manifest", ctx.manifest.to_json() } }.dump() << '\n';
                return exit_ok;
            }

            json counts = json::object();
            for (auto & [n, c] : report.counts)
                counts[std::to_string(n)] = c;

            if (ctx.table) {
                if (output == "census")
                    for (auto & e : report.representatives)
                        ctx.out << std::left << std::setw(4) << e.order << e.graph6 << '\n';
                ctx.out << "filter: " << report.filter << '\n';
                column(ctx.out, "n", 4);
                ctx.out << "count\n";
                for (auto & [n, c] : report.counts) {
                    column(ctx.out, std::to_string(n), 4);
                    ctx.out << c << '\n';
                }
                ctx.out << "total: " << report.total << '\n';
            }
            else {
                if (output == "census")
                    for (auto & e : report.representatives)
                        emit(ctx, json{ { "record", "graph" }, { "n", e.order }, { "graph6", e.graph6 } });
                emit(ctx, json{ { "record", "census" }, { "filter", report.filter }, { "n_from", from }, { "n_to", to },
                        { "counts", counts }, { "total", report.total } });
            }
            emit_footer(ctx, "enumerate");
            return exit_ok;
        }

        // family

        auto edge_list_text(const Graph & g) -> string
        {
            std::ostringstream s;
            s << g.order() << '\n';
            for (auto [u, v] : g.edges())
                s << u << ' ' << v << '\n';
            return s.str();
        }

        auto cmd_family(Context & ctx, const string & name, const vector<int> & args, const string & emit_as, bool verify) -> int
        {
            auto f = make_family(name, args);

            optional<Verdict> verdict;
            if (verify)
                verdict = check_family_claims(f);

            if (emit_as == "graph6")
                ctx.out << graph6_any(f.graph) << '\n';
            else if (emit_as == "edgelist")
                ctx.out << edge_list_text(f.graph);
            else if (ctx.table) {
                ctx.out << f.name << ": n=" << f.graph.order() << " m=" << f.graph.size() << '\n';
                for (auto & [p, value] : f.claimed_values)
                    ctx.out << "  claimed " << to_string(p) << " = " << value << '\n';
            }
            else {
                json claimed = json::object(), codes = json::object();
                for (auto & [p, value] : f.claimed_values)
                    claimed[string(to_string(p))] = value;
                for (auto & [p, code] : f.claimed_codes)
                    codes[string(to_string(p))] = code_json(code);
                json r{ { "record", "family" }, { "name", f.name }, { "n", f.graph.order() }, { "size", f.graph.size() },
                    { "graph6", graph6_any(f.graph) }, { "claimed", claimed }, { "claimed_codes", codes } };
                if (! f.labels.empty())
                    r["labels"] = f.labels;
                emit(ctx, r);
            }

            bool raw = emit_as != "json";
            if (verdict) {
                if (raw || ctx.table) {
                    auto & sink = raw ? ctx.err : ctx.out;
                    sink << "verify " << verdict->scope << ": ";
                    for (auto & n : verdict->notes)
                        sink << n << ' ';
                    for (auto & c : verdict->counterexamples)
                        sink << "MISMATCH " << c.detail << ' ';
                    sink << (verdict->status == Status::fails ? "FAIL" : "OK") << '\n';
                }
                else
                    emit(ctx, verdict_json(*verdict));
            }

            if (raw)
                ctx.err << json{ { "record", "footer" }, { "command", "family" },
                    { "manifest", ctx.manifest.to_json() } }.dump() << '\n';
            else
                emit_footer(ctx, "family");
            return verdict && verdict->status == Status::fails ? exit_verification_failed : exit_ok;
        }

        // verify

        enum class Domain
        {
            graphs,
            trees,
            fixed
        };

        struct TheoremEntry
        {
            string id;
            string description;
            Domain domain;
            int min_order;
            Checker checker;
            std::function<auto () -> vector<Verdict>> fixed_cases;
        };

        auto realization_cases() -> vector<Verdict>
        {
            vector<Verdict> result;
            for (int a = 1 ; a <= 3 ; ++a)
                for (int b = 1 ; b <= 3 ; ++b)
                    for (int c = std::max(a, b) ; c <= a + b ; ++c)
                        result.push_back(verify_realization(a, b, c));
            return result;
        }

        auto tree_realization_cases() -> vector<Verdict>
        {
            vector<Verdict> result;
            for (int a = 3 ; a <= 5 ; ++a)
                for (int b = a ; b <= 2 * a - 2 ; ++b)
                    result.push_back(verify_tree_realization(a, b));
            return result;
        }

        auto table1_cases() -> vector<Verdict>
        {
            vector<Verdict> result;
            for (int n = 4 ; n <= 15 ; ++n)
                result.push_back(check_family_claims(path(n)));
            for (int n = 7 ; n <= 15 ; ++n)
                result.push_back(check_family_claims(cycle(n)));
            for (int n = 2 ; n <= 9 ; ++n)
                result.push_back(check_family_claims(complete(n)));
            for (int n = 3 ; n <= 9 ; ++n)
                result.push_back(check_family_claims(star(n)));
            for (int n = 4 ; n <= 10 ; ++n)
                for (int r = 2 ; r <= n - r ; ++r)
                    result.push_back(check_family_claims(complete_bipartite(r, n - r)));
            for (int n = 8 ; n <= 12 ; ++n)
                result.push_back(check_family_claims(wheel(n)));
            return result;
        }

        auto theorem_registry() -> vector<TheoremEntry>
        {
            return {
                { "prop1", "max(gamma,beta) <= eta <= min(gamma+beta,lambda)", Domain::graphs, 2, check_inequality_chain, {} },
                { "eta-bounds", "eta + ceil(2D/3) <= n <= eta + eta*3^(eta-1) for D >= 3", Domain::graphs, 2, check_eta_bounds, {} },
                { "lambda-bounds", "lambda + ceil((3D-1)/5) <= n for D >= 3; n <= lambda + 2^lambda - 1", Domain::graphs, 2, check_lambda_bounds, {} },
                { "tree-bounds", "eta <= lambda <= 2eta-2 for trees other than P6", Domain::trees, 3, check_tree_bounds, {} },
                { "eta-lambda", "D = 2 or beta >= n-3 implies eta = lambda", Domain::graphs, 2, check_eta_equals_lambda_conditions, {} },
                { "eta2-embedding", "eta = 2: 3 <= n <= 8, eta-codes at distance <= 3, isometric king-grid embedding", Domain::graphs, 2, check_eta2_membership, {} },
                { "lambda-extremal", "lambda >= n-2 gives D <= 3; lambda = n-2 iff eta = n-2; family list; eta = n-3 gives lambda = n-3", Domain::graphs, 3, check_lambda_extremal, {} },
                { "realization", "(gamma,beta,eta) = (a,b,c) for 1 <= a,b <= 3", Domain::fixed, 0, {}, realization_cases },
                { "tree-realization", "trees with (eta,lambda) = (a,b) for 3 <= a <= 5", Domain::fixed, 0, {}, tree_realization_cases },
                { "table1", "closed forms for paths, cycles, complete graphs, stars, complete bipartite graphs, wheels", Domain::fixed, 0, {}, table1_cases },
            };
        }

        auto run_theorem(Context & ctx, const TheoremEntry & t, int n_max, const optional<vector<Graph>> & input) -> SweepReport
        {
            if (t.domain == Domain::fixed)
                return summarise(t.id, t.description, t.fixed_cases());

            vector<Graph> graphs;
            string scope;
            if (input) {
                graphs = *input;
                scope = "input graphs";
            }
            else if (t.domain == Domain::trees) {
                if (n_max > 16)
                    throw PreconditionError("tree enumeration supports orders up to 16");
                for (int n = t.min_order ; n <= n_max ; ++n)
                    for (auto & g : trees(n, EnumerationOptions{ ctx.jobs, std::nullopt }))
                        graphs.push_back(std::move(g));
                scope = "trees of order " + std::to_string(t.min_order) + ".." + std::to_string(n_max);
            }
            else {
                if (n_max > max_enumeration_order)
                    throw PreconditionError("enumeration supports orders up to " + std::to_string(max_enumeration_order));
                if (n_max >= t.min_order) {
                    auto levels = connected_graphs_up_to(n_max, EnumerationOptions{ ctx.jobs, std::nullopt });
                    for (int n = t.min_order ; n <= n_max ; ++n)
                        for (auto & g : levels[n - 1])
                            graphs.push_back(std::move(g));
                }
                scope = "connected graphs of order " + std::to_string(t.min_order) + ".." + std::to_string(n_max);
            }

            auto checker = [&] (const Graph & g) -> Verdict {
                if (g.order() < t.min_order || (t.domain == Domain::trees && ! g.is_tree())) {
                    Verdict v;
                    v.theorem = t.id;
                    v.scope = graph6_any(g);
                    v.status = Status::skipped;
                    v.skip_reason = t.domain == Domain::trees && ! g.is_tree() ? "not a tree"
                        : "order below " + std::to_string(t.min_order);
                    return v;
                }
                return t.checker(g);
            };
            return sweep(t.id, scope, graphs, checker, ctx.jobs);
        }

        auto cmd_verify(Context & ctx, const string & id, int n_max, const string & input, const string & format, bool records) -> int
        {
            auto registry = theorem_registry();
            vector<const TheoremEntry *> selected;
            for (auto & t : registry)
                if (id == "all" || id == t.id)
                    selected.push_back(&t);
            if (selected.empty()) {
                string known;
                for (auto & t : registry)
                    known += " " + t.id;
                throw PreconditionError("unknown theorem '" + id + "'; known:" + known + " all");
            }

            optional<vector<Graph>> graphs;
            if (! input.empty()) {
                auto parsed = load_graphs(ctx, input, format);
                require_connected(parsed);
                graphs.emplace();
                for (auto & p : parsed)
                    graphs->push_back(std::move(p.graph));
            }

            if (ctx.table) {
                column(ctx.out, "theorem", 17);
                column(ctx.out, "status", 8);
                column(ctx.out, "checked", 8);
                column(ctx.out, "held", 6);
                column(ctx.out, "failed", 7);
                ctx.out << "skipped\n";
            }

            bool any_failed = false;
            json statuses = json::object();
            for (auto t : selected) {
                auto report = run_theorem(ctx, *t, n_max, graphs);
                any_failed = any_failed || report.summary.status == Status::fails;
                statuses[t->id] = string(to_string(report.summary.status));

                if (ctx.table) {
                    column(ctx.out, t->id, 17);
                    column(ctx.out, string(to_string(report.summary.status)), 8);
                    column(ctx.out, std::to_string(report.checked), 8);
                    column(ctx.out, std::to_string(report.held), 6);
                    column(ctx.out, std::to_string(report.failed), 7);
                    ctx.out << report.skipped << '\n';
                    for (auto & c : report.summary.counterexamples)
                        ctx.out << "    counterexample " << c.graph6 << ": " << c.detail << '\n';
                    for (auto & [reason, count] : report.skip_reasons)
                        ctx.out << "    skipped " << count << ": " << reason << '\n';
                    continue;
                }

                if (records)
                    for (auto & v : report.verdicts)
                        emit(ctx, verdict_json(v));
                auto j = verdict_json(report.summary);
                j["record"] = "summary";
                j["description"] = t->description;
                j["checked"] = report.checked;
                j["held"] = report.held;
                j["failed"] = report.failed;
                j["skipped"] = report.skipped;
                j["skip_reasons"] = report.skip_reasons;
                emit(ctx, j);
            }

            emit_footer(ctx, "verify", json{ { "status", any_failed ? "fails" : "holds" }, { "theorems", statuses } });
            return any_failed ? exit_verification_failed : exit_ok;
        }
    }

    auto run(const vector<string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int
    {
        Context ctx{ in, out, err, RunManifest{}, 0, false };
        ctx.manifest.command_line = join_command_line(args);

        CLI::App app{ "Exact locating and dominating code parameters of small graphs", "locdom" };
        app.set_version_flag("--version", string(LOCDOM_VERSION));
        app.require_subcommand(1);

        auto add_common = [&] (CLI::App * sub) {
            sub->add_option("--jobs,-j", ctx.jobs, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
            sub->add_flag("--table", ctx.table, "human-readable table instead of JSON lines");
        };

        string input = "-", format = "auto", params = "all";
        auto compute = app.add_subcommand("compute", "gamma, beta, eta, lambda with witness codes for each input graph");
        compute->add_option("--input,-i", input, "graph6 or edge-list file, - for stdin");
        compute->add_option("--format", format, "auto, graph6 or edgelist")->check(CLI::IsMember({ "auto", "graph6", "edgelist" }));
        compute->add_option("--params,-p", params, "comma-separated subset of gamma,beta,eta,lambda, or all");
        add_common(compute);

        string range, filter, output = "count", enum_input;
        auto enumerate = app.add_subcommand("enumerate", "census of connected graphs by order and parameter filter");
        enumerate->add_option("--n", range, "order range A..B (at most 9)")->required();
        enumerate->add_option("--filter,-f", filter, "e.g. \"eta=2 and diam<=3\"");
        enumerate->add_option("--output,-o", output, "count, census or graph6")->check(CLI::IsMember({ "count", "census", "graph6" }));
        enumerate->add_option("--input,-i", enum_input, "take graphs from a file (- for stdin) instead of generating them");
        enumerate->add_option("--format", format, "auto, graph6 or edgelist")->check(CLI::IsMember({ "auto", "graph6", "edgelist" }));
        add_common(enumerate);

        string family_name, emit_as = "json";
        vector<int> family_args;
        bool verify_family = false;
        auto family = app.add_subcommand("family", "generate a named graph family");
        family->add_option("name", family_name, "family name")->required();
        family->add_option("args", family_args, "integer parameters");
        family->add_option("--emit", emit_as, "json, graph6 or edgelist")->check(CLI::IsMember({ "json", "graph6", "edgelist" }));
        family->add_flag("--verify", verify_family, "brute-force the claimed parameter values");
        add_common(family);
        string families_help = "families:";
        for (auto & [name, synopsis] : family_synopsis())
            families_help += "\n  " + name + " " + synopsis;
        family->footer(families_help);

        string theorem, verify_input;
        int n_max = 7;
        bool records = false;
        auto verify = app.add_subcommand("verify", "check a theorem over enumerated or supplied graphs");
        verify->add_option("theorem", theorem, "theorem id or all")->required();
        verify->add_option("--n-max", n_max, "largest order enumerated");
        verify->add_option("--input,-i", verify_input, "check graphs from a file (- for stdin) instead");
        verify->add_option("--format", format, "auto, graph6 or edgelist")->check(CLI::IsMember({ "auto", "graph6", "edgelist" }));
        verify->add_flag("--records", records, "also emit one verdict per graph");
        add_common(verify);
        string theorems_help = "theorems:";
        for (auto & t : theorem_registry())
            theorems_help += "\n  " + t.id + string(t.id.size() < 18 ? 18 - t.id.size() : 1, ' ') + t.description;
        verify->footer(theorems_help);

        try {
            vector<string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::ParseError & e) {
            auto code = app.exit(e, out, err);
            return code == 0 ? exit_ok : exit_parse_error;
        }

        try {
            if (compute->parsed())
                return cmd_compute(ctx, input, format, params);
            if (enumerate->parsed())
                return cmd_enumerate(ctx, range, filter, output, enum_input, format);
            if (family->parsed())
                return cmd_family(ctx, family_name, family_args, emit_as, verify_family);
            if (verify->parsed())
                return cmd_verify(ctx, theorem, n_max, verify_input, format, records);
        }
        catch (const ParseError & e) {
            err << "parse error: " << e.what() << '\n';
            return exit_parse_error;
        }
        catch (const PreconditionError & e) {
            err << "precondition violated: " << e.what() << '\n';
            return exit_precondition;
        }
        catch (const InvariantViolation & e) {
            err << "internal invariant violated: " << e.what() << '\n';
            return exit_invariant;
        }
        catch (const std::exception & e) {
            err << "internal error: " << e.what() << '\n';
            return exit_invariant;
        }
        return exit_parse_error;
    }
}
