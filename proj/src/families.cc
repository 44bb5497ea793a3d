/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <locdom/families.hh>
#include <locdom/errors.hh>

#include <algorithm>
#include <map>
#include <numeric>

using std::map;
using std::pair;
using std::span;
using std::string;
using std::string_view;
using std::vector;

namespace locdom
{
    using std::to_string;

    namespace
    {
        auto ceil_div(int a, int b) -> int
        {
            return (a + b - 1) / b;
        }

        auto require(bool condition, const string & message) -> void
        {
            if (! condition)
                throw PreconditionError(message);
        }

        auto range(int from, int to) -> vector<Vertex>
        {
            vector<Vertex> result(std::max(0, to - from));
            std::iota(result.begin(), result.end(), from);
            return result;
        }

        /// Accumulates named vertices and edges for the hand-built constructions.
        class LabelledBuilder
        {
            public:
                auto vertex(string label) -> Vertex
                {
                    _labels.push_back(std::move(label));
                    return Vertex(_labels.size() - 1);
                }

                auto edge(Vertex u, Vertex v) -> void
                {
                    _edges.emplace_back(u, v);
                }

                auto finish(FamilyInstance & f) -> void
                {
                    f.graph = Graph::from_edge_list(int(_labels.size()), _edges);
                    f.labels = std::move(_labels);
                }

            private:
                vector<string> _labels;
                vector<Edge> _edges;
        };

        auto finished(FamilyInstance f) -> FamilyInstance
        {
            check_claimed_codes(f);
            return f;
        }
    }

    auto check_claimed_codes(const FamilyInstance & f) -> void
    {
        if (f.claimed_codes.empty())
            return;
        CodeChecker checker{ f.graph };
        for (auto & [p, code] : f.claimed_codes) {
            for (auto v : code.members())
                if (v >= f.graph.order())
                    throw InvariantViolation(f.name + ": claimed " + string(to_string(p)) + " code has vertex out of range");
            if (! satisfies(checker, p, code.members()))
                throw InvariantViolation(f.name + ": claimed " + string(to_string(p)) + " code " + code.to_string()
                        + " does not have the property");
            auto value = f.claimed_values.find(p);
            if (value != f.claimed_values.end() && value->second != code.size())
                throw InvariantViolation(f.name + ": claimed " + string(to_string(p)) + " code has size "
                        + to_string(code.size()) + " but the claimed value is " + to_string(value->second));
        }
    }

    auto path_graph(int n) -> Graph
    {
        require(n >= 1, "path needs n >= 1");
        GraphBuilder b(n);
        for (Vertex v = 0 ; v + 1 < n ; ++v)
            b.add_edge(v, v + 1);
        return b.build();
    }

    auto cycle_graph(int n) -> Graph
    {
        require(n >= 3, "cycle needs n >= 3");
        GraphBuilder b(n);
        for (Vertex v = 0 ; v < n ; ++v)
            b.add_edge(v, (v + 1) % n);
        return b.build();
    }

    auto complete_graph(int n) -> Graph
    {
        require(n >= 1, "complete graph needs n >= 1");
        GraphBuilder b(n);
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = u + 1 ; v < n ; ++v)
                b.add_edge(u, v);
        return b.build();
    }

    auto empty_graph(int n) -> Graph
    {
        require(n >= 1, "empty graph needs n >= 1");
        return GraphBuilder(n).build();
    }

    auto star_graph(int n) -> Graph
    {
        require(n >= 1, "star needs n >= 1");
        GraphBuilder b(n);
        for (Vertex v = 1 ; v < n ; ++v)
            b.add_edge(0, v);
        return b.build();
    }

    auto complete_bipartite_graph(int r, int s) -> Graph
    {
        require(r >= 1 && s >= 1, "complete bipartite graph needs r, s >= 1");
        GraphBuilder b(r + s);
        for (Vertex u = 0 ; u < r ; ++u)
            for (Vertex v = r ; v < r + s ; ++v)
                b.add_edge(u, v);
        return b.build();
    }

    auto wheel_graph(int n) -> Graph
    {
        require(n >= 4, "wheel needs n >= 4");
        GraphBuilder b(n);
        for (Vertex v = 1 ; v < n ; ++v) {
            b.add_edge(0, v);
            b.add_edge(v, v + 1 < n ? v + 1 : 1);
        }
        return b.build();
    }

    auto path(int n) -> FamilyInstance
    {
        FamilyInstance f{ "path(" + to_string(n) + ")", path_graph(n), {}, {}, {} };
        if (n > 3)
            f.claimed_values = { { Parameter::gamma, ceil_div(n, 3) }, { Parameter::beta, 1 },
                { Parameter::eta, ceil_div(n, 3) }, { Parameter::lambda, ceil_div(2 * n, 5) } };
        return finished(std::move(f));
    }

    auto cycle(int n) -> FamilyInstance
    {
        FamilyInstance f{ "cycle(" + to_string(n) + ")", cycle_graph(n), {}, {}, {} };
        if (n > 6)
            f.claimed_values = { { Parameter::gamma, ceil_div(n, 3) }, { Parameter::beta, 2 },
                { Parameter::eta, ceil_div(n, 3) }, { Parameter::lambda, ceil_div(2 * n, 5) } };
        return finished(std::move(f));
    }

    auto complete(int n) -> FamilyInstance
    {
        FamilyInstance f{ "complete(" + to_string(n) + ")", complete_graph(n), {}, {}, {} };
        if (n > 1)
            f.claimed_values = { { Parameter::gamma, 1 }, { Parameter::beta, n - 1 },
                { Parameter::eta, n - 1 }, { Parameter::lambda, n - 1 } };
        return finished(std::move(f));
    }

    auto star(int n) -> FamilyInstance
    {
        FamilyInstance f{ "star(" + to_string(n) + ")", star_graph(n), {}, {}, {} };
        if (n > 2)
            f.claimed_values = { { Parameter::gamma, 1 }, { Parameter::beta, n - 2 },
                { Parameter::eta, n - 1 }, { Parameter::lambda, n - 1 } };
        return finished(std::move(f));
    }

    auto complete_bipartite(int r, int s) -> FamilyInstance
    {
        FamilyInstance f{ "bipartite(" + to_string(r) + "," + to_string(s) + ")", complete_bipartite_graph(r, s), {}, {}, {} };
        int n = r + s;
        if (std::min(r, s) > 1)
            f.claimed_values = { { Parameter::gamma, 2 }, { Parameter::beta, n - 2 },
                { Parameter::eta, n - 2 }, { Parameter::lambda, n - 2 } };
        return finished(std::move(f));
    }

    auto wheel(int n) -> FamilyInstance
    {
        FamilyInstance f{ "wheel(" + to_string(n) + ")", wheel_graph(n), {}, {}, {} };
        if (n > 7)
            f.claimed_values = { { Parameter::gamma, 1 }, { Parameter::beta, 2 * n / 5 },
                { Parameter::eta, ceil_div(2 * n - 2, 5) }, { Parameter::lambda, ceil_div(2 * n - 2, 5) } };
        return finished(std::move(f));
    }

    auto strong_grid(span<const int> dims) -> Graph
    {
        require(! dims.empty(), "strong grid needs at least one dimension");
        for (auto d : dims)
            require(d >= 1, "strong grid dimensions must be positive");
        Graph result = path_graph(dims[0]);
        for (size_t i = 1 ; i < dims.size() ; ++i)
            result = strong_product(result, path_graph(dims[i]));
        return result;
    }

    auto spider(span<const int> leg_lengths) -> Graph
    {
        require(leg_lengths.size() >= 2, "spider needs at least two legs");
        int n = 1;
        for (auto l : leg_lengths) {
            require(l >= 1, "spider legs must have at least one edge");
            n += l;
        }
        GraphBuilder b(n);
        Vertex next = 1;
        for (auto l : leg_lengths) {
            Vertex previous = 0;
            for (int j = 0 ; j < l ; ++j) {
                b.add_edge(previous, next);
                previous = next++;
            }
        }
        return b.build();
    }

    namespace
    {
        // Spider with r four-edge legs then k - r three-edge legs. Leg i
        // (0-based) has vertices a_i, b_i, c_i (, d_i) outward from the centre.
        struct SpiderLayout
        {
            vector<int> legs;
            vector<Vertex> first;

            auto a(int i) const -> Vertex { return first[i]; }
            auto b(int i) const -> Vertex { return first[i] + 1; }
            auto c(int i) const -> Vertex { return first[i] + 2; }
        };

        auto layout(int r, int k) -> SpiderLayout
        {
            SpiderLayout s;
            Vertex next = 1;
            for (int i = 0 ; i < k ; ++i) {
                s.legs.push_back(i < r ? 4 : 3);
                s.first.push_back(next);
                next += s.legs.back();
            }
            return s;
        }

        auto spider_labels(const SpiderLayout & s) -> vector<string>
        {
            vector<string> labels{ "x" };
            for (size_t i = 0 ; i < s.legs.size() ; ++i)
                for (int j = 0 ; j < s.legs[i] ; ++j)
                    labels.push_back(string(1, char('a' + j)) + to_string(i + 1));
            return labels;
        }

        auto spider_instance(string name, int r, int k) -> FamilyInstance
        {
            require(k >= 2, "spider needs at least two legs");
            require(0 <= r && r <= k, "spider needs 0 <= r <= k");
            auto s = layout(r, k);

            vector<Vertex> eta_code, lambda_code;
            for (int i = 0 ; i < k ; ++i)
                eta_code.push_back(i < r ? s.c(i) : s.b(i));
            eta_code.push_back(0);

            if (r == k) {
                for (int i = 0 ; i < k ; ++i) {
                    lambda_code.push_back(s.a(i));
                    lambda_code.push_back(s.c(i));
                }
            }
            else {
                for (int i = 0 ; i < k ; ++i) {
                    if (i < r) {
                        lambda_code.push_back(s.a(i));
                        lambda_code.push_back(s.c(i));
                    }
                    else
                        lambda_code.push_back(s.b(i));
                }
                lambda_code.push_back(0);
            }

            FamilyInstance f;
            f.name = std::move(name);
            f.graph = spider(s.legs);
            f.labels = spider_labels(s);
            f.claimed_values = { { Parameter::eta, k + 1 }, { Parameter::lambda, int(lambda_code.size()) } };
            f.claimed_codes = { { Parameter::eta, Code{ eta_code } }, { Parameter::lambda, Code{ lambda_code } } };
            return f;
        }
    }

    auto spider_k3(int k) -> FamilyInstance
    {
        return finished(spider_instance("spider-k3(" + to_string(k) + ")", 0, k));
    }

    auto spider_k4(int k) -> FamilyInstance
    {
        return finished(spider_instance("spider-k4(" + to_string(k) + ")", k, k));
    }

    auto spider_mixed(int r, int k) -> FamilyInstance
    {
        return finished(spider_instance("spider-mixed(" + to_string(r) + "," + to_string(k) + ")", r, k));
    }

    auto g_eta_construction(int eta) -> FamilyInstance
    {
        require(2 <= eta && eta <= 4, "g_eta construction supports 2 <= eta <= 4");

        using Point = vector<int>;
        vector<Point> points;
        for (int i = 0 ; i < eta ; ++i) {
            Point p(eta, 3);
            p[i] = 0;
            points.push_back(p);
        }
        for (int i = 0 ; i < eta ; ++i) {
            // Remaining coordinates range over {2,3,4}, in lexicographic order.
            int others = 1;
            for (int j = 0 ; j < eta - 1 ; ++j)
                others *= 3;
            for (int code = 0 ; code < others ; ++code) {
                Point p(eta);
                int rest = code;
                for (int j = eta - 1 ; j >= 0 ; --j) {
                    if (j == i)
                        p[j] = 1;
                    else {
                        p[j] = 2 + rest % 3;
                        rest /= 3;
                    }
                }
                points.push_back(p);
            }
        }

        vector<int> dims(eta, 5);
        Graph grid = strong_grid(dims);
        vector<Vertex> keep;
        vector<string> labels;
        for (auto & p : points) {
            Vertex index = 0;
            string label = "(";
            for (int j = 0 ; j < eta ; ++j) {
                index = index * 5 + p[j];
                label += (j ? "," : "") + to_string(p[j]);
            }
            keep.push_back(index);
            labels.push_back(label + ")");
        }

        FamilyInstance f;
        f.name = "geta(" + to_string(eta) + ")";
        f.graph = induced_subgraph(grid, keep);
        f.labels = std::move(labels);
        f.claimed_values = { { Parameter::eta, eta } };
        f.claimed_codes = { { Parameter::eta, Code{ range(0, eta) } } };
        return finished(std::move(f));
    }

    auto to_string(EtaNMinus2Kind kind) -> string_view
    {
        switch (kind) {
            case EtaNMinus2Kind::complete_bipartite:        return "complete-bipartite";
            case EtaNMinus2Kind::clique_join_independent:   return "clique-join-independent";
            case EtaNMinus2Kind::apex_clique_independent:   return "apex-clique-independent";
            case EtaNMinus2Kind::clique_join_vertex_clique: return "clique-join-vertex-clique";
            case EtaNMinus2Kind::double_star:               return "double-star";
            case EtaNMinus2Kind::apex_star_independent:     return "apex-star-independent";
            case EtaNMinus2Kind::star_leaf_bridge:          return "star-leaf-bridge";
        }
        return "?";
    }

    auto parse_eta_n_minus_2_kind(string_view name) -> EtaNMinus2Kind
    {
        for (auto k : all_eta_n_minus_2_kinds)
            if (to_string(k) == name)
                return k;
        throw PreconditionError("unknown eta = n-2 family '" + string(name) + "'");
    }

    namespace
    {
        auto single() -> Graph
        {
            return complete_graph(1);
        }

        auto in_range(EtaNMinus2Kind kind, int r, int s) -> bool
        {
            switch (kind) {
                case EtaNMinus2Kind::complete_bipartite:
                case EtaNMinus2Kind::clique_join_independent:
                case EtaNMinus2Kind::apex_clique_independent:   return r >= 2 && s >= 2;
                case EtaNMinus2Kind::clique_join_vertex_clique: return r >= 1 && s >= 2;
                case EtaNMinus2Kind::double_star:               return r >= 1 && s >= 1;
                case EtaNMinus2Kind::apex_star_independent:     return r >= 2 && s >= 1;
                case EtaNMinus2Kind::star_leaf_bridge:          return s >= 2 && s <= r - 1;
            }
            return false;
        }

        auto order_of(EtaNMinus2Kind kind, int r, int s) -> int
        {
            switch (kind) {
                case EtaNMinus2Kind::complete_bipartite:
                case EtaNMinus2Kind::clique_join_independent:   return r + s;
                case EtaNMinus2Kind::apex_clique_independent:
                case EtaNMinus2Kind::clique_join_vertex_clique: return r + s + 1;
                case EtaNMinus2Kind::double_star:
                case EtaNMinus2Kind::apex_star_independent:     return r + s + 2;
                case EtaNMinus2Kind::star_leaf_bridge:          return r + 2;
            }
            return 0;
        }
    }

    auto eta_n_minus_2_family(EtaNMinus2Kind kind, int r, int s) -> FamilyInstance
    {
        require(in_range(kind, r, s), string(to_string(kind)) + " does not accept r=" + to_string(r) + ", s=" + to_string(s));

        Graph g;
        switch (kind) {
            case EtaNMinus2Kind::complete_bipartite:
                g = complete_bipartite_graph(r, s);
                break;
            case EtaNMinus2Kind::clique_join_independent:
                g = join(complete_graph(r), empty_graph(s));
                break;
            case EtaNMinus2Kind::apex_clique_independent:
                g = join(single(), disjoint_union(complete_graph(r), empty_graph(s)));
                break;
            case EtaNMinus2Kind::clique_join_vertex_clique:
                g = join(complete_graph(r), disjoint_union(single(), complete_graph(s)));
                break;
            case EtaNMinus2Kind::double_star: {
                GraphBuilder b(r + s + 2);
                b.add_edge(0, 1);
                for (int i = 0 ; i < r ; ++i)
                    b.add_edge(0, 2 + i);
                for (int i = 0 ; i < s ; ++i)
                    b.add_edge(1, 2 + r + i);
                g = b.build();
                break;
            }
            case EtaNMinus2Kind::apex_star_independent:
                g = join(single(), disjoint_union(star_graph(r + 1), empty_graph(s)));
                break;
            case EtaNMinus2Kind::star_leaf_bridge: {
                GraphBuilder b(r + 2);
                for (int i = 1 ; i <= r ; ++i)
                    b.add_edge(0, i);
                for (int i = 1 ; i <= s ; ++i)
                    b.add_edge(r + 1, i);
                g = b.build();
                break;
            }
        }

        int n = g.order();
        FamilyInstance f;
        f.name = string(to_string(kind)) + "(" + to_string(r) + "," + to_string(s) + ")";
        f.graph = std::move(g);
        f.claimed_values = { { Parameter::eta, n - 2 }, { Parameter::lambda, n - 2 } };
        return finished(std::move(f));
    }

    auto eta_n_minus_2_instances(int order) -> vector<FamilyInstance>
    {
        vector<FamilyInstance> result;
        for (auto kind : all_eta_n_minus_2_kinds)
            for (int r = 1 ; r <= order ; ++r)
                for (int s = 1 ; s <= order ; ++s)
                    if (in_range(kind, r, s) && order_of(kind, r, s) == order)
                        result.push_back(eta_n_minus_2_family(kind, r, s));
        return result;
    }

    namespace
    {
        // Hub-and-gadget assembly used for a, b >= 2; see the header.
        struct Gadgets
        {
            LabelledBuilder builder;
            Vertex hub;
            vector<Vertex> x, v, z, w, alpha, delta;

            Gadgets()
            {
                hub = builder.vertex("h");
            }

            auto add_x(int count) -> void
            {
                for (int i = 1 ; i <= count ; ++i) {
                    auto xi = builder.vertex("x" + to_string(i));
                    auto xt = builder.vertex("x" + to_string(i) + "'");
                    auto yi = builder.vertex("y" + to_string(i));
                    builder.edge(xi, xt);
                    builder.edge(xi, hub);
                    builder.edge(xt, hub);
                    builder.edge(yi, xi);
                    builder.edge(yi, xt);
                    x.push_back(xi);
                }
            }

            auto add_t(int count) -> void
            {
                for (int i = 1 ; i <= count ; ++i) {
                    auto vi = builder.vertex("v" + to_string(i));
                    auto zi = builder.vertex("z" + to_string(i));
                    auto zt = builder.vertex("z" + to_string(i) + "'");
                    builder.edge(vi, hub);
                    builder.edge(vi, zi);
                    builder.edge(vi, zt);
                    v.push_back(vi);
                    z.push_back(zi);
                }
            }

            // l + 1 alpha vertices; only the first l go into codes.
            auto add_w(int l, bool clique) -> void
            {
                auto wv = builder.vertex("w");
                builder.edge(wv, hub);
                w.push_back(wv);
                vector<Vertex> all;
                for (int i = 1 ; i <= l + 1 ; ++i) {
                    auto ai = builder.vertex("alpha" + to_string(i));
                    builder.edge(ai, wv);
                    for (auto other : all)
                        if (clique)
                            builder.edge(ai, other);
                    all.push_back(ai);
                }
                alpha.assign(all.begin(), all.end() - 1);
            }

            auto add_path_from(Vertex start, int length, int dominator_offset) -> void
            {
                Vertex previous = start;
                for (int k = 1 ; k <= length ; ++k) {
                    auto pk = builder.vertex("p" + to_string(k));
                    builder.edge(previous, pk);
                    if (k % 3 == dominator_offset)
                        w.push_back(pk);
                    previous = pk;
                }
            }

            // Adjacent twins d, d' on the hub with a 3l-vertex path off both.
            auto add_d(int l) -> void
            {
                auto d = builder.vertex("delta");
                auto dt = builder.vertex("delta'");
                builder.edge(d, dt);
                builder.edge(d, hub);
                builder.edge(dt, hub);
                delta.push_back(d);
                if (l == 0)
                    return;
                auto p1 = builder.vertex("p1");
                builder.edge(d, p1);
                builder.edge(dt, p1);
                Vertex previous = p1;
                for (int k = 2 ; k <= 3 * l ; ++k) {
                    auto pk = builder.vertex("p" + to_string(k));
                    builder.edge(previous, pk);
                    if (k % 3 == 0)
                        w.push_back(pk);
                    previous = pk;
                }
            }

            // Support u with leaves d, d', plus a 3(l-1)-vertex path off the hub.
            auto add_d_prime(int l) -> void
            {
                auto u = builder.vertex("w1");
                auto d = builder.vertex("delta");
                auto dt = builder.vertex("delta'");
                builder.edge(u, hub);
                builder.edge(u, d);
                builder.edge(u, dt);
                w.push_back(u);
                delta.push_back(d);
                add_path_from(hub, 3 * (l - 1), 2);
            }
        };

        auto concat(std::initializer_list<const vector<Vertex> *> parts) -> Code
        {
            vector<Vertex> all;
            for (auto p : parts)
                all.insert(all.end(), p->begin(), p->end());
            return Code{ all };
        }
    }

    auto realization_graph(int a, int b, int c) -> FamilyInstance
    {
        require(a >= 1 && b >= 1 && c >= 1, "realization needs positive a, b, c");
        require(std::max(a, b) <= c && c <= a + b, "realization needs max(a,b) <= c <= a+b");
        require(! (b == 1 && a > 1 && c == a + 1), "(" + to_string(a) + "," + to_string(b) + "," + to_string(c)
                + ") is not realizable: 1 = b < a < c = a+1");

        FamilyInstance f;
        f.name = "realization(" + to_string(a) + "," + to_string(b) + "," + to_string(c) + ")";
        f.claimed_values = { { Parameter::gamma, a }, { Parameter::beta, b }, { Parameter::eta, c } };

        if (b == 1) {
            if (a == 1 && c == 1) {
                f.graph = path_graph(2);
                f.claimed_codes = { { Parameter::gamma, Code{ 0 } }, { Parameter::beta, Code{ 0 } }, { Parameter::eta, Code{ 0 } } };
            }
            else if (a == 1) {
                f.graph = path_graph(3);
                f.claimed_codes = { { Parameter::gamma, Code{ 1 } }, { Parameter::beta, Code{ 0 } }, { Parameter::eta, Code{ 0, 1 } } };
            }
            else {
                f.graph = path_graph(3 * a);
                vector<Vertex> dominators;
                for (int i = 0 ; i < a ; ++i)
                    dominators.push_back(3 * i + 1);
                f.claimed_codes = { { Parameter::gamma, Code{ dominators } }, { Parameter::beta, Code{ 0 } },
                    { Parameter::eta, Code{ dominators } } };
            }
            return finished(std::move(f));
        }

        if (a == 1) {
            if (c == b) {
                f.graph = complete_graph(b + 1);
                f.claimed_codes = { { Parameter::gamma, Code{ 0 } }, { Parameter::beta, Code{ range(0, b) } },
                    { Parameter::eta, Code{ range(0, b) } } };
            }
            else {
                f.graph = star_graph(b + 2);
                f.claimed_codes = { { Parameter::gamma, Code{ 0 } }, { Parameter::beta, Code{ range(1, b + 1) } },
                    { Parameter::eta, Code{ range(0, b + 1) } } };
            }
            return finished(std::move(f));
        }

        Gadgets g;
        if (a <= b && b == c) {
            g.add_x(a - 1);
            g.add_w(b - a + 1, true);
            f.claimed_codes = { { Parameter::gamma, concat({ &g.x, &g.w }) },
                { Parameter::beta, concat({ &g.x, &g.alpha }) }, { Parameter::eta, concat({ &g.x, &g.alpha }) } };
        }
        else if (a == b && b < c) {
            g.add_x(2 * a - c);
            g.add_t(c - a);
            f.claimed_codes = { { Parameter::gamma, concat({ &g.x, &g.v }) },
                { Parameter::beta, concat({ &g.x, &g.z }) }, { Parameter::eta, concat({ &g.x, &g.z, &g.v }) } };
        }
        else if (a < b && b < c) {
            g.add_x(a + b - c);
            g.add_t(c - b - 1);
            g.add_w(b - a + 1, false);
            f.claimed_codes = { { Parameter::gamma, concat({ &g.x, &g.v, &g.w }) },
                { Parameter::beta, concat({ &g.x, &g.z, &g.alpha }) },
                { Parameter::eta, concat({ &g.x, &g.z, &g.alpha, &g.v, &g.w }) } };
        }
        else if (b < a && a == c) {
            g.add_x(b - 1);
            g.add_d(a - b);
            f.claimed_codes = { { Parameter::gamma, concat({ &g.x, &g.w, &g.delta }) },
                { Parameter::beta, concat({ &g.x, &g.delta }) }, { Parameter::eta, concat({ &g.x, &g.w, &g.delta }) } };
        }
        else {
            g.add_x(a + b - c);
            g.add_t(c - a - 1);
            g.add_d_prime(a - b + 1);
            f.claimed_codes = { { Parameter::gamma, concat({ &g.x, &g.v, &g.w }) },
                { Parameter::beta, concat({ &g.x, &g.z, &g.delta }) },
                { Parameter::eta, concat({ &g.x, &g.z, &g.delta, &g.v, &g.w }) } };
        }
        g.builder.finish(f);
        return finished(std::move(f));
    }

    auto realization_tree(int a, int b) -> FamilyInstance
    {
        require(3 <= a && a <= b && b <= 2 * a - 2, "tree realization needs 3 <= a <= b <= 2a-2");
        auto f = spider_mixed(b - a, a - 1);
        f.name = "realization-tree(" + to_string(a) + "," + to_string(b) + ")";
        return f;
    }

    namespace
    {
        using Maker = FamilyInstance (*)(span<const int>);

        auto arity(string_view name, span<const int> args, size_t expected) -> void
        {
            if (args.size() != expected)
                throw PreconditionError("family " + string(name) + " takes " + to_string(expected)
                        + " argument(s), got " + to_string(args.size()));
        }

        auto plain(string name, Graph g) -> FamilyInstance
        {
            FamilyInstance f;
            f.name = std::move(name);
            f.graph = std::move(g);
            return f;
        }

        auto join_ints(span<const int> args) -> string
        {
            string result;
            for (size_t i = 0 ; i < args.size() ; ++i)
                result += (i ? "," : "") + to_string(args[i]);
            return result;
        }
    }

    auto make_family(string_view name, span<const int> args) -> FamilyInstance
    {
        if (name == "path")      { arity(name, args, 1); return path(args[0]); }
        if (name == "cycle")     { arity(name, args, 1); return cycle(args[0]); }
        if (name == "complete")  { arity(name, args, 1); return complete(args[0]); }
        if (name == "star")      { arity(name, args, 1); return star(args[0]); }
        if (name == "bipartite") { arity(name, args, 2); return complete_bipartite(args[0], args[1]); }
        if (name == "wheel")     { arity(name, args, 1); return wheel(args[0]); }
        if (name == "grid")
            return plain("grid(" + join_ints(args) + ")", strong_grid(args));
        if (name == "spider")
            return plain("spider(" + join_ints(args) + ")", spider(args));
        if (name == "spider-k3")    { arity(name, args, 1); return spider_k3(args[0]); }
        if (name == "spider-k4")    { arity(name, args, 1); return spider_k4(args[0]); }
        if (name == "spider-mixed") { arity(name, args, 2); return spider_mixed(args[0], args[1]); }
        if (name == "geta")         { arity(name, args, 1); return g_eta_construction(args[0]); }
        if (name == "realization")  { arity(name, args, 3); return realization_graph(args[0], args[1], args[2]); }
        if (name == "realization-tree") { arity(name, args, 2); return realization_tree(args[0], args[1]); }
        for (auto kind : all_eta_n_minus_2_kinds)
            if (to_string(kind) == name) {
                arity(name, args, 2);
                return eta_n_minus_2_family(kind, args[0], args[1]);
            }
        throw PreconditionError("unknown family '" + string(name) + "'");
    }

    auto family_synopsis() -> vector<pair<string, string>>
    {
        vector<pair<string, string>> result{
            { "path", "N" }, { "cycle", "N" }, { "complete", "N" }, { "star", "N" },
            { "bipartite", "R S" }, { "wheel", "N" }, { "grid", "D1 D2 ..." }, { "spider", "L1 L2 ..." },
            { "spider-k3", "K" }, { "spider-k4", "K" }, { "spider-mixed", "R K" }, { "geta", "ETA" },
            { "realization", "A B C" }, { "realization-tree", "A B" } };
        for (auto kind : all_eta_n_minus_2_kinds)
            result.emplace_back(string(to_string(kind)), "R S");
        return result;
    }
}
