/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef LOCDOM_GUARD_FAMILIES_HH
#define LOCDOM_GUARD_FAMILIES_HH 1

#include <locdom/codes.hh>
#include <locdom/graph.hh>
#include <locdom/solvers.hh>

#include <array>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace locdom
{
    /**
     * A generated graph plus the parameter values (and, where a construction
     * names one, the optimal codes) it is expected to have. Claims are only
     * attached inside the parameter ranges where they are known to hold.
     */
    struct FamilyInstance
    {
        std::string name;
        Graph graph;
        std::map<Parameter, Code> claimed_codes;
        std::map<Parameter, int> claimed_values;

        /// Optional human-readable vertex names, empty or one per vertex.
        std::vector<std::string> labels;
    };

    /// Throws InvariantViolation if some claimed code lacks its property or
    /// has a size different from the claimed value. Every constructor below
    /// runs this before returning.
    auto check_claimed_codes(const FamilyInstance & f) -> void;

    // Plain graphs. Vertex 0 is the centre of stars and wheels.
    auto path_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto complete_graph(int n) -> Graph;
    auto empty_graph(int n) -> Graph;
    auto star_graph(int n) -> Graph;                  ///< K_{1,n-1}
    auto complete_bipartite_graph(int r, int s) -> Graph;
    auto wheel_graph(int n) -> Graph;                 ///< W_{1,n-1}

    // Basic families with their closed-form values.
    auto path(int n) -> FamilyInstance;
    auto cycle(int n) -> FamilyInstance;
    auto complete(int n) -> FamilyInstance;
    auto star(int n) -> FamilyInstance;
    auto complete_bipartite(int r, int s) -> FamilyInstance;
    auto wheel(int n) -> FamilyInstance;

    /// P_{d1} x ... x P_{dk} (strong product), row-major.
    auto strong_grid(std::span<const int> dims) -> Graph;

    /// Centre 0; each leg's vertices follow in order, outward from the centre.
    auto spider(std::span<const int> leg_lengths) -> Graph;

    auto spider_k3(int k) -> FamilyInstance;
    auto spider_k4(int k) -> FamilyInstance;

    /// r legs with four edges followed by k - r legs with three edges.
    auto spider_mixed(int r, int k) -> FamilyInstance;

    /**
     * Extremal graph for the upper bound n <= eta + eta * 3^(eta-1): the
     * subgraph of the eta-dimensional 5-king grid induced by the eta
     * vertices (3,..,3,0,3,..,3) followed by, for each i, the points with
     * coordinate i equal to 1 and every other coordinate in {2,3,4}. The
     * first eta vertices form the claimed optimal code. Supports 2 <= eta <= 4.
     */
    auto g_eta_construction(int eta) -> FamilyInstance;

    enum class EtaNMinus2Kind
    {
        complete_bipartite,          ///< K_{r,s}, r,s >= 2
        clique_join_independent,     ///< K_r + co-K_s, r,s >= 2
        apex_clique_independent,     ///< K_1 + (K_r u co-K_s), r,s >= 2
        clique_join_vertex_clique,   ///< K_r + (K_1 u K_s), r >= 1, s >= 2
        double_star,                 ///< K_2 with r and s pendants, r,s >= 1
        apex_star_independent,       ///< K_1 + (K_{1,r} u co-K_s), r >= 2, s >= 1
        star_leaf_bridge             ///< K_{1,r} plus a vertex on s leaves, 2 <= s <= r-1
    };

    inline constexpr std::array all_eta_n_minus_2_kinds{
        EtaNMinus2Kind::complete_bipartite, EtaNMinus2Kind::clique_join_independent,
        EtaNMinus2Kind::apex_clique_independent, EtaNMinus2Kind::clique_join_vertex_clique,
        EtaNMinus2Kind::double_star, EtaNMinus2Kind::apex_star_independent,
        EtaNMinus2Kind::star_leaf_bridge };

    auto to_string(EtaNMinus2Kind kind) -> std::string_view;
    auto parse_eta_n_minus_2_kind(std::string_view name) -> EtaNMinus2Kind;

    /// Graphs with eta = lambda = n - 2. Throws PreconditionError outside
    /// the kind's parameter range.
    auto eta_n_minus_2_family(EtaNMinus2Kind kind, int r, int s) -> FamilyInstance;

    /// Every (kind, r, s) instance of exactly the given order.
    auto eta_n_minus_2_instances(int order) -> std::vector<FamilyInstance>;

    /**
     * A graph with (gamma, beta, eta) = (a, b, c). Requires
     * max(a,b) <= c <= a+b; the triples with 1 = b < a < c = a+1 have no
     * such graph and throw PreconditionError.
     *
     * b = 1 uses paths, a = 1 uses K_{b+1} or K_{1,b+1}. For a, b >= 2 the
     * graph is a hub vertex h with gadgets hanging off it:
     *
     *   X   x, x' adjacent twins joined to h, plus y adjacent to both x, x'.
     *       Adds 1 to each of gamma, beta, eta.
     *   T   v joined to h with two pendant leaves z, z'. Adds (1, 1, 2).
     *   W   w joined to h, w joined to a clique a_1..a_{l+1}. Adds (1, l, l).
     *   W*  w joined to h with pendant leaves a_1..a_{l+1}. Adds (1, l, l+1).
     *   D   adjacent twins d, d' joined to h, then a path p_1..p_{3l}
     *       hanging from both. Adds (l+1, 1, l+1).
     *   D'  a T gadget (support u, leaves d, d') plus a path p_1..p_{3(l-1)}
     *       hanging from h. Adds (l, 1, l+1).
     *
     * Each gadget's contribution is forced locally by twins or private
     * leaves, and since every gadget except a bare path owns a landmark,
     * vertices in different gadgets are always told apart.
     */
    auto realization_graph(int a, int b, int c) -> FamilyInstance;

    /// The spider with b-a four-edge legs and 2a-b-1 three-edge legs, which
    /// has eta = a and lambda = b. Requires 3 <= a <= b <= 2a-2.
    auto realization_tree(int a, int b) -> FamilyInstance;

    /// Build a family instance from a command-line style name and integer
    /// arguments, e.g. ("spider-mixed", {1, 3}). Throws PreconditionError on
    /// unknown names or wrong arity.
    auto make_family(std::string_view name, std::span<const int> args) -> FamilyInstance;

    /// Names accepted by make_family, with a short argument synopsis.
    auto family_synopsis() -> std::vector<std::pair<std::string, std::string>>;
}

#endif
