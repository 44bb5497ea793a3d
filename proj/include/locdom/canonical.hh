/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef LOCDOM_GUARD_CANONICAL_HH
#define LOCDOM_GUARD_CANONICAL_HH 1

#include <locdom/graph.hh>

#include <compare>
#include <functional>
#include <string>
#include <vector>

namespace locdom
{
    /**
     * Byte encoding of an isomorphism class. The bytes are the graph6 string
     * of the canonically relabelled graph, so a form can be decoded back to a
     * representative with read_graph6 (short form only).
     */
    struct CanonicalForm
    {
        std::string bytes;

        friend auto operator<=> (const CanonicalForm &, const CanonicalForm &) = default;
    };

    struct Canonical
    {
        /// order[i] is the vertex placed at canonical position i.
        std::vector<Vertex> order;
        CanonicalForm form;
    };

    /**
     * Individualisation-refinement canonical labelling: equitable refinement
     * by neighbour counts, then backtracking over the first non-singleton
     * cell, keeping the lexicographically least graph6 string. Automorphisms
     * found at equal leaves prune both sibling orbits and whole subtrees.
     */
    auto canonicalise(const Graph & g) -> Canonical;

    auto canonical_form(const Graph & g) -> CanonicalForm;

    auto are_isomorphic(const Graph & g, const Graph & h) -> bool;
}

template <>
struct std::hash<locdom::CanonicalForm>
{
    auto operator() (const locdom::CanonicalForm & f) const noexcept -> std::size_t
    {
        return std::hash<std::string>{}(f.bytes);
    }
};

#endif
