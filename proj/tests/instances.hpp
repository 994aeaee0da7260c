#pragma once

// Small presentations shared by the tests.

#include <memory>
#include <string>

#include "qhh/algebra.hpp"
#include "qhh/extension.hpp"

namespace qhh::testing {

/// Two vertices e, f and arrows u, v : e -> f.
inline BoundQuiverPresentation kronecker()
{
    BoundQuiverPresentation p;
    p.quiver.add_vertex("e");
    p.quiver.add_vertex("f");
    p.quiver.add_arrow("u", "e", "f");
    p.quiver.add_arrow("v", "e", "f");
    p.bound = 2;
    return p;
}

/// f -> x -> ... -> y -> e with a middle segment of `middle` arrows between x
/// and y, the two composites through the whole middle segment killed.
inline BoundQuiverPresentation chain_with_zero_relations(int middle)
{
    BoundQuiverPresentation p;
    Quiver& q = p.quiver;
    q.add_vertex("f");
    q.add_vertex("x");
    for (int i = 1; i < middle; ++i)
        q.add_vertex("m" + std::to_string(i));
    q.add_vertex("y");
    q.add_vertex("e");
    const int b2 = q.add_arrow("b2", "f", "x");
    std::vector<int> mid;
    std::string prev = "x";
    for (int i = 1; i <= middle; ++i)
    {
        const std::string next = i == middle ? "y" : "m" + std::to_string(i);
        mid.push_back(q.add_arrow(middle == 1 ? "b3" : "c" + std::to_string(i), prev, next));
        prev = next;
    }
    const int b4 = q.add_arrow("b4", "y", "e");
    std::vector<int> left(mid.rbegin(), mid.rend()), right = left;
    left.insert(left.begin(), b4);  // b4 . mid
    right.push_back(b2);            // mid . b2
    p.relations.push_back({{{Rational(1), make_path(q, left)}}});
    p.relations.push_back({{{Rational(1), make_path(q, right)}}});
    p.bound = middle + 2;
    return p;
}

/// One arrow b : f -> e.
inline BoundQuiverPresentation reversed()
{
    BoundQuiverPresentation p;
    p.quiver.add_vertex("e");
    p.quiver.add_vertex("f");
    p.quiver.add_arrow("b", "f", "e");
    p.bound = 2;
    return p;
}

/// The new arrow a : e -> f on a presentation with vertices named e and f.
inline NewArrowSet arrow_e_to_f(const BoundQuiverPresentation& p)
{
    return {{"a", p.quiver.vertex_index("e"), p.quiver.vertex_index("f")}};
}

template <typename S>
AlgebraPtr<S> build(const BoundQuiverPresentation& p)
{
    return std::make_shared<const Algebra<S>>(build_algebra<S>(p));
}

/// Path algebra of an acyclic quiver (bound = vertex count suffices).
inline BoundQuiverPresentation path_algebra(const Quiver& q)
{
    return {q, {}, std::max(2, q.vertex_count())};
}

}  // namespace qhh::testing
