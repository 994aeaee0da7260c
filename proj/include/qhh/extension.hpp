#pragma once

// Adding a set F of new arrows to a bound quiver algebra B: relative paths,
// extended relative paths, the bimodule N = sum_a B t(a) (x) s(a) B, and the
// extended algebra B_F realized as the tensor algebra T_B(N).

#include <optional>
#include <string>
#include <vector>

#include "qhh/algebra.hpp"

namespace qhh {

struct NewArrow
{
    std::string id;
    int source = 0;
    int target = 0;

    friend bool operator==(const NewArrow&, const NewArrow&) = default;
};

using NewArrowSet = std::vector<NewArrow>;

/// Ids unique and disjoint from the quiver's arrows; endpoints are vertices.
void validate_new_arrows(const Quiver& q, const NewArrowSet& f);

/// Edge a -> b when s(b) B t(a) != 0, i.e. b may follow a in a relative path.
struct RelativeGraph
{
    std::vector<std::vector<int>> successors;

    int size() const { return static_cast<int>(successors.size()); }
    bool has_edge(int a, int b) const;
};

/// New arrows (a_n, ..., a_1), target-to-source, chained through nonzero corners.
struct RelativePath
{
    std::vector<int> arrows;
    /// prod_i dim s(a_{i+1}) B t(a_i)
    int dim = 1;

    friend bool operator==(const RelativePath&, const RelativePath&) = default;
};

/// (y, gamma, x), or (y, x) when gamma is empty.
struct ExtendedRelativePath
{
    int target = 0;
    std::optional<RelativePath> path;
    int source = 0;
    int dim = 0;
};

struct ExtendedEnumeration
{
    std::vector<ExtendedRelativePath> paths;                  // W_*
    std::vector<std::pair<int, ExtendedRelativePath>> pairs;  // F // W_*
};

template <typename S>
RelativeGraph relative_graph(const Algebra<S>& b, const NewArrowSet& f);

/// Some relative cycle, target-to-source, or nullopt.
template <typename S>
std::optional<std::vector<int>> find_relative_cycle(const Algebra<S>& b, const NewArrowSet& f);

template <typename S>
bool has_relative_cycle(const Algebra<S>& b, const NewArrowSet& f);

/// Human-readable description of a relative cycle, naming its arrows.
std::string describe_relative_cycle(const NewArrowSet& f, const std::vector<int>& cycle);

/// New-arrow ids joined by '.', target-to-source.
std::string relative_path_label(const NewArrowSet& f, const RelativePath& gamma);

/// "(y, gamma, x)" or "(y, x)", vertex ids taken from `vertices`.
std::string extended_path_label(const std::vector<std::string>& vertices, const NewArrowSet& f,
                                const ExtendedRelativePath& omega);

/// R_*, ordered by length then lexicographically. Throws InfiniteError on a relative cycle.
template <typename S>
std::vector<RelativePath> enumerate_relative_paths(const Algebra<S>& b, const NewArrowSet& f);

template <typename S>
ExtendedEnumeration enumerate_extended(const Algebra<S>& b, const NewArrowSet& f);

/// dim s(gamma) B t(gamma) * dim gamma; nonzero exactly for relative cycles.
template <typename S>
int cyclic_dimension(const Algebra<S>& b, const NewArrowSet& f, const RelativePath& gamma);

template <typename S>
struct ExtendedAlgebra
{
    AlgebraPtr<S> base;               // B
    AlgebraPtr<S> algebra;            // B_F
    std::vector<int> inclusion;       // basis of B -> basis of B_F
    std::vector<int> degree;          // number of new arrows in each basis word of B_F
    std::vector<int> arrow_elements;  // the word t(a) a s(a) for each new arrow
    Bimodule<S> arrows_bimodule;      // N, the degree-one part, over B
};

/**
 * B_F with basis the tensor words b_{n+1} a_n b_n ... a_1 b_1 over relative
 * paths (a_n, ..., a_1), n >= 0, each b_i running through the basis of the
 * matching corner of B. Words of degree 0 come first, in B's basis order.
 */
template <typename S>
ExtendedAlgebra<S> build_extended_algebra(const AlgebraPtr<S>& b, const NewArrowSet& f);

/// dim Hom_{B-B}(N, X) for bimodules over the same algebra.
template <typename S>
int hom_bimodule_dim(const Bimodule<S>& n, const Bimodule<S>& x);

/// kQ_F / <I> with the same relations and bound (|F| + 1) * bound.
BoundQuiverPresentation extended_presentation(const BoundQuiverPresentation& p, int resolved_bound,
                                              const NewArrowSet& f);

}  // namespace qhh
