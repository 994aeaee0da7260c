#pragma once

// Bound quiver algebras kQ/I realized with explicit structure constants, and
// finite-dimensional bimodules over them.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qhh/field.hpp"
#include "qhh/linalg.hpp"
#include "qhh/quiver.hpp"

namespace qhh {

/// Linear combination of parallel paths of length >= 2.
struct Relation
{
    std::vector<std::pair<Rational, Path>> terms;

    friend bool operator==(const Relation&, const Relation&) = default;
};

struct BoundQuiverPresentation
{
    Quiver quiver;
    std::vector<Relation> relations;
    /// Every path of length >= bound lies in the ideal. 0 requests a search.
    int bound = 0;

    friend bool operator==(const BoundQuiverPresentation&, const BoundQuiverPresentation&) = default;
};

struct BuildOptions
{
    int bound_search_cap = 12;
    /// Largest truncated path space (paths of length <= bound) accepted.
    long long max_paths = 50000;
};

/**
 * Finite-dimensional algebra with a basis graded by pairs of vertices.
 *
 * Every basis element b satisfies e_{t(b)} b e_{s(b)} = b, the vertex
 * idempotents are basis elements summing to 1, and product(i, j) is the
 * coordinate vector of b_i b_j.
 */
template <typename S>
class Algebra
{
public:
    struct BasisElement
    {
        std::string label;
        int target = 0;
        int source = 0;
    };

    Algebra(std::vector<std::string> vertices, std::vector<BasisElement> basis,
            std::vector<int> idempotents, std::vector<SparseRow<S>> products);

    int dim() const { return static_cast<int>(basis_.size()); }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    int vertex_index(const std::string& id) const;

    const BasisElement& basis(int i) const { return basis_.at(static_cast<std::size_t>(i)); }
    const std::vector<BasisElement>& basis() const { return basis_; }
    int idempotent(int vertex) const { return idempotents_.at(static_cast<std::size_t>(vertex)); }

    const SparseRow<S>& product(int i, int j) const
    {
        return products_[static_cast<std::size_t>(i) * basis_.size() + static_cast<std::size_t>(j)];
    }

    Vector<S> multiply(const Vector<S>& x, const Vector<S>& y) const;
    Vector<S> unit() const;
    Vector<S> basis_vector(int i) const;

    /// Matrix of x -> b_i x, resp. x -> x b_i.
    Matrix<S> left_multiplication(int i) const;
    Matrix<S> right_multiplication(int i) const;

private:
    std::vector<std::string> vertices_;
    std::vector<BasisElement> basis_;
    std::vector<int> idempotents_;
    std::vector<SparseRow<S>> products_;
};

template <typename S>
using AlgebraPtr = std::shared_ptr<const Algebra<S>>;

/// Bimodule over `over`, with action matrices for every basis element.
template <typename S>
struct Bimodule
{
    AlgebraPtr<S> over;
    int dim = 0;
    std::vector<Matrix<S>> left;   // x -> b_i x
    std::vector<Matrix<S>> right;  // x -> x b_i
};

/**
 * Builds kQ/I for a presentation.
 *
 * The ideal is computed inside the space of paths of length <= N (N the
 * bound) as the closure of the relations under multiplication by arrows;
 * every path of length N must fall in it, otherwise AdmissibilityError.
 * Basis: paths of length < N not eliminated by the ideal, preferring the
 * shorter and earlier-enumerated paths. bound == 0 triggers
 * find_admissible_bound.
 */
template <typename S>
Algebra<S> build_algebra(const BoundQuiverPresentation& p, const BuildOptions& options = {});

/// First N in [2, options.bound_search_cap] for which the presentation is admissible.
template <typename S>
int find_admissible_bound(const BoundQuiverPresentation& p, const BuildOptions& options = {});

/// Checks relations for parallelism, length >= 2, known arrows and a nonzero coefficient.
void validate_relations(const Quiver& q, const std::vector<Relation>& relations);

template <typename S>
int corner_dim(const Algebra<S>& a, int y, int x);

template <typename S>
Subspace<S> center(const Algebra<S>& a);

template <typename S>
bool is_associative(const Algebra<S>& a);

/// Checks the idempotent axioms: sum is 1, orthogonality, e_t b e_s = b.
template <typename S>
bool has_graded_idempotents(const Algebra<S>& a);

template <typename S>
Bimodule<S> regular_bimodule(const AlgebraPtr<S>& a);

/// Restriction of X along a basis-preserving inclusion sub -> X.over.
template <typename S>
Bimodule<S> restrict_bimodule(const Bimodule<S>& x, const AlgebraPtr<S>& sub, const std::vector<int>& inclusion);

/// Linear dual X' = Hom_k(X, k) with (b f)(x) = f(x b) and (f b)(x) = f(b x).
template <typename S>
Bimodule<S> dual_bimodule(const Bimodule<S>& x);

template <typename S>
Bimodule<S> direct_sum(const Bimodule<S>& x, const Bimodule<S>& y);

/// {x : b x = x b for all b}.
template <typename S>
Subspace<S> invariant_subspace(const Bimodule<S>& x);

template <typename S>
int bimodule_invariants(const Bimodule<S>& x);

/// Unit acts as identity, both actions respect the structure constants and commute.
template <typename S>
bool is_bimodule(const Bimodule<S>& x);

}  // namespace qhh
