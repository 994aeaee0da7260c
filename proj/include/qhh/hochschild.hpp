#pragma once

// Hochschild (co)homology in degrees 0 and 1 by direct linear algebra on the
// cochain and chain complexes, the Lie bracket on HH^1, and the relative H^1
// of a tensor-algebra extension.

#include <vector>

#include "qhh/algebra.hpp"
#include "qhh/extension.hpp"

namespace qhh {

/// Linear map d : A -> X, column k holding d(b_k) in X coordinates.
template <typename S>
struct Derivation
{
    AlgebraPtr<S> over;
    Matrix<S> map;
    /// X is A itself (regular bimodule); required for the bracket.
    bool into_algebra = false;
};

template <typename S>
struct CohomologySlice
{
    int degree = 1;
    int dim = 0;
    std::vector<Derivation<S>> derivations;  // degree 1 representatives
    std::vector<Vector<S>> invariants;       // degree 0 representatives
};

struct CochainLimits
{
    /// Cap on dim A * dim X unknowns for the Leibniz system.
    long long max_unknowns = 5000;
    /// Cap on dim X * (dim A)^2 for the degree-2 chains.
    long long max_chains = 100000;
};

/// d(xy) = x d(y) + d(x) y on every pair of basis elements.
template <typename S>
bool satisfies_leibniz(const Bimodule<S>& x, const Matrix<S>& d);

/// The inner derivation a -> v a - a v for v in X.
template <typename S>
Matrix<S> inner_derivation(const Bimodule<S>& x, const Vector<S>& v);

/// dim of the space of derivations A -> X.
template <typename S>
int derivation_dim(const Bimodule<S>& x, const CochainLimits& limits = {});

/// H^1(A, X) with canonical representatives (reduced modulo inner derivations).
template <typename S>
CohomologySlice<S> h1_cohomology(const Bimodule<S>& x, const CochainLimits& limits = {});

/// dim H^1(A, X) = dim Der(A, X) - (dim X - dim X^A).
template <typename S>
int h1_cohomology_dim(const Bimodule<S>& x, const CochainLimits& limits = {});

/// H^0(A, X) = X^A.
template <typename S>
CohomologySlice<S> h0(const Bimodule<S>& x);

template <typename S>
Derivation<S> lie_bracket(const Derivation<S>& d1, const Derivation<S>& d2);

/// Dimension of [HH^1(A), HH^1(A)] inside HH^1(A), from brackets of the representatives.
template <typename S>
int derived_subalgebra_dim(const Bimodule<S>& regular, const CohomologySlice<S>& hh1);

/// dim H_1(A, X) = dim ker b1 - rank b2 on the bar complex X (x) A^(x)n.
template <typename S>
int h1_homology(const Bimodule<S>& x, const CochainLimits& limits = {});

/// dim H^1(B_F | B, X) = dim Hom_{B-B}(N, X) - dim X^B + dim X^{B_F}, X a B_F-bimodule.
template <typename S>
int relative_h1_dim(const ExtendedAlgebra<S>& ext, const Bimodule<S>& x);

}  // namespace qhh
