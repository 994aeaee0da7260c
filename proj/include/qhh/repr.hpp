#pragma once

// Finite-dimensional left modules: indecomposable projectives and injectives
// at a vertex, Hom and Ext^1 dimensions.

#include <utility>
#include <vector>

#include "qhh/algebra.hpp"

namespace qhh {

template <typename S>
struct LeftModule
{
    AlgebraPtr<S> over;
    int dim = 0;
    std::vector<Matrix<S>> action;  // one matrix per basis element of `over`
};

/// P_x = B e_x, spanned by the basis elements with source x.
template <typename S>
LeftModule<S> projective_at(const AlgebraPtr<S>& b, int x);

/// I_x = (e_x B)', the dual of the right module e_x B.
template <typename S>
LeftModule<S> injective_at(const AlgebraPtr<S>& b, int x);

template <typename S>
LeftModule<S> zero_module(const AlgebraPtr<S>& b);

template <typename S>
LeftModule<S> direct_sum(const LeftModule<S>& m, const LeftModule<S>& n);

template <typename S>
bool is_module(const LeftModule<S>& m);

template <typename S>
int hom_dim(const LeftModule<S>& m, const LeftModule<S>& n);

/// A generator of a projective presentation: the copy of P_vertex whose top
/// e_vertex is sent to `image` (a vector of e_vertex M).
template <typename S>
struct PresentationGenerator
{
    int vertex = 0;
    Vector<S> image;
};

template <typename S>
struct Presentation
{
    LeftModule<S> projective;   // P0
    Matrix<S> surjection;       // dim M x dim P0
    LeftModule<S> kernel;       // Omega
    Subspace<S> kernel_basis;   // Omega inside P0
};

/// 0 -> Omega -> P0 -> M, P0 the sum of one P_x per generator. The map is
/// onto whenever the generators span M.
template <typename S>
Presentation<S> presentation(const LeftModule<S>& m, const std::vector<PresentationGenerator<S>>& generators);

/// Canonical generators: for each vertex x, a basis of e_x M.
template <typename S>
std::vector<PresentationGenerator<S>> canonical_generators(const LeftModule<S>& m);

template <typename S>
Presentation<S> syzygy(const LeftModule<S>& m);

/// dim Ext^1(M, N) = hom(Omega, N) - hom(P0, N) + hom(M, N) for any presentation.
template <typename S>
int ext1_dim(const LeftModule<S>& m, const LeftModule<S>& n);

template <typename S>
int ext1_dim(const Presentation<S>& p, const LeftModule<S>& m, const LeftModule<S>& n);

}  // namespace qhh
