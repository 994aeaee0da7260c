#pragma once

// Exact dense linear algebra on Eigen matrices over a field S, plus an
// incremental sparse row reducer for the large, very sparse systems that the
// cohomology and ideal computations produce.

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "qhh/field.hpp"

namespace qhh {

template <typename S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <typename S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

/// Sparse vector: strictly increasing indices, no explicit zeros.
template <typename S>
using SparseRow = std::vector<std::pair<int, S>>;

/**
 * Linear subspace of S^ambient_dim, stored as the nonzero rows of a reduced
 * row-echelon matrix. pivots[i] is the pivot column of basis row i; pivots
 * are strictly increasing.
 */
template <typename S>
struct Subspace
{
    int ambient_dim = 0;
    Matrix<S> basis;
    std::vector<int> pivots;

    int dim() const { return static_cast<int>(pivots.size()); }
};

template <typename S>
struct EchelonForm
{
    Matrix<S> reduced;  // same shape as the input; zero rows at the bottom
    std::vector<int> pivots;
};

template <typename S>
EchelonForm<S> rref(const Matrix<S>& m);

template <typename S>
int rank(const Matrix<S>& m);

template <typename S>
Subspace<S> row_space(const Matrix<S>& m);

/// Basis of {v : m v = 0}.
template <typename S>
Subspace<S> nullspace(const Matrix<S>& m);

/// Canonical coset representative of v modulo s: zero at every pivot column.
template <typename S>
Vector<S> reduce_mod(const Subspace<S>& s, const Vector<S>& v);

template <typename S>
bool contains(const Subspace<S>& s, const Vector<S>& v);

template <typename S>
Subspace<S> zero_subspace(int ambient_dim);

template <typename S>
Subspace<S> full_space(int ambient_dim);

template <typename S>
SparseRow<S> to_sparse(const Vector<S>& v);

template <typename S>
Vector<S> to_dense(const SparseRow<S>& v, int size);

/// Column j of m as a sparse vector.
template <typename S>
SparseRow<S> sparse_column(const Matrix<S>& m, int j);

/// Row i of m as a sparse vector.
template <typename S>
SparseRow<S> sparse_row(const Matrix<S>& m, int i);

/**
 * Incremental Gaussian elimination on sparse rows.
 *
 * Stored rows are in echelon form with pairwise distinct pivots, each pivot
 * entry normalized to 1. A row is fully reduced against the existing rows
 * before it is stored, so `reduce` returns the unique representative of a
 * coset with zeros at all pivot columns.
 */
template <typename S>
class RowReducer
{
public:
    explicit RowReducer(int cols);

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    /// Returns true when the row was linearly independent of the stored rows.
    bool add(const SparseRow<S>& row);
    bool add(const Vector<S>& row) { return add(to_sparse(row)); }

    SparseRow<S> reduce(const SparseRow<S>& row) const;
    bool contains(const SparseRow<S>& row) const { return reduce(row).empty(); }

    bool is_pivot(int col) const { return pivot_row_[col] >= 0; }
    std::vector<int> pivot_columns() const;

    /// Reduced row-echelon basis of the span of all added rows.
    Subspace<S> row_space() const;

    /// Kernel of the matrix whose rows are the added rows.
    Subspace<S> nullspace() const;

private:
    int cols_;
    std::vector<SparseRow<S>> rows_;
    std::vector<int> pivot_row_;
};

}  // namespace qhh
