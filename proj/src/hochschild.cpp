#include "qhh/hochschild.hpp"

#include <map>
#include <string>

#include "qhh/errors.hpp"

namespace qhh {

namespace {

template <typename S>
SparseRow<S> collect(const std::map<int, S>& acc)
{
    SparseRow<S> row;
    for (const auto& [k, v] : acc)
        if (!is_zero(v))
            row.emplace_back(k, v);
    return row;
}

template <typename S>
Vector<S> flatten(const Matrix<S>& m)
{
    // Column-major: entry (x, k) lands at k * rows + x.
    return Eigen::Map<const Vector<S>>(m.data(), m.size());
}

template <typename S>
Matrix<S> unflatten(const Vector<S>& v, int rows, int cols)
{
    return Eigen::Map<const Matrix<S>>(v.data(), rows, cols);
}

void check_unknowns(long long count, const CochainLimits& limits, const char* what)
{
    if (count > limits.max_unknowns)
        throw ResourceError(std::string(what) + ": " + std::to_string(count) + " unknowns exceed the cap of " +
                            std::to_string(limits.max_unknowns));
}

// Leibniz equations, unknown D(x, k) at index k * dim X + x.
template <typename S>
RowReducer<S> leibniz_system(const Bimodule<S>& x)
{
    const Algebra<S>& a = *x.over;
    const int da = a.dim(), dx = x.dim;
    RowReducer<S> system(da * dx);
    std::vector<std::vector<SparseRow<S>>> left_rows(static_cast<std::size_t>(da)),
        right_rows(static_cast<std::size_t>(da));
    for (int i = 0; i < da; ++i)
        for (int r = 0; r < dx; ++r)
        {
            left_rows[i].push_back(sparse_row(x.left[i], r));
            right_rows[i].push_back(sparse_row(x.right[i], r));
        }
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j)
        {
            const SparseRow<S>& prod = a.product(i, j);
            for (int r = 0; r < dx; ++r)
            {
                // d(b_i b_j) - b_i d(b_j) - d(b_i) b_j, row r
                std::map<int, S> acc;
                for (const auto& [k, c] : prod)
                    acc[k * dx + r] += c;
                for (const auto& [p, c] : left_rows[i][r])
                    acc[j * dx + p] -= c;
                for (const auto& [p, c] : right_rows[j][r])
                    acc[i * dx + p] -= c;
                SparseRow<S> row = collect(acc);
                if (!row.empty())
                    system.add(row);
            }
        }
    return system;
}

template <typename S>
RowReducer<S> inner_span(const Bimodule<S>& x)
{
    const int da = x.over->dim(), dx = x.dim;
    RowReducer<S> inner(da * dx);
    for (int v = 0; v < dx; ++v)
        inner.add(flatten<S>(inner_derivation(x, Vector<S>(Vector<S>::Unit(dx, v)))));
    return inner;
}

}  // namespace

template <typename S>
bool satisfies_leibniz(const Bimodule<S>& x, const Matrix<S>& d)
{
    const Algebra<S>& a = *x.over;
    if (d.rows() != x.dim || d.cols() != a.dim())
        throw DimensionMismatch("satisfies_leibniz: map has the wrong shape");
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
        {
            Vector<S> lhs = Vector<S>::Zero(x.dim);
            for (const auto& [k, c] : a.product(i, j))
                lhs += c * d.col(k);
            const Vector<S> rhs = x.left[i] * d.col(j) + x.right[j] * d.col(i);
            if (lhs != rhs)
                return false;
        }
    return true;
}

template <typename S>
Matrix<S> inner_derivation(const Bimodule<S>& x, const Vector<S>& v)
{
    if (v.size() != x.dim)
        throw DimensionMismatch("inner_derivation: vector has the wrong length");
    const int da = x.over->dim();
    Matrix<S> d(x.dim, da);
    for (int k = 0; k < da; ++k)
        d.col(k) = x.right[k] * v - x.left[k] * v;
    return d;
}

template <typename S>
int derivation_dim(const Bimodule<S>& x, const CochainLimits& limits)
{
    const long long unknowns = static_cast<long long>(x.over->dim()) * x.dim;
    check_unknowns(unknowns, limits, "derivation space");
    if (unknowns == 0)
        return 0;
    return static_cast<int>(unknowns) - leibniz_system(x).rank();
}

template <typename S>
CohomologySlice<S> h1_cohomology(const Bimodule<S>& x, const CochainLimits& limits)
{
    const int da = x.over->dim(), dx = x.dim;
    check_unknowns(static_cast<long long>(da) * dx, limits, "derivation space");
    CohomologySlice<S> slice;
    slice.degree = 1;
    if (da == 0 || dx == 0)
        return slice;

    const Subspace<S> derivations = leibniz_system(x).nullspace();
    const RowReducer<S> inner = inner_span(x);
    RowReducer<S> quotient(da * dx);
    for (int k = 0; k < derivations.dim(); ++k)
        quotient.add(inner.reduce(to_sparse<S>(derivations.basis.row(k).transpose())));

    const Subspace<S> reps = quotient.row_space();
    slice.dim = reps.dim();
    const bool into_algebra = dx == da && x.left.size() == static_cast<std::size_t>(da);
    for (int k = 0; k < reps.dim(); ++k)
        slice.derivations.push_back(
            {x.over, unflatten<S>(reps.basis.row(k).transpose(), dx, da), into_algebra});
    return slice;
}

template <typename S>
int h1_cohomology_dim(const Bimodule<S>& x, const CochainLimits& limits)
{
    return derivation_dim(x, limits) - (x.dim - bimodule_invariants(x));
}

template <typename S>
CohomologySlice<S> h0(const Bimodule<S>& x)
{
    CohomologySlice<S> slice;
    slice.degree = 0;
    const Subspace<S> inv = invariant_subspace(x);
    slice.dim = inv.dim();
    for (int k = 0; k < inv.dim(); ++k)
        slice.invariants.push_back(inv.basis.row(k).transpose());
    return slice;
}

template <typename S>
Derivation<S> lie_bracket(const Derivation<S>& d1, const Derivation<S>& d2)
{
    if (!d1.into_algebra || !d2.into_algebra)
        throw AlgebraMismatch("lie_bracket: derivations must take values in the algebra itself");
    if (d1.over != d2.over)
        throw AlgebraMismatch("lie_bracket: derivations of different algebras");
    return {d1.over, d1.map * d2.map - d2.map * d1.map, true};
}

template <typename S>
int derived_subalgebra_dim(const Bimodule<S>& regular, const CohomologySlice<S>& hh1)
{
    RowReducer<S> span = inner_span(regular);
    const int base = span.rank();
    for (std::size_t i = 0; i < hh1.derivations.size(); ++i)
        for (std::size_t j = i + 1; j < hh1.derivations.size(); ++j)
            span.add(flatten<S>(lie_bracket(hh1.derivations[i], hh1.derivations[j]).map));
    return span.rank() - base;
}

template <typename S>
int h1_homology(const Bimodule<S>& x, const CochainLimits& limits)
{
    const Algebra<S>& a = *x.over;
    const int da = a.dim(), dx = x.dim;
    const long long chains = static_cast<long long>(dx) * da * da;
    if (chains > limits.max_chains)
        throw ResourceError("bar complex: " + std::to_string(chains) + " degree-2 chains exceed the cap of " +
                            std::to_string(limits.max_chains));
    if (da == 0 || dx == 0)
        return 0;

    // C_1 = X (x) A with x (x) b_a at a * dx + x.
    const int c1 = da * dx;
    RowReducer<S> b1(dx);
    for (int i = 0; i < da; ++i)
        for (int v = 0; v < dx; ++v)
        {
            const Vector<S> image = x.right[i].col(v) - x.left[i].col(v);
            b1.add(to_sparse<S>(image));
        }
    const int kernel = c1 - b1.rank();

    std::vector<std::vector<SparseRow<S>>> right_cols(static_cast<std::size_t>(da)),
        left_cols(static_cast<std::size_t>(da));
    for (int i = 0; i < da; ++i)
        for (int v = 0; v < dx; ++v)
        {
            right_cols[i].push_back(sparse_column(x.right[i], v));
            left_cols[i].push_back(sparse_column(x.left[i], v));
        }

    RowReducer<S> b2(c1);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j)
        {
            const SparseRow<S>& prod = a.product(i, j);
            for (int v = 0; v < dx; ++v)
            {
                // x b_i (x) b_j - x (x) b_i b_j + b_j x (x) b_i
                std::map<int, S> acc;
                for (const auto& [p, c] : right_cols[i][v])
                    acc[j * dx + p] += c;
                for (const auto& [k, c] : prod)
                    acc[k * dx + v] -= c;
                for (const auto& [p, c] : left_cols[j][v])
                    acc[i * dx + p] += c;
                SparseRow<S> row = collect(acc);
                if (!row.empty())
                    b2.add(row);
            }
        }
    return kernel - b2.rank();
}

template <typename S>
int relative_h1_dim(const ExtendedAlgebra<S>& ext, const Bimodule<S>& x)
{
    if (x.over != ext.algebra)
        throw AlgebraMismatch("relative_h1_dim: coefficients must be a bimodule over the extended algebra");
    const Bimodule<S> over_base = restrict_bimodule(x, ext.base, ext.inclusion);
    return hom_bimodule_dim(ext.arrows_bimodule, over_base) - bimodule_invariants(over_base) +
           bimodule_invariants(x);
}

#define QHH_INSTANTIATE_HOCHSCHILD(S)                                                                \
    template bool satisfies_leibniz<S>(const Bimodule<S>&, const Matrix<S>&);                        \
    template Matrix<S> inner_derivation<S>(const Bimodule<S>&, const Vector<S>&);                    \
    template int derivation_dim<S>(const Bimodule<S>&, const CochainLimits&);                        \
    template CohomologySlice<S> h1_cohomology<S>(const Bimodule<S>&, const CochainLimits&);          \
    template int h1_cohomology_dim<S>(const Bimodule<S>&, const CochainLimits&);                     \
    template CohomologySlice<S> h0<S>(const Bimodule<S>&);                                           \
    template Derivation<S> lie_bracket<S>(const Derivation<S>&, const Derivation<S>&);               \
    template int derived_subalgebra_dim<S>(const Bimodule<S>&, const CohomologySlice<S>&);           \
    template int h1_homology<S>(const Bimodule<S>&, const CochainLimits&);                           \
    template int relative_h1_dim<S>(const ExtendedAlgebra<S>&, const Bimodule<S>&);

QHH_INSTANTIATE_HOCHSCHILD(Rational)
QHH_INSTANTIATE_HOCHSCHILD(ModP)

}  // namespace qhh
