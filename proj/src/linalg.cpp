#include "qhh/linalg.hpp"

#include <algorithm>
#include <map>

#include "qhh/errors.hpp"

namespace qhh {

template <typename S>
EchelonForm<S> rref(const Matrix<S>& m)
{
    EchelonForm<S> out{m, {}};
    Matrix<S>& a = out.reduced;
    const Eigen::Index rows = a.rows(), cols = a.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c)
    {
        Eigen::Index p = r;
        while (p < rows && is_zero(a(p, c)))
            ++p;
        if (p == rows)
            continue;
        if (p != r)
            a.row(p).swap(a.row(r));
        const S inv = S(1) / a(r, c);
        for (Eigen::Index j = c; j < cols; ++j)
            a(r, j) *= inv;
        for (Eigen::Index i = 0; i < rows; ++i)
        {
            if (i == r || is_zero(a(i, c)))
                continue;
            const S f = a(i, c);
            for (Eigen::Index j = c; j < cols; ++j)
                if (!is_zero(a(r, j)))
                    a(i, j) -= f * a(r, j);
        }
        out.pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return out;
}

template <typename S>
int rank(const Matrix<S>& m)
{
    return static_cast<int>(rref(m).pivots.size());
}

template <typename S>
Subspace<S> row_space(const Matrix<S>& m)
{
    EchelonForm<S> e = rref(m);
    Subspace<S> s;
    s.ambient_dim = static_cast<int>(m.cols());
    s.pivots = std::move(e.pivots);
    s.basis = e.reduced.topRows(static_cast<Eigen::Index>(s.pivots.size()));
    return s;
}

template <typename S>
Subspace<S> nullspace(const Matrix<S>& m)
{
    const int cols = static_cast<int>(m.cols());
    EchelonForm<S> e = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int p : e.pivots)
        is_pivot[p] = true;

    std::vector<int> free_cols;
    for (int c = 0; c < cols; ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);

    // One generator per free column f: e_f - sum_i R(i, f) e_{pivot_i}.
    Matrix<S> gens = Matrix<S>::Zero(static_cast<Eigen::Index>(free_cols.size()), cols);
    for (std::size_t k = 0; k < free_cols.size(); ++k)
    {
        gens(k, free_cols[k]) = S(1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            gens(k, e.pivots[i]) = -e.reduced(i, free_cols[k]);
    }
    return row_space<S>(gens);
}

template <typename S>
Vector<S> reduce_mod(const Subspace<S>& s, const Vector<S>& v)
{
    if (v.size() != s.ambient_dim)
        throw DimensionMismatch("reduce_mod: vector of length " + std::to_string(v.size()) +
                                " in ambient space of dimension " + std::to_string(s.ambient_dim));
    Vector<S> r = v;
    for (int i = 0; i < s.dim(); ++i)
    {
        const S f = r(s.pivots[i]);
        if (!is_zero(f))
            r -= f * s.basis.row(i).transpose();
    }
    return r;
}

template <typename S>
bool contains(const Subspace<S>& s, const Vector<S>& v)
{
    Vector<S> r = reduce_mod(s, v);
    for (Eigen::Index i = 0; i < r.size(); ++i)
        if (!is_zero(r(i)))
            return false;
    return true;
}

template <typename S>
Subspace<S> zero_subspace(int ambient_dim)
{
    Subspace<S> s;
    s.ambient_dim = ambient_dim;
    s.basis = Matrix<S>::Zero(0, ambient_dim);
    return s;
}

template <typename S>
Subspace<S> full_space(int ambient_dim)
{
    Subspace<S> s;
    s.ambient_dim = ambient_dim;
    s.basis = Matrix<S>::Identity(ambient_dim, ambient_dim);
    for (int i = 0; i < ambient_dim; ++i)
        s.pivots.push_back(i);
    return s;
}

template <typename S>
SparseRow<S> to_sparse(const Vector<S>& v)
{
    SparseRow<S> out;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!is_zero(v(i)))
            out.emplace_back(static_cast<int>(i), v(i));
    return out;
}

template <typename S>
Vector<S> to_dense(const SparseRow<S>& v, int size)
{
    Vector<S> out = Vector<S>::Zero(size);
    for (const auto& [i, x] : v)
        out(i) = x;
    return out;
}

template <typename S>
SparseRow<S> sparse_column(const Matrix<S>& m, int j)
{
    SparseRow<S> out;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        if (!is_zero(m(i, j)))
            out.emplace_back(static_cast<int>(i), m(i, j));
    return out;
}

template <typename S>
SparseRow<S> sparse_row(const Matrix<S>& m, int i)
{
    SparseRow<S> out;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        if (!is_zero(m(i, j)))
            out.emplace_back(static_cast<int>(j), m(i, j));
    return out;
}

// ---------------------------------------------------------------------------
// RowReducer

namespace {

// Eliminates, in increasing column order, every entry of `acc` at a pivot
// column with index >= `from`. Pivot rows only carry entries to the right of
// their pivot, so one left-to-right sweep suffices.
template <typename S>
void eliminate(std::map<int, S>& acc, const std::vector<SparseRow<S>>& rows,
               const std::vector<int>& pivot_row, int from)
{
    auto it = acc.lower_bound(from);
    while (it != acc.end())
    {
        const int col = it->first;
        const int r = pivot_row[col];
        if (r < 0)
        {
            ++it;
            continue;
        }
        const S f = it->second;
        acc.erase(it);
        const SparseRow<S>& row = rows[r];
        for (std::size_t k = 1; k < row.size(); ++k)
        {
            auto [pos, inserted] = acc.try_emplace(row[k].first, S(0));
            pos->second -= f * row[k].second;
            if (is_zero(pos->second))
                acc.erase(pos);
        }
        it = acc.upper_bound(col);
    }
}

template <typename S>
std::map<int, S> accumulate(const SparseRow<S>& row, int cols)
{
    std::map<int, S> acc;
    for (const auto& [c, x] : row)
    {
        if (c < 0 || c >= cols)
            throw DimensionMismatch("sparse row index " + std::to_string(c) + " outside [0, " +
                                    std::to_string(cols) + ")");
        if (is_zero(x))
            continue;
        auto [pos, inserted] = acc.try_emplace(c, S(0));
        pos->second += x;
        if (is_zero(pos->second))
            acc.erase(pos);
    }
    return acc;
}

}  // namespace

template <typename S>
RowReducer<S>::RowReducer(int cols) : cols_(cols), pivot_row_(static_cast<std::size_t>(cols), -1)
{
}

template <typename S>
SparseRow<S> RowReducer<S>::reduce(const SparseRow<S>& row) const
{
    std::map<int, S> acc = accumulate(row, cols_);
    eliminate(acc, rows_, pivot_row_, 0);
    return SparseRow<S>(acc.begin(), acc.end());
}

template <typename S>
bool RowReducer<S>::add(const SparseRow<S>& row)
{
    std::map<int, S> acc = accumulate(row, cols_);
    eliminate(acc, rows_, pivot_row_, 0);
    if (acc.empty())
        return false;
    const S inv = S(1) / acc.begin()->second;
    SparseRow<S> stored;
    stored.reserve(acc.size());
    for (auto& [c, x] : acc)
        stored.emplace_back(c, x * inv);
    pivot_row_[stored.front().first] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(stored));
    return true;
}

template <typename S>
std::vector<int> RowReducer<S>::pivot_columns() const
{
    std::vector<int> out;
    for (int c = 0; c < cols_; ++c)
        if (pivot_row_[c] >= 0)
            out.push_back(c);
    return out;
}

template <typename S>
Subspace<S> RowReducer<S>::row_space() const
{
    // Back-substitute from the rightmost pivot so each row is reduced against
    // rows that are already in final form.
    const std::vector<int> pivots = pivot_columns();
    std::vector<SparseRow<S>> reduced(rows_.size());
    std::vector<int> reduced_row(static_cast<std::size_t>(cols_), -1);
    for (auto p = pivots.rbegin(); p != pivots.rend(); ++p)
    {
        const int r = pivot_row_[*p];
        std::map<int, S> acc(rows_[r].begin(), rows_[r].end());
        eliminate(acc, reduced, reduced_row, *p + 1);
        reduced[r] = SparseRow<S>(acc.begin(), acc.end());
        reduced_row[*p] = r;
    }

    Subspace<S> s;
    s.ambient_dim = cols_;
    s.pivots = pivots;
    s.basis = Matrix<S>::Zero(static_cast<Eigen::Index>(pivots.size()), cols_);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (const auto& [c, x] : reduced[pivot_row_[pivots[i]]])
            s.basis(static_cast<Eigen::Index>(i), c) = x;
    return s;
}

template <typename S>
Subspace<S> RowReducer<S>::nullspace() const
{
    const Subspace<S> rs = row_space();
    // One generator per free column f: e_f - sum_i R(i, f) e_{pivot_i}. Its
    // leftmost entry may sit at a pivot column, so the generators are
    // re-echelonized.
    RowReducer<S> kernel(cols_);
    for (int f = 0; f < cols_; ++f)
    {
        if (pivot_row_[f] >= 0)
            continue;
        std::map<int, S> gen;
        gen.emplace(f, S(1));
        for (int i = 0; i < rs.dim(); ++i)
            if (!is_zero(rs.basis(i, f)))
                gen.emplace(rs.pivots[i], -rs.basis(i, f));
        kernel.add(SparseRow<S>(gen.begin(), gen.end()));
    }
    return kernel.row_space();
}

#define QHH_INSTANTIATE_LINALG(S)                                                   \
    template EchelonForm<S> rref<S>(const Matrix<S>&);                              \
    template int rank<S>(const Matrix<S>&);                                         \
    template Subspace<S> row_space<S>(const Matrix<S>&);                            \
    template Subspace<S> nullspace<S>(const Matrix<S>&);                            \
    template Vector<S> reduce_mod<S>(const Subspace<S>&, const Vector<S>&);         \
    template bool contains<S>(const Subspace<S>&, const Vector<S>&);                \
    template Subspace<S> zero_subspace<S>(int);                                     \
    template Subspace<S> full_space<S>(int);                                        \
    template SparseRow<S> to_sparse<S>(const Vector<S>&);                           \
    template Vector<S> to_dense<S>(const SparseRow<S>&, int);                       \
    template SparseRow<S> sparse_column<S>(const Matrix<S>&, int);                  \
    template SparseRow<S> sparse_row<S>(const Matrix<S>&, int);                     \
    template class RowReducer<S>;

QHH_INSTANTIATE_LINALG(Rational)
QHH_INSTANTIATE_LINALG(ModP)

}  // namespace qhh
