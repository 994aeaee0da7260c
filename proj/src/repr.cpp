#include "qhh/repr.hpp"

#include <map>
#include <stdexcept>

#include "qhh/errors.hpp"

namespace qhh {

namespace {

template <typename S>
void check_vertex(const Algebra<S>& b, int x)
{
    if (x < 0 || x >= b.vertex_count())
        throw std::out_of_range("unknown vertex index " + std::to_string(x));
}

// Matrix of b_i acting on span{b_k : k in support} from the left (on_left)
// or right; products are assumed to stay inside the support.
template <typename S>
Matrix<S> restricted_action(const Algebra<S>& b, int i, const std::vector<int>& support, bool on_left)
{
    std::vector<int> position(static_cast<std::size_t>(b.dim()), -1);
    for (std::size_t k = 0; k < support.size(); ++k)
        position[support[k]] = static_cast<int>(k);
    const auto n = static_cast<Eigen::Index>(support.size());
    Matrix<S> m = Matrix<S>::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k)
    {
        const SparseRow<S>& prod = on_left ? b.product(i, support[k]) : b.product(support[k], i);
        for (const auto& [l, c] : prod)
            m(position[l], k) = c;
    }
    return m;
}

}  // namespace

template <typename S>
LeftModule<S> projective_at(const AlgebraPtr<S>& b, int x)
{
    check_vertex(*b, x);
    std::vector<int> support;
    for (int k = 0; k < b->dim(); ++k)
        if (b->basis(k).source == x)
            support.push_back(k);
    LeftModule<S> m{b, static_cast<int>(support.size()), {}};
    for (int i = 0; i < b->dim(); ++i)
        m.action.push_back(restricted_action(*b, i, support, true));
    return m;
}

template <typename S>
LeftModule<S> injective_at(const AlgebraPtr<S>& b, int x)
{
    check_vertex(*b, x);
    std::vector<int> support;
    for (int k = 0; k < b->dim(); ++k)
        if (b->basis(k).target == x)
            support.push_back(k);
    LeftModule<S> m{b, static_cast<int>(support.size()), {}};
    // (b . phi)(v) = phi(v b): the dual action is the transposed right action.
    for (int i = 0; i < b->dim(); ++i)
        m.action.push_back(restricted_action(*b, i, support, false).transpose());
    return m;
}

template <typename S>
LeftModule<S> zero_module(const AlgebraPtr<S>& b)
{
    return LeftModule<S>{b, 0, std::vector<Matrix<S>>(static_cast<std::size_t>(b->dim()), Matrix<S>(0, 0))};
}

template <typename S>
LeftModule<S> direct_sum(const LeftModule<S>& m, const LeftModule<S>& n)
{
    if (m.over != n.over)
        throw AlgebraMismatch("direct_sum: modules over different algebras");
    LeftModule<S> s{m.over, m.dim + n.dim, {}};
    for (std::size_t i = 0; i < m.action.size(); ++i)
    {
        Matrix<S> a = Matrix<S>::Zero(s.dim, s.dim);
        a.topLeftCorner(m.dim, m.dim) = m.action[i];
        a.bottomRightCorner(n.dim, n.dim) = n.action[i];
        s.action.push_back(std::move(a));
    }
    return s;
}

template <typename S>
bool is_module(const LeftModule<S>& m)
{
    const Algebra<S>& a = *m.over;
    if (static_cast<int>(m.action.size()) != a.dim())
        return false;
    Matrix<S> unit = Matrix<S>::Zero(m.dim, m.dim);
    for (int v = 0; v < a.vertex_count(); ++v)
        unit += m.action[a.idempotent(v)];
    if (unit != Matrix<S>::Identity(m.dim, m.dim))
        return false;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
        {
            Matrix<S> expected = Matrix<S>::Zero(m.dim, m.dim);
            for (const auto& [k, c] : a.product(i, j))
                expected += c * m.action[k];
            if (Matrix<S>(m.action[i] * m.action[j]) != expected)
                return false;
        }
    return true;
}

template <typename S>
int hom_dim(const LeftModule<S>& m, const LeftModule<S>& n)
{
    if (m.over != n.over)
        throw AlgebraMismatch("hom_dim: modules over different algebras");
    const int dm = m.dim, dn = n.dim;
    if (dm == 0 || dn == 0)
        return 0;
    // Unknown f(p, q), p in N and q in M, at index q * dn + p.
    RowReducer<S> system(dm * dn);
    for (std::size_t i = 0; i < m.action.size(); ++i)
    {
        std::vector<SparseRow<S>> n_rows, m_cols;
        for (int r = 0; r < dn; ++r)
            n_rows.push_back(sparse_row(n.action[i], r));
        for (int c = 0; c < dm; ++c)
            m_cols.push_back(sparse_column(m.action[i], c));
        // (N_i f - f M_i)(r, c) = 0
        for (int r = 0; r < dn; ++r)
            for (int c = 0; c < dm; ++c)
            {
                std::map<int, S> acc;
                for (const auto& [p, x] : n_rows[r])
                    acc[c * dn + p] += x;
                for (const auto& [q, x] : m_cols[c])
                    acc[q * dn + r] -= x;
                SparseRow<S> row;
                for (const auto& [k, x] : acc)
                    if (!is_zero(x))
                        row.emplace_back(k, x);
                if (!row.empty())
                    system.add(row);
            }
    }
    return dm * dn - system.rank();
}

template <typename S>
std::vector<PresentationGenerator<S>> canonical_generators(const LeftModule<S>& m)
{
    std::vector<PresentationGenerator<S>> gens;
    const Algebra<S>& a = *m.over;
    for (int x = 0; x < a.vertex_count(); ++x)
    {
        const Matrix<S>& e = m.action[a.idempotent(x)];
        const Subspace<S> image = row_space<S>(e.transpose());
        for (int k = 0; k < image.dim(); ++k)
            gens.push_back({x, image.basis.row(k).transpose()});
    }
    return gens;
}

template <typename S>
Presentation<S> presentation(const LeftModule<S>& m, const std::vector<PresentationGenerator<S>>& generators)
{
    const AlgebraPtr<S>& b = m.over;
    LeftModule<S> p0 = zero_module(b);
    std::vector<Vector<S>> columns;
    for (const PresentationGenerator<S>& g : generators)
    {
        if (g.image.size() != m.dim)
            throw DimensionMismatch("presentation: generator image has wrong length");
        p0 = direct_sum(p0, projective_at(b, g.vertex));
        for (int k = 0; k < b->dim(); ++k)
            if (b->basis(k).source == g.vertex)
                columns.push_back(m.action[k] * g.image);
    }

    Matrix<S> surjection = Matrix<S>::Zero(m.dim, p0.dim);
    for (int c = 0; c < p0.dim; ++c)
        surjection.col(c) = columns[static_cast<std::size_t>(c)];

    Subspace<S> kernel_basis = nullspace<S>(surjection);
    LeftModule<S> kernel{b, kernel_basis.dim(), {}};
    for (int i = 0; i < b->dim(); ++i)
    {
        // In reduced row-echelon coordinates a vector of the span is
        // determined by its entries at the pivot columns.
        Matrix<S> act = Matrix<S>::Zero(kernel.dim, kernel.dim);
        for (int j = 0; j < kernel.dim; ++j)
        {
            const Vector<S> image = p0.action[i] * kernel_basis.basis.row(j).transpose();
            for (int l = 0; l < kernel.dim; ++l)
                act(l, j) = image(kernel_basis.pivots[l]);
        }
        kernel.action.push_back(std::move(act));
    }
    return Presentation<S>{std::move(p0), std::move(surjection), std::move(kernel), std::move(kernel_basis)};
}

template <typename S>
Presentation<S> syzygy(const LeftModule<S>& m)
{
    return presentation(m, canonical_generators(m));
}

template <typename S>
int ext1_dim(const Presentation<S>& p, const LeftModule<S>& m, const LeftModule<S>& n)
{
    return hom_dim(p.kernel, n) - hom_dim(p.projective, n) + hom_dim(m, n);
}

template <typename S>
int ext1_dim(const LeftModule<S>& m, const LeftModule<S>& n)
{
    if (m.over != n.over)
        throw AlgebraMismatch("ext1_dim: modules over different algebras");
    return ext1_dim(syzygy(m), m, n);
}

#define QHH_INSTANTIATE_REPR(S)                                                                      \
    template LeftModule<S> projective_at<S>(const AlgebraPtr<S>&, int);                              \
    template LeftModule<S> injective_at<S>(const AlgebraPtr<S>&, int);                               \
    template LeftModule<S> zero_module<S>(const AlgebraPtr<S>&);                                     \
    template LeftModule<S> direct_sum<S>(const LeftModule<S>&, const LeftModule<S>&);                \
    template bool is_module<S>(const LeftModule<S>&);                                                \
    template int hom_dim<S>(const LeftModule<S>&, const LeftModule<S>&);                             \
    template std::vector<PresentationGenerator<S>> canonical_generators<S>(const LeftModule<S>&);    \
    template Presentation<S> presentation<S>(const LeftModule<S>&,                                   \
                                             const std::vector<PresentationGenerator<S>>&);          \
    template Presentation<S> syzygy<S>(const LeftModule<S>&);                                        \
    template int ext1_dim<S>(const LeftModule<S>&, const LeftModule<S>&);                            \
    template int ext1_dim<S>(const Presentation<S>&, const LeftModule<S>&, const LeftModule<S>&);

QHH_INSTANTIATE_REPR(Rational)
QHH_INSTANTIATE_REPR(ModP)

}  // namespace qhh
