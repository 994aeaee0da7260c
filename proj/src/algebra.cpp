#include "qhh/algebra.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "qhh/errors.hpp"

namespace qhh {

template <typename S>
Algebra<S>::Algebra(std::vector<std::string> vertices, std::vector<BasisElement> basis,
                    std::vector<int> idempotents, std::vector<SparseRow<S>> products)
    : vertices_(std::move(vertices)),
      basis_(std::move(basis)),
      idempotents_(std::move(idempotents)),
      products_(std::move(products))
{
    if (idempotents_.size() != vertices_.size())
        throw DimensionMismatch("one idempotent per vertex is required");
    if (products_.size() != basis_.size() * basis_.size())
        throw DimensionMismatch("structure constants must cover every ordered basis pair");
}

template <typename S>
int Algebra<S>::vertex_index(const std::string& id) const
{
    for (int v = 0; v < vertex_count(); ++v)
        if (vertices_[v] == id)
            return v;
    throw std::out_of_range("unknown vertex '" + id + "'");
}

template <typename S>
Vector<S> Algebra<S>::multiply(const Vector<S>& x, const Vector<S>& y) const
{
    if (x.size() != dim() || y.size() != dim())
        throw DimensionMismatch("multiply: operand length differs from algebra dimension");
    Vector<S> out = Vector<S>::Zero(dim());
    for (int i = 0; i < dim(); ++i)
    {
        if (is_zero(x(i)))
            continue;
        for (int j = 0; j < dim(); ++j)
        {
            if (is_zero(y(j)))
                continue;
            const S xy = x(i) * y(j);
            for (const auto& [k, c] : product(i, j))
                out(k) += xy * c;
        }
    }
    return out;
}

template <typename S>
Vector<S> Algebra<S>::unit() const
{
    Vector<S> u = Vector<S>::Zero(dim());
    for (int e : idempotents_)
        u(e) = S(1);
    return u;
}

template <typename S>
Vector<S> Algebra<S>::basis_vector(int i) const
{
    Vector<S> v = Vector<S>::Zero(dim());
    v(i) = S(1);
    return v;
}

template <typename S>
Matrix<S> Algebra<S>::left_multiplication(int i) const
{
    Matrix<S> m = Matrix<S>::Zero(dim(), dim());
    for (int j = 0; j < dim(); ++j)
        for (const auto& [k, c] : product(i, j))
            m(k, j) = c;
    return m;
}

template <typename S>
Matrix<S> Algebra<S>::right_multiplication(int i) const
{
    Matrix<S> m = Matrix<S>::Zero(dim(), dim());
    for (int j = 0; j < dim(); ++j)
        for (const auto& [k, c] : product(j, i))
            m(k, j) = c;
    return m;
}

// ---------------------------------------------------------------------------
// Building kQ/I

void validate_relations(const Quiver& q, const std::vector<Relation>& relations)
{
    for (std::size_t r = 0; r < relations.size(); ++r)
    {
        const Relation& rel = relations[r];
        const std::string where = "relation " + std::to_string(r + 1);
        if (rel.terms.empty())
            throw MalformedRelation(where + " has no terms");
        std::map<Path, Rational> combined;
        for (const auto& [coeff, path] : rel.terms)
        {
            if (!is_valid(q, path))
                throw MalformedRelation(where + " uses arrows that do not compose");
            if (path.length() < 2)
                throw MalformedRelation(where + " contains the path '" + path_label(q, path) +
                                        "' of length < 2");
            if (source(q, path) != source(q, rel.terms.front().second) ||
                target(q, path) != target(q, rel.terms.front().second))
                throw MalformedRelation(where + " combines non-parallel paths");
            combined[path] += coeff;
        }
        bool nonzero = false;
        for (const auto& [path, coeff] : combined)
            nonzero = nonzero || !coeff.is_zero();
        if (!nonzero)
            throw MalformedRelation(where + " has all coefficients zero");
    }
}

namespace {

// Ideal of kQ truncated to paths of length <= bound. Columns order paths by
// decreasing length so that reduction eliminates long paths first.
template <typename S>
class TruncatedIdeal
{
public:
    TruncatedIdeal(const BoundQuiverPresentation& p, int bound, const BuildOptions& options)
        : quiver_(p.quiver), bound_(bound), reducer_(0)
    {
        if (count_paths(quiver_, bound, options.max_paths) > options.max_paths)
            throw ResourceError("more than " + std::to_string(options.max_paths) +
                                " paths of length <= " + std::to_string(bound));
        paths_ = enumerate_paths(quiver_, bound);
        for (int i = 0; i < static_cast<int>(paths_.size()); ++i)
            index_.emplace(paths_[i], i);
        reducer_ = RowReducer<S>(static_cast<int>(paths_.size()));
        close(p.relations);
    }

    int column(int path_index) const { return static_cast<int>(paths_.size()) - 1 - path_index; }
    int path_index(int column) const { return static_cast<int>(paths_.size()) - 1 - column; }
    const std::vector<Path>& paths() const { return paths_; }
    const RowReducer<S>& reducer() const { return reducer_; }

    std::optional<int> find(const Path& p) const
    {
        auto it = index_.find(p);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    /// First path of length exactly `bound` outside the ideal, if any.
    std::optional<Path> surviving_top_path() const
    {
        for (int i = 0; i < static_cast<int>(paths_.size()); ++i)
            if (paths_[i].length() == bound_ && !reducer_.contains({{column(i), S(1)}}))
                return paths_[i];
        return std::nullopt;
    }

private:
    SparseRow<S> relation_vector(const Relation& r) const
    {
        std::map<int, S> acc;
        for (const auto& [coeff, path] : r.terms)
            if (auto i = find(path))
                acc[column(*i)] += from_rational<S>(coeff);
        return finish(acc);
    }

    static SparseRow<S> finish(const std::map<int, S>& acc)
    {
        SparseRow<S> out;
        for (const auto& [c, x] : acc)
            if (!is_zero(x))
                out.emplace_back(c, x);
        return out;
    }

    SparseRow<S> multiply_arrow(const SparseRow<S>& v, int arrow, bool on_left) const
    {
        const Path a = arrow_path(quiver_, arrow);
        std::map<int, S> acc;
        for (const auto& [c, x] : v)
        {
            const Path& p = paths_[path_index(c)];
            std::optional<Path> prod = on_left ? compose(quiver_, a, p) : compose(quiver_, p, a);
            if (!prod || prod->length() > bound_)
                continue;
            acc[column(*find(*prod))] += x;
        }
        return finish(acc);
    }

    void close(const std::vector<Relation>& relations)
    {
        std::vector<SparseRow<S>> queue;
        for (const Relation& r : relations)
            queue.push_back(relation_vector(r));
        while (!queue.empty())
        {
            SparseRow<S> v = std::move(queue.back());
            queue.pop_back();
            if (v.empty() || !reducer_.add(v))
                continue;
            for (int a = 0; a < quiver_.arrow_count(); ++a)
            {
                SparseRow<S> l = multiply_arrow(v, a, true);
                SparseRow<S> r = multiply_arrow(v, a, false);
                if (!l.empty())
                    queue.push_back(std::move(l));
                if (!r.empty())
                    queue.push_back(std::move(r));
            }
        }
    }

    const Quiver& quiver_;
    int bound_;
    std::vector<Path> paths_;
    std::map<Path, int> index_;
    RowReducer<S> reducer_;
};

}  // namespace

template <typename S>
int find_admissible_bound(const BoundQuiverPresentation& p, const BuildOptions& options)
{
    validate_relations(p.quiver, p.relations);
    for (int n = 2; n <= options.bound_search_cap; ++n)
    {
        TruncatedIdeal<S> ideal(p, n, options);
        if (!ideal.surviving_top_path())
            return n;
    }
    throw AdmissibilityError("no admissible bound <= " + std::to_string(options.bound_search_cap) +
                             ": the relations do not kill all long paths");
}

template <typename S>
Algebra<S> build_algebra(const BoundQuiverPresentation& p, const BuildOptions& options)
{
    validate_relations(p.quiver, p.relations);
    const int bound = p.bound == 0 ? find_admissible_bound<S>(p, options) : p.bound;
    if (bound < 2)
        throw AdmissibilityError("nilpotency bound must be at least 2");

    const Quiver& q = p.quiver;
    TruncatedIdeal<S> ideal(p, bound, options);
    if (auto survivor = ideal.surviving_top_path())
        throw AdmissibilityError("path '" + path_label(q, *survivor) + "' of length " +
                                 std::to_string(bound) + " is not in the ideal; bound " +
                                 std::to_string(bound) + " is wrong");

    const std::vector<Path>& paths = ideal.paths();
    std::vector<int> basis_of_path(paths.size(), -1);
    std::vector<typename Algebra<S>::BasisElement> basis;
    std::vector<Path> basis_paths;
    for (int i = 0; i < static_cast<int>(paths.size()); ++i)
    {
        if (ideal.reducer().is_pivot(ideal.column(i)))
            continue;
        basis_of_path[i] = static_cast<int>(basis.size());
        basis.push_back({path_label(q, paths[i]), target(q, paths[i]), source(q, paths[i])});
        basis_paths.push_back(paths[i]);
    }

    const std::size_t n = basis.size();
    std::vector<SparseRow<S>> products(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
        {
            std::optional<Path> prod = compose(q, basis_paths[i], basis_paths[j]);
            if (!prod || prod->length() >= bound)
                continue;
            const int col = ideal.column(*ideal.find(*prod));
            SparseRow<S> reduced = ideal.reducer().reduce({{col, S(1)}});
            SparseRow<S> coords;
            for (const auto& [c, x] : reduced)
                coords.emplace_back(basis_of_path[ideal.path_index(c)], x);
            std::sort(coords.begin(), coords.end(),
                      [](const auto& l, const auto& r) { return l.first < r.first; });
            products[i * n + j] = std::move(coords);
        }

    std::vector<int> idempotents;
    for (int v = 0; v < q.vertex_count(); ++v)
        idempotents.push_back(basis_of_path[v]);  // stationary paths come first

    return Algebra<S>(q.vertices(), std::move(basis), std::move(idempotents), std::move(products));
}

// ---------------------------------------------------------------------------
// Queries

template <typename S>
int corner_dim(const Algebra<S>& a, int y, int x)
{
    if (y < 0 || y >= a.vertex_count() || x < 0 || x >= a.vertex_count())
        throw std::out_of_range("corner_dim: unknown vertex");
    int count = 0;
    for (const auto& b : a.basis())
        if (b.target == y && b.source == x)
            ++count;
    return count;
}

template <typename S>
Subspace<S> center(const Algebra<S>& a)
{
    const int n = a.dim();
    RowReducer<S> system(n);
    // For each basis b_i, coordinate l of sum_k z_k (b_k b_i - b_i b_k).
    for (int i = 0; i < n; ++i)
    {
        std::vector<std::map<int, S>> rows(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k)
        {
            for (const auto& [l, c] : a.product(k, i))
                rows[l][k] += c;
            for (const auto& [l, c] : a.product(i, k))
                rows[l][k] -= c;
        }
        for (const auto& row : rows)
        {
            SparseRow<S> sparse;
            for (const auto& [k, c] : row)
                if (!is_zero(c))
                    sparse.emplace_back(k, c);
            if (!sparse.empty())
                system.add(sparse);
        }
    }
    return system.nullspace();
}

template <typename S>
bool is_associative(const Algebra<S>& a)
{
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
            {
                std::map<int, S> lhs, rhs;
                for (const auto& [l, c] : a.product(i, j))
                    for (const auto& [m, d] : a.product(l, k))
                        lhs[m] += c * d;
                for (const auto& [l, c] : a.product(j, k))
                    for (const auto& [m, d] : a.product(i, l))
                        rhs[m] += c * d;
                for (const auto& [m, c] : lhs)
                    rhs[m] -= c;
                for (const auto& [m, c] : rhs)
                    if (!is_zero(c))
                        return false;
            }
    return true;
}

template <typename S>
bool has_graded_idempotents(const Algebra<S>& a)
{
    auto is_basis = [](const SparseRow<S>& v, int k) {
        return v.size() == 1 && v[0].first == k && v[0].second == S(1);
    };
    for (int x = 0; x < a.vertex_count(); ++x)
        for (int y = 0; y < a.vertex_count(); ++y)
        {
            const SparseRow<S>& p = a.product(a.idempotent(x), a.idempotent(y));
            if (x == y ? !is_basis(p, a.idempotent(x)) : !p.empty())
                return false;
        }
    for (int b = 0; b < a.dim(); ++b)
        for (int x = 0; x < a.vertex_count(); ++x)
        {
            const SparseRow<S>& l = a.product(a.idempotent(x), b);
            const SparseRow<S>& r = a.product(b, a.idempotent(x));
            if (x == a.basis(b).target ? !is_basis(l, b) : !l.empty())
                return false;
            if (x == a.basis(b).source ? !is_basis(r, b) : !r.empty())
                return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Bimodules

template <typename S>
Bimodule<S> regular_bimodule(const AlgebraPtr<S>& a)
{
    Bimodule<S> x{a, a->dim(), {}, {}};
    for (int i = 0; i < a->dim(); ++i)
    {
        x.left.push_back(a->left_multiplication(i));
        x.right.push_back(a->right_multiplication(i));
    }
    return x;
}

template <typename S>
Bimodule<S> restrict_bimodule(const Bimodule<S>& x, const AlgebraPtr<S>& sub, const std::vector<int>& inclusion)
{
    if (static_cast<int>(inclusion.size()) != sub->dim())
        throw DimensionMismatch("inclusion must map every basis element of the subalgebra");
    Bimodule<S> r{sub, x.dim, {}, {}};
    for (int i : inclusion)
    {
        if (i < 0 || i >= x.over->dim())
            throw DimensionMismatch("inclusion index outside the acting algebra");
        r.left.push_back(x.left[i]);
        r.right.push_back(x.right[i]);
    }
    return r;
}

template <typename S>
Bimodule<S> dual_bimodule(const Bimodule<S>& x)
{
    Bimodule<S> d{x.over, x.dim, {}, {}};
    for (std::size_t i = 0; i < x.left.size(); ++i)
    {
        d.left.push_back(x.right[i].transpose());
        d.right.push_back(x.left[i].transpose());
    }
    return d;
}

template <typename S>
Bimodule<S> direct_sum(const Bimodule<S>& x, const Bimodule<S>& y)
{
    if (x.over != y.over)
        throw AlgebraMismatch("direct_sum: bimodules over different algebras");
    Bimodule<S> s{x.over, x.dim + y.dim, {}, {}};
    for (std::size_t i = 0; i < x.left.size(); ++i)
    {
        Matrix<S> l = Matrix<S>::Zero(s.dim, s.dim), r = Matrix<S>::Zero(s.dim, s.dim);
        l.topLeftCorner(x.dim, x.dim) = x.left[i];
        l.bottomRightCorner(y.dim, y.dim) = y.left[i];
        r.topLeftCorner(x.dim, x.dim) = x.right[i];
        r.bottomRightCorner(y.dim, y.dim) = y.right[i];
        s.left.push_back(std::move(l));
        s.right.push_back(std::move(r));
    }
    return s;
}

template <typename S>
Subspace<S> invariant_subspace(const Bimodule<S>& x)
{
    RowReducer<S> system(x.dim);
    for (std::size_t i = 0; i < x.left.size(); ++i)
    {
        const Matrix<S> diff = x.left[i] - x.right[i];
        for (int r = 0; r < x.dim; ++r)
        {
            SparseRow<S> row = sparse_row(diff, r);
            if (!row.empty())
                system.add(row);
        }
    }
    return system.nullspace();
}

template <typename S>
int bimodule_invariants(const Bimodule<S>& x)
{
    return invariant_subspace(x).dim();
}

template <typename S>
bool is_bimodule(const Bimodule<S>& x)
{
    const Algebra<S>& a = *x.over;
    if (static_cast<int>(x.left.size()) != a.dim() || static_cast<int>(x.right.size()) != a.dim())
        return false;
    Matrix<S> lu = Matrix<S>::Zero(x.dim, x.dim), ru = Matrix<S>::Zero(x.dim, x.dim);
    for (int v = 0; v < a.vertex_count(); ++v)
    {
        lu += x.left[a.idempotent(v)];
        ru += x.right[a.idempotent(v)];
    }
    const Matrix<S> id = Matrix<S>::Identity(x.dim, x.dim);
    if (lu != id || ru != id)
        return false;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
        {
            Matrix<S> l = Matrix<S>::Zero(x.dim, x.dim), r = Matrix<S>::Zero(x.dim, x.dim);
            for (const auto& [k, c] : a.product(i, j))
            {
                l += c * x.left[k];
                r += c * x.right[k];
            }
            if (Matrix<S>(x.left[i] * x.left[j]) != l)
                return false;
            if (Matrix<S>(x.right[j] * x.right[i]) != r)
                return false;
            if (Matrix<S>(x.left[i] * x.right[j]) != Matrix<S>(x.right[j] * x.left[i]))
                return false;
        }
    return true;
}

#define QHH_INSTANTIATE_ALGEBRA(S)                                                                     \
    template class Algebra<S>;                                                                         \
    template Algebra<S> build_algebra<S>(const BoundQuiverPresentation&, const BuildOptions&);         \
    template int find_admissible_bound<S>(const BoundQuiverPresentation&, const BuildOptions&);        \
    template int corner_dim<S>(const Algebra<S>&, int, int);                                           \
    template Subspace<S> center<S>(const Algebra<S>&);                                                 \
    template bool is_associative<S>(const Algebra<S>&);                                                \
    template bool has_graded_idempotents<S>(const Algebra<S>&);                                        \
    template Bimodule<S> regular_bimodule<S>(const AlgebraPtr<S>&);                                    \
    template Bimodule<S> restrict_bimodule<S>(const Bimodule<S>&, const AlgebraPtr<S>&,                \
                                              const std::vector<int>&);                                \
    template Bimodule<S> dual_bimodule<S>(const Bimodule<S>&);                                         \
    template Bimodule<S> direct_sum<S>(const Bimodule<S>&, const Bimodule<S>&);                        \
    template Subspace<S> invariant_subspace<S>(const Bimodule<S>&);                                    \
    template int bimodule_invariants<S>(const Bimodule<S>&);                                           \
    template bool is_bimodule<S>(const Bimodule<S>&);

QHH_INSTANTIATE_ALGEBRA(Rational)
QHH_INSTANTIATE_ALGEBRA(ModP)

}  // namespace qhh
