#include "qhh/extension.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "qhh/errors.hpp"

namespace qhh {

void validate_new_arrows(const Quiver& q, const NewArrowSet& f)
{
    std::set<std::string> seen;
    for (const NewArrow& a : f)
    {
        if (q.find_arrow(a.id))
            throw std::invalid_argument("new arrow '" + a.id + "' clashes with an arrow of the quiver");
        if (!seen.insert(a.id).second)
            throw std::invalid_argument("duplicate new arrow id '" + a.id + "'");
        if (a.source < 0 || a.source >= q.vertex_count() || a.target < 0 || a.target >= q.vertex_count())
            throw std::out_of_range("new arrow '" + a.id + "' references an undeclared vertex");
    }
}

bool RelativeGraph::has_edge(int a, int b) const
{
    const auto& s = successors.at(static_cast<std::size_t>(a));
    return std::find(s.begin(), s.end(), b) != s.end();
}

template <typename S>
RelativeGraph relative_graph(const Algebra<S>& b, const NewArrowSet& f)
{
    RelativeGraph g;
    g.successors.resize(f.size());
    for (std::size_t a = 0; a < f.size(); ++a)
        for (std::size_t c = 0; c < f.size(); ++c)
            if (corner_dim(b, f[c].source, f[a].target) != 0)
                g.successors[a].push_back(static_cast<int>(c));
    return g;
}

template <typename S>
std::optional<std::vector<int>> find_relative_cycle(const Algebra<S>& b, const NewArrowSet& f)
{
    const RelativeGraph g = relative_graph(b, f);
    // Iterative DFS with colors; the stack holds the current walk a_1 -> a_2 -> ...
    enum Color { White, Grey, Black };
    std::vector<Color> color(f.size(), White);
    for (int start = 0; start < g.size(); ++start)
    {
        if (color[start] != White)
            continue;
        std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
        color[start] = Grey;
        while (!stack.empty())
        {
            auto& [node, next] = stack.back();
            if (next == g.successors[node].size())
            {
                color[node] = Black;
                stack.pop_back();
                continue;
            }
            const int succ = g.successors[node][next++];
            if (color[succ] == Grey)
            {
                std::vector<int> walk;
                auto it = std::find_if(stack.begin(), stack.end(), [&](const auto& e) { return e.first == succ; });
                for (; it != stack.end(); ++it)
                    walk.push_back(it->first);
                // walk is in traversal order a_1, ..., a_n; paths are written target-to-source
                std::reverse(walk.begin(), walk.end());
                return walk;
            }
            if (color[succ] == White)
            {
                color[succ] = Grey;
                stack.emplace_back(succ, 0);
            }
        }
    }
    return std::nullopt;
}

template <typename S>
bool has_relative_cycle(const Algebra<S>& b, const NewArrowSet& f)
{
    return find_relative_cycle(b, f).has_value();
}

std::string describe_relative_cycle(const NewArrowSet& f, const std::vector<int>& cycle)
{
    if (cycle.size() == 1)
        return "relative loop " + f[cycle[0]].id;
    std::string out = "relative cycle (";
    for (std::size_t i = 0; i < cycle.size(); ++i)
        out += (i ? ", " : "") + f[cycle[i]].id;
    return out + ")";
}

std::string relative_path_label(const NewArrowSet& f, const RelativePath& gamma)
{
    std::string out;
    for (std::size_t i = 0; i < gamma.arrows.size(); ++i)
        out += (i ? "." : "") + f[gamma.arrows[i]].id;
    return out;
}

std::string extended_path_label(const std::vector<std::string>& vertices, const NewArrowSet& f,
                                const ExtendedRelativePath& omega)
{
    std::string out = "(" + vertices[omega.target];
    if (omega.path)
        out += ", " + relative_path_label(f, *omega.path);
    return out + ", " + vertices[omega.source] + ")";
}

namespace {

template <typename S>
void require_no_relative_cycle(const Algebra<S>& b, const NewArrowSet& f)
{
    if (auto cycle = find_relative_cycle(b, f))
        throw InfiniteError("the extended algebra is infinite-dimensional: " + describe_relative_cycle(f, *cycle));
}

}  // namespace

template <typename S>
std::vector<RelativePath> enumerate_relative_paths(const Algebra<S>& b, const NewArrowSet& f)
{
    require_no_relative_cycle(b, f);
    const RelativeGraph g = relative_graph(b, f);
    std::vector<RelativePath> out, level;
    for (int a = 0; a < g.size(); ++a)
        level.push_back({{a}, 1});
    while (!level.empty())
    {
        std::sort(level.begin(), level.end(),
                  [](const RelativePath& l, const RelativePath& r) { return l.arrows < r.arrows; });
        out.insert(out.end(), level.begin(), level.end());
        std::vector<RelativePath> next;
        for (const RelativePath& gamma : level)
        {
            const int last = gamma.arrows.front();
            for (int c : g.successors[last])
            {
                RelativePath ext{{c}, gamma.dim * corner_dim(b, f[c].source, f[last].target)};
                ext.arrows.insert(ext.arrows.end(), gamma.arrows.begin(), gamma.arrows.end());
                next.push_back(std::move(ext));
            }
        }
        level = std::move(next);
    }
    return out;
}

template <typename S>
ExtendedEnumeration enumerate_extended(const Algebra<S>& b, const NewArrowSet& f)
{
    ExtendedEnumeration out;
    const int nv = b.vertex_count();
    for (int y = 0; y < nv; ++y)
        for (int x = 0; x < nv; ++x)
            if (const int d = corner_dim(b, y, x))
                out.paths.push_back({y, std::nullopt, x, d});
    for (const RelativePath& gamma : enumerate_relative_paths(b, f))
    {
        const int t = f[gamma.arrows.front()].target;
        const int s = f[gamma.arrows.back()].source;
        for (int y = 0; y < nv; ++y)
            for (int x = 0; x < nv; ++x)
            {
                const int dy = corner_dim(b, y, t), dx = corner_dim(b, s, x);
                if (dy != 0 && dx != 0)
                    out.paths.push_back({y, gamma, x, dy * gamma.dim * dx});
            }
    }
    for (int a = 0; a < static_cast<int>(f.size()); ++a)
        for (const ExtendedRelativePath& w : out.paths)
            if (w.target == f[a].target && w.source == f[a].source)
                out.pairs.emplace_back(a, w);
    return out;
}

template <typename S>
int cyclic_dimension(const Algebra<S>& b, const NewArrowSet& f, const RelativePath& gamma)
{
    return corner_dim(b, f[gamma.arrows.back()].source, f[gamma.arrows.front()].target) * gamma.dim;
}

// ---------------------------------------------------------------------------
// B_F as a tensor algebra

namespace {

struct Word
{
    std::vector<int> arrows;   // a_n, ..., a_1
    std::vector<int> factors;  // b_{n+1}, ..., b_1 (basis indices of B)

    auto key() const { return std::make_pair(arrows, factors); }
};

template <typename S>
std::vector<Word> words_over(const Algebra<S>& b, const NewArrowSet& f, const std::vector<int>& arrows)
{
    const std::size_t n = arrows.size();
    // Admissible basis elements for each factor slot.
    std::vector<std::vector<int>> slots(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        for (int i = 0; i < b.dim(); ++i)
        {
            const auto& e = b.basis(i);
            const bool source_ok = k == n || e.source == f[arrows[k]].target;
            const bool target_ok = k == 0 || e.target == f[arrows[k - 1]].source;
            if (source_ok && target_ok)
                slots[k].push_back(i);
        }

    std::vector<Word> out;
    std::vector<std::size_t> choice(n + 1, 0);
    for (const auto& s : slots)
        if (s.empty())
            return out;
    while (true)
    {
        Word w{arrows, {}};
        for (std::size_t k = 0; k <= n; ++k)
            w.factors.push_back(slots[k][choice[k]]);
        out.push_back(std::move(w));
        std::size_t k = n + 1;
        while (k > 0)
        {
            --k;
            if (++choice[k] < slots[k].size())
                break;
            choice[k] = 0;
            if (k == 0)
                return out;
        }
    }
}

template <typename S>
std::string word_label(const Algebra<S>& b, const NewArrowSet& f, const Word& w)
{
    std::string out = b.basis(w.factors[0]).label;
    for (std::size_t k = 0; k < w.arrows.size(); ++k)
        out += "*" + f[w.arrows[k]].id + "*" + b.basis(w.factors[k + 1]).label;
    return out;
}

}  // namespace

template <typename S>
ExtendedAlgebra<S> build_extended_algebra(const AlgebraPtr<S>& bp, const NewArrowSet& f)
{
    const Algebra<S>& b = *bp;
    const std::vector<RelativePath> relative = enumerate_relative_paths(b, f);

    std::vector<Word> words;
    for (int i = 0; i < b.dim(); ++i)
        words.push_back({{}, {i}});
    for (const RelativePath& gamma : relative)
        for (Word& w : words_over(b, f, gamma.arrows))
            words.push_back(std::move(w));

    std::map<std::pair<std::vector<int>, std::vector<int>>, int> index;
    for (int i = 0; i < static_cast<int>(words.size()); ++i)
        index.emplace(words[i].key(), i);

    const std::size_t n = words.size();
    std::vector<typename Algebra<S>::BasisElement> basis;
    for (const Word& w : words)
        basis.push_back({word_label(b, f, w), b.basis(w.factors.front()).target, b.basis(w.factors.back()).source});

    // (u_{n+1} a_n ... u_1)(v_{m+1} c_m ... v_1): multiply u_1 v_{m+1} in B.
    std::vector<SparseRow<S>> products(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
        {
            const Word& u = words[i];
            const Word& v = words[j];
            const SparseRow<S>& middle = b.product(u.factors.back(), v.factors.front());
            if (middle.empty())
                continue;
            Word w;
            w.arrows = u.arrows;
            w.arrows.insert(w.arrows.end(), v.arrows.begin(), v.arrows.end());
            SparseRow<S> coords;
            for (const auto& [k, c] : middle)
            {
                w.factors.assign(u.factors.begin(), u.factors.end() - 1);
                w.factors.push_back(k);
                w.factors.insert(w.factors.end(), v.factors.begin() + 1, v.factors.end());
                auto it = index.find(w.key());
                if (it == index.end())
                    throw std::logic_error("tensor word product left the enumerated basis");
                coords.emplace_back(it->second, c);
            }
            std::sort(coords.begin(), coords.end(),
                      [](const auto& l, const auto& r) { return l.first < r.first; });
            products[i * n + j] = std::move(coords);
        }

    std::vector<int> idempotents;
    for (int x = 0; x < b.vertex_count(); ++x)
        idempotents.push_back(b.idempotent(x));

    ExtendedAlgebra<S> out;
    out.base = bp;
    out.algebra = std::make_shared<const Algebra<S>>(b.vertices(), std::move(basis), std::move(idempotents),
                                                     std::move(products));
    for (int i = 0; i < b.dim(); ++i)
        out.inclusion.push_back(i);
    for (const Word& w : words)
        out.degree.push_back(static_cast<int>(w.arrows.size()));
    for (int a = 0; a < static_cast<int>(f.size()); ++a)
    {
        const Word w{{a}, {b.idempotent(f[a].target), b.idempotent(f[a].source)}};
        out.arrow_elements.push_back(index.at(w.key()));
    }

    // N: the degree-one words with the B-bimodule structure inherited from B_F.
    std::vector<int> support, position(n, -1);
    for (std::size_t k = 0; k < n; ++k)
        if (out.degree[k] == 1)
        {
            position[k] = static_cast<int>(support.size());
            support.push_back(static_cast<int>(k));
        }
    const int dn = static_cast<int>(support.size());
    Bimodule<S> nb{bp, dn, {}, {}};
    const Algebra<S>& bf = *out.algebra;
    for (int i = 0; i < b.dim(); ++i)
    {
        Matrix<S> l = Matrix<S>::Zero(dn, dn), r = Matrix<S>::Zero(dn, dn);
        for (int c = 0; c < dn; ++c)
        {
            for (const auto& [k, x] : bf.product(out.inclusion[i], support[c]))
                l(position[k], c) = x;
            for (const auto& [k, x] : bf.product(support[c], out.inclusion[i]))
                r(position[k], c) = x;
        }
        nb.left.push_back(std::move(l));
        nb.right.push_back(std::move(r));
    }
    out.arrows_bimodule = std::move(nb);
    return out;
}

template <typename S>
int hom_bimodule_dim(const Bimodule<S>& n, const Bimodule<S>& x)
{
    if (n.over != x.over)
        throw AlgebraMismatch("hom_bimodule_dim: bimodules over different algebras");
    const int dn = n.dim, dx = x.dim;
    if (dn == 0 || dx == 0)
        return 0;
    // Unknown f(p, q), p in X and q in N, at index q * dx + p.
    RowReducer<S> system(dn * dx);
    auto add_equations = [&](const Matrix<S>& on_x, const Matrix<S>& on_n) {
        std::vector<SparseRow<S>> x_rows, n_cols;
        for (int r = 0; r < dx; ++r)
            x_rows.push_back(sparse_row(on_x, r));
        for (int c = 0; c < dn; ++c)
            n_cols.push_back(sparse_column(on_n, c));
        for (int r = 0; r < dx; ++r)
            for (int c = 0; c < dn; ++c)
            {
                std::map<int, S> acc;
                for (const auto& [p, v] : x_rows[r])
                    acc[c * dx + p] += v;
                for (const auto& [q, v] : n_cols[c])
                    acc[q * dx + r] -= v;
                SparseRow<S> row;
                for (const auto& [k, v] : acc)
                    if (!is_zero(v))
                        row.emplace_back(k, v);
                if (!row.empty())
                    system.add(row);
            }
    };
    for (std::size_t i = 0; i < n.left.size(); ++i)
    {
        add_equations(x.left[i], n.left[i]);
        add_equations(x.right[i], n.right[i]);
    }
    return dn * dx - system.rank();
}

BoundQuiverPresentation extended_presentation(const BoundQuiverPresentation& p, int resolved_bound,
                                              const NewArrowSet& f)
{
    validate_new_arrows(p.quiver, f);
    BoundQuiverPresentation out = p;
    for (const NewArrow& a : f)
        out.quiver.add_arrow(a.id, a.source, a.target);
    out.bound = (static_cast<int>(f.size()) + 1) * resolved_bound;
    return out;
}

#define QHH_INSTANTIATE_EXTENSION(S)                                                                  \
    template RelativeGraph relative_graph<S>(const Algebra<S>&, const NewArrowSet&);                  \
    template std::optional<std::vector<int>> find_relative_cycle<S>(const Algebra<S>&,                \
                                                                    const NewArrowSet&);              \
    template bool has_relative_cycle<S>(const Algebra<S>&, const NewArrowSet&);                       \
    template std::vector<RelativePath> enumerate_relative_paths<S>(const Algebra<S>&,                 \
                                                                   const NewArrowSet&);               \
    template ExtendedEnumeration enumerate_extended<S>(const Algebra<S>&, const NewArrowSet&);        \
    template int cyclic_dimension<S>(const Algebra<S>&, const NewArrowSet&, const RelativePath&);     \
    template ExtendedAlgebra<S> build_extended_algebra<S>(const AlgebraPtr<S>&, const NewArrowSet&);  \
    template int hom_bimodule_dim<S>(const Bimodule<S>&, const Bimodule<S>&);

QHH_INSTANTIATE_EXTENSION(Rational)
QHH_INSTANTIATE_EXTENSION(ModP)

}  // namespace qhh
