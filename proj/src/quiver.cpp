#include "qhh/quiver.hpp"

#include <numeric>
#include <stdexcept>

namespace qhh {

int Quiver::add_vertex(const std::string& id)
{
    if (find_vertex(id))
        throw std::invalid_argument("duplicate vertex id '" + id + "'");
    vertices_.push_back(id);
    return vertex_count() - 1;
}

int Quiver::add_arrow(const std::string& id, const std::string& source, const std::string& target)
{
    return add_arrow(id, vertex_index(source), vertex_index(target));
}

int Quiver::add_arrow(const std::string& id, int source, int target)
{
    if (find_arrow(id))
        throw std::invalid_argument("duplicate arrow id '" + id + "'");
    if (source < 0 || source >= vertex_count() || target < 0 || target >= vertex_count())
        throw std::out_of_range("arrow '" + id + "' references an undeclared vertex");
    arrows_.push_back({id, source, target});
    return arrow_count() - 1;
}

std::optional<int> Quiver::find_vertex(const std::string& id) const
{
    for (int v = 0; v < vertex_count(); ++v)
        if (vertices_[v] == id)
            return v;
    return std::nullopt;
}

std::optional<int> Quiver::find_arrow(const std::string& id) const
{
    for (int a = 0; a < arrow_count(); ++a)
        if (arrows_[a].id == id)
            return a;
    return std::nullopt;
}

int Quiver::vertex_index(const std::string& id) const
{
    if (auto v = find_vertex(id))
        return *v;
    throw std::out_of_range("unknown vertex '" + id + "'");
}

int Quiver::arrow_index(const std::string& id) const
{
    if (auto a = find_arrow(id))
        return *a;
    throw std::out_of_range("unknown arrow '" + id + "'");
}

Path stationary_path(int vertex)
{
    return Path{vertex, {}};
}

Path arrow_path(const Quiver& q, int arrow)
{
    return Path{q.arrow(arrow).source, {arrow}};
}

Path make_path(const Quiver& q, std::vector<int> arrows)
{
    if (arrows.empty())
        throw std::invalid_argument("make_path: use stationary_path for length 0");
    Path p{0, std::move(arrows)};
    if (!is_valid(q, p))
        throw std::invalid_argument("arrows do not form a path");
    p.base_vertex = source(q, p);
    return p;
}

int source(const Quiver& q, const Path& p)
{
    return p.arrows.empty() ? p.base_vertex : q.arrow(p.arrows.back()).source;
}

int target(const Quiver& q, const Path& p)
{
    return p.arrows.empty() ? p.base_vertex : q.arrow(p.arrows.front()).target;
}

bool is_valid(const Quiver& q, const Path& p)
{
    if (p.arrows.empty())
        return p.base_vertex >= 0 && p.base_vertex < q.vertex_count();
    for (int a : p.arrows)
        if (a < 0 || a >= q.arrow_count())
            return false;
    for (std::size_t i = 0; i + 1 < p.arrows.size(); ++i)
        if (q.arrow(p.arrows[i]).source != q.arrow(p.arrows[i + 1]).target)
            return false;
    return true;
}

std::optional<Path> compose(const Quiver& q, const Path& beta, const Path& alpha)
{
    if (!is_valid(q, beta) || !is_valid(q, alpha))
        throw std::invalid_argument("compose: path references unknown arrows or vertices");
    if (target(q, alpha) != source(q, beta))
        return std::nullopt;
    Path out{source(q, alpha), beta.arrows};
    out.arrows.insert(out.arrows.end(), alpha.arrows.begin(), alpha.arrows.end());
    return out;
}

std::vector<Path> enumerate_paths(const Quiver& q, int max_len)
{
    if (max_len < 0)
        throw std::invalid_argument("enumerate_paths: negative length");
    std::vector<Path> out;
    for (int v = 0; v < q.vertex_count(); ++v)
        out.push_back(stationary_path(v));

    // Paths of length n + 1 are a_{n+1} p with p of length n; a lexicographic
    // order on (a_{n+1}, ..., a_1) comes from iterating arrows in the outer loop.
    std::vector<Path> level;
    for (int a = 0; a < q.arrow_count(); ++a)
        level.push_back(arrow_path(q, a));
    for (int len = 1; len <= max_len && !level.empty(); ++len)
    {
        out.insert(out.end(), level.begin(), level.end());
        std::vector<Path> next;
        for (int a = 0; a < q.arrow_count(); ++a)
            for (const Path& p : level)
                if (target(q, p) == q.arrow(a).source)
                {
                    Path np{p.base_vertex, {a}};
                    np.arrows.insert(np.arrows.end(), p.arrows.begin(), p.arrows.end());
                    next.push_back(std::move(np));
                }
        level = std::move(next);
    }
    return out;
}

long long count_paths(const Quiver& q, int max_len, long long cap)
{
    // ending[v] = number of paths of the current length ending at v
    std::vector<long long> ending(static_cast<std::size_t>(q.vertex_count()), 1);
    long long total = q.vertex_count();
    for (int len = 1; len <= max_len && total <= cap; ++len)
    {
        std::vector<long long> next(ending.size(), 0);
        for (const Arrow& a : q.arrows())
            next[a.target] = std::min(cap + 1, next[a.target] + ending[a.source]);
        ending = std::move(next);
        const long long level = std::accumulate(ending.begin(), ending.end(), 0LL);
        if (level == 0)
            break;
        total = std::min(cap + 1, total + level);
    }
    return total;
}

std::vector<std::pair<int, Path>> parallel_pairs(const Quiver& q, int max_len)
{
    const std::vector<Path> paths = enumerate_paths(q, max_len);
    std::vector<std::pair<int, Path>> out;
    for (int a = 0; a < q.arrow_count(); ++a)
        for (const Path& p : paths)
            if (source(q, p) == q.arrow(a).source && target(q, p) == q.arrow(a).target)
                out.emplace_back(a, p);
    return out;
}

int connected_components(const Quiver& q)
{
    std::vector<int> parent(static_cast<std::size_t>(q.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    int components = q.vertex_count();
    for (const Arrow& a : q.arrows())
    {
        const int x = find(a.source), y = find(a.target);
        if (x != y)
        {
            parent[x] = y;
            --components;
        }
    }
    return components;
}

bool has_oriented_cycle(const Quiver& q)
{
    // Kahn's algorithm: a cycle exists iff some vertex is never freed.
    std::vector<int> indegree(static_cast<std::size_t>(q.vertex_count()), 0);
    for (const Arrow& a : q.arrows())
        ++indegree[a.target];
    std::vector<int> ready;
    for (int v = 0; v < q.vertex_count(); ++v)
        if (indegree[v] == 0)
            ready.push_back(v);
    int removed = 0;
    while (!ready.empty())
    {
        const int v = ready.back();
        ready.pop_back();
        ++removed;
        for (const Arrow& a : q.arrows())
            if (a.source == v && --indegree[a.target] == 0)
                ready.push_back(a.target);
    }
    return removed != q.vertex_count();
}

std::string path_label(const Quiver& q, const Path& p)
{
    if (p.arrows.empty())
        return q.vertex(p.base_vertex);
    std::string out;
    for (std::size_t i = 0; i < p.arrows.size(); ++i)
    {
        if (i > 0)
            out += '.';
        out += q.arrow(p.arrows[i]).id;
    }
    return out;
}

}  // namespace qhh
