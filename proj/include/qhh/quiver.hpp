#pragma once

// Finite quivers and their paths.
//
// Paths are written target-to-source, (a_n, ..., a_1) with s(a_{i+1}) = t(a_i),
// so the product "beta alpha" means alpha first, then beta.

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qhh {

struct Arrow
{
    std::string id;
    int source = 0;
    int target = 0;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver
{
public:
    Quiver() = default;

    /// Adds a vertex and returns its index. Throws on a duplicate id.
    int add_vertex(const std::string& id);
    /// Adds an arrow between declared vertices and returns its index.
    int add_arrow(const std::string& id, const std::string& source, const std::string& target);
    int add_arrow(const std::string& id, int source, int target);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }

    const std::string& vertex(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
    const Arrow& arrow(int a) const { return arrows_.at(static_cast<std::size_t>(a)); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    std::optional<int> find_vertex(const std::string& id) const;
    std::optional<int> find_arrow(const std::string& id) const;
    int vertex_index(const std::string& id) const;  // throws std::out_of_range
    int arrow_index(const std::string& id) const;   // throws std::out_of_range

    friend bool operator==(const Quiver&, const Quiver&) = default;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

struct Path
{
    int base_vertex = 0;      // meaningful only for length 0
    std::vector<int> arrows;  // arrow indices, target-to-source

    int length() const { return static_cast<int>(arrows.size()); }

    friend bool operator==(const Path&, const Path&) = default;
    friend auto operator<=>(const Path&, const Path&) = default;
};

Path stationary_path(int vertex);
Path arrow_path(const Quiver& q, int arrow);
/// Path from arrows listed target-to-source. Throws std::invalid_argument if
/// the arrows do not compose or are unknown.
Path make_path(const Quiver& q, std::vector<int> arrows);

int source(const Quiver& q, const Path& p);
int target(const Quiver& q, const Path& p);
bool is_valid(const Quiver& q, const Path& p);

/// beta * alpha (alpha first); nullopt when t(alpha) != s(beta).
std::optional<Path> compose(const Quiver& q, const Path& beta, const Path& alpha);

/// All paths of length 0..max_len, ordered by length, then lexicographically
/// by arrow index (vertices in declaration order for length 0).
std::vector<Path> enumerate_paths(const Quiver& q, int max_len);

/// Number of paths of length 0..max_len, stopping early once `cap` is exceeded.
long long count_paths(const Quiver& q, int max_len, long long cap);

/// Pairs (a, p) of an arrow and a path of length <= max_len sharing source and target.
std::vector<std::pair<int, Path>> parallel_pairs(const Quiver& q, int max_len);

int connected_components(const Quiver& q);
bool has_oriented_cycle(const Quiver& q);

/// Arrow ids joined by '.', target-to-source; the vertex id for length 0.
std::string path_label(const Quiver& q, const Path& p);

}  // namespace qhh
