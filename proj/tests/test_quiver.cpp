#include <random>
#include <set>

#include "catch_amalgamated.hpp"
#include "instances.hpp"
#include "qhh/formula.hpp"
#include "qhh/quiver.hpp"

using namespace qhh;

TEST_CASE("composition")
{
    const Quiver q = testing::chain_with_zero_relations(1).quiver;
    const int b2 = q.arrow_index("b2"), b3 = q.arrow_index("b3");
    const Path p32 = *compose(q, arrow_path(q, b3), arrow_path(q, b2));
    CHECK(p32.arrows == std::vector<int>{b3, b2});
    CHECK(p32.length() == 2);
    CHECK(path_label(q, p32) == "b3.b2");
    CHECK_FALSE(compose(q, arrow_path(q, b2), arrow_path(q, b3)));

    const int x = q.vertex_index("x");
    CHECK(*compose(q, stationary_path(x), arrow_path(q, b2)) == arrow_path(q, b2));
    CHECK(*compose(q, arrow_path(q, b3), stationary_path(x)) == arrow_path(q, b3));
    CHECK_THROWS(compose(q, arrow_path(q, b3), Path{0, {99}}));
}

TEST_CASE("path enumeration")
{
    Quiver point;
    point.add_vertex("p");
    CHECK(enumerate_paths(point, 3).size() == 1);

    CHECK(enumerate_paths(testing::kronecker().quiver, 2).size() == 4);
    const Quiver q = testing::chain_with_zero_relations(1).quiver;
    CHECK(enumerate_paths(q, 3).size() == 10);
    CHECK(count_paths(q, 3, 100) == 10);

    const std::vector<Path> all = enumerate_paths(q, 3);
    for (std::size_t i = 1; i < all.size(); ++i)
        CHECK(all[i - 1].length() <= all[i].length());
}

TEST_CASE("parallel pairs")
{
    Quiver a2;
    a2.add_vertex("1");
    a2.add_vertex("2");
    a2.add_arrow("alpha", "1", "2");
    CHECK(parallel_pairs(a2, 2).size() == 1);
    CHECK(parallel_pairs(testing::kronecker().quiver, 2).size() == 4);
    Quiver point;
    point.add_vertex("p");
    CHECK(parallel_pairs(point, 1).empty());
}

TEST_CASE("components and cycles")
{
    const Quiver kron = testing::kronecker().quiver;
    CHECK(connected_components(kron) == 1);
    CHECK_FALSE(has_oriented_cycle(kron));

    Quiver two;
    two.add_vertex("a");
    two.add_vertex("b");
    CHECK(connected_components(two) == 2);
    CHECK(connected_components(Quiver{}) == 0);

    Quiver loop;
    loop.add_vertex("a");
    loop.add_arrow("l", "a", "a");
    CHECK(has_oriented_cycle(loop));

    Quiver rev = testing::reversed().quiver;
    rev.add_arrow("a", "e", "f");
    CHECK(has_oriented_cycle(rev));
}

TEST_CASE("quiver construction errors")
{
    Quiver q;
    q.add_vertex("a");
    CHECK_THROWS(q.add_vertex("a"));
    CHECK_THROWS(q.add_arrow("x", "a", "b"));
    q.add_arrow("x", "a", "a");
    CHECK_THROWS(q.add_arrow("x", "a", "a"));
}

TEST_CASE("path properties on random quivers")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial)
    {
        Quiver q = random_acyclic_quiver(rng, 6, 8);
        if (trial % 3 == 0 && q.vertex_count() > 1)
            q.add_arrow("back", q.arrows().empty() ? 1 : q.arrow(0).target,
                        q.arrows().empty() ? 0 : q.arrow(0).source);
        const int n = q.vertex_count();

        // Prefix property of the enumeration.
        const std::vector<Path> longer = enumerate_paths(q, 4), shorter = enumerate_paths(q, 3);
        std::vector<Path> prefix;
        for (const Path& p : longer)
            if (p.length() <= 3)
                prefix.push_back(p);
        CHECK(prefix == shorter);

        // Parallel pairs against a double loop.
        if (!has_oriented_cycle(q))
        {
            std::set<std::pair<int, Path>> brute;
            for (int a = 0; a < q.arrow_count(); ++a)
                for (const Path& p : enumerate_paths(q, n))
                    if (source(q, p) == q.arrow(a).source && target(q, p) == q.arrow(a).target)
                        brute.emplace(a, p);
            const auto pairs = parallel_pairs(q, n);
            CHECK(std::set<std::pair<int, Path>>(pairs.begin(), pairs.end()) == brute);
            CHECK(pairs.size() == brute.size());
        }

        // A path longer than the vertex count must revisit a vertex.
        bool long_path = false;
        for (const Path& p : enumerate_paths(q, n))
            long_path = long_path || p.length() == n;
        CHECK(has_oriented_cycle(q) == long_path);
    }
}
