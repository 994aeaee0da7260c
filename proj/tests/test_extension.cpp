#include "catch_amalgamated.hpp"
#include "instances.hpp"
#include "qhh/errors.hpp"
#include "qhh/formula.hpp"

using namespace qhh;
using testing::build;

TEST_CASE("relative graph and cycles")
{
    const BoundQuiverPresentation rev = testing::reversed();
    const auto br = build<Rational>(rev);
    const NewArrowSet a = testing::arrow_e_to_f(rev);
    CHECK(relative_graph(*br, a).has_edge(0, 0));
    CHECK(has_relative_cycle(*br, a));
    CHECK(describe_relative_cycle(a, *find_relative_cycle(*br, a)) == "relative loop a");
    CHECK_THROWS_AS(enumerate_relative_paths(*br, a), InfiniteError);
    CHECK_THROWS_AS(build_extended_algebra(br, a), InfiniteError);

    const BoundQuiverPresentation kron = testing::kronecker();
    const auto bk = build<Rational>(kron);
    const RelativeGraph g = relative_graph(*bk, testing::arrow_e_to_f(kron));
    CHECK(g.size() == 1);
    CHECK(g.successors[0].empty());
    CHECK_FALSE(has_relative_cycle(*bk, testing::arrow_e_to_f(kron)));
    CHECK(relative_graph(*bk, {}).size() == 0);

    // Over k x k, a : x -> y and b : y -> x chain both ways.
    Quiver two;
    two.add_vertex("x");
    two.add_vertex("y");
    const auto semisimple = build<Rational>({two, {}, 2});
    const NewArrowSet ab = {{"a", 0, 1}, {"b", 1, 0}};
    CHECK(has_relative_cycle(*semisimple, ab));
    const auto cycle = find_relative_cycle(*semisimple, ab);
    REQUIRE(cycle);
    CHECK(cycle->size() == 2);
}

TEST_CASE("relative and extended paths")
{
    const BoundQuiverPresentation kron = testing::kronecker();
    const auto b = build<Rational>(kron);
    const NewArrowSet f = testing::arrow_e_to_f(kron);
    const std::vector<RelativePath> r = enumerate_relative_paths(*b, f);
    REQUIRE(r.size() == 1);
    CHECK(r[0].arrows == std::vector<int>{0});
    CHECK(r[0].dim == 1);
    CHECK(enumerate_relative_paths(*b, {}).empty());

    const ExtendedEnumeration w = enumerate_extended(*b, f);
    REQUIRE(w.pairs.size() == 2);
    int sum = 0;
    for (const auto& [a, omega] : w.pairs)
        sum += omega.dim;
    CHECK(sum == 3);
    CHECK(w.pairs[0].second.dim + w.pairs[1].second.dim == 3);

    const BoundQuiverPresentation chain = testing::chain_with_zero_relations(1);
    const auto bc = build<Rational>(chain);
    int chain_sum = 0;
    for (const auto& [a, omega] : enumerate_extended(*bc, testing::arrow_e_to_f(chain)).pairs)
        chain_sum += omega.dim;
    CHECK(chain_sum == 1);
}

TEST_CASE("extended algebras")
{
    const BoundQuiverPresentation kron = testing::kronecker();
    const auto b = build<Rational>(kron);
    const ExtendedAlgebra<Rational> ext = build_extended_algebra(b, testing::arrow_e_to_f(kron));
    CHECK(ext.algebra->dim() == 5);
    CHECK(is_associative(*ext.algebra));
    CHECK(has_graded_idempotents(*ext.algebra));
    CHECK(ext.arrows_bimodule.dim == 1);
    CHECK(is_bimodule(ext.arrows_bimodule));
    const Bimodule<Rational> over_b = restrict_bimodule(regular_bimodule(ext.algebra), b, ext.inclusion);
    CHECK(hom_bimodule_dim(ext.arrows_bimodule, over_b) == 3);
    CHECK(hom_bimodule_dim(regular_bimodule(b), over_b) == bimodule_invariants(over_b));

    const BoundQuiverPresentation chain = testing::chain_with_zero_relations(1);
    const auto bc = build<Rational>(chain);
    CHECK(build_extended_algebra(bc, testing::arrow_e_to_f(chain)).algebra->dim() == 11);

    const ExtendedAlgebra<Rational> none = build_extended_algebra(b, {});
    CHECK(none.algebra->dim() == b->dim());
    CHECK(none.arrows_bimodule.dim == 0);
    CHECK(hom_bimodule_dim(none.arrows_bimodule, over_b) == 0);
}

TEST_CASE("new arrow validation")
{
    const Quiver q = testing::kronecker().quiver;
    CHECK_THROWS(validate_new_arrows(q, {{"u", 0, 1}}));
    CHECK_THROWS(validate_new_arrows(q, {{"a", 0, 1}, {"a", 1, 0}}));
    CHECK_THROWS(validate_new_arrows(q, {{"a", 0, 5}}));
}

TEST_CASE("extension properties on random instances")
{
    InstanceSampler sampler(41);
    for (int trial = 0; trial < 30; ++trial)
    {
        const Instance inst = sampler.next();
        const auto b = build<Rational>(inst.presentation);
        const NewArrowSet& f = inst.new_arrows;
        const ExtendedAlgebra<Rational> ext = build_extended_algebra(b, f);

        // Direct-sum dimension count.
        int expected = b->dim();
        for (const RelativePath& gamma : enumerate_relative_paths(*b, f))
        {
            int col = 0, row = 0;
            for (int v = 0; v < b->vertex_count(); ++v)
            {
                col += corner_dim(*b, v, f[gamma.arrows.front()].target);
                row += corner_dim(*b, f[gamma.arrows.back()].source, v);
            }
            expected += gamma.dim * col * row;
            CHECK(cyclic_dimension(*b, f, gamma) == 0);
        }
        CHECK(ext.algebra->dim() == expected);
        CHECK(is_associative(*ext.algebra));
        for (int v = 0; v < b->vertex_count(); ++v)
            CHECK(ext.algebra->idempotent(v) == ext.inclusion[b->idempotent(v)]);

        // Hom(N, B_F) against the pair count.
        const Bimodule<Rational> over_b = restrict_bimodule(regular_bimodule(ext.algebra), b, ext.inclusion);
        int sum = 0;
        for (const auto& [a, omega] : enumerate_extended(*b, f).pairs)
            sum += omega.dim;
        CHECK(hom_bimodule_dim(ext.arrows_bimodule, over_b) == sum);

        // The same algebra from the enlarged quiver.
        const Algebra<Rational> rebuilt = build_algebra<Rational>(extended_presentation(inst.presentation,
                                                                                         inst.presentation.bound, f));
        CHECK(rebuilt.dim() == ext.algebra->dim());
        for (int y = 0; y < b->vertex_count(); ++y)
            for (int x = 0; x < b->vertex_count(); ++x)
                CHECK(corner_dim(rebuilt, y, x) == corner_dim(*ext.algebra, y, x));
    }
}
