#include <random>

#include "catch_amalgamated.hpp"
#include "instances.hpp"
#include "qhh/errors.hpp"
#include "qhh/formula.hpp"

using namespace qhh;
using testing::build;

namespace {

std::vector<std::string> labels(const Algebra<Rational>& a)
{
    std::vector<std::string> out;
    for (const auto& b : a.basis())
        out.push_back(b.label);
    return out;
}

}  // namespace

TEST_CASE("bound quiver algebras")
{
    const auto kron = build<Rational>(testing::kronecker());
    CHECK(kron->dim() == 4);
    CHECK(labels(*kron) == std::vector<std::string>{"e", "f", "u", "v"});

    const auto ex = build<Rational>(testing::chain_with_zero_relations(1));
    CHECK(ex->dim() == 7);
    for (int i = 0; i < ex->dim(); ++i)
        CHECK(ex->basis(i).label.find('.') == std::string::npos);
}

TEST_CASE("admissibility")
{
    BoundQuiverPresentation three = testing::kronecker();
    three.quiver.add_arrow("w", "e", "f");
    CHECK(build_algebra<Rational>(three).dim() == 5);

    BoundQuiverPresentation a3;
    a3.quiver.add_vertex("1");
    a3.quiver.add_vertex("2");
    a3.quiver.add_vertex("3");
    a3.quiver.add_arrow("x", "1", "2");
    a3.quiver.add_arrow("y", "2", "3");
    a3.bound = 2;
    CHECK_THROWS_AS(build_algebra<Rational>(a3), AdmissibilityError);
    a3.bound = 0;
    CHECK(find_admissible_bound<Rational>(a3) == 3);
    CHECK(build_algebra<Rational>(a3).dim() == 6);

    Quiver loop;
    loop.add_vertex("1");
    loop.add_arrow("l", "1", "1");
    CHECK_THROWS_AS(find_admissible_bound<Rational>({loop, {}, 0}), AdmissibilityError);
}

TEST_CASE("malformed relations")
{
    BoundQuiverPresentation p = testing::kronecker();
    const Quiver& q = p.quiver;
    p.relations.push_back({{{Rational(1), arrow_path(q, 0)}}});
    CHECK_THROWS_AS(build_algebra<Rational>(p), MalformedRelation);

    BoundQuiverPresentation chain = testing::chain_with_zero_relations(1);
    const Path p32 = chain.relations[1].terms[0].second;
    chain.relations.push_back({{{Rational(1), p32}, {Rational(-1), p32}}});
    CHECK_THROWS_AS(build_algebra<Rational>(chain), MalformedRelation);
}

TEST_CASE("corners")
{
    const auto kron = build<Rational>(testing::kronecker());
    CHECK(corner_dim(*kron, 1, 0) == 2);
    CHECK(corner_dim(*kron, 0, 1) == 0);
    const BoundQuiverPresentation p = testing::chain_with_zero_relations(1);
    const auto ex = build<Rational>(p);
    CHECK(corner_dim(*ex, p.quiver.vertex_index("e"), p.quiver.vertex_index("f")) == 0);
    for (int x = 0; x < ex->vertex_count(); ++x)
        CHECK(corner_dim(*ex, x, x) >= 1);
}

TEST_CASE("centers and invariants")
{
    const auto kron = build<Rational>(testing::kronecker());
    CHECK(center(*kron).dim() == 1);

    Quiver two;
    two.add_vertex("a");
    two.add_vertex("b");
    const auto semisimple = build<Rational>({two, {}, 2});
    CHECK(center(*semisimple).dim() == 2);  // commutative

    const auto ext = build_extended_algebra(kron, testing::arrow_e_to_f(testing::kronecker()));
    CHECK(center(*ext.algebra).dim() == 1);
    const Bimodule<Rational> over_b = restrict_bimodule(regular_bimodule(ext.algebra), kron, ext.inclusion);
    CHECK(bimodule_invariants(over_b) == 1);
    CHECK(bimodule_invariants(Bimodule<Rational>{kron, 0, std::vector<Matrix<Rational>>(4, Matrix<Rational>(0, 0)),
                                                 std::vector<Matrix<Rational>>(4, Matrix<Rational>(0, 0))}) == 0);
}

TEST_CASE("bound insensitivity")
{
    BoundQuiverPresentation p = testing::chain_with_zero_relations(1);
    const auto base = build<Rational>(p);
    for (int n : {4, 5})
    {
        p.bound = n;
        const Algebra<Rational> a = build_algebra<Rational>(p);
        CHECK(labels(a) == labels(*base));
        for (int i = 0; i < a.dim(); ++i)
            for (int j = 0; j < a.dim(); ++j)
                CHECK(a.product(i, j) == base->product(i, j));
    }
}

TEST_CASE("algebra invariants on random presentations")
{
    InstanceSampler sampler(17);
    for (int trial = 0; trial < 40; ++trial)
    {
        const Instance inst = sampler.next();
        const auto b = build<Rational>(inst.presentation);
        CHECK(is_associative(*b));
        CHECK(has_graded_idempotents(*b));
        const Bimodule<Rational> reg = regular_bimodule(b);
        CHECK(is_bimodule(reg));
        CHECK(is_bimodule(dual_bimodule(reg)));

        int total = 0;
        for (int y = 0; y < b->vertex_count(); ++y)
            for (int x = 0; x < b->vertex_count(); ++x)
                total += corner_dim(*b, y, x);
        CHECK(total == b->dim());

        const Subspace<Rational> z = center(*b), inv = invariant_subspace(reg);
        CHECK(z.pivots == inv.pivots);
        CHECK(z.basis == inv.basis);
    }
}

TEST_CASE("prime field build matches the rationals")
{
    ModP::set_modulus(101);
    InstanceSampler sampler(23);
    for (int trial = 0; trial < 20; ++trial)
    {
        const Instance inst = sampler.next();
        const auto b = build_algebra<ModP>(inst.presentation);
        const auto q = build_algebra<Rational>(inst.presentation);
        CHECK(b.dim() == q.dim());
        CHECK(is_associative(b));
    }
    ModP::set_modulus(2147483647);
}
