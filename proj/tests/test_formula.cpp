#include <random>

#include "catch_amalgamated.hpp"
#include "instances.hpp"
#include "qhh/errors.hpp"
#include "qhh/formula.hpp"

using namespace qhh;
using testing::build;

TEST_CASE("delta for the Kronecker quiver plus a parallel arrow")
{
    const BoundQuiverPresentation p = testing::kronecker();
    const auto b = build<Rational>(p);
    const NewArrowSet f = testing::arrow_e_to_f(p);
    const DeltaBreakdown d = delta_formula(b, f);
    CHECK(d == DeltaBreakdown{0, 3, 2, 5});
    CHECK(single_arrow_delta(b, f[0]) == d);
    CHECK(delta_formula(b, {}) == DeltaBreakdown{});
}

TEST_CASE("delta for the zero-relation chains")
{
    for (int middle = 1; middle <= 3; ++middle)
    {
        const BoundQuiverPresentation p = testing::chain_with_zero_relations(middle);
        const auto b = build<Rational>(p);
        const NewArrowSet f = testing::arrow_e_to_f(p);
        const DeltaBreakdown d = delta_formula(b, f);
        CHECK(d.delta == 1);
        CHECK(single_arrow_delta(b, f[0]) == d);
        CHECK(h1_cohomology_dim(regular_bimodule(b)) == 0);
        if (middle == 1)
            CHECK(d == DeltaBreakdown{0, 1, 0, 1});
    }
}

TEST_CASE("single arrow rejects relative loops")
{
    const BoundQuiverPresentation rev = testing::reversed();
    CHECK_THROWS_AS(single_arrow_delta(build<Rational>(rev), testing::arrow_e_to_f(rev)[0]), RelativeLoopError);
    CHECK_THROWS_AS(delta_formula(build<Rational>(rev), testing::arrow_e_to_f(rev)), InfiniteError);
}

TEST_CASE("acyclic path algebras")
{
    Quiver a2;
    a2.add_vertex("1");
    a2.add_vertex("2");
    a2.add_arrow("alpha", "1", "2");
    CHECK(acyclic_path_algebra_hh1(a2) == 0);
    CHECK(acyclic_path_algebra_hh1(testing::kronecker().quiver) == 3);
    Quiver point;
    point.add_vertex("p");
    CHECK(acyclic_path_algebra_hh1(point) == 0);
    point.add_arrow("l", "p", "p");
    CHECK_THROWS_AS(acyclic_path_algebra_hh1(point), CycleError);

    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 30; ++trial)
    {
        const Quiver q = random_acyclic_quiver(rng, 6, 8);
        const auto b = build<Rational>(testing::path_algebra(q));
        CHECK(acyclic_path_algebra_hh1(q) == h1_cohomology_dim(regular_bimodule(b)));
    }
}

TEST_CASE("verification of fixed instances")
{
    const BoundQuiverPresentation kron = testing::kronecker();
    const VerificationReport r = verify<Rational>(kron, testing::arrow_e_to_f(kron));
    CHECK(r.passed());
    CHECK(r.delta.delta == 5);
    CHECK(r.hh1_b == 3);
    CHECK(r.hh1_bf == 8);
    CHECK(r.hh1_homology_b == 0);
    CHECK(r.hh1_homology_bf == 0);

    for (int middle = 1; middle <= 3; ++middle)
    {
        const BoundQuiverPresentation p = testing::chain_with_zero_relations(middle);
        const VerificationReport rc = verify<Rational>(p, testing::arrow_e_to_f(p));
        CHECK(rc.passed());
        CHECK(rc.hh1_bf == 1);
        CHECK(rc.center_bf == (middle == 1 ? 1 : 2));
    }

    const VerificationReport empty = verify<Rational>(kron, {});
    CHECK(empty.passed());
    CHECK(empty.delta.delta == 0);
    CHECK(empty.relative_h1 == 0);

    VerifyOptions small;
    small.max_dim = 4;
    CHECK_THROWS_AS(verify<Rational>(kron, testing::arrow_e_to_f(kron), small), ResourceError);
}

TEST_CASE("identities on random instances")
{
    InstanceSampler sampler(42);
    for (int trial = 0; trial < 30; ++trial)
    {
        const Instance inst = sampler.next();
        const VerificationReport r = verify<Rational>(inst.presentation, inst.new_arrows);
        INFO("instance " << trial);
        for (const IdentityCheck& c : r.checks)
        {
            INFO(c.name << ": " << c.lhs << " vs " << c.rhs);
            CHECK(c.pass);
        }
        CHECK(r.dim_b <= 12);
        CHECK(inst.new_arrows.size() <= 3);
    }
}

TEST_CASE("prime field agrees on random instances")
{
    ModP::set_modulus(1000003);
    InstanceSampler sampler(77);
    for (int trial = 0; trial < 10; ++trial)
    {
        const Instance inst = sampler.next();
        VerifyOptions options;
        options.rebuild = false;
        const VerificationReport q = verify<Rational>(inst.presentation, inst.new_arrows, options);
        const VerificationReport p = verify<ModP>(inst.presentation, inst.new_arrows, options);
        CHECK(p.passed());
        CHECK(p.delta == q.delta);
        CHECK(p.hh1_bf == q.hh1_bf);
        CHECK(p.hh1_homology_bf == q.hh1_homology_bf);
    }
    ModP::set_modulus(2147483647);
}

TEST_CASE("sampler is deterministic")
{
    InstanceSampler a(5), b(5);
    for (int i = 0; i < 10; ++i)
    {
        const Instance x = a.next(), y = b.next();
        CHECK(x.presentation == y.presentation);
        CHECK(x.new_arrows == y.new_arrows);
    }
}
