#include "qhh/formula.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "qhh/errors.hpp"
#include "qhh/repr.hpp"

namespace qhh {

namespace {

template <typename S>
int row_dim(const Algebra<S>& b, int y)  // dim y B
{
    int d = 0;
    for (int x = 0; x < b.vertex_count(); ++x)
        d += corner_dim(b, y, x);
    return d;
}

template <typename S>
int column_dim(const Algebra<S>& b, int x)  // dim B x
{
    int d = 0;
    for (int y = 0; y < b.vertex_count(); ++y)
        d += corner_dim(b, y, x);
    return d;
}

int source_of(const NewArrowSet& f, const RelativePath& gamma) { return f[gamma.arrows.back()].source; }
int target_of(const NewArrowSet& f, const RelativePath& gamma) { return f[gamma.arrows.front()].target; }

// ext1(I_s, P_t) - hom(I_s, P_t) over B.
template <typename S>
class ExtHomTable
{
public:
    explicit ExtHomTable(const AlgebraPtr<S>& b) : b_(b) {}

    int operator()(int s, int t)
    {
        auto [it, fresh] = cache_.try_emplace({s, t}, 0);
        if (fresh)
        {
            const LeftModule<S> i = injective_at(b_, s), p = projective_at(b_, t);
            it->second = ext1_dim(i, p) - hom_dim(i, p);
        }
        return it->second;
    }

private:
    AlgebraPtr<S> b_;
    std::map<std::pair<int, int>, int> cache_;
};

int resolve_bound(const BoundQuiverPresentation& p, const BuildOptions& options)
{
    return p.bound != 0 ? p.bound : find_admissible_bound<Rational>(p, options);
}

template <typename S>
AlgebraPtr<S> build_base(const BoundQuiverPresentation& p, int bound, const BuildOptions& options)
{
    BoundQuiverPresentation resolved = p;
    resolved.bound = bound;
    return std::make_shared<const Algebra<S>>(build_algebra<S>(resolved, options));
}

template <typename S>
void check_extended_size(const Algebra<S>& b, const NewArrowSet& f, int max_dim)
{
    const int d = b.dim() + tensor_dimension(b, f);
    if (d > max_dim)
        throw ResourceError("extended algebra has dimension " + std::to_string(d) + ", above the cap of " +
                            std::to_string(max_dim));
}

IdentityCheck check(std::string name, long long lhs, long long rhs)
{
    return {std::move(name), lhs, rhs, lhs == rhs};
}

}  // namespace

template <typename S>
DeltaBreakdown delta_formula(const ExtendedAlgebra<S>& ext, const NewArrowSet& f)
{
    const Algebra<S>& b = *ext.base;
    DeltaBreakdown d;
    d.center_term = center(*ext.algebra).dim() - center(b).dim();
    for (const auto& [a, omega] : enumerate_extended(b, f).pairs)
        d.extended_sum += omega.dim;
    ExtHomTable<S> table(ext.base);
    for (const RelativePath& gamma : enumerate_relative_paths(b, f))
        d.ext_hom_sum += gamma.dim * table(source_of(f, gamma), target_of(f, gamma));
    d.delta = d.center_term + d.extended_sum + d.ext_hom_sum;
    return d;
}

template <typename S>
DeltaBreakdown delta_formula(const AlgebraPtr<S>& b, const NewArrowSet& f)
{
    return delta_formula(build_extended_algebra(b, f), f);
}

template <typename S>
DeltaBreakdown single_arrow_delta(const AlgebraPtr<S>& b, const NewArrow& a)
{
    const int e = a.source, f = a.target;
    if (corner_dim(*b, e, f) != 0)
        throw RelativeLoopError("new arrow " + a.id + " is a relative loop");
    const ExtendedAlgebra<S> ext = build_extended_algebra(b, NewArrowSet{a});
    DeltaBreakdown d;
    d.center_term = center(*ext.algebra).dim() - center(*b).dim();
    d.extended_sum = corner_dim(*b, f, e) + corner_dim(*b, f, f) * corner_dim(*b, e, e);
    d.ext_hom_sum = ExtHomTable<S>(b)(e, f);
    d.delta = d.center_term + d.extended_sum + d.ext_hom_sum;
    return d;
}

int acyclic_path_algebra_hh1(const Quiver& q)
{
    if (has_oriented_cycle(q))
        throw CycleError("the quiver has an oriented cycle");
    return connected_components(q) - q.vertex_count() +
           static_cast<int>(parallel_pairs(q, q.vertex_count()).size());
}

template <typename S>
int tensor_dimension(const Algebra<S>& b, const NewArrowSet& f)
{
    int d = 0;
    for (const RelativePath& gamma : enumerate_relative_paths(b, f))
        d += gamma.dim * column_dim(b, target_of(f, gamma)) * row_dim(b, source_of(f, gamma));
    return d;
}

template <typename S>
Analysis analyze(const BoundQuiverPresentation& p, const NewArrowSet& f, const AnalyzeOptions& options)
{
    validate_new_arrows(p.quiver, f);
    Analysis out;
    out.bound = resolve_bound(p, options.build);
    const AlgebraPtr<S> b = build_base<S>(p, out.bound, options.build);
    check_extended_size(*b, f, options.max_dim);
    const ExtendedAlgebra<S> ext = build_extended_algebra(b, f);

    out.dim_b = b->dim();
    out.dim_bf = ext.algebra->dim();
    out.center_b = center(*b).dim();
    out.center_bf = center(*ext.algebra).dim();
    for (const RelativePath& gamma : enumerate_relative_paths(*b, f))
    {
        out.relative_paths.push_back(relative_path_label(f, gamma));
        out.relative_dims.push_back(gamma.dim);
    }
    const ExtendedEnumeration w = enumerate_extended(*b, f);
    for (const ExtendedRelativePath& omega : w.paths)
    {
        out.extended_paths.push_back(extended_path_label(b->vertices(), f, omega));
        out.extended_dims.push_back(omega.dim);
    }
    for (const auto& [a, omega] : w.pairs)
    {
        out.pairs.emplace_back(f[a].id, extended_path_label(b->vertices(), f, omega));
        out.pair_dims.push_back(omega.dim);
    }
    out.delta = delta_formula(ext, f);

    if (options.oracle)
    {
        const Bimodule<S> rb = regular_bimodule(b), rf = regular_bimodule(ext.algebra);
        out.oracle = OracleValues{h1_cohomology_dim(rb, options.limits), h1_cohomology_dim(rf, options.limits),
                                  h1_homology(rb, options.limits), h1_homology(rf, options.limits)};
    }
    return out;
}

bool VerificationReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

template <typename S>
VerificationReport verify(const BoundQuiverPresentation& p, const NewArrowSet& f, const VerifyOptions& options)
{
    validate_new_arrows(p.quiver, f);
    VerificationReport r;
    r.bound = resolve_bound(p, options.build);
    const AlgebraPtr<S> b = build_base<S>(p, r.bound, options.build);
    check_extended_size(*b, f, options.max_dim);
    const ExtendedAlgebra<S> ext = build_extended_algebra(b, f);
    const Algebra<S>& bf = *ext.algebra;

    r.dim_b = b->dim();
    r.dim_bf = bf.dim();
    r.center_b = center(*b).dim();
    r.center_bf = center(bf).dim();
    r.delta = delta_formula(ext, f);

    const Bimodule<S> rb = regular_bimodule(b), rf = regular_bimodule(ext.algebra);
    const Bimodule<S> bf_over_b = restrict_bimodule(rf, b, ext.inclusion);
    r.hh1_b = h1_cohomology_dim(rb, options.limits);
    r.hh1_bf = h1_cohomology_dim(rf, options.limits);
    r.h1_b_bf = h1_cohomology_dim(bf_over_b, options.limits);
    r.relative_h1 = relative_h1_dim(ext, rf);
    r.hh1_homology_b = h1_homology(rb, options.limits);
    r.hh1_homology_bf = h1_homology(rf, options.limits);
    r.h1_homology_b_bf = h1_homology(bf_over_b, options.limits);

    const std::vector<RelativePath> relative = enumerate_relative_paths(*b, f);
    int ext_sum = 0;
    for (const RelativePath& gamma : relative)
        ext_sum += gamma.dim * ext1_dim(injective_at(b, source_of(f, gamma)), projective_at(b, target_of(f, gamma)));
    int omega_sum = 0;
    for (const auto& [a, omega] : enumerate_extended(*b, f).pairs)
        omega_sum += omega.dim;

    auto& c = r.checks;
    c.push_back(check("delta formula vs oracle difference", r.delta.delta, r.hh1_bf - r.hh1_b));
    if (f.size() == 1)
        c.push_back(check("single-arrow delta", single_arrow_delta(b, f[0]).delta, r.delta.delta));
    c.push_back(check("HH^1(B_F) = H^1(B_F|B, B_F) + H^1(B, B_F)", r.hh1_bf, r.relative_h1 + r.h1_b_bf));
    c.push_back(check("H^1(B, B_F) = HH^1(B) + sum dim(gamma) ext^1", r.h1_b_bf, r.hh1_b + ext_sum));
    c.push_back(check("Hom(N, B_F) = sum over F//W_* of dim(omega)",
                      hom_bimodule_dim(ext.arrows_bimodule, bf_over_b), omega_sum));
    c.push_back(check("HH_1(B_F) = HH_1(B)", r.hh1_homology_bf, r.hh1_homology_b));
    c.push_back(check("HH_1(B_F) = H_1(B, B_F)", r.hh1_homology_bf, r.h1_homology_b_bf));
    c.push_back(check("H_1(B, B_F) = HH_1(B)", r.h1_homology_b_bf, r.hh1_homology_b));
    c.push_back(check("dim B_F = dim B + tensor sum", r.dim_bf, r.dim_b + tensor_dimension(*b, f)));
    c.push_back(check("B associative", is_associative(*b), 1));
    c.push_back(check("B_F associative", is_associative(bf), 1));
    c.push_back(check("B_F idempotents", has_graded_idempotents(bf), 1));

    if (options.rebuild)
    {
        const BoundQuiverPresentation qf = extended_presentation(p, r.bound, f);
        const Algebra<S> rebuilt = build_algebra<S>(qf, options.build);
        c.push_back(check("dim kQ_F/<I> = dim B_F", rebuilt.dim(), r.dim_bf));
        const int nv = b->vertex_count();
        int agree = 0;
        for (int y = 0; y < nv; ++y)
            for (int x = 0; x < nv; ++x)
                agree += corner_dim(rebuilt, y, x) == corner_dim(bf, y, x);
        c.push_back(check("corners of kQ_F/<I> and B_F agree", agree, nv * nv));
        c.push_back(check("kQ_F/<I> associative", is_associative(rebuilt), 1));
    }
    if (options.duality)
    {
        c.push_back(check("H^1(B, B) = H_1(B, B')", r.hh1_b, h1_homology(dual_bimodule(rb), options.limits)));
        c.push_back(check("H^1(B_F, B_F) = H_1(B_F, B_F')", r.hh1_bf, h1_homology(dual_bimodule(rf), options.limits)));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Random instances

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p)
{
    return std::bernoulli_distribution(p)(rng);
}

}  // namespace

Quiver random_acyclic_quiver(std::mt19937_64& rng, int max_vertices, int max_arrows)
{
    const int n = uniform(rng, 1, max_vertices);
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);

    Quiver q;
    for (int i = 0; i < n; ++i)
        q.add_vertex("v" + std::to_string(i + 1));
    if (n == 1)
        return q;
    const int m = uniform(rng, 0, max_arrows);
    for (int k = 0; k < m; ++k)
    {
        int i = uniform(rng, 0, n - 1), j = uniform(rng, 0, n - 2);
        if (j >= i)
            ++j;
        if (i > j)
            std::swap(i, j);
        q.add_arrow("b" + std::to_string(k + 1), order[i], order[j]);
    }
    return q;
}

InstanceSampler::InstanceSampler(std::uint64_t seed, SamplerOptions options) : rng_(seed), options_(options) {}

Instance InstanceSampler::next()
{
    for (int attempt = 0; attempt < options_.max_attempts; ++attempt)
        if (std::optional<Instance> inst = candidate())
            return *inst;
    throw Error("instance generation exhausted after " + std::to_string(options_.max_attempts) + " attempts");
}

std::optional<Instance> InstanceSampler::candidate()
{
    Instance inst;
    BoundQuiverPresentation& p = inst.presentation;
    Quiver& q = p.quiver;
    if (coin(rng_, 0.4))
    {
        // A linear chain plus a few shortcuts, for longer nonzero paths.
        const int n = uniform(rng_, 2, options_.max_vertices);
        for (int i = 0; i < n; ++i)
            q.add_vertex("v" + std::to_string(i + 1));
        for (int i = 0; i + 1 < n; ++i)
            q.add_arrow("b" + std::to_string(i + 1), i, i + 1);
        const int extra = uniform(rng_, 0, 2);
        for (int k = 0; k < extra; ++k)
        {
            const int i = uniform(rng_, 0, n - 2);
            q.add_arrow("c" + std::to_string(k + 1), i, uniform(rng_, i + 1, n - 1));
        }
    }
    else
        q = random_acyclic_quiver(rng_, options_.max_vertices, options_.max_arrows);
    if (q.vertex_count() < 2)
        return std::nullopt;
    if (coin(rng_, 0.2))
    {
        const int v = uniform(rng_, 0, q.vertex_count() - 1);
        const int loop = q.add_arrow("l", v, v);
        p.relations.push_back({{{Rational(1), make_path(q, {loop, loop})}}});
    }

    std::vector<Path> candidates;
    for (Path& path : enumerate_paths(q, 4))
        if (path.length() >= 2)
            candidates.push_back(std::move(path));
    static const Rational coefficients[] = {Rational(-1), Rational(1, 2), Rational(2), Rational(-1, 2)};
    const int relations = candidates.empty() ? 0 : uniform(rng_, 0, 2);
    for (int k = 0; k < relations; ++k)
    {
        const Path& first = candidates[uniform(rng_, 0, static_cast<int>(candidates.size()) - 1)];
        Relation r{{{Rational(1), first}}};
        if (coin(rng_, 0.5))
        {
            std::vector<const Path*> parallel;
            for (const Path& other : candidates)
                if (other != first && source(q, other) == source(q, first) && target(q, other) == target(q, first))
                    parallel.push_back(&other);
            if (!parallel.empty())
                r.terms.emplace_back(coefficients[uniform(rng_, 0, 3)],
                                     *parallel[uniform(rng_, 0, static_cast<int>(parallel.size()) - 1)]);
        }
        p.relations.push_back(std::move(r));
    }

    BuildOptions build;
    build.bound_search_cap = options_.bound_cap;
    try
    {
        p.bound = find_admissible_bound<Rational>(p, build);
    }
    catch (const AdmissibilityError&)
    {
        return std::nullopt;
    }
    catch (const ResourceError&)
    {
        return std::nullopt;
    }
    const auto b = std::make_shared<const Algebra<Rational>>(build_algebra<Rational>(p, build));
    if (b->dim() > options_.max_dim_b)
        return std::nullopt;

    const int nv = q.vertex_count();
    const int count = uniform(rng_, 1, options_.max_new_arrows);
    for (int k = 0; k < count; ++k)
    {
        const int s = uniform(rng_, 0, nv - 1);
        int t = uniform(rng_, 0, nv - 2);
        if (t >= s)
            ++t;
        inst.new_arrows.push_back({"a" + std::to_string(k + 1), s, t});
    }
    if (has_relative_cycle(*b, inst.new_arrows))
        return std::nullopt;
    if (b->dim() + tensor_dimension(*b, inst.new_arrows) > options_.max_dim_bf)
        return std::nullopt;
    const BoundQuiverPresentation qf = extended_presentation(p, p.bound, inst.new_arrows);
    if (count_paths(qf.quiver, qf.bound, options_.max_rebuild_paths) > options_.max_rebuild_paths)
        return std::nullopt;
    return inst;
}

#define QHH_INSTANTIATE_FORMULA(S)                                                                   \
    template DeltaBreakdown delta_formula<S>(const ExtendedAlgebra<S>&, const NewArrowSet&);         \
    template DeltaBreakdown delta_formula<S>(const AlgebraPtr<S>&, const NewArrowSet&);              \
    template DeltaBreakdown single_arrow_delta<S>(const AlgebraPtr<S>&, const NewArrow&);            \
    template int tensor_dimension<S>(const Algebra<S>&, const NewArrowSet&);                         \
    template Analysis analyze<S>(const BoundQuiverPresentation&, const NewArrowSet&, const AnalyzeOptions&); \
    template VerificationReport verify<S>(const BoundQuiverPresentation&, const NewArrowSet&, const VerifyOptions&);

QHH_INSTANTIATE_FORMULA(Rational)
QHH_INSTANTIATE_FORMULA(ModP)

}  // namespace qhh
