#pragma once

// Closed formulas for dim HH^1 under arrow addition, and reports that set
// them against the brute-force (co)chain computations.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qhh/algebra.hpp"
#include "qhh/extension.hpp"
#include "qhh/hochschild.hpp"

namespace qhh {

struct DeltaBreakdown
{
    int center_term = 0;   // dim Z(B_F) - dim Z(B)
    int extended_sum = 0;  // sum over F//W_* of dim omega
    int ext_hom_sum = 0;   // sum over R_* of dim gamma * (ext - hom)
    int delta = 0;

    friend bool operator==(const DeltaBreakdown&, const DeltaBreakdown&) = default;
};

/// Delta = dim HH^1(B_F) - dim HH^1(B) in closed form. I_x and P_x are B-modules.
template <typename S>
DeltaBreakdown delta_formula(const ExtendedAlgebra<S>& ext, const NewArrowSet& f);

template <typename S>
DeltaBreakdown delta_formula(const AlgebraPtr<S>& b, const NewArrowSet& f);

/// One new arrow a : e -> f with e B f = 0. Throws RelativeLoopError otherwise.
template <typename S>
DeltaBreakdown single_arrow_delta(const AlgebraPtr<S>& b, const NewArrow& a);

/// dim HH^1(kQ) = c - |Q_0| + |Q_1 // Q_*| for Q without oriented cycles.
int acyclic_path_algebra_hh1(const Quiver& q);

/// sum over gamma in R_* of dim gamma * dim B t(gamma) * dim s(gamma) B
template <typename S>
int tensor_dimension(const Algebra<S>& b, const NewArrowSet& f);

struct OracleValues
{
    int hh1_b = 0;
    int hh1_bf = 0;
    int hh1_homology_b = 0;  // dim HH_1
    int hh1_homology_bf = 0;
};

/// Everything the formulas need, without the brute-force checks.
struct Analysis
{
    int bound = 0;
    int dim_b = 0;
    int dim_bf = 0;
    int center_b = 0;
    int center_bf = 0;
    std::vector<std::string> relative_paths;                  // labels, with dims below
    std::vector<int> relative_dims;
    std::vector<std::string> extended_paths;                  // W_*
    std::vector<int> extended_dims;
    std::vector<std::pair<std::string, std::string>> pairs;  // F // W_*: (arrow, omega)
    std::vector<int> pair_dims;
    DeltaBreakdown delta;
    std::optional<OracleValues> oracle;
};

struct AnalyzeOptions
{
    bool oracle = false;
    /// Cap on dim B_F.
    int max_dim = 64;
    BuildOptions build;
    CochainLimits limits;
};

template <typename S>
Analysis analyze(const BoundQuiverPresentation& p, const NewArrowSet& f, const AnalyzeOptions& options = {});

struct IdentityCheck
{
    std::string name;
    long long lhs = 0;
    long long rhs = 0;
    bool pass = false;
};

struct VerificationReport
{
    std::string description;
    int bound = 0;
    int dim_b = 0;
    int dim_bf = 0;
    int center_b = 0;
    int center_bf = 0;
    DeltaBreakdown delta;
    int hh1_b = 0;
    int hh1_bf = 0;
    int h1_b_bf = 0;       // H^1(B, B_F)
    int relative_h1 = 0;   // H^1(B_F | B, B_F)
    int hh1_homology_b = 0;
    int hh1_homology_bf = 0;
    int h1_homology_b_bf = 0;
    std::vector<IdentityCheck> checks;

    bool passed() const;
};

struct VerifyOptions
{
    /// Rebuild B_F as kQ_F / <I> and compare dimensions and corners.
    bool rebuild = true;
    /// Compare H^1(A, A) with H_1(A, A') for A = B and B_F.
    bool duality = true;
    int max_dim = 64;
    BuildOptions build;
    CochainLimits limits;
};

template <typename S>
VerificationReport verify(const BoundQuiverPresentation& p, const NewArrowSet& f, const VerifyOptions& options = {});

struct Instance
{
    BoundQuiverPresentation presentation;
    NewArrowSet new_arrows;
};

struct SamplerOptions
{
    int max_vertices = 6;
    int max_arrows = 6;
    int max_new_arrows = 3;
    int max_dim_b = 12;
    int max_dim_bf = 26;
    int bound_cap = 8;
    /// Truncated path space allowed for the kQ_F rebuild.
    long long max_rebuild_paths = 4000;
    int max_attempts = 5000;
};

/**
 * Rejection sampler for admissible presentations with new arrows: a random
 * acyclic quiver, sometimes with one loop killed by its square, monomial and
 * two-term relations among short parallel paths, the least admissible bound,
 * and 1..max_new_arrows new arrows without relative cycles.
 */
class InstanceSampler
{
public:
    explicit InstanceSampler(std::uint64_t seed, SamplerOptions options = {});

    /// Throws Error once max_attempts consecutive candidates are rejected.
    Instance next();

private:
    std::optional<Instance> candidate();

    std::mt19937_64 rng_;
    SamplerOptions options_;
};

/// Random quiver without oriented cycles.
Quiver random_acyclic_quiver(std::mt19937_64& rng, int max_vertices = 6, int max_arrows = 8);

}  // namespace qhh
