// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact integer equalities; the only tolerances are the wall-clock limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "instances.hpp"
#include "qhh/errors.hpp"
#include "qhh/formula.hpp"
#include "qhh/repr.hpp"

using namespace qhh;
using testing::build;

namespace {

constexpr std::uint64_t kSeed = 20240917;
constexpr int kRandomInstances = 30;
constexpr int kRandomQuivers = 40;
constexpr int kDualityInstances = 12;

struct Outcome
{
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok)
        {
            if (pass)
                detail << "failed: ";
            else
                detail << "; ";
            detail << what;
        }
        pass = pass && ok;
    }
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(int number, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body)
{
    Outcome out;
    const auto start = Clock::now();
    try
    {
        body(out);
    }
    catch (const std::exception& e)
    {
        out.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    out.require(seconds < limit_seconds, "runtime " + std::to_string(seconds) + " s over the limit");
    std::printf("%s  criterion %d: %s  [%.2f s < %.0f s] %s\n", out.pass ? "PASS" : "FAIL", number, title, seconds,
                limit_seconds, out.detail.str().c_str());
    std::fflush(stdout);
    failures += !out.pass;
}

const IdentityCheck& find_check(const VerificationReport& r, const std::string& name)
{
    for (const IdentityCheck& c : r.checks)
        if (c.name == name)
            return c;
    throw std::logic_error("report lacks the check '" + name + "'");
}

struct Sample
{
    Instance instance;
    VerificationReport report;
};

std::vector<Sample> samples;

void build_samples()
{
    InstanceSampler sampler(kSeed);
    for (int i = 0; i < kRandomInstances; ++i)
    {
        Instance inst = sampler.next();
        VerifyOptions options;
        options.duality = i < kDualityInstances;
        VerificationReport r = verify<Rational>(inst.presentation, inst.new_arrows, options);
        samples.push_back({std::move(inst), std::move(r)});
    }
}

}  // namespace

int main()
{
    criterion(1, "Kronecker plus a parallel arrow: HH^1(B_F) = 8, Delta = 5 = 0 + 3 + 2, perfect bracket", 1.0,
              [](Outcome& out) {
                  const BoundQuiverPresentation p = testing::kronecker();
                  const auto b = build<Rational>(p);
                  const NewArrowSet f = testing::arrow_e_to_f(p);
                  const ExtendedAlgebra<Rational> ext = build_extended_algebra(b, f);
                  const Bimodule<Rational> reg = regular_bimodule(ext.algebra);
                  const CohomologySlice<Rational> hh1 = h1_cohomology(reg);
                  const DeltaBreakdown d = delta_formula(ext, f);
                  const int hh1_b = h1_cohomology_dim(regular_bimodule(b));
                  const int derived = derived_subalgebra_dim(reg, hh1);
                  out.detail << "HH^1(B_F) = " << hh1.dim << ", Delta = (" << d.center_term << ", " << d.extended_sum
                             << ", " << d.ext_hom_sum << ") = " << d.delta << ", derived dim " << derived << " ";
                  out.require(hh1.dim == 8, "dim HH^1(B_F) != 8");
                  out.require(d == DeltaBreakdown{0, 3, 2, 5}, "breakdown != (0, 3, 2)");
                  out.require(hh1.dim - hh1_b == d.delta, "oracle difference != Delta");
                  out.require(derived == 8, "derived subalgebra dim != 8");
              });

    criterion(2, "zero-relation chains with middle length 1, 2, 3: HH^1(B_F) = 1, dim Z(B_F) = 1, 2, 2", 5.0,
              [](Outcome& out) {
                  const int centers[] = {1, 2, 2};
                  for (int middle = 1; middle <= 3; ++middle)
                  {
                      const BoundQuiverPresentation p = testing::chain_with_zero_relations(middle);
                      const auto b = build<Rational>(p);
                      const NewArrowSet f = testing::arrow_e_to_f(p);
                      const ExtendedAlgebra<Rational> ext = build_extended_algebra(b, f);
                      const int hh1 = h1_cohomology_dim(regular_bimodule(ext.algebra));
                      const int z = center(*ext.algebra).dim();
                      const int delta = delta_formula(ext, f).delta;
                      const int hh1_b = h1_cohomology_dim(regular_bimodule(b));
                      out.detail << "(HH^1 " << hh1 << ", Z " << z << ") ";
                      out.require(hh1 == 1, "HH^1(B_F) != 1 at middle length " + std::to_string(middle));
                      out.require(z == centers[middle - 1], "dim Z(B_F) wrong at middle length " +
                                                                std::to_string(middle));
                      out.require(hh1_b + delta == hh1, "Delta mismatch at middle length " + std::to_string(middle));
                  }
              });

    criterion(3, "acyclic path algebras: c - |Q_0| + |Q_1//Q_*| equals the derivation oracle", 30.0,
              [](Outcome& out) {
                  std::mt19937_64 rng(kSeed);
                  int checked = 0, max_vertices = 0, max_arrows = 0;
                  for (int i = 0; i < kRandomQuivers; ++i)
                  {
                      const Quiver q = random_acyclic_quiver(rng, 6, 8);
                      max_vertices = std::max(max_vertices, q.vertex_count());
                      max_arrows = std::max(max_arrows, q.arrow_count());
                      const auto b = build<Rational>(testing::path_algebra(q));
                      const int formula = acyclic_path_algebra_hh1(q);
                      const int oracle = h1_cohomology_dim(regular_bimodule(b));
                      out.require(formula == oracle, "quiver " + std::to_string(i) + ": " + std::to_string(formula) +
                                                         " vs " + std::to_string(oracle));
                      ++checked;
                  }
                  out.detail << checked << " quivers, up to " << max_vertices << " vertices and " << max_arrows
                             << " arrows ";
                  out.require(checked >= 25 && max_vertices <= 6 && max_arrows <= 8, "sample outside the class");
              });

    criterion(4, "Delta formula equals HH^1(B_F) - HH^1(B) on random instances", 120.0, [](Outcome& out) {
        build_samples();
        int max_b = 0, max_f = 0, max_bf = 0;
        for (std::size_t i = 0; i < samples.size(); ++i)
        {
            const auto& [inst, r] = samples[i];
            max_b = std::max(max_b, r.dim_b);
            max_bf = std::max(max_bf, r.dim_bf);
            max_f = std::max(max_f, static_cast<int>(inst.new_arrows.size()));
            out.require(r.delta.delta == r.hh1_bf - r.hh1_b, "instance " + std::to_string(i));
        }
        out.detail << samples.size() << " instances, dim B <= " << max_b << ", |F| <= " << max_f << ", dim B_F <= "
                   << max_bf << " ";
        out.require(samples.size() >= 25 && max_b <= 12 && max_f <= 3, "sample outside the class");
    });

    criterion(5, "HH_1(B_F) = HH_1(B) on the same instances", 10.0, [](Outcome& out) {
        int nonzero = 0;
        for (std::size_t i = 0; i < samples.size(); ++i)
        {
            const VerificationReport& r = samples[i].report;
            nonzero += r.hh1_homology_b != 0;
            out.require(r.hh1_homology_bf == r.hh1_homology_b, "instance " + std::to_string(i));
        }
        out.require(!samples.empty(), "no instances");
        out.detail << samples.size() << " instances, " << nonzero << " with HH_1 != 0 ";
    });

    criterion(6, "exact sequence, decomposition of H^1(B, B_F) and Hom(N, B_F) count hold exactly", 60.0,
              [](Outcome& out) {
                  std::vector<std::pair<BoundQuiverPresentation, NewArrowSet>> fixed;
                  fixed.emplace_back(testing::kronecker(), testing::arrow_e_to_f(testing::kronecker()));
                  for (int m = 1; m <= 3; ++m)
                  {
                      const BoundQuiverPresentation p = testing::chain_with_zero_relations(m);
                      fixed.emplace_back(p, testing::arrow_e_to_f(p));
                  }
                  std::vector<VerificationReport> reports;
                  for (const Sample& s : samples)
                      reports.push_back(s.report);
                  for (const auto& [p, f] : fixed)
                      reports.push_back(verify<Rational>(p, f));
                  for (std::size_t i = 0; i < reports.size(); ++i)
                  {
                      const VerificationReport& r = reports[i];
                      out.require(r.hh1_bf == r.relative_h1 + r.h1_b_bf, "exact sequence, instance " +
                                                                              std::to_string(i));
                      out.require(find_check(r, "H^1(B, B_F) = HH^1(B) + sum dim(gamma) ext^1").pass,
                                  "decomposition, instance " + std::to_string(i));
                      out.require(find_check(r, "Hom(N, B_F) = sum over F//W_* of dim(omega)").pass,
                                  "Hom count, instance " + std::to_string(i));
                  }
                  out.detail << reports.size() << " instances ";
              });

    criterion(7, "relative loop rejected by name; dim B_F matches the tensor sum and the kQ_F rebuild", 30.0,
              [](Outcome& out) {
                  const BoundQuiverPresentation rev = testing::reversed();
                  try
                  {
                      build_extended_algebra(build<Rational>(rev), testing::arrow_e_to_f(rev));
                      out.require(false, "relative loop accepted");
                  }
                  catch (const InfiniteError& e)
                  {
                      const std::string what = e.what();
                      out.require(what.find("relative loop a") != std::string::npos, "message lacks the loop name");
                      out.detail << "\"" << what << "\", ";
                  }
                  for (std::size_t i = 0; i < samples.size(); ++i)
                  {
                      const VerificationReport& r = samples[i].report;
                      out.require(find_check(r, "dim B_F = dim B + tensor sum").pass, "tensor sum, " +
                                                                                          std::to_string(i));
                      out.require(find_check(r, "dim kQ_F/<I> = dim B_F").pass, "rebuild dim, " + std::to_string(i));
                      out.require(find_check(r, "corners of kQ_F/<I> and B_F agree").pass, "rebuild corners, " +
                                                                                               std::to_string(i));
                  }
                  out.detail << samples.size() << " accepted instances ";
              });

    criterion(8, "associativity of every algebra, rank-nullity, H^1(A, X) = H_1(A, X') duality", 60.0,
              [](Outcome& out) {
                  int algebras = 0, matrices = 0, dualities = 0;
                  for (std::size_t i = 0; i < samples.size(); ++i)
                  {
                      const VerificationReport& r = samples[i].report;
                      for (const char* name : {"B associative", "B_F associative", "kQ_F/<I> associative"})
                      {
                          out.require(find_check(r, name).pass, std::string(name) + ", " + std::to_string(i));
                          ++algebras;
                      }
                      for (const IdentityCheck& c : r.checks)
                          if (c.name.rfind("H^1(", 0) == 0 && c.name.find("H_1(") != std::string::npos)
                          {
                              out.require(c.pass, c.name + ", " + std::to_string(i));
                              ++dualities;
                          }

                      // Rank-nullity on the action matrices of B_F.
                      const auto b = build<Rational>(samples[i].instance.presentation);
                      const ExtendedAlgebra<Rational> ext = build_extended_algebra(b, samples[i].instance.new_arrows);
                      for (int k = 0; k < ext.algebra->dim(); ++k)
                          for (const Matrix<Rational>& m :
                               {ext.algebra->left_multiplication(k), ext.algebra->right_multiplication(k)})
                          {
                              out.require(rank<Rational>(m) + nullspace<Rational>(m).dim() == m.cols(),
                                          "rank-nullity, " + std::to_string(i));
                              ++matrices;
                          }
                  }
                  out.detail << algebras << " algebras, " << matrices << " matrices, " << dualities
                             << " duality checks ";
                  out.require(dualities >= 10, "fewer than 10 duality checks");
              });

    std::printf("%s: %d of 8 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
