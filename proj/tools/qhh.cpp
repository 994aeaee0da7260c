// qhh: first Hochschild invariants of bound quiver algebras with new arrows.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qhh/errors.hpp"
#include "qhh/formula.hpp"
#include "qhh/instance.hpp"
#include "qhh/report.hpp"

namespace {

enum Exit { kPass = 0, kIdentityFailure = 1, kInputError = 2, kResourceCap = 3 };

// Empty means the rationals.
std::optional<long long> parse_field(const std::string& text)
{
    if (text.empty() || text == "Q")
        return std::nullopt;
    const long long p = std::stoll(text);
    if (p < 2 || p > 4294967295LL || !qhh::is_prime(static_cast<std::uint64_t>(p)))
        throw qhh::Error("--field must be Q or a prime below 2^32, got '" + text + "'");
    return p;
}

template <typename Fn>
int with_field(std::optional<long long> prime, Fn&& fn)
{
    if (!prime)
        return fn(qhh::Rational{});
    qhh::ModP::set_modulus(*prime);
    return fn(qhh::ModP{});
}

int run_analyze(const std::string& file, bool json, bool oracle, int max_dim, const std::string& field)
{
    const qhh::InstanceFile inst = qhh::read_instance(file);
    const std::optional<long long> prime = field.empty() ? inst.prime : parse_field(field);
    qhh::AnalyzeOptions options;
    options.oracle = oracle;
    options.max_dim = max_dim;
    return with_field(prime, [&](auto scalar) {
        using S = decltype(scalar);
        const qhh::Analysis a = qhh::analyze<S>(inst.presentation, inst.new_arrows, options);
        if (json)
            std::cout << qhh::to_json(a).dump(2) << '\n';
        else
            std::cout << qhh::to_text(a);
        if (a.oracle && a.oracle->hh1_bf - a.oracle->hh1_b != a.delta.delta)
            return kIdentityFailure;
        return kPass;
    });
}

int run_verify(const std::string& file, const std::vector<std::uint64_t>& random, bool json, int max_dim)
{
    qhh::VerifyOptions options;
    options.max_dim = max_dim;
    nlohmann::json reports = nlohmann::json::array();
    bool all = true;
    auto emit = [&](const qhh::VerificationReport& r, const std::string& source) {
        all = all && r.passed();
        if (json)
        {
            nlohmann::json j = qhh::to_json(r);
            j["instance"] = source;
            reports.push_back(std::move(j));
        }
        else
            std::cout << qhh::to_text(r) << '\n';
    };

    if (!random.empty())
    {
        qhh::InstanceSampler sampler(random[0]);
        for (std::uint64_t i = 0; i < random[1]; ++i)
        {
            const qhh::Instance inst = sampler.next();
            const std::string source = qhh::serialize_instance({std::nullopt, inst.presentation, inst.new_arrows});
            qhh::VerificationReport r = qhh::verify<qhh::Rational>(inst.presentation, inst.new_arrows, options);
            r.description = "random seed " + std::to_string(random[0]) + " #" + std::to_string(i + 1);
            if (!json)
                std::cout << source;
            emit(r, source);
        }
    }
    else
    {
        const qhh::InstanceFile inst = qhh::read_instance(file);
        with_field(inst.prime, [&](auto scalar) {
            using S = decltype(scalar);
            qhh::VerificationReport r = qhh::verify<S>(inst.presentation, inst.new_arrows, options);
            r.description = file;
            emit(r, qhh::serialize_instance(inst));
            return 0;
        });
    }
    if (json)
        std::cout << nlohmann::json{{"reports", reports}, {"passed", all}}.dump(2) << '\n';
    else if (!random.empty())
        std::cout << (all ? "all instances passed" : "some instances FAILED") << '\n';
    return all ? kPass : kIdentityFailure;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"First Hochschild (co)homology of bound quiver algebras with new arrows"};
    app.require_subcommand(1);

    std::string file, field;
    bool json = false, oracle = false;
    int max_dim = 64;
    std::vector<std::uint64_t> random;

    CLI::App* analyze = app.add_subcommand("analyze", "Evaluate the Delta formula for one instance");
    analyze->add_option("file", file, "instance file (.qa)")->required();
    analyze->add_flag("--json", json, "emit JSON");
    analyze->add_flag("--oracle", oracle, "also compute HH^1 and HH_1 by brute force");
    analyze->add_option("--max-dim", max_dim, "cap on dim B_F")->capture_default_str();
    analyze->add_option("--field", field, "Q or a prime; overrides the file");

    CLI::App* verify = app.add_subcommand("verify", "Check every identity against the brute-force oracles");
    auto* file_opt = verify->add_option("file", file, "instance file (.qa)");
    auto* random_opt = verify->add_option("--random", random, "seed and instance count")->expected(2);
    file_opt->excludes(random_opt);
    verify->add_flag("--json", json, "emit JSON");
    verify->add_option("--max-dim", max_dim, "cap on dim B_F")->capture_default_str();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? kPass : kInputError;
    }

    try
    {
        if (*analyze)
            return run_analyze(file, json, oracle, max_dim, field);
        if (file.empty() && random.empty())
        {
            std::cerr << "error: verify needs a file or --random <seed> <count>\n";
            return kInputError;
        }
        return run_verify(file, random, json, max_dim);
    }
    catch (const qhh::ResourceError& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kResourceCap;
    }
    catch (const qhh::ParseError& e)
    {
        std::cerr << file << ':' << e.what() << '\n';
        return kInputError;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        const std::string what = e.what();
        return what.rfind("instance generation exhausted", 0) == 0 ? kResourceCap : kInputError;
    }
}
