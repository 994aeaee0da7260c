#include "qhh/report.hpp"

#include <sstream>

namespace qhh {

namespace {

nlohmann::json labelled(const std::vector<std::string>& labels, const std::vector<int>& dims)
{
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < labels.size(); ++i)
        out.push_back({{"path", labels[i]}, {"dim", dims[i]}});
    return out;
}

void list(std::ostream& out, const char* title, const std::vector<std::string>& labels, const std::vector<int>& dims)
{
    out << title << ":";
    if (labels.empty())
        out << " (none)";
    for (std::size_t i = 0; i < labels.size(); ++i)
        out << (i ? ", " : " ") << labels[i] << " [" << dims[i] << "]";
    out << '\n';
}

nlohmann::json delta_json(const DeltaBreakdown& d)
{
    return {{"center_term", d.center_term},
            {"extended_sum", d.extended_sum},
            {"ext_hom_sum", d.ext_hom_sum},
            {"delta", d.delta}};
}

void delta_text(std::ostream& out, const DeltaBreakdown& d)
{
    out << "Delta = " << d.delta << " = " << d.center_term << " (centers) + " << d.extended_sum << " (F//W_*) + "
        << d.ext_hom_sum << " (ext - hom)\n";
}

}  // namespace

std::string to_text(const Analysis& a)
{
    std::ostringstream out;
    out << "bound N = " << a.bound << '\n'
        << "dim B = " << a.dim_b << ", dim B_F = " << a.dim_bf << '\n'
        << "dim Z(B) = " << a.center_b << ", dim Z(B_F) = " << a.center_bf << '\n';
    list(out, "R_*", a.relative_paths, a.relative_dims);
    list(out, "W_*", a.extended_paths, a.extended_dims);
    std::vector<std::string> pairs;
    for (const auto& [arrow, omega] : a.pairs)
        pairs.push_back("(" + arrow + ", " + omega + ")");
    list(out, "F//W_*", pairs, a.pair_dims);
    delta_text(out, a.delta);
    if (a.oracle)
    {
        const OracleValues& o = *a.oracle;
        out << "oracle: dim HH^1(B) = " << o.hh1_b << ", dim HH^1(B_F) = " << o.hh1_bf << ", difference "
            << o.hh1_bf - o.hh1_b << (o.hh1_bf - o.hh1_b == a.delta.delta ? " (matches)" : " (MISMATCH)") << '\n'
            << "oracle: dim HH_1(B) = " << o.hh1_homology_b << ", dim HH_1(B_F) = " << o.hh1_homology_bf << '\n';
    }
    return out.str();
}

nlohmann::json to_json(const Analysis& a)
{
    nlohmann::json pairs = nlohmann::json::array();
    for (std::size_t i = 0; i < a.pairs.size(); ++i)
        pairs.push_back({{"arrow", a.pairs[i].first}, {"path", a.pairs[i].second}, {"dim", a.pair_dims[i]}});
    nlohmann::json out = {{"bound", a.bound},
                          {"dim_b", a.dim_b},
                          {"dim_bf", a.dim_bf},
                          {"center_b", a.center_b},
                          {"center_bf", a.center_bf},
                          {"relative_paths", labelled(a.relative_paths, a.relative_dims)},
                          {"extended_paths", labelled(a.extended_paths, a.extended_dims)},
                          {"pairs", pairs},
                          {"delta", delta_json(a.delta)}};
    if (a.oracle)
        out["oracle"] = {{"hh1_b", a.oracle->hh1_b},
                         {"hh1_bf", a.oracle->hh1_bf},
                         {"hh1_homology_b", a.oracle->hh1_homology_b},
                         {"hh1_homology_bf", a.oracle->hh1_homology_bf}};
    return out;
}

std::string to_text(const VerificationReport& r)
{
    std::ostringstream out;
    if (!r.description.empty())
        out << "== " << r.description << '\n';
    out << "bound N = " << r.bound << ", dim B = " << r.dim_b << ", dim B_F = " << r.dim_bf << ", dim Z(B) = "
        << r.center_b << ", dim Z(B_F) = " << r.center_bf << '\n';
    delta_text(out, r.delta);
    out << "dim HH^1(B) = " << r.hh1_b << ", dim HH^1(B_F) = " << r.hh1_bf << ", dim H^1(B, B_F) = " << r.h1_b_bf
        << ", dim H^1(B_F|B, B_F) = " << r.relative_h1 << '\n'
        << "dim HH_1(B) = " << r.hh1_homology_b << ", dim HH_1(B_F) = " << r.hh1_homology_bf
        << ", dim H_1(B, B_F) = " << r.h1_homology_b_bf << '\n';
    for (const IdentityCheck& c : r.checks)
        out << (c.pass ? "  pass  " : "  FAIL  ") << c.name << ": " << c.lhs << " vs " << c.rhs << '\n';
    out << (r.passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

nlohmann::json to_json(const VerificationReport& r)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const IdentityCheck& c : r.checks)
        checks.push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
    return {{"description", r.description},
            {"bound", r.bound},
            {"dim_b", r.dim_b},
            {"dim_bf", r.dim_bf},
            {"center_b", r.center_b},
            {"center_bf", r.center_bf},
            {"delta", delta_json(r.delta)},
            {"oracle",
             {{"hh1_b", r.hh1_b},
              {"hh1_bf", r.hh1_bf},
              {"h1_b_bf", r.h1_b_bf},
              {"relative_h1", r.relative_h1},
              {"hh1_homology_b", r.hh1_homology_b},
              {"hh1_homology_bf", r.hh1_homology_bf},
              {"h1_homology_b_bf", r.h1_homology_b_bf}}},
            {"checks", checks},
            {"passed", r.passed()}};
}

}  // namespace qhh
