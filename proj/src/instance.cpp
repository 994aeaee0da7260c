#include "qhh/instance.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "qhh/errors.hpp"

namespace qhh {

namespace {

enum class Kind { Word, Semicolon, Colon, Arrow, Plus, Section };

struct Token
{
    Kind kind;
    std::string text;
    int line;
    int column;
};

[[noreturn]] void fail(const Token& t, const std::string& message)
{
    throw ParseError(t.line, t.column, message);
}

std::vector<Token> tokenize(const std::string& text)
{
    std::vector<Token> out;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::size_t i = 0;
        while (i < line.size())
        {
            const char c = line[i];
            const int col = static_cast<int>(i) + 1;
            if (std::isspace(static_cast<unsigned char>(c)))
            {
                ++i;
                continue;
            }
            if (c == ';' || c == ':' || c == '+')
            {
                out.push_back({c == ';' ? Kind::Semicolon : c == ':' ? Kind::Colon : Kind::Plus, std::string(1, c),
                               line_no, col});
                ++i;
                continue;
            }
            if (c == '-' && i + 1 < line.size() && line[i + 1] == '>')
            {
                out.push_back({Kind::Arrow, "->", line_no, col});
                i += 2;
                continue;
            }
            if (c == '[')
            {
                const auto close = line.find(']', i);
                if (close == std::string::npos)
                    throw ParseError(line_no, col, "unterminated section header");
                out.push_back({Kind::Section, line.substr(i + 1, close - i - 1), line_no, col});
                i = close + 1;
                continue;
            }
            if (c == ']')
                throw ParseError(line_no, col, "unexpected ']'");
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
                   std::string_view(";:+[]").find(line[j]) == std::string_view::npos &&
                   !(line[j] == '-' && j + 1 < line.size() && line[j + 1] == '>'))
                ++j;
            out.push_back({Kind::Word, line.substr(i, j - i), line_no, col});
            i = j;
        }
    }
    return out;
}

using Tokens = std::vector<Token>;

// Splits a section body on ';', dropping empty items.
std::vector<Tokens> split_items(const Tokens& body)
{
    std::vector<Tokens> items(1);
    for (const Token& t : body)
    {
        if (t.kind == Kind::Semicolon)
            items.emplace_back();
        else
            items.back().push_back(t);
    }
    std::erase_if(items, [](const Tokens& item) { return item.empty(); });
    return items;
}

struct ArrowSpec
{
    std::string id;
    Token source;
    Token target;
};

ArrowSpec parse_arrow(const Tokens& item)
{
    if (item.size() != 5 || item[0].kind != Kind::Word || item[1].kind != Kind::Colon ||
        item[2].kind != Kind::Word || item[3].kind != Kind::Arrow || item[4].kind != Kind::Word)
        fail(item.front(), "expected 'id: source -> target'");
    return {item[0].text, item[2], item[4]};
}

int lookup_vertex(const Quiver& q, const Token& t)
{
    if (auto v = q.find_vertex(t.text))
        return *v;
    fail(t, "unknown vertex '" + t.text + "'");
}

Rational parse_rational(const Token& t)
{
    static const std::regex pattern(R"([+-]?[0-9]+(/[0-9]+)?)");
    if (!std::regex_match(t.text, pattern))
        fail(t, "malformed rational '" + t.text + "'");
    using boost::multiprecision::mpz_int;
    const std::string body = t.text[0] == '+' ? t.text.substr(1) : t.text;
    const auto slash = body.find('/');
    const mpz_int num(body.substr(0, slash));
    const mpz_int den(slash == std::string::npos ? std::string("1") : body.substr(slash + 1));
    if (den == 0)
        fail(t, "malformed rational '" + t.text + "': zero denominator");
    return Rational(num, den);
}

Path parse_path(const Quiver& q, const Token& t)
{
    std::vector<int> arrows;
    std::size_t start = 0;
    while (true)
    {
        const auto dot = t.text.find('.', start);
        const std::string id = t.text.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        const auto a = q.find_arrow(id);
        if (!a)
            fail(t, "unknown arrow '" + id + "'");
        arrows.push_back(*a);
        if (dot == std::string::npos)
            break;
        start = dot + 1;
    }
    try
    {
        return make_path(q, arrows);
    }
    catch (const std::invalid_argument&)
    {
        fail(t, "arrows of '" + t.text + "' do not compose");
    }
}

Relation parse_relation(const Quiver& q, const Tokens& item)
{
    Relation r;
    std::vector<Tokens> terms(1);
    for (const Token& t : item)
    {
        if (t.kind == Kind::Plus)
            terms.emplace_back();
        else if (t.kind == Kind::Word)
            terms.back().push_back(t);
        else
            fail(t, "unexpected '" + t.text + "' in relation");
    }
    for (const Tokens& term : terms)
    {
        if (term.empty())
            fail(item.front(), "empty term in relation");
        if (term.size() == 1)
            r.terms.emplace_back(Rational(1), parse_path(q, term[0]));
        else if (term.size() == 2)
            r.terms.emplace_back(parse_rational(term[0]), parse_path(q, term[1]));
        else
            fail(term[2], "expected 'coeff path'");
    }
    try
    {
        validate_relations(q, {r});
    }
    catch (const MalformedRelation& e)
    {
        fail(item.front(), e.what());
    }
    return r;
}

}  // namespace

InstanceFile parse_instance(const std::string& text)
{
    const Tokens tokens = tokenize(text);
    InstanceFile out;
    if (tokens.size() < 2 || tokens[0].kind != Kind::Word || tokens[0].text != "field" ||
        tokens[1].kind != Kind::Word)
        throw ParseError(tokens.empty() ? 1 : tokens[0].line, tokens.empty() ? 1 : tokens[0].column,
                         "expected 'field Q' or 'field <prime>'");
    if (tokens[1].text != "Q")
    {
        static const std::regex digits("[0-9]+");
        if (!std::regex_match(tokens[1].text, digits) || tokens[1].text.size() > 10 ||
            std::stoull(tokens[1].text) > 4294967295ULL || !is_prime(std::stoull(tokens[1].text)))
            fail(tokens[1], "field must be Q or a prime below 2^32, got '" + tokens[1].text + "'");
        out.prime = std::stoll(tokens[1].text);
    }

    static const std::vector<std::string> names = {"vertices", "arrows", "relations", "bound", "new_arrows"};
    std::map<std::string, std::pair<Token, Tokens>> sections;
    std::string current;
    for (std::size_t i = 2; i < tokens.size(); ++i)
    {
        const Token& t = tokens[i];
        if (t.kind == Kind::Section)
        {
            if (std::find(names.begin(), names.end(), t.text) == names.end())
                fail(t, "unknown section [" + t.text + "]");
            if (sections.count(t.text))
                fail(t, "duplicate section [" + t.text + "]");
            sections.emplace(t.text, std::make_pair(t, Tokens{}));
            current = t.text;
        }
        else if (current.empty())
            fail(t, "expected a section header");
        else
            sections.at(current).second.push_back(t);
    }
    for (const std::string& name : names)
        if (!sections.count(name))
        {
            const Token& last = tokens.back();
            fail(last, "missing section [" + name + "]");
        }

    Quiver& q = out.presentation.quiver;
    for (const Token& t : sections.at("vertices").second)
    {
        if (t.kind != Kind::Word)
            fail(t, "expected a vertex id");
        if (q.find_vertex(t.text))
            fail(t, "duplicate vertex '" + t.text + "'");
        q.add_vertex(t.text);
    }
    for (const Tokens& item : split_items(sections.at("arrows").second))
    {
        const ArrowSpec a = parse_arrow(item);
        if (q.find_arrow(a.id))
            fail(item.front(), "duplicate arrow '" + a.id + "'");
        q.add_arrow(a.id, lookup_vertex(q, a.source), lookup_vertex(q, a.target));
    }
    for (const Tokens& item : split_items(sections.at("relations").second))
        out.presentation.relations.push_back(parse_relation(q, item));

    const auto& [bound_header, bound_body] = sections.at("bound");
    if (bound_body.size() > 1)
        fail(bound_body[1], "expected a single bound");
    if (bound_body.size() == 1 && bound_body[0].text != "auto")
    {
        static const std::regex digits("[0-9]{1,6}");
        if (!std::regex_match(bound_body[0].text, digits) || std::stoi(bound_body[0].text) < 2)
            fail(bound_body[0], "bound must be an integer >= 2 or 'auto'");
        out.presentation.bound = std::stoi(bound_body[0].text);
    }

    std::set<std::string> new_ids;
    for (const Tokens& item : split_items(sections.at("new_arrows").second))
    {
        const ArrowSpec a = parse_arrow(item);
        if (q.find_arrow(a.id) || !new_ids.insert(a.id).second)
            fail(item.front(), "duplicate arrow '" + a.id + "'");
        out.new_arrows.push_back({a.id, lookup_vertex(q, a.source), lookup_vertex(q, a.target)});
    }
    return out;
}

InstanceFile read_instance(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, 0, "cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
}

std::string serialize_instance(const InstanceFile& instance)
{
    const Quiver& q = instance.presentation.quiver;
    std::ostringstream out;
    out << "field " << (instance.prime ? std::to_string(*instance.prime) : "Q") << "\n[vertices]";
    for (const std::string& v : q.vertices())
        out << ' ' << v;
    out << "\n[arrows]";
    for (int a = 0; a < q.arrow_count(); ++a)
        out << (a ? " ; " : " ") << q.arrow(a).id << ": " << q.vertex(q.arrow(a).source) << " -> "
            << q.vertex(q.arrow(a).target);
    out << "\n[relations]";
    const auto& relations = instance.presentation.relations;
    for (std::size_t r = 0; r < relations.size(); ++r)
    {
        out << (r ? " ;" : "");
        for (std::size_t k = 0; k < relations[r].terms.size(); ++k)
        {
            const auto& [c, p] = relations[r].terms[k];
            out << (k ? " + " : " ") << to_string(c) << ' ' << path_label(q, p);
        }
    }
    out << "\n[bound] ";
    if (instance.presentation.bound == 0)
        out << "auto";
    else
        out << instance.presentation.bound;
    out << "\n[new_arrows]";
    for (std::size_t a = 0; a < instance.new_arrows.size(); ++a)
    {
        const NewArrow& n = instance.new_arrows[a];
        out << (a ? " ; " : " ") << n.id << ": " << q.vertex(n.source) << " -> " << q.vertex(n.target);
    }
    out << '\n';
    return out.str();
}

}  // namespace qhh
