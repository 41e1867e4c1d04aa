#include "dgkit/format.hpp"

#include <fstream>
#include <sstream>

#include "dgkit/sweedler.hpp"

namespace dgkit {

namespace {

const char* kHeader = "dgkit-presentation";

struct Line {
    int no = 0;
    std::string text;
};

struct Token {
    std::string text;
    int col = 0;
};

/// Splits on `sep`, trimming blanks; columns are 1-based positions in the line.
std::vector<Token> split(const std::string& s, char sep, int col0)
{
    std::vector<Token> out;
    std::size_t start = 0;
    while (true) {
        std::size_t end = s.find(sep, start);
        std::string piece = s.substr(start, end == std::string::npos ? std::string::npos : end - start);
        std::size_t a = piece.find_first_not_of(" \t");
        std::size_t b = piece.find_last_not_of(" \t");
        if (a == std::string::npos)
            out.push_back({"", col0 + static_cast<int>(start)});
        else
            out.push_back({piece.substr(a, b - a + 1), col0 + static_cast<int>(start + a)});
        if (end == std::string::npos)
            break;
        start = end + 1;
    }
    return out;
}

std::vector<Token> words(const std::string& s, int col0)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            ++i;
        if (i == s.size())
            break;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t')
            ++j;
        out.push_back({s.substr(i, j - i), col0 + static_cast<int>(i)});
        i = j;
    }
    return out;
}

int parse_int(const Token& t, int line, const char* what)
{
    try {
        std::size_t pos = 0;
        int v = std::stoi(t.text, &pos);
        if (pos == t.text.size())
            return v;
    }
    catch (const std::exception&) {
    }
    throw ParseError(line, t.col, std::string("expected an integer ") + what + ", got \"" + t.text + "\"");
}

struct Term {
    Scalar coef;
    Token name;
};

/// "coef name, coef name, ..." or "0".
std::vector<Term> parse_terms(const Token& body, int line, const Field& F)
{
    std::vector<Term> out;
    if (body.text == "0")
        return out;
    if (body.text.empty())
        throw ParseError(line, body.col, "expected terms \"coef name, ...\" or 0");
    for (const Token& t : split(body.text, ',', body.col)) {
        auto parts = words(t.text, t.col);
        if (parts.size() != 2)
            throw ParseError(line, t.col, "expected \"coef name\", got \"" + t.text + "\"");
        Scalar c;
        try {
            c = parse_scalar(parts[0].text, F);
        }
        catch (const std::exception& e) {
            throw ParseError(line, parts[0].col, e.what());
        }
        out.push_back({c, parts[1]});
    }
    return out;
}

bool valid_name(const std::string& n)
{
    return !n.empty() && n.find_first_of(" \t,:|#[]") == std::string::npos;
}

std::string format_scalar(const Scalar& s) { return s.to_string(); }

class Parser {
public:
    explicit Parser(const std::string& text) { read(text); }

    PresentationFile run()
    {
        header();
        if (p_.kind == PresentationKind::map) {
            declare("source", p_.basis, basis_);
            declare("target", p_.target, target_);
            images();
        }
        else if (has("generators")) {
            if (p_.kind != PresentationKind::algebra)
                fail_section("generators", "only algebras can be presented by generators");
            declare("generators", p_.generators, gens_);
            relations();
            generator_differential();
            generator_augmentation();
        }
        else {
            declare("basis", p_.basis, basis_);
            if (p_.kind == PresentationKind::algebra) {
                p_.unit = single_vector("unit", 0);
                p_.augmentation = single_vector("augmentation", 0);
                products();
            }
            else {
                p_.counit = single_vector("counit", 0);
                p_.atom = single_vector("atom", 0);
                coproducts();
            }
            differential();
        }
        for (const auto& [name, no] : section_line_)
            if (!used_.count(name))
                throw ParseError(no, 1, "section [" + name + "] does not apply to this kind of presentation");
        return p_;
    }

private:
    PresentationFile p_;
    std::vector<Line> header_;
    std::map<std::string, std::vector<Line>> sections_;
    std::map<std::string, int> section_line_;
    std::set<std::string> used_;
    std::map<std::string, int> basis_, gens_, target_;

    void read(const std::string& text)
    {
        std::istringstream in(text);
        std::string raw;
        int no = 0;
        std::string current;
        while (std::getline(in, raw)) {
            ++no;
            if (!raw.empty() && raw.back() == '\r')
                raw.pop_back();
            auto hash = raw.find('#');
            std::string s = hash == std::string::npos ? raw : raw.substr(0, hash);
            if (s.find_first_not_of(" \t") == std::string::npos)
                continue;
            std::size_t a = s.find_first_not_of(" \t");
            if (s[a] == '[') {
                auto close = s.find(']', a);
                if (close == std::string::npos || s.find_first_not_of(" \t", close + 1) != std::string::npos)
                    throw ParseError(no, static_cast<int>(a) + 1, "malformed section header");
                current = s.substr(a + 1, close - a - 1);
                static const std::set<std::string> known{"basis",        "unit",       "augmentation", "products",
                                                         "coproduct",    "counit",     "atom",         "differential",
                                                         "generators",   "relations",  "source",       "target",
                                                         "images"};
                if (!known.count(current))
                    throw ParseError(no, static_cast<int>(a) + 2, "unknown section [" + current + "]");
                if (section_line_.count(current))
                    throw ParseError(no, static_cast<int>(a) + 1, "duplicate section [" + current + "]");
                section_line_[current] = no;
                sections_[current];
                continue;
            }
            if (current.empty())
                header_.push_back({no, s});
            else
                sections_[current].push_back({no, s});
        }
    }

    bool has(const std::string& s) const { return sections_.count(s) > 0; }
    const std::vector<Line>& section(const std::string& s)
    {
        used_.insert(s);
        static const std::vector<Line> none;
        auto it = sections_.find(s);
        return it == sections_.end() ? none : it->second;
    }
    [[noreturn]] void fail_section(const std::string& s, const std::string& why)
    {
        throw ParseError(section_line_.at(s), 1, why);
    }

    void header()
    {
        if (header_.empty())
            throw ParseError(1, 1, std::string("missing \"") + kHeader + " 1\" header");
        auto first = words(header_[0].text, 1);
        if (first.size() != 2 || first[0].text != kHeader)
            throw ParseError(header_[0].no, 1, std::string("expected \"") + kHeader + " <version>\"");
        p_.version = parse_int(first[1], header_[0].no, "version");
        if (p_.version != 1)
            throw ParseError(header_[0].no, first[1].col, "unsupported schema version " + first[1].text);
        bool have_kind = false;
        std::set<std::string> seen;
        for (std::size_t i = 1; i < header_.size(); ++i) {
            const Line& l = header_[i];
            auto t = words(l.text, 1);
            if (t.size() != 2)
                throw ParseError(l.no, 1, "expected \"key value\"");
            if (!seen.insert(t[0].text).second)
                throw ParseError(l.no, 1, "duplicate key " + t[0].text);
            if (t[0].text == "field") {
                try {
                    p_.field = Field::parse(t[1].text);
                }
                catch (const std::exception& e) {
                    throw ParseError(l.no, t[1].col, e.what());
                }
            }
            else if (t[0].text == "kind") {
                have_kind = true;
                if (t[1].text == "algebra")
                    p_.kind = PresentationKind::algebra;
                else if (t[1].text == "coalgebra")
                    p_.kind = PresentationKind::coalgebra;
                else if (t[1].text == "map")
                    p_.kind = PresentationKind::map;
                else
                    throw ParseError(l.no, t[1].col, "kind must be algebra, coalgebra or map");
            }
            else if (t[0].text == "truncation") {
                try {
                    p_.truncation = Truncation::parse(t[1].text);
                }
                catch (const std::exception& e) {
                    throw ParseError(l.no, t[1].col, e.what());
                }
            }
            else if (t[0].text == "degree")
                p_.degree = parse_int(t[1], l.no, "degree");
            else
                throw ParseError(l.no, 1, "unknown key " + t[0].text);
        }
        if (!have_kind)
            throw ParseError(header_[0].no, 1, "missing \"kind\"");
    }

    void declare(const std::string& name, std::vector<BasisElement>& out, std::map<std::string, int>& index)
    {
        for (const Line& l : section(name)) {
            auto t = words(l.text, 1);
            if (t.size() < 2 || t.size() > 3)
                throw ParseError(l.no, 1, "expected \"name degree [weight]\"");
            if (!valid_name(t[0].text) || (name == "generators" && (t[0].text == "1" || t[0].text.find('.') !=
                                                                                           std::string::npos)))
                throw ParseError(l.no, t[0].col, "invalid name \"" + t[0].text + "\"");
            BasisElement e{t[0].text, parse_int(t[1], l.no, "degree"), 1, {}};
            if (t.size() == 3)
                e.weight = parse_int(t[2], l.no, "weight");
            if (!index.emplace(e.name, static_cast<int>(out.size())).second)
                throw ParseError(l.no, t[0].col, "duplicate name \"" + e.name + "\"");
            out.push_back(e);
        }
    }

    int lookup(const std::map<std::string, int>& index, const Token& t, int line)
    {
        auto it = index.find(t.text);
        if (it == index.end())
            throw UnknownName(line, t.col, "unknown name \"" + t.text + "\"");
        return it->second;
    }

    /// "lhs : body" split.
    std::pair<Token, Token> colon(const Line& l)
    {
        auto parts = split(l.text, ':', 1);
        if (parts.size() != 2)
            throw ParseError(l.no, 1, "expected \"... : terms\"");
        return {parts[0], parts[1]};
    }

    Vec basis_vector(const Token& body, int line, std::optional<int> degree, const std::vector<BasisElement>& decl,
                     const std::map<std::string, int>& index)
    {
        Vec v;
        for (const Term& t : parse_terms(body, line, p_.field)) {
            int i = lookup(index, t.name, line);
            if (degree && decl[i].degree != *degree)
                throw DegreeMismatch(line, t.name.col,
                                     "\"" + t.name.text + "\" has degree " + std::to_string(decl[i].degree) +
                                         ", expected " + std::to_string(*degree));
            v.add(i, t.coef);
        }
        return v;
    }

    std::optional<Vec> single_vector(const std::string& name, int degree)
    {
        if (!has(name)) {
            used_.insert(name);
            return std::nullopt;
        }
        const auto& lines = section(name);
        if (lines.size() != 1)
            fail_section(name, "[" + name + "] holds exactly one vector");
        const Line& l = lines[0];
        return basis_vector({l.text, 1}, l.no, degree, p_.basis, basis_);
    }

    void products()
    {
        for (const Line& l : section("products")) {
            auto [lhs, body] = colon(l);
            auto t = words(lhs.text, lhs.col);
            if (t.size() != 2)
                throw ParseError(l.no, lhs.col, "expected \"a b : terms\"");
            int a = lookup(basis_, t[0], l.no), b = lookup(basis_, t[1], l.no);
            if (p_.products.count({a, b}))
                throw ParseError(l.no, 1, "duplicate product");
            p_.products[{a, b}] =
                basis_vector(body, l.no, p_.basis[a].degree + p_.basis[b].degree, p_.basis, basis_);
        }
    }

    void coproducts()
    {
        for (const Line& l : section("coproduct")) {
            auto [lhs, body] = colon(l);
            int c = lookup(basis_, lhs, l.no);
            if (p_.coproducts.count(c))
                throw ParseError(l.no, 1, "duplicate coproduct");
            Vec2 v;
            for (const Term& t : parse_terms(body, l.no, p_.field)) {
                auto pair = split(t.name.text, '|', t.name.col);
                if (pair.size() != 2)
                    throw ParseError(l.no, t.name.col, "expected a|b");
                int a = lookup(basis_, pair[0], l.no), b = lookup(basis_, pair[1], l.no);
                if (p_.basis[a].degree + p_.basis[b].degree != p_.basis[c].degree)
                    throw DegreeMismatch(l.no, t.name.col, "term " + t.name.text + " has the wrong degree");
                v.add({a, b}, t.coef);
            }
            p_.coproducts[c] = v;
        }
    }

    void differential()
    {
        for (const Line& l : section("differential")) {
            auto [lhs, body] = colon(l);
            int x = lookup(basis_, lhs, l.no);
            if (p_.differential.count(x))
                throw ParseError(l.no, 1, "duplicate differential");
            p_.differential[x] = basis_vector(body, l.no, p_.basis[x].degree - 1, p_.basis, basis_);
        }
    }

    VecN polynomial(const Token& body, int line, std::optional<int>* degree)
    {
        VecN v;
        for (const Term& t : parse_terms(body, line, p_.field)) {
            Word w;
            int d = 0;
            if (t.name.text != "1")
                for (const Token& g : split(t.name.text, '.', t.name.col)) {
                    int i = lookup(gens_, g, line);
                    w.push_back(i);
                    d += p_.generators[i].degree;
                }
            if (degree->has_value() && **degree != d)
                throw DegreeMismatch(line, t.name.col,
                                     "term " + t.name.text + " has degree " + std::to_string(d) + ", expected " +
                                         std::to_string(**degree));
            *degree = d;
            v.add(w, t.coef);
        }
        return v;
    }

    void relations()
    {
        for (const Line& l : section("relations")) {
            std::optional<int> deg;
            p_.relations.push_back(polynomial({l.text, 1}, l.no, &deg));
        }
    }

    void generator_differential()
    {
        for (const Line& l : section("differential")) {
            auto [lhs, body] = colon(l);
            int g = lookup(gens_, lhs, l.no);
            if (p_.generator_differential.count(g))
                throw ParseError(l.no, 1, "duplicate differential");
            std::optional<int> deg = p_.generators[g].degree - 1;
            p_.generator_differential[g] = polynomial(body, l.no, &deg);
        }
    }

    void generator_augmentation()
    {
        if (!has("augmentation")) {
            used_.insert("augmentation");
            return;
        }
        std::vector<Scalar> eps(p_.generators.size(), p_.field.zero());
        for (const Line& l : section("augmentation")) {
            auto [lhs, body] = colon(l);
            int g = lookup(gens_, lhs, l.no);
            try {
                eps[g] = parse_scalar(body.text, p_.field);
            }
            catch (const std::exception& e) {
                throw ParseError(l.no, body.col, e.what());
            }
            if (!eps[g].is_zero() && p_.generators[g].degree != 0)
                throw DegreeMismatch(l.no, lhs.col, "only degree 0 generators can have nonzero augmentation");
        }
        p_.generator_augmentation = eps;
    }

    void images()
    {
        for (const Line& l : section("images")) {
            auto [lhs, body] = colon(l);
            int x = lookup(basis_, lhs, l.no);
            if (p_.images.count(x))
                throw ParseError(l.no, 1, "duplicate image");
            p_.images[x] = basis_vector(body, l.no, p_.basis[x].degree + p_.degree, p_.target, target_);
        }
    }
};

void write_decl(std::ostringstream& out, const std::vector<BasisElement>& decl)
{
    for (const auto& e : decl) {
        out << e.name << ' ' << e.degree;
        if (e.weight != 1)
            out << ' ' << e.weight;
        out << '\n';
    }
}

std::string terms(const Vec& v, const std::vector<BasisElement>& decl)
{
    if (v.is_zero())
        return "0";
    std::string s;
    for (const auto& [i, c] : v)
        s += (s.empty() ? "" : ", ") + format_scalar(c) + " " + decl[i].name;
    return s;
}

std::string word_name(const Word& w, const std::vector<BasisElement>& gens)
{
    if (w.empty())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i)
        s += (i ? "." : "") + gens[w[i]].name;
    return s;
}

std::string poly(const VecN& v, const std::vector<BasisElement>& gens)
{
    if (v.is_zero())
        return "0";
    std::string s;
    for (const auto& [w, c] : v)
        s += (s.empty() ? "" : ", ") + format_scalar(c) + " " + word_name(w, gens);
    return s;
}

SpacePtr space_of(const Field& F, const std::vector<BasisElement>& decl, const std::optional<Truncation>& t)
{
    int cap = 1;
    for (const auto& e : decl)
        cap = std::max(cap, e.weight);
    Truncation w = t ? *t : hull(decl, cap);
    return std::make_shared<GradedSpace>(F, w, decl);
}

/// Declaration index -> carrier index.
std::vector<int> positions(const GradedSpace& S, const std::vector<BasisElement>& decl)
{
    std::vector<int> r;
    for (const auto& e : decl)
        r.push_back(*S.find(e.name));
    return r;
}

Vec remap(const Vec& v, const std::vector<int>& pos)
{
    Vec r;
    for (const auto& [i, c] : v)
        r.add(pos[i], c);
    return r;
}

std::vector<BasisElement> plain(const GradedSpace& S)
{
    std::vector<BasisElement> r;
    for (int i = 0; i < S.dim(); ++i) {
        if (!valid_name(S.name(i)))
            throw std::invalid_argument("basis name \"" + S.name(i) + "\" cannot be written to a presentation");
        r.push_back({S.name(i), S.degree(i), S.weight(i), {}});
    }
    return r;
}

std::pair<std::string, std::string> split_preset(const std::string& ref)
{
    auto open = ref.find('(');
    if (open != std::string::npos) {
        if (ref.back() != ')')
            throw std::invalid_argument("malformed preset \"" + ref + "\"");
        return {ref.substr(0, open), ref.substr(open + 1, ref.size() - open - 2)};
    }
    auto colon = ref.find(':');
    if (colon != std::string::npos)
        return {ref.substr(0, colon), ref.substr(colon + 1)};
    return {ref, ""};
}

int int_arg(const std::string& arg, int fallback, const std::string& preset)
{
    if (arg.empty())
        return fallback;
    try {
        std::size_t pos = 0;
        int v = std::stoi(arg, &pos);
        if (pos == arg.size())
            return v;
    }
    catch (const std::exception&) {
    }
    throw std::invalid_argument("preset " + preset + " expects an integer argument, got \"" + arg + "\"");
}

}  // namespace

PresentationFile parse_presentation(const std::string& text)
{
    return Parser(text).run();
}

PresentationFile load_presentation(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str());
}

std::string serialize(const PresentationFile& p)
{
    std::ostringstream out;
    out << kHeader << ' ' << p.version << '\n';
    out << "field " << p.field.to_string() << '\n';
    out << "kind "
        << (p.kind == PresentationKind::algebra ? "algebra" : p.kind == PresentationKind::coalgebra ? "coalgebra" : "map")
        << '\n';
    if (p.truncation)
        out << "truncation " << p.truncation->to_string() << '\n';
    if (p.kind == PresentationKind::map) {
        out << "degree " << p.degree << '\n';
        out << "[source]\n";
        write_decl(out, p.basis);
        out << "[target]\n";
        write_decl(out, p.target);
        out << "[images]\n";
        for (const auto& [x, v] : p.images)
            out << p.basis[x].name << " : " << terms(v, p.target) << '\n';
        return out.str();
    }
    if (p.presented()) {
        out << "[generators]\n";
        write_decl(out, p.generators);
        out << "[relations]\n";
        for (const auto& r : p.relations)
            out << poly(r, p.generators) << '\n';
        out << "[differential]\n";
        for (const auto& [g, v] : p.generator_differential)
            out << p.generators[g].name << " : " << poly(v, p.generators) << '\n';
        if (p.generator_augmentation) {
            out << "[augmentation]\n";
            for (std::size_t g = 0; g < p.generators.size(); ++g)
                out << p.generators[g].name << " : " << format_scalar((*p.generator_augmentation)[g]) << '\n';
        }
        return out.str();
    }
    out << "[basis]\n";
    write_decl(out, p.basis);
    auto vec_section = [&](const char* name, const std::optional<Vec>& v) {
        if (v)
            out << '[' << name << "]\n" << terms(*v, p.basis) << '\n';
    };
    if (p.kind == PresentationKind::algebra) {
        vec_section("unit", p.unit);
        vec_section("augmentation", p.augmentation);
        out << "[products]\n";
        for (const auto& [ab, v] : p.products)
            out << p.basis[ab.first].name << ' ' << p.basis[ab.second].name << " : " << terms(v, p.basis) << '\n';
    }
    else {
        vec_section("counit", p.counit);
        vec_section("atom", p.atom);
        out << "[coproduct]\n";
        for (const auto& [c, v] : p.coproducts) {
            out << p.basis[c].name << " : ";
            if (v.is_zero())
                out << "0";
            bool first = true;
            for (const auto& [q, k] : v) {
                out << (first ? "" : ", ") << format_scalar(k) << ' ' << p.basis[q.first].name << '|'
                    << p.basis[q.second].name;
                first = false;
            }
            out << '\n';
        }
    }
    out << "[differential]\n";
    for (const auto& [x, v] : p.differential)
        out << p.basis[x].name << " : " << terms(v, p.basis) << '\n';
    return out.str();
}

PresentedAlgebra build_presented(const PresentationFile& p)
{
    if (!p.presented())
        throw std::invalid_argument("not a presentation by generators");
    PresentedAlgebra P;
    P.field = p.field;
    if (p.truncation)
        P.trunc = *p.truncation;
    P.generators = p.generators;
    P.relations = p.relations;
    P.differential.resize(p.generators.size());
    for (const auto& [g, v] : p.generator_differential)
        P.differential[g] = v;
    P.augmentation = p.generator_augmentation;
    return P;
}

DgAlgebra build_algebra(const PresentationFile& p)
{
    if (p.kind != PresentationKind::algebra)
        throw std::invalid_argument("presentation is not an algebra");
    if (p.presented())
        return normal_forms(build_presented(p)).algebra;
    auto S = space_of(p.field, p.basis, p.truncation);
    auto pos = positions(*S, p.basis);
    ProductTable t;
    for (const auto& [ab, v] : p.products)
        t[{pos[ab.first], pos[ab.second]}] = remap(v, pos);
    std::vector<Vec> d(S->dim());
    for (const auto& [x, v] : p.differential)
        d[pos[x]] = remap(v, pos);
    std::optional<Vec> unit, aug;
    if (p.unit)
        unit = remap(*p.unit, pos);
    if (p.augmentation)
        aug = remap(*p.augmentation, pos);
    return algebra_from_table(S, std::move(t), unit, aug, std::move(d));
}

DgCoalgebra build_coalgebra(const PresentationFile& p)
{
    if (p.kind != PresentationKind::coalgebra)
        throw std::invalid_argument("presentation is not a coalgebra");
    auto S = space_of(p.field, p.basis, p.truncation);
    auto pos = positions(*S, p.basis);
    std::vector<Vec2> table(S->dim());
    for (const auto& [c, v] : p.coproducts)
        for (const auto& [q, k] : v)
            table[pos[c]].add({pos[q.first], pos[q.second]}, k);
    std::vector<Vec> d(S->dim());
    for (const auto& [x, v] : p.differential)
        d[pos[x]] = remap(v, pos);
    std::optional<Vec> counit, atom;
    if (p.counit)
        counit = remap(*p.counit, pos);
    if (p.atom)
        atom = remap(*p.atom, pos);
    return coalgebra_from_table(S, std::move(table), counit, atom, std::move(d));
}

GradedMap build_map(const PresentationFile& p)
{
    if (p.kind != PresentationKind::map)
        throw std::invalid_argument("presentation is not a map");
    auto S = space_of(p.field, p.basis, std::nullopt);
    auto T = space_of(p.field, p.target, std::nullopt);
    auto ps = positions(*S, p.basis), pt = positions(*T, p.target);
    GradedMap m = GradedMap::zero(S, T, p.degree);
    for (const auto& [x, v] : p.images)
        m.columns[ps[x]] = remap(v, pt);
    return m;
}

PresentationFile describe(const DgAlgebra& A)
{
    PresentationFile p;
    p.field = A.field();
    p.kind = PresentationKind::algebra;
    p.truncation = A.space().window();
    p.basis = plain(A.space());
    p.products = product_table(A);
    for (int i = 0; i < A.space().dim(); ++i)
        if (!A.dg.d[i].is_zero())
            p.differential[i] = A.dg.d[i];
    p.unit = A.unit;
    p.augmentation = A.augmentation;
    return p;
}

PresentationFile describe(const DgCoalgebra& C)
{
    PresentationFile p;
    p.field = C.field();
    p.kind = PresentationKind::coalgebra;
    p.truncation = C.space().window();
    p.basis = plain(C.space());
    for (int i = 0; i < C.space().dim(); ++i) {
        Vec2 v = C.comul(i).value;
        if (!v.is_zero())
            p.coproducts[i] = v;
        if (!C.dg.d[i].is_zero())
            p.differential[i] = C.dg.d[i];
    }
    p.counit = C.counit;
    p.atom = C.atom;
    return p;
}

PresentationFile describe(const PresentedAlgebra& P)
{
    PresentationFile p;
    p.field = P.field;
    p.kind = PresentationKind::algebra;
    p.truncation = P.trunc;
    for (const auto& g : P.generators)
        p.generators.push_back({g.name, g.degree, g.weight, {}});
    p.relations = P.relations;
    for (std::size_t g = 0; g < P.differential.size(); ++g)
        if (!P.differential[g].is_zero())
            p.generator_differential[static_cast<int>(g)] = P.differential[g];
    p.generator_augmentation = P.augmentation;
    return p;
}

std::vector<std::string> preset_names()
{
    return {"mc", "dual-numbers", "diagonal-coalgebra(n)", "primitive-coalgebra(degree)", "matrix-coalgebra(n)",
            "free-algebra(x:1,y:2)"};
}

bool is_preset(const std::string& ref)
{
    static const std::set<std::string> names{"mc",          "dual-numbers",      "diagonal-coalgebra",
                                             "primitive-coalgebra", "matrix-coalgebra", "free-algebra"};
    auto open = ref.find_first_of("(:");
    return names.count(ref.substr(0, open)) > 0;
}

PresentationFile preset(const std::string& ref, const Field& field, std::optional<Truncation> trunc)
{
    auto [name, arg] = split_preset(ref);
    if (name == "mc") {
        PresentedAlgebra P;
        P.field = field;
        P.trunc = trunc ? *trunc : Truncation{-6, 0, 6};
        P.generators.push_back({"u", -1, 1, {}});
        P.differential.push_back(VecN(Word{0, 0}, field.of(-1)));
        P.augmentation = std::vector<Scalar>{field.zero()};
        return describe(P);
    }
    if (name == "free-algebra") {
        PresentedAlgebra P;
        P.field = field;
        P.trunc = trunc ? *trunc : Truncation{};
        for (const Token& t : split(arg.empty() ? "x:1" : arg, ',', 1)) {
            auto nd = split(t.text, ':', 1);
            if (nd.size() != 2 || !valid_name(nd[0].text) || nd[0].text == "1" ||
                nd[0].text.find('.') != std::string::npos)
                throw std::invalid_argument("free-algebra expects generators as name:degree, got \"" + t.text + "\"");
            P.generators.push_back({nd[0].text, int_arg(nd[1].text, 0, name), 1, {}});
        }
        P.differential.resize(P.generators.size());
        P.augmentation = std::vector<Scalar>(P.generators.size(), field.zero());
        for (std::size_t g = 0; g < P.generators.size(); ++g)
            if (P.generators[g].degree == 0)
                throw std::invalid_argument("free-algebra generators of degree 0 would give an infinite "
                                            "augmentation ideal in one degree; use nonzero degrees");
        return describe(P);
    }
    if (name == "dual-numbers") {
        auto S = std::make_shared<GradedSpace>(field, Truncation{0, 0, 1},
                                               std::vector<BasisElement>{{"1", 0, 0, {}}, {"e", 0, 1, {}}});
        int one = *S->find("1");
        ProductTable t;
        for (int i = 0; i < 2; ++i) {
            t[{one, i}] = S->basis_vector(i);
            t[{i, one}] = S->basis_vector(i);
        }
        return describe(algebra_from_table(S, t, Vec(one, field.one()), Vec(one, field.one()), std::vector<Vec>(2)));
    }
    if (name == "diagonal-coalgebra") {
        int n = int_arg(arg, 2, name);
        if (n < 1)
            throw std::invalid_argument("diagonal-coalgebra needs n >= 1");
        // Grouplikes g1..gn in the basis e = g1, c_i = g_i - e.
        std::vector<BasisElement> b{{"e", 0, 0, {}}};
        for (int i = 2; i <= n; ++i)
            b.push_back({n == 2 ? std::string("c") : "c" + std::to_string(i), 0, 1, {}});
        auto S = std::make_shared<GradedSpace>(field, Truncation{0, 0, 1}, b);
        int e = *S->find("e");
        std::vector<Vec2> t(S->dim());
        t[e] = Vec2({e, e}, field.one());
        for (int c = 0; c < S->dim(); ++c)
            if (c != e)
                t[c] = Vec2({c, c}, field.one()) + Vec2({c, e}, field.one()) + Vec2({e, c}, field.one());
        return describe(
            coalgebra_from_table(S, t, Vec(e, field.one()), Vec(e, field.one()), std::vector<Vec>(S->dim())));
    }
    if (name == "primitive-coalgebra")
        return describe(primitive_coalgebra(int_arg(arg, 1, name), field));
    if (name == "matrix-coalgebra")
        return describe(finite_dual(matrix_algebra(int_arg(arg, 2, name), field)));
    throw std::invalid_argument("unknown preset \"" + ref + "\"");
}

}  // namespace dgkit
