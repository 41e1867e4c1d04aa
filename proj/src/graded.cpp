#include "dgkit/graded.hpp"

#include <algorithm>
#include <sstream>

namespace dgkit {

Truncation Truncation::parse(const std::string& text)
{
    Truncation t;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> t.degree_min >> c1 >> t.degree_max >> c2 >> t.weight_cap) || c1 != ':' || c2 != ':' ||
        !in.eof())
        throw std::invalid_argument("bad truncation \"" + text + "\", expected dmin:dmax:L");
    if (t.degree_min > t.degree_max || t.weight_cap < 1)
        throw std::invalid_argument("bad truncation \"" + text + "\": need dmin <= dmax and L >= 1");
    return t;
}

std::string Truncation::to_string() const
{
    return std::to_string(degree_min) + ":" + std::to_string(degree_max) + ":" + std::to_string(weight_cap);
}

GradedSpace::GradedSpace(Field field, Truncation window, std::vector<BasisElement> elements,
                         std::set<int> incomplete_degrees)
    : field_(field), window_(window), basis_(std::move(elements)), incomplete_(std::move(incomplete_degrees))
{
    std::stable_sort(basis_.begin(), basis_.end(),
                     [](const BasisElement& a, const BasisElement& b) { return a.degree < b.degree; });
    for (int i = 0; i < dim(); ++i) {
        if (!by_name_.emplace(basis_[i].name, i).second)
            throw std::invalid_argument("duplicate basis name \"" + basis_[i].name + "\"");
        if (!basis_[i].key.empty())
            by_key_.emplace(basis_[i].key, i);
    }
}

std::optional<int> GradedSpace::find(const std::string& name) const
{
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        return std::nullopt;
    return it->second;
}

std::optional<int> GradedSpace::find_key(const std::vector<int>& key) const
{
    auto it = by_key_.find(key);
    if (it == by_key_.end())
        return std::nullopt;
    return it->second;
}

std::vector<int> GradedSpace::in_degree(int n) const
{
    std::vector<int> r;
    auto lo = std::lower_bound(basis_.begin(), basis_.end(), n,
                               [](const BasisElement& b, int d) { return b.degree < d; });
    for (auto it = lo; it != basis_.end() && it->degree == n; ++it)
        r.push_back(static_cast<int>(it - basis_.begin()));
    return r;
}

std::map<int, int> GradedSpace::dims() const
{
    std::map<int, int> r;
    for (const auto& b : basis_)
        ++r[b.degree];
    return r;
}

std::optional<int> GradedSpace::degree_of(const Vec& v) const
{
    std::optional<int> d;
    for (const auto& [i, _] : v) {
        if (d && *d != basis_[i].degree)
            return std::nullopt;
        d = basis_[i].degree;
    }
    return d;
}

std::string GradedSpace::format(const Vec& v) const
{
    if (v.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [i, c] : v) {
        std::string coef = c.pretty();
        bool negative = !coef.empty() && coef[0] == '-' && field_.is_rational();
        if (negative)
            coef = coef.substr(1);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (coef != "1")
            out += coef + " ";
        out += basis_[i].name;
        first = false;
    }
    return out;
}

Truncation hull(const std::vector<BasisElement>& elements, int weight_cap)
{
    Truncation t{0, 0, weight_cap};
    bool first = true;
    for (const auto& b : elements) {
        t.degree_min = first ? b.degree : std::min(t.degree_min, b.degree);
        t.degree_max = first ? b.degree : std::max(t.degree_max, b.degree);
        first = false;
    }
    return t;
}

Vec GradedMap::apply(const Vec& v) const
{
    Vec r;
    for (const auto& [i, c] : v)
        r.add(columns[i], c);
    return r;
}

std::optional<std::string> GradedMap::homogeneity_violation() const
{
    for (int i = 0; i < source->dim(); ++i)
        for (const auto& [j, _] : columns[i])
            if (target->degree(j) != source->degree(i) + degree)
                return "image of " + source->name(i) + " contains " + target->name(j) + " of degree " +
                       std::to_string(target->degree(j));
    return std::nullopt;
}

GradedMap GradedMap::zero(SpacePtr source, SpacePtr target, int degree)
{
    int n = source->dim();
    return GradedMap{std::move(source), std::move(target), degree, std::vector<Vec>(n)};
}

GradedMap GradedMap::identity(SpacePtr space)
{
    GradedMap m{space, space, 0, {}};
    for (int i = 0; i < space->dim(); ++i)
        m.columns.push_back(space->basis_vector(i));
    return m;
}

bool same_basis(const GradedSpace& a, const GradedSpace& b)
{
    if (a.dim() != b.dim())
        return false;
    for (int i = 0; i < a.dim(); ++i)
        if (a.name(i) != b.name(i) || a.degree(i) != b.degree(i))
            return false;
    return true;
}

GradedMap compose(const GradedMap& g, const GradedMap& f)
{
    if (!same_basis(*g.source, *f.target))
        throw std::invalid_argument("compose: target of f differs from source of g");
    GradedMap r{f.source, g.target, f.degree + g.degree, {}};
    for (const auto& col : f.columns)
        r.columns.push_back(g.apply(col));
    return r;
}

bool operator==(const GradedMap& a, const GradedMap& b)
{
    return a.degree == b.degree && same_basis(*a.source, *b.source) && same_basis(*a.target, *b.target) &&
           a.columns == b.columns;
}

std::pair<Scalar, std::pair<int, int>> koszul_swap(const GradedSpace& X, const GradedSpace& Y, int x, int y)
{
    return {X.field().sign(long(X.degree(x)) * Y.degree(y)), {y, x}};
}

Vec2 koszul_swap(const GradedSpace& X, const GradedSpace& Y, const Vec2& v)
{
    Vec2 r;
    for (const auto& [p, c] : v) {
        auto [s, q] = koszul_swap(X, Y, p.first, p.second);
        r.add(q, c * s);
    }
    return r;
}

SpacePtr tensor_space(const GradedSpace& X, const GradedSpace& Y, std::optional<Truncation> window, bool strict)
{
    std::vector<BasisElement> elems;
    for (int i = 0; i < X.dim(); ++i)
        for (int j = 0; j < Y.dim(); ++j)
            elems.push_back({X.name(i) + "|" + Y.name(j), X.degree(i) + Y.degree(j),
                             X.weight(i) + Y.weight(j), {i, j}});
    int cap = std::max(X.window().weight_cap, Y.window().weight_cap);
    if (!window)
        return std::make_shared<GradedSpace>(X.field(), hull(elems, cap), std::move(elems));
    std::vector<BasisElement> kept;
    std::set<int> incomplete;
    for (auto& e : elems) {
        if (window->contains(e.degree)) {
            kept.push_back(std::move(e));
            continue;
        }
        if (strict)
            throw WindowOverflow("tensor basis element " + e.name + " of degree " + std::to_string(e.degree) +
                                 " lies outside window " + window->to_string());
    }
    return std::make_shared<GradedSpace>(X.field(), *window, std::move(kept), std::move(incomplete));
}

Vec from_pairs(const GradedSpace& XY, const Vec2& v, bool* exact)
{
    Vec r;
    for (const auto& [p, c] : v) {
        auto k = XY.find_key({p.first, p.second});
        if (k)
            r.add(*k, c);
        else if (exact)
            *exact = false;
    }
    return r;
}

Vec2 to_pairs(const GradedSpace& XY, const Vec& v)
{
    Vec2 r;
    for (const auto& [i, c] : v)
        r.add({XY.key(i)[0], XY.key(i)[1]}, c);
    return r;
}

SpacePtr hom_space(const GradedSpace& X, const GradedSpace& Y)
{
    std::vector<BasisElement> elems;
    for (int i = 0; i < X.dim(); ++i)
        for (int j = 0; j < Y.dim(); ++j)
            elems.push_back({"[" + X.name(i) + "," + Y.name(j) + "]", Y.degree(j) - X.degree(i), 1, {i, j}});
    int cap = std::max(X.window().weight_cap, Y.window().weight_cap);
    return std::make_shared<GradedSpace>(X.field(), hull(elems, cap), std::move(elems));
}

Vec evaluate(const GradedSpace& hom, const Vec& f, int x)
{
    Vec r;
    for (const auto& [k, c] : f)
        if (hom.key(k)[0] == x)
            r.add(hom.key(k)[1], c);
    return r;
}

Vec hom_element(const GradedSpace& hom, const std::vector<Vec>& images)
{
    Vec r;
    for (int x = 0; x < static_cast<int>(images.size()); ++x)
        for (const auto& [y, c] : images[x]) {
            auto k = hom.find_key({x, y});
            if (!k)
                throw std::invalid_argument("hom_element: pair outside hom space");
            r.add(*k, c);
        }
    return r;
}

namespace {

std::pair<int, int> pair_of(const GradedMap& f, int col)
{
    const auto& k = f.source->key(col);
    return {k[0], k[1]};
}

}  // namespace

Curried lambda1(const GradedSpace& X, const GradedSpace& Y, const GradedMap& f)
{
    auto hom = hom_space(X, *f.target);
    auto Yp = std::make_shared<GradedSpace>(Y);
    GradedMap m = GradedMap::zero(Yp, hom, f.degree);
    for (int col = 0; col < f.source->dim(); ++col) {
        auto [x, y] = pair_of(f, col);
        Scalar s = X.field().sign(long(X.degree(x)) * Y.degree(y));
        for (const auto& [z, c] : f.columns[col])
            m.columns[y].add(*hom->find_key({x, z}), c * s);
    }
    return {hom, m};
}

Curried lambda2(const GradedSpace& X, const GradedSpace& Y, const GradedMap& f)
{
    auto hom = hom_space(Y, *f.target);
    auto Xp = std::make_shared<GradedSpace>(X);
    GradedMap m = GradedMap::zero(Xp, hom, f.degree);
    for (int col = 0; col < f.source->dim(); ++col) {
        auto [x, y] = pair_of(f, col);
        for (const auto& [z, c] : f.columns[col])
            m.columns[x].add(*hom->find_key({y, z}), c);
    }
    return {hom, m};
}

GradedMap uncurry1(const GradedSpace& X, SpacePtr XY, SpacePtr Z, const Curried& c)
{
    GradedMap f{XY, std::move(Z), c.map.degree, std::vector<Vec>(XY->dim())};
    for (int col = 0; col < XY->dim(); ++col) {
        int x = XY->key(col)[0], y = XY->key(col)[1];
        Scalar s = X.field().sign(long(X.degree(x)) * c.map.source->degree(y));
        f.columns[col] = evaluate(*c.hom, c.map.columns[y], x).scaled(s);
    }
    return f;
}

GradedMap uncurry2(SpacePtr XY, SpacePtr Z, const Curried& c)
{
    GradedMap f{XY, std::move(Z), c.map.degree, std::vector<Vec>(XY->dim())};
    for (int col = 0; col < XY->dim(); ++col) {
        int x = XY->key(col)[0], y = XY->key(col)[1];
        f.columns[col] = evaluate(*c.hom, c.map.columns[x], y);
    }
    return f;
}

GradedMap strength_tensor(const GradedMap& f, const GradedMap& g, SpacePtr source, SpacePtr target)
{
    if (!source)
        source = tensor_space(*f.source, *g.source);
    if (!target)
        target = tensor_space(*f.target, *g.target);
    GradedMap r{source, target, f.degree + g.degree, std::vector<Vec>(source->dim())};
    const Field& F = source->field();
    for (int col = 0; col < source->dim(); ++col) {
        int x = source->key(col)[0], y = source->key(col)[1];
        Scalar s = F.sign(long(g.degree) * f.source->degree(x));
        Vec2 img;
        for (const auto& [a, ca] : f.columns[x])
            for (const auto& [b, cb] : g.columns[y])
                img.add({a, b}, ca * cb * s);
        r.columns[col] = from_pairs(*target, img);
    }
    return r;
}

SpacePtr suspend(const GradedSpace& X, int n, bool strict)
{
    std::string prefix = n == 1 ? "s(" : n == -1 ? "s^-1(" : "s^" + std::to_string(n) + "(";
    std::vector<BasisElement> elems;
    std::set<int> incomplete;
    for (int i = 0; i < X.dim(); ++i) {
        int d = X.degree(i) + n;
        std::string name = n == 0 ? X.name(i) : prefix + X.name(i) + ")";
        if (!X.window().contains(d)) {
            if (strict)
                throw WindowOverflow("suspension of " + X.name(i) + " lands in degree " + std::to_string(d) +
                                     " outside window " + X.window().to_string());
            incomplete.insert(d);
            continue;
        }
        elems.push_back({name, d, X.weight(i), {i}});
    }
    for (int d : X.incomplete_degrees())
        incomplete.insert(d + n);
    return std::make_shared<GradedSpace>(X.field(), X.window(), std::move(elems), std::move(incomplete));
}

SpacePtr graded_dual(const GradedSpace& X)
{
    std::vector<BasisElement> elems;
    for (int i = 0; i < X.dim(); ++i)
        elems.push_back({X.name(i) + "*", -X.degree(i), X.weight(i), {i}});
    Truncation w{-X.window().degree_max, -X.window().degree_min, X.window().weight_cap};
    std::set<int> incomplete;
    for (int d : X.incomplete_degrees())
        incomplete.insert(-d);
    return std::make_shared<GradedSpace>(X.field(), w, std::move(elems), std::move(incomplete));
}

GradedMap transpose(const GradedMap& f, SpacePtr source_dual, SpacePtr target_dual)
{
    if (!source_dual)
        source_dual = graded_dual(*f.source);
    if (!target_dual)
        target_dual = graded_dual(*f.target);
    const Field& F = f.source->field();
    GradedMap t = GradedMap::zero(target_dual, source_dual, f.degree);
    for (int x = 0; x < f.source->dim(); ++x)
        for (const auto& [y, c] : f.columns[x]) {
            int phi = *target_dual->find_key({y});
            int xd = *source_dual->find_key({x});
            t.columns[phi].add(xd, c * F.sign(long(f.target->degree(y)) * f.degree));
        }
    return t;
}

GradedMap double_dual_map(SpacePtr X, SpacePtr X_double_dual)
{
    GradedMap m = GradedMap::zero(X, X_double_dual, 0);
    for (int i = 0; i < X->dim(); ++i) {
        // x** is keyed by the index of x* in X*, which is keyed by x.
        for (int j = 0; j < X_double_dual->dim(); ++j)
            if (X_double_dual->name(j) == X->name(i) + "**")
                m.columns[i].add(j, X->field().sign(X->degree(i)));
    }
    return m;
}

Scalar tensor_pairing(const GradedSpace& Xd, const GradedSpace& Yd, int phi, int psi, const GradedSpace& X,
                      int x, int y)
{
    const Field& F = X.field();
    if (Xd.key(phi)[0] != x || Yd.key(psi)[0] != y)
        return F.zero();
    return F.sign(long(X.degree(x)) * Yd.degree(psi));
}

}  // namespace dgkit
