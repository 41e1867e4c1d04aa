#include "dgkit/coalgebra.hpp"

#include <functional>

namespace dgkit {

Coproduct DgCoalgebra::coproduct(const Vec& v) const
{
    Coproduct r;
    for (const auto& [i, c] : v) {
        Coproduct p = comul(i);
        r.value.add(p.value, c);
        r.exact = r.exact && p.exact;
    }
    return r;
}

Scalar DgCoalgebra::count(const Vec& v) const
{
    Scalar r = field().zero();
    if (!counit)
        return r;
    for (const auto& [i, c] : v)
        if (auto e = counit->find(i))
            r += c * *e;
    return r;
}

Vec DgCoalgebra::project(const Vec& v) const
{
    if (!atom)
        throw NotAnAtom("coalgebra has no atom");
    return v - atom->scaled(count(v));
}

Coproduct DgCoalgebra::reduced(const Vec& v) const
{
    Coproduct full = coproduct(project(v));
    Coproduct r;
    r.exact = full.exact;
    for (const auto& [p, c] : full.value) {
        Vec a = project(space().basis_vector(p.first));
        Vec b = project(space().basis_vector(p.second));
        for (const auto& [x, cx] : a)
            for (const auto& [y, cy] : b)
                r.value.add({x, y}, c * cx * cy);
    }
    return r;
}

std::optional<int> DgCoalgebra::atom_index() const
{
    if (!atom || atom->size() != 1 || !atom->begin()->second.is_one())
        return std::nullopt;
    return atom->begin()->first;
}

bool DgCoalgebra::is_normalized() const
{
    auto e = atom_index();
    return e && counit && counit->size() == 1 && counit->find(*e) && counit->find(*e)->is_one();
}

std::vector<int> DgCoalgebra::reduced_basis() const
{
    if (!is_normalized())
        throw std::invalid_argument("coalgebra is not pointed by a basis atom with counit equal to its coordinate");
    std::vector<int> r;
    for (int i = 0; i < space().dim(); ++i)
        if (i != *atom_index())
            r.push_back(i);
    return r;
}

DgCoalgebra coalgebra_from_table(SpacePtr space, std::vector<Vec2> table, std::optional<Vec> counit,
                                 std::optional<Vec> atom, std::vector<Vec> d)
{
    DgCoalgebra C;
    int n = space->dim();
    C.dg = DgSpace{space, std::move(d), std::vector<bool>(n, true)};
    auto shared = std::make_shared<std::vector<Vec2>>(std::move(table));
    C.comul = [shared](int i) { return Coproduct{(*shared)[i], true}; };
    C.counit = std::move(counit);
    C.atom = std::move(atom);
    return C;
}

namespace {

/// Applies Delta to one tensor slot of a word tuple combination.
VecN expand_slot(const DgCoalgebra& C, const VecN& v, std::size_t slot, bool* exact)
{
    VecN r;
    for (const auto& [t, c] : v) {
        Coproduct p = C.comul(t[slot]);
        if (!p.exact && exact)
            *exact = false;
        for (const auto& [q, cq] : p.value) {
            Word u(t.begin(), t.begin() + slot);
            u.push_back(q.first);
            u.push_back(q.second);
            u.insert(u.end(), t.begin() + slot + 1, t.end());
            r.add(u, c * cq);
        }
    }
    return r;
}

VecN pairs_to_tuples(const Vec2& v)
{
    VecN r;
    for (const auto& [p, c] : v)
        r.add(Word{p.first, p.second}, c);
    return r;
}

std::string format_pairs(const GradedSpace& S, const Vec2& v)
{
    if (v.is_zero())
        return "0";
    std::string out;
    for (const auto& [p, c] : v)
        out += (out.empty() ? "" : " + ") + c.pretty() + " " + S.name(p.first) + "|" + S.name(p.second);
    return out;
}

}  // namespace

std::vector<Check> check_coalgebra(const DgCoalgebra& C)
{
    const GradedSpace& S = C.space();
    const Field& F = C.field();
    std::vector<Check> out;

    Check coassoc{"coassociativity"};
    for (int x = 0; x < S.dim(); ++x) {
        bool exact = true;
        Coproduct p = C.comul(x);
        exact = p.exact;
        VecN t = pairs_to_tuples(p.value);
        VecN l = expand_slot(C, t, 0, &exact);
        VecN r = expand_slot(C, t, 1, &exact);
        if (!exact) {
            ++coassoc.skipped;
            continue;
        }
        ++coassoc.checked;
        if (!(l == r))
            coassoc.fail("(D|1)D != (1|D)D on " + S.name(x));
    }
    out.push_back(coassoc);

    if (C.counit) {
        Check counit{"counit laws"};
        for (int x = 0; x < S.dim(); ++x) {
            Coproduct p = C.comul(x);
            if (!p.exact) {
                ++counit.skipped;
                continue;
            }
            ++counit.checked;
            Vec l, r;
            for (const auto& [q, c] : p.value) {
                l.add(q.second, c * C.count(S.basis_vector(q.first)));
                r.add(q.first, c * C.count(S.basis_vector(q.second)));
            }
            if (!(l == S.basis_vector(x)) || !(r == S.basis_vector(x)))
                counit.fail("counit law fails on " + S.name(x));
        }
        for (const auto& [i, c] : *C.counit)
            if (S.degree(i) != 0)
                counit.fail("counit nonzero on " + S.name(i) + " of nonzero degree");
        for (int x = 0; x < S.dim(); ++x)
            if (C.dg.d_exact[x] && !C.count(C.dg.d[x]).is_zero())
                counit.fail("counit of d(" + S.name(x) + ") is nonzero");
        out.push_back(counit);
    }

    Check coleibniz{"co-Leibniz rule"};
    for (int x = 0; x < S.dim(); ++x) {
        Coproduct p = C.comul(x);
        bool exact = p.exact && C.dg.d_exact[x];
        Coproduct dp = C.coproduct(C.dg.d[x]);
        exact = exact && dp.exact;
        Vec2 rhs;
        for (const auto& [q, c] : p.value) {
            if (!C.dg.d_exact[q.first] || !C.dg.d_exact[q.second])
                exact = false;
            for (const auto& [a, ca] : C.dg.d[q.first])
                rhs.add({a, q.second}, c * ca);
            Scalar s = F.sign(S.degree(q.first));
            for (const auto& [b, cb] : C.dg.d[q.second])
                rhs.add({q.first, b}, c * cb * s);
        }
        if (!exact) {
            ++coleibniz.skipped;
            continue;
        }
        ++coleibniz.checked;
        if (!(dp.value == rhs))
            coleibniz.fail("Delta d(" + S.name(x) + ") = " + format_pairs(S, dp.value) + " but (d|1 + 1|d)Delta = " +
                           format_pairs(S, rhs));
    }
    out.push_back(coleibniz);

    out.push_back(check_square_zero(C.dg));

    if (C.atom) {
        Check atom{"atom is grouplike, closed, of counit 1"};
        atom.checked = 1;
        Coproduct p = C.coproduct(*C.atom);
        Vec2 ee;
        for (const auto& [a, ca] : *C.atom)
            for (const auto& [b, cb] : *C.atom)
                ee.add({a, b}, ca * cb);
        if (!(p.value == ee))
            atom.fail("Delta(e) != e|e");
        if (C.counit && !C.count(*C.atom).is_one())
            atom.fail("counit(e) != 1");
        if (!C.dg.differential(*C.atom).is_zero())
            atom.fail("d(e) != 0");
        out.push_back(atom);
    }
    return out;
}

Coproduct deconcatenate(const GradedSpace& W, int i)
{
    Coproduct r;
    Word w = word_of(W, i);
    for (std::size_t k = 0; k <= w.size(); ++k) {
        auto a = find_word(W, slice(w, 0, k));
        auto b = find_word(W, slice(w, k, w.size()));
        if (a && b)
            r.value.add({*a, *b}, W.field().one());
        else
            r.exact = false;
    }
    return r;
}

Coproduct coshuffle(const GradedSpace& letters, const GradedSpace& W, int i)
{
    Coproduct r;
    const Field& F = W.field();
    Word w = word_of(W, i);
    const std::size_t n = w.size();
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        // Letters in the mask move to the left factor, keeping their order.
        Word left, right;
        long sign_exp = 0;
        int right_degree = 0;
        for (std::size_t k = 0; k < n; ++k) {
            int dk = letters.degree(w[k]);
            if (mask >> k & 1) {
                left.push_back(w[k]);
                sign_exp += long(dk) * right_degree;
            }
            else {
                right.push_back(w[k]);
                right_degree += dk;
            }
        }
        auto a = find_word(W, left), b = find_word(W, right);
        if (a && b)
            r.value.add({*a, *b}, F.sign(sign_exp));
        else
            r.exact = false;
    }
    return r;
}

namespace {

FreeCoalgebra word_coalgebra(const DgSpace& X, const Truncation& trunc, const WordStyle& style, bool shuffle)
{
    FreeCoalgebra T;
    T.letters = X.space;
    auto W = word_space(*X.space, trunc, style);
    T.coalgebra.dg = DgSpace::zero(W);
    auto letters = X.space;
    if (shuffle)
        T.coalgebra.comul = [W, letters](int i) { return coshuffle(*letters, *W, i); };
    else
        T.coalgebra.comul = [W](int i) { return deconcatenate(*W, i); };
    if (auto e = find_word(*W, {})) {
        T.coalgebra.counit = W->basis_vector(*e);
        T.coalgebra.atom = W->basis_vector(*e);
    }
    auto dX = X;
    DgSpace D = coextend_coderivation(T,
                                      [dX](const Word& w, bool*) {
                                          return w.size() == 1 ? dX.d[w[0]] : Vec{};
                                      },
                                      -1);
    T.coalgebra.dg = D;
    return T;
}

}  // namespace

FreeCoalgebra tensor_coalgebra(const DgSpace& X, const Truncation& trunc, const WordStyle& style)
{
    return word_coalgebra(X, trunc, style, false);
}

FreeCoalgebra coshuffle_coalgebra(const DgSpace& X, const Truncation& trunc, const WordStyle& style)
{
    return word_coalgebra(X, trunc, style, true);
}

long odd_binomial(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        throw OutOfRange("odd binomial <" + std::to_string(n) + "," + std::to_string(k) + "> out of range");
    std::vector<long> row{1};
    for (int m = 1; m <= n; ++m) {
        std::vector<long> next(m + 1, 0);
        for (int j = 0; j <= m; ++j) {
            if (m % 2 == 0 && j % 2 == 1)
                continue;
            next[j] = (j > 0 ? row[j - 1] : 0) + (j < m ? row[j] : 0);
        }
        row = std::move(next);
    }
    return row[k];
}

VecN iterated_reduced(const DgCoalgebra& C, const Vec& x, int factors, bool* exact)
{
    VecN cur;
    for (const auto& [i, c] : C.project(x))
        cur.add(Word{i}, c);
    for (int f = 1; f < factors && !cur.is_zero(); ++f) {
        VecN next;
        for (const auto& [t, c] : cur) {
            Coproduct p = C.reduced(C.space().basis_vector(t.back()));
            if (!p.exact && exact)
                *exact = false;
            for (const auto& [q, cq] : p.value) {
                Word u(t.begin(), t.end() - 1);
                u.push_back(q.first);
                u.push_back(q.second);
                next.add(u, c * cq);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

RadicalReport radical(const DgCoalgebra& C, std::optional<int> iterations)
{
    const GradedSpace& S = C.space();
    const Field& F = C.field();
    const Truncation& w = S.window();
    RadicalReport R;
    R.iterations = iterations.value_or(std::max(w.degree_max - w.degree_min + 1, w.weight_cap + 1));

    // Weight certificate: reduced coproduct splits weight into positive parts.
    bool graded = true;
    int max_weight = 0;
    for (int x = 0; x < S.dim(); ++x) {
        max_weight = std::max(max_weight, S.weight(x));
        if (C.atom_index() && x == *C.atom_index())
            continue;
        for (const auto& [p, c] : C.reduced(S.basis_vector(x)).value)
            if (S.weight(p.first) < 1 || S.weight(p.second) < 1 ||
                S.weight(p.first) + S.weight(p.second) > S.weight(x))
                graded = false;
    }

    std::map<Word, int> index;
    std::vector<Vec> images;
    for (int x = 0; x < S.dim(); ++x) {
        VecN it = iterated_reduced(C, S.basis_vector(x), R.iterations + 1);
        Vec img;
        for (const auto& [t, c] : it)
            img.add(index.emplace(t, static_cast<int>(index.size())).first->second, c);
        images.push_back(std::move(img));
    }
    R.basis = kernel(images, F);
    R.proven = graded && C.is_normalized() && R.iterations + 1 > max_weight &&
               static_cast<int>(R.basis.size()) == S.dim();

    Echelon span(F);
    for (const auto& b : R.basis)
        span.add(b);
    for (const auto& b : R.basis) {
        if (!span.reduce(C.dg.differential(b)).is_zero())
            R.closed_under_differential = false;
        // Delta(b) in R|R: every left and right slice must lie in R.
        Coproduct p = C.coproduct(b);
        std::map<int, Vec> by_left, by_right;
        for (const auto& [q, c] : p.value) {
            by_left[q.first].add(q.second, c);
            by_right[q.second].add(q.first, c);
        }
        // Contract against a complement: coordinates modulo R must vanish.
        Vec2 reduced_pairs;
        for (const auto& [q, c] : p.value)
            reduced_pairs.add(q, c);
        // Reduce the right factor modulo R, then the left one.
        Vec2 tmp;
        std::map<int, Vec> rights;
        for (const auto& [q, c] : reduced_pairs)
            rights[q.first].add(q.second, c);
        for (auto& [l, v] : rights)
            for (const auto& [r, c] : span.reduce(v))
                tmp.add({l, r}, c);
        std::map<int, Vec> lefts;
        for (const auto& [q, c] : p.value)
            lefts[q.second].add(q.first, c);
        Vec2 tmp2;
        for (auto& [r, v] : lefts)
            for (const auto& [l, c] : span.reduce(v))
                tmp2.add({l, r}, c);
        if (!tmp.is_zero() || !tmp2.is_zero())
            R.closed_under_coproduct = false;
    }
    return R;
}

bool preserved_by(const DgCoalgebra& C, const RadicalReport& R, const std::vector<Vec>& D)
{
    Echelon span(C.field());
    for (const auto& b : R.basis)
        span.add(b);
    for (const auto& b : R.basis) {
        Vec img;
        for (const auto& [i, c] : b)
            img.add(D[i], c);
        if (!span.reduce(img).is_zero())
            return false;
    }
    return true;
}

std::vector<Vec> primitives(const DgCoalgebra& C)
{
    if (!C.atom)
        throw NotAnAtom("coalgebra has no atom");
    const GradedSpace& S = C.space();
    const Field& F = C.field();
    Vec2 ee;
    for (const auto& [a, ca] : *C.atom)
        for (const auto& [b, cb] : *C.atom)
            ee.add({a, b}, ca * cb);
    if (!(C.coproduct(*C.atom).value == ee) || !C.count(*C.atom).is_one() ||
        !C.dg.differential(*C.atom).is_zero())
        throw NotAnAtom("the chosen element is not an atom");
    // Basis of C_- = ker(counit).
    std::vector<Vec> counit_images;
    for (int x = 0; x < S.dim(); ++x)
        counit_images.push_back(C.count(S.basis_vector(x)).is_zero() ? Vec{} : Vec(0, C.count(S.basis_vector(x))));
    std::vector<Vec> minus = kernel(counit_images, F);
    std::map<std::pair<int, int>, int> index;
    std::vector<Vec> images;
    for (const auto& v : minus) {
        Vec img;
        for (const auto& [q, c] : C.reduced(v).value)
            img.add(index.emplace(q, static_cast<int>(index.size())).first->second, c);
        images.push_back(std::move(img));
    }
    std::vector<Vec> result;
    for (const auto& k : kernel(images, F)) {
        Vec v;
        for (const auto& [j, c] : k)
            v.add(minus[j], c);
        result.push_back(std::move(v));
    }
    return result;
}

DgSpace coextend_coderivation(const FreeCoalgebra& T, const WordCochain& phi, int degree)
{
    const GradedSpace& W = T.coalgebra.space();
    const GradedSpace& X = *T.letters;
    const Field& F = W.field();
    DgSpace D = DgSpace::zero(T.coalgebra.dg.space);
    for (int i = 0; i < W.dim(); ++i) {
        Word w = word_of(W, i);
        VecN img;
        bool exact = true;
        int prefix_degree = 0;
        for (std::size_t a = 0; a <= w.size(); ++a) {
            Scalar s = F.sign(long(degree) * prefix_degree);
            for (std::size_t b = a; b <= w.size(); ++b) {
                Vec mid = phi(slice(w, a, b), &exact);
                Word pre = slice(w, 0, a), post = slice(w, b, w.size());
                for (const auto& [l, c] : mid) {
                    Word u = pre;
                    u.push_back(l);
                    u.insert(u.end(), post.begin(), post.end());
                    img.add(u, c * s);
                }
            }
            if (a < w.size())
                prefix_degree += X.degree(w[a]);
        }
        D.d[i] = from_words(W, img, &exact);
        D.d_exact[i] = exact;
    }
    return D;
}

Check check_coderivation(const DgCoalgebra& C, const std::vector<Vec>& D, int degree)
{
    const GradedSpace& S = C.space();
    const Field& F = C.field();
    Check chk{"co-Leibniz rule for a coderivation of degree " + std::to_string(degree)};
    auto apply = [&](const Vec& v) {
        Vec r;
        for (const auto& [i, c] : v)
            r.add(D[i], c);
        return r;
    };
    for (int x = 0; x < S.dim(); ++x) {
        Coproduct p = C.comul(x);
        Coproduct lhs = C.coproduct(D[x]);
        if (!p.exact || !lhs.exact) {
            ++chk.skipped;
            continue;
        }
        Vec2 rhs;
        for (const auto& [q, c] : p.value) {
            for (const auto& [a, ca] : D[q.first])
                rhs.add({a, q.second}, c * ca);
            Scalar s = F.sign(long(degree) * S.degree(q.first));
            for (const auto& [b, cb] : D[q.second])
                rhs.add({q.first, b}, c * cb * s);
        }
        (void)apply;
        ++chk.checked;
        if (!(lhs.value == rhs))
            chk.fail("co-Leibniz fails on " + S.name(x));
    }
    return chk;
}

std::vector<Vec> commutator(const DgCoalgebra& C, const std::vector<Vec>& D1, int n1, const std::vector<Vec>& D2,
                            int n2)
{
    auto apply = [](const std::vector<Vec>& D, const Vec& v) {
        Vec r;
        for (const auto& [i, c] : v)
            r.add(D[i], c);
        return r;
    };
    std::vector<Vec> r;
    for (int i = 0; i < C.space().dim(); ++i)
        r.push_back(apply(D1, D2[i]) - apply(D2, D1[i]).scaled(C.field().sign(long(n1) * n2)));
    return r;
}

void require_cofree_regime(const GradedSpace& X)
{
    bool positive = true, negative = true;
    for (int i = 0; i < X.dim(); ++i) {
        positive = positive && X.degree(i) > 0;
        negative = negative && X.degree(i) < 0;
    }
    if (X.dim() > 0 && !positive && !negative)
        throw RegimeViolation("cogenerators must be strictly positive or strictly negative; no closed formula "
                              "for the cofree coalgebra otherwise");
}

FreeCoalgebra cofree_coalgebra(const DgSpace& X, const Truncation& trunc, const WordStyle& style)
{
    require_cofree_regime(*X.space);
    return tensor_coalgebra(X, trunc, style);
}

CoalgebraMap coextend_map(const DgCoalgebra& C, const FreeCoalgebra& T, const std::vector<Vec>& f, int degree,
                          bool strict)
{
    const GradedSpace& S = C.space();
    const GradedSpace& W = T.coalgebra.space();
    const GradedSpace& X = *T.letters;
    const Field& F = S.field();
    const int L = W.window().weight_cap;
    auto empty = find_word(W, {});
    CoalgebraMap g{std::vector<Vec>(S.dim()), std::vector<bool>(S.dim(), true)};
    for (int x = 0; x < S.dim(); ++x) {
        VecN img;
        Scalar eps = C.count(S.basis_vector(x));
        if (!eps.is_zero()) {
            if (!empty)
                g.exact[x] = false;
            else
                img.add(Word{}, eps);
        }
        bool exact = true;
        for (int n = 1; n <= L + 1; ++n) {
            VecN it = iterated_reduced(C, S.basis_vector(x), n, &exact);
            if (it.is_zero())
                break;
            if (n == L + 1) {
                if (strict)
                    throw NotConilpotent("iterated reduced coproduct of " + S.name(x) + " does not vanish within " +
                                         std::to_string(L) + " factors");
                exact = false;
                break;
            }
            for (const auto& [t, c] : it) {
                // f applied factorwise with the Koszul sign of passing f.
                VecN acc;
                acc.add(Word{}, c);
                int passed = 0;
                for (int ci : t) {
                    VecN next;
                    Scalar s = F.sign(long(degree) * passed);
                    for (const auto& [w, cw] : acc)
                        for (const auto& [l, cl] : f[ci])
                            next.add(concat(w, {l}), cw * cl * s);
                    acc = std::move(next);
                    passed += S.degree(ci);
                }
                img.add(acc, F.one());
            }
        }
        (void)X;
        g.images[x] = from_words(W, img, &exact);
        g.exact[x] = g.exact[x] && exact;
    }
    return g;
}

std::vector<Check> check_coalgebra_map(const DgCoalgebra& C, const DgCoalgebra& D, const std::vector<Vec>& g,
                                       const std::vector<bool>& g_exact)
{
    const GradedSpace& S = C.space();
    const GradedSpace& T = D.space();
    auto ok = [&](int i) { return g_exact.empty() || g_exact[i]; };
    auto apply = [&](const Vec& v, bool* exact) {
        Vec r;
        for (const auto& [i, c] : v) {
            r.add(g[i], c);
            if (!ok(i) && exact)
                *exact = false;
        }
        return r;
    };
    std::vector<Check> out;
    Check comult{"(g|g) Delta = Delta g"};
    Check chain{"g d = d g"};
    Check counit{"counit preserved"};
    for (int x = 0; x < S.dim(); ++x) {
        bool exact = ok(x);
        Coproduct p = C.comul(x);
        exact = exact && p.exact;
        Vec2 lhs;
        for (const auto& [q, c] : p.value) {
            if (!ok(q.first) || !ok(q.second))
                exact = false;
            for (const auto& [a, ca] : g[q.first])
                for (const auto& [b, cb] : g[q.second])
                    lhs.add({a, b}, c * ca * cb);
        }
        Coproduct rhs = D.coproduct(g[x]);
        if (exact && rhs.exact) {
            ++comult.checked;
            if (!(lhs == rhs.value))
                comult.fail("on " + S.name(x) + ": " + format_pairs(T, lhs) + " vs " + format_pairs(T, rhs.value));
        }
        else
            ++comult.skipped;

        bool cexact = ok(x) && C.dg.d_exact[x];
        Vec gd = apply(C.dg.d[x], &cexact);
        Vec dg = D.dg.differential(g[x], &cexact);
        if (cexact) {
            ++chain.checked;
            if (!(gd == dg))
                chain.fail("g(d " + S.name(x) + ") = " + T.format(gd) + " but d(g " + S.name(x) + ") = " + T.format(dg));
        }
        else
            ++chain.skipped;

        if (C.counit && D.counit && ok(x)) {
            ++counit.checked;
            if (!(D.count(g[x]) == C.count(S.basis_vector(x))))
                counit.fail("on " + S.name(x));
        }
    }
    out.push_back(comult);
    out.push_back(chain);
    if (C.counit && D.counit)
        out.push_back(counit);
    if (C.atom && D.atom) {
        Check atom{"atom preserved"};
        atom.checked = 1;
        if (!(apply(*C.atom, nullptr) == *D.atom))
            atom.fail("g(e) != e");
        out.push_back(atom);
    }
    return out;
}

DgAlgebra quasi_shuffle(const FreeCoalgebra& T, LetterProduct letter_product)
{
    auto W = T.coalgebra.dg.space;
    auto X = T.letters;
    auto memo = std::make_shared<std::map<std::pair<Word, Word>, VecN>>();
    auto rec = std::make_shared<std::function<VecN(const Word&, const Word&)>>();
    const Field F = W->field();
    *rec = [memo, rec, X, F, letter_product](const Word& x, const Word& y) -> VecN {
        if (x.empty())
            return VecN(y, F.one());
        if (y.empty())
            return VecN(x, F.one());
        auto key = std::make_pair(x, y);
        if (auto it = memo->find(key); it != memo->end())
            return it->second;
        VecN r;
        Word xr = slice(x, 1, x.size()), yr = slice(y, 1, y.size());
        int deg_x = word_degree(*X, x), deg_xr = word_degree(*X, xr);
        int y1 = X->degree(y[0]);
        // First block takes x1 alone.
        for (const auto& [w, c] : (*rec)(xr, y))
            r.add(concat({x[0]}, w), c);
        // First block takes y1 alone, passing all of x.
        Scalar s = F.sign(long(y1) * deg_x);
        for (const auto& [w, c] : (*rec)(x, yr))
            r.add(concat({y[0]}, w), c * s);
        // First block merges x1 and y1, y1 passing the rest of x.
        if (letter_product) {
            Vec m = letter_product(x[0], y[0]);
            if (!m.is_zero()) {
                Scalar s2 = F.sign(long(y1) * deg_xr);
                VecN tail = (*rec)(xr, yr);
                for (const auto& [l, cl] : m)
                    for (const auto& [w, c] : tail)
                        r.add(concat({l}, w), cl * c * s2);
            }
        }
        memo->emplace(key, r);
        return r;
    };
    DgAlgebra A;
    A.dg = T.coalgebra.dg;
    A.mul = [W, rec](int i, int j) {
        Product p;
        p.value = from_words(*W, (*rec)(word_of(*W, i), word_of(*W, j)), &p.exact);
        return p;
    };
    if (auto e = find_word(*W, {})) {
        A.unit = W->basis_vector(*e);
        A.augmentation = W->basis_vector(*e);
    }
    return A;
}

std::vector<Check> check_bialgebra(const DgAlgebra& A, const DgCoalgebra& C, CheckOptions opt)
{
    const GradedSpace& S = A.space();
    const Field& F = A.field();
    std::vector<Check> out;
    Check mult{"Delta(ab) = Delta(a) Delta(b)"};
    for (int a = 0; a < S.dim() && mult.checked + mult.skipped < opt.max_cases; ++a)
        for (int b = 0; b < S.dim(); ++b) {
            Product ab = A.mul(a, b);
            Coproduct lhs = C.coproduct(ab.value);
            Coproduct da = C.comul(a), db = C.comul(b);
            bool exact = ab.exact && lhs.exact && da.exact && db.exact;
            Vec2 rhs;
            for (const auto& [p, cp] : da.value)
                for (const auto& [q, cq] : db.value) {
                    Scalar s = F.sign(long(S.degree(p.second)) * S.degree(q.first));
                    Product l = A.mul(p.first, q.first), r = A.mul(p.second, q.second);
                    exact = exact && l.exact && r.exact;
                    for (const auto& [x, cx] : l.value)
                        for (const auto& [y, cy] : r.value)
                            rhs.add({x, y}, cp * cq * s * cx * cy);
                }
            if (!exact) {
                ++mult.skipped;
                continue;
            }
            ++mult.checked;
            if (!(lhs.value == rhs))
                mult.fail("on " + S.name(a) + ", " + S.name(b) + ": " + format_pairs(S, lhs.value) + " vs " +
                          format_pairs(S, rhs));
        }
    out.push_back(mult);

    Check counit{"counit is an algebra map"};
    if (A.unit) {
        Vec2 uu;
        for (const auto& [a, ca] : *A.unit)
            for (const auto& [b, cb] : *A.unit)
                uu.add({a, b}, ca * cb);
        if (!(C.coproduct(*A.unit).value == uu))
            counit.fail("Delta(1) != 1|1");
        if (!C.count(*A.unit).is_one())
            counit.fail("counit(1) != 1");
    }
    for (int a = 0; a < S.dim(); ++a)
        for (int b = 0; b < S.dim(); ++b) {
            Product ab = A.mul(a, b);
            if (!ab.exact) {
                ++counit.skipped;
                continue;
            }
            ++counit.checked;
            if (!(C.count(ab.value) == C.count(S.basis_vector(a)) * C.count(S.basis_vector(b))))
                counit.fail("on " + S.name(a) + ", " + S.name(b));
        }
    out.push_back(counit);
    return out;
}

Check check_cocommutative(const DgCoalgebra& C)
{
    const GradedSpace& S = C.space();
    Check chk{"cocommutativity"};
    for (int x = 0; x < S.dim(); ++x) {
        Coproduct p = C.comul(x);
        if (!p.exact) {
            ++chk.skipped;
            continue;
        }
        ++chk.checked;
        if (!(koszul_swap(S, S, p.value) == p.value))
            chk.fail("Delta(" + S.name(x) + ") = " + format_pairs(S, p.value) + " is not symmetric");
    }
    return chk;
}

Check check_commutative(const DgAlgebra& A)
{
    const GradedSpace& S = A.space();
    Check chk{"graded commutativity"};
    for (int a = 0; a < S.dim(); ++a)
        for (int b = 0; b < S.dim(); ++b) {
            Product ab = A.mul(a, b), ba = A.mul(b, a);
            if (!ab.exact || !ba.exact) {
                ++chk.skipped;
                continue;
            }
            ++chk.checked;
            if (!(ab.value == ba.value.scaled(S.field().sign(long(S.degree(a)) * S.degree(b)))))
                chk.fail(S.name(a) + " " + S.name(b) + " != +-" + S.name(b) + " " + S.name(a));
        }
    return chk;
}

namespace {

/// Degrees p with p + q = n for which both p and q may carry basis elements,
/// for a carrier supported in [lo, hi]. Degrees missing from the window are
/// assumed absent only on the side where the window is not flagged.
struct Support {
    int lo = 0, hi = 0;
    bool below = true, above = true;
};

Support support_of(const GradedSpace& S)
{
    Support r;
    if (S.dim() == 0)
        return r;
    r.lo = r.hi = S.degree(0);
    for (int i = 0; i < S.dim(); ++i) {
        r.lo = std::min(r.lo, S.degree(i));
        r.hi = std::max(r.hi, S.degree(i));
    }
    for (int n : S.incomplete_degrees()) {
        r.below = r.below && n > r.lo;
        r.above = r.above && n < r.hi;
    }
    if (!r.below && !r.above)
        throw NotGradedFinite("finite duality needs a carrier bounded above or below inside its window");
    return r;
}

/// Degrees p such that some pair (p, n - p) can contribute to degree n.
std::vector<int> splittings(const GradedSpace& S, const Support& sup, int n)
{
    std::vector<int> r;
    if (sup.below && sup.above) {
        for (int p = sup.lo; p <= sup.hi; ++p)
            if (n - p >= sup.lo && n - p <= sup.hi)
                r.push_back(p);
    } else if (sup.below) {
        for (int p = sup.lo; n - p >= sup.lo; ++p)
            r.push_back(p);
    } else {
        for (int p = n - sup.hi; p <= sup.hi; ++p)
            r.push_back(p);
    }
    (void)S;
    return r;
}

std::vector<Vec> dual_differential(const DgSpace& X, const GradedSpace& D, std::vector<bool>& exact)
{
    const GradedSpace& S = *X.space;
    std::vector<Vec> d(D.dim());
    exact.assign(D.dim(), true);
    for (int x = 0; x < S.dim(); ++x)
        for (const auto& [c, k] : X.d[x])
            d[*D.find_key({c})].add(*D.find_key({x}), k * S.field().sign(S.degree(c) + 1));
    // d(c*) collects x of degree |c|+1 with c in d(x).
    for (int i = 0; i < D.dim(); ++i) {
        int c = D.key(i)[0];
        int n = S.degree(c) + 1;
        if (!S.complete(n))
            exact[i] = false;
        for (int x : S.in_degree(n))
            if (!X.d_exact[x])
                exact[i] = false;
    }
    return d;
}

}  // namespace

DgCoalgebra finite_dual(const DgAlgebra& A)
{
    const GradedSpace& S = A.space();
    const Field& F = A.field();
    const Support sup = support_of(S);
    auto D = graded_dual(S);
    auto table = std::make_shared<std::vector<Vec2>>(S.dim());
    auto exact = std::make_shared<std::vector<bool>>(S.dim(), true);
    for (int c = 0; c < S.dim(); ++c) {
        const int n = S.degree(c);
        const int cd = *D->find_key({c});
        for (int p : splittings(S, sup, n)) {
            if (!S.complete(p) || !S.complete(n - p))
                (*exact)[cd] = false;
            for (int a : S.in_degree(p))
                for (int b : S.in_degree(n - p)) {
                    Product ab = A.mul(a, b);
                    if (!ab.exact)
                        (*exact)[cd] = false;
                    if (auto k = ab.value.find(c))
                        (*table)[cd].add({*D->find_key({a}), *D->find_key({b})},
                                         *k * F.sign(long(S.degree(a)) * S.degree(b)));
                }
        }
    }
    DgCoalgebra C;
    C.dg = DgSpace::zero(D);
    C.dg.d = dual_differential(A.dg, *D, C.dg.d_exact);
    C.comul = [table, exact](int i) { return Coproduct{(*table)[i], (*exact)[i]}; };
    if (A.unit) {
        Vec v;
        for (const auto& [i, c] : *A.unit)
            v.add(*D->find_key({i}), c);
        C.counit = v;
    }
    if (A.augmentation) {
        Vec v;
        for (const auto& [i, c] : *A.augmentation)
            v.add(*D->find_key({i}), c);
        C.atom = v;
    }
    return C;
}

DgAlgebra dual_algebra(const DgCoalgebra& C)
{
    const GradedSpace& S = C.space();
    const Field& F = C.field();
    support_of(S);
    auto D = graded_dual(S);
    auto table = std::make_shared<ProductTable>();
    std::vector<bool> comul_exact(S.dim(), true);
    for (int c = 0; c < S.dim(); ++c) {
        Coproduct p = C.comul(c);
        comul_exact[c] = p.exact;
        for (const auto& [q, k] : p.value) {
            Scalar s = F.sign(long(S.degree(q.first)) * S.degree(q.second));
            (*table)[{*D->find_key({q.first}), *D->find_key({q.second})}].add(*D->find_key({c}), k * s);
        }
    }
    // a* b* is exact when every c of degree |a|+|b| is present with exact coproduct.
    auto degree_exact = std::make_shared<std::map<int, bool>>();
    for (int i = 0; i < S.dim(); ++i)
        for (int j = 0; j < S.dim(); ++j) {
            int n = S.degree(i) + S.degree(j);
            if (degree_exact->count(n))
                continue;
            bool ok = S.complete(n);
            for (int c : S.in_degree(n))
                ok = ok && comul_exact[c];
            (*degree_exact)[n] = ok;
        }
    DgAlgebra A;
    A.dg = DgSpace::zero(D);
    A.dg.d = dual_differential(C.dg, *D, A.dg.d_exact);
    A.mul = [table, degree_exact, S = C.dg.space, D](int a, int b) {
        auto it = table->find({a, b});
        int n = S->degree(D->key(a)[0]) + S->degree(D->key(b)[0]);
        return Product{it == table->end() ? Vec{} : it->second, degree_exact->at(n)};
    };
    if (C.counit) {
        Vec v;
        for (const auto& [i, c] : *C.counit)
            v.add(*D->find_key({i}), c);
        A.unit = v;
    }
    if (C.atom) {
        Vec v;
        for (const auto& [i, c] : *C.atom)
            v.add(*D->find_key({i}), c);
        A.augmentation = v;
    }
    return A;
}

DgCoalgebra coalgebra_tensor(const DgCoalgebra& C, const DgCoalgebra& D)
{
    DgCoalgebra R;
    R.dg = dg_tensor(C.dg, D.dg);
    auto CD = R.dg.space;
    auto Cp = std::make_shared<DgCoalgebra>(C);
    auto Dp = std::make_shared<DgCoalgebra>(D);
    R.comul = [CD, Cp, Dp](int i) {
        int c = CD->key(i)[0], d = CD->key(i)[1];
        Coproduct pc = Cp->comul(c), pd = Dp->comul(d);
        Coproduct r;
        r.exact = pc.exact && pd.exact;
        const Field& F = CD->field();
        for (const auto& [p, cp] : pc.value)
            for (const auto& [q, cq] : pd.value) {
                auto l = CD->find_key({p.first, q.first});
                auto rr = CD->find_key({p.second, q.second});
                if (!l || !rr) {
                    r.exact = false;
                    continue;
                }
                Scalar s = F.sign(long(Dp->space().degree(q.first)) * Cp->space().degree(p.second));
                r.value.add({*l, *rr}, cp * cq * s);
            }
        return r;
    };
    auto tensor_vec = [&](const Vec& u, const Vec& v) {
        Vec2 img;
        for (const auto& [x, cx] : u)
            for (const auto& [y, cy] : v)
                img.add({x, y}, cx * cy);
        return from_pairs(*CD, img);
    };
    if (C.counit && D.counit)
        R.counit = tensor_vec(*C.counit, *D.counit);
    if (C.atom && D.atom)
        R.atom = tensor_vec(*C.atom, *D.atom);
    return R;
}

}  // namespace dgkit
