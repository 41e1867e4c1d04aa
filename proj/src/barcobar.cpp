#include "dgkit/barcobar.hpp"

#include <algorithm>

namespace dgkit {

SignConvention SignConvention::parse(const std::string& text)
{
    if (text == "minus")
        return standard();
    if (text == "plus")
        return flipped();
    throw std::invalid_argument("unknown sign convention '" + text + "' (expected minus or plus)");
}

std::string SignConvention::to_string() const
{
    auto s = [](Sign x) { return x == Sign::minus ? "minus" : "plus"; };
    return std::string("bar ") + s(bar) + ", cobar " + s(cobar);
}

namespace {

const WordStyle kBarStyle{"[", "|", "]", "[]"};
const WordStyle kCobarStyle{"[", "|", "]", "1"};

/// Sign of the universal cochain relative to beta / omega.
int bar_sign(const SignConvention& c) { return c.bar == Sign::minus ? 1 : -1; }
int cobar_sign(const SignConvention& c) { return c.cobar == Sign::plus ? 1 : -1; }

/// Letters named after the source basis, shifted by `shift`, keyed by source index.
SpacePtr shifted_letters(const GradedSpace& S, const std::vector<int>& indices, int shift)
{
    std::vector<BasisElement> elems;
    for (int i : indices)
        elems.push_back({S.name(i), S.degree(i) + shift, 1, {i}});
    return std::make_shared<GradedSpace>(S.field(), hull(elems, 1), std::move(elems));
}

DgSpace combine(const DgSpace& a, const DgSpace& b, const Scalar& sb)
{
    DgSpace r = DgSpace::zero(a.space);
    for (std::size_t i = 0; i < a.d.size(); ++i) {
        r.d[i] = a.d[i] + b.d[i].scaled(sb);
        r.d_exact[i] = a.d_exact[i] && b.d_exact[i];
    }
    return r;
}

Vec sign_by_length(const GradedSpace& W, const Vec& v)
{
    Vec r;
    for (const auto& [i, c] : v)
        r.add(i, W.weight(i) % 2 ? -c : c);
    return r;
}

}  // namespace

int MaurerCartanAlgebra::power(int n) const
{
    auto i = find_word(algebra().space(), Word(n, 0));
    if (!i)
        throw OutOfRange("u^" + std::to_string(n) + " is outside the window");
    return *i;
}

MaurerCartanAlgebra mc_algebra(int weight_cap, const Field& field)
{
    if (weight_cap < 2)
        throw std::invalid_argument("mc needs weight_cap >= 2");
    MaurerCartanAlgebra R;
    auto X = std::make_shared<GradedSpace>(field, Truncation{-1, -1, 1}, std::vector<BasisElement>{{"u", -1, 1, {}}});
    R.free = tensor_algebra(DgSpace::zero(X), Truncation{-weight_cap, 0, weight_cap});
    set_differential(R.free, {VecN(Word{0, 0}, field.of(-1))});

    auto W = R.free.algebra.dg.space;
    R.coalgebra.dg = R.free.algebra.dg;
    R.coalgebra.comul = [W, X](int i) { return coshuffle(*X, *W, i); };
    R.coalgebra.counit = R.free.algebra.augmentation;
    R.coalgebra.atom = R.free.algebra.unit;

    // S(x1..xn) = (-1)^{sum_{i<j}|xi||xj|} S(xn)..S(x1) with S(u) = -u.
    for (int i = 0; i < W->dim(); ++i) {
        Word w = word_of(*W, i);
        long e = static_cast<long>(w.size());
        for (std::size_t a = 0; a < w.size(); ++a)
            for (std::size_t b = a + 1; b < w.size(); ++b)
                e += long(X->degree(w[a])) * X->degree(w[b]);
        std::reverse(w.begin(), w.end());
        R.antipode.push_back(Vec(*find_word(*W, w), field.sign(e)));
    }
    R.checks = check_mc_algebra(R);
    return R;
}

std::vector<Check> check_mc_algebra(const MaurerCartanAlgebra& mc)
{
    const DgAlgebra& A = mc.algebra();
    const GradedSpace& W = A.space();
    const Field& F = W.field();
    const int L = W.window().weight_cap;
    std::vector<Check> out;

    Check mc_eq{"du + u^2 = 0"};
    {
        int u = mc.power(1);
        Vec lhs = A.dg.d[u] + A.mul(u, u).value;
        ++mc_eq.checked;
        if (!lhs.is_zero())
            mc_eq.fail("du + u^2 = " + W.format(lhs));
    }
    out.push_back(mc_eq);

    Check parity{"d(u^n) = 0 for n even, -u^{n+1} for n odd"};
    for (int n = 0; n <= L; ++n) {
        int i = mc.power(n);
        if (!A.dg.d_exact[i]) {
            ++parity.skipped;
            continue;
        }
        ++parity.checked;
        Vec expected = n % 2 ? Vec(mc.power(n + 1), F.of(-1)) : Vec{};
        if (!(A.dg.d[i] == expected))
            parity.fail("d(u^" + std::to_string(n) + ") = " + W.format(A.dg.d[i]));
    }
    out.push_back(parity);

    for (auto& c : check_algebra(A))
        out.push_back(c);
    for (auto& c : check_coalgebra(mc.coalgebra))
        out.push_back(c);
    for (auto& c : check_bialgebra(A, mc.coalgebra))
        out.push_back(c);

    // S*id and id*S against e counit, through weight L - 1.
    Check antipode{"S*id = id*S = e counit"};
    for (int i = 0; i < W.dim(); ++i) {
        if (W.weight(i) > L - 1)
            continue;
        Coproduct dc = mc.coalgebra.comul(i);
        Vec left, right;
        bool exact = dc.exact;
        for (const auto& [p, k] : dc.value) {
            Product l = A.multiply(mc.antipode[p.first], W.basis_vector(p.second));
            Product r = A.multiply(W.basis_vector(p.first), mc.antipode[p.second]);
            exact = exact && l.exact && r.exact;
            left.add(l.value, k);
            right.add(r.value, k);
        }
        Vec expected = A.unit->scaled(mc.coalgebra.counit->coefficient(i, F));
        if (!exact) {
            ++antipode.skipped;
            continue;
        }
        ++antipode.checked;
        if (!(left == expected) || !(right == expected))
            antipode.fail("at " + W.name(i) + ": S*id = " + W.format(left) + ", id*S = " + W.format(right));
    }
    out.push_back(antipode);

    Check hom{"homology is F in degree 0 (trusted degrees)"};
    for (const auto& row : homology(A.dg)) {
        if (!row.trusted) {
            ++hom.skipped;
            continue;
        }
        ++hom.checked;
        if (row.dim != (row.degree == 0 ? 1 : 0))
            hom.fail("H_" + std::to_string(row.degree) + " has dimension " + std::to_string(row.dim));
    }
    out.push_back(hom);
    return out;
}

McResult verify_mc_element(const DgAlgebra& A, const Vec& a)
{
    McResult r;
    auto deg = A.space().degree_of(a);
    if (deg && *deg != -1)
        throw std::invalid_argument("a Maurer-Cartan element has degree -1");
    r.defect = A.dg.differential(a, &r.exact);
    Product aa = A.multiply(a, a);
    r.exact = r.exact && aa.exact;
    r.defect += aa.value;
    r.solution = r.defect.is_zero();
    return r;
}

std::vector<Vec> enumerate_mc_elements(const DgAlgebra& A, int max_dim)
{
    const Field& F = A.field();
    if (F.is_rational())
        throw EnumerationTooLarge("enumeration needs a finite field");
    auto idx = A.space().in_degree(-1);
    if (static_cast<int>(idx.size()) > max_dim)
        throw EnumerationTooLarge("dim A_{-1} = " + std::to_string(idx.size()) + " exceeds " +
                                  std::to_string(max_dim));
    const int p = F.characteristic();
    long count = 1;
    for (std::size_t k = 0; k < idx.size(); ++k)
        count *= p;
    std::vector<Vec> out;
    for (long m = 0; m < count; ++m) {
        Vec a;
        long r = m;
        for (int j : idx) {
            a.add(j, F.of(r % p));
            r /= p;
        }
        McResult res = verify_mc_element(A, a);
        if (res.solution && res.exact)
            out.push_back(a);
    }
    return out;
}

TwistingCochain verify_twisting_cochain(const DgCoalgebra& C, const DgAlgebra& A, const GradedMap& alpha,
                                        bool pointed)
{
    TwistingCochain T{alpha, pointed, {}};
    const GradedSpace& CS = C.space();
    const GradedSpace& AS = A.space();
    const Field& F = CS.field();

    Check deg{"alpha is homogeneous of degree -1"};
    if (alpha.degree != -1)
        deg.fail("alpha has degree " + std::to_string(alpha.degree));
    if (auto v = alpha.homogeneity_violation())
        deg.fail(*v);
    T.certificate.push_back(deg);

    Check mc{"d alpha + alpha d + alpha*alpha = 0"};
    for (int c = 0; c < CS.dim(); ++c) {
        bool exact = C.dg.d_exact[c];
        Vec lhs = A.dg.differential(alpha.columns[c], &exact);
        lhs += alpha.apply(C.dg.d[c]);
        Coproduct dc = C.comul(c);
        exact = exact && dc.exact;
        for (const auto& [q, k] : dc.value) {
            Product p = A.multiply(alpha.columns[q.first], alpha.columns[q.second]);
            exact = exact && p.exact;
            lhs.add(p.value, k * F.sign(CS.degree(q.first)));
        }
        if (!exact) {
            ++mc.skipped;
            continue;
        }
        ++mc.checked;
        if (!lhs.is_zero())
            mc.fail("at c = " + CS.name(c) + ": d alpha + alpha d + alpha*alpha = " + AS.format(lhs));
    }
    T.certificate.push_back(mc);

    if (pointed) {
        Check pt{"pointed: alpha(e) = 0 and counit alpha = 0"};
        if (!C.atom || !A.augmentation)
            pt.fail("pointedness needs an atom and an augmentation");
        else {
            Vec ae = alpha.apply(*C.atom);
            if (!ae.is_zero())
                pt.fail("alpha(e) = " + AS.format(ae));
            for (int c = 0; c < CS.dim(); ++c)
                if (!A.augment(alpha.columns[c]).is_zero())
                    pt.fail("counit alpha(" + CS.name(c) + ") != 0");
        }
        T.certificate.push_back(pt);
    }
    return T;
}

std::optional<int> BarConstruction::letter(int a) const
{
    auto it = std::find(source.begin(), source.end(), a);
    if (it == source.end())
        return std::nullopt;
    return static_cast<int>(it - source.begin());
}

std::optional<int> CobarConstruction::letter(int c) const
{
    auto it = std::find(source.begin(), source.end(), c);
    if (it == source.end())
        return std::nullopt;
    return static_cast<int>(it - source.begin());
}

BarConstruction bar(const DgAlgebra& A, const Truncation& trunc, SignConvention convention)
{
    if (!A.augmentation || !A.is_normalized())
        throw std::invalid_argument("bar needs an augmentation given by the coordinate of a unit basis element");
    const GradedSpace& AS = A.space();
    const Field& F = AS.field();
    BarConstruction B;
    B.convention = convention;
    auto letters = shifted_letters(AS, A.augmentation_ideal_basis(), 1);
    for (int l = 0; l < letters->dim(); ++l)
        B.source.push_back(letters->key(l)[0]);
    B.cofree = tensor_coalgebra(DgSpace::zero(letters), trunc, kBarStyle);

    auto Ap = std::make_shared<DgAlgebra>(A);
    auto letter_of = [letters](int a) { return letters->find_key({a}); };
    auto project = [letter_of](const Vec& v, const Scalar& s) {
        Vec r;
        for (const auto& [a, k] : v)
            if (auto l = letter_of(a))
                r.add(*l, k * s);
        return r;
    };
    const auto& src = B.source;
    // sa -> -s(da)
    B.d_int = coextend_coderivation(
        B.cofree,
        [Ap, src, project, F](const Word& w, bool* exact) -> Vec {
            if (w.size() != 1)
                return {};
            int a = src[w[0]];
            if (exact)
                *exact = *exact && Ap->dg.d_exact[a];
            return project(Ap->dg.d[a], F.of(-1));
        },
        -1);
    // sa|sb -> (-1)^{|a|} s(ab)
    B.d_ext = coextend_coderivation(
        B.cofree,
        [Ap, src, project, F](const Word& w, bool* exact) -> Vec {
            if (w.size() != 2)
                return {};
            int a = src[w[0]], b = src[w[1]];
            Product p = Ap->mul(a, b);
            if (exact)
                *exact = *exact && p.exact;
            return project(p.value, F.sign(Ap->space().degree(a)));
        },
        -1);
    B.cofree.coalgebra.dg = combine(B.d_int, B.d_ext, convention.bar == Sign::minus ? F.of(-1) : F.one());
    return B;
}

CobarConstruction cobar(const DgCoalgebra& C, const Truncation& trunc, SignConvention convention)
{
    if (!C.is_normalized())
        throw std::invalid_argument("cobar needs a basis atom with counit equal to its coordinate");
    const GradedSpace& CS = C.space();
    const Field& F = CS.field();
    CobarConstruction O;
    O.convention = convention;
    auto letters = shifted_letters(CS, C.reduced_basis(), -1);
    for (int l = 0; l < letters->dim(); ++l)
        O.source.push_back(letters->key(l)[0]);
    O.free = tensor_algebra(DgSpace::zero(letters), trunc, kCobarStyle);

    std::vector<VecN> phi_int(letters->dim()), phi_ext(letters->dim());
    std::vector<bool> inexact_letter(letters->dim(), false);
    for (int l = 0; l < letters->dim(); ++l) {
        int c = O.source[l];
        if (!C.dg.d_exact[c])
            inexact_letter[l] = true;
        for (const auto& [x, k] : C.dg.d[c])
            if (auto m = letters->find_key({x}))
                phi_int[l].add(Word{*m}, -k);
        Coproduct r = C.reduced(CS.basis_vector(c));
        if (!r.exact)
            inexact_letter[l] = true;
        for (const auto& [q, k] : r.value) {
            auto l1 = letters->find_key({q.first}), l2 = letters->find_key({q.second});
            phi_ext[l].add(Word{*l1, *l2}, -k * F.sign(CS.degree(q.first)));
        }
    }
    O.d_int = extend_derivation(O.free, phi_int, -1);
    O.d_ext = extend_derivation(O.free, phi_ext, -1);
    const GradedSpace& W = O.algebra().space();
    for (int i = 0; i < W.dim(); ++i)
        for (int l : word_of(W, i))
            if (inexact_letter[l])
                O.d_int.d_exact[i] = O.d_ext.d_exact[i] = false;
    DgSpace total = combine(O.d_int, O.d_ext, convention.cobar == Sign::plus ? F.one() : F.of(-1));
    O.free.algebra.dg.d = total.d;
    O.free.algebra.dg.d_exact = total.d_exact;
    return O;
}

std::vector<Check> check_split_differential(const DgSpace& total, const DgSpace& d_int, const DgSpace& d_ext)
{
    const GradedSpace& W = *total.space;
    std::vector<Check> out;
    Check a = check_square_zero(d_int);
    a.name = "d^int squares to zero";
    out.push_back(a);
    Check b = check_square_zero(d_ext);
    b.name = "d^ext squares to zero";
    out.push_back(b);

    Check anti{"d^int d^ext + d^ext d^int = 0"};
    for (int i = 0; i < W.dim(); ++i) {
        bool exact = d_int.d_exact[i] && d_ext.d_exact[i];
        Vec v = d_int.differential(d_ext.d[i], &exact) + d_ext.differential(d_int.d[i], &exact);
        if (!exact) {
            ++anti.skipped;
            continue;
        }
        ++anti.checked;
        if (!v.is_zero())
            anti.fail("at " + W.name(i) + ": " + W.format(v));
    }
    out.push_back(anti);
    Check t = check_square_zero(total);
    t.name = "d squares to zero";
    out.push_back(t);
    return out;
}

Check check_length_filtration(const GradedSpace& W, const DgSpace& d_int, const DgSpace& d_ext, int step)
{
    Check chk{"d^int keeps word length, d^ext changes it by " + std::to_string(step)};
    for (int i = 0; i < W.dim(); ++i) {
        ++chk.checked;
        for (const auto& [j, c] : d_int.d[i])
            if (W.weight(j) != W.weight(i))
                chk.fail("d^int(" + W.name(i) + ") contains " + W.name(j));
        for (const auto& [j, c] : d_ext.d[i])
            if (W.weight(j) != W.weight(i) + step)
                chk.fail("d^ext(" + W.name(i) + ") contains " + W.name(j));
    }
    return chk;
}

GradedMap raw_beta(const BarConstruction& B, const DgAlgebra& A)
{
    GradedMap m = GradedMap::zero(B.coalgebra().dg.space, A.dg.space, -1);
    const GradedSpace& W = B.coalgebra().space();
    for (int i = 0; i < W.dim(); ++i) {
        Word w = word_of(W, i);
        if (w.size() == 1)
            m.columns[i] = Vec(B.source[w[0]], A.field().of(-1));
    }
    return m;
}

GradedMap raw_omega(const DgCoalgebra& C, const CobarConstruction& O)
{
    GradedMap m = GradedMap::zero(C.dg.space, O.algebra().dg.space, -1);
    const GradedSpace& W = O.algebra().space();
    for (std::size_t l = 0; l < O.source.size(); ++l)
        if (auto i = find_word(W, Word{static_cast<int>(l)}))
            m.columns[O.source[l]] = W.basis_vector(*i);
    return m;
}

TwistingCochain universal_bar_cochain(const BarConstruction& B, const DgAlgebra& A)
{
    if (B.convention.bar != Sign::minus)
        throw ConventionMismatch("beta is the universal cochain only for the minus bar convention; with " +
                                 B.convention.to_string() + " it is -beta");
    return verify_twisting_cochain(B.coalgebra(), A, raw_beta(B, A), true);
}

TwistingCochain universal_cobar_cochain(const DgCoalgebra& C, const CobarConstruction& O)
{
    if (O.convention.cobar != Sign::plus)
        throw ConventionMismatch("omega is the universal cochain only for the plus cobar convention; with " +
                                 O.convention.to_string() + " it is -omega");
    return verify_twisting_cochain(C, O.algebra(), raw_omega(C, O), true);
}

std::vector<Vec> algebra_map_from_letters(const CobarConstruction& O, const DgAlgebra& A,
                                          const std::vector<Vec>& letter_images, bool* exact)
{
    const GradedSpace& W = O.algebra().space();
    std::vector<Vec> g;
    for (int i = 0; i < W.dim(); ++i) {
        Product p = evaluate_word(A, letter_images, word_of(W, i));
        if (exact)
            *exact = *exact && p.exact;
        g.push_back(p.value);
    }
    return g;
}

AdjointMaps adjunction_transforms(const TwistingCochain& alpha, const DgCoalgebra& C, const DgAlgebra& A,
                                  const CobarConstruction& O, const BarConstruction& B)
{
    const Field& F = C.field();
    const GradedSpace& AS = A.space();
    for (int c = 0; c < C.space().dim(); ++c)
        if (!A.augment(alpha.alpha.columns[c]).is_zero())
            throw std::invalid_argument("adjunction transforms need a pointed twisting cochain");
    AdjointMaps R;
    std::vector<Vec> letters;
    for (int c : O.source)
        letters.push_back(alpha.alpha.columns[c].scaled(F.of(cobar_sign(O.convention))));
    R.g = algebra_map_from_letters(O, A, letters);
    R.g_checks = check_algebra_map(O.algebra(), A, R.g);

    std::vector<Vec> f1(C.space().dim());
    const Scalar s = F.of(-bar_sign(B.convention));
    for (int c = 0; c < C.space().dim(); ++c)
        for (const auto& [a, k] : alpha.alpha.columns[c]) {
            auto l = B.letter(a);
            if (!l)
                throw std::invalid_argument("alpha(" + C.space().name(c) + ") has a term " + AS.name(a) +
                                            " outside A_-");
            f1[c].add(*l, k * s);
        }
    R.f = coextend_map(C, B.cofree, f1, 0, false);
    R.f_checks = check_coalgebra_map(C, B.coalgebra(), R.f.images, R.f.exact);
    return R;
}

GradedMap extract_from_algebra_map(const DgCoalgebra& C, const DgAlgebra& A, const CobarConstruction& O,
                                   const std::vector<Vec>& g)
{
    GradedMap m = GradedMap::zero(C.dg.space, A.dg.space, -1);
    const GradedSpace& W = O.algebra().space();
    const Scalar s = C.field().of(cobar_sign(O.convention));
    for (std::size_t l = 0; l < O.source.size(); ++l)
        if (auto i = find_word(W, Word{static_cast<int>(l)}))
            m.columns[O.source[l]] = g[*i].scaled(s);
    return m;
}

GradedMap extract_from_coalgebra_map(const DgCoalgebra& C, const DgAlgebra& A, const BarConstruction& B,
                                     const std::vector<Vec>& f)
{
    GradedMap m = GradedMap::zero(C.dg.space, A.dg.space, -1);
    const GradedSpace& W = B.coalgebra().space();
    const Scalar s = C.field().of(-bar_sign(B.convention));
    for (int c = 0; c < C.space().dim(); ++c)
        for (const auto& [i, k] : f[c]) {
            Word w = word_of(W, i);
            if (w.size() == 1)
                m.columns[c].add(B.source[w[0]], k * s);
        }
    return m;
}

AdjunctionCount count_adjunction(const DgCoalgebra& C, const DgAlgebra& A, const Truncation& window,
                                 std::size_t max_candidates)
{
    const Field& F = A.field();
    if (F.is_rational())
        throw EnumerationTooLarge("enumeration needs a finite field");
    CobarConstruction O = cobar(C, window);
    BarConstruction B = bar(A, window);
    const GradedSpace& CS = C.space();
    const GradedSpace& AS = A.space();
    auto ideal = A.augmentation_ideal_basis();

    // Odometer over the coefficients of alpha(c) in A_- for each reduced c.
    struct Slot {
        int c;
        std::vector<int> targets;
    };
    std::vector<Slot> slots;
    std::size_t total = 1;
    const std::size_t p = static_cast<std::size_t>(F.characteristic());
    for (int c : C.reduced_basis()) {
        Slot s{c, {}};
        for (int a : ideal)
            if (AS.degree(a) == CS.degree(c) - 1)
                s.targets.push_back(a);
        for (std::size_t k = 0; k < s.targets.size(); ++k) {
            total *= p;
            if (total > max_candidates)
                throw EnumerationTooLarge("more than " + std::to_string(max_candidates) + " candidate cochains");
        }
        slots.push_back(std::move(s));
    }
    std::vector<std::pair<int, int>> digits;  // (c, a) in odometer order
    for (const auto& s : slots)
        for (int a : s.targets)
            digits.push_back({s.c, a});

    AdjunctionCount out;
    Check g_round{"extract(transform(alpha)) = alpha through Omega C -> A"};
    Check f_round{"extract(transform(alpha)) = alpha through C -> BA"};
    Check transforms{"transforms of twisting cochains are dg maps"};
    auto same = [](const GradedMap& a, const GradedMap& b) { return a.columns == b.columns; };
    std::vector<long> value(digits.size(), 0);
    for (std::size_t n = 0; n < total; ++n) {
        GradedMap alpha = GradedMap::zero(C.dg.space, A.dg.space, -1);
        for (std::size_t i = 0; i < digits.size(); ++i)
            if (value[i])
                alpha.columns[digits[i].first].add(digits[i].second, F.of(value[i]));
        ++out.candidates;

        TwistingCochain T = verify_twisting_cochain(C, A, alpha, true);
        if (T.valid()) {
            ++out.twisting;
            AdjointMaps m = adjunction_transforms(T, C, A, O, B);
            ++transforms.checked;
            if (!all_pass(m.g_checks) || !all_pass(m.f_checks))
                transforms.fail("transform of cochain #" + std::to_string(n) + " is not a dg map");
            ++g_round.checked;
            if (!same(extract_from_algebra_map(C, A, O, m.g), alpha))
                g_round.fail("cochain #" + std::to_string(n));
            ++f_round.checked;
            if (!same(extract_from_coalgebra_map(C, A, B, m.f.images), alpha))
                f_round.fail("cochain #" + std::to_string(n));
        }
        std::vector<Vec> letters(O.source.size());
        for (std::size_t l = 0; l < O.source.size(); ++l)
            letters[l] = alpha.columns[O.source[l]];
        if (all_pass(check_algebra_map(O.algebra(), A, algebra_map_from_letters(O, A, letters))))
            ++out.algebra_maps;
        std::vector<Vec> f1(CS.dim());
        for (int c = 0; c < CS.dim(); ++c)
            for (const auto& [a, k] : alpha.columns[c])
                f1[c].add(*B.letter(a), k);
        CoalgebraMap f = coextend_map(C, B.cofree, f1, 0, false);
        if (all_pass(check_coalgebra_map(C, B.coalgebra(), f.images, f.exact)))
            ++out.coalgebra_maps;

        for (std::size_t i = 0; i < value.size(); ++i) {
            if (++value[i] < static_cast<long>(p))
                break;
            value[i] = 0;
        }
    }
    Check counts{"|Tw(C,A)| = |Alg(Omega C, A)| = |Coalg(C, BA)|"};
    counts.checked = out.candidates;
    if (out.twisting != out.algebra_maps || out.twisting != out.coalgebra_maps)
        counts.fail(std::to_string(out.twisting) + " / " + std::to_string(out.algebra_maps) + " / " +
                    std::to_string(out.coalgebra_maps));
    out.checks = {counts, transforms, g_round, f_round};
    return out;
}

std::vector<Check> sign_convention_iso(const DgAlgebra& A, const Truncation& trunc)
{
    BarConstruction minus = bar(A, trunc, SignConvention::standard());
    BarConstruction plus = bar(A, trunc, SignConvention::flipped());
    const DgCoalgebra& Cm = minus.coalgebra();
    const DgCoalgebra& Cp = plus.coalgebra();
    const GradedSpace& W = Cm.space();
    std::vector<Check> out;
    Check d{"pi^-1 (d^int + d^ext) pi = d^int - d^ext on the bar construction"};
    for (int i = 0; i < W.dim(); ++i) {
        if (!Cm.dg.d_exact[i] || !Cp.dg.d_exact[i]) {
            ++d.skipped;
            continue;
        }
        ++d.checked;
        Vec lhs = sign_by_length(W, Cp.dg.differential(sign_by_length(W, W.basis_vector(i))));
        if (!(lhs == Cm.dg.d[i]))
            d.fail("at " + W.name(i) + ": " + W.format(lhs) + " vs " + W.format(Cm.dg.d[i]));
    }
    out.push_back(d);
    Check co{"pi preserves the coproduct"};
    for (int i = 0; i < W.dim(); ++i) {
        ++co.checked;
        Coproduct c = Cm.comul(i);
        Vec2 lhs = c.value.scaled(W.field().sign(W.weight(i)));
        Vec2 rhs;
        for (const auto& [q, k] : c.value)
            rhs.add(q, k * W.field().sign(W.weight(q.first) + W.weight(q.second)));
        if (!(lhs == rhs))
            co.fail("at " + W.name(i));
    }
    out.push_back(co);
    return out;
}

std::vector<Check> sign_convention_iso(const DgCoalgebra& C, const Truncation& trunc)
{
    CobarConstruction plus = cobar(C, trunc, SignConvention::standard());
    CobarConstruction minus = cobar(C, trunc, SignConvention::flipped());
    const DgAlgebra& Ap = plus.algebra();
    const DgAlgebra& Am = minus.algebra();
    const GradedSpace& W = Ap.space();
    std::vector<Check> out;
    Check d{"pi^-1 (d^int + d^ext) pi = d^int - d^ext on the cobar construction"};
    for (int i = 0; i < W.dim(); ++i) {
        if (!Ap.dg.d_exact[i] || !Am.dg.d_exact[i]) {
            ++d.skipped;
            continue;
        }
        ++d.checked;
        Vec lhs = sign_by_length(W, Ap.dg.differential(sign_by_length(W, W.basis_vector(i))));
        if (!(lhs == Am.dg.d[i]))
            d.fail("at " + W.name(i) + ": " + W.format(lhs) + " vs " + W.format(Am.dg.d[i]));
    }
    out.push_back(d);
    Check mul{"pi is multiplicative"};
    for (int i = 0; i < W.dim(); ++i)
        for (int j = 0; j < W.dim(); ++j) {
            Product p = Ap.mul(i, j);
            if (!p.exact) {
                ++mul.skipped;
                continue;
            }
            ++mul.checked;
            Vec lhs = sign_by_length(W, p.value);
            Vec rhs = p.value.scaled(W.field().sign(W.weight(i) + W.weight(j)));
            if (!(lhs == rhs))
                mul.fail("at " + W.name(i) + " * " + W.name(j));
        }
    out.push_back(mul);
    return out;
}

HopfCertificate hopf_on_cobar(const DgCoalgebra& C, const CobarConstruction& O)
{
    Check cc = check_cocommutative(C);
    if (!cc.pass)
        throw NotCocommutative(cc.witness);
    HopfCertificate H;
    H.algebra = O.algebra();
    auto W = O.algebra().dg.space;
    auto X = O.free.letters;
    H.coalgebra.dg = O.algebra().dg;
    H.coalgebra.comul = [W, X](int i) { return coshuffle(*X, *W, i); };
    H.coalgebra.counit = O.algebra().augmentation;
    H.coalgebra.atom = O.algebra().unit;

    Check prim{"generators s^-1 c are primitive"};
    const Field& F = W->field();
    auto one = find_word(*W, {});
    for (int l = 0; l < X->dim(); ++l) {
        auto i = find_word(*W, Word{l});
        if (!i || !one)
            continue;
        ++prim.checked;
        Vec2 expected = Vec2({*i, *one}, F.one()) + Vec2({*one, *i}, F.one());
        if (!(H.coalgebra.comul(*i).value == expected))
            prim.fail(W->name(*i) + " is not primitive");
    }
    H.checks.push_back(prim);
    for (auto& c : check_coalgebra(H.coalgebra))
        H.checks.push_back(c);
    for (auto& c : check_bialgebra(H.algebra, H.coalgebra))
        H.checks.push_back(c);
    return H;
}

HopfCertificate hopf_on_bar(const DgAlgebra& A, const BarConstruction& B)
{
    Check cc = check_commutative(A);
    if (!cc.pass)
        throw NotCommutative(cc.witness);
    HopfCertificate H;
    H.coalgebra = B.coalgebra();
    H.algebra = quasi_shuffle(B.cofree);
    for (auto& c : check_algebra(H.algebra))
        H.checks.push_back(c);
    for (auto& c : check_bialgebra(H.algebra, H.coalgebra))
        H.checks.push_back(c);
    return H;
}

std::map<std::pair<int, int>, int> bigraded_dims(const GradedSpace& S)
{
    std::map<std::pair<int, int>, int> r;
    for (int i = 0; i < S.dim(); ++i)
        ++r[{S.degree(i), S.weight(i)}];
    return r;
}

BridgeReport bridge_cobar(const DgCoalgebra& C, const Truncation& trunc)
{
    const Field& F = C.field();
    const GradedSpace& CS = C.space();
    MaurerCartanAlgebra mc = mc_algebra(std::max(2, trunc.weight_cap), F);
    SweedlerProduct S = sweedler_product(C, mc.algebra(), trunc, true);
    CobarConstruction O = cobar(C, trunc);
    const GradedSpace& OW = O.algebra().space();
    const GradedSpace& SW = S.algebra().space();
    const int cap = std::min(trunc.weight_cap, S.exact_weight);

    BridgeReport R;
    for (auto [k, v] : bigraded_dims(OW))
        if (k.second <= cap)
            R.formula_dims[k] = v;
    for (auto [k, v] : S.bigraded_dims())
        if (k.second <= cap)
            R.sweedler_dims[k] = v;

    Check dims{"carrier dims per (degree, weight) agree"};
    ++dims.checked;
    if (R.formula_dims != R.sweedler_dims)
        dims.fail("cobar and Sweedler product dimensions differ");
    R.checks.push_back(dims);

    // Normal words of C |> mc are words in the symbols c |> u.
    const int u = mc.power(1);
    std::map<int, int> generator_of_letter;
    for (std::size_t g = 0; g < S.symbols.size(); ++g)
        if (S.symbols[g].second == u)
            generator_of_letter[S.symbols[g].first] = static_cast<int>(g);
    Check normal{"normal words are words in the c|>u"};
    for (std::size_t i = 0; i < S.forms.words.size(); ++i) {
        ++normal.checked;
        for (int g : S.forms.words[i])
            if (S.symbols[g].second != u)
                normal.fail(SW.name(static_cast<int>(i)) + " uses " + S.presentation.generators[g].name);
    }
    R.checks.push_back(normal);

    std::vector<Vec> letters;
    for (int c : O.source)
        letters.push_back(S.phi(c, u).value.scaled(F.sign(CS.degree(c))));
    std::vector<Vec> t = algebra_map_from_letters(O, S.algebra(), letters);
    Check basis{"t maps basis words to signed basis words, bijectively"};
    std::set<int> hit;
    for (int i = 0; i < OW.dim(); ++i) {
        if (OW.weight(i) > cap)
            continue;
        ++basis.checked;
        if (t[i].size() != 1 || !(t[i].begin()->second == F.one() || t[i].begin()->second == F.of(-1)))
            basis.fail(OW.name(i) + " maps to " + SW.format(t[i]));
        else if (!hit.insert(t[i].begin()->first).second)
            basis.fail(OW.name(i) + " maps to an element already hit");
    }
    for (int j = 0; j < SW.dim(); ++j)
        if (SW.weight(j) <= cap && !hit.count(j))
            basis.fail(SW.name(j) + " is not hit");
    R.checks.push_back(basis);
    for (auto c : check_algebra_map(O.algebra(), S.algebra(), t)) {
        c.name = "t: " + c.name;
        R.checks.push_back(c);
    }
    return R;
}

BridgeReport bridge_bar(const DgAlgebra& A, const Truncation& trunc)
{
    const Field& F = A.field();
    const GradedSpace& AS = A.space();
    BarConstruction B = bar(A, trunc);
    MaurerCartanAlgebra mc = mc_algebra(std::max(2, trunc.weight_cap), F);
    SweedlerHom H = sweedler_hom_free(mc.free, A, trunc, true);
    const DgCoalgebra& BC = B.coalgebra();
    const DgCoalgebra& HC = H.coalgebra.coalgebra;
    const GradedSpace& BW = BC.space();
    const GradedSpace& HW = HC.space();

    BridgeReport R;
    R.formula_dims = bigraded_dims(BW);
    R.sweedler_dims = bigraded_dims(HW);
    Check dims{"carrier dims per (degree, weight) agree"};
    ++dims.checked;
    if (R.formula_dims != R.sweedler_dims)
        dims.fail("bar and Sweedler hom dimensions differ");
    R.checks.push_back(dims);

    // Letter sa -> (-1)^{|a|} [u, a].
    std::vector<int> letter_map;
    for (int a : B.source) {
        auto pos = std::find(H.target_index.begin(), H.target_index.end(), a);
        letter_map.push_back(*H.hom->find_key({0, static_cast<int>(pos - H.target_index.begin())}));
    }
    std::vector<Vec> phi(BW.dim());
    Check basis{"sa = (-1)^{|a|} [u,a] is a bijection of word bases"};
    std::set<int> hit;
    for (int i = 0; i < BW.dim(); ++i) {
        Word w = word_of(BW, i), v;
        long e = 0;
        for (int l : w) {
            v.push_back(letter_map[l]);
            e += AS.degree(B.source[l]);
        }
        ++basis.checked;
        auto j = find_word(HW, v);
        if (!j) {
            basis.fail(BW.name(i) + " has no counterpart");
            continue;
        }
        phi[i] = Vec(*j, F.sign(e));
        hit.insert(*j);
    }
    if (static_cast<int>(hit.size()) != HW.dim())
        basis.fail("some Sweedler hom words are not hit");
    R.checks.push_back(basis);

    Check d{"the identification intertwines the differentials"};
    for (int i = 0; i < BW.dim(); ++i) {
        if (phi[i].is_zero())
            continue;
        int j = phi[i].begin()->first;
        if (!BC.dg.d_exact[i] || !HC.dg.d_exact[j]) {
            ++d.skipped;
            continue;
        }
        ++d.checked;
        Vec lhs;
        for (const auto& [k, c] : BC.dg.d[i])
            lhs.add(phi[k], c);
        Vec rhs = HC.dg.d[j].scaled(phi[i].begin()->second);
        if (!(lhs == rhs))
            d.fail("at " + BW.name(i) + ": " + HW.format(lhs) + " vs " + HW.format(rhs));
    }
    R.checks.push_back(d);
    for (auto c : check_coalgebra_map(BC, HC, phi)) {
        c.name = "identification: " + c.name;
        R.checks.push_back(c);
    }
    Check q = check_corestriction(H, trunc.weight_cap);
    R.checks.push_back(q);
    return R;
}

}  // namespace dgkit
