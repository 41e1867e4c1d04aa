#include "dgkit/sweedler.hpp"

#include <algorithm>

namespace dgkit {

Convolution convolution(const DgCoalgebra& C, const DgAlgebra& A)
{
    Convolution R;
    R.algebra.dg = dg_hom(C.dg, A.dg);
    R.hom = R.algebra.dg.space;
    const GradedSpace& CS = C.space();
    const Field& F = C.field();

    // Coproduct coefficients indexed by the pair of tensor factors.
    auto co = std::make_shared<std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>>>();
    auto degree_exact = std::make_shared<std::map<int, bool>>();
    for (int x = 0; x < CS.dim(); ++x) {
        Coproduct p = C.comul(x);
        auto [it, fresh] = degree_exact->try_emplace(CS.degree(x), CS.complete(CS.degree(x)));
        it->second = it->second && p.exact;
        for (const auto& [pair, k] : p.value)
            (*co)[pair].push_back({x, k});
    }
    auto H = R.hom;
    auto Cs = C.dg.space;
    auto Ap = std::make_shared<DgAlgebra>(A);
    R.algebra.mul = [H, Cs, Ap, co, degree_exact, F](int f, int g) {
        int c = H->key(f)[0], a = H->key(f)[1];
        int c2 = H->key(g)[0], a2 = H->key(g)[1];
        Product aa = Ap->mul(a, a2);
        Product r;
        int n = Cs->degree(c) + Cs->degree(c2);
        auto de = degree_exact->find(n);
        r.exact = aa.exact && (de == degree_exact->end() ? Cs->complete(n) : de->second);
        auto it = co->find({c, c2});
        if (it == co->end())
            return r;
        const GradedSpace& AS = Ap->space();
        Scalar s = F.sign(long(AS.degree(a2) - Cs->degree(c2)) * Cs->degree(c));
        for (const auto& [x, k] : it->second)
            for (const auto& [b, m] : aa.value)
                r.value.add(*H->find_key({x, b}), k * m * s);
        return r;
    };
    if (C.counit && A.unit) {
        Vec u;
        for (const auto& [c, k] : *C.counit)
            for (const auto& [a, m] : *A.unit)
                u.add(*H->find_key({c, a}), k * m);
        R.algebra.unit = u;
    }
    if (C.atom && A.augmentation) {
        Vec aug;
        for (int f = 0; f < H->dim(); ++f) {
            Scalar s = C.atom->coefficient(H->key(f)[0], F) * A.augmentation->coefficient(H->key(f)[1], F);
            aug.add(f, s);
        }
        R.algebra.augmentation = aug;
    }
    return R;
}

std::vector<Check> verify_measuring(const DgCoalgebra& C, const DgAlgebra& A, const DgAlgebra& B,
                                    const MeasuringFn& f, MeasuringOptions opt)
{
    const GradedSpace& CS = C.space();
    const GradedSpace& AS = A.space();
    const GradedSpace& BS = B.space();
    const Field& F = C.field();
    std::map<std::pair<int, int>, Product> memo;
    auto val = [&](int c, int a) -> const Product& {
        auto it = memo.find({c, a});
        if (it == memo.end())
            it = memo.emplace(std::make_pair(c, a), f(c, a)).first;
        return it->second;
    };
    // f on (basis c, vector v in A).
    auto val_lin = [&](int c, const Vec& v, bool* exact) {
        Vec r;
        for (const auto& [a, k] : v) {
            const Product& p = val(c, a);
            *exact = *exact && p.exact;
            r.add(p.value, k);
        }
        return r;
    };
    auto pair_name = [&](int c, int a) { return CS.name(c) + " (x) " + AS.name(a); };
    std::vector<Check> out;

    Check degree{"measuring has degree 0"};
    for (int c = 0; c < CS.dim(); ++c)
        for (int a = 0; a < AS.dim(); ++a)
            for (const auto& [b, k] : val(c, a).value)
                if (BS.degree(b) != CS.degree(c) + AS.degree(a))
                    degree.fail("f(" + pair_name(c, a) + ") has a term " + BS.name(b) + " of degree " +
                                std::to_string(BS.degree(b)));
    out.push_back(degree);

    Check mult{"f(c,ab) = f(c1,a) f(c2,b) (-1)^{|a||c2|}"};
    for (int c = 0; c < CS.dim(); ++c) {
        Coproduct dc = C.comul(c);
        for (int a = 0; a < AS.dim(); ++a)
            for (int b = 0; b < AS.dim(); ++b) {
                if (mult.checked + mult.skipped >= opt.max_cases)
                    break;
                Product ab = A.mul(a, b);
                bool exact = dc.exact && ab.exact;
                Vec lhs = val_lin(c, ab.value, &exact);
                Vec rhs;
                for (const auto& [q, k] : dc.value) {
                    const Product& fa = val(q.first, a);
                    const Product& fb = val(q.second, b);
                    Product p = B.multiply(fa.value, fb.value);
                    exact = exact && fa.exact && fb.exact && p.exact;
                    rhs.add(p.value, k * F.sign(long(AS.degree(a)) * CS.degree(q.second)));
                }
                if (!exact) {
                    ++mult.skipped;
                    continue;
                }
                ++mult.checked;
                if (!(lhs == rhs))
                    mult.fail("c = " + CS.name(c) + ", a = " + AS.name(a) + ", b = " + AS.name(b) + ": f(c,ab) = " +
                              BS.format(lhs) + " but the coproduct side is " + BS.format(rhs));
            }
    }
    out.push_back(mult);

    if (A.unit && C.counit && B.unit) {
        Check unit{"f(c,1) = counit(c) 1"};
        for (int c = 0; c < CS.dim(); ++c) {
            bool exact = true;
            Vec l = val_lin(c, *A.unit, &exact);
            Vec r = B.unit->scaled(C.counit->coefficient(c, F));
            if (!exact) {
                ++unit.skipped;
                continue;
            }
            ++unit.checked;
            if (!(l == r))
                unit.fail("f(" + CS.name(c) + ",1) = " + BS.format(l));
        }
        out.push_back(unit);
    }

    Check chain{"f(dc,a) + (-1)^{|c|} f(c,da) = d f(c,a)"};
    for (int c = 0; c < CS.dim(); ++c)
        for (int a = 0; a < AS.dim(); ++a) {
            bool exact = C.dg.d_exact[c] && A.dg.d_exact[a];
            Vec lhs;
            for (const auto& [c2, k] : C.dg.d[c]) {
                const Product& p = val(c2, a);
                exact = exact && p.exact;
                lhs.add(p.value, k);
            }
            lhs.add(val_lin(c, A.dg.d[a], &exact), F.sign(CS.degree(c)));
            const Product& p = val(c, a);
            exact = exact && p.exact;
            Vec rhs = B.dg.differential(p.value, &exact);
            if (!exact) {
                ++chain.skipped;
                continue;
            }
            ++chain.checked;
            if (!(lhs == rhs))
                chain.fail("at " + pair_name(c, a) + ": f(d(c|a)) = " + BS.format(lhs) + " but d f(c|a) = " +
                           BS.format(rhs));
        }
    out.push_back(chain);

    if (opt.pointed) {
        Check pointed{"pointed: counit f = counit (x) counit and f(e,a) = counit(a) 1"};
        if (!C.atom || !C.counit || !A.augmentation || !B.augmentation || !B.unit)
            pointed.fail("pointed check needs an atom, counits and augmentations");
        else {
            for (int c = 0; c < CS.dim(); ++c)
                for (int a = 0; a < AS.dim(); ++a) {
                    const Product& p = val(c, a);
                    if (!p.exact)
                        continue;
                    if (!(B.augment(p.value) == C.counit->coefficient(c, F) * A.augmentation->coefficient(a, F)))
                        pointed.fail("counit of f(" + pair_name(c, a) + ") is wrong");
                }
            for (int a = 0; a < AS.dim(); ++a) {
                Vec l;
                bool exact = true;
                for (const auto& [c, k] : *C.atom) {
                    const Product& p = val(c, a);
                    exact = exact && p.exact;
                    l.add(p.value, k);
                }
                if (exact && !(l == B.unit->scaled(A.augmentation->coefficient(a, F))))
                    pointed.fail("f(e," + AS.name(a) + ") = " + BS.format(l));
            }
        }
        out.push_back(pointed);
    }
    return out;
}

MeasuringFn rev_measuring(const DgCoalgebra& C, const Convolution& conv)
{
    auto H = conv.hom;
    auto Cs = C.dg.space;
    return [H, Cs](int c, int f) {
        Product r;
        if (H->key(f)[0] == c)
            r.value = Vec(H->key(f)[1], H->field().sign(long(Cs->degree(c)) * H->degree(f)));
        return r;
    };
}

namespace {

std::string symbol_name(const std::string& c, const std::string& a)
{
    auto wrap = [](const std::string& s) {
        return s.find_first_of(".| >") == std::string::npos ? s : "(" + s + ")";
    };
    return wrap(c) + ">" + wrap(a);
}

VecN word_product(const VecN& x, const VecN& y)
{
    VecN r;
    for (const auto& [u, a] : x)
        for (const auto& [v, b] : y)
            r.add(concat(u, v), a * b);
    return r;
}

}  // namespace

std::map<std::pair<int, int>, int> SweedlerProduct::bigraded_dims() const
{
    std::map<std::pair<int, int>, int> r;
    const GradedSpace& S = forms.algebra.space();
    for (int i = 0; i < S.dim(); ++i)
        ++r[{S.degree(i), S.weight(i)}];
    return r;
}

SweedlerProduct sweedler_product(const DgCoalgebra& C, const DgAlgebra& A, const Truncation& trunc, bool pointed)
{
    if (!C.counit)
        throw std::invalid_argument("the Sweedler product needs a counital coalgebra");
    if (!A.unit)
        throw std::invalid_argument("the Sweedler product needs a unital algebra");
    if (pointed && (!C.atom || !A.augmentation))
        throw std::invalid_argument("the pointed Sweedler product needs a pointed coalgebra and an augmented algebra");
    const GradedSpace& CS = C.space();
    const GradedSpace& AS = A.space();
    const Field& F = C.field();

    SweedlerProduct R;
    R.pointed = pointed;
    R.exact_weight = trunc.weight_cap;
    PresentedAlgebra& P = R.presentation;
    P.field = F;
    P.trunc = trunc;

    const auto unit = A.unit_index();
    const auto atom = pointed ? C.atom_index() : std::nullopt;
    auto weight_of = [&](int a) { return std::max(1, AS.weight(a)); };
    std::map<std::pair<int, int>, int> symbol_of;
    for (int c = 0; c < CS.dim(); ++c) {
        if (atom && c == *atom)
            continue;
        for (int a = 0; a < AS.dim(); ++a) {
            if (unit && a == *unit)
                continue;
            symbol_of[{c, a}] = static_cast<int>(P.generators.size());
            P.generators.push_back(
                {symbol_name(CS.name(c), AS.name(a)), CS.degree(c) + AS.degree(a), weight_of(a), {c, a}});
            R.symbols.push_back({c, a});
        }
    }

    auto sym = [&](int c, int a) {
        if (unit && a == *unit)
            return VecN(Word{}, C.counit->coefficient(c, F));
        if (atom && c == *atom)
            return VecN(Word{}, A.augment(AS.basis_vector(a)));
        return VecN(Word{symbol_of.at({c, a})}, F.one());
    };
    auto sym_lin = [&](const Vec& cv, const Vec& av) {
        VecN r;
        for (const auto& [c, x] : cv)
            for (const auto& [a, y] : av)
                r.add(sym(c, a), x * y);
        return r;
    };
    auto lower_exact_weight = [&](int w) {
        if (w <= trunc.weight_cap)
            R.exact_weight = std::min(R.exact_weight, w - 1);
    };

    // (m)
    for (int c = 0; c < CS.dim(); ++c) {
        if (atom && c == *atom)
            continue;
        Coproduct dc = C.comul(c);
        for (int a = 0; a < AS.dim(); ++a) {
            if (unit && a == *unit)
                continue;
            for (int b = 0; b < AS.dim(); ++b) {
                if (unit && b == *unit)
                    continue;
                const int w = weight_of(a) + weight_of(b);
                Product ab = A.mul(a, b);
                if (!ab.exact || !dc.exact) {
                    lower_exact_weight(w);
                    continue;
                }
                VecN rel = sym_lin(CS.basis_vector(c), ab.value);
                for (const auto& [q, k] : dc.value)
                    rel.add(word_product(sym(q.first, a), sym(q.second, b)),
                            -k * F.sign(long(AS.degree(a)) * CS.degree(q.second)));
                if (!rel.is_zero())
                    P.relations.push_back(std::move(rel));
            }
        }
    }
    // (u) when the unit is not a basis element.
    if (!unit)
        for (int c = 0; c < CS.dim(); ++c) {
            VecN rel = sym_lin(CS.basis_vector(c), *A.unit);
            rel.add(Word{}, -C.counit->coefficient(c, F));
            if (!rel.is_zero())
                P.relations.push_back(std::move(rel));
        }
    // (a) when the atom is not a basis element.
    if (pointed && !atom)
        for (int a = 0; a < AS.dim(); ++a) {
            VecN rel = sym_lin(*C.atom, AS.basis_vector(a));
            rel.add(Word{}, -A.augment(AS.basis_vector(a)));
            if (!rel.is_zero())
                P.relations.push_back(std::move(rel));
        }

    // (d) d(c>a) = dc>a + (-1)^{|c|} c>da.
    P.differential.resize(P.generators.size());
    for (std::size_t g = 0; g < R.symbols.size(); ++g) {
        auto [c, a] = R.symbols[g];
        if (!C.dg.d_exact[c] || !A.dg.d_exact[a])
            lower_exact_weight(weight_of(a));
        P.differential[g] = sym_lin(C.dg.d[c], AS.basis_vector(a)) +
                            sym_lin(CS.basis_vector(c), A.dg.d[a]).scaled(F.sign(CS.degree(c)));
    }

    if (A.augmentation) {
        std::vector<Scalar> eps;
        for (auto [c, a] : R.symbols)
            eps.push_back(C.counit->coefficient(c, F) * A.augmentation->coefficient(a, F));
        P.augmentation = eps;
    }

    R.forms = normal_forms(P);
    auto reduce = R.forms.reduce;
    auto table = std::make_shared<std::map<std::pair<int, int>, VecN>>();
    for (int c = 0; c < CS.dim(); ++c)
        for (int a = 0; a < AS.dim(); ++a)
            table->emplace(std::make_pair(c, a), sym(c, a));
    R.phi = [reduce, table](int c, int a) {
        Product p;
        p.value = reduce(table->at({c, a}), &p.exact);
        return p;
    };
    return R;
}

ExampleKind parse_example_kind(const std::string& text)
{
    if (text == "matrix")
        return ExampleKind::matrix;
    if (text == "diff_alg" || text == "diff-alg")
        return ExampleKind::diff_alg;
    if (text == "jet")
        return ExampleKind::jet;
    if (text == "divided_jet" || text == "divided-jet")
        return ExampleKind::divided_jet;
    throw std::invalid_argument("unknown example kind: " + text);
}

DgAlgebra matrix_algebra(int n, const Field& field)
{
    if (n < 1)
        throw std::invalid_argument("matrix size must be positive");
    std::vector<BasisElement> elems;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            elems.push_back({"E" + std::to_string(i) + "_" + std::to_string(j), 0, 1, {}});
    auto S = std::make_shared<GradedSpace>(field, Truncation{0, 0, 1}, std::move(elems));
    auto idx = [&](int i, int j) { return *S->find("E" + std::to_string(i) + "_" + std::to_string(j)); };
    ProductTable t;
    Vec unit;
    for (int i = 1; i <= n; ++i) {
        unit.add(idx(i, i), field.one());
        for (int j = 1; j <= n; ++j)
            for (int l = 1; l <= n; ++l)
                t[{idx(i, j), idx(j, l)}] = Vec(idx(i, l), field.one());
    }
    std::optional<Vec> aug;
    if (n == 1)
        aug = unit;
    return algebra_from_table(S, std::move(t), unit, aug, std::vector<Vec>(S->dim()));
}

DgCoalgebra primitive_coalgebra(int degree, const Field& field)
{
    if (degree == 0)
        throw std::invalid_argument("a primitive element of degree 0 is not allowed here (it would not be "
                                    "graded-distinguished from the atom)");
    auto S = std::make_shared<GradedSpace>(
        field, Truncation{std::min(0, degree), std::max(0, degree), 1},
        std::vector<BasisElement>{{"1", 0, 0, {}}, {"delta", degree, 1, {}}});
    int one = *S->find("1"), d = *S->find("delta");
    std::vector<Vec2> table(2);
    table[one] = Vec2({one, one}, field.one());
    table[d] = Vec2({d, one}, field.one()) + Vec2({one, d}, field.one());
    return coalgebra_from_table(S, std::move(table), Vec(one, field.one()), Vec(one, field.one()),
                                std::vector<Vec>(2));
}

DgCoalgebra example_coalgebra(ExampleKind kind, int n, const Field& field)
{
    switch (kind) {
    case ExampleKind::matrix:
        return finite_dual(matrix_algebra(n, field));
    case ExampleKind::diff_alg:
        return primitive_coalgebra(n, field);
    case ExampleKind::jet:
    case ExampleKind::divided_jet: {
        if (n < 0)
            throw std::invalid_argument("jet order must be non-negative");
        auto X = std::make_shared<GradedSpace>(field, Truncation{0, 0, 1},
                                               std::vector<BasisElement>{{"x", 0, 1, {}}});
        Truncation t{0, 0, std::max(n, 1)};
        FreeCoalgebra T = kind == ExampleKind::jet ? tensor_coalgebra(DgSpace::zero(X), t)
                                                   : coshuffle_coalgebra(DgSpace::zero(X), t);
        if (n == 0) {
            // Only the empty word: the coalgebra F.
            auto S = std::make_shared<GradedSpace>(field, Truncation{0, 0, 0},
                                                   std::vector<BasisElement>{{"1", 0, 0, {}}});
            return coalgebra_from_table(S, {Vec2({0, 0}, field.one())}, Vec(0, field.one()), Vec(0, field.one()),
                                        std::vector<Vec>(1));
        }
        return T.coalgebra;
    }
    }
    throw std::logic_error("unreachable");
}

SweedlerProduct example_construction(ExampleKind kind, int n, const DgAlgebra& A, const Truncation& trunc)
{
    return sweedler_product(example_coalgebra(kind, n, A.field()), A, trunc, false);
}

std::map<int, int> de_rham_dims(const DgAlgebra& A, int n, int max_power)
{
    OmegaBimodule O = omega_bimodule(A);
    std::map<int, int> r;
    for (int k = 0; k <= max_power; ++k)
        for (auto [d, m] : omega_power_dims(A, O, k))
            if (m > 0)
                r[d + k * n] += m;
    return r;
}

Vec SweedlerHom::evaluate(int letter, int x) const
{
    const auto& key = hom->key(letter);
    if (key[0] != x)
        return {};
    return Vec(target_index[key[1]], hom->field().one());
}

SweedlerHom sweedler_hom_free(const FreeAlgebra& T, const DgAlgebra& B, const Truncation& trunc, bool conilpotent)
{
    const GradedSpace& X = *T.letters;
    const GradedSpace& BS = B.space();
    const Field& F = BS.field();
    SweedlerHom R;
    R.conilpotent = conilpotent;
    if (conilpotent)
        R.target_index = B.augmentation_ideal_basis();
    else
        for (int j = 0; j < BS.dim(); ++j)
            R.target_index.push_back(j);
    std::vector<BasisElement> elems;
    for (int j : R.target_index)
        elems.push_back({BS.name(j), BS.degree(j), 1, {j}});
    auto target = std::make_shared<GradedSpace>(F, BS.window(), std::move(elems));
    R.hom = hom_space(X, *target);
    require_cofree_regime(*R.hom);
    R.coalgebra = tensor_coalgebra(DgSpace::zero(R.hom), trunc);

    auto Bp = std::make_shared<DgAlgebra>(B);
    auto Tp = std::make_shared<FreeAlgebra>(T);
    auto H = R.hom;
    auto targets = std::make_shared<std::vector<int>>(R.target_index);
    auto eval = [H, targets, F](int letter, int x) {
        const auto& key = H->key(letter);
        return key[0] == x ? Vec((*targets)[key[1]], F.one()) : Vec{};
    };
    // p(h|x) for words h over H and x over X.
    auto pairing = [H, Tp, Bp, eval, F](const Word& h, const Word& x) {
        Product r;
        if (h.size() != x.size())
            return r;
        if (h.empty()) {
            r.value = *Bp->unit;
            return r;
        }
        long sign = 0;
        for (std::size_t i = 0; i < h.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                sign += long(H->degree(h[i])) * Tp->letters->degree(x[j]);
        r.value = eval(h[0], x[0]);
        for (std::size_t i = 1; i < h.size() && !r.value.is_zero(); ++i) {
            Product p = Bp->multiply(r.value, eval(h[i], x[i]));
            r.value = p.value;
            r.exact = r.exact && p.exact;
        }
        r.value = r.value.scaled(F.sign(sign));
        return r;
    };
    auto W = R.coalgebra.coalgebra.dg.space;
    auto TW = T.algebra.dg.space;
    R.measuring = [W, TW, pairing](int w, int t) { return pairing(word_of(*W, w), word_of(*TW, t)); };

    R.corestriction = [H, Tp, Bp, targets, pairing, eval, F, conilpotent](const Word& h, bool* exact) {
        const GradedSpace& XS = *Tp->letters;
        const GradedSpace& TS = Tp->algebra.space();
        long deg = 0;
        for (int l : h)
            deg += H->degree(l);
        Vec out;
        for (int x = 0; x < XS.dim(); ++x) {
            Vec img;
            if (h.size() == 1) {
                bool e = true;
                img = Bp->dg.differential(eval(h[0], x), &e);
                if (exact)
                    *exact = *exact && e;
            }
            int xw = *find_word(TS, Word{x});
            if (exact)
                *exact = *exact && Tp->algebra.dg.d_exact[xw];
            for (const auto& [t, k] : Tp->algebra.dg.d[xw]) {
                Product p = pairing(h, word_of(TS, t));
                if (exact)
                    *exact = *exact && p.exact;
                img.add(p.value, -k * F.sign(deg));
            }
            for (const auto& [b, k] : img) {
                auto pos = std::find(targets->begin(), targets->end(), b);
                if (pos == targets->end()) {
                    if (conilpotent)
                        throw std::logic_error("corestriction leaves the augmentation ideal");
                    continue;
                }
                out.add(*H->find_key({x, static_cast<int>(pos - targets->begin())}), k);
            }
        }
        return out;
    };
    R.coalgebra.coalgebra.dg = coextend_coderivation(R.coalgebra, R.corestriction, -1);
    return R;
}

Check check_corestriction(const SweedlerHom& H, int max_length)
{
    Check chk{"corestriction q(d h) = d_B h# i - (-1)^{|h|} h# d1 i"};
    const GradedSpace& W = H.coalgebra.coalgebra.space();
    const DgSpace& D = H.coalgebra.coalgebra.dg;
    for (int w = 0; w < W.dim(); ++w) {
        Word h = word_of(W, w);
        if (static_cast<int>(h.size()) > max_length)
            continue;
        bool exact = D.d_exact[w];
        Vec expected = H.corestriction(h, &exact);
        if (!exact) {
            ++chk.skipped;
            continue;
        }
        ++chk.checked;
        Vec got;
        for (const auto& [i, c] : D.d[w]) {
            Word u = word_of(W, i);
            if (u.size() == 1)
                got.add(u[0], c);
        }
        if (!(got == expected))
            chk.fail("q(d " + W.name(w) + ") = " + H.hom->format(got) + " but the formula gives " +
                     H.hom->format(expected));
    }
    return chk;
}

SweedlerDual sweedler_dual(const DgAlgebra& A)
{
    SweedlerDual R;
    R.coalgebra = finite_dual(A);
    R.ground = ground_algebra(A.field());
    auto D = R.coalgebra.dg.space;
    R.evaluation = [D](int phi, int a) {
        Product r;
        if (D->key(phi)[0] == a)
            r.value = Vec(0, D->field().one());
        return r;
    };
    return R;
}

}  // namespace dgkit
