#include <doctest.h>

#include "helpers.hpp"

using namespace dgtest;

namespace {

const Field Q = Field::rationals();

Vec2 pair(const GradedSpace& S, const std::string& a, const std::string& b, long c = 1)
{
    return Vec2({*S.find(a), *S.find(b)}, Q.of(c));
}

/// F{e, c1..cn} with every basis element grouplike, pointed at e.
DgCoalgebra diagonal(int n)
{
    std::vector<std::pair<std::string, int>> b{{"e", 0}};
    for (int i = 1; i <= n; ++i)
        b.push_back({"c" + std::to_string(i), 0});
    auto S = make_space(b);
    std::vector<Vec2> t;
    Vec counit;
    for (int i = 0; i <= n; ++i) {
        t.push_back(Vec2({i, i}, Q.one()));
        counit.add(i, Q.one());
    }
    return coalgebra_from_table(S, t, counit, Vec(0, Q.one()), std::vector<Vec>(n + 1));
}

/// F{e, d} with d primitive of the given degree.
DgCoalgebra primitive(int degree)
{
    auto S = make_space({{"e", 0}, {"d", degree}});
    std::vector<Vec2> t{Vec2({0, 0}, Q.one()), Vec2({0, 1}, Q.one()) + Vec2({1, 0}, Q.one())};
    return coalgebra_from_table(S, t, Vec(0, Q.one()), Vec(0, Q.one()), std::vector<Vec>(2));
}

DgAlgebra table_algebra(SpacePtr S, ProductTable t, std::vector<Vec> d)
{
    return algebra_from_table(S, std::move(t), Vec(0, Q.one()), Vec(0, Q.one()), std::move(d));
}

/// Exterior algebra on x, y of degree 1.
DgAlgebra exterior()
{
    auto S = make_space({{"1", 0}, {"x", 1}, {"y", 1}, {"xy", 2}});
    ProductTable t;
    for (int i = 0; i < 4; ++i) {
        t[{0, i}] = Vec(i, Q.one());
        t[{i, 0}] = Vec(i, Q.one());
    }
    t[{1, 2}] = Vec(3, Q.one());
    t[{2, 1}] = Vec(3, Q.of(-1));
    return table_algebra(S, t, std::vector<Vec>(4));
}

/// 1, a (degree 1), b (degree 0) with da = b and all products of a, b zero.
DgAlgebra cone()
{
    auto S = make_space({{"1", 0}, {"b", 0}, {"a", 1}});
    ProductTable t;
    for (int i = 0; i < 3; ++i) {
        t[{0, i}] = Vec(i, Q.one());
        t[{i, 0}] = Vec(i, Q.one());
    }
    std::vector<Vec> d(3);
    d[2] = Vec(1, Q.one());
    return table_algebra(S, t, d);
}

int w(const GradedSpace& W, Word x) { return *find_word(W, x); }

}  // namespace

TEST_CASE("tensor coalgebra")
{
    auto X = make_space({{"x", 1}, {"y", 0}});
    DgSpace dX = DgSpace::zero(X);
    dX.d[0] = Vec(1, Q.one());
    FreeCoalgebra T = tensor_coalgebra(dX, Truncation{0, 8, 4});
    const auto& W = T.coalgebra.space();
    int one = w(W, {}), x1 = w(W, {0}), x2 = w(W, {1}), x12 = w(W, {0, 1});
    CHECK(T.coalgebra.comul(one).value == Vec2({one, one}, Q.one()));
    Vec2 expect = Vec2({one, x12}, Q.one()) + Vec2({x1, x2}, Q.one()) + Vec2({x12, one}, Q.one());
    CHECK(T.coalgebra.comul(x12).value == expect);
    auto checks = check_coalgebra(T.coalgebra);
    CHECK(all_pass(checks));
    CHECK(checks[0].checked == static_cast<std::size_t>(W.dim()));
}

TEST_CASE("odd binomial table")
{
    std::vector<std::vector<long>> table{{1},
                                         {1, 1},
                                         {1, 0, 1},
                                         {1, 1, 1, 1},
                                         {1, 0, 2, 0, 1},
                                         {1, 1, 2, 2, 1, 1},
                                         {1, 0, 3, 0, 3, 0, 1},
                                         {1, 1, 3, 3, 3, 3, 1, 1},
                                         {1, 0, 4, 0, 6, 0, 4, 0, 1}};
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(odd_binomial(n, k) == table[n][k]);
    auto binom = [](int n, int k) {
        long r = 1;
        for (int i = 1; i <= k; ++i)
            r = r * (n - k + i) / i;
        return r;
    };
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(odd_binomial(2 * n, 2 * k) == binom(n, k));
    for (int n = 0; n <= 12; ++n)
        CHECK(odd_binomial(n, 0) == 1);
    CHECK_THROWS_AS(odd_binomial(3, 4), OutOfRange);
    CHECK_THROWS_AS(odd_binomial(-1, 0), OutOfRange);
}

TEST_CASE("coshuffle coalgebra")
{
    // One odd generator: coefficients are the odd binomials.
    auto U = make_space({{"u", 1}});
    FreeCoalgebra T = coshuffle_coalgebra(DgSpace::zero(U), Truncation{0, 8, 8});
    const auto& W = T.coalgebra.space();
    for (int n = 0; n <= 8; ++n) {
        Vec2 expect;
        for (int k = 0; k <= n; ++k)
            expect.add({w(W, Word(k, 0)), w(W, Word(n - k, 0))}, Q.of(odd_binomial(n, k)));
        CHECK(T.coalgebra.comul(w(W, Word(n, 0))).value == expect);
    }
    CHECK(T.coalgebra.comul(w(W, {0, 0})).value ==
          Vec2({w(W, {0, 0}), w(W, {})}, Q.one()) + Vec2({w(W, {}), w(W, {0, 0})}, Q.one()));
    CHECK(check_cocommutative(T.coalgebra).pass);

    auto X = make_space({{"x", 2}});
    FreeCoalgebra TX = coshuffle_coalgebra(DgSpace::zero(X), Truncation{0, 8, 4});
    const auto& WX = TX.coalgebra.space();
    CHECK(TX.coalgebra.comul(w(WX, {0, 0})).value == Vec2({w(WX, {0, 0}), w(WX, {})}, Q.one()) +
                                                        Vec2({w(WX, {0}), w(WX, {0})}, Q.of(2)) +
                                                        Vec2({w(WX, {}), w(WX, {0, 0})}, Q.one()));

    // Two generators: coshuffle is an algebra map for concatenation.
    auto Y = make_space({{"a", 1}, {"b", 2}});
    DgSpace dY = DgSpace::zero(Y);
    FreeCoalgebra C = coshuffle_coalgebra(dY, Truncation{0, 12, 3});
    FreeAlgebra A = tensor_algebra(dY, Truncation{0, 12, 3});
    REQUIRE(same_basis(A.algebra.space(), C.coalgebra.space()));
    auto bialg = check_bialgebra(A.algebra, C.coalgebra);
    CHECK(all_pass(bialg));
    CHECK(bialg[0].checked > 0);
    CHECK(all_pass(check_coalgebra(C.coalgebra)));

    // Deconcatenation is not cocommutative on two-letter words.
    FreeCoalgebra D = tensor_coalgebra(dY, Truncation{0, 12, 3});
    Check cc = check_cocommutative(D.coalgebra);
    CHECK(!cc.pass);
    CHECK(!cc.witness.empty());
}

TEST_CASE("radical")
{
    auto X = make_space({{"x", 1}, {"y", 2}});
    FreeCoalgebra T = tensor_coalgebra(DgSpace::zero(X), Truncation{0, 8, 3});
    RadicalReport R = radical(T.coalgebra);
    CHECK(static_cast<int>(R.basis.size()) == T.coalgebra.space().dim());
    CHECK(R.proven);

    DgCoalgebra D = diagonal(1);
    RadicalReport RD = radical(D);
    REQUIRE(RD.basis.size() == 1);
    CHECK(RD.basis[0] == Vec(0, Q.one()));
    CHECK(!RD.proven);
    CHECK(RD.closed_under_coproduct);

    DgCoalgebra P = primitive(1);
    RadicalReport RP = radical(P);
    CHECK(RP.basis.size() == 2);
    CHECK(RP.proven);
}

TEST_CASE("primitives")
{
    auto X = make_space({{"x", 1}, {"y", 2}});
    FreeCoalgebra T = tensor_coalgebra(DgSpace::zero(X), Truncation{0, 8, 3});
    auto prim = primitives(T.coalgebra);
    CHECK(prim.size() == 2);
    for (const auto& p : prim)
        for (const auto& [i, c] : p)
            CHECK(word_of(T.coalgebra.space(), i).size() == 1);

    CHECK(primitives(diagonal(2)).empty());

    DgCoalgebra P = primitive(1);
    CHECK(primitives(P).size() == 1);
    DgCoalgebra CD = coalgebra_tensor(T.coalgebra, P);
    CHECK(all_pass(check_coalgebra(CD)));
    CHECK(primitives(CD).size() == 3);

    DgCoalgebra bad = diagonal(1);
    bad.atom = Vec(0, Q.one()) + Vec(1, Q.one());
    CHECK_THROWS_AS(primitives(bad), NotAnAtom);
}

TEST_CASE("coderivation coextension")
{
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> c(-2, 2);
    auto X = make_space({{"x", 1}, {"y", 2}, {"z", 3}});
    FreeCoalgebra T = tensor_coalgebra(DgSpace::zero(X), Truncation{0, 9, 3});
    const auto& W = T.coalgebra.space();

    DgSpace zero = coextend_coderivation(T, [](const Word&, bool*) { return Vec{}; }, 1);
    for (const auto& v : zero.d)
        CHECK(v.is_zero());

    // Random corestrictions on words of length <= 2.
    auto random_phi = [&](int degree) {
        auto table = std::make_shared<std::map<Word, Vec>>();
        for (int i = 0; i < W.dim(); ++i) {
            Word x = word_of(W, i);
            if (x.empty() || x.size() > 2)
                continue;
            Vec v;
            for (int l = 0; l < 3; ++l)
                if (X->degree(l) == word_degree(*X, x) + degree)
                    v.add(l, Q.of(c(rng)));
            (*table)[x] = v;
        }
        return WordCochain([table](const Word& x, bool*) {
            auto it = table->find(x);
            return it == table->end() ? Vec{} : it->second;
        });
    };
    for (int k = 0; k < 4; ++k) {
        DgSpace D1 = coextend_coderivation(T, random_phi(1), 1);
        DgSpace D2 = coextend_coderivation(T, random_phi(-1), -1);
        DgSpace D3 = coextend_coderivation(T, random_phi(1), 1);
        CHECK(check_coderivation(T.coalgebra, D1.d, 1).pass);
        CHECK(check_coderivation(T.coalgebra, D2.d, -1).pass);
        CHECK(check_coderivation(T.coalgebra, commutator(T.coalgebra, D1.d, 1, D2.d, -1), 0).pass);
        CHECK(check_coderivation(T.coalgebra, commutator(T.coalgebra, D1.d, 1, D3.d, 1), 2).pass);
        std::vector<Vec> sq;
        for (int i = 0; i < W.dim(); ++i) {
            Vec r;
            for (const auto& [j, cj] : D1.d[i])
                r.add(D1.d[j], cj);
            sq.push_back(r);
        }
        CHECK(check_coderivation(T.coalgebra, sq, 2).pass);

        // The corestriction determines the coderivation.
        auto Wp = T.coalgebra.dg.space;
        std::vector<Vec> dd = D1.d;
        DgSpace again = coextend_coderivation(T,
                                              [Wp, dd](const Word& x, bool*) {
                                                  Vec r;
                                                  for (const auto& [j, cj] : dd[*find_word(*Wp, x)]) {
                                                      Word y = word_of(*Wp, j);
                                                      if (y.size() == 1)
                                                          r.add(y[0], cj);
                                                  }
                                                  return r;
                                              },
                                              1);
        for (int i = 0; i < W.dim(); ++i)
            if (D1.d_exact[i])
                CHECK(again.d[i] == D1.d[i]);

        CHECK(preserved_by(T.coalgebra, radical(T.coalgebra), D1.d));
    }
}

TEST_CASE("cofree regime and coalgebra map coextension")
{
    auto mixed = make_space({{"x", 1}, {"y", -1}});
    CHECK_THROWS_AS(cofree_coalgebra(DgSpace::zero(mixed), Truncation{}), RegimeViolation);
    auto zero_deg = make_space({{"x", 0}});
    CHECK_THROWS_AS(cofree_coalgebra(DgSpace::zero(zero_deg), Truncation{}), RegimeViolation);

    auto X = make_space({{"x", 1}, {"y", 2}});
    FreeCoalgebra T = cofree_coalgebra(DgSpace::zero(X), Truncation{0, 8, 4});
    const auto& W = T.coalgebra.space();
    // f = p: the coextension is the identity.
    std::vector<Vec> p(W.dim());
    for (int i = 0; i < W.dim(); ++i)
        if (word_of(W, i).size() == 1)
            p[i] = Vec(word_of(W, i)[0], Q.one());
    CoalgebraMap id = coextend_map(T.coalgebra, T, p);
    for (int i = 0; i < W.dim(); ++i)
        CHECK(id.images[i] == W.basis_vector(i));

    // Primitive source: g(d) = x.
    DgCoalgebra P = primitive(1);
    CoalgebraMap g = coextend_map(P, T, {Vec{}, Vec(0, Q.one())});
    CHECK(g.images[1] == W.basis_vector(w(W, {0})));
    CHECK(g.images[0] == W.basis_vector(w(W, {})));
    CHECK(all_pass(check_coalgebra_map(P, T.coalgebra, g.images, g.exact)));

    // Random f from a word coalgebra on a degree-1 and a degree-2 letter.
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> c(-2, 2);
    auto Y = make_space({{"a", 1}, {"b", 1}, {"c", 2}});
    FreeCoalgebra S = tensor_coalgebra(DgSpace::zero(Y), Truncation{0, 8, 3});
    for (int k = 0; k < 4; ++k) {
        std::vector<Vec> f(S.coalgebra.space().dim());
        for (int i = 0; i < S.coalgebra.space().dim(); ++i)
            for (int l = 0; l < 2; ++l)
                if (X->degree(l) == S.coalgebra.space().degree(i) && !word_of(S.coalgebra.space(), i).empty())
                    f[i].add(l, Q.of(c(rng)));
        FreeCoalgebra Tbig = cofree_coalgebra(DgSpace::zero(X), Truncation{0, 8, 6});
        CoalgebraMap h = coextend_map(S.coalgebra, Tbig, f);
        CHECK(all_pass(check_coalgebra_map(S.coalgebra, Tbig.coalgebra, h.images, h.exact)));
    }

    // A non-conilpotent source is refused.
    auto Z = make_space({{"z", -1}});
    FreeCoalgebra TZ = cofree_coalgebra(DgSpace::zero(Z), Truncation{-8, 0, 3});
    DgCoalgebra D = diagonal(1);
    auto D0 = make_space({{"w", 0}});
    FreeCoalgebra TW = tensor_coalgebra(DgSpace::zero(D0), Truncation{-8, 8, 3});
    CHECK_THROWS_AS(coextend_map(D, TW, {Vec{}, Vec(0, Q.one())}), NotConilpotent);
    CoalgebraMap loose = coextend_map(D, TW, {Vec{}, Vec(0, Q.one())}, 0, false);
    CHECK(!loose.exact[1]);
    (void)TZ;
}

TEST_CASE("shuffle and quasi-shuffle products")
{
    auto X = make_space({{"x", 1}, {"y", 1}});
    FreeCoalgebra T = tensor_coalgebra(DgSpace::zero(X), Truncation{0, 8, 4});
    DgAlgebra sh = quasi_shuffle(T);
    const auto& W = T.coalgebra.space();
    int x = w(W, {0}), y = w(W, {1});
    CHECK(sh.mul(x, y).value == Vec(w(W, {0, 1}), Q.one()) + Vec(w(W, {1, 0}), Q.of(-1)));
    CHECK(sh.mul(x, x).value.is_zero());
    for (int i = 0; i < W.dim(); ++i)
        CHECK(sh.mul(w(W, {}), i).value == W.basis_vector(i));
    CHECK(all_pass(check_algebra(sh)));
    CHECK(all_pass(check_bialgebra(sh, T.coalgebra)));

    // Degree-0 distinct letters: the coefficient sum of p-word times q-word is C(p+q, p).
    auto Z = make_space({{"a", 0}, {"b", 0}, {"c", 0}, {"d", 0}});
    FreeCoalgebra TZ = tensor_coalgebra(DgSpace::zero(Z), Truncation{0, 0, 4});
    DgAlgebra shz = quasi_shuffle(TZ);
    auto sum = [](const Vec& v) {
        Scalar s = Q.zero();
        for (const auto& [i, c] : v)
            s += c;
        return s;
    };
    const auto& WZ = TZ.coalgebra.space();
    CHECK(sum(shz.mul(w(WZ, {0, 1}), w(WZ, {2, 3})).value) == Q.of(6));
    CHECK(sum(shz.mul(w(WZ, {0}), w(WZ, {1, 2, 3})).value) == Q.of(4));

    // Quasi-shuffle over eps^2 = 0 (zero letter product) and over an idempotent letter.
    auto E = make_space({{"e", 0}});
    FreeCoalgebra TE = tensor_coalgebra(DgSpace::zero(E), Truncation{0, 0, 3});
    DgAlgebra qe = quasi_shuffle(TE, [](int, int) { return Vec{}; });
    CHECK(all_pass(check_algebra(qe)));
    DgAlgebra qi = quasi_shuffle(TE, [](int, int) { return Vec(0, Q.one()); });
    CHECK(all_pass(check_algebra(qi)));
    CHECK(all_pass(check_bialgebra(qi, TE.coalgebra)));
    const auto& WE = TE.coalgebra.space();
    // e * e = 2 ee + e.
    CHECK(qi.mul(w(WE, {0}), w(WE, {0})).value == Vec(w(WE, {0, 0}), Q.of(2)) + Vec(w(WE, {0}), Q.one()));
}

TEST_CASE("finite duals")
{
    DgAlgebra F = table_algebra(make_space({{"1", 0}}), {{{0, 0}, Vec(0, Q.one())}}, std::vector<Vec>(1));
    DgCoalgebra Fd = finite_dual(F);
    CHECK(Fd.space().dim() == 1);
    CHECK(Fd.comul(0).value == Vec2({0, 0}, Q.one()));

    auto S = make_space({{"1", 0}, {"e", 0}});
    ProductTable t{{{0, 0}, Vec(0, Q.one())}, {{0, 1}, Vec(1, Q.one())}, {{1, 0}, Vec(1, Q.one())}};
    DgAlgebra D = table_algebra(S, t, std::vector<Vec>(2));
    DgCoalgebra Dd = finite_dual(D);
    const auto& DS = Dd.space();
    CHECK(Dd.comul(*DS.find("e*")).value == pair(DS, "e*", "1*") + pair(DS, "1*", "e*"));
    CHECK(Dd.comul(*DS.find("1*")).value == pair(DS, "1*", "1*"));
    CHECK(all_pass(check_coalgebra(Dd)));

    for (DgAlgebra A : {D, exterior(), cone()}) {
        CHECK(all_pass(check_algebra(A)));
        DgCoalgebra Ad = finite_dual(A);
        CHECK(all_pass(check_coalgebra(Ad)));
        DgAlgebra Add = dual_algebra(Ad);
        CHECK(all_pass(check_algebra(Add)));
        GradedMap i = double_dual_map(A.dg.space, Add.dg.space);
        const auto& AS = A.space();
        for (int a = 0; a < AS.dim(); ++a) {
            CHECK(i.apply(A.dg.d[a]) == Add.dg.differential(i.columns[a]));
            for (int b = 0; b < AS.dim(); ++b)
                CHECK(i.apply(A.mul(a, b).value) == Add.multiply(i.columns[a], i.columns[b]).value);
        }
        CHECK(i.apply(*A.unit) == *Add.unit);
    }

    // Mixed signs leave both ends of the window truncated.
    FreeAlgebra M = tensor_algebra(DgSpace::zero(make_space({{"x", 1}, {"y", -1}})), Truncation{-3, 3, 3});
    CHECK_THROWS_AS(finite_dual(M.algebra), NotGradedFinite);
}

TEST_CASE("dual of a truncated tensor algebra is the tensor coalgebra on the dual letter")
{
    const int L = 6;
    FreeAlgebra T = tensor_algebra(DgSpace::zero(make_space({{"x", 1}})), Truncation{0, L, L});
    DgCoalgebra Td = finite_dual(T.algebra);
    FreeCoalgebra Tc = tensor_coalgebra(DgSpace::zero(graded_dual(*T.letters)), Truncation{-L, 0, L});
    CHECK(Td.space().dims().size() == Tc.coalgebra.space().dims().size());
    for (int n = 0; n <= L; ++n)
        CHECK(Td.space().in_degree(-n).size() == Tc.coalgebra.space().in_degree(-n).size());
    // (x^n)* -> (-1)^{n(n-1)/2} (x*)^n is comultiplicative.
    const auto& DS = Td.space();
    const auto& CS = Tc.coalgebra.space();
    auto phi = [&](int i) {
        int n = static_cast<int>(word_of(T.algebra.space(), DS.key(i)[0]).size());
        return std::make_pair(*find_word(CS, Word(n, 0)), Q.sign(long(n) * (n - 1) / 2));
    };
    for (int i = 0; i < DS.dim(); ++i) {
        Coproduct c = Td.comul(i);
        REQUIRE(c.exact);
        Vec2 mapped;
        for (const auto& [p, k] : c.value) {
            auto [a, sa] = phi(p.first);
            auto [b, sb] = phi(p.second);
            mapped.add({a, b}, k * sa * sb);
        }
        auto [t, st] = phi(i);
        CHECK(mapped == Tc.coalgebra.comul(t).value.scaled(st));
    }
    CHECK(all_pass(check_coalgebra(Td)));
}
