#pragma once

#include <functional>
#include <random>

#include "dgkit/coalgebra.hpp"
#include "dgkit/linalg.hpp"
#include "dgkit/presented.hpp"

namespace dgtest {

using namespace dgkit;

inline SpacePtr make_space(std::vector<std::pair<std::string, int>> basis, Field f = Field::rationals(),
                           Truncation t = {})
{
    std::vector<BasisElement> elems;
    for (auto& [n, d] : basis)
        elems.push_back({n, d, 1, {}});
    return std::make_shared<GradedSpace>(f, t, std::move(elems));
}

inline Vec vec(const GradedSpace& S, std::vector<std::pair<std::string, long>> terms)
{
    Vec v;
    for (auto& [n, c] : terms)
        v.add(*S.find(n), S.field().of(c));
    return v;
}

/// Random homogeneous map with coefficients in [-2, 2].
inline GradedMap random_map(SpacePtr X, SpacePtr Y, int degree, std::mt19937& rng)
{
    std::uniform_int_distribution<int> coef(-2, 2);
    GradedMap f = GradedMap::zero(X, Y, degree);
    for (int i = 0; i < X->dim(); ++i)
        for (int j : Y->in_degree(X->degree(i) + degree))
            f.columns[i].add(j, X->field().of(coef(rng)));
    return f;
}

/// Algebra with unit and augmentation on the first basis element.
inline DgAlgebra unital_table(SpacePtr S, ProductTable t, std::vector<Vec> d = {})
{
    const Field& F = S->field();
    int one = *S->find("1");
    for (int i = 0; i < S->dim(); ++i) {
        t[{one, i}] = Vec(i, F.one());
        t[{i, one}] = Vec(i, F.one());
    }
    if (d.empty())
        d.resize(S->dim());
    return algebra_from_table(S, std::move(t), Vec(one, F.one()), Vec(one, F.one()), std::move(d));
}

/// F[e]/(e^2) with e of the given degree.
inline DgAlgebra fx_dual_numbers(Field F = Field::rationals(), int degree = 0)
{
    auto S = make_space({{"1", 0}, {"e", degree}}, F);
    return unital_table(S, {});
}

/// Exterior algebra on x, y of degree 1.
inline DgAlgebra fx_exterior(Field F = Field::rationals())
{
    auto S = make_space({{"1", 0}, {"x", 1}, {"y", 1}, {"xy", 2}}, F);
    ProductTable t;
    t[{*S->find("x"), *S->find("y")}] = vec(*S, {{"xy", 1}});
    t[{*S->find("y"), *S->find("x")}] = vec(*S, {{"xy", -1}});
    return unital_table(S, t);
}

/// 1, z (degree 1), y (degree 2), dy = z, products of z, y zero.
inline DgAlgebra fx_cone(Field F = Field::rationals())
{
    auto S = make_space({{"1", 0}, {"z", 1}, {"y", 2}}, F);
    std::vector<Vec> d(S->dim());
    d[*S->find("y")] = vec(*S, {{"z", 1}});
    return unital_table(S, {}, d);
}

/// F{g1..gn}, every basis element grouplike of counit 1, no atom.
inline DgCoalgebra fx_grouplikes(int n, Field F = Field::rationals())
{
    std::vector<std::pair<std::string, int>> b;
    for (int i = 1; i <= n; ++i)
        b.push_back({"g" + std::to_string(i), 0});
    auto S = make_space(b, F);
    std::vector<Vec2> t;
    Vec counit;
    for (int i = 0; i < n; ++i) {
        t.push_back(Vec2({i, i}, F.one()));
        counit.add(i, F.one());
    }
    return coalgebra_from_table(S, t, counit, std::nullopt, std::vector<Vec>(n));
}

/// Pointed F{e, c} with Delta c = c|c + c|e + e|c and counit(c) = 0.
inline DgCoalgebra fx_diagonal_pointed(Field F = Field::rationals())
{
    auto S = make_space({{"e", 0}, {"c", 0}}, F);
    int e = *S->find("e"), c = *S->find("c");
    std::vector<Vec2> t(2);
    t[e] = Vec2({e, e}, F.one());
    t[c] = Vec2({c, c}, F.one()) + Vec2({c, e}, F.one()) + Vec2({e, c}, F.one());
    return coalgebra_from_table(S, t, Vec(e, F.one()), Vec(e, F.one()), std::vector<Vec>(2));
}

/// All homogeneous degree-0 linear maps from S to B, as column lists; only
/// sensible over small prime fields.
inline std::vector<std::vector<Vec>> all_linear_maps(const GradedSpace& S, const GradedSpace& B)
{
    const Field& F = B.field();
    const int p = F.characteristic();
    std::vector<std::vector<Vec>> choices(S.dim());
    for (int i = 0; i < S.dim(); ++i) {
        auto idx = B.in_degree(S.degree(i));
        long count = 1;
        for (std::size_t k = 0; k < idx.size(); ++k)
            count *= p;
        for (long m = 0; m < count; ++m) {
            Vec v;
            long r = m;
            for (int j : idx) {
                v.add(j, F.of(r % p));
                r /= p;
            }
            choices[i].push_back(v);
        }
    }
    std::vector<std::vector<Vec>> out;
    std::vector<Vec> cur(S.dim());
    std::function<void(int)> rec = [&](int i) {
        if (i == S.dim()) {
            out.push_back(cur);
            return;
        }
        for (const auto& v : choices[i]) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

/// Same algebra in a random basis of A_- (degreewise unipotent change),
/// keeping the unit basis element and hence the normalized augmentation.
inline DgAlgebra rebased(const DgAlgebra& A, std::mt19937& rng)
{
    const GradedSpace& S = A.space();
    const Field& F = S.field();
    std::uniform_int_distribution<int> coef(-2, 2);
    const int one = *A.unit_index();
    // P(b_i) = b_i + sum over later basis elements of the same degree.
    std::vector<Vec> P(S.dim());
    for (int i = 0; i < S.dim(); ++i) {
        P[i].add(i, F.one());
        if (i == one)
            continue;
        for (int j : S.in_degree(S.degree(i)))
            if (j > i && j != one)
                P[i].add(j, F.of(coef(rng)));
    }
    auto back = [&](const Vec& v) { return *solve(P, v, F); };
    auto image = [&](const Vec& v) {
        Vec r;
        for (const auto& [i, c] : v)
            r.add(P[i], c);
        return r;
    };
    ProductTable t;
    for (int i = 0; i < S.dim(); ++i)
        for (int j = 0; j < S.dim(); ++j) {
            Vec v = back(A.multiply(P[i], P[j]).value);
            if (!v.is_zero())
                t[{i, j}] = v;
        }
    std::vector<Vec> d;
    for (int i = 0; i < S.dim(); ++i)
        d.push_back(back(A.dg.differential(image(S.basis_vector(i)))));
    return algebra_from_table(A.dg.space, std::move(t), A.unit, A.augmentation, std::move(d));
}

/// F 1 + M with M^2 = 0 and a random complex M in degrees lo..lo+2.
inline DgAlgebra random_square_zero(std::mt19937& rng, Field F, int lo, int max_dim)
{
    std::uniform_int_distribution<int> dim(0, max_dim), coef(-2, 2);
    std::vector<std::pair<std::string, int>> b{{"1", 0}};
    for (int k = 0; k < 3; ++k) {
        int n = dim(rng);
        for (int i = 0; i < n; ++i)
            b.push_back({"m" + std::to_string(k) + std::to_string(i), lo + k});
    }
    auto S = make_space(b, F);
    std::vector<Vec> d(S->dim());
    const int one = *S->find("1");
    auto level = [&](int k) {
        std::vector<int> r;
        for (int i : S->in_degree(lo + k))
            if (i != one)
                r.push_back(i);
        return r;
    };
    // d: level 1 -> level 0 random, level 2 -> ker of that.
    for (int i : level(1))
        for (int j : level(0))
            d[i].add(j, F.of(coef(rng)));
    std::vector<Vec> images;
    for (int i : level(1))
        images.push_back(d[i]);
    std::vector<Vec> ker = kernel(images, F);
    for (int i : level(2)) {
        for (const auto& kv : ker) {
            Scalar c = F.of(coef(rng));
            for (const auto& [pos, x] : kv)
                d[i].add(level(1)[pos], c * x);
        }
    }
    return unital_table(S, {}, d);
}

/// Small random dg-algebra: a square-zero extension, possibly tensored with
/// dual numbers, in a random basis.
inline DgAlgebra random_dg_algebra(std::mt19937& rng, Field F = Field::rationals())
{
    std::uniform_int_distribution<int> lo(-1, 0), pick(0, 2);
    DgAlgebra A = random_square_zero(rng, F, lo(rng), 2);
    switch (pick(rng)) {
    case 0:
        A = algebra_tensor(A, fx_dual_numbers(F, 1));
        break;
    case 1:
        A = algebra_tensor(fx_dual_numbers(F, 0), A);
        break;
    default:
        break;
    }
    // Materialize under plain names so the unit is the basis element "1".
    auto table = product_table(A);
    std::vector<std::pair<std::string, int>> names;
    const int u = *A.unit_index();
    for (int i = 0; i < A.space().dim(); ++i)
        names.push_back({i == u ? std::string("1") : "b" + std::to_string(i), A.space().degree(i)});
    auto S = make_space(names, F);
    auto reindex = [&](const Vec& v) {
        Vec r;
        for (const auto& [i, c] : v)
            r.add(*S->find(names[i].first), c);
        return r;
    };
    ProductTable t;
    for (const auto& [k, v] : table)
        t[{*S->find(names[k.first].first), *S->find(names[k.second].first)}] = reindex(v);
    std::vector<Vec> d(S->dim());
    for (int i = 0; i < A.space().dim(); ++i)
        d[*S->find(names[i].first)] = reindex(A.dg.d[i]);
    DgAlgebra B = algebra_from_table(S, t, Vec(*S->find("1"), F.one()), Vec(*S->find("1"), F.one()), d);
    return rebased(B, rng);
}

}  // namespace dgtest
