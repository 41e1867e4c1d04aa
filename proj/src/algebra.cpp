#include "dgkit/algebra.hpp"

namespace dgkit {

Product DgAlgebra::multiply(const Vec& a, const Vec& b) const
{
    Product r;
    for (const auto& [i, ca] : a)
        for (const auto& [j, cb] : b) {
            Product p = mul(i, j);
            r.value.add(p.value, ca * cb);
            r.exact = r.exact && p.exact;
        }
    return r;
}

Scalar DgAlgebra::augment(const Vec& v) const
{
    Scalar r = field().zero();
    if (!augmentation)
        return r;
    for (const auto& [i, c] : v)
        if (auto e = augmentation->find(i))
            r += c * *e;
    return r;
}

std::optional<int> DgAlgebra::unit_index() const
{
    if (!unit || unit->size() != 1 || !unit->begin()->second.is_one())
        return std::nullopt;
    return unit->begin()->first;
}

bool DgAlgebra::is_normalized() const
{
    auto u = unit_index();
    return u && augmentation && augmentation->size() == 1 && augmentation->find(*u) &&
           augmentation->find(*u)->is_one();
}

std::vector<int> DgAlgebra::augmentation_ideal_basis() const
{
    if (!is_normalized())
        throw std::invalid_argument("algebra is not augmented with the unit as a basis element and "
                                    "augmentation equal to its coordinate");
    std::vector<int> r;
    for (int i = 0; i < space().dim(); ++i)
        if (i != *unit_index())
            r.push_back(i);
    return r;
}

DgAlgebra algebra_from_table(SpacePtr space, ProductTable table, std::optional<Vec> unit,
                             std::optional<Vec> augmentation, std::vector<Vec> d)
{
    DgAlgebra A;
    int n = space->dim();
    A.dg = DgSpace{space, std::move(d), std::vector<bool>(n, true)};
    auto shared = std::make_shared<ProductTable>(std::move(table));
    A.mul = [shared](int i, int j) {
        auto it = shared->find({i, j});
        return Product{it == shared->end() ? Vec{} : it->second, true};
    };
    A.unit = std::move(unit);
    A.augmentation = std::move(augmentation);
    return A;
}

ProductTable product_table(const DgAlgebra& A)
{
    ProductTable t;
    for (int i = 0; i < A.space().dim(); ++i)
        for (int j = 0; j < A.space().dim(); ++j) {
            Vec v = A.mul(i, j).value;
            if (!v.is_zero())
                t.emplace(std::make_pair(i, j), std::move(v));
        }
    return t;
}

std::vector<Check> check_algebra(const DgAlgebra& A, CheckOptions opt)
{
    const GradedSpace& S = A.space();
    const Field& F = A.field();
    const int n = S.dim();
    std::vector<Check> out;

    Check assoc{"associativity"};
    for (int a = 0; a < n && assoc.checked + assoc.skipped < opt.max_cases; ++a)
        for (int b = 0; b < n; ++b) {
            Product ab = A.mul(a, b);
            for (int c = 0; c < n; ++c) {
                Product bc = A.mul(b, c);
                Product l = A.multiply(ab.value, S.basis_vector(c));
                Product r = A.multiply(S.basis_vector(a), bc.value);
                if (!(ab.exact && bc.exact && l.exact && r.exact)) {
                    ++assoc.skipped;
                    continue;
                }
                ++assoc.checked;
                if (!(l.value == r.value))
                    assoc.fail("(" + S.name(a) + " " + S.name(b) + ") " + S.name(c) + " = " + S.format(l.value) +
                               " but " + S.name(a) + " (" + S.name(b) + " " + S.name(c) + ") = " + S.format(r.value));
            }
        }
    if (assoc.checked + assoc.skipped >= opt.max_cases)
        assoc.witness += assoc.pass ? "stopped at case limit" : "";
    out.push_back(assoc);

    if (A.unit) {
        Check unit{"unit laws"};
        for (int a = 0; a < n; ++a) {
            Product l = A.multiply(*A.unit, S.basis_vector(a));
            Product r = A.multiply(S.basis_vector(a), *A.unit);
            if (!l.exact || !r.exact) {
                ++unit.skipped;
                continue;
            }
            ++unit.checked;
            if (!(l.value == S.basis_vector(a)) || !(r.value == S.basis_vector(a)))
                unit.fail("1 " + S.name(a) + " = " + S.format(l.value) + ", " + S.name(a) + " 1 = " + S.format(r.value));
        }
        bool exact = true;
        if (!A.dg.differential(*A.unit, &exact).is_zero())
            unit.fail("d(1) != 0");
        out.push_back(unit);
    }

    Check leibniz{"Leibniz rule"};
    for (int a = 0; a < n && leibniz.checked + leibniz.skipped < opt.max_cases; ++a)
        for (int b = 0; b < n; ++b) {
            Product ab = A.mul(a, b);
            bool exact = ab.exact && A.dg.d_exact[a] && A.dg.d_exact[b];
            Vec lhs = A.dg.differential(ab.value, &exact);
            Product t1 = A.multiply(A.dg.d[a], S.basis_vector(b));
            Product t2 = A.multiply(S.basis_vector(a), A.dg.d[b]);
            if (!(exact && t1.exact && t2.exact)) {
                ++leibniz.skipped;
                continue;
            }
            ++leibniz.checked;
            Vec rhs = t1.value + t2.value.scaled(F.sign(S.degree(a)));
            if (!(lhs == rhs))
                leibniz.fail("d(" + S.name(a) + " " + S.name(b) + ") = " + S.format(lhs) + " but Leibniz gives " +
                             S.format(rhs));
        }
    out.push_back(leibniz);

    out.push_back(check_square_zero(A.dg));

    if (A.augmentation) {
        Check aug{"augmentation is a dg-algebra map"};
        for (const auto& [i, c] : *A.augmentation)
            if (S.degree(i) != 0)
                aug.fail("augmentation nonzero on " + S.name(i) + " of degree " + std::to_string(S.degree(i)));
        if (A.unit && !A.augment(*A.unit).is_one())
            aug.fail("augmentation of the unit is not 1");
        for (int a = 0; a < n; ++a) {
            if (A.dg.d_exact[a] && !A.augment(A.dg.d[a]).is_zero())
                aug.fail("augmentation of d(" + S.name(a) + ") is nonzero");
            for (int b = 0; b < n; ++b) {
                Product ab = A.mul(a, b);
                if (!ab.exact) {
                    ++aug.skipped;
                    continue;
                }
                ++aug.checked;
                if (!(A.augment(ab.value) == A.augment(S.basis_vector(a)) * A.augment(S.basis_vector(b))))
                    aug.fail("augmentation not multiplicative on " + S.name(a) + ", " + S.name(b));
            }
        }
        out.push_back(aug);
    }
    return out;
}

DgSpace extend_derivation(const FreeAlgebra& T, const std::vector<VecN>& phi, int degree)
{
    const GradedSpace& W = T.algebra.space();
    const GradedSpace& X = *T.letters;
    const Field& F = W.field();
    DgSpace D = DgSpace::zero(T.algebra.dg.space);
    for (int i = 0; i < W.dim(); ++i) {
        Word w = word_of(W, i);
        VecN img;
        int prefix_degree = 0;
        for (std::size_t k = 0; k < w.size(); ++k) {
            Scalar s = F.sign(long(degree) * prefix_degree);
            Word pre = slice(w, 0, k), post = slice(w, k + 1, w.size());
            for (const auto& [mid, c] : phi[w[k]])
                img.add(concat(concat(pre, mid), post), c * s);
            prefix_degree += X.degree(w[k]);
        }
        bool exact = true;
        D.d[i] = from_words(W, img, &exact);
        D.d_exact[i] = exact;
    }
    return D;
}

void set_differential(FreeAlgebra& T, const std::vector<VecN>& phi)
{
    DgSpace D = extend_derivation(T, phi, -1);
    T.algebra.dg.d = std::move(D.d);
    T.algebra.dg.d_exact = std::move(D.d_exact);
}

FreeAlgebra tensor_algebra(const DgSpace& X, const Truncation& trunc, const WordStyle& style)
{
    FreeAlgebra T;
    T.letters = X.space;
    auto W = word_space(*X.space, trunc, style);
    T.algebra.dg = DgSpace::zero(W);
    T.algebra.mul = [W](int i, int j) {
        Product p;
        Word w = concat(word_of(*W, i), word_of(*W, j));
        if (auto k = find_word(*W, w))
            p.value.add(*k, W->field().one());
        else
            p.exact = false;
        return p;
    };
    auto empty = find_word(*W, {});
    if (empty) {
        T.algebra.unit = W->basis_vector(*empty);
        T.algebra.augmentation = W->basis_vector(*empty);
    }
    std::vector<VecN> phi;
    for (int l = 0; l < X.space->dim(); ++l) {
        VecN img;
        for (const auto& [m, c] : X.d[l])
            img.add(Word{m}, c);
        phi.push_back(std::move(img));
    }
    set_differential(T, phi);
    return T;
}

Check check_derivation(const DgAlgebra& A, const std::vector<Vec>& D, int degree, CheckOptions opt)
{
    const GradedSpace& S = A.space();
    const Field& F = A.field();
    Check chk{"graded Leibniz rule for a derivation of degree " + std::to_string(degree)};
    auto apply = [&](const Vec& v) {
        Vec r;
        for (const auto& [i, c] : v)
            r.add(D[i], c);
        return r;
    };
    for (int a = 0; a < S.dim() && chk.checked + chk.skipped < opt.max_cases; ++a)
        for (int b = 0; b < S.dim(); ++b) {
            Product ab = A.mul(a, b);
            Product t1 = A.multiply(D[a], S.basis_vector(b));
            Product t2 = A.multiply(S.basis_vector(a), D[b]);
            if (!(ab.exact && t1.exact && t2.exact)) {
                ++chk.skipped;
                continue;
            }
            ++chk.checked;
            Vec lhs = apply(ab.value);
            Vec rhs = t1.value + t2.value.scaled(F.sign(long(degree) * S.degree(a)));
            if (!(lhs == rhs))
                chk.fail("D(" + S.name(a) + " " + S.name(b) + ") = " + S.format(lhs) + " but rule gives " +
                         S.format(rhs));
        }
    return chk;
}

std::vector<Vec> commutator(const DgAlgebra& A, const std::vector<Vec>& D1, int n1, const std::vector<Vec>& D2,
                            int n2)
{
    const Field& F = A.field();
    auto apply = [](const std::vector<Vec>& D, const Vec& v) {
        Vec r;
        for (const auto& [i, c] : v)
            r.add(D[i], c);
        return r;
    };
    std::vector<Vec> r;
    for (int i = 0; i < A.space().dim(); ++i)
        r.push_back(apply(D1, D2[i]) - apply(D2, D1[i]).scaled(F.sign(long(n1) * n2)));
    return r;
}

DgAlgebra algebra_tensor(const DgAlgebra& A, const DgAlgebra& B)
{
    DgAlgebra R;
    R.dg = dg_tensor(A.dg, B.dg);
    auto AB = R.dg.space;
    auto Ap = std::make_shared<DgAlgebra>(A);
    auto Bp = std::make_shared<DgAlgebra>(B);
    R.mul = [AB, Ap, Bp](int i, int j) {
        int a = AB->key(i)[0], b = AB->key(i)[1], a2 = AB->key(j)[0], b2 = AB->key(j)[1];
        Product pa = Ap->mul(a, a2), pb = Bp->mul(b, b2);
        Scalar s = AB->field().sign(long(Bp->space().degree(b)) * Ap->space().degree(a2));
        Vec2 img;
        for (const auto& [x, cx] : pa.value)
            for (const auto& [y, cy] : pb.value)
                img.add({x, y}, cx * cy * s);
        Product p;
        p.exact = pa.exact && pb.exact;
        p.value = from_pairs(*AB, img, &p.exact);
        return p;
    };
    auto tensor_vec = [&](const Vec& u, const Vec& v) {
        Vec2 img;
        for (const auto& [x, cx] : u)
            for (const auto& [y, cy] : v)
                img.add({x, y}, cx * cy);
        return from_pairs(*AB, img);
    };
    if (A.unit && B.unit)
        R.unit = tensor_vec(*A.unit, *B.unit);
    if (A.augmentation && B.augmentation)
        R.augmentation = tensor_vec(*A.augmentation, *B.augmentation);
    return R;
}

DgAlgebra opposite(const DgAlgebra& A)
{
    DgAlgebra R = A;
    auto Ap = std::make_shared<DgAlgebra>(A);
    R.mul = [Ap](int i, int j) {
        Product p = Ap->mul(j, i);
        const GradedSpace& S = Ap->space();
        p.value = p.value.scaled(S.field().sign(long(S.degree(i)) * S.degree(j)));
        return p;
    };
    return R;
}

Vec OmegaBimodule::left(const DgAlgebra& A, int a, const Vec& w) const
{
    Vec2 r;
    for (const auto& [k, c] : w) {
        int x = AA->key(k)[0], y = AA->key(k)[1];
        for (const auto& [ax, cx] : A.mul(a, x).value)
            r.add({ax, y}, c * cx);
    }
    return from_pairs(*AA, r);
}

Vec OmegaBimodule::right(const DgAlgebra& A, const Vec& w, int b) const
{
    Vec2 r;
    for (const auto& [k, c] : w) {
        int x = AA->key(k)[0], y = AA->key(k)[1];
        for (const auto& [yb, cy] : A.mul(y, b).value)
            r.add({x, yb}, c * cy);
    }
    return from_pairs(*AA, r);
}

OmegaBimodule omega_bimodule(const DgAlgebra& A)
{
    if (!A.unit)
        throw std::invalid_argument("omega_bimodule needs a unital algebra");
    OmegaBimodule O;
    O.AA = tensor_space(A.space(), A.space());
    const Field& F = A.field();
    std::map<int, std::vector<int>> by_degree;
    for (int k = 0; k < O.AA->dim(); ++k)
        by_degree[O.AA->degree(k)].push_back(k);
    for (const auto& [deg, idx] : by_degree) {
        std::vector<Vec> images;
        for (int k : idx)
            images.push_back(A.mul(O.AA->key(k)[0], O.AA->key(k)[1]).value);
        for (const auto& v : kernel(images, F)) {
            Vec w;
            for (const auto& [j, c] : v)
                w.add(idx[j], c);
            O.basis.push_back(std::move(w));
            O.degrees.push_back(deg);
        }
    }
    for (int x = 0; x < A.space().dim(); ++x) {
        Vec2 img;
        for (const auto& [u, c] : *A.unit) {
            img.add({u, x}, c);
            img.add({x, u}, -c);
        }
        O.d.push_back(from_pairs(*O.AA, img));
    }
    return O;
}

std::vector<Check> check_omega(const DgAlgebra& A, const OmegaBimodule& O)
{
    const GradedSpace& S = A.space();
    const Field& F = A.field();
    std::vector<Check> out;
    Check in_kernel{"d lands in ker(m)"};
    Echelon span(F);
    for (const auto& b : O.basis)
        span.add(b);
    for (int x = 0; x < S.dim(); ++x) {
        ++in_kernel.checked;
        if (!span.reduce(O.d[x]).is_zero())
            in_kernel.fail("d(" + S.name(x) + ") is not in the kernel of m");
    }
    out.push_back(in_kernel);

    Check leibniz{"d(ab) = d(a) b + a d(b)"};
    for (int a = 0; a < S.dim(); ++a)
        for (int b = 0; b < S.dim(); ++b) {
            Vec lhs;
            for (const auto& [k, c] : A.mul(a, b).value)
                lhs.add(O.d[k], c);
            Vec rhs = O.right(A, O.d[a], b) + O.left(A, a, O.d[b]);
            ++leibniz.checked;
            if (!(lhs == rhs))
                leibniz.fail("Leibniz fails on " + S.name(a) + ", " + S.name(b));
        }
    out.push_back(leibniz);

    Check gen{"a d(b) span Omega"};
    Echelon e(F);
    for (int a = 0; a < S.dim(); ++a)
        for (int b = 0; b < S.dim(); ++b)
            e.add(O.left(A, a, O.d[b]));
    gen.checked = 1;
    if (e.rank() != O.basis.size())
        gen.fail("span of a d(b) has dimension " + std::to_string(e.rank()) + ", Omega has " +
                 std::to_string(O.basis.size()));
    out.push_back(gen);
    return out;
}

std::map<int, int> omega_power_dims(const DgAlgebra& A, const OmegaBimodule& O, int k)
{
    const Field& F = A.field();
    std::map<int, int> dims;
    if (k == 0)
        return A.space().dims();
    // Coordinates of elements of Omega in its kernel basis.
    Echelon coords(F);
    for (int i = 0; i < static_cast<int>(O.basis.size()); ++i)
        coords.add(O.basis[i], Vec(i, F.one()));
    auto coordinates = [&](const Vec& w) {
        auto [rest, hist] = coords.reduce_tracked(w, {});
        if (!rest.is_zero())
            throw std::logic_error("element outside Omega");
        return hist.scaled(-F.one());
    };
    const int m = static_cast<int>(O.basis.size());
    const int dimA = A.space().dim();
    // Right and left actions in coordinates.
    std::vector<std::vector<Vec>> right(m, std::vector<Vec>(dimA)), left(dimA, std::vector<Vec>(m));
    for (int w = 0; w < m; ++w)
        for (int a = 0; a < dimA; ++a) {
            right[w][a] = coordinates(O.right(A, O.basis[w], a));
            left[a][w] = coordinates(O.left(A, a, O.basis[w]));
        }

    std::vector<Word> tuples{{}};
    for (int step = 0; step < k; ++step) {
        std::vector<Word> next;
        for (const auto& t : tuples)
            for (int w = 0; w < m; ++w)
                next.push_back(concat(t, {w}));
        tuples = std::move(next);
    }
    auto tuple_degree = [&](const Word& t) {
        int d = 0;
        for (int w : t)
            d += O.degrees[w];
        return d;
    };
    std::map<Word, int> index;
    std::map<int, int> total;
    for (const auto& t : tuples) {
        index.emplace(t, static_cast<int>(index.size()));
        ++total[tuple_degree(t)];
    }
    std::map<int, Echelon> rel;
    for (const auto& t : tuples)
        for (std::size_t i = 0; i + 1 < t.size(); ++i)
            for (int a = 0; a < dimA; ++a) {
                Vec v;
                for (const auto& [w, c] : right[t[i]][a]) {
                    Word u = t;
                    u[i] = w;
                    v.add(index.at(u), c);
                }
                for (const auto& [w, c] : left[a][t[i + 1]]) {
                    Word u = t;
                    u[i + 1] = w;
                    v.add(index.at(u), -c);
                }
                if (v.is_zero())
                    continue;
                int deg = tuple_degree(t) + A.space().degree(a);
                rel.try_emplace(deg, F).first->second.add(v);
            }
    for (const auto& [deg, n] : total) {
        auto it = rel.find(deg);
        dims[deg] = n - static_cast<int>(it == rel.end() ? 0 : it->second.rank());
    }
    return dims;
}

}  // namespace dgkit

namespace dgkit {

std::vector<Check> check_algebra_map(const DgAlgebra& A, const DgAlgebra& B, const std::vector<Vec>& g,
                                     CheckOptions opt)
{
    const GradedSpace& S = A.space();
    const GradedSpace& T = B.space();
    auto apply = [&](const Vec& v) {
        Vec r;
        for (const auto& [i, c] : v)
            r.add(g[i], c);
        return r;
    };
    std::vector<Check> out;
    Check hom{"homogeneous of degree 0"};
    for (int i = 0; i < S.dim(); ++i)
        for (const auto& [j, c] : g[i])
            if (T.degree(j) != S.degree(i))
                hom.fail("g(" + S.name(i) + ") has a term " + T.name(j) + " of the wrong degree");
    out.push_back(hom);

    Check mult{"multiplicative"};
    for (int a = 0; a < S.dim() && mult.checked + mult.skipped < opt.max_cases; ++a)
        for (int b = 0; b < S.dim(); ++b) {
            Product ab = A.mul(a, b);
            Product gg = B.multiply(g[a], g[b]);
            if (!ab.exact || !gg.exact) {
                ++mult.skipped;
                continue;
            }
            ++mult.checked;
            if (!(apply(ab.value) == gg.value))
                mult.fail("g(" + S.name(a) + " " + S.name(b) + ") = " + T.format(apply(ab.value)) + " but g(" +
                          S.name(a) + ") g(" + S.name(b) + ") = " + T.format(gg.value));
        }
    out.push_back(mult);

    if (A.unit && B.unit) {
        Check unit{"unital"};
        if (!(apply(*A.unit) == *B.unit))
            unit.fail("g(1) = " + T.format(apply(*A.unit)));
        out.push_back(unit);
    }

    Check chain{"chain map"};
    for (int a = 0; a < S.dim(); ++a) {
        bool exact = A.dg.d_exact[a];
        for (const auto& [j, c] : g[a])
            exact = exact && B.dg.d_exact[j];
        if (!exact) {
            ++chain.skipped;
            continue;
        }
        ++chain.checked;
        Vec l = apply(A.dg.d[a]), r = B.dg.differential(g[a]);
        if (!(l == r))
            chain.fail("g(d " + S.name(a) + ") = " + T.format(l) + " but d g(" + S.name(a) + ") = " + T.format(r));
    }
    out.push_back(chain);

    if (A.augmentation && B.augmentation) {
        Check aug{"augmentation preserved"};
        for (int a = 0; a < S.dim(); ++a)
            if (!(B.augment(g[a]) == A.augment(S.basis_vector(a))))
                aug.fail("counit of g(" + S.name(a) + ") differs");
        out.push_back(aug);
    }
    return out;
}

Product evaluate_word(const DgAlgebra& B, const std::vector<Vec>& letter_images, const Word& w)
{
    Product r{B.unit ? *B.unit : Vec{}, true};
    if (!B.unit && !w.empty()) {
        r.value = letter_images[w[0]];
        for (std::size_t k = 1; k < w.size(); ++k) {
            Product p = B.multiply(r.value, letter_images[w[k]]);
            r.value = p.value;
            r.exact = r.exact && p.exact;
        }
        return r;
    }
    for (int l : w) {
        Product p = B.multiply(r.value, letter_images[l]);
        r.value = p.value;
        r.exact = r.exact && p.exact;
    }
    return r;
}

}  // namespace dgkit

namespace dgkit {

DgAlgebra ground_algebra(const Field& field)
{
    auto S = std::make_shared<GradedSpace>(field, Truncation{0, 0, 1}, std::vector<BasisElement>{{"1", 0, 0, {}}});
    return algebra_from_table(S, {{{0, 0}, Vec(0, field.one())}}, Vec(0, field.one()), Vec(0, field.one()),
                              std::vector<Vec>(1));
}

}  // namespace dgkit
