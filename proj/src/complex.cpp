#include "dgkit/complex.hpp"

#include "dgkit/linalg.hpp"

namespace dgkit {

DgSpace DgSpace::zero(SpacePtr space)
{
    int n = space->dim();
    return DgSpace{std::move(space), std::vector<Vec>(n), std::vector<bool>(n, true)};
}

Vec DgSpace::differential(const Vec& v, bool* exact) const
{
    Vec r;
    for (const auto& [i, c] : v) {
        r.add(d[i], c);
        if (exact && !d_exact[i])
            *exact = false;
    }
    return r;
}

DgSpace dg_tensor(const DgSpace& X, const DgSpace& Y)
{
    auto XY = tensor_space(*X.space, *Y.space);
    DgSpace r = DgSpace::zero(XY);
    const Field& F = XY->field();
    for (int k = 0; k < XY->dim(); ++k) {
        int x = XY->key(k)[0], y = XY->key(k)[1];
        Vec2 img;
        for (const auto& [a, c] : X.d[x])
            img.add({a, y}, c);
        Scalar s = F.sign(X.space->degree(x));
        for (const auto& [b, c] : Y.d[y])
            img.add({x, b}, c * s);
        bool exact = X.d_exact[x] && Y.d_exact[y];
        r.d[k] = from_pairs(*XY, img, &exact);
        r.d_exact[k] = exact;
    }
    return r;
}

DgSpace dg_hom(const DgSpace& X, const DgSpace& Y)
{
    auto H = hom_space(*X.space, *Y.space);
    DgSpace r = DgSpace::zero(H);
    const Field& F = H->field();
    for (int k = 0; k < H->dim(); ++k) {
        int x = H->key(k)[0], y = H->key(k)[1];
        int f_deg = H->degree(k);
        // d_Y f: x -> d y
        for (const auto& [b, c] : Y.d[y])
            r.d[k].add(*H->find_key({x, b}), c);
        // f d_X: x' -> f(d x') picks the coefficient of x in d x'
        Scalar s = -F.sign(f_deg);
        for (int xp = 0; xp < X.space->dim(); ++xp)
            if (auto c = X.d[xp].find(x))
                r.d[k].add(*H->find_key({xp, y}), *c * s);
        r.d_exact[k] = Y.d_exact[y];
        for (int xp = 0; xp < X.space->dim(); ++xp)
            if (!X.d_exact[xp] && X.space->degree(xp) == X.space->degree(x) + 1)
                r.d_exact[k] = false;
    }
    return r;
}

Check check_square_zero(const DgSpace& X, std::size_t max_witnesses)
{
    Check chk{"d^2 = 0"};
    std::size_t witnesses = 0;
    for (int i = 0; i < X.space->dim(); ++i) {
        bool exact = X.d_exact[i];
        Vec dd = X.differential(X.d[i], &exact);
        if (!exact) {
            ++chk.skipped;
            continue;
        }
        ++chk.checked;
        if (!dd.is_zero()) {
            std::string w = "d(d(" + X.space->name(i) + ")) = " + X.space->format(dd);
            if (witnesses++ < max_witnesses) {
                if (chk.pass)
                    chk.fail(w);
                else
                    chk.witness += "; " + w;
            }
        }
    }
    return chk;
}

std::size_t differential_rank(const DgSpace& X, int n)
{
    std::vector<Vec> rows;
    for (int i : X.space->in_degree(n))
        rows.push_back(X.d[i]);
    return rank(rows, X.space->field());
}

std::vector<HomologyRow> homology(const DgSpace& X)
{
    auto sq = check_square_zero(X);
    if (!sq.pass)
        throw NotAComplex(sq.witness);
    auto exact_degree = [&](int n) {
        if (!X.space->complete(n))
            return false;
        for (int i : X.space->in_degree(n))
            if (!X.d_exact[i])
                return false;
        return true;
    };
    std::vector<HomologyRow> rows;
    const Truncation& w = X.space->window();
    for (int n = w.degree_min; n <= w.degree_max; ++n) {
        int dim = static_cast<int>(X.space->in_degree(n).size());
        int h = dim - static_cast<int>(differential_rank(X, n)) - static_cast<int>(differential_rank(X, n + 1));
        bool trusted = exact_degree(n) && exact_degree(n + 1);
        rows.push_back({n, h, trusted});
    }
    return rows;
}

}  // namespace dgkit
