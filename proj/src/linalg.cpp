#include "dgkit/linalg.hpp"

#include <algorithm>

namespace dgkit {

Vec Echelon::reduce(Vec v) const { return reduce_tracked(std::move(v), {}).first; }

std::pair<Vec, Vec> Echelon::reduce_tracked(Vec v, Vec history) const
{
    // Stored rows only contain columns >= their pivot, so scanning v in column
    // order never reintroduces a column already passed.
    int from = std::numeric_limits<int>::min();
    while (true) {
        auto it = v.terms().lower_bound(from);
        while (it != v.end() && !rows_.count(it->first))
            ++it;
        if (it == v.end())
            break;
        int col = it->first;
        Scalar c = -it->second;
        const Row& row = rows_.at(col);
        v.add(row.v, c);
        history.add(row.history, c);
        from = col + 1;
    }
    return {std::move(v), std::move(history)};
}

bool Echelon::add(Vec v, Vec history, Vec* dependency)
{
    auto [r, h] = reduce_tracked(std::move(v), std::move(history));
    if (r.is_zero()) {
        if (dependency)
            *dependency = std::move(h);
        return false;
    }
    int pivot = r.begin()->first;
    Scalar inv = r.begin()->second.inverse();
    rows_.emplace(pivot, Row{r.scaled(inv), h.scaled(inv)});
    return true;
}

std::vector<Vec> kernel(const std::vector<Vec>& images, const Field& field)
{
    Echelon ech(field);
    std::vector<Vec> result;
    for (int j = 0; j < static_cast<int>(images.size()); ++j) {
        Vec dep;
        if (!ech.add(images[j], Vec(j, field.one()), &dep))
            result.push_back(std::move(dep));
    }
    return result;
}

namespace {

std::size_t rank_bareiss(const std::vector<Vec>& rows)
{
    // Dense integer matrix after clearing denominators row by row.
    std::vector<int> cols;
    for (const auto& r : rows)
        for (const auto& [c, _] : r)
            cols.push_back(c);
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    if (cols.empty())
        return 0;
    std::map<int, std::size_t> col_pos;
    for (std::size_t i = 0; i < cols.size(); ++i)
        col_pos[cols[i]] = i;

    std::size_t m = rows.size(), n = cols.size();
    std::vector<std::vector<mpz_class>> a(m, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < m; ++i) {
        mpz_class l = 1;
        for (const auto& [_, v] : rows[i])
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.rational()->get_den_mpz_t());
        for (const auto& [c, v] : rows[i]) {
            mpq_class s = *v.rational() * l;
            a[i][col_pos[c]] = s.get_num();
        }
    }

    std::size_t r = 0;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && a[p][c] == 0)
            ++p;
        if (p == m)
            continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

}  // namespace

std::size_t rank(const std::vector<Vec>& rows, const Field& field)
{
    if (field.is_rational())
        return rank_bareiss(rows);
    Echelon ech(field);
    for (const auto& r : rows)
        ech.add(r);
    return ech.rank();
}

std::optional<Vec> solve(const std::vector<Vec>& vectors, const Vec& target, const Field& field)
{
    Echelon ech(field);
    for (int j = 0; j < static_cast<int>(vectors.size()); ++j)
        ech.add(vectors[j], Vec(j, field.one()));
    auto [r, h] = ech.reduce_tracked(target, {});
    if (!r.is_zero())
        return std::nullopt;
    return h.scaled(-field.one());
}

}  // namespace dgkit
