#pragma once

#include "dgkit/check.hpp"
#include "dgkit/graded.hpp"

namespace dgkit {

struct NotAComplex : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Graded space with a degree -1 differential. d_exact[i] is false when some
/// term of d(b_i) fell outside the window, so d(b_i) is only known modulo the
/// dropped part.
struct DgSpace {
    SpacePtr space;
    std::vector<Vec> d;
    std::vector<bool> d_exact;

    static DgSpace zero(SpacePtr space);
    Vec differential(const Vec& v, bool* exact = nullptr) const;
    GradedMap as_map() const { return GradedMap{space, space, -1, d}; }
};

/// d(x|y) = dx|y + (-1)^{|x|} x|dy.
DgSpace dg_tensor(const DgSpace& X, const DgSpace& Y);
/// d(f) = d_Y f - f d_X (-1)^{|f|}.
DgSpace dg_hom(const DgSpace& X, const DgSpace& Y);

/// Basis elements b with d(b) and d of its support exact but d(d(b)) != 0.
/// Elements whose double image is not determined inside the window are skipped.
Check check_square_zero(const DgSpace& X, std::size_t max_witnesses = 5);

struct HomologyRow {
    int degree;
    int dim;
    bool trusted;
};

/// dim H_n = dim X_n - rank d_n - rank d_{n+1}. A degree is trusted when
/// degrees n and n+1 are complete and every differential out of them is exact.
/// Throws NotAComplex when d^2 != 0 on the checkable window.
std::vector<HomologyRow> homology(const DgSpace& X);

/// Rank of d restricted to degree n (a map X_n -> X_{n-1}).
std::size_t differential_rank(const DgSpace& X, int n);

}  // namespace dgkit
