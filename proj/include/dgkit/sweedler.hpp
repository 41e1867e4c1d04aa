#pragma once

#include "dgkit/coalgebra.hpp"
#include "dgkit/presented.hpp"

namespace dgkit {

/// Bilinear map C|A -> B given on basis pairs (c, a). Degree 0 is expected.
using MeasuringFn = std::function<Product(int, int)>;

/// [C,A] with (f*g)(c) = f(c1) g(c2) (-1)^{|g||c1|}, unit e_A counit_C and the
/// hom differential. Pointed inputs give the augmentation f -> counit_A(f(e)).
struct Convolution {
    DgAlgebra algebra;
    SpacePtr hom;
};
Convolution convolution(const DgCoalgebra& C, const DgAlgebra& A);

struct MeasuringOptions {
    /// Also check counit_B f = counit_C counit_A and f(e, a) = counit(a) 1.
    bool pointed = false;
    std::size_t max_cases = 200000;
};
/// Multiplicativity f(c,ab) = f(c1,a) f(c2,b) (-1)^{|a||c2|}, unit
/// f(c,1) = counit(c) 1, the chain condition and homogeneity of degree 0.
std::vector<Check> verify_measuring(const DgCoalgebra& C, const DgAlgebra& A, const DgAlgebra& B,
                                    const MeasuringFn& f, MeasuringOptions opt = {});

/// rev(c|f) = (-1)^{|c||f|} f(c), a measuring C|[C,A] -> A.
MeasuringFn rev_measuring(const DgCoalgebra& C, const Convolution& conv);

/// C |> A as a presented algebra on symbols c|>a with relations
/// (m) c|>(ab) = (c1|>a)(c2|>b) (-1)^{|a||c2|}, (u) c|>1 = counit(c) and, when
/// pointed, (a) e|>a = counit(a). The unit and (for normalized C) the atom are
/// substituted rather than kept as generators. Symbol c|>a has weight
/// max(1, weight(a)).
struct SweedlerProduct {
    PresentedAlgebra presentation;
    NormalForms forms;
    /// (c, a) of each generator.
    std::vector<std::pair<int, int>> symbols;
    /// The universal measuring: class of c|>a.
    MeasuringFn phi;
    /// Weights up to this bound are unaffected by relations that could not be
    /// formed inside the input windows.
    int exact_weight = 0;
    bool pointed = false;

    const DgAlgebra& algebra() const { return forms.algebra; }
    /// Dimensions per (degree, weight) of the normal-form basis.
    std::map<std::pair<int, int>, int> bigraded_dims() const;
};
SweedlerProduct sweedler_product(const DgCoalgebra& C, const DgAlgebra& A, const Truncation& trunc,
                                 bool pointed = false);

/// Coalgebras of the type-I examples.
enum class ExampleKind { matrix, diff_alg, jet, divided_jet };
ExampleKind parse_example_kind(const std::string& text);
/// Matrix algebra M_n(F) on basis E_ij (degree 0), unit sum E_ii.
DgAlgebra matrix_algebra(int n, const Field& field = Field::rationals());
/// Primitive coalgebra F{1, delta} with |delta| = degree, pointed at 1.
DgCoalgebra primitive_coalgebra(int degree, const Field& field = Field::rationals());
/// matrix(n): finite dual of M_n; diff_alg(n): primitive coalgebra with
/// |delta| = n; jet(n) and divided_jet(n): deconcatenation and coshuffle on
/// a degree 0 letter, words of length <= n.
DgCoalgebra example_coalgebra(ExampleKind kind, int n, const Field& field = Field::rationals());
SweedlerProduct example_construction(ExampleKind kind, int n, const DgAlgebra& A, const Truncation& trunc);

/// Dimensions of T_A(S^n Omega_A) = sum_k (Omega^{|_A k}) shifted by kn, for
/// k up to max_power.
std::map<int, int> de_rham_dims(const DgAlgebra& A, int n, int max_power);

/// Sweedler hom out of a free algebra T(X) (with any differential d1) into B,
/// in the cofree regime: T^c(H) with H = [X,B] (or [X,B_-] when
/// conilpotent). The differential is the coderivation whose corestriction is
/// q(d h) = d_B h# i - (-1)^{|h|} h# d1 i, and the couniversal measuring is
/// p(h1..hm | x1..xm) = (-1)^{sum_{i>j} |hi||xj|} h1(x1)..hm(xm), zero for
/// words of different lengths.
struct SweedlerHom {
    FreeCoalgebra coalgebra;
    SpacePtr hom;
    /// Target basis index in B of each basis element of the hom's target.
    std::vector<int> target_index;
    MeasuringFn measuring;
    /// Corestriction q(d h) as a letter combination, computed from the formula.
    WordCochain corestriction;
    bool conilpotent = false;

    Vec evaluate(int letter, int x) const;
};
SweedlerHom sweedler_hom_free(const FreeAlgebra& T, const DgAlgebra& B, const Truncation& trunc,
                              bool conilpotent = false);
/// p(D h) against the corestriction formula on words of length <= max_length.
Check check_corestriction(const SweedlerHom& H, int max_length);

/// A^v = A* for graded-finite bounded A, with the evaluation measuring.
struct SweedlerDual {
    DgCoalgebra coalgebra;
    /// phi(a), valued in the ground field as a one-dimensional algebra.
    MeasuringFn evaluation;
    DgAlgebra ground;
};
SweedlerDual sweedler_dual(const DgAlgebra& A);

}  // namespace dgkit
