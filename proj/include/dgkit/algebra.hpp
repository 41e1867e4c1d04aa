#pragma once

#include <functional>

#include "dgkit/complex.hpp"
#include "dgkit/linalg.hpp"
#include "dgkit/words.hpp"

namespace dgkit {

/// A product value; exact is false when terms fell outside the window (the
/// product is then only a truncation of the true one).
struct Product {
    Vec value;
    bool exact = true;
};

/// Dg-algebra on a finite windowed carrier. The multiplication is given on
/// basis pairs; unit and augmentation are optional (non-unital / unpointed).
struct DgAlgebra {
    DgSpace dg;
    std::function<Product(int, int)> mul;
    std::optional<Vec> unit;
    /// Coefficient of basis i is the augmentation of b_i.
    std::optional<Vec> augmentation;

    const GradedSpace& space() const { return *dg.space; }
    const Field& field() const { return dg.space->field(); }
    Product multiply(const Vec& a, const Vec& b) const;
    Scalar augment(const Vec& v) const;
    /// Basis index of the unit when it is a single basis element.
    std::optional<int> unit_index() const;
    /// Basis elements spanning A_- = ker(augmentation), assuming the
    /// augmentation is the coordinate of the unit basis element.
    std::vector<int> augmentation_ideal_basis() const;
    bool is_normalized() const;
};

using ProductTable = std::map<std::pair<int, int>, Vec>;

/// Algebra from an explicit table of nonzero basis products.
DgAlgebra algebra_from_table(SpacePtr space, ProductTable table, std::optional<Vec> unit,
                             std::optional<Vec> augmentation, std::vector<Vec> d);
/// The ground field as a one-dimensional augmented algebra on "1".
DgAlgebra ground_algebra(const Field& field);
/// Materialized table of all nonzero basis products (used for serialization).
ProductTable product_table(const DgAlgebra& A);

struct CheckOptions {
    std::size_t max_cases = 400000;
};

/// Associativity, unit laws, Leibniz rule, d^2 = 0 and (if present) the
/// augmentation being a dg-algebra map, on all basis tuples with exact data.
std::vector<Check> check_algebra(const DgAlgebra& A, CheckOptions opt = {});

/// Free algebra on a dg space of letters, words of length <= weight_cap.
struct FreeAlgebra {
    SpacePtr letters;
    DgAlgebra algebra;
};
/// T(X) with concatenation (flagged zero on overflow) and the derivation
/// extension of d_X.
FreeAlgebra tensor_algebra(const DgSpace& X, const Truncation& trunc, const WordStyle& style = {});

/// Images of the unique derivation of the given degree on T(X) restricting to
/// phi on letters: D(x1..xn) = sum (-1)^{deg (|x1|+..+|x_{i-1}|)} x1..phi(xi)..xn.
DgSpace extend_derivation(const FreeAlgebra& T, const std::vector<VecN>& phi, int degree);
/// Replaces the differential of a free algebra by the extension of phi.
void set_differential(FreeAlgebra& T, const std::vector<VecN>& phi);

/// D(ab) = D(a)b + (-1)^{n|a|} a D(b) on basis pairs.
Check check_derivation(const DgAlgebra& A, const std::vector<Vec>& D, int degree, CheckOptions opt = {});
/// [D1, D2] = D1 D2 - (-1)^{n1 n2} D2 D1.
std::vector<Vec> commutator(const DgAlgebra& A, const std::vector<Vec>& D1, int n1, const std::vector<Vec>& D2,
                            int n2);

/// (a|b)(a'|b') = aa'|bb' (-1)^{|b||a'|}.
DgAlgebra algebra_tensor(const DgAlgebra& A, const DgAlgebra& B);
/// a^o b^o = (ba)^o (-1)^{|a||b|}, on the same basis.
DgAlgebra opposite(const DgAlgebra& A);

/// g(ab) = g(a) g(b), g(1) = 1, g d = d g and, when both are augmented,
/// counit_B g = counit_A, for g given on basis elements (degree 0).
std::vector<Check> check_algebra_map(const DgAlgebra& A, const DgAlgebra& B, const std::vector<Vec>& g,
                                     CheckOptions opt = {});
/// Product of letter images along a word, 1 for the empty word.
Product evaluate_word(const DgAlgebra& B, const std::vector<Vec>& letter_images, const Word& w);

/// Omega_A = ker(m: A|A -> A) with d(x) = 1|x - x|1.
struct OmegaBimodule {
    SpacePtr AA;
    /// Basis of the kernel, as elements of A|A, in degree order.
    std::vector<Vec> basis;
    std::vector<int> degrees;
    /// d(b_i) as elements of A|A.
    std::vector<Vec> d;
    Vec left(const DgAlgebra& A, int a, const Vec& w) const;
    Vec right(const DgAlgebra& A, const Vec& w, int b) const;
};
OmegaBimodule omega_bimodule(const DgAlgebra& A);
/// d is a derivation into Omega and its image generates Omega as a left module.
std::vector<Check> check_omega(const DgAlgebra& A, const OmegaBimodule& omega);
/// Dimensions of the k-fold tensor power of Omega over A, per degree.
std::map<int, int> omega_power_dims(const DgAlgebra& A, const OmegaBimodule& omega, int k);

}  // namespace dgkit
