#pragma once

#include "dgkit/algebra.hpp"

namespace dgkit {

struct OutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct NotAnAtom : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RegimeViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotConilpotent : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotGradedFinite : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotCocommutative : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotCommutative : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Coproduct {
    Vec2 value;
    bool exact = true;
};

/// Dg-coalgebra on a finite windowed carrier, optionally counital and pointed.
struct DgCoalgebra {
    DgSpace dg;
    std::function<Coproduct(int)> comul;
    /// Coefficient of basis i is the counit of b_i.
    std::optional<Vec> counit;
    /// Coaugmentation (the atom e).
    std::optional<Vec> atom;

    const GradedSpace& space() const { return *dg.space; }
    const Field& field() const { return dg.space->field(); }
    Coproduct coproduct(const Vec& v) const;
    Scalar count(const Vec& v) const;
    /// pi(v) = v - counit(v) e.
    Vec project(const Vec& v) const;
    /// (pi|pi) Delta.
    Coproduct reduced(const Vec& v) const;
    std::optional<int> atom_index() const;
    /// Counit is the coordinate of a basis atom.
    bool is_normalized() const;
    /// Basis of C_- (all basis elements but the atom) for normalized coalgebras.
    std::vector<int> reduced_basis() const;
};

DgCoalgebra coalgebra_from_table(SpacePtr space, std::vector<Vec2> table, std::optional<Vec> counit,
                                 std::optional<Vec> atom, std::vector<Vec> d);

std::vector<Check> check_coalgebra(const DgCoalgebra& C);

/// Word-based coalgebra: T(X) as a vector space with a coproduct on words.
struct FreeCoalgebra {
    SpacePtr letters;
    DgCoalgebra coalgebra;
};

/// Deconcatenation coproduct, counit and atom the empty word, d the
/// coderivation extending d_X.
FreeCoalgebra tensor_coalgebra(const DgSpace& X, const Truncation& trunc, const WordStyle& style = {});
/// Signed coshuffle coproduct on words (letters primitive).
FreeCoalgebra coshuffle_coalgebra(const DgSpace& X, const Truncation& trunc, const WordStyle& style = {});
Coproduct deconcatenate(const GradedSpace& W, int i);
Coproduct coshuffle(const GradedSpace& letters, const GradedSpace& W, int i);

/// Odd binomial coefficients: Pascal recursion with <n,k> = 0 for n even, k odd.
long odd_binomial(int n, int k);

struct RadicalReport {
    /// Basis of the radical (as elements of C), in echelon order.
    std::vector<Vec> basis;
    int iterations = 0;
    /// Conilpotency certified by a weight grading rather than only in the window.
    bool proven = false;
    bool closed_under_coproduct = true;
    bool closed_under_differential = true;
};
/// Iterated reduced coproduct with `factors` tensor factors, as word tuples.
VecN iterated_reduced(const DgCoalgebra& C, const Vec& x, int factors, bool* exact = nullptr);
RadicalReport radical(const DgCoalgebra& C, std::optional<int> iterations = std::nullopt);
bool preserved_by(const DgCoalgebra& C, const RadicalReport& R, const std::vector<Vec>& D);

/// Kernel of the reduced coproduct on C_-; throws NotAnAtom when C's atom
/// is not grouplike, of counit 1 and closed.
std::vector<Vec> primitives(const DgCoalgebra& C);

/// phi on words (returning letter combinations) coextended to the unique
/// coderivation of the given degree:
/// D(x1..xk) = sum_{i<=j} x1..xi|phi(x_{i+1}..x_j)|x_{j+1}..xk (-1)^{n(|x1|+..+|xi|)}.
using WordCochain = std::function<Vec(const Word&, bool*)>;
DgSpace coextend_coderivation(const FreeCoalgebra& T, const WordCochain& phi, int degree);
/// Delta D = (D|1 + 1|D) Delta with the Koszul sign.
Check check_coderivation(const DgCoalgebra& C, const std::vector<Vec>& D, int degree);
std::vector<Vec> commutator(const DgCoalgebra& C, const std::vector<Vec>& D1, int n1, const std::vector<Vec>& D2,
                            int n2);

/// T^c(X) as the cofree conilpotent coalgebra; X must be strictly positive or
/// strictly negative (RegimeViolation otherwise).
FreeCoalgebra cofree_coalgebra(const DgSpace& X, const Truncation& trunc, const WordStyle& style = {});
void require_cofree_regime(const GradedSpace& X);

/// g(x) = counit(x) 1 + sum_n f^{|n} Delta_-^{(n)}(pi x) for f: C -> X of the
/// given degree. Throws NotConilpotent (strict) when the iteration does not
/// vanish inside the word cap; otherwise the affected images are flagged.
struct CoalgebraMap {
    std::vector<Vec> images;
    std::vector<bool> exact;
};
CoalgebraMap coextend_map(const DgCoalgebra& C, const FreeCoalgebra& T, const std::vector<Vec>& f, int degree = 0,
                          bool strict = true);
/// (g|g) Delta = Delta g, counit and atom preserved, g d = d g.
std::vector<Check> check_coalgebra_map(const DgCoalgebra& C, const DgCoalgebra& D, const std::vector<Vec>& g,
                                       const std::vector<bool>& g_exact = {});

/// Product on T^c(X) given by the projection identity
/// p mu(x,y) = m(p x, p y) + counit(x) p(y) + p(x) counit(y); letter_product
/// empty gives the shuffle product.
using LetterProduct = std::function<Vec(int, int)>;
DgAlgebra quasi_shuffle(const FreeCoalgebra& T, LetterProduct letter_product = nullptr);

/// Delta(ab) = Delta(a) Delta(b), counit multiplicative, Delta(1) = 1|1, on a
/// shared carrier.
std::vector<Check> check_bialgebra(const DgAlgebra& A, const DgCoalgebra& C, CheckOptions opt = {});
Check check_cocommutative(const DgCoalgebra& C);
Check check_commutative(const DgAlgebra& A);

/// Linear dual of a finite algebra: Delta(c*) = sum m^c_{ab} (-1)^{|a||b|} a*|b*,
/// counit from the unit, atom from the augmentation, dual differential.
DgCoalgebra finite_dual(const DgAlgebra& A);
/// Linear dual of a finite coalgebra, with the same pairing conventions.
DgAlgebra dual_algebra(const DgCoalgebra& C);

/// (c|d) coproduct sum (c1|d1)|(c2|d2) (-1)^{|d1||c2|}.
DgCoalgebra coalgebra_tensor(const DgCoalgebra& C, const DgCoalgebra& D);

}  // namespace dgkit
