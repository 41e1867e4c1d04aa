#pragma once

#include "dgkit/sweedler.hpp"

namespace dgkit {

struct ConventionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EnumerationTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Sign { minus, plus };

/// Bar differential d^int -/+ d^ext and cobar differential d^int +/- d^ext.
/// The default pairs bar minus with cobar plus; "plus" names the other pair.
struct SignConvention {
    Sign bar = Sign::minus;
    Sign cobar = Sign::plus;

    static SignConvention standard() { return {}; }
    static SignConvention flipped() { return {Sign::plus, Sign::minus}; }
    /// "minus" (the default pair) or "plus".
    static SignConvention parse(const std::string& text);
    bool is_standard() const { return bar == Sign::minus && cobar == Sign::plus; }
    std::string to_string() const;
    friend bool operator==(const SignConvention&, const SignConvention&) = default;
};

/// T(u), |u| = -1, du = -u^2, with the coshuffle coproduct (u primitive),
/// counit and atom the empty word, and the antipode S(u) = -u.
struct MaurerCartanAlgebra {
    FreeAlgebra free;
    DgCoalgebra coalgebra;
    std::vector<Vec> antipode;
    /// Construction-time certificate.
    std::vector<Check> checks;

    const DgAlgebra& algebra() const { return free.algebra; }
    int power(int n) const;
};
/// Requires weight_cap >= 2; the degree window is [-weight_cap, 0].
MaurerCartanAlgebra mc_algebra(int weight_cap, const Field& field = Field::rationals());
std::vector<Check> check_mc_algebra(const MaurerCartanAlgebra& mc);

/// da + a^2 for |a| = -1; zero exactly for Maurer-Cartan elements.
struct McResult {
    bool solution = false;
    bool exact = true;
    Vec defect;
};
McResult verify_mc_element(const DgAlgebra& A, const Vec& a);
/// All Maurer-Cartan elements, over F_p with dim A_{-1} <= max_dim.
std::vector<Vec> enumerate_mc_elements(const DgAlgebra& A, int max_dim = 4);

/// A degree -1 map alpha: C -> A with d_A alpha + alpha d_C + alpha*alpha = 0.
struct TwistingCochain {
    GradedMap alpha;
    bool pointed = false;
    std::vector<Check> certificate;

    bool valid() const { return all_pass(certificate); }
};
TwistingCochain verify_twisting_cochain(const DgCoalgebra& C, const DgAlgebra& A, const GradedMap& alpha,
                                        bool pointed);

/// T^c(sA_-) with d = d^int -/+ d^ext; d^int(sa) = -s(da) and
/// d^ext(sa|sb) = (-1)^{|a|} s(ab). Needs a normalized augmentation.
struct BarConstruction {
    FreeCoalgebra cofree;
    /// Basis index in A of each letter sa.
    std::vector<int> source;
    DgSpace d_int;
    DgSpace d_ext;
    SignConvention convention;

    const DgCoalgebra& coalgebra() const { return cofree.coalgebra; }
    /// Letter index of sa.
    std::optional<int> letter(int a) const;
};
BarConstruction bar(const DgAlgebra& A, const Truncation& trunc, SignConvention convention = {});

/// T(s^-1 C_-) with d = d^int +/- d^ext; d^int(s^-1 c) = -s^-1(dc) and
/// d^ext(s^-1 c) = -sum (-1)^{|c1|} s^-1 c1 s^-1 c2 over the reduced coproduct.
struct CobarConstruction {
    FreeAlgebra free;
    std::vector<int> source;
    DgSpace d_int;
    DgSpace d_ext;
    SignConvention convention;

    const DgAlgebra& algebra() const { return free.algebra; }
    std::optional<int> letter(int c) const;
};
CobarConstruction cobar(const DgCoalgebra& C, const Truncation& trunc, SignConvention convention = {});

/// d^int and d^ext each square to zero and anticommute; the sum squares to zero.
std::vector<Check> check_split_differential(const DgSpace& total, const DgSpace& d_int, const DgSpace& d_ext);
/// Word length changes by 0 (d^int) or `step` (d^ext).
Check check_length_filtration(const GradedSpace& W, const DgSpace& d_int, const DgSpace& d_ext, int step);

/// beta(sa) = -a and zero elsewhere, regardless of convention.
GradedMap raw_beta(const BarConstruction& B, const DgAlgebra& A);
/// omega(c) = s^-1 c, zero on the atom, regardless of convention.
GradedMap raw_omega(const DgCoalgebra& C, const CobarConstruction& O);
/// The universal cochains; ConventionMismatch unless the convention is the
/// standard one (otherwise the universal cochain is the negated map).
TwistingCochain universal_bar_cochain(const BarConstruction& B, const DgAlgebra& A);
TwistingCochain universal_cobar_cochain(const DgCoalgebra& C, const CobarConstruction& O);

/// g: Omega C -> A with g(s^-1 c) = +/- alpha(c), and f: C -> BA coextending
/// c -> s(-/+ alpha(c)); the signs follow the active conventions.
struct AdjointMaps {
    std::vector<Vec> g;
    std::vector<Check> g_checks;
    CoalgebraMap f;
    std::vector<Check> f_checks;
};
AdjointMaps adjunction_transforms(const TwistingCochain& alpha, const DgCoalgebra& C, const DgAlgebra& A,
                                  const CobarConstruction& O, const BarConstruction& B);
/// Algebra map out of Omega C given on all basis words.
std::vector<Vec> algebra_map_from_letters(const CobarConstruction& O, const DgAlgebra& A,
                                          const std::vector<Vec>& letter_images, bool* exact = nullptr);
GradedMap extract_from_algebra_map(const DgCoalgebra& C, const DgAlgebra& A, const CobarConstruction& O,
                                   const std::vector<Vec>& g);
GradedMap extract_from_coalgebra_map(const DgCoalgebra& C, const DgAlgebra& A, const BarConstruction& B,
                                     const std::vector<Vec>& f);

/// Exhaustive count over a finite field: every pointed degree -1 map
/// C_- -> A_- is read as a cochain, as the letter images of an algebra map
/// Omega C -> A and as the corestriction of a coalgebra map C -> BA.
struct AdjunctionCount {
    std::size_t candidates = 0;
    std::size_t twisting = 0;
    std::size_t algebra_maps = 0;
    std::size_t coalgebra_maps = 0;
    /// Counts agree; transform/extract roundtrips on every twisting cochain.
    std::vector<Check> checks;
};
/// EnumerationTooLarge over Q or beyond max_candidates.
AdjunctionCount count_adjunction(const DgCoalgebra& C, const DgAlgebra& A, const Truncation& window,
                                 std::size_t max_candidates = 1 << 16);

/// pi = (-1)^{length} intertwines the two conventions and preserves the
/// (co)products.
std::vector<Check> sign_convention_iso(const DgAlgebra& A, const Truncation& trunc);
std::vector<Check> sign_convention_iso(const DgCoalgebra& C, const Truncation& trunc);

/// Coshuffle coproduct on Omega C (C cocommutative) or shuffle product on BA
/// (A commutative), with the bialgebra checks.
struct HopfCertificate {
    DgAlgebra algebra;
    DgCoalgebra coalgebra;
    std::vector<Check> checks;
};
HopfCertificate hopf_on_cobar(const DgCoalgebra& C, const CobarConstruction& O);
HopfCertificate hopf_on_bar(const DgAlgebra& A, const BarConstruction& B);

/// C |>_. mc against Omega C under t(c) = (-1)^{|c|} c|>u, and BA against the
/// Sweedler hom T^c([u, A_-]) under sa = (-1)^{|a|} [u,a].
struct BridgeReport {
    std::map<std::pair<int, int>, int> formula_dims;
    std::map<std::pair<int, int>, int> sweedler_dims;
    std::vector<Check> checks;
};
BridgeReport bridge_cobar(const DgCoalgebra& C, const Truncation& trunc);
BridgeReport bridge_bar(const DgAlgebra& A, const Truncation& trunc);

/// Dimensions per (degree, weight).
std::map<std::pair<int, int>, int> bigraded_dims(const GradedSpace& S);

}  // namespace dgkit
