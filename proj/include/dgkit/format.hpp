#pragma once

#include "dgkit/coalgebra.hpp"
#include "dgkit/presented.hpp"

namespace dgkit {

/// Errors carry the 1-based line and column of the offending token.
struct FormatError : std::runtime_error {
    int line = 0;
    int column = 0;
    FormatError(int l, int c, const std::string& what)
        : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " + what), line(l), column(c)
    {
    }
};
struct ParseError : FormatError {
    using FormatError::FormatError;
};
struct UnknownName : FormatError {
    using FormatError::FormatError;
};
struct DegreeMismatch : FormatError {
    using FormatError::FormatError;
};

enum class PresentationKind { algebra, coalgebra, map };

/// Object graph of a presentation file. Indices refer to declaration order
/// in `basis`, `generators` or `target`.
///
///   dgkit-presentation 1
///   field Q
///   kind algebra
///   truncation -8:8:6
///   [basis]
///   1 0
///   e 0
///   [unit]
///   1/1 1
///   [products]
///   e e : 0
///
/// Vectors are comma separated "coef name" terms ("0" for zero); words join
/// generator names with '.', "1" is the empty word; coproduct terms use a|b.
struct PresentationFile {
    int version = 1;
    Field field = Field::rationals();
    PresentationKind kind = PresentationKind::algebra;
    std::optional<Truncation> truncation;

    std::vector<BasisElement> basis;
    std::map<std::pair<int, int>, Vec> products;
    std::map<int, Vec2> coproducts;
    std::optional<Vec> unit;
    std::optional<Vec> augmentation;
    std::optional<Vec> counit;
    std::optional<Vec> atom;
    std::map<int, Vec> differential;

    /// Presented algebras.
    std::vector<BasisElement> generators;
    std::vector<VecN> relations;
    std::map<int, VecN> generator_differential;
    std::optional<std::vector<Scalar>> generator_augmentation;

    /// Maps: `basis` is the source.
    std::vector<BasisElement> target;
    int degree = 0;
    std::map<int, Vec> images;

    bool presented() const { return !generators.empty(); }
    friend bool operator==(const PresentationFile&, const PresentationFile&) = default;
};

PresentationFile parse_presentation(const std::string& text);
PresentationFile load_presentation(const std::string& path);
std::string serialize(const PresentationFile& p);

DgAlgebra build_algebra(const PresentationFile& p);
DgCoalgebra build_coalgebra(const PresentationFile& p);
/// Source and target spaces are built from the declarations.
GradedMap build_map(const PresentationFile& p);
/// Generators, relations and differential of a presented algebra.
PresentedAlgebra build_presented(const PresentationFile& p);

/// Table form of finite objects (window taken from the carrier).
PresentationFile describe(const DgAlgebra& A);
PresentationFile describe(const DgCoalgebra& C);
PresentationFile describe(const PresentedAlgebra& P);

/// Built-in presets: mc, dual-numbers, diagonal-coalgebra(n),
/// primitive-coalgebra(degree), matrix-coalgebra(n), free-algebra(x:1,y:2).
/// Arguments are given in parentheses or after a colon.
bool is_preset(const std::string& ref);
PresentationFile preset(const std::string& ref, const Field& field = Field::rationals(),
                        std::optional<Truncation> trunc = std::nullopt);
std::vector<std::string> preset_names();

}  // namespace dgkit
