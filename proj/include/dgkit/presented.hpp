#pragma once

#include "dgkit/algebra.hpp"

namespace dgkit {

struct InconsistentDifferential : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Algebra given by generators (name, degree, weight >= 1), homogeneous
/// relations and the differential on generators. Polynomials are word
/// combinations in generator indices; the empty word is the unit.
struct PresentedAlgebra {
    Field field = Field::rationals();
    Truncation trunc;
    std::vector<BasisElement> generators;
    std::vector<VecN> relations;
    /// d of each generator; missing entries mean zero.
    std::vector<VecN> differential;
    /// Augmentation value of each generator, if augmented.
    std::optional<std::vector<Scalar>> augmentation;
};

/// Quotient of the words of weight <= weight_cap by the ideal slice spanned by
/// a.r.b (all terms of weight <= weight_cap), degree by degree. Columns are
/// eliminated heaviest first, so surviving normal words are the lightest.
struct NormalForms {
    DgAlgebra algebra;
    /// Representative word of each basis element.
    std::vector<Word> words;
    /// Normal form of a word combination; words outside the window clear *exact.
    std::function<Vec(const VecN&, bool*)> reduce;
    std::size_t ideal_rank = 0;
};

/// Throws InconsistentDifferential when d does not preserve the ideal slice.
NormalForms normal_forms(const PresentedAlgebra& P);

/// Weight of a word of generators.
int word_weight(const std::vector<BasisElement>& generators, const Word& w);

}  // namespace dgkit
