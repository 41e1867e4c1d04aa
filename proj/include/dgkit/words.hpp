#pragma once

#include "dgkit/graded.hpp"

namespace dgkit {

using Word = std::vector<int>;

/// How words over a letter space are named: open + l1 + sep + l2 ... + close,
/// and `empty` for the empty word.
struct WordStyle {
    std::string open;
    std::string sep = ".";
    std::string close;
    std::string empty = "1";
};

/// All words over `letters` of length <= weight_cap whose degree lies in the
/// window. Weight is word length. Degrees that lose words (longer than the
/// cap, or just outside the window) are marked incomplete.
SpacePtr word_space(const GradedSpace& letters, const Truncation& trunc, const WordStyle& style);

/// Letters of basis element i of a word space.
Word word_of(const GradedSpace& W, int i);
std::optional<int> find_word(const GradedSpace& W, const Word& w);
int word_degree(const GradedSpace& letters, const Word& w);
Word concat(const Word& a, const Word& b);
Word slice(const Word& w, std::size_t from, std::size_t to);

/// Word combination to word-space element; words missing from the basis are
/// dropped and clear *exact.
Vec from_words(const GradedSpace& W, const VecN& v, bool* exact = nullptr);
VecN to_words(const GradedSpace& W, const Vec& v);

}  // namespace dgkit
