#include "dgkit/words.hpp"

#include <algorithm>
#include <functional>

namespace dgkit {

namespace {

Word key_of(const Word& w)
{
    Word k{static_cast<int>(w.size())};
    k.insert(k.end(), w.begin(), w.end());
    return k;
}

}  // namespace

SpacePtr word_space(const GradedSpace& letters, const Truncation& trunc, const WordStyle& style)
{
    std::vector<BasisElement> elems;
    std::set<int> incomplete;
    const int L = trunc.weight_cap;
    Word w;
    std::function<void(int)> grow = [&](int deg) {
        if (trunc.contains(deg)) {
            std::string name;
            if (w.empty())
                name = style.empty;
            else {
                name = style.open;
                for (std::size_t i = 0; i < w.size(); ++i)
                    name += (i ? style.sep : "") + letters.name(w[i]);
                name += style.close;
            }
            elems.push_back({name, deg, static_cast<int>(w.size()), key_of(w)});
        }
        else if (deg == trunc.degree_min - 1 || deg == trunc.degree_max + 1) {
            incomplete.insert(deg);
        }
        if (static_cast<int>(w.size()) == L)
            return;
        for (int l = 0; l < letters.dim(); ++l) {
            w.push_back(l);
            grow(deg + letters.degree(l));
            w.pop_back();
        }
    };
    grow(0);

    // Words longer than the cap: with all letters of one strict sign the
    // affected degrees are bounded away from zero, otherwise nothing is safe.
    if (letters.dim() > 0) {
        int lo = letters.degree(0), hi = letters.degree(letters.dim() - 1);
        for (int n = trunc.degree_min - 1; n <= trunc.degree_max + 1; ++n) {
            bool longer_words = lo > 0 ? n >= (L + 1) * lo : hi < 0 ? n <= (L + 1) * hi : true;
            if (longer_words)
                incomplete.insert(n);
        }
    }
    return std::make_shared<GradedSpace>(letters.field(), trunc, std::move(elems), std::move(incomplete));
}

Word word_of(const GradedSpace& W, int i)
{
    const auto& k = W.key(i);
    return Word(k.begin() + 1, k.end());
}

std::optional<int> find_word(const GradedSpace& W, const Word& w) { return W.find_key(key_of(w)); }

int word_degree(const GradedSpace& letters, const Word& w)
{
    int d = 0;
    for (int l : w)
        d += letters.degree(l);
    return d;
}

Word concat(const Word& a, const Word& b)
{
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Word slice(const Word& w, std::size_t from, std::size_t to) { return Word(w.begin() + from, w.begin() + to); }

Vec from_words(const GradedSpace& W, const VecN& v, bool* exact)
{
    Vec r;
    for (const auto& [w, c] : v) {
        if (auto i = find_word(W, w))
            r.add(*i, c);
        else if (exact)
            *exact = false;
    }
    return r;
}

VecN to_words(const GradedSpace& W, const Vec& v)
{
    VecN r;
    for (const auto& [i, c] : v)
        r.add(word_of(W, i), c);
    return r;
}

}  // namespace dgkit
