#include "dgkit/presented.hpp"

#include <algorithm>
#include <functional>

namespace dgkit {

int word_weight(const std::vector<BasisElement>& generators, const Word& w)
{
    int s = 0;
    for (int g : w)
        s += generators[g].weight;
    return s;
}

namespace {

struct Block {
    std::vector<Word> cols;
    std::map<Word, int> pos;
    Echelon ech;
    explicit Block(Field f) : ech(f) {}
};

struct IdealElement {
    Word a;
    int relation;
    Word b;
};

}  // namespace

NormalForms normal_forms(const PresentedAlgebra& P)
{
    const Field& F = P.field;
    const auto& G = P.generators;
    const int L = P.trunc.weight_cap;
    const Truncation& T = P.trunc;
    for (const auto& g : G)
        if (g.weight < 1)
            throw std::invalid_argument("generator " + g.name + " has weight < 1");

    auto degree_of_word = [&](const Word& w) {
        int d = 0;
        for (int g : w)
            d += G[g].degree;
        return d;
    };
    auto weight_of = [&](const Word& w) { return word_weight(G, w); };

    std::vector<int> rel_degree, rel_weight;
    for (std::size_t r = 0; r < P.relations.size(); ++r) {
        std::optional<int> d;
        int w = 0;
        for (const auto& [word, c] : P.relations[r]) {
            int wd = degree_of_word(word);
            if (d && *d != wd)
                throw std::invalid_argument("relation " + std::to_string(r) + " is not homogeneous");
            d = wd;
            w = std::max(w, weight_of(word));
        }
        rel_degree.push_back(d.value_or(0));
        rel_weight.push_back(w);
    }

    // All words of weight <= L, grouped by weight.
    std::vector<std::vector<Word>> by_weight(L + 1);
    {
        Word w;
        std::function<void(int)> grow = [&](int weight) {
            by_weight[weight].push_back(w);
            for (int g = 0; g < static_cast<int>(G.size()); ++g)
                if (weight + G[g].weight <= L) {
                    w.push_back(g);
                    grow(weight + G[g].weight);
                    w.pop_back();
                }
        };
        grow(0);
    }

    auto blocks = std::make_shared<std::map<int, Block>>();
    for (int wt = L; wt >= 0; --wt)
        for (const auto& w : by_weight[wt]) {
            int d = degree_of_word(w);
            if (T.contains(d))
                blocks->try_emplace(d, F).first->second.cols.push_back(w);
        }
    for (auto& [d, blk] : *blocks) {
        std::stable_sort(blk.cols.begin(), blk.cols.end(), [&](const Word& x, const Word& y) {
            int wx = weight_of(x), wy = weight_of(y);
            if (wx != wy)
                return wx > wy;
            if (x.size() != y.size())
                return x.size() < y.size();
            return x < y;
        });
        for (int i = 0; i < static_cast<int>(blk.cols.size()); ++i)
            blk.pos.emplace(blk.cols[i], i);
    }

    // Ideal slice.
    std::vector<IdealElement> ideal;
    std::size_t ideal_rank = 0;
    for (std::size_t r = 0; r < P.relations.size(); ++r) {
        if (P.relations[r].is_zero())
            continue;
        int budget = L - rel_weight[r];
        for (int wa = 0; wa <= budget; ++wa)
            for (const auto& a : by_weight[wa])
                for (int wb = 0; wa + wb <= budget; ++wb)
                    for (const auto& b : by_weight[wb]) {
                        int d = degree_of_word(a) + rel_degree[r] + degree_of_word(b);
                        auto it = blocks->find(d);
                        if (it == blocks->end())
                            continue;
                        Vec v;
                        for (const auto& [t, c] : P.relations[r])
                            v.add(it->second.pos.at(concat(concat(a, t), b)), c);
                        if (it->second.ech.add(std::move(v)))
                            ++ideal_rank;
                        ideal.push_back({a, static_cast<int>(r), b});
                    }
    }

    // Surviving words become the basis.
    std::vector<BasisElement> elems;
    std::vector<Word> reps;
    auto name_of = [&](const Word& w) {
        if (w.empty())
            return std::string("1");
        std::string s;
        for (std::size_t i = 0; i < w.size(); ++i)
            s += (i ? "." : "") + G[w[i]].name;
        return s;
    };
    for (auto& [d, blk] : *blocks) {
        std::vector<Word> survivors;
        for (int i = 0; i < static_cast<int>(blk.cols.size()); ++i)
            if (!blk.ech.is_pivot(i))
                survivors.push_back(blk.cols[i]);
        std::sort(survivors.begin(), survivors.end(), [&](const Word& x, const Word& y) {
            int wx = weight_of(x), wy = weight_of(y);
            return wx != wy ? wx < wy : x < y;
        });
        for (const auto& w : survivors) {
            elems.push_back({name_of(w), d, weight_of(w), {}});
            reps.push_back(w);
        }
    }

    std::set<int> incomplete, word_degrees;
    for (const auto& ws : by_weight)
        for (const auto& w : ws)
            word_degrees.insert(degree_of_word(w));
    if (!G.empty()) {
        int lo = G[0].degree, hi = G[0].degree, wmax = 1;
        for (const auto& g : G) {
            lo = std::min(lo, g.degree);
            hi = std::max(hi, g.degree);
            wmax = std::max(wmax, g.weight);
        }
        int min_len = (L + 1 + wmax - 1) / wmax;
        for (int n = T.degree_min - 1; n <= T.degree_max + 1; ++n) {
            bool heavier = lo > 0 ? n >= min_len * lo : hi < 0 ? n <= min_len * hi : true;
            if (heavier || (!T.contains(n) && word_degrees.count(n)))
                incomplete.insert(n);
        }
    }
    auto space = std::make_shared<GradedSpace>(F, T, std::move(elems), std::move(incomplete));
    auto column_to_basis = std::make_shared<std::map<std::pair<int, int>, int>>();
    for (int i = 0; i < space->dim(); ++i) {
        const Block& blk = blocks->at(space->degree(i));
        column_to_basis->emplace(std::make_pair(space->degree(i), blk.pos.at(reps[i])), i);
    }

    NormalForms out;
    out.words = reps;
    out.ideal_rank = ideal_rank;
    auto gens = std::make_shared<std::vector<BasisElement>>(G);
    out.reduce = [blocks, column_to_basis, gens, L, F](const VecN& v, bool* exact) {
        std::map<int, Vec> per_degree;
        for (const auto& [w, c] : v) {
            int d = 0;
            for (int g : w)
                d += (*gens)[g].degree;
            auto it = blocks->find(d);
            if (word_weight(*gens, w) > L || it == blocks->end()) {
                if (exact)
                    *exact = false;
                continue;
            }
            per_degree[d].add(it->second.pos.at(w), c);
        }
        Vec r;
        for (auto& [d, col] : per_degree)
            for (const auto& [k, c] : blocks->at(d).ech.reduce(std::move(col)))
                r.add(column_to_basis->at({d, k}), c);
        return r;
    };

    auto differential_of_word = [&](const Word& w) {
        VecN img;
        int prefix = 0;
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (w[k] < static_cast<int>(P.differential.size())) {
                Scalar s = F.sign(prefix);
                Word pre = slice(w, 0, k), post = slice(w, k + 1, w.size());
                for (const auto& [mid, c] : P.differential[w[k]])
                    img.add(concat(concat(pre, mid), post), c * s);
            }
            prefix += G[w[k]].degree;
        }
        return img;
    };

    for (std::size_t g = 0; g < P.differential.size(); ++g)
        for (const auto& [w, c] : P.differential[g])
            if (degree_of_word(w) != G[g].degree - 1)
                throw std::invalid_argument("differential of " + G[g].name + " is not of degree -1");

    for (const auto& e : ideal) {
        VecN v;
        for (const auto& [t, c] : P.relations[e.relation])
            v.add(concat(concat(e.a, t), e.b), c);
        VecN dv;
        for (const auto& [w, c] : v)
            dv.add(differential_of_word(w), c);
        bool exact = true;
        Vec r = out.reduce(dv, &exact);
        if (exact && !r.is_zero()) {
            std::string rel;
            for (const auto& [t, c] : P.relations[e.relation])
                rel += (rel.empty() ? "" : " + ") + c.pretty() + " " + name_of(t);
            throw InconsistentDifferential("d does not preserve the ideal: d(" + name_of(e.a) + " (" + rel + ") " +
                                           name_of(e.b) + ") reduces to " + space->format(r));
        }
    }

    DgAlgebra& A = out.algebra;
    A.dg = DgSpace::zero(space);
    for (int i = 0; i < space->dim(); ++i) {
        bool exact = true;
        A.dg.d[i] = out.reduce(differential_of_word(reps[i]), &exact);
        A.dg.d_exact[i] = exact;
    }
    auto cache = std::make_shared<std::map<std::pair<int, int>, Product>>();
    auto reps_ptr = std::make_shared<std::vector<Word>>(reps);
    auto reduce = out.reduce;
    A.mul = [cache, reps_ptr, reduce, F](int i, int j) {
        auto it = cache->find({i, j});
        if (it != cache->end())
            return it->second;
        Product p;
        p.value = reduce(VecN(concat((*reps_ptr)[i], (*reps_ptr)[j]), F.one()), &p.exact);
        cache->emplace(std::make_pair(i, j), p);
        return p;
    };
    bool unit_exact = true;
    A.unit = out.reduce(VecN(Word{}, F.one()), &unit_exact);

    if (P.augmentation) {
        auto eps_word = [&](const Word& w) {
            Scalar s = F.one();
            for (int g : w)
                s *= (*P.augmentation)[g];
            return s;
        };
        for (std::size_t r = 0; r < P.relations.size(); ++r) {
            Scalar s = F.zero();
            for (const auto& [t, c] : P.relations[r])
                s += c * eps_word(t);
            if (!s.is_zero())
                throw std::invalid_argument("augmentation does not vanish on relation " + std::to_string(r));
        }
        Vec aug;
        for (int i = 0; i < space->dim(); ++i)
            aug.add(i, eps_word(reps[i]));
        A.augmentation = aug;
    }
    return out;
}

}  // namespace dgkit
