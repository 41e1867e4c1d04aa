#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dgkit/scalar.hpp"

namespace dgkit {

/// Finite linear combination of keys with nonzero scalar coefficients.
/// Keys are kept ordered so iteration (and hence every report) is deterministic.
template <class Key>
class SparseVec {
public:
    using Map = std::map<Key, Scalar>;
    using const_iterator = typename Map::const_iterator;

    SparseVec() = default;
    SparseVec(const Key& key, const Scalar& c) { add(key, c); }

    void add(const Key& key, const Scalar& c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    void add(const SparseVec& other, const Scalar& c)
    {
        if (c.is_zero())
            return;
        for (const auto& [k, v] : other.terms_)
            add(k, v * c);
    }

    SparseVec& operator+=(const SparseVec& other)
    {
        for (const auto& [k, v] : other.terms_)
            add(k, v);
        return *this;
    }

    SparseVec& operator-=(const SparseVec& other)
    {
        for (const auto& [k, v] : other.terms_)
            add(k, -v);
        return *this;
    }

    SparseVec scaled(const Scalar& c) const
    {
        SparseVec r;
        if (c.is_zero())
            return r;
        for (const auto& [k, v] : terms_)
            r.terms_.emplace(k, v * c);
        return r;
    }

    friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
    friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
    friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.terms_ == b.terms_; }

    /// Coefficient of key, or nullptr when the key does not occur.
    const Scalar* find(const Key& key) const
    {
        auto it = terms_.find(key);
        return it == terms_.end() ? nullptr : &it->second;
    }

    Scalar coefficient(const Key& key, const Field& field) const
    {
        auto c = find(key);
        return c ? *c : field.zero();
    }

    void erase(const Key& key) { terms_.erase(key); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const Map& terms() const { return terms_; }

    template <class F>
    auto map_keys(F&& f) const
    {
        using K2 = decltype(f(std::declval<const Key&>()));
        SparseVec<K2> r;
        for (const auto& [k, v] : terms_)
            r.add(f(k), v);
        return r;
    }

private:
    Map terms_;
};

/// Vector over a single basis, indexed by basis position.
using Vec = SparseVec<int>;
/// Element of a two-fold tensor product, indexed by basis pairs.
using Vec2 = SparseVec<std::pair<int, int>>;
/// Element of a k-fold tensor product.
using VecN = SparseVec<std::vector<int>>;

}  // namespace dgkit
