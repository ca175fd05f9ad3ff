#pragma once

#include "cyc/scalar.hpp"

#include <map>
#include <utility>

namespace cyc {

// Finite linear combination of keys with rational coefficients. Zero
// coefficients are never stored, so two combinations are equal iff their
// term maps are equal.
template <class K>
class LinComb {
public:
    using Map = std::map<K, Scalar>;
    using const_iterator = typename Map::const_iterator;

    LinComb() = default;
    explicit LinComb(const K& k, const Scalar& c = 1) { add(k, c); }

    void add(const K& k, const Scalar& c)
    {
        if (sgn(c) == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0)
                terms_.erase(it);
        }
    }

    void add(const LinComb& other, const Scalar& c = 1)
    {
        if (sgn(c) == 0)
            return;
        for (const auto& [k, v] : other.terms_)
            add(k, v * c);
    }

    LinComb& operator+=(const LinComb& o) { add(o, 1); return *this; }
    LinComb& operator-=(const LinComb& o) { add(o, -1); return *this; }
    LinComb& operator*=(const Scalar& c)
    {
        if (sgn(c) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& kv : terms_)
            kv.second *= c;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(LinComb a, const Scalar& c) { return a *= c; }
    friend LinComb operator*(const Scalar& c, LinComb a) { return a *= c; }
    LinComb operator-() const { LinComb r = *this; r *= -1; return r; }

    bool operator==(const LinComb& o) const { return terms_ == o.terms_; }
    bool operator!=(const LinComb& o) const { return !(*this == o); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const Map& terms() const { return terms_; }
    Map& mutable_terms() { return terms_; }

    Scalar coeff(const K& k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    void clear() { terms_.clear(); }

private:
    Map terms_;
};

}  // namespace cyc
