#pragma once

#include "plyalg/rational.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace plyalg {

// Finite formal sum of basis elements with exact rational coefficients.
// Zero coefficients are never stored, so equality is map equality.
template <class K, class Hash = std::hash<K>>
class LinComb {
public:
    using map_type = std::unordered_map<K, Rational, Hash>;
    using const_iterator = typename map_type::const_iterator;

    LinComb() = default;
    explicit LinComb(const K& k, const Rational& c = Rational(1))
    {
        add(k, c);
    }

    void add(const K& k, const Rational& c)
    {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void add(const LinComb& other, const Rational& c)
    {
        if (c == 0) return;
        if (&other == this) { *this *= Rational(1) + c; return; }
        for (const auto& [k, v] : other.terms_) add(k, v * c);
    }

    Rational coeff(const K& k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const map_type& terms() const { return terms_; }
    void erase(const K& k) { terms_.erase(k); }

    LinComb& operator+=(const LinComb& o) { add(o, Rational(1)); return *this; }
    LinComb& operator-=(const LinComb& o) { add(o, Rational(-1)); return *this; }
    LinComb& operator*=(const Rational& c)
    {
        if (c == 0) { terms_.clear(); return *this; }
        for (auto& [k, v] : terms_) v *= c;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator-(LinComb a) { return a *= Rational(-1); }
    friend LinComb operator*(const Rational& c, LinComb a) { return a *= c; }
    friend LinComb operator*(LinComb a, const Rational& c) { return a *= c; }

    bool operator==(const LinComb& o) const { return terms_ == o.terms_; }
    bool operator!=(const LinComb& o) const { return !(*this == o); }

    // Terms sorted by a strict-weak-order `less` on keys.
    template <class Less>
    std::vector<std::pair<K, Rational>> sorted(Less less) const
    {
        std::vector<std::pair<K, Rational>> out(terms_.begin(), terms_.end());
        std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return less(a.first, b.first); });
        return out;
    }

    // Apply a linear map given on basis elements.
    template <class K2, class H2, class F>
    LinComb<K2, H2> map_linear(F&& f) const
    {
        LinComb<K2, H2> out;
        for (const auto& [k, v] : terms_) out.add(f(k), v);
        return out;
    }

private:
    map_type terms_;
};

inline std::size_t hash_combine(std::size_t seed, std::size_t v)
{
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

// Hash for sequences of hashable values (words, tuples of terms).
template <class T, class H = std::hash<T>>
struct SeqHash {
    std::size_t operator()(const std::vector<T>& v) const
    {
        std::size_t h = 0x51ed27u + v.size();
        H hh;
        for (const auto& x : v) h = hash_combine(h, hh(x));
        return h;
    }
};

} // namespace plyalg
