#pragma once

#include "plyalg/lincomb.hpp"
#include "plyalg/orders.hpp"

#include <array>
#include <memory>
#include <stdexcept>
#include <vector>

namespace plyalg {

// Free magma over an ordered letter kind L with an N-ary product (N = 2 for
// M(C), N = 3 for M3(C)). Nodes are shared and immutable; equality is
// structural with a cached hash and foliage.
template <class L, unsigned N>
class Magma {
public:
    static Magma leaf(L x)
    {
        auto n = std::make_shared<Node>();
        n->is_leaf = true;
        n->letter = x;
        n->foliage = {x};
        n->hash = hash_combine(0x1eaf, std::hash<L>{}(x));
        return Magma(std::move(n));
    }

    static Magma node(std::array<Magma, N> kids)
    {
        auto n = std::make_shared<Node>();
        n->is_leaf = false;
        std::size_t h = 0x40de + N;
        for (const auto& k : kids) {
            n->foliage.insert(n->foliage.end(), k.foliage().begin(), k.foliage().end());
            h = hash_combine(h, k.hash());
        }
        n->kids = std::move(kids);
        n->hash = h;
        return Magma(std::move(n));
    }

    bool is_leaf() const { return node_->is_leaf; }
    const L& letter() const { return node_->letter; }
    const Magma& kid(unsigned i) const { return node_->kids[i]; }
    const std::array<Magma, N>& kids() const { return node_->kids; }
    // The leaf word (forgets the bracketing).
    const std::vector<L>& foliage() const { return node_->foliage; }
    std::size_t hash() const { return node_->hash; }

    bool operator==(const Magma& o) const
    {
        if (node_ == o.node_) return true;
        if (hash() != o.hash() || is_leaf() != o.is_leaf()) return false;
        if (is_leaf()) return letter() == o.letter();
        return kids() == o.kids();
    }
    bool operator!=(const Magma& o) const { return !(*this == o); }

    Magma() = default;

private:
    struct Node {
        bool is_leaf = true;
        L letter{};
        std::array<Magma, N> kids{};
        std::vector<L> foliage;
        std::size_t hash = 0;
    };
    explicit Magma(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

template <class L>
using Magma2 = Magma<L, 2>;
template <class L>
using Magma3 = Magma<L, 3>;

template <class L, unsigned N>
struct MagmaHash {
    std::size_t operator()(const Magma<L, N>& m) const { return m.hash(); }
};

template <class L>
using LMagma3 = LinComb<Magma3<L>, MagmaHash<L, 3>>;

// Hall order of the foliages; distinct elements with equal foliage are
// separated by a structural comparison (leaf below node, then children).
template <class L, unsigned N, class Cmp>
int cmp_magma(const Magma<L, N>& a, const Magma<L, N>& b, Cmp cmp)
{
    if (a == b) return 0;
    if (int c = cmp_hall(a.foliage(), b.foliage(), cmp)) return c;
    if (a.is_leaf() != b.is_leaf()) return a.is_leaf() ? -1 : 1;
    if (a.is_leaf()) return cmp(a.letter(), b.letter());
    for (unsigned i = 0; i < N; ++i)
        if (int c = cmp_magma(a.kid(i), b.kid(i), cmp)) return c;
    return 0;
}

// Hall elements of the free magma M(C).
template <class L, class Cmp>
bool is_hall(const Magma2<L>& t, Cmp cmp)
{
    if (t.is_leaf()) return true;
    const auto& u = t.kid(0);
    const auto& v = t.kid(1);
    if (!is_hall(u, cmp) || !is_hall(v, cmp)) return false;
    if (cmp_hall(u.foliage(), v.foliage(), cmp) <= 0) return false;
    if (u.is_leaf()) return true;
    return cmp_hall(u.kid(1).foliage(), v.foliage(), cmp) <= 0;
}

// LTS Hall elements of M3(C): [y,z,w] with y, z, w Hall, y > z <= w, and
// either y a letter or y = [u,v,t] with t <= z. Comparisons use cmp_magma.
template <class L, class Cmp>
bool is_lts_hall(const Magma3<L>& t, Cmp cmp)
{
    if (t.is_leaf()) return true;
    const auto& y = t.kid(0);
    const auto& z = t.kid(1);
    const auto& w = t.kid(2);
    if (!is_lts_hall(y, cmp) || !is_lts_hall(z, cmp) || !is_lts_hall(w, cmp)) return false;
    if (cmp_magma(y, z, cmp) <= 0 || cmp_magma(z, w, cmp) > 0) return false;
    if (y.is_leaf()) return true;
    return cmp_magma(y.kid(2), z, cmp) <= 0;
}

struct FuelExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rewrites a combination of ternary bracketings into LTS Hall elements using
// skew-symmetry, the cyclic identity and the derivation identity
//   [[a,b,c],v,w] = [a,b,[c,v,w]] - [c,[a,b,v],w] - [c,v,[a,b,w]].
// Subterms are rewritten innermost-first; `fuel` bounds the number of rule
// applications and FuelExhausted is thrown when it runs out.
template <class L, class Cmp>
class LtsHallRewriter {
public:
    using M = Magma3<L>;
    using LM = LMagma3<L>;

    explicit LtsHallRewriter(Cmp cmp = Cmp{}, std::size_t fuel = 1000000) : cmp_(cmp), fuel_(fuel) {}

    LM rewrite(const LM& x)
    {
        LM out;
        for (const auto& [t, c] : x) out.add(normal(t), c);
        return out;
    }

    std::size_t steps() const { return steps_; }

private:
    int cmp(const M& a, const M& b) const { return cmp_magma(a, b, cmp_); }

    void spend()
    {
        if (fuel_ == 0) throw FuelExhausted("LTS Hall rewriting ran out of fuel");
        --fuel_;
        ++steps_;
    }

    // Normal form of a single bracketing.
    LM normal(const M& t)
    {
        if (t.is_leaf()) return LM(t);
        LM ys = normal(t.kid(0)), zs = normal(t.kid(1)), ws = normal(t.kid(2));
        LM out;
        for (const auto& [y, cy] : ys)
            for (const auto& [z, cz] : zs)
                for (const auto& [w, cw] : ws) out.add(top(y, z, w), cy * cz * cw);
        return out;
    }

    // Normal form of [y,z,w] with y, z, w already Hall.
    LM top(const M& y, const M& z, const M& w)
    {
        M t = M::node({y, z, w});
        if (is_lts_hall(t, cmp_)) return LM(t);
        spend();
        if (y == z) return {};
        if (cmp(y, z) < 0) return -top(z, y, w);
        if (cmp(z, w) > 0) {
            // [y,z,w] = [y,w,z] - [z,w,y]
            LM out = top(y, w, z);
            out.add(top(z, w, y), Rational(-1));
            return out;
        }
        // y = [a,b,c] with c > z.
        const M& a = y.kid(0);
        const M& b = y.kid(1);
        const M& c = y.kid(2);
        LM out;
        for (const auto& [s, cs] : top(c, z, w)) out.add(top(a, b, s), cs);
        for (const auto& [s, cs] : top(a, b, z)) out.add(normal(M::node({c, s, w})), -cs);
        for (const auto& [s, cs] : top(a, b, w)) out.add(normal(M::node({c, z, s})), -cs);
        return out;
    }

    Cmp cmp_;
    std::size_t fuel_;
    std::size_t steps_ = 0;
};

} // namespace plyalg
