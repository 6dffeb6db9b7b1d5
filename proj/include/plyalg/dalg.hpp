#pragma once

#include "plyalg/magma.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace plyalg {

template <class K>
using Word = std::vector<K>;

template <class K, class H = std::hash<K>>
using DElem = LinComb<Word<K>, SeqHash<K, H>>;

template <class K, class H = std::hash<K>>
DElem<K, H> unit_word()
{
    return DElem<K, H>(Word<K>{});
}

template <class K, class H = std::hash<K>>
DElem<K, H> tensor_mul(const DElem<K, H>& a, const DElem<K, H>& b)
{
    DElem<K, H> out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Word<K> w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add(w, ca * cb);
        }
    return out;
}

template <class K, class H = std::hash<K>>
DElem<K, H> lie_word(const DElem<K, H>& a, const DElem<K, H>& b)
{
    return tensor_mul(a, b) - tensor_mul(b, a);
}

// Multilinear expansion of a word whose letters are linear combinations.
template <class K, class H = std::hash<K>>
DElem<K, H> expand_letters(const std::vector<LinComb<K, H>>& letters)
{
    DElem<K, H> out(Word<K>{});
    for (const auto& l : letters) {
        DElem<K, H> next;
        for (const auto& [w, c] : out)
            for (const auto& [k, d] : l) {
                Word<K> w2 = w;
                w2.push_back(k);
                next.add(w2, c * d);
            }
        out = std::move(next);
    }
    return out;
}

// (1/n!) times the sum over all permutations of the letters. Distinct
// rearrangements are generated once with their multiplicity.
template <class K, class H = std::hash<K>>
DElem<K, H> symmetrize(const Word<K>& w)
{
    const std::size_t n = w.size();
    std::vector<K> distinct;
    std::vector<int> cls(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto it = std::find(distinct.begin(), distinct.end(), w[i]);
        cls[i] = static_cast<int>(it - distinct.begin());
        if (it == distinct.end()) distinct.push_back(w[i]);
    }
    std::vector<unsigned> mult(distinct.size(), 0);
    for (int c : cls) ++mult[c];
    Rational weight = 1;
    for (unsigned m : mult) weight *= factorial(m);
    weight /= factorial(static_cast<unsigned>(n));
    std::sort(cls.begin(), cls.end());
    DElem<K, H> out;
    do {
        Word<K> arr;
        arr.reserve(n);
        for (int c : cls) arr.push_back(distinct[c]);
        out.add(arr, weight);
    } while (std::next_permutation(cls.begin(), cls.end()));
    return out;
}

template <class K, class H = std::hash<K>>
DElem<K, H> symmetrize(const DElem<K, H>& x)
{
    DElem<K, H> out;
    for (const auto& [w, c] : x) out.add(symmetrize<K, H>(w), c);
    return out;
}

// Symmetrization of a word of linear combinations.
template <class K, class H = std::hash<K>>
DElem<K, H> symmetrize_letters(const std::vector<LinComb<K, H>>& letters)
{
    return symmetrize<K, H>(expand_letters<K, H>(letters));
}

// The D-algebra extension of a product given on letters: a letter acts on a
// word as a derivation, a longer word unfolds by the associator rule, the
// empty word acts as the identity and anything nonempty kills the empty word.
template <class K, class H, class BaseProd>
DElem<K, H> triangle_words(const Word<K>& u, const Word<K>& v, BaseProd& base)
{
    if (u.empty()) return DElem<K, H>(v);
    if (v.empty()) return {};
    if (u.size() == 1) {
        DElem<K, H> out;
        for (std::size_t j = 0; j < v.size(); ++j) {
            LinComb<K, H> p = base(u[0], v[j]);
            for (const auto& [t, c] : p) {
                Word<K> w = v;
                w[j] = t;
                out.add(w, c);
            }
        }
        return out;
    }
    Word<K> head{u[0]};
    Word<K> rest(u.begin() + 1, u.end());
    DElem<K, H> inner = triangle_words<K, H>(rest, v, base);
    DElem<K, H> out;
    for (const auto& [w, c] : inner) out.add(triangle_words<K, H>(head, w, base), c);
    DElem<K, H> moved = triangle_words<K, H>(head, rest, base);
    for (const auto& [w, c] : moved) out.add(triangle_words<K, H>(w, v, base), -c);
    return out;
}

template <class K, class H, class BaseProd>
DElem<K, H> triangle(const DElem<K, H>& u, const DElem<K, H>& v, BaseProd&& base)
{
    DElem<K, H> out;
    for (const auto& [wu, cu] : u)
        for (const auto& [wv, cv] : v) out.add(triangle_words<K, H>(wu, wv, base), cu * cv);
    return out;
}

// ---------------------------------------------------------------------------
// The free two-operator algebra on the natural basis.

using BhatDElem = DElem<Bhat>;

// Free triangle product of two natural-basis elements (grafting).
const LBhat& tri(Bhat x, Bhat y);
LBhat tri(const LBhat& x, const LBhat& y);
LBhat brk(const LBhat& x, const LBhat& y);
// Word acting on a basis element through the D-algebra rules.
const LBhat& word_tri(const BhatWord& w, Bhat y);
LBhat word_tri(const BhatDElem& w, const LBhat& y);
BhatDElem triangle(const BhatDElem& u, const BhatDElem& v);
// [x,y,z] = a(x,y,z) - a(y,x,z) with a the associator of the triangle.
LBhat triple_bracket(const LBhat& x, const LBhat& y, const LBhat& z);
// Multilinear planar graft; every root term must be a generator or bracket.
LBhat graft(const std::vector<LBhat>& branches, const LBhat& root);

BhatDElem as_delem(const LBhat& x);
// Throws std::invalid_argument unless every word has length one.
LBhat as_algebra(const BhatDElem& x);

} // namespace plyalg
