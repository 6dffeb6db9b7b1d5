#pragma once

#include "plyalg/osbb.hpp"
#include "plyalg/shat.hpp"
#include "plyalg/telem.hpp"

namespace plyalg {

// All comparisons return <0, 0, >0.

// Hall order on words: longer is greater, then lexicographic.
template <class L, class Cmp>
int cmp_hall(const std::vector<L>& a, const std::vector<L>& b, Cmp cmp)
{
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (int c = cmp(a[i], b[i])) return c;
    return 0;
}

// Symmetric words (letters sorted descending): length, then lexicographic.
template <class L, class Cmp>
int cmp_sym(const std::vector<L>& a, const std::vector<L>& b, Cmp cmp)
{
    return cmp_hall(a, b, cmp);
}

template <class L, class Cmp>
int cmp_block(const Block<L>& a, const Block<L>& b, Cmp cmp)
{
    if (a.brk && b.brk) {
        if (a.sym.size() != b.sym.size()) return a.sym.size() < b.sym.size() ? -1 : 1;
        if (int c = cmp(a.brk->second, b.brk->second)) return c;
        if (int c = cmp(a.brk->first, b.brk->first)) return c;
        return cmp_sym(a.sym, b.sym, cmp);
    }
    if (!a.brk && !b.brk) return cmp_sym(a.sym, b.sym, cmp);
    // A commutator block beats a symmetric block only when it is longer.
    if (a.brk) return a.length() > b.length() ? 1 : -1;
    return b.length() > a.length() ? -1 : 1;
}

template <class L, class Cmp>
int cmp_delta(const OSBBWord<L>& a, const OSBBWord<L>& b, Cmp cmp)
{
    std::size_t la = a.length(), lb = b.length();
    if (la != lb) return la < lb ? -1 : 1;
    std::size_t n = std::min(a.blocks.size(), b.blocks.size());
    for (std::size_t i = 0; i < n; ++i)
        if (int c = cmp_block(a.blocks[i], b.blocks[i], cmp)) return c;
    if (a.blocks.size() != b.blocks.size()) return a.blocks.size() < b.blocks.size() ? -1 : 1;
    return 0;
}

// Order of the refined basis: vertex count; brackets before grafts;
// generators by index; brackets by left then right; grafts by the vertex
// count of the word, then the word, then the root.
int cmp_shat(Shat a, Shat b);

// Pull-back of the refined-basis order along the inverse automorphism.
int cmp_T(TElem a, TElem b);

struct ShatCmp {
    int operator()(Shat a, Shat b) const { return cmp_shat(a, b); }
};
struct TCmp {
    int operator()(TElem a, TElem b) const { return cmp_T(a, b); }
};
struct ShatLess {
    bool operator()(Shat a, Shat b) const { return cmp_shat(a, b) < 0; }
};
struct TLess {
    bool operator()(TElem a, TElem b) const { return cmp_T(a, b) < 0; }
};

// Leaf word of a triple-bracket basis element seen as a ternary bracketing
// of non-triple elements. Bare triples are read with their two first
// arguments in decreasing Hall order.
const std::vector<TElem>& h_foliage(TElem x);

// Hall order on the triple-bracket basis: Hall order of the leaf words with
// letters compared by cmp_T; equal leaf words fall back to cmp_T.
int cmp_H(TElem a, TElem b);

// A bare triple [y,z,w] written as sign * [p,q,w] with p >_H q.
struct HView {
    int sign;
    TElem p, q, w;
};
HView h_view(TElem bare_triple);

} // namespace plyalg
