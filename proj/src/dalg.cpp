#include "plyalg/dalg.hpp"

#include "memo.hpp"

#include <stdexcept>

namespace plyalg {

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<Bhat, Bhat>& p) const
    {
        return hash_combine(std::hash<Bhat>{}(p.first), std::hash<Bhat>{}(p.second));
    }
};

struct WordTermHash {
    std::size_t operator()(const std::pair<BhatWord, Bhat>& p) const
    {
        return hash_combine(SeqHash<Bhat>{}(p.first), std::hash<Bhat>{}(p.second));
    }
};

struct BaseTri {
    LBhat operator()(Bhat x, Bhat y) const { return tri(x, y); }
};

} // namespace

const LBhat& tri(Bhat x, Bhat y)
{
    static detail::Memo<std::pair<Bhat, Bhat>, LBhat, PairHash> memo;
    return memo.get({x, y}, [&] {
        if (!y.is_graft()) return LBhat(Bhat::graft({x}, y));
        // x |> (w |> r) = (x.w) |> r + (x |> w) |> r, with x |> w a derivation.
        std::vector<Bhat> br(y.branches().begin(), y.branches().end());
        Bhat r = y.root();
        std::vector<Bhat> first{x};
        first.insert(first.end(), br.begin(), br.end());
        LBhat out(Bhat::graft(first, r));
        for (std::size_t j = 0; j < br.size(); ++j) {
            for (const auto& [t, c] : tri(x, br[j])) {
                std::vector<Bhat> w = br;
                w[j] = t;
                out.add(Bhat::graft(w, r), c);
            }
        }
        return out;
    });
}

LBhat tri(const LBhat& x, const LBhat& y)
{
    LBhat out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) out.add(tri(a, b), ca * cb);
    return out;
}

LBhat brk(const LBhat& x, const LBhat& y)
{
    LBhat out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) out.add(Bhat::brk(a, b), ca * cb);
    return out;
}

const LBhat& word_tri(const BhatWord& w, Bhat y)
{
    static detail::Memo<std::pair<BhatWord, Bhat>, LBhat, WordTermHash> memo;
    return memo.get({w, y}, [&] {
        if (w.empty()) return LBhat(y);
        if (w.size() == 1) return tri(w[0], y);
        if (!y.is_graft()) {
            // Planar trees are words acting on their root.
            return LBhat(Bhat::graft(w, y));
        }
        BaseTri base;
        return as_algebra(triangle_words<Bhat, std::hash<Bhat>>(w, BhatWord{y}, base));
    });
}

LBhat word_tri(const BhatDElem& w, const LBhat& y)
{
    LBhat out;
    for (const auto& [u, cu] : w)
        for (const auto& [t, ct] : y) out.add(word_tri(u, t), cu * ct);
    return out;
}

BhatDElem triangle(const BhatDElem& u, const BhatDElem& v)
{
    BaseTri base;
    return triangle(u, v, base);
}

LBhat triple_bracket(const LBhat& x, const LBhat& y, const LBhat& z)
{
    // [x,y] |> z with [x,y] = x.y - y.x in the tensor algebra.
    BhatDElem xy = lie_word(as_delem(x), as_delem(y));
    return word_tri(xy, z);
}

LBhat graft(const std::vector<LBhat>& branches, const LBhat& root)
{
    BhatDElem words = expand_letters(branches);
    LBhat out;
    for (const auto& [r, cr] : root) {
        if (r.is_graft()) throw std::invalid_argument("graft root must be a generator or a bracket");
        for (const auto& [w, cw] : words) out.add(Bhat::graft(w, r), cr * cw);
    }
    return out;
}

BhatDElem as_delem(const LBhat& x)
{
    BhatDElem out;
    for (const auto& [t, c] : x) out.add(BhatWord{t}, c);
    return out;
}

LBhat as_algebra(const BhatDElem& x)
{
    LBhat out;
    for (const auto& [w, c] : x) {
        if (w.size() != 1) throw std::invalid_argument("expected an algebra element, found a word of length " + std::to_string(w.size()));
        out.add(w[0], c);
    }
    return out;
}

} // namespace plyalg
