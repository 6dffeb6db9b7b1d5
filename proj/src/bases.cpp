#include "plyalg/bases.hpp"

#include "memo.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace plyalg {

mpz_class catalan_count(unsigned n, unsigned k)
{
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), 2 * n - 2, n - 1);
    mpz_class kn;
    mpz_ui_pow_ui(kn.get_mpz_t(), k, n);
    return kn * binom / n;
}

mpz_class beta(unsigned n, unsigned k)
{
    mpz_class two;
    mpz_ui_pow_ui(two.get_mpz_t(), 2, n - 1);
    return two * catalan_count(n, k);
}

namespace {

struct GradeKey {
    unsigned n, k;
    bool operator==(const GradeKey& o) const { return n == o.n && k == o.k; }
};
struct GradeHash {
    std::size_t operator()(const GradeKey& g) const { return hash_combine(g.n, g.k); }
};

OsbbDecomposer<Shat, ShatCmp>& shat_decomposer()
{
    static OsbbDecomposer<Shat, ShatCmp> d;
    return d;
}

// Multisets (as descending-index lists) drawn from graded pools with total
// weight m. pools[w] holds the elements of weight w. `allow` filters elements.
template <class E, class Allow, class F>
void for_each_multiset(const std::vector<const std::vector<E>*>& pools, unsigned m, Allow allow, F f)
{
    std::vector<E> cur;
    std::function<void(unsigned, unsigned, std::size_t)> rec = [&](unsigned rem, unsigned w, std::size_t idx) {
        if (rem == 0) { f(cur); return; }
        for (unsigned ww = w; ww <= rem; ++ww) {
            const auto& pool = *pools[ww];
            for (std::size_t i = (ww == w ? idx : 0); i < pool.size(); ++i) {
                if (!allow(pool[i])) continue;
                cur.push_back(pool[i]);
                rec(rem - ww, ww, i);
                cur.pop_back();
            }
        }
    };
    rec(m, 1, 0);
}

} // namespace

const std::vector<Bhat>& enumerate_Bhat(unsigned n, unsigned k)
{
    static detail::Memo<GradeKey, std::vector<Bhat>, GradeHash> memo;
    return memo.get({n, k}, [&] {
        std::vector<Bhat> out;
        if (n == 0) return out;
        if (n == 1) {
            for (unsigned g = 0; g < k; ++g) out.push_back(Bhat::gen(g));
            return out;
        }
        for (unsigned i = 1; i < n; ++i)
            for (Bhat x : enumerate_Bhat(i, k))
                for (Bhat y : enumerate_Bhat(n - i, k)) out.push_back(Bhat::brk(x, y));
        // Ordered forests of total weight m.
        std::map<unsigned, std::vector<BhatWord>> forests;
        std::function<const std::vector<BhatWord>&(unsigned)> forest = [&](unsigned m) -> const std::vector<BhatWord>& {
            auto it = forests.find(m);
            if (it != forests.end()) return it->second;
            std::vector<BhatWord> res;
            if (m == 0) {
                res.push_back({});
            } else {
                for (unsigned f = 1; f <= m; ++f)
                    for (Bhat e : enumerate_Bhat(f, k))
                        for (const auto& rest : forest(m - f)) {
                            BhatWord w{e};
                            w.insert(w.end(), rest.begin(), rest.end());
                            res.push_back(std::move(w));
                        }
            }
            return forests.emplace(m, std::move(res)).first->second;
        };
        for (unsigned r = 1; r < n; ++r)
            for (Bhat root : enumerate_Bhat(r, k)) {
                if (root.is_graft()) continue;
                for (const auto& w : forest(n - r)) out.push_back(Bhat::graft(w, root));
            }
        std::sort(out.begin(), out.end(), [](Bhat a, Bhat b) { return cmp_struct(a, b) < 0; });
        return out;
    });
}

const std::vector<Shat>& enumerate_Shat(unsigned n, unsigned k)
{
    static detail::Memo<GradeKey, std::vector<Shat>, GradeHash> memo;
    return memo.get({n, k}, [&] {
        std::vector<Shat> out;
        if (n == 0) return out;
        if (n == 1) {
            for (unsigned g = 0; g < k; ++g) out.push_back(Shat::gen(g));
            return out;
        }
        for (unsigned i = 1; i < n; ++i)
            for (Shat x : enumerate_Shat(i, k))
                for (Shat y : enumerate_Shat(n - i, k)) out.push_back(Shat::brk(x, y));
        std::vector<const std::vector<Shat>*> pools(n);
        for (unsigned w = 1; w < n; ++w) pools[w] = &enumerate_Shat(w, k);
        for (unsigned r = 1; r < n; ++r)
            for (Shat root : enumerate_Shat(r, k)) {
                if (root.is_ograft()) continue;
                for_each_multiset<Shat>(pools, n - r, [](Shat) { return true; }, [&](const std::vector<Shat>& ms) {
                    for (auto& w : enumerate_osbb(ms, ShatCmp{})) out.push_back(Shat::ograft(std::move(w), root));
                });
            }
        std::sort(out.begin(), out.end(), ShatLess{});
        return out;
    });
}

const std::vector<Shat>& enumerate_S(unsigned n, unsigned k)
{
    static detail::Memo<GradeKey, std::vector<Shat>, GradeHash> memo;
    return memo.get({n, k}, [&] {
        std::vector<Shat> out;
        for (Shat x : enumerate_Shat(n, k))
            if (x.bracket_count() == 0) out.push_back(x);
        return out;
    });
}

const std::vector<TElem>& enumerate_T(unsigned n, unsigned k)
{
    static detail::Memo<GradeKey, std::vector<TElem>, GradeHash> memo;
    return memo.get({n, k}, [&] {
        std::vector<TElem> out;
        if (n == 0) return out;
        if (n == 1) {
            for (unsigned g = 0; g < k; ++g) out.push_back(TElem::gen(g));
            return out;
        }
        for (unsigned i = 1; i < n; ++i)
            for (TElem x : enumerate_T(i, k))
                for (TElem y : enumerate_T(n - i, k)) out.push_back(TElem::brk(x, y));
        std::vector<const std::vector<TElem>*> pools(n);
        for (unsigned w = 1; w < n; ++w) pools[w] = &enumerate_T(w, k);
        auto any = [](TElem) { return true; };
        for (unsigned r = 1; r < n; ++r)
            for (TElem root : enumerate_T(r, k)) {
                if (!root.is_gen() && !root.is_brk()) continue;
                for_each_multiset<TElem>(pools, n - r, any, [&](const std::vector<TElem>& ms) {
                    out.push_back(TElem::symgraft(ms, root));
                });
            }
        for (unsigned k1 = 1; k1 + 2 <= n; ++k1)
            for (unsigned k2 = 1; k1 + k2 + 1 <= n; ++k2)
                for (unsigned k3 = 1; k1 + k2 + k3 <= n; ++k3)
                    for (TElem z : enumerate_T(k2, k))
                        for (TElem y : enumerate_T(k1, k)) {
                            if (cmp_T(y, z) <= 0) continue;
                            for (TElem w : enumerate_T(k3, k)) {
                                unsigned rest = n - k1 - k2 - k3;
                                if (rest == 0) {
                                    out.push_back(TElem::triple({}, y, z, w));
                                    continue;
                                }
                                for_each_multiset<TElem>(pools, rest, [&](TElem x) { return cmp_T(x, z) >= 0; },
                                                         [&](const std::vector<TElem>& ms) {
                                                             out.push_back(TElem::triple(ms, y, z, w));
                                                         });
                            }
                        }
        std::sort(out.begin(), out.end(), TLess{});
        return out;
    });
}

const LShat& to_shat(Bhat x)
{
    static detail::Memo<Bhat, LShat> memo;
    return memo.get(x, [&] {
        switch (x.kind()) {
        case Bhat::Kind::Gen: return LShat(Shat::gen(x.gen_index()));
        case Bhat::Kind::Brk: {
            LShat out;
            for (const auto& [a, ca] : to_shat(x.left()))
                for (const auto& [b, cb] : to_shat(x.right())) out.add(Shat::brk(a, b), ca * cb);
            return out;
        }
        case Bhat::Kind::Graft: break;
        }
        std::vector<LShat> letters;
        for (Bhat b : x.branches()) letters.push_back(to_shat(b));
        DElem<Shat> words = expand_letters(letters);
        OSBBComb<Shat> osbb = shat_decomposer().decompose(words);
        LShat out;
        for (const auto& [r, cr] : to_shat(x.root()))
            for (const auto& [w, cw] : osbb) out.add(Shat::ograft(w, r), cr * cw);
        return out;
    });
}

LShat to_shat(const LBhat& x)
{
    LShat out;
    for (const auto& [t, c] : x) out.add(to_shat(t), c);
    return out;
}

const LBhat& from_shat(Shat x)
{
    static detail::Memo<Shat, LBhat> memo;
    return memo.get(x, [&] {
        switch (x.kind()) {
        case Shat::Kind::Gen: return LBhat(Bhat::gen(x.gen_index()));
        case Shat::Kind::Brk: return brk(from_shat(x.left()), from_shat(x.right()));
        case Shat::Kind::OGraft: break;
        }
        DElem<Shat> words = osbb_expand(x.word());
        const LBhat& root = from_shat(x.root());
        LBhat out;
        for (const auto& [w, c] : words) {
            std::vector<LBhat> letters;
            for (Shat l : w) letters.push_back(from_shat(l));
            for (const auto& [bw, d] : expand_letters(letters))
                for (const auto& [r, cr] : root) out.add(Bhat::graft(bw, r), c * d * cr);
        }
        return out;
    });
}

LBhat from_shat(const LShat& x)
{
    LBhat out;
    for (const auto& [t, c] : x) out.add(from_shat(t), c);
    return out;
}

TElem phi(Shat x)
{
    static detail::Memo<Shat, TElem> memo;
    return memo.get(x, [&] {
        switch (x.kind()) {
        case Shat::Kind::Gen: return TElem::gen(x.gen_index());
        case Shat::Kind::Brk: return TElem::brk(phi(x.left()), phi(x.right()));
        case Shat::Kind::OGraft: break;
        }
        const auto& blocks = x.word().blocks;
        const Block<Shat>& first = blocks.front();
        std::vector<TElem> sym;
        for (Shat s : first.sym) sym.push_back(phi(s));
        if (!first.brk) return TElem::symgraft(std::move(sym), phi(x.root()));
        OSBBWord<Shat> rest;
        rest.blocks.assign(blocks.begin() + 1, blocks.end());
        Shat inner = rest.empty() ? x.root() : Shat::ograft(rest, x.root());
        return TElem::triple(std::move(sym), phi(first.brk->first), phi(first.brk->second), phi(inner));
    });
}

Shat phi_inv(TElem x)
{
    static detail::Memo<TElem, Shat> memo;
    if (const Shat* s = memo.find(x)) return *s;
    return memo.get(x, [&] {
        switch (x.kind()) {
        case TElem::Kind::Gen: return Shat::gen(x.gen_index());
        case TElem::Kind::Brk: return Shat::brk(phi_inv(x.left()), phi_inv(x.right()));
        case TElem::Kind::SymGraft: {
            OSBBWord<Shat> w;
            for (TElem s : x.sym()) w.blocks[0].sym.push_back(phi_inv(s));
            return Shat::ograft(std::move(w), phi_inv(x.root()));
        }
        case TElem::Kind::Triple: break;
        }
        Block<Shat> first;
        for (TElem s : x.sym()) first.sym.push_back(phi_inv(s));
        first.brk = std::make_pair(phi_inv(x.y()), phi_inv(x.z()));
        Shat inner = phi_inv(x.w());
        OSBBWord<Shat> w;
        w.blocks = {first};
        Shat root = inner;
        if (inner.is_ograft()) {
            const auto& ib = inner.word().blocks;
            w.blocks.insert(w.blocks.end(), ib.begin(), ib.end());
            root = inner.root();
        } else {
            w.blocks.push_back(Block<Shat>{});
        }
        return Shat::ograft(std::move(w), root);
    });
}

LT phi_on_A(const LBhat& x)
{
    LT out;
    for (const auto& [u, c] : to_shat(x)) out.add(phi(u), c);
    return out;
}

LShat phi_inv_on_A(const LBhat& x)
{
    LShat out;
    for (const auto& [t, c] : to_T(x)) out.add(phi_inv(t), c);
    return out;
}

const LBhat& eval_T(TElem x)
{
    static detail::Memo<TElem, LBhat> memo;
    return memo.get(x, [&] {
        switch (x.kind()) {
        case TElem::Kind::Gen: return LBhat(Bhat::gen(x.gen_index()));
        case TElem::Kind::Brk: return brk(eval_T(x.left()), eval_T(x.right()));
        case TElem::Kind::SymGraft: {
            std::vector<LBhat> letters;
            for (TElem s : x.sym()) letters.push_back(eval_T(s));
            return word_tri(symmetrize_letters(letters), eval_T(x.root()));
        }
        case TElem::Kind::Triple: break;
        }
        LBhat tb = triple_bracket(eval_T(x.y()), eval_T(x.z()), eval_T(x.w()));
        if (x.sym().empty()) return tb;
        std::vector<LBhat> letters;
        for (TElem s : x.sym()) letters.push_back(eval_T(s));
        return word_tri(symmetrize_letters(letters), tb);
    });
}

LBhat eval_T(const LT& x)
{
    LBhat out;
    for (const auto& [t, c] : x) out.add(eval_T(t), c);
    return out;
}

const LShat& shat_of_T(TElem x)
{
    static detail::Memo<TElem, LShat> memo;
    return memo.get(x, [&] { return to_shat(eval_T(x)); });
}

LT to_T_from_shat(const LShat& x)
{
    std::map<Shat, Rational, ShatLess> work;
    for (const auto& [u, c] : x) work.emplace(u, c);
    LT out;
    while (!work.empty()) {
        auto top = std::prev(work.end());
        Shat u = top->first;
        Rational c = top->second;
        TElem t = phi(u);
        out.add(t, c);
        const LShat& img = shat_of_T(t);
        if (img.coeff(u) != 1) throw std::logic_error("triangular change of basis has a non-unit diagonal entry");
        for (const auto& [v, d] : img) {
            auto [it, inserted] = work.try_emplace(v, Rational(0));
            it->second -= c * d;
            if (it->second == 0) work.erase(it);
        }
        if (work.count(u)) throw std::logic_error("triangular change of basis did not clear its pivot");
    }
    return out;
}

LT to_T(const LBhat& x)
{
    return to_T_from_shat(to_shat(x));
}

std::size_t max_word_length(const LShat& x)
{
    std::size_t m = 0;
    for (const auto& [u, c] : x)
        if (u.is_ograft()) m = std::max(m, u.word().length());
    return m;
}

} // namespace plyalg
