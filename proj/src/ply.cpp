#include "plyalg/ply.hpp"

#include "memo.hpp"

#include <array>
#include <atomic>

namespace plyalg {

namespace {

struct PairTHash {
    std::size_t operator()(const std::pair<TElem, TElem>& p) const
    {
        return hash_combine(std::hash<TElem>{}(p.first), std::hash<TElem>{}(p.second));
    }
};

struct GradeKey {
    unsigned n, k;
    bool operator==(const GradeKey& o) const { return n == o.n && k == o.k; }
};
struct GradeHash {
    std::size_t operator()(const GradeKey& g) const { return hash_combine(g.n, g.k); }
};

bool is_B_impl(TElem x, bool strict);

bool triple_conditions(TElem x, bool strict)
{
    HView h = h_view(x);
    auto above = [&](TElem a, TElem b) { return strict ? cmp_H(a, b) >= 0 : cmp_H(a, b) > 0; };
    if (cmp_H(h.q, h.w) > 0) return false;
    if (h.q.is_brk() && cmp_H(h.p, h.w) > 0) return false;
    if (h.p.is_bare_triple() && cmp_H(h_view(h.p).w, h.q) > 0) return false;
    if (h.p.is_brk() && above(h.p.right(), h.q)) return false;
    if (h.q.is_brk() && above(h.q.right(), h.p)) return false;
    return true;
}

bool is_B_impl(TElem x, bool strict)
{
    switch (x.kind()) {
    case TElem::Kind::Gen: return true;
    case TElem::Kind::Brk:
        return is_B_impl(x.left(), strict) && is_B_impl(x.right(), strict) && cmp_H(x.left(), x.right()) > 0;
    case TElem::Kind::SymGraft:
        if (!x.root().is_gen()) return false;
        for (TElem s : x.sym())
            if (!is_B_impl(s, strict)) return false;
        return true;
    case TElem::Kind::Triple:
        if (!x.sym().empty() || x.w().is_brk()) return false;
        if (!is_B_impl(x.y(), strict) || !is_B_impl(x.z(), strict) || !is_B_impl(x.w(), strict)) return false;
        return triple_conditions(x, strict);
    }
    return false;
}

} // namespace

bool is_B(TElem x)
{
    static detail::Memo<TElem, bool> memo;
    if (const bool* b = memo.find(x)) return *b;
    return memo.get(x, [&] { return is_B_impl(x, false); });
}

bool is_B_strict(TElem x) { return is_B_impl(x, true); }

const std::vector<TElem>& enumerate_B(unsigned n, unsigned k)
{
    static detail::Memo<GradeKey, std::vector<TElem>, GradeHash> memo;
    return memo.get({n, k}, [&] {
        std::vector<TElem> out;
        for (TElem t : enumerate_T(n, k))
            if (is_B(t)) out.push_back(t);
        return out;
    });
}

const std::vector<TElem>& enumerate_LAT(unsigned n, unsigned k)
{
    static detail::Memo<GradeKey, std::vector<TElem>, GradeHash> memo;
    return memo.get({n, k}, [&] {
        std::vector<TElem> out;
        for (TElem t : enumerate_B(n, k))
            if (t.bracket_count() == 0) out.push_back(t);
        return out;
    });
}

std::size_t graded_dim(unsigned n, unsigned k) { return enumerate_B(n, k).size(); }

LT lat_project(const LT& x)
{
    LT out;
    for (const auto& [t, c] : x)
        if (t.bracket_count() == 0) out.add(t, c);
    return out;
}

// ---------------------------------------------------------------------------

LT tri_T(TElem a, TElem b)
{
    if (b.is_gen() || b.is_brk()) return LT(TElem::symgraft({a}, b));
    static detail::Memo<std::pair<TElem, TElem>, LT, PairTHash> memo;
    return memo.get({a, b}, [&] { return to_T(tri(eval_T(a), eval_T(b))); });
}

LT tri_T(const LT& a, const LT& b)
{
    LT out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) out.add(tri_T(x, y), cx * cy);
    return out;
}

LT brk_T(const LT& a, const LT& b)
{
    LT out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) out.add(TElem::brk(x, y), cx * cy);
    return out;
}

LT triple_T(TElem y, TElem z, TElem w)
{
    int c = cmp_T(y, z);
    if (c == 0) return {};
    if (c > 0) return LT(TElem::triple({}, y, z, w));
    return LT(TElem::triple({}, z, y, w), Rational(-1));
}

LT triple_T(const LT& y, const LT& z, const LT& w)
{
    LT out;
    for (const auto& [a, ca] : y)
        for (const auto& [b, cb] : z)
            for (const auto& [c, cc] : w) out.add(triple_T(a, b, c), ca * cb * cc);
    return out;
}

LT sym_triple_T(const std::vector<TElem>& sym, TElem y, TElem z, TElem w)
{
    if (sym.empty()) return triple_T(y, z, w);
    int c = cmp_T(y, z);
    if (c == 0) return {};
    if (c < 0) std::swap(y, z);
    bool ok = true;
    for (TElem s : sym)
        if (cmp_T(s, z) < 0) ok = false;
    if (ok) return LT(TElem::triple(sym, y, z, w), Rational(c > 0 ? 1 : -1));
    std::vector<LBhat> letters;
    for (TElem s : sym) letters.push_back(eval_T(s));
    LBhat v = word_tri(symmetrize_letters(letters), triple_bracket(eval_T(y), eval_T(z), eval_T(w)));
    return c > 0 ? to_T(v) : -to_T(v);
}

// ---------------------------------------------------------------------------

const char* rule_name(Rule r)
{
    switch (r) {
    case Rule::PLY1: return "PLY1";
    case Rule::PLY2: return "PLY2";
    case Rule::PLY3: return "PLY3";
    case Rule::PLY4: return "PLY4";
    case Rule::PLY5: return "PLY5";
    case Rule::PLY6: return "PLY6";
    }
    return "?";
}

std::optional<Rule> rule_from_name(std::string_view name)
{
    for (Rule r : {Rule::PLY1, Rule::PLY2, Rule::PLY3, Rule::PLY4, Rule::PLY5, Rule::PLY6})
        if (name == rule_name(r)) return r;
    return std::nullopt;
}

const std::vector<std::string>& rule_vars(Rule r)
{
    static const std::vector<std::string> v1{"x", "y"}, v2{"u", "x", "y"}, v3{"u", "x", "y", "z"},
        v4{"x", "y", "z"}, v5{"x", "y", "z", "u"}, v6{"u", "v", "x", "y", "z"};
    switch (r) {
    case Rule::PLY1: return v1;
    case Rule::PLY2: return v2;
    case Rule::PLY3: return v3;
    case Rule::PLY4: return v4;
    case Rule::PLY5: return v5;
    case Rule::PLY6: return v6;
    }
    return v1;
}

ExprP relation(Rule r, const std::vector<ExprP>& a)
{
    if (a.size() != rule_vars(r).size())
        throw std::invalid_argument(std::string(rule_name(r)) + " takes " + std::to_string(rule_vars(r).size()) +
                                    " arguments");
    using namespace ex;
    const Rational one(1), neg(-1);
    switch (r) {
    case Rule::PLY1: return sum({{one, bk(a[0], a[1])}, {one, bk(a[1], a[0])}});
    case Rule::PLY2: {
        const auto &u = a[0], &x = a[1], &y = a[2];
        return sum({{one, tri(u, bk(x, y))}, {neg, bk(tri(u, x), y)}, {neg, bk(x, tri(u, y))}});
    }
    case Rule::PLY3: {
        const auto &u = a[0], &x = a[1], &y = a[2], &z = a[3];
        return sum({{one, tri(u, tb(x, y, z))},
                    {neg, tb(tri(u, x), y, z)},
                    {neg, tb(x, tri(u, y), z)},
                    {neg, tb(x, y, tri(u, z))},
                    {neg, tri(w({u, bk(x, y)}), z)},
                    {one, tri(bk(x, y), tri(u, z))}});
    }
    case Rule::PLY4: {
        std::vector<std::pair<Rational, ExprP>> t;
        for (int i = 0; i < 3; ++i) {
            const auto &x = a[i], &y = a[(i + 1) % 3], &z = a[(i + 2) % 3];
            t.push_back({one, bk(bk(x, y), z)});
            t.push_back({neg, tb(x, y, z)});
            t.push_back({one, tri(bk(x, y), z)});
        }
        return sum(std::move(t));
    }
    case Rule::PLY5: {
        std::vector<std::pair<Rational, ExprP>> t;
        for (int i = 0; i < 3; ++i) {
            const auto &x = a[i], &y = a[(i + 1) % 3], &z = a[(i + 2) % 3];
            t.push_back({one, tb(bk(x, y), z, a[3])});
            t.push_back({neg, tri(bk(bk(x, y), z), a[3])});
        }
        return sum(std::move(t));
    }
    case Rule::PLY6: {
        const auto &u = a[0], &v = a[1], &x = a[2], &y = a[3], &z = a[4];
        return sum({{one, tb(u, v, tb(x, y, z))},
                    {neg, tb(tb(u, v, x), y, z)},
                    {neg, tb(x, tb(u, v, y), z)},
                    {neg, tb(x, y, tb(u, v, z))},
                    {neg, tri(w({lb(u, v), bk(x, y)}), z)},
                    {one, tri(bk(x, y), tb(u, v, z))}});
    }
    }
    throw std::invalid_argument("unknown rule");
}

// ---------------------------------------------------------------------------
// The normalizer.

namespace {

ExprP lift(const ExprP& outer, const ExprP& inner)
{
    return inner ? substitute(outer, inner) : outer;
}

Witness lifted(const Witness& w, const Rational& scale, const ExprP& outer)
{
    return Witness{w.coef * scale, outer ? lift(outer, w.context) : w.context, w.rule, w.args};
}

// omega |> [[p,q]] rewritten with the derivation rule into brackets.
struct BrkPairHash {
    std::size_t operator()(const std::pair<Bhat, Bhat>& p) const
    {
        return hash_combine(std::hash<Bhat>{}(p.first), std::hash<Bhat>{}(p.second));
    }
};
using LBrkPairs = LinComb<std::pair<Bhat, Bhat>, BrkPairHash>;

struct WBResult {
    LBrkPairs brks;
    std::vector<Witness> wit;
};

struct WBKey {
    BhatWord w;
    Bhat p, q;
    bool operator==(const WBKey& o) const { return w == o.w && p == o.p && q == o.q; }
};
struct WBKeyHash {
    std::size_t operator()(const WBKey& k) const
    {
        return hash_combine(hash_combine(SeqHash<Bhat>{}(k.w), std::hash<Bhat>{}(k.p)), std::hash<Bhat>{}(k.q));
    }
};

const WBResult& push_into_bracket(const BhatWord& w, Bhat p, Bhat q)
{
    static detail::Memo<WBKey, WBResult, WBKeyHash> memo;
    return memo.get({w, p, q}, [&] {
        WBResult out;
        if (w.empty()) {
            out.brks.add({p, q}, 1);
            return out;
        }
        Bhat a = w[0];
        BhatWord rest(w.begin() + 1, w.end());
        // a |> (rest |> [[p,q]])
        const WBResult& inner = push_into_bracket(rest, p, q);
        for (const auto& [pq, c] : inner.brks) {
            for (const auto& [t, d] : tri(a, pq.first)) out.brks.add({t, pq.second}, c * d);
            for (const auto& [t, d] : tri(a, pq.second)) out.brks.add({pq.first, t}, c * d);
            out.wit.push_back({c, ex::hole(), Rule::PLY2, {ex::leaf(a), ex::leaf(pq.first), ex::leaf(pq.second)}});
        }
        ExprP outer = ex::tri(ex::leaf(a), ex::hole());
        for (const auto& wt : inner.wit) out.wit.push_back(lifted(wt, 1, outer));
        // - (a |> rest) |> [[p,q]]
        for (std::size_t j = 0; j < rest.size(); ++j)
            for (const auto& [t, d] : tri(a, rest[j])) {
                BhatWord w2 = rest;
                w2[j] = t;
                const WBResult& sub = push_into_bracket(w2, p, q);
                out.brks.add(sub.brks, -d);
                for (const auto& wt : sub.wit) out.wit.push_back(lifted(wt, -d, nullptr));
            }
        return out;
    });
}

// omega |> [y,z,w] rewritten with the triple-bracket derivation rule.
using Triple3 = std::array<TElem, 3>;
struct Triple3Hash {
    std::size_t operator()(const Triple3& t) const
    {
        std::hash<TElem> h;
        return hash_combine(hash_combine(h(t[0]), h(t[1])), h(t[2]));
    }
};
using LTriples = LinComb<Triple3, Triple3Hash>;

struct WTResult {
    LTriples triples;
    LBhat rest;
    std::vector<Witness> wit;
};

struct WTKey {
    std::vector<TElem> w;
    Triple3 t;
    bool operator==(const WTKey& o) const { return w == o.w && t == o.t; }
};
struct WTKeyHash {
    std::size_t operator()(const WTKey& k) const { return hash_combine(SeqHash<TElem>{}(k.w), Triple3Hash{}(k.t)); }
};

const WTResult& push_into_triple(const std::vector<TElem>& w, const Triple3& yzw)
{
    static detail::Memo<WTKey, WTResult, WTKeyHash> memo;
    return memo.get({w, yzw}, [&] {
        WTResult out;
        if (w.empty()) {
            out.triples.add(yzw, 1);
            return out;
        }
        TElem a = w[0];
        std::vector<TElem> rest(w.begin() + 1, w.end());
        const WTResult& inner = push_into_triple(rest, yzw);
        const LBhat& ea = eval_T(a);
        for (const auto& [t, c] : inner.triples) {
            for (int slot = 0; slot < 3; ++slot)
                for (const auto& [s, d] : tri_T(a, t[slot])) {
                    Triple3 t2 = t;
                    t2[slot] = s;
                    out.triples.add(t2, c * d);
                }
            LBhat yz = brk(eval_T(t[0]), eval_T(t[1]));
            BhatDElem word = tensor_mul(as_delem(ea), as_delem(yz));
            LBhat extra = word_tri(word, eval_T(t[2]));
            extra -= tri(yz, tri(ea, eval_T(t[2])));
            out.rest.add(extra, c);
            out.wit.push_back(
                {c, ex::hole(), Rule::PLY3, {ex::leaf(a), ex::leaf(t[0]), ex::leaf(t[1]), ex::leaf(t[2])}});
        }
        out.rest += tri(ea, inner.rest);
        ExprP outer = ex::tri(ex::leaf(a), ex::hole());
        for (const auto& wt : inner.wit) out.wit.push_back(lifted(wt, 1, outer));
        for (std::size_t j = 0; j < rest.size(); ++j)
            for (const auto& [s, d] : tri_T(a, rest[j])) {
                std::vector<TElem> w2 = rest;
                w2[j] = s;
                const WTResult& sub = push_into_triple(w2, yzw);
                out.triples.add(sub.triples, -d);
                out.rest.add(sub.rest, -d);
                for (const auto& wt : sub.wit) out.wit.push_back(lifted(wt, -d, nullptr));
            }
        return out;
    });
}

struct Rewrite {
    std::string label;
    LT after;
    std::vector<Witness> witnesses;
    ExprP context;
    std::shared_ptr<const Trace> sub;
};

struct Ctx {
    NormalizeOptions opt;
    std::size_t fuel;
    std::size_t steps = 0;
};

struct NF {
    LT value;
    std::shared_ptr<const Trace> trace;
};

struct Run {
    LT state;
    std::shared_ptr<Trace> trace;
    bool complete = true;
};

Run run(const LT& x, Ctx& ctx);

detail::Memo<TElem, NF>& nf_memo(const NormalizeOptions& o)
{
    static detail::Memo<TElem, NF> memos[8];
    int idx = (o.strategy == Strategy::SmallestFirst ? 1 : 0) | (o.lat_mode ? 2 : 0) | (o.record_trace ? 4 : 0);
    return memos[idx];
}

const NF& normal_of(TElem t, Ctx& ctx)
{
    auto& memo = nf_memo(ctx.opt);
    if (const NF* nf = memo.find(t)) return *nf;
    Run r = run(LT(t), ctx);
    if (!r.complete) throw FuelExhausted("normalization ran out of fuel");
    return memo.get(t, [&] { return NF{r.state, r.trace}; });
}

void leaves(const std::vector<TElem>& xs, std::size_t hole_at, std::vector<ExprP>& out)
{
    out.clear();
    for (std::size_t i = 0; i < xs.size(); ++i) out.push_back(i == hole_at ? ex::hole() : ex::leaf(xs[i]));
}

// Normalizes the first argument of t that is not a basis element.
std::optional<Rewrite> inner_step(TElem t, Ctx& ctx)
{
    std::vector<TElem> slots;
    switch (t.kind()) {
    case TElem::Kind::Gen: return std::nullopt;
    case TElem::Kind::Brk: slots = {t.left(), t.right()}; break;
    case TElem::Kind::SymGraft: slots = t.sym(); break;
    case TElem::Kind::Triple:
        slots = t.sym();
        slots.insert(slots.end(), {t.y(), t.z(), t.w()});
        break;
    }
    std::size_t i = 0;
    while (i < slots.size() && is_B(slots[i])) ++i;
    if (i == slots.size()) return std::nullopt;
    const NF& nf = normal_of(slots[i], ctx);
    Rewrite rw;
    rw.label = "inner";
    rw.sub = nf.trace;
    std::vector<ExprP> args;
    switch (t.kind()) {
    case TElem::Kind::Gen: break;
    case TElem::Kind::Brk:
        for (const auto& [s, c] : nf.value) rw.after.add(i == 0 ? TElem::brk(s, t.right()) : TElem::brk(t.left(), s), c);
        rw.context = i == 0 ? ex::bk(ex::hole(), ex::leaf(t.right())) : ex::bk(ex::leaf(t.left()), ex::hole());
        break;
    case TElem::Kind::SymGraft:
        for (const auto& [s, c] : nf.value) {
            std::vector<TElem> sym = t.sym();
            sym[i] = s;
            rw.after.add(TElem::symgraft(sym, t.root()), c);
        }
        leaves(t.sym(), i, args);
        rw.context = ex::sg(args, ex::leaf(t.root()));
        break;
    case TElem::Kind::Triple: {
        const std::size_t n = t.sym().size();
        for (const auto& [s, c] : nf.value) {
            std::vector<TElem> all = slots;
            all[i] = s;
            std::vector<TElem> sym(all.begin(), all.begin() + n);
            rw.after.add(sym_triple_T(sym, all[n], all[n + 1], all[n + 2]), c);
        }
        std::vector<TElem> tb3{t.y(), t.z(), t.w()};
        std::vector<ExprP> targs;
        if (i < n) {
            leaves(t.sym(), i, args);
            leaves(tb3, 3, targs);
        } else {
            leaves(t.sym(), n, args);
            leaves(tb3, i - n, targs);
        }
        ExprP tb = ex::tb(targs[0], targs[1], targs[2]);
        rw.context = n == 0 ? tb : ex::tri(ex::s(args), tb);
        break;
    }
    }
    return rw;
}

// Step 1: a graft onto a bracket root is pushed into the bracket.
Rewrite push_bracket_step(TElem t)
{
    Rewrite rw;
    rw.label = "push-bracket";
    LBrkPairs pairs;
    for (const auto& [b, e] : eval_T(t)) {
        BhatWord w;
        Bhat r = b;
        if (b.is_graft()) {
            w.assign(b.branches().begin(), b.branches().end());
            r = b.root();
        }
        if (!r.is_brk()) throw std::logic_error("graft onto a bracket evaluated to another root");
        const WBResult& res = push_into_bracket(w, r.left(), r.right());
        pairs.add(res.brks, e);
        for (const auto& wt : res.wit) rw.witnesses.push_back(lifted(wt, e, nullptr));
    }
    for (const auto& [pq, c] : pairs) rw.after.add(brk_T(to_T(LBhat(pq.first)), to_T(LBhat(pq.second))), c);
    return rw;
}

// Step 3: a symmetric word acting on a triple bracket.
Rewrite push_triple_step(TElem t)
{
    Rewrite rw;
    rw.label = "push-triple";
    Triple3 yzw{t.y(), t.z(), t.w()};
    LTriples triples;
    LBhat rest;
    for (const auto& [w, c] : symmetrize<TElem>(t.sym())) {
        const WTResult& res = push_into_triple(w, yzw);
        triples.add(res.triples, c);
        rest.add(res.rest, c);
        for (const auto& wt : res.wit) rw.witnesses.push_back(lifted(wt, c, nullptr));
    }
    for (const auto& [k, c] : triples) rw.after.add(triple_T(k[0], k[1], k[2]), c);
    rw.after += to_T(rest);
    return rw;
}

LT cyc_brk_terms(TElem p, TElem q, TElem w)
{
    // sum over cyclic (x,y,z) of [[[x,y]],z]] + [[x,y]] |> z
    LT out;
    std::array<TElem, 3> v{p, q, w};
    for (int i = 0; i < 3; ++i) {
        TElem xy = TElem::brk(v[i], v[(i + 1) % 3]);
        TElem z = v[(i + 2) % 3];
        out.add(TElem::brk(xy, z), 1);
        out.add(tri_T(xy, z), 1);
    }
    return out;
}

LT cyc_brk_act(TElem u, TElem v, TElem q, TElem w)
{
    // sum over cyclic (x,y,z) of (u,v,q) of [[[x,y]],z]] |> w
    LT out;
    std::array<TElem, 3> a{u, v, q};
    for (int i = 0; i < 3; ++i) out.add(tri_T(TElem::brk(TElem::brk(a[i], a[(i + 1) % 3]), a[(i + 2) % 3]), w), 1);
    return out;
}

// [[u,v]] in the first slot with v >_H q: -[[[v,q]],u,w] - [[[q,u]],v,w] + cyclic terms.
LT bracket_slot_rhs(TElem u, TElem v, TElem q, TElem w)
{
    LT out = cyc_brk_act(u, v, q, w);
    out.add(triple_T(TElem::brk(v, q), u, w), -1);
    out.add(triple_T(TElem::brk(q, u), v, w), -1);
    return out;
}

// [y,z,[[u,v]]] = [[[y,z,u],v]] + [[u,[y,z,v]]]: the triple bracket acts as a
// derivation of the bracket. Witnessed by expanding both associators.
Rewrite bracket_derivation_step(TElem t)
{
    TElem y = t.y(), z = t.z(), u = t.w().left(), v = t.w().right();
    Rewrite rw;
    rw.label = "bracket-derivation";
    rw.after = brk_T(triple_T(y, z, u), LT(v)) + brk_T(LT(u), triple_T(y, z, v));
    auto L = [](TElem x) { return ex::leaf(x); };
    for (int sgn : {1, -1}) {
        const Rational c(sgn);
        ExprP Y = L(y), Z = L(z);
        if (sgn < 0) std::swap(Y, Z);
        rw.witnesses.push_back({c, ex::tri(Y, ex::hole()), Rule::PLY2, {Z, L(u), L(v)}});
        rw.witnesses.push_back({c, ex::hole(), Rule::PLY2, {Y, ex::tri(Z, L(u)), L(v)}});
        rw.witnesses.push_back({c, ex::hole(), Rule::PLY2, {Y, L(u), ex::tri(Z, L(v))}});
        rw.witnesses.push_back({-c, ex::hole(), Rule::PLY2, {ex::tri(Y, Z), L(u), L(v)}});
    }
    return rw;
}

Rewrite triple_step(TElem t)
{
    if (t.w().is_brk()) return bracket_derivation_step(t);
    HView h = h_view(t);
    const Rational sigma(h.sign);
    Rewrite rw;
    auto leaf = [](TElem x) { return ex::leaf(x); };
    if (cmp_H(h.q, h.w) > 0 || (h.q.is_brk() && cmp_H(h.p, h.w) > 0)) {
        rw.label = "cyclic";
        LT a = cyc_brk_terms(h.p, h.q, h.w);
        a.add(triple_T(h.q, h.w, h.p), -1);
        a.add(triple_T(h.w, h.p, h.q), -1);
        rw.after = sigma * a;
        rw.witnesses.push_back({-sigma, ex::hole(), Rule::PLY4, {leaf(h.p), leaf(h.q), leaf(h.w)}});
        return rw;
    }
    if (h.p.is_bare_triple()) {
        HView hp = h_view(h.p);
        if (cmp_H(hp.w, h.q) > 0) {
            rw.label = "derivation";
            TElem a = hp.p, b = hp.q, c = hp.w, q = h.q, w = h.w;
            LT ta(a), tb_(b), tc(c), tq(q), tw(w);
            LT r = triple_T(ta, tb_, triple_T(c, q, w));
            r -= triple_T(tc, triple_T(a, b, q), tw);
            r -= triple_T(tc, tq, triple_T(a, b, w));
            const LBhat &ea = eval_T(a), &eb = eval_T(b), &ec = eval_T(c), &eq = eval_T(q), &ew = eval_T(w);
            LBhat cq = brk(ec, eq);
            BhatDElem word = tensor_mul(lie_word(as_delem(ea), as_delem(eb)), as_delem(cq));
            LBhat extra = tri(cq, triple_bracket(ea, eb, ew));
            extra -= word_tri(word, ew);
            r += to_T(extra);
            const Rational s = sigma * Rational(hp.sign);
            rw.after = s * r;
            rw.witnesses.push_back({-s, ex::hole(), Rule::PLY6, {leaf(a), leaf(b), leaf(c), leaf(q), leaf(w)}});
            return rw;
        }
    }
    if (h.p.is_brk() && cmp_H(h.p.right(), h.q) > 0) {
        rw.label = "bracket-argument";
        TElem u = h.p.left(), v = h.p.right();
        rw.after = sigma * bracket_slot_rhs(u, v, h.q, h.w);
        rw.witnesses.push_back({sigma, ex::hole(), Rule::PLY5, {leaf(u), leaf(v), leaf(h.q), leaf(h.w)}});
        return rw;
    }
    if (h.q.is_brk() && cmp_H(h.q.right(), h.p) > 0) {
        rw.label = "bracket-argument";
        TElem u = h.q.left(), v = h.q.right();
        rw.after = -sigma * bracket_slot_rhs(u, v, h.p, h.w);
        rw.witnesses.push_back({-sigma, ex::hole(), Rule::PLY5, {leaf(u), leaf(v), leaf(h.p), leaf(h.w)}});
        return rw;
    }
    throw std::logic_error("no rewriting step applies to a non-basis triple bracket");
}

Rewrite rewrite_term(TElem t, Ctx& ctx)
{
    if (t.is_symgraft() && t.root().is_brk()) return push_bracket_step(t);
    if (auto rw = inner_step(t, ctx)) return std::move(*rw);
    if (t.is_brk()) {
        Rewrite rw;
        rw.label = "skew";
        TElem u = t.left(), v = t.right();
        if (u == v) {
            rw.witnesses.push_back({Rational(1, 2), ex::hole(), Rule::PLY1, {ex::leaf(u), ex::leaf(u)}});
        } else {
            rw.after.add(TElem::brk(v, u), -1);
            rw.witnesses.push_back({1, ex::hole(), Rule::PLY1, {ex::leaf(u), ex::leaf(v)}});
        }
        return rw;
    }
    if (t.is_triple() && !t.sym().empty()) return push_triple_step(t);
    if (t.is_bare_triple()) return triple_step(t);
    throw std::logic_error("no rewriting step applies");
}

LT drop_brackets(LT x)
{
    return lat_project(x);
}

Run run(const LT& x, Ctx& ctx)
{
    Run r;
    const bool rec = ctx.opt.record_trace && !ctx.opt.lat_mode;
    r.state = ctx.opt.lat_mode ? drop_brackets(x) : x;
    if (rec) {
        r.trace = std::make_shared<Trace>();
        r.trace->input = r.state;
    }
    for (;;) {
        std::optional<TElem> pick;
        for (const auto& [t, c] : r.state) {
            if (is_B(t)) continue;
            if (!pick) { pick = t; continue; }
            int cmp = cmp_T(t, *pick);
            if (ctx.opt.strategy == Strategy::LargestFirst ? cmp > 0 : cmp < 0) pick = t;
        }
        if (!pick) break;
        if (ctx.fuel == 0) {
            r.complete = false;
            break;
        }
        --ctx.fuel;
        ++ctx.steps;
        TElem t = *pick;
        Rational coef = r.state.coeff(t);
        Rewrite rw = rewrite_term(t, ctx);
        LT after = ctx.opt.lat_mode ? drop_brackets(rw.after) : rw.after;
        r.state.add(t, -coef);
        r.state.add(after, coef);
        if (rec)
            r.trace->steps.push_back(TraceStep{rw.label, coef, t, std::move(after), std::move(rw.witnesses),
                                               std::move(rw.context), std::move(rw.sub)});
    }
    if (rec) r.trace->output = r.state;
    return r;
}

} // namespace

NormalizeResult normalize(const LT& x, const NormalizeOptions& opt)
{
    Ctx ctx{opt, opt.fuel};
    NormalizeResult res;
    try {
        Run r = run(x, ctx);
        res.value = std::move(r.state);
        res.trace = std::move(r.trace);
        res.complete = r.complete;
    } catch (const FuelExhausted&) {
        res.value = x;
        res.complete = false;
    }
    res.steps = ctx.steps;
    return res;
}

LT normal_form(const LT& x, Strategy strategy)
{
    NormalizeOptions opt;
    opt.strategy = strategy;
    opt.record_trace = false;
    NormalizeResult r = normalize(x, opt);
    if (!r.complete) throw FuelExhausted("normalization ran out of fuel");
    return r.value;
}

LT normal_form(const LBhat& x, Strategy strategy) { return normal_form(to_T(x), strategy); }

} // namespace plyalg
