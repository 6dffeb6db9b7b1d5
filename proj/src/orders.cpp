#include "plyalg/orders.hpp"

#include "plyalg/bases.hpp"
#include "memo.hpp"

namespace plyalg {

namespace {

struct IdPairHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const
    {
        return hash_combine(std::hash<std::uint64_t>{}(p.first), p.second);
    }
};

int shape_rank(Shat x)
{
    switch (x.kind()) {
    case Shat::Kind::Gen: return 0;
    case Shat::Kind::Brk: return 1;
    case Shat::Kind::OGraft: return 2;
    }
    return 3;
}

int cmp_shat_uncached(Shat a, Shat b)
{
    if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count() ? -1 : 1;
    if (int ra = shape_rank(a), rb = shape_rank(b); ra != rb) return ra < rb ? -1 : 1;
    switch (a.kind()) {
    case Shat::Kind::Gen:
        return a.gen_index() == b.gen_index() ? 0 : (a.gen_index() < b.gen_index() ? -1 : 1);
    case Shat::Kind::Brk:
        if (int c = cmp_shat(a.left(), b.left())) return c;
        return cmp_shat(a.right(), b.right());
    case Shat::Kind::OGraft:
        if (a.word_vertex_count() != b.word_vertex_count()) return a.word_vertex_count() < b.word_vertex_count() ? -1 : 1;
        if (int c = cmp_delta(a.word(), b.word(), ShatCmp{})) return c;
        return cmp_shat(a.root(), b.root());
    }
    return 0;
}

} // namespace

int cmp_shat(Shat a, Shat b)
{
    if (a == b) return 0;
    if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count() ? -1 : 1;
    if (a.vertex_count() <= 2) return cmp_shat_uncached(a, b);
    static detail::Memo<std::pair<std::uint64_t, std::uint64_t>, int, IdPairHash> memo;
    if (a.id() > b.id()) return -cmp_shat(b, a);
    return memo.get({a.id(), b.id()}, [&] { return cmp_shat_uncached(a, b); });
}

int cmp_T(TElem a, TElem b)
{
    if (a == b) return 0;
    if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count() ? -1 : 1;
    return cmp_shat(phi_inv(a), phi_inv(b));
}

const std::vector<TElem>& h_foliage(TElem x)
{
    static detail::Memo<TElem, std::vector<TElem>> memo;
    return memo.get(x, [&] {
        if (!x.is_bare_triple()) return std::vector<TElem>{x};
        TElem p = x.y(), q = x.z();
        if (cmp_H(p, q) < 0) std::swap(p, q);
        std::vector<TElem> out = h_foliage(p);
        const auto& fq = h_foliage(q);
        const auto& fw = h_foliage(x.w());
        out.insert(out.end(), fq.begin(), fq.end());
        out.insert(out.end(), fw.begin(), fw.end());
        return out;
    });
}

int cmp_H(TElem a, TElem b)
{
    if (a == b) return 0;
    if (int c = cmp_hall(h_foliage(a), h_foliage(b), TCmp{})) return c;
    return cmp_T(a, b);
}

HView h_view(TElem t)
{
    if (cmp_H(t.y(), t.z()) > 0) return {1, t.y(), t.z(), t.w()};
    return {-1, t.z(), t.y(), t.w()};
}

} // namespace plyalg
