#include "plyalg/telem.hpp"

#include "plyalg/orders.hpp"
#include "intern.hpp"

#include <algorithm>
#include <stdexcept>

namespace plyalg {

namespace {

struct SameT {
    bool operator()(const TElemNode& a, const TElemNode& b) const
    {
        return a.kind == b.kind && a.gen == b.gen && a.kids == b.kids && a.sym == b.sym;
    }
};

detail::Interner<TElemNode, SameT>& table()
{
    static detail::Interner<TElemNode, SameT> t;
    return t;
}

void sort_desc(std::vector<TElem>& v)
{
    std::sort(v.begin(), v.end(), [](TElem a, TElem b) { return cmp_T(a, b) > 0; });
}

} // namespace

struct TElemFactory {
    static TElem make(TElem::Kind kind, unsigned gen, std::vector<TElem> sym, std::vector<TElem> kids)
    {
        TElemNode n{kind, gen, std::move(sym), std::move(kids), 0, 0, 0, 0};
        std::size_t h = hash_combine(static_cast<std::size_t>(kind) * 40503u + 3, gen);
        if (kind == TElem::Kind::Gen) n.vc = 1;
        for (const TElem& k : n.kids) {
            n.vc += k.vertex_count();
            n.bc += k.bracket_count();
            h = hash_combine(h, std::hash<TElem>{}(k));
        }
        h = hash_combine(h, 0x5157 + n.sym.size());
        for (const TElem& k : n.sym) {
            n.vc += k.vertex_count();
            n.bc += k.bracket_count();
            h = hash_combine(h, std::hash<TElem>{}(k));
        }
        if (kind == TElem::Kind::Brk) n.bc += 1;
        n.hash = h;
        return TElem(table().intern(std::move(n)));
    }
};

TElem TElem::gen(unsigned g) { return TElemFactory::make(Kind::Gen, g, {}, {}); }

TElem TElem::brk(TElem l, TElem r) { return TElemFactory::make(Kind::Brk, 0, {}, {l, r}); }

TElem TElem::symgraft(std::vector<TElem> sym, TElem root)
{
    if (sym.empty()) throw std::invalid_argument("symmetric graft needs at least one branch");
    if (!root.is_gen() && !root.is_brk()) throw std::invalid_argument("graft root must be a generator or a bracket");
    sort_desc(sym);
    return TElemFactory::make(Kind::SymGraft, 0, std::move(sym), {root});
}

TElem TElem::triple(std::vector<TElem> sym, TElem y, TElem z, TElem w)
{
    if (cmp_T(y, z) <= 0) throw std::invalid_argument("triple bracket needs its first argument above its second");
    sort_desc(sym);
    if (!sym.empty() && cmp_T(sym.back(), z) < 0)
        throw std::invalid_argument("symmetric part of a triple must lie above its second argument");
    return TElemFactory::make(Kind::Triple, 0, std::move(sym), {y, z, w});
}

TElem::Kind TElem::kind() const { return node_->kind; }
bool TElem::is_bare_triple() const { return node_->kind == Kind::Triple && node_->sym.empty(); }
unsigned TElem::gen_index() const { return node_->gen; }
TElem TElem::left() const { return node_->kids[0]; }
TElem TElem::right() const { return node_->kids[1]; }
const std::vector<TElem>& TElem::sym() const { return node_->sym; }
TElem TElem::root() const { return node_->kids[0]; }
TElem TElem::y() const { return node_->kids[0]; }
TElem TElem::z() const { return node_->kids[1]; }
TElem TElem::w() const { return node_->kids[2]; }
unsigned TElem::vertex_count() const { return node_->vc; }
unsigned TElem::bracket_count() const { return node_->bc; }
std::uint64_t TElem::id() const { return node_->id; }

TElem TElem::ultimate_root() const
{
    switch (kind()) {
    case Kind::Gen:
    case Kind::Brk: return *this;
    case Kind::SymGraft: return root();
    case Kind::Triple: return w().ultimate_root();
    }
    return *this;
}

} // namespace plyalg
