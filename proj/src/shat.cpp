#include "plyalg/shat.hpp"

#include "plyalg/orders.hpp"
#include "intern.hpp"

#include <stdexcept>

namespace plyalg {

namespace {

struct SameShat {
    bool operator()(const ShatNode& a, const ShatNode& b) const
    {
        return a.kind == b.kind && a.gen == b.gen && a.kids == b.kids && a.word == b.word;
    }
};

detail::Interner<ShatNode, SameShat>& table()
{
    static detail::Interner<ShatNode, SameShat> t;
    return t;
}

} // namespace

struct ShatFactory {
    static Shat make(Shat::Kind kind, unsigned gen, std::vector<Shat> kids, OSBBWord<Shat> word)
    {
        ShatNode n{kind, gen, std::move(kids), std::move(word), 0, 0, 0, 0, 0};
        std::size_t h = hash_combine(static_cast<std::size_t>(kind) * 2654435761u + 7, gen);
        if (kind == Shat::Kind::Gen) n.vc = 1;
        for (const Shat& k : n.kids) {
            n.vc += k.vertex_count();
            n.bc += k.bracket_count();
            h = hash_combine(h, std::hash<Shat>{}(k));
        }
        for (const Shat& l : n.word.letters()) {
            n.wvc += l.vertex_count();
            n.bc += l.bracket_count();
        }
        n.vc += n.wvc;
        if (kind == Shat::Kind::Brk) n.bc += 1;
        h = hash_combine(h, OSBBHash<Shat>{}(n.word));
        n.hash = h;
        return Shat(table().intern(std::move(n)));
    }
};

Shat Shat::gen(unsigned g) { return ShatFactory::make(Kind::Gen, g, {}, {}); }

Shat Shat::brk(Shat l, Shat r) { return ShatFactory::make(Kind::Brk, 0, {l, r}, {}); }

Shat Shat::ograft(OSBBWord<Shat> word, Shat root)
{
    if (root.is_ograft()) throw std::invalid_argument("graft root must be a generator or a bracket");
    for (auto& b : word.blocks)
        std::sort(b.sym.begin(), b.sym.end(), [](Shat a, Shat c) { return cmp_shat(a, c) > 0; });
    if (word.empty()) throw std::invalid_argument("graft word must be nonempty");
    if (!is_ordered(word, ShatCmp{})) throw std::invalid_argument("graft word is not an ordered OSBB word");
    return ShatFactory::make(Kind::OGraft, 0, {root}, std::move(word));
}

Shat::Kind Shat::kind() const { return node_->kind; }
unsigned Shat::gen_index() const { return node_->gen; }
Shat Shat::left() const { return node_->kids[0]; }
Shat Shat::right() const { return node_->kids[1]; }
const OSBBWord<Shat>& Shat::word() const { return node_->word; }
Shat Shat::root() const { return node_->kids[0]; }
unsigned Shat::vertex_count() const { return node_->vc; }
unsigned Shat::bracket_count() const { return node_->bc; }
unsigned Shat::word_vertex_count() const { return node_->wvc; }
std::uint64_t Shat::id() const { return node_->id; }

} // namespace plyalg
