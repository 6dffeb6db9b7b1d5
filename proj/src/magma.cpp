#include "plyalg/magma.hpp"

#include "intern.hpp"

#include <stdexcept>

namespace plyalg {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names))
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j]) throw std::invalid_argument("duplicate generator name: " + names_[i]);
}

Alphabet Alphabet::standard(unsigned size)
{
    std::vector<std::string> names;
    for (unsigned i = 0; i < size; ++i)
        names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "g" + std::to_string(i));
    return Alphabet(std::move(names));
}

int Alphabet::find(std::string_view name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

namespace {

struct SameBhat {
    bool operator()(const BhatNode& a, const BhatNode& b) const
    {
        return a.kind == b.kind && a.gen == b.gen && a.kids == b.kids;
    }
};

detail::Interner<BhatNode, SameBhat>& table()
{
    static detail::Interner<BhatNode, SameBhat> t;
    return t;
}

Bhat make(Bhat::Kind kind, unsigned gen, std::vector<Bhat> kids);

} // namespace

// The constructor is private; a friend-free factory goes through this shim.
struct BhatFactory {
    static Bhat wrap(const BhatNode* n) { return Bhat(n); }
};

namespace {

Bhat make(Bhat::Kind kind, unsigned gen, std::vector<Bhat> kids)
{
    BhatNode n{kind, gen, std::move(kids), 0, 0, 0, 0};
    std::size_t h = hash_combine(static_cast<std::size_t>(kind) * 1315423911u, gen);
    if (kind == Bhat::Kind::Gen) {
        n.vc = 1;
    } else {
        for (const Bhat& k : n.kids) {
            n.vc += k.vertex_count();
            n.bc += k.bracket_count();
            h = hash_combine(h, std::hash<Bhat>{}(k));
        }
        if (kind == Bhat::Kind::Brk) n.bc += 1;
    }
    n.hash = h;
    return BhatFactory::wrap(table().intern(std::move(n)));
}

} // namespace

Bhat Bhat::gen(unsigned g) { return make(Kind::Gen, g, {}); }

Bhat Bhat::brk(Bhat l, Bhat r) { return make(Kind::Brk, 0, {l, r}); }

Bhat Bhat::graft(std::vector<Bhat> branches, Bhat root)
{
    if (branches.empty()) return root;
    if (root.is_graft()) throw std::invalid_argument("graft root must be a generator or a bracket");
    branches.push_back(root);
    return make(Kind::Graft, 0, std::move(branches));
}

Bhat::Kind Bhat::kind() const { return node_->kind; }
unsigned Bhat::gen_index() const { return node_->gen; }
Bhat Bhat::left() const { return node_->kids[0]; }
Bhat Bhat::right() const { return node_->kids[1]; }
std::span<const Bhat> Bhat::branches() const
{
    return std::span<const Bhat>(node_->kids.data(), node_->kids.size() - 1);
}
Bhat Bhat::root() const { return node_->kids.back(); }
unsigned Bhat::vertex_count() const { return node_->vc; }
unsigned Bhat::bracket_count() const { return node_->bc; }
std::uint64_t Bhat::id() const { return node_->id; }

int cmp_struct(Bhat a, Bhat b)
{
    if (a == b) return 0;
    if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count() ? -1 : 1;
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    if (a.is_gen()) return a.gen_index() < b.gen_index() ? -1 : 1;
    const auto& ka = a.node()->kids;
    const auto& kb = b.node()->kids;
    if (ka.size() != kb.size()) return ka.size() < kb.size() ? -1 : 1;
    for (std::size_t i = 0; i < ka.size(); ++i)
        if (int c = cmp_struct(ka[i], kb[i])) return c;
    return 0;
}

} // namespace plyalg
