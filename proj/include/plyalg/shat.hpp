#pragma once

#include "plyalg/magma.hpp"
#include "plyalg/osbb.hpp"

namespace plyalg {

struct ShatNode;

// Element of the refined basis: a generator, a bracket of two elements, or an
// OSBB word (over this basis, in its own order) acting on a generator or a
// bracket.
class Shat {
public:
    enum class Kind : std::uint8_t { Gen, Brk, OGraft };

    Shat() = default;
    static Shat gen(unsigned g);
    static Shat brk(Shat l, Shat r);
    // Sorts the symmetric parts; throws std::invalid_argument if the word is
    // empty or not ordered, or the root is not a generator or bracket.
    static Shat ograft(OSBBWord<Shat> word, Shat root);

    Kind kind() const;
    bool is_gen() const { return kind() == Kind::Gen; }
    bool is_brk() const { return kind() == Kind::Brk; }
    bool is_ograft() const { return kind() == Kind::OGraft; }
    unsigned gen_index() const;
    Shat left() const;
    Shat right() const;
    const OSBBWord<Shat>& word() const;
    Shat root() const;

    unsigned vertex_count() const;
    unsigned bracket_count() const;
    // Total vertex count of the letters of the word (0 unless OGraft).
    unsigned word_vertex_count() const;
    std::uint64_t id() const;
    bool valid() const { return node_ != nullptr; }

    bool operator==(const Shat& o) const { return node_ == o.node_; }
    bool operator!=(const Shat& o) const { return node_ != o.node_; }
    const ShatNode* node() const { return node_; }

private:
    friend struct ShatFactory;
    explicit Shat(const ShatNode* n) : node_(n) {}
    const ShatNode* node_ = nullptr;
};

} // namespace plyalg

template <>
struct std::hash<plyalg::Shat> {
    std::size_t operator()(const plyalg::Shat& t) const noexcept;
};

namespace plyalg {

struct ShatNode {
    Shat::Kind kind;
    unsigned gen;
    std::vector<Shat> kids; // Brk: {l, r}; OGraft: {root}
    OSBBWord<Shat> word;
    unsigned vc;
    unsigned bc;
    unsigned wvc;
    std::uint64_t id;
    std::size_t hash;
};

using LShat = LinComb<Shat>;
using ShatWord = OSBBWord<Shat>;

} // namespace plyalg

inline std::size_t std::hash<plyalg::Shat>::operator()(const plyalg::Shat& t) const noexcept
{
    return t.node()->hash;
}
