#pragma once

#include "plyalg/magma.hpp"

namespace plyalg {

struct TElemNode;

// Element of the triple-bracket basis: a generator, a bracket, a symmetric
// graft s(x1...xn) |> r onto a generator or bracket, or
// s(x1...xn) |> [y,z,w] with y > z and every xi >= z (n may be 0).
class TElem {
public:
    enum class Kind : std::uint8_t { Gen, Brk, SymGraft, Triple };

    TElem() = default;
    static TElem gen(unsigned g);
    static TElem brk(TElem l, TElem r);
    // Throws std::invalid_argument on an empty multiset or a root that is not
    // a generator or bracket.
    static TElem symgraft(std::vector<TElem> sym, TElem root);
    // Throws std::invalid_argument unless y > z and every element of sym >= z.
    static TElem triple(std::vector<TElem> sym, TElem y, TElem z, TElem w);

    Kind kind() const;
    bool is_gen() const { return kind() == Kind::Gen; }
    bool is_brk() const { return kind() == Kind::Brk; }
    bool is_symgraft() const { return kind() == Kind::SymGraft; }
    bool is_triple() const { return kind() == Kind::Triple; }
    // A triple bracket with empty symmetric part.
    bool is_bare_triple() const;
    unsigned gen_index() const;
    TElem left() const;  // Brk
    TElem right() const; // Brk
    const std::vector<TElem>& sym() const; // SymGraft, Triple (descending)
    TElem root() const;  // SymGraft
    TElem y() const;     // Triple
    TElem z() const;
    TElem w() const;
    // The generator or bracket at the bottom of the element.
    TElem ultimate_root() const;

    unsigned vertex_count() const;
    unsigned bracket_count() const;
    std::uint64_t id() const;
    bool valid() const { return node_ != nullptr; }

    bool operator==(const TElem& o) const { return node_ == o.node_; }
    bool operator!=(const TElem& o) const { return node_ != o.node_; }
    const TElemNode* node() const { return node_; }

private:
    friend struct TElemFactory;
    explicit TElem(const TElemNode* n) : node_(n) {}
    const TElemNode* node_ = nullptr;
};

struct TElemNode {
    TElem::Kind kind;
    unsigned gen;
    std::vector<TElem> sym;
    std::vector<TElem> kids; // Brk: {l, r}; SymGraft: {root}; Triple: {y, z, w}
    unsigned vc;
    unsigned bc;
    std::uint64_t id;
    std::size_t hash;
};

} // namespace plyalg

template <>
struct std::hash<plyalg::TElem> {
    std::size_t operator()(const plyalg::TElem& t) const noexcept { return t.node()->hash; }
};

namespace plyalg {
using LT = LinComb<TElem>;
} // namespace plyalg
