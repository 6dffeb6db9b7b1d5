#pragma once

#include "plyalg/lincomb.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace plyalg {

// Totally ordered generating set; the order is the index order.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);
    // Generators "a", "b", ... (then "g26", ... beyond z).
    static Alphabet standard(unsigned size);

    unsigned size() const { return static_cast<unsigned>(names_.size()); }
    const std::string& name(unsigned g) const { return names_.at(g); }
    // -1 when unknown.
    int find(std::string_view name) const;

private:
    std::vector<std::string> names_;
};

struct BhatNode;

// An element of the natural basis of the free algebra over a bracket and a
// triangle product: a generator, a bracket of two elements, or a planar graft
// whose root is a generator or a bracket. Values are interned, so equality is
// pointer equality and hashing is O(1).
class Bhat {
public:
    enum class Kind : std::uint8_t { Gen, Brk, Graft };

    Bhat() = default;
    static Bhat gen(unsigned g);
    static Bhat brk(Bhat l, Bhat r);
    // The planar tree with the given root and ordered branches. An empty
    // branch list returns the root itself.
    static Bhat graft(std::vector<Bhat> branches, Bhat root);

    Kind kind() const;
    bool is_gen() const { return kind() == Kind::Gen; }
    bool is_brk() const { return kind() == Kind::Brk; }
    bool is_graft() const { return kind() == Kind::Graft; }
    unsigned gen_index() const;
    Bhat left() const;
    Bhat right() const;
    std::span<const Bhat> branches() const;
    Bhat root() const;

    unsigned vertex_count() const;
    unsigned bracket_count() const;
    std::uint64_t id() const;
    bool valid() const { return node_ != nullptr; }

    bool operator==(const Bhat& o) const { return node_ == o.node_; }
    bool operator!=(const Bhat& o) const { return node_ != o.node_; }
    const BhatNode* node() const { return node_; }

private:
    friend struct BhatFactory;
    explicit Bhat(const BhatNode* n) : node_(n) {}
    const BhatNode* node_ = nullptr;
};

struct BhatNode {
    Bhat::Kind kind;
    unsigned gen;
    std::vector<Bhat> kids; // Brk: {l, r}; Graft: branches..., root
    unsigned vc;
    unsigned bc;
    std::uint64_t id;
    std::size_t hash;
};

// Fixed structural order (vertex count, kind, then children); used for
// listings of the natural basis and as a tie-break only.
int cmp_struct(Bhat a, Bhat b);

} // namespace plyalg

template <>
struct std::hash<plyalg::Bhat> {
    std::size_t operator()(const plyalg::Bhat& t) const noexcept { return t.node()->hash; }
};

namespace plyalg {
using LBhat = LinComb<Bhat>;
using BhatWord = std::vector<Bhat>;
} // namespace plyalg
