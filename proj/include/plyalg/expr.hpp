#pragma once

#include "plyalg/bases.hpp"

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace plyalg {

struct Expr;
using ExprP = std::shared_ptr<const Expr>;

// Surface syntax tree. Besides the constructors of the concrete grammar it can
// embed basis elements directly (leaves) and a hole `_` used for rewrite
// contexts.
struct Expr {
    enum class Kind { Gen, Hole, Bk, Tb, Gr, Sg, S, W, Tri, Lb, Sum, BhatLeaf, TLeaf };
    Kind kind = Kind::Gen;
    unsigned gen = 0;
    std::vector<ExprP> kids; // Gr/Sg: branches..., root
    std::vector<Rational> coefs; // Sum: one per kid
    Bhat bhat;
    TElem telem;
};

namespace ex {
ExprP gen(unsigned g);
ExprP hole();
ExprP bk(ExprP x, ExprP y);
ExprP tb(ExprP x, ExprP y, ExprP z);
ExprP gr(std::vector<ExprP> branches, ExprP root);
ExprP sg(std::vector<ExprP> branches, ExprP root);
ExprP s(std::vector<ExprP> xs);
ExprP w(std::vector<ExprP> xs);
ExprP tri(ExprP x, ExprP y);
ExprP lb(ExprP x, ExprP y);
ExprP sum(std::vector<std::pair<Rational, ExprP>> terms);
ExprP leaf(Bhat x);
ExprP leaf(TElem x);
ExprP of(const LT& x);
ExprP of(const LBhat& x);
} // namespace ex

// Replace every hole in ctx by filler.
ExprP substitute(const ExprP& ctx, const ExprP& filler);
bool has_hole(const ExprP& e);

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Value in the D-algebra of the natural basis (algebra elements are words of
// length one). Throws EvalError on holes or graft roots that are not a
// generator or bracket.
BhatDElem eval(const ExprP& e);
// As eval, but the value must be an algebra element.
LBhat eval_algebra(const ExprP& e);

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line(line),
          column(column)
    {
    }
    std::size_t line, column;
};

// Maps an identifier to a generator index, or returns -1 if unknown.
using GenResolver = std::function<int(std::string_view)>;

ExprP parse(std::string_view text, const GenResolver& resolve);
ExprP parse(std::string_view text, const Alphabet& alphabet);
// Identifiers used as generators in text, sorted and deduplicated.
std::vector<std::string> identifiers(std::string_view text);

std::string print(const ExprP& e, const Alphabet& alphabet);
std::string print(Bhat x, const Alphabet& alphabet);
std::string print(Shat x, const Alphabet& alphabet);
std::string print(TElem x, const Alphabet& alphabet);
std::string print(const OSBBWord<Shat>& w, const Alphabet& alphabet);

// "c * e" terms joined by " + ", in the given order; "0" when empty.
template <class K, class Printer>
std::string print_terms(const std::vector<std::pair<K, Rational>>& terms, Printer pr)
{
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms) {
        if (!out.empty()) out += " + ";
        out += to_string(c) + " * " + pr(k);
    }
    return out;
}

std::string print(const LBhat& x, const Alphabet& alphabet);
std::string print(const LShat& x, const Alphabet& alphabet);
std::string print(const LT& x, const Alphabet& alphabet);
std::string print(const OSBBComb<Shat>& x, const Alphabet& alphabet);

} // namespace plyalg
