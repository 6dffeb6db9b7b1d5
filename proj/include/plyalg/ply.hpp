#pragma once

#include "plyalg/expr.hpp"
#include "plyalg/hall.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace plyalg {

// ---------------------------------------------------------------------------
// The basis of the free post-Lie-Yamaguti algebra, as a predicate on the
// triple-bracket basis.

// Membership in the basis. Brackets need x >_H y; triple brackets [x,y,z]
// (read as [p,q,w] with p >_H q) need q <=_H w, p = [a,b,c] => c <=_H q,
// p = [[u,v]] => v <=_H q and q = [[u,v]] => v <=_H p, and w must not be a
// bracket (the triple bracket acts on brackets as a derivation); symmetric
// grafts need a generator root.
bool is_B(TElem x);
// The same predicate with strict side conditions on bracket arguments
// (v <_H q, v <_H p); used to report where the two readings differ.
bool is_B_strict(TElem x);
const std::vector<TElem>& enumerate_B(unsigned n, unsigned alphabet_size);
// Bracket-free basis elements.
const std::vector<TElem>& enumerate_LAT(unsigned n, unsigned alphabet_size);
std::size_t graded_dim(unsigned n, unsigned alphabet_size);
// Drops every term that contains a bracket.
LT lat_project(const LT& x);

// ---------------------------------------------------------------------------
// Operations in triple-bracket coordinates (exact, no relations used).

LT tri_T(TElem a, TElem b);
LT tri_T(const LT& a, const LT& b);
LT brk_T(const LT& a, const LT& b);
// [y,z,w] as a combination of basis triples (skew-symmetry only).
LT triple_T(TElem y, TElem z, TElem w);
LT triple_T(const LT& y, const LT& z, const LT& w);
// s(sym) |> [y,z,w] in basis coordinates.
LT sym_triple_T(const std::vector<TElem>& sym, TElem y, TElem z, TElem w);

// ---------------------------------------------------------------------------
// Relations. Each schema is written as LHS - RHS, an element of the ideal.

enum class Rule { PLY1, PLY2, PLY3, PLY4, PLY5, PLY6 };

const char* rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);
// Schema variables, in argument order:
//   PLY1 (x,y)  PLY2 (u,x,y)  PLY3 (u,x,y,z)  PLY4 (x,y,z)  PLY5 (x,y,z,u)
//   PLY6 (u,v,x,y,z)
const std::vector<std::string>& rule_vars(Rule r);
ExprP relation(Rule r, const std::vector<ExprP>& args);

// ---------------------------------------------------------------------------
// Normalization with a replayable trace.

// One relation instance used by a step: coef * context[relation(rule, args)].
struct Witness {
    Rational coef;
    ExprP context; // contains one hole
    Rule rule;
    std::vector<ExprP> args;
};

struct Trace;

// The working element changes by coef * (after - before). A step either
// carries relation witnesses with
//   eval(before) - eval(after) = sum coef_i * eval(context_i[instance_i]),
// or (label "inner") the normalization `sub` of one argument of `before`,
// with eval(before) - eval(after) = eval(context[sub.input - sub.output]).
struct TraceStep {
    std::string label;
    Rational coef;
    TElem before;
    LT after;
    std::vector<Witness> witnesses;
    ExprP context;
    std::shared_ptr<const Trace> sub;
};

struct Trace {
    LT input;
    LT output;
    std::vector<TraceStep> steps;
};

enum class Strategy {
    // Rewrite the largest non-basis term first.
    LargestFirst,
    // Rewrite the smallest non-basis term first.
    SmallestFirst,
};

struct NormalizeOptions {
    Strategy strategy = Strategy::LargestFirst;
    // Discard every term containing a bracket as soon as it appears. Only
    // valid when the input is bracket-free; no trace is kept.
    bool lat_mode = false;
    bool record_trace = true;
    std::size_t fuel = 1000000;
};

struct NormalizeResult {
    LT value;
    std::shared_ptr<const Trace> trace; // null unless recorded
    std::size_t steps = 0;
    bool complete = true; // false when the fuel ran out; value is then partial
};

NormalizeResult normalize(const LT& x, const NormalizeOptions& opt = {});
// Shorthand: normal form only, throwing FuelExhausted on exhaustion.
LT normal_form(const LT& x, Strategy strategy = Strategy::LargestFirst);
LT normal_form(const LBhat& x, Strategy strategy = Strategy::LargestFirst);

struct TraceCheck {
    bool ok = true;
    std::string error;
};
// Replays the trace and verifies every step's witnesses exactly.
TraceCheck check_trace(const Trace& t);
// One JSON object per line, depth-first through inner steps.
std::string trace_jsonl(const Trace& t, const Alphabet& alphabet);
// FNV-1a of the text.
std::uint64_t text_hash(std::string_view text);

} // namespace plyalg
