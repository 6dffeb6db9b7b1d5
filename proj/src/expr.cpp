#include "plyalg/expr.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace plyalg {

namespace ex {

namespace {
ExprP make(Expr::Kind k, std::vector<ExprP> kids = {})
{
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->kids = std::move(kids);
    return e;
}
} // namespace

ExprP gen(unsigned g)
{
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Gen;
    e->gen = g;
    return e;
}
ExprP hole() { return make(Expr::Kind::Hole); }
ExprP bk(ExprP x, ExprP y) { return make(Expr::Kind::Bk, {std::move(x), std::move(y)}); }
ExprP tb(ExprP x, ExprP y, ExprP z) { return make(Expr::Kind::Tb, {std::move(x), std::move(y), std::move(z)}); }
ExprP gr(std::vector<ExprP> branches, ExprP root)
{
    branches.push_back(std::move(root));
    return make(Expr::Kind::Gr, std::move(branches));
}
ExprP sg(std::vector<ExprP> branches, ExprP root)
{
    branches.push_back(std::move(root));
    return make(Expr::Kind::Sg, std::move(branches));
}
ExprP s(std::vector<ExprP> xs) { return make(Expr::Kind::S, std::move(xs)); }
ExprP w(std::vector<ExprP> xs) { return make(Expr::Kind::W, std::move(xs)); }
ExprP tri(ExprP x, ExprP y) { return make(Expr::Kind::Tri, {std::move(x), std::move(y)}); }
ExprP lb(ExprP x, ExprP y) { return make(Expr::Kind::Lb, {std::move(x), std::move(y)}); }
ExprP sum(std::vector<std::pair<Rational, ExprP>> terms)
{
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Sum;
    for (auto& [c, k] : terms) {
        e->coefs.push_back(c);
        e->kids.push_back(std::move(k));
    }
    return e;
}
ExprP leaf(Bhat x)
{
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::BhatLeaf;
    e->bhat = x;
    return e;
}
ExprP leaf(TElem x)
{
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::TLeaf;
    e->telem = x;
    return e;
}
ExprP of(const LT& x)
{
    std::vector<std::pair<Rational, ExprP>> terms;
    for (const auto& [t, c] : x.sorted(TLess{})) terms.emplace_back(c, leaf(t));
    return sum(std::move(terms));
}
ExprP of(const LBhat& x)
{
    std::vector<std::pair<Rational, ExprP>> terms;
    for (const auto& [t, c] : x.sorted([](Bhat a, Bhat b) { return cmp_struct(a, b) < 0; }))
        terms.emplace_back(c, leaf(t));
    return sum(std::move(terms));
}

} // namespace ex

bool has_hole(const ExprP& e)
{
    if (e->kind == Expr::Kind::Hole) return true;
    return std::any_of(e->kids.begin(), e->kids.end(), [](const ExprP& k) { return has_hole(k); });
}

ExprP substitute(const ExprP& ctx, const ExprP& filler)
{
    if (ctx->kind == Expr::Kind::Hole) return filler;
    if (!has_hole(ctx)) return ctx;
    auto e = std::make_shared<Expr>(*ctx);
    for (auto& k : e->kids) k = substitute(k, filler);
    return e;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

LBhat algebra(const ExprP& e)
{
    BhatDElem v = eval(e);
    LBhat out;
    for (const auto& [w, c] : v) {
        if (w.size() != 1)
            throw EvalError("expected an algebra element, found a word of length " + std::to_string(w.size()));
        out.add(w[0], c);
    }
    return out;
}

void check_root(const LBhat& r)
{
    for (const auto& [t, c] : r)
        if (t.is_graft()) throw EvalError("graft root must be a generator or a bracket");
}

} // namespace

BhatDElem eval(const ExprP& e)
{
    using K = Expr::Kind;
    switch (e->kind) {
    case K::Gen: return as_delem(LBhat(Bhat::gen(e->gen)));
    case K::Hole: throw EvalError("cannot evaluate an expression with a hole");
    case K::BhatLeaf: return as_delem(LBhat(e->bhat));
    case K::TLeaf: return as_delem(eval_T(e->telem));
    case K::Bk: return as_delem(brk(algebra(e->kids[0]), algebra(e->kids[1])));
    case K::Tb: return as_delem(triple_bracket(algebra(e->kids[0]), algebra(e->kids[1]), algebra(e->kids[2])));
    case K::Gr:
    case K::Sg: {
        std::vector<LBhat> branches;
        for (std::size_t i = 0; i + 1 < e->kids.size(); ++i) branches.push_back(algebra(e->kids[i]));
        LBhat root = algebra(e->kids.back());
        check_root(root);
        if (e->kind == K::Gr) return as_delem(graft(branches, root));
        return as_delem(word_tri(symmetrize_letters(branches), root));
    }
    case K::S: {
        std::vector<LBhat> xs;
        for (const auto& k : e->kids) xs.push_back(algebra(k));
        return symmetrize_letters(xs);
    }
    case K::W: {
        BhatDElem out = unit_word<Bhat>();
        for (const auto& k : e->kids) out = tensor_mul(out, eval(k));
        return out;
    }
    case K::Tri: return triangle(eval(e->kids[0]), eval(e->kids[1]));
    case K::Lb: return lie_word(eval(e->kids[0]), eval(e->kids[1]));
    case K::Sum: {
        BhatDElem out;
        for (std::size_t i = 0; i < e->kids.size(); ++i) out.add(eval(e->kids[i]), e->coefs[i]);
        return out;
    }
    }
    throw EvalError("unknown expression kind");
}

LBhat eval_algebra(const ExprP& e) { return algebra(e); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Func {
    const char* name;
    Expr::Kind kind;
    int arity; // -1: variadic, -2: branches ';' root
    std::size_t min_args;
};

const Func kFuncs[] = {
    {"bk", Expr::Kind::Bk, 2, 2},  {"tb", Expr::Kind::Tb, 3, 3},  {"gr", Expr::Kind::Gr, -2, 1},
    {"sg", Expr::Kind::Sg, -2, 1}, {"s", Expr::Kind::S, -1, 1},   {"w", Expr::Kind::W, -1, 0},
    {"tri", Expr::Kind::Tri, 2, 2}, {"lb", Expr::Kind::Lb, 2, 2},
};

const Func* find_func(std::string_view name)
{
    for (const auto& f : kFuncs)
        if (name == f.name) return &f;
    return nullptr;
}

class Parser {
public:
    Parser(std::string_view text, const GenResolver& resolve) : text_(text), resolve_(resolve) {}

    ExprP parse_all()
    {
        ExprP e = expr();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg, std::size_t at) const
    {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
            if (text_[i] == '\n') { ++line; col = 1; }
            else ++col;
        }
        throw ParseError(msg, line, col);
    }
    [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek(char c)
    {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool accept(char c)
    {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c)
    {
        if (!accept(c)) {
            if (pos_ >= text_.size()) fail(std::string("expected '") + c + "', found end of input");
            fail(std::string("expected '") + c + "', found '" + text_[pos_] + "'");
        }
    }

    ExprP expr()
    {
        std::vector<std::pair<Rational, ExprP>> terms;
        terms.push_back(term());
        for (;;) {
            if (accept('+')) terms.push_back(term());
            else if (accept('-')) {
                auto t = term();
                t.first = -t.first;
                terms.push_back(std::move(t));
            } else break;
        }
        if (terms.size() == 1 && terms[0].first == 1 && terms[0].second) return terms[0].second;
        std::vector<std::pair<Rational, ExprP>> kept;
        for (auto& t : terms)
            if (t.second) kept.push_back(std::move(t));
        return ex::sum(std::move(kept));
    }

    // Returns (coefficient, atom); atom is null for the literal 0.
    std::pair<Rational, ExprP> term()
    {
        bool neg = accept('-');
        skip_ws();
        Rational c = 1;
        ExprP a;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            std::size_t start = pos_;
            c = number();
            if (accept('*')) a = atom();
            else if (c != 0) fail("a nonzero scalar needs an operand ('c * e')", start);
        } else {
            a = atom();
        }
        if (neg) c = -c;
        if (c == 0) a = nullptr;
        return {c, a};
    }

    Rational number()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            std::size_t ds = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (ds == pos_) fail("expected a denominator");
        }
        try {
            return parse_rational(text_.substr(start, pos_ - start));
        } catch (const std::invalid_argument& e) {
            fail(e.what(), start);
        }
    }

    std::string ident()
    {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    ExprP atom()
    {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        if (accept('(')) {
            ExprP e = expr();
            expect(')');
            return e;
        }
        std::size_t start = pos_;
        std::string name = ident();
        if (name.empty()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        if (name == "_") return ex::hole();
        if (peek('(')) {
            const Func* f = find_func(name);
            if (!f) fail("unknown constructor '" + name + "'", start);
            ++pos_;
            return call(*f, start);
        }
        if (find_func(name)) fail("constructor '" + name + "' needs arguments", start);
        int g = resolve_(name);
        if (g < 0) fail("unknown generator '" + name + "'", start);
        return ex::gen(static_cast<unsigned>(g));
    }

    ExprP call(const Func& f, std::size_t start)
    {
        std::vector<ExprP> args;
        ExprP root;
        if (!peek(')')) {
            for (;;) {
                args.push_back(expr());
                if (accept(',')) continue;
                if (f.arity == -2 && accept(';')) {
                    root = expr();
                    break;
                }
                break;
            }
        }
        expect(')');
        const std::string name = f.name;
        if (f.arity == -2) {
            if (!root) fail(name + " needs ';' before its root", start);
            if (args.size() < f.min_args) fail(name + " needs at least one branch", start);
            return f.kind == Expr::Kind::Gr ? ex::gr(std::move(args), root) : ex::sg(std::move(args), root);
        }
        if (f.arity >= 0 && args.size() != static_cast<std::size_t>(f.arity))
            fail(name + " takes " + std::to_string(f.arity) + " arguments, got " + std::to_string(args.size()), start);
        if (args.size() < f.min_args) fail(name + " needs at least " + std::to_string(f.min_args) + " argument", start);
        auto e = std::make_shared<Expr>();
        e->kind = f.kind;
        e->kids = std::move(args);
        return e;
    }

    std::string_view text_;
    const GenResolver& resolve_;
    std::size_t pos_ = 0;
};

} // namespace

ExprP parse(std::string_view text, const GenResolver& resolve)
{
    return Parser(text, resolve).parse_all();
}

ExprP parse(std::string_view text, const Alphabet& alphabet)
{
    GenResolver r = [&](std::string_view n) { return alphabet.find(n); };
    return parse(text, r);
}

std::vector<std::string> identifiers(std::string_view text)
{
    std::set<std::string> seen;
    GenResolver r = [&](std::string_view n) {
        seen.emplace(n);
        return 0;
    };
    parse(text, r);
    return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string join(const std::vector<std::string>& parts)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ", ";
        out += parts[i];
    }
    return out;
}

template <class T, class F>
std::string join_map(const std::vector<T>& xs, F f)
{
    std::vector<std::string> parts;
    for (const auto& x : xs) parts.push_back(f(x));
    return join(parts);
}

} // namespace

std::string print(Bhat x, const Alphabet& a)
{
    switch (x.kind()) {
    case Bhat::Kind::Gen: return a.name(x.gen_index());
    case Bhat::Kind::Brk: return "bk(" + print(x.left(), a) + ", " + print(x.right(), a) + ")";
    case Bhat::Kind::Graft: break;
    }
    std::vector<Bhat> br(x.branches().begin(), x.branches().end());
    return "gr(" + join_map(br, [&](Bhat b) { return print(b, a); }) + "; " + print(x.root(), a) + ")";
}

std::string print(const OSBBWord<Shat>& w, const Alphabet& a)
{
    auto pr = [&](Shat s) { return print(s, a); };
    std::vector<std::string> parts;
    for (const auto& b : w.blocks) {
        if (!b.sym.empty()) parts.push_back("s(" + join_map(b.sym, pr) + ")");
        if (b.brk) parts.push_back("lb(" + pr(b.brk->first) + ", " + pr(b.brk->second) + ")");
    }
    return "w(" + join(parts) + ")";
}

std::string print(Shat x, const Alphabet& a)
{
    switch (x.kind()) {
    case Shat::Kind::Gen: return a.name(x.gen_index());
    case Shat::Kind::Brk: return "bk(" + print(x.left(), a) + ", " + print(x.right(), a) + ")";
    case Shat::Kind::OGraft: break;
    }
    const auto& w = x.word();
    auto pr = [&](Shat s) { return print(s, a); };
    if (w.blocks.size() == 1) {
        const auto& sym = w.blocks[0].sym;
        return (sym.size() == 1 ? "gr(" : "sg(") + join_map(sym, pr) + "; " + pr(x.root()) + ")";
    }
    return "tri(" + print(w, a) + ", " + pr(x.root()) + ")";
}

std::string print(TElem x, const Alphabet& a)
{
    auto pr = [&](TElem t) { return print(t, a); };
    switch (x.kind()) {
    case TElem::Kind::Gen: return a.name(x.gen_index());
    case TElem::Kind::Brk: return "bk(" + pr(x.left()) + ", " + pr(x.right()) + ")";
    case TElem::Kind::SymGraft:
        return (x.sym().size() == 1 ? "gr(" : "sg(") + join_map(x.sym(), pr) + "; " + pr(x.root()) + ")";
    case TElem::Kind::Triple: break;
    }
    std::string tb = "tb(" + pr(x.y()) + ", " + pr(x.z()) + ", " + pr(x.w()) + ")";
    if (x.sym().empty()) return tb;
    return "tri(s(" + join_map(x.sym(), pr) + "), " + tb + ")";
}

std::string print(const ExprP& e, const Alphabet& a)
{
    using K = Expr::Kind;
    auto pr = [&](const ExprP& k) { return print(k, a); };
    switch (e->kind) {
    case K::Gen: return a.name(e->gen);
    case K::Hole: return "_";
    case K::BhatLeaf: return print(e->bhat, a);
    case K::TLeaf: return print(e->telem, a);
    case K::Bk: return "bk(" + join_map(e->kids, pr) + ")";
    case K::Tb: return "tb(" + join_map(e->kids, pr) + ")";
    case K::Tri: return "tri(" + join_map(e->kids, pr) + ")";
    case K::Lb: return "lb(" + join_map(e->kids, pr) + ")";
    case K::S: return "s(" + join_map(e->kids, pr) + ")";
    case K::W: return "w(" + join_map(e->kids, pr) + ")";
    case K::Gr:
    case K::Sg: {
        std::vector<ExprP> br(e->kids.begin(), e->kids.end() - 1);
        return std::string(e->kind == K::Gr ? "gr(" : "sg(") + join_map(br, pr) + "; " + pr(e->kids.back()) + ")";
    }
    case K::Sum: {
        if (e->kids.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < e->kids.size(); ++i) {
            if (i) out += " + ";
            std::string body = pr(e->kids[i]);
            if (e->kids[i]->kind == K::Sum) body = "(" + body + ")";
            out += to_string(e->coefs[i]) + " * " + body;
        }
        return out;
    }
    }
    return "?";
}

std::string print(const LBhat& x, const Alphabet& a)
{
    return print_terms(x.sorted([](Bhat p, Bhat q) { return cmp_struct(p, q) < 0; }),
                       [&](Bhat t) { return print(t, a); });
}

std::string print(const LShat& x, const Alphabet& a)
{
    return print_terms(x.sorted(ShatLess{}), [&](Shat t) { return print(t, a); });
}

std::string print(const LT& x, const Alphabet& a)
{
    return print_terms(x.sorted(TLess{}), [&](TElem t) { return print(t, a); });
}

std::string print(const OSBBComb<Shat>& x, const Alphabet& a)
{
    auto less = [](const OSBBWord<Shat>& p, const OSBBWord<Shat>& q) { return cmp_delta(p, q, ShatCmp{}) < 0; };
    return print_terms(x.sorted(less), [&](const OSBBWord<Shat>& w) { return print(w, a); });
}

} // namespace plyalg
