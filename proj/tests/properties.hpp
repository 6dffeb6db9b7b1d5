#pragma once

// Property checks shared by the module tests and the acceptance runner. Each
// returns a tally of instances checked and the first failure seen.

#include "plyalg/ply.hpp"

#include <random>
#include <set>
#include <string>

namespace props {

using namespace plyalg;

struct Tally {
    std::size_t total = 0;
    std::size_t failed = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what)
    {
        ++total;
        if (ok) return;
        if (!failed) first_failure = what;
        ++failed;
    }
    bool ok() const { return failed == 0 && total > 0; }
};

inline Tally& operator+=(Tally& a, const Tally& b)
{
    if (!a.failed && b.failed) a.first_failure = b.first_failure;
    a.total += b.total;
    a.failed += b.failed;
    return a;
}

// Split `total` into `parts` positive sizes uniformly over compositions drawn
// by random increments.
inline std::vector<unsigned> composition(std::mt19937_64& rng, unsigned parts, unsigned total)
{
    std::vector<unsigned> s(parts, 1);
    for (unsigned i = parts; i < total; ++i) ++s[std::uniform_int_distribution<unsigned>(0, parts - 1)(rng)];
    return s;
}

template <class E>
const E& pick(std::mt19937_64& rng, const std::vector<E>& v)
{
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

// Split a refined-basis element into its word and its root.
struct WordRoot {
    ShatWord word;
    Shat root;
};

inline WordRoot split(Shat x)
{
    if (x.is_ograft()) return {x.word(), x.root()};
    return {ShatWord{}, x};
}

inline unsigned word_brackets(const ShatWord& w)
{
    unsigned b = 0;
    for (Shat l : w.letters()) b += l.bracket_count();
    return b;
}

inline unsigned word_vertices(const ShatWord& w)
{
    unsigned v = 0;
    for (Shat l : w.letters()) v += l.vertex_count();
    return v;
}

// An OSBB word over the refined basis as a word combination of natural-basis
// elements.
inline BhatDElem expand_word(const ShatWord& w)
{
    BhatDElem out;
    for (const auto& [letters, c] : osbb_expand<Shat>(w)) {
        std::vector<LBhat> ls;
        for (Shat l : letters) ls.push_back(from_shat(l));
        out.add(expand_letters<Bhat>(ls), c);
    }
    return out;
}

// Every term nu |> s of x satisfies: s = root, the word length is at most
// `max_len` (and equals it for some term when `exact`), the word carries
// `vertices` vertices, the element `brackets` brackets.
inline std::string shape_violation(const LShat& x, Shat root, std::size_t max_len, bool exact, unsigned vertices,
                                   unsigned brackets)
{
    std::size_t longest = 0;
    for (const auto& [t, c] : x) {
        WordRoot wr = split(t);
        if (wr.root != root) return "root changed";
        longest = std::max(longest, wr.word.length());
        if (word_vertices(wr.word) != vertices) return "vertex count of the word changed";
        if (t.bracket_count() != brackets) return "bracket count changed";
    }
    if (longest > max_len || (exact && longest != max_len))
        return "longest word has length " + std::to_string(longest) + ", expected " + std::to_string(max_len);
    return {};
}

// Bijectivity of the automorphism between the refined and the
// triple-bracket basis, inverse round trip, and unit upper triangularity.
inline Tally phi_properties(unsigned max_n, unsigned k)
{
    Tally t;
    for (unsigned n = 1; n <= max_n; ++n) {
        const auto& S = enumerate_Shat(n, k);
        const auto& T = enumerate_T(n, k);
        std::set<std::uint64_t> images, targets;
        for (TElem x : T) targets.insert(x.id());
        for (Shat x : S) {
            TElem y = phi(x);
            images.insert(y.id());
            t.expect(targets.count(y.id()) == 1, "phi image outside the triple-bracket basis");
            t.expect(phi_inv(y) == x, "phi_inv(phi(x)) != x");
            const LShat& coords = shat_of_T(y);
            bool tri = coords.coeff(x) == 1;
            for (const auto& [u, c] : coords)
                if (u != x && cmp_shat(u, x) >= 0) tri = false;
            t.expect(tri, "phi(x) - x not supported strictly below x");
        }
        t.expect(images.size() == S.size() && S.size() == T.size(), "phi is not a bijection in degree " +
                                                                       std::to_string(n));
        for (TElem y : T) t.expect(phi(phi_inv(y)) == y, "phi(phi_inv(y)) != y");
    }
    return t;
}

// Random refined-basis elements with the given total vertex count budget.
inline std::vector<Shat> random_shats(std::mt19937_64& rng, unsigned parts, unsigned max_total, unsigned k)
{
    unsigned total = std::uniform_int_distribution<unsigned>(parts, max_total)(rng);
    std::vector<Shat> out;
    for (unsigned s : composition(rng, parts, total)) out.push_back(pick(rng, enumerate_Shat(s, k)));
    return out;
}

// x |> z for z = w |> r keeps the root, grows the longest word by one, keeps
// vertices and brackets.
inline Tally lemma_S(unsigned samples, std::uint64_t seed, unsigned max_total, unsigned k)
{
    Tally t;
    std::mt19937_64 rng(seed);
    for (unsigned i = 0; i < samples; ++i) {
        auto v = random_shats(rng, 2, max_total, k);
        Shat x = v[0], z = v[1];
        WordRoot zr = split(z);
        LShat res = to_shat(tri(from_shat(x), from_shat(z)));
        std::string bad = res.empty() ? "product vanished"
                                      : shape_violation(res, zr.root, zr.word.length() + 1, true,
                                                        x.vertex_count() + word_vertices(zr.word),
                                                        x.bracket_count() + z.bracket_count());
        t.expect(bad.empty(), bad);
    }
    return t;
}

// [x,y,z] and eta |> z with z = w |> r.
inline Tally corollary_S(unsigned samples, std::uint64_t seed, unsigned max_total, unsigned k)
{
    Tally t;
    std::mt19937_64 rng(seed);
    for (unsigned i = 0; i < samples; ++i) {
        auto v = random_shats(rng, 3, max_total, k);
        Shat x = v[0], y = v[1], z = v[2];
        WordRoot zr = split(z);
        LShat tb = to_shat(triple_bracket(from_shat(x), from_shat(y), from_shat(z)));
        std::string bad = x == y ? (tb.empty() ? "" : "[x,x,z] != 0")
                                 : shape_violation(tb, zr.root, zr.word.length() + 2, true,
                                                   x.vertex_count() + y.vertex_count() + word_vertices(zr.word),
                                                   x.bracket_count() + y.bracket_count() + z.bracket_count());
        t.expect(bad.empty(), "triple bracket: " + bad);

        // eta: an OSBB word on one to three random letters.
        unsigned len = std::uniform_int_distribution<unsigned>(1, 3)(rng);
        if (len + 1 > max_total) len = max_total - 1;
        auto parts = random_shats(rng, len + 1, max_total, k);
        Shat z2 = parts.back();
        parts.pop_back();
        auto words = enumerate_osbb(parts, ShatCmp{});
        const ShatWord& eta = pick(rng, words);
        WordRoot r2 = split(z2);
        LShat act = to_shat(word_tri(expand_word(eta), from_shat(z2)));
        bad = act.empty() ? "action vanished"
                          : shape_violation(act, r2.root, r2.word.length() + eta.length(), true,
                                            word_vertices(eta) + word_vertices(r2.word),
                                            word_brackets(eta) + z2.bracket_count());
        t.expect(bad.empty(), "word action: " + bad);
    }
    return t;
}

// s(x1..xn) |> [y,z,w |> r] = (s(x1..xn) [y,z] w) |> r + shorter words.
inline Tally lemma_TB_largest_term(unsigned samples, std::uint64_t seed, unsigned max_total, unsigned k)
{
    Tally t;
    std::mt19937_64 rng(seed);
    for (unsigned i = 0; i < samples; ++i) {
        unsigned n = std::uniform_int_distribution<unsigned>(0, std::min(2u, max_total - 3))(rng);
        auto v = random_shats(rng, n + 3, max_total, k);
        std::vector<LBhat> xs;
        for (unsigned j = 0; j < n; ++j) xs.push_back(from_shat(v[j]));
        LBhat y = from_shat(v[n]), z = from_shat(v[n + 1]), w = from_shat(v[n + 2]);
        WordRoot wr = split(v[n + 2]);
        BhatDElem sx = symmetrize_letters<Bhat>(xs);
        LBhat lhs = word_tri(sx, triple_bracket(y, z, w));
        BhatDElem lead_word = tensor_mul(tensor_mul(sx, lie_word(as_delem(y), as_delem(z))), expand_word(wr.word));
        LBhat lead = word_tri(lead_word, from_shat(wr.root));
        LShat rest = to_shat(lhs - lead);
        std::size_t bound = n + 2 + wr.word.length();
        bool ok = true;
        for (const auto& [u, c] : rest) {
            WordRoot ur = split(u);
            if (ur.root != wr.root || ur.word.length() >= bound) ok = false;
        }
        t.expect(ok, "remainder has a word of length >= " + std::to_string(bound));
    }
    return t;
}

// Random non-normalized inputs: small combinations of triple-bracket basis
// elements with at most max_n vertices.
inline std::vector<LT> random_inputs(unsigned count, std::uint64_t seed, unsigned max_n, unsigned k)
{
    std::mt19937_64 rng(seed);
    std::vector<LT> out;
    while (out.size() < count) {
        LT x;
        unsigned terms = std::uniform_int_distribution<unsigned>(1, 3)(rng);
        for (unsigned j = 0; j < terms; ++j) {
            unsigned n = std::uniform_int_distribution<unsigned>(1, max_n)(rng);
            x.add(pick(rng, enumerate_T(n, k)), Rational(std::uniform_int_distribution<int>(-3, 3)(rng), 1 + rng() % 2));
        }
        if (!x.empty()) out.push_back(std::move(x));
    }
    return out;
}

// Two rewriting strategies reach the same normal form.
inline Tally strategies_agree(unsigned count, std::uint64_t seed, unsigned max_n, unsigned k)
{
    Tally t;
    for (const LT& x : random_inputs(count, seed, max_n, k)) {
        NormalizeOptions a, b;
        b.strategy = Strategy::SmallestFirst;
        NormalizeResult ra = normalize(x, a), rb = normalize(x, b);
        t.expect(ra.complete && rb.complete && ra.value == rb.value, "strategies disagree");
    }
    return t;
}

// Dropping brackets commutes with normalization.
inline Tally lat_commutes(unsigned count, std::uint64_t seed, unsigned max_n, unsigned k)
{
    Tally t;
    for (const LT& x : random_inputs(count, seed, max_n, k)) {
        NormalizeOptions lat;
        lat.lat_mode = true;
        lat.record_trace = false;
        LT left = lat_project(normal_form(x));
        NormalizeResult right = normalize(lat_project(x), lat);
        t.expect(right.complete && left == right.value, "lat_project o normalize != normalize o drop-brackets");
    }
    return t;
}

} // namespace props
