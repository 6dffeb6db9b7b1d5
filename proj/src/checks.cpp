#include "plyalg/checks.hpp"

#include "plyalg/hall.hpp"
#include "plyalg/ly.hpp"
#include "sampling.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

namespace plyalg {

namespace {

using nlohmann::json;
using detail::for_each_tuple;

std::string gen_name(unsigned g) { return Alphabet::standard(g + 1).name(g); }

json printed(const std::vector<TElem>& xs, const Alphabet& a)
{
    json out = json::array();
    for (TElem t : xs) out.push_back(print(t, a));
    return out;
}

// ---------------------------------------------------------------------------
// Ternary bracketings over letters 0, 1, ...

struct LetterCmp {
    int operator()(unsigned a, unsigned b) const { return (a > b) - (a < b); }
};

using M3 = Magma3<unsigned>;
using LM3 = LMagma3<unsigned>;

std::string print_magma(const M3& m)
{
    if (m.is_leaf()) return gen_name(m.letter());
    return "[" + print_magma(m.kid(0)) + "," + print_magma(m.kid(1)) + "," + print_magma(m.kid(2)) + "]";
}

std::string print_lm(const LM3& x)
{
    std::vector<std::pair<M3, Rational>> terms(x.begin(), x.end());
    std::sort(terms.begin(), terms.end(),
              [](const auto& p, const auto& q) { return cmp_magma(p.first, q.first, LetterCmp{}) < 0; });
    return print_terms(terms, print_magma);
}

struct MagmaPool {
    unsigned letters;
    std::map<unsigned, std::vector<M3>> by_size;

    const std::vector<M3>& operator()(unsigned n)
    {
        auto it = by_size.find(n);
        if (it != by_size.end()) return it->second;
        std::vector<M3> out;
        if (n == 1) {
            for (unsigned c = 0; c < letters; ++c) out.push_back(M3::leaf(c));
        } else if (n % 2 == 1) {
            for (unsigned i = 1; i < n; i += 2)
                for (unsigned j = 1; i + j < n; j += 2) {
                    unsigned k = n - i - j;
                    for (const M3& x : (*this)(i))
                        for (const M3& y : (*this)(j))
                            for (const M3& z : (*this)(k)) out.push_back(M3::node({x, y, z}));
                }
        }
        return by_size.emplace(n, std::move(out)).first->second;
    }
};

M3 node(const M3& x, const M3& y, const M3& z) { return M3::node({x, y, z}); }

// ---------------------------------------------------------------------------

std::vector<unsigned> sorted_letters(std::vector<unsigned> w)
{
    std::sort(w.begin(), w.end(), std::greater<>());
    return w;
}

std::string word_text(const std::vector<unsigned>& w)
{
    std::string s;
    for (unsigned c : w) s += gen_name(c);
    return s;
}

} // namespace

SuiteReport check_ply_suite(unsigned max_vertices, unsigned samples, std::uint64_t seed, unsigned k)
{
    SuiteReport rep{"ply-axioms", 0, {}};
    const Alphabet alpha = Alphabet::standard(k);
    std::function<const std::vector<TElem>&(unsigned)> pool = [&](unsigned n) -> const std::vector<TElem>& {
        return enumerate_B(n, k);
    };
    int idx = 0;
    for (Rule r : {Rule::PLY1, Rule::PLY2, Rule::PLY3, Rule::PLY4, Rule::PLY5, Rule::PLY6}) {
        ++idx;
        const unsigned m = static_cast<unsigned>(rule_vars(r).size());
        for_each_tuple<TElem>(m, max_vertices, samples, seed + idx, pool, [&](const std::vector<TElem>& args) {
            ++rep.total;
            std::vector<ExprP> ea;
            for (TElem t : args) ea.push_back(ex::leaf(t));
            NormalizeResult res = normalize(to_T(eval_algebra(relation(r, ea))));
            TraceCheck ck = res.trace ? check_trace(*res.trace) : TraceCheck{false, "no trace"};
            if (res.complete && res.value.empty() && ck.ok) return;
            json f;
            f["rule"] = rule_name(r);
            f["args"] = printed(args, alpha);
            f["complete"] = res.complete;
            f["residual"] = print(res.value, alpha);
            f["trace_ok"] = ck.ok;
            if (!ck.ok) f["trace_error"] = ck.error;
            rep.failures.push_back(f.dump());
        });
    }
    return rep;
}

SuiteReport check_ly_suite(unsigned max_vertices, unsigned samples, std::uint64_t seed, unsigned k)
{
    SuiteReport rep{"ly-axioms", 0, {}};
    const Alphabet alpha = Alphabet::standard(k);
    auto take = [&](const std::vector<LYReport>& rs) {
        for (const LYReport& r : rs) {
            ++rep.total;
            if (r.pass) continue;
            json f;
            f["axiom"] = r.axiom;
            f["args"] = printed(r.bindings, alpha);
            f["residual"] = print(r.residual, alpha);
            rep.failures.push_back(f.dump());
        }
    };
    take(check_ly_axioms(max_vertices, samples, seed, k));
    take(check_lat_degeneration(max_vertices, samples, seed, k));
    return rep;
}

SuiteReport check_lts_hall_suite(unsigned max_leaves, unsigned samples, std::uint64_t seed, unsigned letters)
{
    SuiteReport rep{"lts-hall", 0, {}};
    MagmaPool mp{letters, {}};
    std::function<const std::vector<M3>&(unsigned)> pool = [&](unsigned n) -> const std::vector<M3>& {
        return mp(n);
    };
    auto fail = [&](const std::string& what, const LM3& input, const LM3& output) {
        json f;
        f["check"] = what;
        f["input"] = print_lm(input);
        f["output"] = print_lm(output);
        rep.failures.push_back(f.dump());
    };

    // Output is Hall-only and rewriting is idempotent.
    for_each_tuple<M3>(1, max_leaves, samples, seed, pool, [&](const std::vector<M3>& t) {
        ++rep.total;
        LtsHallRewriter<unsigned, LetterCmp> rw;
        LM3 in(t[0]);
        LM3 out = rw.rewrite(in);
        for (const auto& [h, c] : out)
            if (!is_lts_hall(h, LetterCmp{})) return fail("hall-only", in, out);
        LM3 again = rw.rewrite(out);
        if (again != out) fail("idempotent", out, again);
    });
    // Skew-symmetry and the cyclic identity.
    for_each_tuple<M3>(3, max_leaves, samples, seed + 1, pool, [&](const std::vector<M3>& v) {
        rep.total += 2;
        LtsHallRewriter<unsigned, LetterCmp> rw;
        LM3 skew(node(v[0], v[1], v[2]));
        skew.add(node(v[1], v[0], v[2]), 1);
        if (LM3 out = rw.rewrite(skew); !out.empty()) fail("skew", skew, out);
        LM3 cyc(node(v[0], v[1], v[2]));
        cyc.add(node(v[1], v[2], v[0]), 1);
        cyc.add(node(v[2], v[0], v[1]), 1);
        if (LM3 out = rw.rewrite(cyc); !out.empty()) fail("cyclic", cyc, out);
    });
    // The derivation identity.
    for_each_tuple<M3>(5, max_leaves, samples, seed + 2, pool, [&](const std::vector<M3>& v) {
        ++rep.total;
        LtsHallRewriter<unsigned, LetterCmp> rw;
        const M3 &u = v[0], &w = v[1], &x = v[2], &y = v[3], &z = v[4];
        LM3 d(node(u, w, node(x, y, z)));
        d.add(node(node(u, w, x), y, z), -1);
        d.add(node(x, node(u, w, y), z), -1);
        d.add(node(x, y, node(u, w, z)), -1);
        if (LM3 out = rw.rewrite(d); !out.empty()) fail("derivation", d, out);
    });
    return rep;
}

SuiteReport check_osbb_suite(unsigned max_length, unsigned letters)
{
    SuiteReport rep{"osbb-roundtrip", 0, {}};
    using W = std::vector<unsigned>;
    OsbbDecomposer<unsigned, LetterCmp> dec;
    auto fail = [&](const std::string& what, const std::string& subject) {
        json f;
        f["check"] = what;
        f["subject"] = subject;
        rep.failures.push_back(f.dump());
    };
    for (unsigned len = 0; len <= max_length; ++len) {
        W w(len, 0);
        for (;;) {
            ++rep.total;
            const W key = sorted_letters(w);
            const OSBBComb<unsigned>& comb = dec.decompose(w);
            bool ok = osbb_expand<unsigned>(comb) == DElem<unsigned>(w);
            for (const auto& [ow, c] : comb)
                if (!is_ordered(ow, LetterCmp{}) || sorted_letters(ow.letters()) != key) ok = false;
            if (!ok) fail("expand(decompose(w)) = w", word_text(w));
            // Each multiset once: the OSBB words of the sorted word's multiset.
            if (w == key) {
                auto words = enumerate_osbb(key, LetterCmp{});
                auto shape = dec.component_shape(w);
                ++rep.total;
                if (shape.first != shape.second) fail("component is square", word_text(w));
                for (const auto& ow : words) {
                    ++rep.total;
                    DElem<unsigned> e = osbb_expand<unsigned>(ow);
                    bool good = dec.decompose(e) == OSBBComb<unsigned>(ow);
                    for (const auto& [u, c] : e)
                        if (sorted_letters(u) != key) good = false;
                    if (!good) fail("decompose(expand(o)) = o", word_text(ow.letters()));
                }
            }
            std::size_t i = 0;
            while (i < len && ++w[i] == letters) w[i++] = 0;
            if (i == len) break;
        }
    }
    return rep;
}

SuiteReport check_census_suite(unsigned max_n, unsigned k)
{
    SuiteReport rep{"census", 0, {}};
    static const std::size_t known_B1[] = {1, 1, 3, 9, 31, 106};
    auto expect = [&](const std::string& basis, unsigned n, std::size_t got, const mpz_class& want) {
        ++rep.total;
        if (mpz_class(static_cast<unsigned long>(got)) == want) return;
        json f;
        f["basis"] = basis;
        f["n"] = n;
        f["got"] = got;
        f["expected"] = want.get_str();
        rep.failures.push_back(f.dump());
    };
    for (unsigned n = 1; n <= max_n; ++n) {
        expect("S", n, enumerate_S(n, k).size(), catalan_count(n, k));
        expect("Bhat", n, enumerate_Bhat(n, k).size(), beta(n, k));
        expect("Shat", n, enumerate_Shat(n, k).size(), beta(n, k));
        expect("T", n, enumerate_T(n, k).size(), beta(n, k));
        if (k == 1 && n <= 6) expect("B", n, enumerate_B(n, k).size(), mpz_class(static_cast<unsigned long>(known_B1[n - 1])));
    }
    return rep;
}

std::string report_json(const SuiteReport& r)
{
    json j;
    j["suite"] = r.suite;
    j["total"] = r.total;
    j["failed"] = r.failures.size();
    json fs = json::array();
    for (const auto& f : r.failures) fs.push_back(json::parse(f));
    j["failures"] = fs;
    return j.dump();
}

} // namespace plyalg
