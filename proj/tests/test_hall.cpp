#include "check.hpp"

#include "plyalg/checks.hpp"
#include "plyalg/hall.hpp"

#include <functional>

using namespace plyalg;

namespace {

struct LetterCmp {
    int operator()(char a, char b) const { return (a > b) - (a < b); }
};

using M2 = Magma2<char>;
using M3 = Magma3<char>;
using LM3 = LMagma3<char>;

M2 l2(char c) { return M2::leaf(c); }
M2 n2(M2 a, M2 b) { return M2::node({a, b}); }
M3 l3(char c) { return M3::leaf(c); }
M3 n3(M3 a, M3 b, M3 c) { return M3::node({a, b, c}); }

// All binary bracketings with n leaves over the first k letters.
std::vector<M2> bracketings(unsigned n, unsigned k)
{
    std::vector<M2> out;
    if (n == 1) {
        for (unsigned i = 0; i < k; ++i) out.push_back(l2(static_cast<char>('a' + i)));
        return out;
    }
    for (unsigned i = 1; i < n; ++i)
        for (const M2& u : bracketings(i, k))
            for (const M2& v : bracketings(n - i, k)) out.push_back(n2(u, v));
    return out;
}

int mobius(unsigned n)
{
    int m = 1;
    for (unsigned p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            m = -m;
        }
    return n > 1 ? -m : m;
}

// Dimension of the degree-n part of the free Lie algebra on k generators.
long witt(unsigned n, unsigned k)
{
    long s = 0;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) {
            long p = 1;
            for (unsigned i = 0; i < n / d; ++i) p *= k;
            s += mobius(d) * p;
        }
    return s / static_cast<long>(n);
}

} // namespace

static void magma_basics()
{
    M2 t = n2(l2('a'), n2(l2('b'), l2('c')));
    REQUIRE(t.foliage() == std::vector<char>({'a', 'b', 'c'}));
    REQUIRE(n3(l3('a'), l3('b'), l3('c')).foliage() == std::vector<char>({'a', 'b', 'c'}));
    REQUIRE(n2(l2('a'), l2('b')) == n2(l2('a'), l2('b')));
    REQUIRE(n2(l2('a'), l2('b')) != n2(l2('b'), l2('a')));
}

static void hall_elements()
{
    LetterCmp c;
    REQUIRE(is_hall(l2('a'), c));
    REQUIRE(is_hall(n2(l2('b'), l2('a')), c));
    REQUIRE(!is_hall(n2(l2('a'), l2('b')), c));
    REQUIRE(is_hall(n2(n2(l2('b'), l2('a')), l2('b')), c));
    REQUIRE(is_hall(n2(n2(l2('b'), l2('a')), l2('a')), c));
    // [[c,a],b] needs a <= b; [[c,b],a] fails it.
    REQUIRE(is_hall(n2(n2(l2('c'), l2('a')), l2('b')), c));
    REQUIRE(!is_hall(n2(n2(l2('c'), l2('b')), l2('a')), c));
    // Hall elements count the free Lie algebra (Witt's formula).
    for (unsigned k = 2; k <= 3; ++k)
        for (unsigned n = 1; n <= (k == 2 ? 8u : 6u); ++n) {
            long count = 0;
            for (const M2& t : bracketings(n, k)) count += is_hall(t, c);
            REQUIRE_MSG(count == witt(n, k), "k = " << k << ", n = " << n << ": " << count << " vs " << witt(n, k));
        }
}

static void lts_hall_elements()
{
    LetterCmp c;
    REQUIRE(is_lts_hall(l3('a'), c));
    REQUIRE(is_lts_hall(n3(l3('b'), l3('a'), l3('a')), c));
    REQUIRE(is_lts_hall(n3(l3('b'), l3('a'), l3('c')), c));
    REQUIRE(!is_lts_hall(n3(l3('a'), l3('b'), l3('c')), c));
    REQUIRE(!is_lts_hall(n3(n3(l3('c'), l3('b'), l3('a')), l3('b'), l3('c')), c));
    // y = [u,v,t] needs t <= z.
    M3 y = n3(l3('c'), l3('a'), l3('a'));
    REQUIRE(is_lts_hall(n3(y, l3('a'), l3('b')), c));
    REQUIRE(!is_lts_hall(n3(n3(l3('c'), l3('a'), l3('c')), l3('b'), l3('b')), c));
}

static void rewriting()
{
    LtsHallRewriter<char, LetterCmp> rw;
    M3 a = l3('a'), b = l3('b'), cc = l3('c');
    REQUIRE(rw.rewrite(LM3(n3(b, b, a))).empty());
    LM3 want(n3(b, a, cc), Rational(-1));
    REQUIRE(rw.rewrite(LM3(n3(a, b, cc))) == want);
    // [c,b,a] = [c,a,b] - [b,a,c].
    LM3 cyc(n3(cc, a, b));
    cyc.add(n3(b, a, cc), Rational(-1));
    REQUIRE(rw.rewrite(LM3(n3(cc, b, a))) == cyc);
    // Hall combinations are fixed.
    LM3 h(n3(b, a, cc));
    h.add(n3(cc, a, a), Rational(3, 2));
    REQUIRE(rw.rewrite(h) == h);
    // Fuel is a hard bound.
    LtsHallRewriter<char, LetterCmp> starved(LetterCmp{}, 0);
    bool threw = false;
    try {
        starved.rewrite(LM3(n3(a, b, cc)));
    } catch (const FuelExhausted&) {
        threw = true;
    }
    REQUIRE(threw);
}

static void suite()
{
    SuiteReport r = check_lts_hall_suite(5, 0, 1, 3);
    REQUIRE_MSG(r.ok(), report_json(r));
    REQUIRE(r.total > 1000);
}

int main()
{
    magma_basics();
    hall_elements();
    lts_hall_elements();
    rewriting();
    suite();
    return check::finish("hall");
}
